//! Inverting the coefficient matrix P two ways, and the first-column identity
//! behind the shortcut formula.
//!
//! Usage: cargo run --example triangular_inverse -- [dim]

use fcpoincare::closedform::poincare_shortcut_formula;
use fcpoincare::recur::{poincare_sequence_by_partition, CoeffTable};
use fcpoincare::trimatrix::{c_by_chains, chain_count, check_shortcut, UnitriMatrix};

fn main() {
    let dim: usize = std::env::args()
        .nth(1)
        .map_or(6, |s| s.parse().expect("dim must be at least 3"));
    let table = CoeffTable::build(dim);
    let p = UnitriMatrix::from_coeff_table(&table, dim).unwrap();
    let inv = p.inverse();
    assert!(p.mul(&inv).is_identity());

    for n in 2..=dim {
        let chains = c_by_chains(&p, n, 1).unwrap();
        println!(
            "c_{n}^1 = {}  (chains: {}, substitution agrees: {})",
            chains,
            chain_count(n, 1),
            chains == inv.entry(n, 1)
        );
    }

    let a = poincare_sequence_by_partition(dim - 2);
    for n in 1..=dim - 2 {
        println!("shortcut identity at n={n}: {}", check_shortcut(n, &p, &a).unwrap());
    }
    let n = dim - 3;
    println!(
        "a_{n} from the shortcut: {}",
        poincare_shortcut_formula(n, &table).unwrap()
    );
}

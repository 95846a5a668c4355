//! Compute a_n by every available method and compare.
//!
//! Usage: cargo run --example poincare_methods -- [n]

use fcpoincare::cli::{compute, Method, PERMUTATION_MAX_N};
use fcpoincare::recur::CoeffTable;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(5, |s| s.parse().expect("n must be a non-negative integer"));
    let table = CoeffTable::build(n + 3);
    let mut seen = Vec::new();
    for method in Method::SINGLE {
        if method == Method::Permutation && n > PERMUTATION_MAX_N {
            println!("{:<16} skipped (n > {PERMUTATION_MAX_N})", method.name());
            continue;
        }
        let p = compute(method, n, &table).unwrap();
        println!("{:<16} {p}", method.name());
        seen.push(p);
    }
    let agree = seen.windows(2).all(|w| w[0] == w[1]);
    println!("a_{n}(1) = {}, methods agree: {agree}", seen[0].eval_i64(1));
}

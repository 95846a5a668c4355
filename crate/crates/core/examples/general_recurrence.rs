//! Any recurrence u_n = psi(n) - sum_{i<n} b_n^i u_i has a closed solution as
//! a signed sum over decreasing chains. Checked here on random integer data.
//!
//! Usage: cargo run --example general_recurrence -- [seed]

use fcpoincare::trimatrix::{solve_by_chain_formula, solve_by_recurrence, GeneralInstance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .map_or(1, |s| s.parse().expect("seed must be an integer"));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..5 {
        let inst = GeneralInstance::random_integer(&mut rng, 6, 5);
        let by_rec = solve_by_recurrence(&inst);
        let by_chains = solve_by_chain_formula(&inst);
        let psi: Vec<String> = (1..=inst.len()).map(|n| inst.psi(n).to_string()).collect();
        let u: Vec<String> = by_rec.iter().map(ToString::to_string).collect();
        println!(
            "psi = [{}]  u = [{}]  agree: {}",
            psi.join(", "),
            u.join(", "),
            by_rec == by_chains
        );
    }
}

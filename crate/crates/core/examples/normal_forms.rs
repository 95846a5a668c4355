//! Lists the normal forms of rank n with their lengths and the 321-avoiding
//! permutations they correspond to, then writes the same list as CSV.
//!
//! Usage: cargo run --example normal_forms -- [n]

use fcpoincare::fcenum::{enumerate_normal_forms, write_normal_forms_csv};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(3, |s| s.parse().expect("n must be a non-negative integer"));
    for form in enumerate_normal_forms(n) {
        let perm = form.to_permutation(n);
        println!(
            "{:<24} length {:>2}  word {:?}  permutation {perm} ({} inversions)",
            form.to_string(),
            form.length(),
            form.word(),
            perm.inversions()
        );
    }
    println!();
    write_normal_forms_csv(n, std::io::stdout().lock()).unwrap();
}

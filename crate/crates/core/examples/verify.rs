//! Runs the full cross-check battery, first on the real table and then on a
//! table built with one sign flipped.
//!
//! Usage: cargo run --example verify -- [n]

use fcpoincare::cli::verify_battery;
use fcpoincare::recur::{flipped_step, CoeffTable};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(8, |s| s.parse().expect("n must be a non-negative integer"));
    for (label, table) in [
        ("standard table", CoeffTable::build(n + 3)),
        ("flipped sign", CoeffTable::build_with_step(n + 3, flipped_step)),
    ] {
        println!("{label}:");
        for r in verify_battery(n, &table) {
            println!(
                "  {} {:<22} {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.check,
                r.detail
            );
        }
    }
}

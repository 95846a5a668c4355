//! The coefficient table b_j^k, its upper view B_j^k, and the values of B_j^k
//! at q = 0 and q = 1.
//!
//! Usage: cargo run --example coeff_table -- [max]

use fcpoincare::recur::{upper_value_at_one, CoeffTable, TableView};

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .map_or(5, |s| s.parse().expect("max must be a non-negative integer"));
    let table = CoeffTable::build(max);
    for j in 1..=max {
        for k in 1..=j {
            let big = table.upper(j, k);
            println!(
                "B_{j}^{k} = {big}    at 0: {}  at 1: {} (expected {})",
                big.eval_i64(0),
                big.eval_i64(1),
                upper_value_at_one(j, k)
            );
        }
    }
    println!();
    table.write_csv(TableView::Lower, std::io::stdout().lock()).unwrap();
}

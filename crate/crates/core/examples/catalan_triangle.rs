//! The last-generator triangle a_n^j and its values at q = 1.
//!
//! Usage: cargo run --example catalan_triangle -- [n]

use fcpoincare::numbers::{catalan, catalan_triangle};
use fcpoincare::recur::{check_catalan_recurrence, last_generator_triangle};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(6, |s| s.parse().expect("n must be a non-negative integer"));
    for (m, row) in (1..).zip(last_generator_triangle(n)) {
        let values: Vec<String> = row.iter().map(|p| p.eval_i64(1).to_string()).collect();
        let formula: Vec<String> = (1..=m).map(|j| catalan_triangle(m, j).to_string()).collect();
        println!("n={m:<2} {:<40} formula {}", values.join(" "), formula.join(" "));
        println!("      a_{m}^{m} = {}", row[m - 1]);
    }
    for m in 1..=n {
        println!(
            "C_{m} = {} (recurrence holds: {})",
            catalan(m),
            check_catalan_recurrence(m)
        );
    }
}

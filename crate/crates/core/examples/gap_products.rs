//! Gap products ΣΠ and the closed form of the coefficient table.

use fcpoincare::closedform::{b_closed, pi_product, pi_with_gaps, saturated_monomial, sigma_pi, GapSpec};
use fcpoincare::recur::CoeffTable;

fn main() {
    println!("Π(2,4) = {}", pi_product(2, 4));

    let spec = GapSpec::new(2, 6, vec![2]).unwrap();
    for placement in spec.placements() {
        println!(
            "  gap at {:?}: {}",
            placement.positions(),
            pi_with_gaps(&spec, &placement).unwrap()
        );
    }
    println!("ΣΠ(2,6)[2] = {}", sigma_pi(&spec));

    let saturated = GapSpec::new(3, 9, vec![3, 2, 2]).unwrap();
    println!(
        "ΣΠ(3,9)[3,2,2] = {} (monomial {})",
        sigma_pi(&saturated),
        saturated_monomial(&saturated)
    );

    let table = CoeffTable::build(8);
    for (j, k) in [(4, 2), (6, 3), (8, 4)] {
        let closed = b_closed(j, k).unwrap();
        println!(
            "b_{j}^{k} = {closed}  (matches recurrence: {})",
            closed == *table.b(j, k)
        );
    }
}

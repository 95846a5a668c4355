//! Exact polynomial arithmetic over big integers.

use fcpoincare::Polynomial;

fn main() {
    let a = Polynomial::from_i64s(&[1, 1]);
    let b = Polynomial::one_minus_q_pow(3);
    let prod = &a * &b;
    println!("({a}) * ({b}) = {prod}");
    println!("quotient back: {}", prod.exact_div(&b).unwrap());
    println!("remainder check: {:?}", prod.exact_div(&Polynomial::from_i64s(&[2, 1])));

    // Coefficients outgrow 64 bits quickly; (1 + q)^100 is fine.
    let big = (0..100).map(|_| a.clone()).product::<Polynomial>();
    println!("middle coefficient of (1+q)^100: {}", big.coeff(50));
    println!("value at 1: {}", big.eval_i64(1));

    let json = Polynomial::psi(4).to_json();
    println!("psi(4) = {} as JSON {json}", Polynomial::from_json(&json).unwrap());
}

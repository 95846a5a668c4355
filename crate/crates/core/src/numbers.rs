//! Big-integer binomials and Catalan numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Row `x` of Pascal's triangle, built by repeated addition.
pub fn pascal_row(x: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..x {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}

/// `binom(x, y)`, zero when `y < 0`, `x < 0` or `y > x`.
pub fn binomial(x: i64, y: i64) -> BigInt {
    if x < 0 || y < 0 || y > x {
        return BigInt::zero();
    }
    pascal_row(x as usize).swap_remove(y as usize)
}

/// `C_m = binom(2m, m) / (m + 1)`.
pub fn catalan(m: usize) -> BigInt {
    binomial(2 * m as i64, m as i64) / BigInt::from(m + 1)
}

/// Entry `(n, j)` of the Catalan triangle: `j/(n+1) * binom(2n-j+1, n)`.
pub fn catalan_triangle(n: usize, j: usize) -> BigInt {
    let b = binomial(2 * n as i64 - j as i64 + 1, n as i64);
    b * BigInt::from(j) / BigInt::from(n + 1)
}

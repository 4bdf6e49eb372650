//! Dense univariate polynomials over `Z` with a primitive-PRS gcd.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending degree order, with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// `x^n − 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = alloc::vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] += BigInt::one();
        IntPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut content = self.content();
        if self.leading().is_negative() {
            content = -content;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    /// Pseudo-remainder of `self` by `divisor`: the remainder of
    /// `lc(divisor)^k · self` for the appropriate `k`.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let db = divisor.degree().expect("division by zero polynomial");
        let lb = divisor.leading();
        let mut rem = self.coeffs.clone();
        while rem.len() > db && !rem.is_empty() {
            let shift = rem.len() - 1 - db;
            let la = rem.last().expect("nonempty").clone();
            for c in rem.iter_mut() {
                *c *= lb;
            }
            for (i, b) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &la * b;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        IntPoly::new(rem)
    }

    /// Evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

/// Primitive gcd over `Z[x]` with positive leading coefficient. Its degree
/// equals the degree of the gcd over `Q[x]`.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (a.primitive_part(), b.primitive_part());
    if a.degree() < b.degree() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).primitive_part();
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (x^4 − 1, x^6 − 1) = x^2 − 1
        let g = gcd(&IntPoly::x_pow_minus_one(4), &IntPoly::x_pow_minus_one(6));
        assert_eq!(g, IntPoly::from_i64(&[-1, 0, 1]));
        // (x + 1)^2 and x^2 − 1 share x + 1
        let g = gcd(
            &IntPoly::from_i64(&[1, 2, 1]),
            &IntPoly::from_i64(&[-1, 0, 1]),
        );
        assert_eq!(g, IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn gcd_with_zero_and_constants() {
        let p = IntPoly::from_i64(&[2, 4, 6]);
        assert_eq!(gcd(&p, &IntPoly::zero()), IntPoly::from_i64(&[1, 2, 3]));
        assert_eq!(gcd(&IntPoly::zero(), &IntPoly::zero()), IntPoly::zero());
        assert_eq!(gcd(&p, &IntPoly::from_i64(&[5])).degree(), Some(0));
    }

    #[test]
    fn pseudo_remainder_identity() {
        // 3x^2 + 1 by 2x + 1: lc^2 · a = 12x^2 + 4 ≡ 7 mod (2x + 1)
        let r = IntPoly::from_i64(&[1, 0, 3]).pseudo_rem(&IntPoly::from_i64(&[1, 2]));
        assert_eq!(r, IntPoly::from_i64(&[7]));
    }

    #[test]
    fn eval_horner() {
        let p = IntPoly::from_i64(&[1, -3, 2]);
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(3));
        assert_eq!(p.eval(&BigInt::from(1)), BigInt::zero());
    }
}

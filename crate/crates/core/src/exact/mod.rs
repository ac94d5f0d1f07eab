//! Exact arithmetic: binomials, a small ring abstraction, sparse multivariate
//! polynomials, labeled matrices with fraction-free determinants, and
//! arithmetic modulo a fixed prime for rank tests.

pub mod matrix;
pub mod modp;
pub mod poly;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use matrix::{det_fraction_free, det_minor_expansion, det_rational, Label, LabeledMatrix};
pub use poly::{Monomial, MultiPoly};

/// Binomial coefficient `C(a, b)`, zero unless `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> BigUint {
    if b < 0 || a < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc *= BigUint::from((a - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

/// Multinomial coefficient `n! / (k_1! ... k_r!)` with `n = sum k_i`.
pub fn multinomial(parts: &[u32]) -> BigUint {
    let mut total = 0i64;
    let mut acc = BigUint::one();
    for &k in parts {
        total += i64::from(k);
        acc *= binom(total, i64::from(k));
    }
    acc
}

/// Commutative ring with exact division where it exists.
///
/// Every coefficient domain used by the polynomial and matrix code implements
/// this: exact rationals, big integers, and polynomials over either.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `Some(q)` with `q * rhs == self`, or `None` if `rhs` does not divide `self`.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, rhs);
        Zero::is_zero(&r).then_some(q)
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q` into a rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if Zero::is_zero(&d) {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

pub(crate) fn rational_is_negative(q: &BigRational) -> bool {
    q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binom_examples() {
        assert_eq!(binom(10, 3), BigUint::from(120u32));
        assert_eq!(binom(3, 5), BigUint::zero());
        assert_eq!(binom(-1, 2), BigUint::zero());
        assert_eq!(binom(7, 0), BigUint::one());
        assert_eq!(binom(7, -1), BigUint::zero());
    }

    #[test]
    fn binom_is_exact_beyond_u64() {
        // C(100, 50) = 100891344545564193334812497256
        assert_eq!(
            binom(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn multinomial_small() {
        assert_eq!(multinomial(&[1, 1]), BigUint::from(2u32));
        assert_eq!(multinomial(&[3, 2]), BigUint::from(10u32));
        assert_eq!(multinomial(&[2, 1, 1]), BigUint::from(12u32));
    }

    #[test]
    fn bigint_exact_division() {
        let a = BigInt::from(84);
        assert_eq!(a.div_exact(&BigInt::from(7)), Some(BigInt::from(12)));
        assert_eq!(a.div_exact(&BigInt::from(5)), None);
        assert_eq!(a.div_exact(&BigInt::from(0)), None);
    }

    #[test]
    fn rational_round_trip() {
        let q = parse_rational("-6/4").unwrap();
        assert_eq!(format_rational(&q), "-3/2");
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(format_rational(&parse_rational("12").unwrap()), "12");
    }

    proptest! {
        #[test]
        fn binom_subset_of_subset(
            (a, b, c) in (0i64..=30)
                .prop_flat_map(|a| (Just(a), 0..=a))
                .prop_flat_map(|(a, b)| (Just(a), Just(b), 0..=a - b))
        ) {
            prop_assert_eq!(
                binom(a, b) * binom(a - b, c),
                binom(a, b + c) * binom(b + c, b)
            );
        }
    }
}

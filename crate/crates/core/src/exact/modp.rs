//! Arithmetic modulo a fixed 62-bit prime, used for randomized rank tests.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// `2^62 - 57`, the largest prime below `2^62`.
pub const PRIME: u64 = 4_611_686_018_427_387_847;

pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= PRIME {
        s - PRIME
    } else {
        s
    }
}

pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + PRIME - b
    }
}

const LOW62: u128 = (1 << 62) - 1;

/// Product via the pseudo-Mersenne form: `2^62 = 57 (mod p)`, so a 124-bit
/// product folds down in two shift-and-add rounds without a 128-bit division.
pub fn mul(a: u64, b: u64) -> u64 {
    let x = u128::from(a) * u128::from(b);
    let x = (x >> 62) * 57 + (x & LOW62);
    let x = (x >> 62) * 57 + (x & LOW62);
    let mut r = x as u64;
    while r >= PRIME {
        r -= PRIME;
    }
    r
}

pub fn pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse; `None` for zero.
pub fn inv(a: u64) -> Option<u64> {
    (a != 0).then(|| pow(a, PRIME - 2))
}

pub fn from_bigint(v: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    let r = ((v % &p) + &p) % &p;
    r.to_u64().expect("residue fits in u64")
}

/// Image of a rational, `None` if the denominator vanishes modulo the prime.
pub fn from_rational(q: &BigRational) -> Option<u64> {
    let num = from_bigint(q.numer());
    let den = from_bigint(q.denom());
    inv(den).map(|d| mul(num, d))
}

pub fn from_i64(v: i64) -> u64 {
    from_bigint(&BigInt::from(v))
}

/// Symmetric lift to `(-p/2, p/2]`, mostly for diagnostics.
pub fn lift(a: u64) -> BigInt {
    if a > PRIME / 2 {
        BigInt::from_biguint(Sign::Minus, (PRIME - a).into())
    } else {
        BigInt::from(a)
    }
}

/// Rank of a matrix over the prime field by Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let scale = inv(rows[rank][col]).expect("nonzero pivot");
        for v in rows[rank][col..].iter_mut() {
            *v = mul(*v, scale);
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for (v, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if p != 0 {
                    *v = sub(*v, mul(factor, p));
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trips() {
        for a in [1u64, 2, 3, 12345, PRIME - 1] {
            assert_eq!(mul(a, inv(a).unwrap()), 1);
        }
        assert_eq!(inv(0), None);
    }

    proptest::proptest! {
        #[test]
        fn folded_product_matches_division(a in 0..PRIME, b in 0..PRIME) {
            let slow = (u128::from(a) * u128::from(b) % u128::from(PRIME)) as u64;
            proptest::prop_assert_eq!(mul(a, b), slow);
        }
    }

    #[test]
    fn rational_images() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(mul(from_rational(&half).unwrap(), 2), 1);
        assert_eq!(from_i64(-1), PRIME - 1);
        assert_eq!(lift(PRIME - 3), BigInt::from(-3));
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(rank(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(vec![vec![0, 1], vec![1, 0]]), 2);
        assert_eq!(rank(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
        assert_eq!(rank(vec![]), 0);
        assert_eq!(rank(vec![vec![0, 0, 0]]), 0);
    }
}

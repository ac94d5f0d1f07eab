//! Line-bundle cohomology on products of projective spaces and the terms of
//! the Weyman complex
//!
//! ```text
//! K_nu(m) = sum_p H^{p - nu}(X, m - p d) ^ C(n + 1, p),   X = P^{l_1} x ... x P^{l_r}.
//! ```
//!
//! On each factor `P^l` the bundle `O(e)` has cohomology in at most one
//! degree: `H^0` of dimension `C(e + l, l)` when `e >= 0`, `H^l` of dimension
//! `C(-e - 1, l)` when `e <= -l - 1`, and nothing when `-l <= e <= -1`. By
//! Kunneth the twist `m - p d` therefore contributes at most one summand.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::degree_vectors::defect_profile;
use crate::exact::binom;
use crate::system::SystemData;

/// `dim H^0(P^l, O(e))`.
pub fn dim_h0_line(l: u32, e: i64) -> BigUint {
    if e < 0 {
        return BigUint::zero();
    }
    binom(e + i64::from(l), i64::from(l))
}

/// `dim H^l(P^l, O(e))`.
pub fn dim_htop_line(l: u32, e: i64) -> BigUint {
    if e > -i64::from(l) - 1 {
        return BigUint::zero();
    }
    binom(-e - 1, i64::from(l))
}

/// One nonvanishing piece `H^q(X, m - p d)^{C(n+1, p)}` of a complex term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologySummand {
    pub p: u32,
    pub q: u32,
    /// `j_k` is `0` or `l_k`: the cohomological degree on the `k`-th factor.
    pub j_pattern: Vec<u32>,
    /// Dimension of `H^q(X, m - p d)`.
    pub dim: BigUint,
    /// `C(n + 1, p)`.
    pub multiplicity: BigUint,
}

impl CohomologySummand {
    /// `multiplicity * dim`.
    pub fn total(&self) -> BigUint {
        &self.multiplicity * &self.dim
    }
}

/// The unique nonzero cohomology of `O(m - p d)` on `X`, if any.
///
/// Factor `k` contributes `H^0` when `m_k - p d_k >= 0` and `H^{l_k}` when
/// `m_k - p d_k < -l_k`; if some factor falls in between, every cohomology
/// group of the twist vanishes.
///
/// # Panics
///
/// If `m` does not have one entry per variable group.
pub fn nonzero_coh_index(sys: &SystemData, m: &[i64], p: u32) -> Option<CohomologySummand> {
    assert_eq!(m.len(), sys.r(), "degree vector length does not match the system");
    let mut q = 0;
    let mut dim = BigUint::from(1u32);
    let mut j_pattern = Vec::with_capacity(sys.r());
    for ((&lk, &dk), &mk) in sys.l().iter().zip(sys.d()).zip(m) {
        let e = mk - i64::from(p) * i64::from(dk);
        if e >= 0 {
            dim *= dim_h0_line(lk, e);
            j_pattern.push(0);
        } else if e < -i64::from(lk) {
            dim *= dim_htop_line(lk, e);
            j_pattern.push(lk);
            q += lk;
        } else {
            return None;
        }
    }
    Some(CohomologySummand {
        p,
        q,
        j_pattern,
        dim,
        multiplicity: binom(i64::from(sys.n()) + 1, i64::from(p)),
    })
}

/// The term `K_nu(m)` with its nonzero summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexTerm {
    pub nu: i64,
    pub summands: Vec<CohomologySummand>,
    pub total_dim: BigUint,
}

impl ComplexTerm {
    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }
}

/// `K_nu(m)`; values of `nu` outside `-n..=n+1` give the zero term.
pub fn complex_term(sys: &SystemData, m: &[i64], nu: i64) -> ComplexTerm {
    let mut summands = Vec::new();
    for p in 0..=sys.n() + 1 {
        if let Some(s) = nonzero_coh_index(sys, m, p) {
            if i64::from(s.q) == i64::from(p) - nu {
                summands.push(s);
            }
        }
    }
    let total_dim = summands.iter().map(CohomologySummand::total).sum();
    ComplexTerm {
        nu,
        summands,
        total_dim,
    }
}

/// All terms `K_nu(m)` for `nu = -n, ..., n + 1`.
pub fn complex(sys: &SystemData, m: &[i64]) -> Vec<ComplexTerm> {
    let n = i64::from(sys.n());
    (-n..=n + 1).map(|nu| complex_term(sys, m, nu)).collect()
}

/// Checks `dim K_nu(m) = dim K_{1-nu}(rho - m)` with `rho` the critical
/// degree vector.
pub fn dual_term_dim_check(sys: &SystemData, m: &[i64], nu: i64) -> bool {
    let rho = defect_profile(sys).rho;
    let dual: Vec<i64> = rho.iter().zip(m).map(|(r, x)| r - x).collect();
    complex_term(sys, m, nu).total_dim == complex_term(sys, &dual, 1 - nu).total_dim
}

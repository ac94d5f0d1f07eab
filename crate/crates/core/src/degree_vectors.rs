//! Degree vectors: defects, gap sets, search boxes, determinantal
//! enumeration, and the explicit Sylvester and Bezout families `m^pi`.
//!
//! Sorted outputs order records by increasing matrix dimension and break
//! ties by decreasing lexicographic order on `m`.

use std::cmp::Ordering;
use std::ops::RangeInclusive;

use num_bigint::BigUint;

use crate::cohomology::{complex_term, dim_h0_line, ComplexTerm};
use crate::error::Error;
use crate::exact::multinomial;
use crate::system::{DegreeVector, Permutation, SystemData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectProfile {
    /// `delta_k = l_k - ceil(l_k / d_k)`.
    pub delta: Vec<u32>,
    /// Critical degree vector, `rho_k = (n + 1) d_k - l_k - 1`.
    pub rho: Vec<i64>,
}

pub fn defect_profile(sys: &SystemData) -> DefectProfile {
    let n1 = i64::from(sys.n()) + 1;
    let delta = sys
        .l()
        .iter()
        .zip(sys.d())
        .map(|(&l, &d)| l - l.div_ceil(d))
        .collect();
    let rho = sys
        .l()
        .iter()
        .zip(sys.d())
        .map(|(&l, &d)| n1 * i64::from(d) - i64::from(l) - 1)
        .collect();
    DefectProfile { delta, rho }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantDegree {
    /// Degree in the coefficients of each single polynomial.
    pub per_poly: BigUint,
    /// `(n + 1) * per_poly`.
    pub total: BigUint,
}

/// Degree of the resultant from the multihomogeneous Bezout bound
/// `multinomial(n; l) * prod d_k^{l_k}`.
pub fn resultant_degree(sys: &SystemData) -> ResultantDegree {
    let mut per_poly = multinomial(sys.l());
    for (&l, &d) in sys.l().iter().zip(sys.d()) {
        per_poly *= BigUint::from(d).pow(l);
    }
    let total = &per_poly * BigUint::from(sys.n() + 1);
    ResultantDegree { per_poly, total }
}

/// `P_k(m) = { p : m_k / d_k < p <= (m_k + l_k) / d_k }` for the 0-based
/// group `k`, as an integer interval (possibly empty).
pub fn pk_set(sys: &SystemData, m: &[i64], k: usize) -> RangeInclusive<i64> {
    let d = i64::from(sys.d()[k]);
    let l = i64::from(sys.l()[k]);
    m[k].div_euclid(d) + 1..=(m[k] + l).div_euclid(d)
}

pub fn pk_sets(sys: &SystemData, m: &[i64]) -> Vec<RangeInclusive<i64>> {
    (0..sys.r()).map(|k| pk_set(sys, m, k)).collect()
}

/// `K_{-1}(m) = K_2(m) = 0`, so the complex reduces to a single map.
pub fn is_determinantal(sys: &SystemData, m: &[i64]) -> bool {
    complex_term(sys, m, -1).is_zero() && complex_term(sys, m, 2).is_zero()
}

/// Whether any determinantal degree vector exists: all defects at most 2.
pub fn has_determinantal_data(sys: &SystemData) -> bool {
    defect_profile(sys).delta.iter().all(|&d| d <= 2)
}

/// Whether some determinantal complex can have a single cohomology group in
/// each of its two terms: all defects vanish, i.e. `min(l_k, d_k) = 1`.
pub fn two_term_possible(sys: &SystemData) -> bool {
    defect_profile(sys).delta.iter().all(|&d| d == 0)
}

/// Closed integer box `lower <= m <= upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBox {
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
}

impl SearchBox {
    pub fn contains(&self, m: &[i64]) -> bool {
        m.iter()
            .zip(self.lower.iter().zip(&self.upper))
            .all(|(x, (lo, hi))| lo <= x && x <= hi)
    }

    /// Number of lattice points.
    pub fn len(&self) -> usize {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| usize::try_from(hi - lo + 1).unwrap_or(0))
            .product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Lattice points in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Vec<i64>> + '_ {
        let mut next = (!self.is_empty()).then(|| self.lower.clone());
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut succ = current.clone();
            for k in (0..succ.len()).rev() {
                if succ[k] < self.upper[k] {
                    succ[k] += 1;
                    next = Some(succ);
                    break;
                }
                succ[k] = self.lower[k];
            }
            Some(current)
        })
    }

    /// Grows every side by `margin`.
    pub fn widened(&self, margin: i64) -> SearchBox {
        SearchBox {
            lower: self.lower.iter().map(|v| v - margin).collect(),
            upper: self.upper.iter().map(|v| v + margin).collect(),
        }
    }
}

/// Box swept by [`enumerate_determinantal`]:
/// `-(d_k + l_k) <= m_k <= (n + 2) d_k - l_k - 1`.
///
/// It contains [`determinantal_bounds`]; for `(2,1,1; 2,2,2)` it is
/// `[-4,-3,-3] ..= [9,10,10]`.
pub fn det_search_box(sys: &SystemData) -> SearchBox {
    let n = i64::from(sys.n());
    let (lower, upper) = sys
        .l()
        .iter()
        .zip(sys.d())
        .map(|(&l, &d)| {
            let (l, d) = (i64::from(l), i64::from(d));
            (-(d + l), (n + 2) * d - l - 1)
        })
        .unzip();
    SearchBox { lower, upper }
}

/// Tight a priori bounds on determinantal vectors:
/// `max(-d_k, -l_k) <= m_k <= (n + 1) d_k - 1 + min(d_k - l_k, 0)`.
pub fn determinantal_bounds(sys: &SystemData) -> SearchBox {
    let n = i64::from(sys.n());
    let (lower, upper) = sys
        .l()
        .iter()
        .zip(sys.d())
        .map(|(&l, &d)| {
            let (l, d) = (i64::from(l), i64::from(d));
            ((-d).max(-l), (n + 1) * d - 1 + (d - l).min(0))
        })
        .unzip();
    SearchBox { lower, upper }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantalReport {
    pub m: DegreeVector,
    /// `dim K_0(m) = dim K_1(m)`.
    pub matrix_dim: BigUint,
    pub k1: ComplexTerm,
    pub k0: ComplexTerm,
    pub pk_sets: Vec<RangeInclusive<i64>>,
}

fn desc_lex(a: &[i64], b: &[i64]) -> Ordering {
    b.cmp(a)
}

/// Every determinantal vector of the system, smallest matrices first.
///
/// Returns an empty list when some defect exceeds 2.
pub fn enumerate_determinantal(sys: &SystemData) -> Vec<DeterminantalReport> {
    if !has_determinantal_data(sys) {
        return Vec::new();
    }
    let mut out: Vec<DeterminantalReport> = det_search_box(sys)
        .points()
        .filter(|m| is_determinantal(sys, m))
        .map(|m| {
            let k0 = complex_term(sys, &m, 0);
            let k1 = complex_term(sys, &m, 1);
            DeterminantalReport {
                matrix_dim: k0.total_dim.clone(),
                pk_sets: pk_sets(sys, &m),
                m: m.into(),
                k0,
                k1,
            }
        })
        .collect();
    out.sort_by(|a, b| {
        a.matrix_dim
            .cmp(&b.matrix_dim)
            .then_with(|| desc_lex(&a.m, &b.m))
    });
    out
}

/// Vectors agreeing with `m` except at the 0-based group `k`:
/// `m'_k = m_k + d_k - [m_k] - 1` and `m''_k = m_k - [m_k + l_k]`, with
/// `[x]` the remainder of `x` modulo `d_k`.
pub fn perturb_vectors(sys: &SystemData, m: &[i64], k: usize) -> (DegreeVector, DegreeVector) {
    let d = i64::from(sys.d()[k]);
    let l = i64::from(sys.l()[k]);
    let mut up = m.to_vec();
    let mut down = m.to_vec();
    up[k] = m[k] + d - m[k].rem_euclid(d) - 1;
    down[k] = m[k] - (m[k] + l).rem_euclid(d);
    (up.into(), down.into())
}

/// `sum of l_j over groups j with pi(j) >= pi(k)`.
fn tail_sum(sys: &SystemData, pi: &Permutation, k: usize) -> i64 {
    (0..sys.r())
        .filter(|&j| pi.image(j) >= pi.image(k))
        .map(|j| i64::from(sys.l()[j]))
        .sum()
}

fn family(sys: &SystemData, pi: &Permutation, shift: impl Fn(usize) -> i64) -> DegreeVector {
    assert_eq!(pi.len(), sys.r(), "permutation size does not match the system");
    (0..sys.r())
        .map(|k| (shift(k) + tail_sum(sys, pi, k)) * i64::from(sys.d()[k]) - i64::from(sys.l()[k]))
        .collect::<Vec<_>>()
        .into()
}

/// Which explicit determinantal family to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefectBound {
    /// `m_k = (1 - delta_k + T_k) d_k - l_k`, valid when all defects are at most 2.
    AtMostTwo,
    /// `m_k = (-delta_k + T_k) d_k - l_k`, valid when all defects are at most 1.
    AtMostOne,
}

/// Explicit determinantal vector for the permutation `pi`, where
/// `T_k = sum_{pi(j) >= pi(k)} l_j`.
pub fn m_pi_determinantal(
    sys: &SystemData,
    pi: &Permutation,
    variant: DefectBound,
) -> Result<DegreeVector, Error> {
    let delta = defect_profile(sys).delta;
    let (bound, base) = match variant {
        DefectBound::AtMostTwo => (2, 1),
        DefectBound::AtMostOne => (1, 0),
    };
    if delta.iter().any(|&dk| dk > bound) {
        return Err(Error::DefectTooLarge { bound, delta });
    }
    Ok(family(sys, pi, |k| base - i64::from(delta[k])))
}

/// `m^pi_k = (1 + T_k) d_k - l_k`, the minimal pure Sylvester vectors.
pub fn sylvester_vector(sys: &SystemData, pi: &Permutation) -> DegreeVector {
    family(sys, pi, |_| 1)
}

/// `m^pi_k = T_k d_k - l_k`, the pure Bezout vectors when all defects vanish.
pub fn bezout_vector(sys: &SystemData, pi: &Permutation) -> DegreeVector {
    family(sys, pi, |_| 0)
}

/// `pi'(i) = r + 1 - pi(i)`.
pub fn dual_permutation(pi: &Permutation) -> Permutation {
    pi.dual()
}

/// A permutation whose Sylvester vector `m` dominates componentwise, if any.
pub fn admits_sylvester(sys: &SystemData, m: &[i64]) -> Result<Option<Permutation>, Error> {
    sys.check_vector(m)?;
    Ok(Permutation::all(sys.r())?
        .into_iter()
        .find(|pi| m.iter().zip(sylvester_vector(sys, pi).iter()).all(|(a, b)| a >= b)))
}

/// Cohomological description of a pure Sylvester complex: `K_{-1}(m) = 0`,
/// `K_0(m) = H^0(X, m)` and `K_1(m) = H^0(X, m - d)^{n+1}`, both nonzero.
pub fn is_pure_sylvester(sys: &SystemData, m: &[i64]) -> bool {
    let k0 = complex_term(sys, m, 0);
    let k1 = complex_term(sys, m, 1);
    complex_term(sys, m, -1).is_zero()
        && !k0.is_zero()
        && !k1.is_zero()
        && k0.summands.iter().all(|s| s.p == 0)
        && k1.summands.iter().all(|s| s.p == 1)
}

/// Cohomological description of a pure Bezout complex: `K_0(m) = H^0(X, m)`,
/// `K_1(m) = H^n(X, m - (n + 1) d)` and `K_{-1}(m) = K_2(m) = 0`.
pub fn is_pure_bezout(sys: &SystemData, m: &[i64]) -> bool {
    let k0 = complex_term(sys, m, 0);
    let k1 = complex_term(sys, m, 1);
    is_determinantal(sys, m)
        && k0.summands.len() == 1
        && k0.summands[0].p == 0
        && k1.summands.len() == 1
        && k1.summands[0].p == sys.n() + 1
}

/// A degree vector with the dimensions of its two nonzero terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaRecord {
    pub m: DegreeVector,
    pub dim_k1: BigUint,
    pub dim_k0: BigUint,
}

fn sylvester_record(sys: &SystemData, m: Vec<i64>) -> FormulaRecord {
    let h0 = |shift: bool| -> BigUint {
        sys.l()
            .iter()
            .zip(sys.d())
            .zip(&m)
            .map(|((&l, &d), &mk)| dim_h0_line(l, if shift { mk - i64::from(d) } else { mk }))
            .product()
    };
    FormulaRecord {
        dim_k1: h0(true) * BigUint::from(sys.n() + 1),
        dim_k0: h0(false),
        m: m.into(),
    }
}

fn term_record(sys: &SystemData, m: Vec<i64>) -> FormulaRecord {
    FormulaRecord {
        dim_k1: complex_term(sys, &m, 1).total_dim,
        dim_k0: complex_term(sys, &m, 0).total_dim,
        m: m.into(),
    }
}

fn sort_records(records: &mut [FormulaRecord]) {
    records.sort_by(|a, b| {
        a.dim_k0
            .cmp(&b.dim_k0)
            .then_with(|| a.dim_k1.cmp(&b.dim_k1))
            .then_with(|| desc_lex(&a.m, &b.m))
    });
}

/// Outcome of an exhaustive search for pure formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaSearch {
    pub range: SearchBox,
    /// Seed candidate probed before the sweep.
    pub first: FormulaRecord,
    /// Candidates examined: the seed plus every point of `range`.
    pub tested: usize,
    pub records: Vec<FormulaRecord>,
}

/// Every pure Sylvester vector between the componentwise minimum and maximum
/// of the vectors `m^pi`.
///
/// Nothing below the minimum qualifies, since each qualifying vector
/// dominates some `m^pi`; vectors beyond the maximum always qualify and are
/// not listed. The seed is `m^pi` for the last permutation in lexicographic
/// order.
pub fn find_sylvester(sys: &SystemData) -> Result<FormulaSearch, Error> {
    let perms = Permutation::all(sys.r())?;
    let family: Vec<DegreeVector> = perms.iter().map(|pi| sylvester_vector(sys, pi)).collect();
    let r = sys.r();
    let range = SearchBox {
        lower: (0..r).map(|k| family.iter().map(|m| m[k]).min().unwrap()).collect(),
        upper: (0..r).map(|k| family.iter().map(|m| m[k]).max().unwrap()).collect(),
    };
    let first = sylvester_record(sys, family.last().unwrap().to_vec());
    let mut records: Vec<FormulaRecord> = range
        .points()
        .filter(|m| family.iter().any(|f| m.iter().zip(f.iter()).all(|(a, b)| a >= b)))
        .map(|m| sylvester_record(sys, m))
        .collect();
    sort_records(&mut records);
    Ok(FormulaSearch {
        tested: range.len() + 1,
        range,
        first,
        records,
    })
}

/// The vectors `m^pi` with their dimensions, smallest `dim K_0` first.
///
/// Permutations are visited with `pi^{-1}` in lexicographic order and the
/// sort is stable; repeated vectors are listed once.
pub fn min_sylvester(sys: &SystemData) -> Result<Vec<(Permutation, FormulaRecord)>, Error> {
    let mut out: Vec<(Permutation, FormulaRecord)> = Vec::new();
    for sigma in Permutation::all(sys.r())? {
        let pi = sigma.inverse();
        let m = sylvester_vector(sys, &pi);
        if out.iter().any(|(_, rec)| rec.m == m) {
            continue;
        }
        out.push((pi, sylvester_record(sys, m.into_inner())));
    }
    out.sort_by(|a, b| a.1.dim_k0.cmp(&b.1.dim_k0));
    Ok(out)
}

/// Every pure Bezout vector with `0 <= m_k <= rho_k`. Outside this box no
/// pure Bezout complex exists. The seed is the lower corner.
pub fn find_bezout(sys: &SystemData) -> FormulaSearch {
    let rho = defect_profile(sys).rho;
    let range = SearchBox {
        lower: vec![0; sys.r()],
        upper: rho,
    };
    let first = term_record(sys, range.lower.clone());
    let mut records: Vec<FormulaRecord> = range
        .points()
        .filter(|m| is_pure_bezout(sys, m))
        .map(|m| term_record(sys, m))
        .collect();
    sort_records(&mut records);
    FormulaSearch {
        tested: range.len() + 1,
        range,
        first,
        records,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::dual_term_dim_check;
    use proptest::prelude::*;

    fn sys(l: &[u32], d: &[u32]) -> SystemData {
        SystemData::new(l.to_vec(), d.to_vec()).unwrap()
    }

    fn perm(one_line: &[usize]) -> Permutation {
        Permutation::from_one_line(one_line).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn defects_and_critical_vectors() {
        let p = defect_profile(&sys(&[1, 2], &[2, 3]));
        assert_eq!((p.delta, p.rho), (vec![0, 1], vec![6, 9]));
        assert_eq!(defect_profile(&sys(&[2, 2], &[3, 2])).rho, vec![12, 7]);
        assert_eq!(defect_profile(&sys(&[2, 1, 1], &[2, 2, 2])).delta, vec![1, 0, 0]);
    }

    #[test]
    fn resultant_degrees() {
        assert_eq!(resultant_degree(&sys(&[2, 1, 1], &[2, 2, 2])).total, big(960));
        assert_eq!(resultant_degree(&sys(&[1, 2], &[2, 3])).total, big(216));
        assert_eq!(resultant_degree(&sys(&[3, 2], &[2, 3])).total, big(4320));
        assert_eq!(resultant_degree(&sys(&[1, 1], &[1, 1])).per_poly, big(2));
    }

    #[test]
    fn gap_sets() {
        let a = sys(&[2, 1, 1], &[2, 2, 2]);
        assert_eq!(pk_sets(&a, &[6, 3, 1]), vec![4..=4, 2..=2, 1..=1]);
        assert!(pk_set(&a, &[6, 3, 0], 2).is_empty());
        assert!(pk_set(&sys(&[1, 2], &[2, 3]), &[6, 3], 1).is_empty());
        // negative coordinates use floor division
        assert_eq!(pk_set(&sys(&[1], &[2]), &[-3], 0), -1..=-1);
    }

    #[test]
    fn determinantal_examples() {
        let a = sys(&[1, 2], &[2, 3]);
        assert!(is_determinantal(&a, &[6, 3]));
        assert!(is_determinantal(&a, &[4, 3]));
        assert!(!is_determinantal(&sys(&[1, 1], &[1, 1]), &[-2, -2]));
        assert!(has_determinantal_data(&sys(&[2, 1, 1], &[2, 2, 2])));
        assert!(has_determinantal_data(&sys(&[4], &[2])));
        assert!(!has_determinantal_data(&sys(&[7], &[2])));
        assert!(enumerate_determinantal(&sys(&[7], &[2])).is_empty());
    }

    #[test]
    fn two_term_data() {
        assert!(two_term_possible(&sys(&[1, 1], &[1, 1])));
        assert!(two_term_possible(&sys(&[1, 2], &[2, 1])));
        assert!(!two_term_possible(&sys(&[2, 2], &[3, 2])));
    }

    #[test]
    fn boxes() {
        let a = sys(&[2, 1, 1], &[2, 2, 2]);
        let b = det_search_box(&a);
        assert_eq!((b.lower.clone(), b.upper.clone()), (vec![-4, -3, -3], vec![9, 10, 10]));
        assert_eq!(b.len(), 14 * 14 * 14);
        let c = determinantal_bounds(&sys(&[1], &[1]));
        assert_eq!((c.lower, c.upper), (vec![-1], vec![1]));
        let c = determinantal_bounds(&sys(&[1, 2], &[2, 1]));
        assert_eq!((c.lower, c.upper), (vec![-1, -1], vec![7, 2]));
    }

    #[test]
    fn box_points_are_lexicographic() {
        let b = SearchBox {
            lower: vec![0, -1],
            upper: vec![1, 0],
        };
        let pts: Vec<Vec<i64>> = b.points().collect();
        assert_eq!(pts, vec![vec![0, -1], vec![0, 0], vec![1, -1], vec![1, 0]]);
        let empty = SearchBox {
            lower: vec![1],
            upper: vec![0],
        };
        assert_eq!(empty.points().count(), 0);
    }

    #[test]
    fn small_enumerations() {
        let a = enumerate_determinantal(&sys(&[1, 2], &[2, 3]));
        assert_eq!(a.first().unwrap().matrix_dim, big(72));
        assert_eq!(a.last().unwrap().matrix_dim, big(180));
        let b = enumerate_determinantal(&sys(&[1, 1], &[1, 1]));
        assert_eq!(b.len(), 14);
        let heads: Vec<&[i64]> = b.iter().take(2).map(|r| r.m.as_slice()).collect();
        assert_eq!(heads, vec![&[1, 0][..], &[0, 1][..]]);
        for rep in &b {
            assert_eq!(rep.k0.total_dim, rep.k1.total_dim);
        }
    }

    #[test]
    fn perturbations() {
        let a = sys(&[1, 2], &[2, 3]);
        let (up, down) = perturb_vectors(&a, &[6, 3], 1);
        assert_eq!((up.as_slice(), down.as_slice()), (&[6, 5][..], &[6, 1][..]));
    }

    #[test]
    fn explicit_determinantal_vectors() {
        let a = sys(&[2, 2], &[3, 2]);
        let id = Permutation::identity(2);
        let sw = perm(&[2, 1]);
        assert_eq!(m_pi_determinantal(&a, &id, DefectBound::AtMostTwo).unwrap().as_slice(), &[10, 2]);
        assert_eq!(m_pi_determinantal(&a, &sw, DefectBound::AtMostTwo).unwrap().as_slice(), &[4, 6]);
        assert_eq!(m_pi_determinantal(&a, &id, DefectBound::AtMostOne).unwrap().as_slice(), &[7, 0]);
        assert_eq!(m_pi_determinantal(&a, &sw, DefectBound::AtMostOne).unwrap().as_slice(), &[1, 4]);
        let b = sys(&[3, 2], &[2, 3]);
        assert_eq!(m_pi_determinantal(&b, &sw, DefectBound::AtMostTwo).unwrap().as_slice(), &[3, 13]);
        let c = sys(&[7], &[2]);
        assert!(matches!(
            m_pi_determinantal(&c, &Permutation::identity(1), DefectBound::AtMostTwo),
            Err(Error::DefectTooLarge { bound: 2, .. })
        ));
        let e = sys(&[4], &[2]);
        assert!(m_pi_determinantal(&e, &Permutation::identity(1), DefectBound::AtMostOne).is_err());
        assert!(m_pi_determinantal(&e, &Permutation::identity(1), DefectBound::AtMostTwo).is_ok());
    }

    #[test]
    fn sylvester_vectors() {
        let a = sys(&[2, 1, 1], &[2, 2, 2]);
        // sigma = pi^{-1}
        assert_eq!(sylvester_vector(&a, &perm(&[1, 2, 3]).inverse()).as_slice(), &[8, 5, 3]);
        assert_eq!(sylvester_vector(&a, &perm(&[2, 3, 1]).inverse()).as_slice(), &[4, 9, 7]);
        for d in 1..5 {
            let s = sys(&[1], &[d]);
            assert_eq!(sylvester_vector(&s, &Permutation::identity(1)).as_slice(), &[2 * i64::from(d) - 1]);
        }
    }

    #[test]
    fn sylvester_admissibility() {
        let a = sys(&[2, 1, 1], &[2, 2, 2]);
        assert_eq!(admits_sylvester(&a, &[8, 5, 3]).unwrap(), Some(Permutation::identity(3)));
        assert!(admits_sylvester(&a, &[8, 6, 3]).unwrap().is_some());
        assert!(admits_sylvester(&a, &[0, 0, 0]).unwrap().is_none());
        assert!(admits_sylvester(&a, &[0, 0]).is_err());
    }

    #[test]
    fn bezout_vectors() {
        let a = sys(&[1, 2], &[2, 1]);
        assert_eq!(bezout_vector(&a, &Permutation::identity(2)).as_slice(), &[5, 0]);
        assert_eq!(bezout_vector(&a, &perm(&[2, 1])).as_slice(), &[1, 1]);
        assert_eq!(bezout_vector(&sys(&[1, 1], &[1, 1]), &Permutation::identity(2)).as_slice(), &[1, 0]);
    }

    #[test]
    fn min_sylvester_single_group() {
        let rows = min_sylvester(&sys(&[1], &[2])).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].1.m.as_slice(), &[3]);
        // two quadrics in one variable: 2 * 2 shifted rows, 4 columns
        assert_eq!((rows[0].1.dim_k1.clone(), rows[0].1.dim_k0.clone()), (big(4), big(4)));
    }

    #[test]
    fn sylvester_dims_match_complex_terms() {
        let a = sys(&[2, 1, 1], &[2, 2, 2]);
        for rec in find_sylvester(&a).unwrap().records {
            assert!(is_pure_sylvester(&a, &rec.m));
            assert_eq!(rec.dim_k0, complex_term(&a, &rec.m, 0).total_dim);
            assert_eq!(rec.dim_k1, complex_term(&a, &rec.m, 1).total_dim);
        }
    }

    #[test]
    fn bezout_search_small() {
        let s = find_bezout(&sys(&[1, 2], &[2, 1]));
        assert_eq!(s.tested, 15);
        let ms: Vec<&[i64]> = s.records.iter().map(|r| r.m.as_slice()).collect();
        assert_eq!(ms, vec![&[5, 0][..], &[1, 1][..]]);
        assert!(find_bezout(&sys(&[1, 2], &[2, 3])).records.is_empty());
        let b = find_bezout(&sys(&[1, 1], &[1, 1]));
        let ms: Vec<&[i64]> = b.records.iter().map(|r| r.m.as_slice()).collect();
        assert_eq!(ms, vec![&[1, 0][..], &[0, 1][..]]);
        assert!(b.records.iter().all(|r| r.dim_k0 == big(2)));
    }

    #[test]
    fn dual_permutations() {
        assert_eq!(dual_permutation(&Permutation::identity(2)), perm(&[2, 1]));
        assert_eq!(dual_permutation(&perm(&[2, 1, 3])), perm(&[2, 3, 1]));
    }

    fn small_system() -> impl Strategy<Value = SystemData> {
        prop::collection::vec((1u32..=3, 1u32..=3), 1..=3)
            .prop_map(|v| SystemData::new(v.iter().map(|p| p.0).collect(), v.iter().map(|p| p.1).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn defect_bounds(l in 1u32..20, d in 1u32..20) {
            let s = SystemData::new(vec![l], vec![d]).unwrap();
            let delta = i64::from(defect_profile(&s).delta[0]);
            let (l, d) = (i64::from(l), i64::from(d));
            let v = (l - delta) * d - l;
            prop_assert!(0 <= v && v < d);
        }

        #[test]
        fn explicit_vectors_are_determinantal(s in small_system()) {
            let delta = defect_profile(&s).delta;
            for pi in Permutation::all(s.r()).unwrap() {
                if delta.iter().all(|&x| x <= 2) {
                    let m = m_pi_determinantal(&s, &pi, DefectBound::AtMostTwo).unwrap();
                    prop_assert!(is_determinantal(&s, &m));
                }
                if delta.iter().all(|&x| x <= 1) {
                    let m = m_pi_determinantal(&s, &pi, DefectBound::AtMostOne).unwrap();
                    prop_assert!(is_determinantal(&s, &m));
                }
            }
        }

        #[test]
        fn bezout_pairs_sum_to_rho(s in small_system()) {
            prop_assume!(two_term_possible(&s));
            let rho = defect_profile(&s).rho;
            for pi in Permutation::all(s.r()).unwrap() {
                let a = bezout_vector(&s, &pi);
                let b = bezout_vector(&s, &dual_permutation(&pi));
                let sum: Vec<i64> = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
                prop_assert_eq!(&sum, &rho);
            }
        }

        #[test]
        fn perturbations_preserve_determinantal(s in small_system(), k in 0usize..3) {
            let k = k % s.r();
            for m in det_search_box(&s).points().filter(|m| is_determinantal(&s, m)) {
                let (up, down) = perturb_vectors(&s, &m, k);
                if pk_set(&s, &m, k).is_empty() {
                    prop_assert_ne!(up.as_slice(), m.as_slice());
                    prop_assert_ne!(down.as_slice(), m.as_slice());
                    prop_assert!(is_determinantal(&s, &up));
                    prop_assert!(is_determinantal(&s, &down));
                }
            }
        }

        #[test]
        fn duality_of_determinantal_vectors(s in small_system()) {
            let rho = defect_profile(&s).rho;
            for rep in enumerate_determinantal(&s) {
                let dual: Vec<i64> = rho.iter().zip(rep.m.iter()).map(|(r, x)| r - x).collect();
                prop_assert!(is_determinantal(&s, &dual));
                prop_assert_eq!(complex_term(&s, &dual, 0).total_dim, rep.matrix_dim.clone());
                prop_assert!(dual_term_dim_check(&s, &rep.m, 0));
            }
        }
    }
}

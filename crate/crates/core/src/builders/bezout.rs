use std::collections::HashMap;

use super::{monomial_basis, GenericSystem};
use crate::degree_vectors::{bezout_vector, defect_profile};
use crate::error::Error;
use crate::exact::{det_minor_expansion, Label, LabeledMatrix, Monomial, MultiPoly, Ring};
use crate::system::{affine_var_name, Permutation, SystemData};

/// The Bezoutian `B^pi(x, y)`: variables `0..n` are the affine `x`, and
/// `n..2n` the matching `y`.
#[derive(Clone, PartialEq)]
pub struct Bezoutian<C> {
    pub pi: Permutation,
    pub poly: MultiPoly<C>,
    n: usize,
}

impl<C: Ring> std::fmt::Debug for Bezoutian<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Bezoutian")
            .field("pi", &self.pi)
            .field("terms", &self.poly.num_terms())
            .finish()
    }
}

/// Largest group degrees appearing in a Bezoutian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportProfile {
    /// `max alpha_k` over all terms, in the `x` variables.
    pub alpha: Vec<u32>,
    /// `max beta_k` over all terms, in the `y` variables.
    pub beta: Vec<u32>,
    /// `max (alpha_k + beta_k)` over all terms.
    pub total: Vec<u32>,
}

impl<C: Ring> Bezoutian<C> {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Splits a monomial in `x, y` into its `x` and `y` parts.
    pub fn split(&self, mono: &Monomial) -> (Monomial, Monomial) {
        let exps = mono.padded(2 * self.n);
        (
            Monomial::new(exps[..self.n].to_vec()),
            Monomial::new(exps[self.n..].to_vec()),
        )
    }

    /// Group-degree maxima over all terms.
    pub fn support_profile(&self, sys: &SystemData) -> SupportProfile {
        let r = sys.r();
        let mut prof = SupportProfile {
            alpha: vec![0; r],
            beta: vec![0; r],
            total: vec![0; r],
        };
        for (mono, _) in self.poly.terms() {
            let (a, b) = self.group_sums(sys, mono);
            for k in 0..r {
                prof.alpha[k] = prof.alpha[k].max(a[k]);
                prof.beta[k] = prof.beta[k].max(b[k]);
                prof.total[k] = prof.total[k].max(a[k] + b[k]);
            }
        }
        prof
    }

    fn group_sums(&self, sys: &SystemData, mono: &Monomial) -> (Vec<u32>, Vec<u32>) {
        let mut a = vec![0; sys.r()];
        let mut b = vec![0; sys.r()];
        for (v, &e) in mono.exps().iter().enumerate() {
            if v < self.n {
                a[sys.group_of(v)] += e;
            } else {
                b[sys.group_of(v - self.n)] += e;
            }
        }
        (a, b)
    }

    /// Renders a term monomial with `x{k}_{j}` / `y{k}_{j}` names.
    pub fn render_monomial(&self, sys: &SystemData, mono: &Monomial) -> String {
        let n = self.n;
        mono.render(&|v| {
            if v < n {
                affine_var_name("x", sys.l(), v)
            } else {
                affine_var_name("y", sys.l(), v - n)
            }
        })
    }
}

/// Affine variables in substitution order: the groups by increasing position
/// under `pi` (that is, `pi^{-1}(1), pi^{-1}(2), ...`), each with its slots in
/// increasing order.
fn substitution_order(sys: &SystemData, pi: &Permutation) -> Vec<usize> {
    pi.order()
        .into_iter()
        .flat_map(|k| {
            let start = sys.var_offset(k);
            start..start + sys.l()[k] as usize
        })
        .collect()
}

/// Replaces `x_v` by `y_v` for each `v` in `vars`.
fn to_y<C: Ring>(poly: &MultiPoly<C>, vars: &[usize], n: usize) -> MultiPoly<C> {
    MultiPoly::from_terms(poly.terms().map(|(mono, c)| {
        let mut exps = mono.padded(2 * n);
        for &v in vars {
            exps[n + v] = exps[v];
            exps[v] = 0;
        }
        (Monomial::new(exps), c.clone())
    }))
}

/// Bezoutian of the system for the permutation `pi`.
///
/// Row `s` of the Cayley matrix holds `f_0, ..., f_n` with the first `s`
/// variables of the substitution order replaced by their `y` copies, so row
/// `0` is in `x` only and row `n` in `y` only. The Bezoutian is its
/// determinant divided by `prod (x_v - y_v)`. Consecutive rows differ in a
/// single variable `v`, so the division is carried out row by row: each
/// difference `R_s - R_{s+1}` is divided exactly by `x_v - y_v` before the
/// determinant is expanded. For systems with all defects zero the support is
/// checked against the degree bounds `alpha <= m^{pi'}`, `beta <= m^pi`,
/// `alpha + beta <= rho`.
pub fn build_bezoutian<C: Ring>(gs: &GenericSystem<C>, pi: &Permutation) -> Result<Bezoutian<C>, Error> {
    let sys = gs.sys();
    if pi.len() != sys.r() {
        return Err(Error::InvalidPermutation(format!(
            "{pi} has {} entries but the system has {} groups",
            pi.len(),
            sys.r()
        )));
    }
    let n = sys.n() as usize;
    let order = substitution_order(sys, pi);
    let polys: Vec<MultiPoly<C>> = (0..gs.num_polys()).map(|i| gs.poly(i)).collect();
    let cayley_row = |s: usize| -> Vec<MultiPoly<C>> { polys.iter().map(|f| to_y(f, &order[..s], n)).collect() };

    let mut rows = Vec::with_capacity(n + 1);
    let mut current = cayley_row(0);
    for s in 0..n {
        let next = cayley_row(s + 1);
        let v = order[s];
        let diff = current
            .iter()
            .zip(&next)
            .map(|(a, b)| a.sub(b).div_by_difference(v, n + v))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(diff);
        current = next;
    }
    rows.push(current);

    // Minors grow from the first expanded row. Starting from the `y`-only
    // row keeps them far smaller than starting from the `x`-heavy quotients;
    // reversing `n + 1` rows costs the sign `(-1)^(n(n+1)/2)`.
    rows.reverse();
    let mut poly = det_minor_expansion(&rows);
    if (n * (n + 1) / 2) % 2 == 1 {
        poly = poly.neg();
    }
    let bez = Bezoutian {
        pi: pi.clone(),
        poly,
        n,
    };
    let profile = defect_profile(sys);
    if profile.delta.iter().all(|&d| d == 0) {
        check_support(sys, &bez, &profile.rho)?;
    }
    Ok(bez)
}

fn check_support<C: Ring>(sys: &SystemData, bez: &Bezoutian<C>, rho: &[i64]) -> Result<(), Error> {
    let alpha_max = bezout_vector(sys, &bez.pi.dual());
    let beta_max = bezout_vector(sys, &bez.pi);
    for (mono, _) in bez.poly.terms() {
        let (a, b) = bez.group_sums(sys, mono);
        let ok = (0..sys.r()).all(|k| {
            let (ak, bk) = (i64::from(a[k]), i64::from(b[k]));
            ak <= alpha_max[k] && bk <= beta_max[k] && ak + bk <= rho[k]
        });
        if !ok {
            return Err(Error::SupportViolation {
                term: bez.render_monomial(sys, mono),
            });
        }
    }
    Ok(())
}

/// Coefficient matrix `(b_{alpha beta})` of the Bezoutian.
///
/// Rows are the `x` monomials of degree at most `m^{pi'}`, columns the `y`
/// monomials of degree at most `m^pi`. Requires all defects to vanish, in
/// which case the matrix is square of size `deg R / (n + 1)`.
pub fn build_bezout_matrix<C: Ring>(gs: &GenericSystem<C>, pi: &Permutation) -> Result<LabeledMatrix<C>, Error> {
    let sys = gs.sys();
    let delta = defect_profile(sys).delta;
    if delta.iter().any(|&d| d != 0) {
        return Err(Error::NonzeroDefect { delta });
    }
    let bez = build_bezoutian(gs, pi)?;
    let rows = monomial_basis(sys, &bezout_vector(sys, &pi.dual()))?;
    let cols = monomial_basis(sys, &bezout_vector(sys, pi))?;
    let row_index: HashMap<_, usize> = rows.iter().cloned().zip(0..).collect();
    let col_index: HashMap<_, usize> = cols.iter().cloned().zip(0..).collect();
    let mut entries = vec![vec![C::zero(); cols.len()]; rows.len()];
    for (mono, c) in bez.poly.terms() {
        let (xa, yb) = bez.split(mono);
        let (Some(&i), Some(&j)) = (row_index.get(&xa), col_index.get(&yb)) else {
            return Err(Error::SupportViolation {
                term: bez.render_monomial(sys, mono),
            });
        };
        entries[i][j] = c.clone();
    }
    LabeledMatrix::new(
        rows.into_iter().map(Label::X).collect(),
        cols.into_iter().map(Label::Y).collect(),
        entries,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::CoeffPoly;
    use crate::exact::Monomial;
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_i64(v)
    }

    fn seeded_system(sys: &SystemData, seed: i64) -> GenericSystem<BigRational> {
        let s = GenericSystem::generic(sys).support().len();
        let rows = (0..=sys.n() as i64)
            .map(|i| (0..s as i64).map(|a| q((seed * 31 + i * 17 + a * 7) % 13 - 6)).collect())
            .collect();
        GenericSystem::specialized(sys, rows).unwrap()
    }

    // Literal construction: expand the full Cayley determinant, then divide
    // by each x_v - y_v in turn.
    fn bezoutian_by_full_division(gs: &GenericSystem<BigRational>, pi: &Permutation) -> MultiPoly<BigRational> {
        let sys = gs.sys();
        let n = sys.n() as usize;
        let order = substitution_order(sys, pi);
        let rows: Vec<Vec<MultiPoly<BigRational>>> = (0..=n)
            .map(|s| (0..=n).map(|j| to_y(&gs.poly(j), &order[..s], n)).collect())
            .collect();
        let mut det = det_minor_expansion(&rows);
        for v in 0..n {
            det = det.div_by_difference(v, n + v).unwrap();
        }
        det
    }

    #[test]
    fn substitution_follows_inverse_permutation() {
        let sys = SystemData::new(vec![1, 2], vec![2, 1]).unwrap();
        assert_eq!(substitution_order(&sys, &Permutation::identity(2)), vec![0, 1, 2]);
        let swap = Permutation::from_one_line(&[2, 1]).unwrap();
        assert_eq!(substitution_order(&sys, &swap), vec![1, 2, 0]);
    }

    #[test]
    fn row_division_matches_full_division() {
        for (l, d) in [(vec![1, 1], vec![1, 1]), (vec![1, 2], vec![2, 1]), (vec![2], vec![1]), (vec![1, 1, 1], vec![1, 1, 1])] {
            let sys = SystemData::new(l, d).unwrap();
            let gs = seeded_system(&sys, 3);
            for pi in Permutation::all(sys.r()).unwrap() {
                let fast = build_bezoutian(&gs, &pi).unwrap();
                assert_eq!(fast.poly, bezoutian_by_full_division(&gs, &pi));
            }
        }
    }

    #[test]
    fn bilinear_support() {
        let sys = SystemData::new(vec![1, 1], vec![1, 1]).unwrap();
        let gs = GenericSystem::generic(&sys);
        let bez = build_bezoutian(&gs, &Permutation::identity(2)).unwrap();
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (mono, _) in bez.poly.terms() {
            let (x, y) = bez.split(mono);
            xs.push(x);
            ys.push(y);
        }
        xs.sort();
        xs.dedup();
        ys.sort();
        ys.dedup();
        assert_eq!(xs, vec![Monomial::one(), Monomial::new(vec![0, 1])]);
        assert_eq!(ys, vec![Monomial::one(), Monomial::new(vec![1])]);
    }

    #[test]
    fn bezout_matrix_shapes() {
        let sys = SystemData::new(vec![1, 2], vec![2, 1]).unwrap();
        let gs = seeded_system(&sys, 5);
        for pi in Permutation::all(2).unwrap() {
            let mat = build_bezout_matrix(&gs, &pi).unwrap();
            assert_eq!((mat.rows(), mat.cols()), (6, 6));
        }
        let tri = SystemData::new(vec![1, 1, 1], vec![1, 1, 1]).unwrap();
        let mat = build_bezout_matrix(&seeded_system(&tri, 2), &Permutation::identity(3)).unwrap();
        assert_eq!((mat.rows(), mat.cols()), (6, 6));
    }

    #[test]
    fn nonzero_defect_is_rejected() {
        let sys = SystemData::new(vec![2], vec![2]).unwrap();
        let gs = GenericSystem::generic(&sys);
        assert!(matches!(
            build_bezout_matrix(&gs, &Permutation::identity(1)),
            Err(Error::NonzeroDefect { .. })
        ));
    }

    #[test]
    fn univariate_bezoutian_is_classical() {
        // For two polynomials in one variable the construction reduces to
        // (f0(x) f1(y) - f0(y) f1(x)) / (x - y), up to sign.
        let sys = SystemData::new(vec![1], vec![2]).unwrap();
        let gs = seeded_system(&sys, 1);
        let bez = build_bezoutian(&gs, &Permutation::identity(1)).unwrap();
        let (f0, f1) = (gs.poly(0), gs.poly(1));
        let (g0, g1) = (to_y(&f0, &[0], 1), to_y(&f1, &[0], 1));
        let classical = f0.mul(&g1).sub(&g0.mul(&f1)).div_by_difference(0, 1).unwrap();
        assert!(bez.poly == classical || bez.poly == classical.neg());
    }

    #[test]
    fn generic_mode_matches_specialized() {
        let sys = SystemData::new(vec![1, 1], vec![1, 1]).unwrap();
        let gs = GenericSystem::generic(&sys);
        let values: Vec<BigRational> = (0..12).map(|v| q(v * v - 5 * v + 3)).collect();
        let pi = Permutation::identity(2);
        let generic = build_bezout_matrix(&gs, &pi).unwrap();
        let special = build_bezout_matrix(&gs.specialize(&values), &pi).unwrap();
        assert_eq!(generic.map(|c: &CoeffPoly| c.eval(&values)), special);
    }
}

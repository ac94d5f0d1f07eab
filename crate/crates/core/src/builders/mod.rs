//! Explicit resultant matrices.
//!
//! Polynomials are dehomogenized: group `k` contributes affine variables
//! `x_{k,1}, ..., x_{k,l_k}` and a monomial has degree at most `d_k` in each
//! group. Coefficients are either exact rationals or, in generic mode,
//! distinct indeterminates `c{i}_{mu}`, one per polynomial `i` and support
//! monomial `mu`.

mod basis;
mod bezout;
mod rank;
mod sylvester;

use std::collections::HashMap;

use num_rational::BigRational;

use crate::error::Error;
use crate::exact::{Monomial, MultiPoly, Ring};
use crate::system::SystemData;

pub use basis::{group_degrees, monomial_basis};
pub use bezout::{build_bezout_matrix, build_bezoutian, Bezoutian, SupportProfile};
pub use rank::{rank_test, RankReport, DEFAULT_TRIALS};
pub use sylvester::build_sylvester;

/// Polynomial in the coefficient indeterminates, with rational coefficients.
pub type CoeffPoly = MultiPoly<BigRational>;

/// The `n + 1` polynomials `f_i = sum_mu c_{i,mu} x^mu` of a system.
#[derive(Clone, Debug, PartialEq)]
pub struct GenericSystem<C> {
    sys: SystemData,
    support: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    coeffs: Vec<Vec<C>>,
}

impl<C: Ring> GenericSystem<C> {
    fn from_parts(sys: SystemData, coeffs: Vec<Vec<C>>) -> Self {
        let support = support_of(&sys);
        let index = support.iter().cloned().zip(0..).collect();
        GenericSystem {
            sys,
            support,
            index,
            coeffs,
        }
    }

    /// Same system with every coefficient mapped through `f`.
    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> GenericSystem<D> {
        let coeffs = self.coeffs.iter().map(|row| row.iter().map(&f).collect()).collect();
        GenericSystem::from_parts(self.sys.clone(), coeffs)
    }

    pub fn sys(&self) -> &SystemData {
        &self.sys
    }

    /// Common support: all monomials of group degree at most `d`.
    pub fn support(&self) -> &[Monomial] {
        &self.support
    }

    pub fn support_index(&self, mu: &Monomial) -> Option<usize> {
        self.index.get(mu).copied()
    }

    pub fn num_polys(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients of `f_i` in support order.
    pub fn coeffs(&self, i: usize) -> &[C] {
        &self.coeffs[i]
    }

    pub fn coeff(&self, i: usize, mu: &Monomial) -> Option<&C> {
        self.support_index(mu).map(|a| &self.coeffs[i][a])
    }

    /// `f_i` as a polynomial in the `n` affine variables.
    pub fn poly(&self, i: usize) -> MultiPoly<C> {
        MultiPoly::from_terms(self.support.iter().cloned().zip(self.coeffs[i].iter().cloned()))
    }
}

impl GenericSystem<CoeffPoly> {
    /// Every coefficient a distinct indeterminate; see [`coeff_var`].
    pub fn generic(sys: &SystemData) -> Self {
        let s = support_of(sys).len();
        let coeffs = (0..=sys.n() as usize)
            .map(|i| (0..s).map(|a| CoeffPoly::var(i * s + a)).collect())
            .collect();
        Self::from_parts(sys.clone(), coeffs)
    }

    /// Number of coefficient indeterminates, `(n + 1) * |support|`.
    pub fn num_indeterminates(&self) -> usize {
        self.coeffs.len() * self.support.len()
    }

    /// Name of indeterminate `var`, e.g. `c0_1_0` for the coefficient of
    /// `x_{1,1}` in `f_0` of a two-variable system.
    pub fn indeterminate_name(&self, var: usize) -> String {
        coeff_name(&self.sys, &self.support, var)
    }

    /// Substitutes rationals for the indeterminates, indexed by variable id.
    pub fn specialize(&self, values: &[BigRational]) -> GenericSystem<BigRational> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| row.iter().map(|c| c.eval(values)).collect())
            .collect();
        GenericSystem::from_parts(self.sys.clone(), coeffs)
    }
}

impl GenericSystem<BigRational> {
    /// System with the given coefficients, one row per polynomial in support
    /// order.
    pub fn specialized(sys: &SystemData, coeffs: Vec<Vec<BigRational>>) -> Result<Self, Error> {
        let s = support_of(sys).len();
        let rows = sys.n() as usize + 1;
        if coeffs.len() != rows {
            return Err(Error::LengthMismatch {
                expected: rows,
                got: coeffs.len(),
            });
        }
        if let Some(bad) = coeffs.iter().find(|c| c.len() != s) {
            return Err(Error::LengthMismatch {
                expected: s,
                got: bad.len(),
            });
        }
        Ok(Self::from_parts(sys.clone(), coeffs))
    }
}

fn support_of(sys: &SystemData) -> Vec<Monomial> {
    let d: Vec<i64> = sys.d().iter().map(|&v| i64::from(v)).collect();
    monomial_basis(sys, &d).expect("degrees are positive")
}

/// Variable id of `c_{i, mu}` where `mu` is the `a`-th support monomial.
pub fn coeff_var(support_len: usize, i: usize, a: usize) -> usize {
    i * support_len + a
}

/// `c{i}_{e_1}_{e_2}_..._{e_n}` with the exponents of `mu` in variable order.
pub fn coeff_name(sys: &SystemData, support: &[Monomial], var: usize) -> String {
    let (i, a) = (var / support.len(), var % support.len());
    let exps: Vec<String> = support[a]
        .padded(sys.n() as usize)
        .iter()
        .map(u32::to_string)
        .collect();
    format!("c{i}_{}", exps.join("_"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_bilinear_system() {
        let sys = SystemData::new(vec![1, 1], vec![1, 1]).unwrap();
        let gs = GenericSystem::generic(&sys);
        assert_eq!(gs.num_polys(), 3);
        assert_eq!(gs.support().len(), 4);
        assert_eq!(gs.num_indeterminates(), 12);
        let names: Vec<String> = (0..4).map(|v| gs.indeterminate_name(v)).collect();
        assert_eq!(names, ["c0_0_0", "c0_1_0", "c0_0_1", "c0_1_1"]);
        assert_eq!(gs.indeterminate_name(9), "c2_1_0");
        assert_eq!(gs.poly(0).num_terms(), 4);
    }

    #[test]
    fn specialization_evaluates_coefficients() {
        let sys = SystemData::new(vec![1], vec![2]).unwrap();
        let gs = GenericSystem::generic(&sys);
        let values: Vec<BigRational> = (1..=6).map(BigRational::from_i64).collect();
        let sp = gs.specialize(&values);
        assert_eq!(sp.coeffs(1), &values[3..]);
        assert!(GenericSystem::specialized(&sys, vec![values.clone()]).is_err());
    }
}

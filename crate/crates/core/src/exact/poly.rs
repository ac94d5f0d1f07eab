//! Sparse multivariate polynomials over a [`Ring`].
//!
//! Variables are identified by index. A [`Monomial`] stores its exponent
//! vector with trailing zeros trimmed, so polynomials never need to agree on
//! the size of their variable universe.
//!
//! Monomials are ordered by total degree first; ties are broken
//! lexicographically with the highest-indexed variable most significant.
//! Iteration over a polynomial's terms therefore goes from the smallest
//! monomial to the leading one.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;

use std::collections::{BTreeMap, HashMap};

use smallvec::SmallVec;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::{format_rational, Ring};
use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Exps,
    // cached total degree, the leading sort key
    deg: u32,
}

/// Inline storage covers every `x, y` pair of up to four variables.
type Exps = SmallVec<[u32; 8]>;

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Self::trimmed(Exps::from_vec(exps))
    }

    fn trimmed(mut exps: Exps) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    /// `x_var^e`.
    pub fn var_pow(var: usize, e: u32) -> Self {
        let mut exps = vec![0; var + 1];
        exps[var] = e;
        Monomial::new(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent vector padded with zeros to `len` entries.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut v = self.exps.to_vec();
        v.resize(len.max(v.len()), 0);
        v
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps.get(var).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn with_exp(&self, var: usize, e: u32) -> Self {
        let mut exps = self.exps.clone();
        if exps.len() <= var {
            exps.resize(var + 1, 0);
        }
        exps[var] = e;
        Self::trimmed(exps)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (&self.exps, &other.exps)
        } else {
            (&other.exps, &self.exps)
        };
        let mut exps = long.clone();
        for (e, s) in exps.iter_mut().zip(short) {
            *e += s;
        }
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.exps.len() > self.exps.len() {
            return None;
        }
        let mut exps = self.exps.clone();
        for (e, o) in exps.iter_mut().zip(&other.exps) {
            *e = e.checked_sub(*o)?;
        }
        Some(Self::trimmed(exps))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        other.div(self).is_some()
    }

    /// Renders as `name(i)^e` factors joined by `*`, or `1`.
    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    name(i)
                } else {
                    format!("{}^{}", name(i), e)
                }
            })
            .collect();
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| self.exps.len().cmp(&other.exps.len()))
            .then_with(|| self.exps.iter().rev().cmp(other.exps.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&|i| format!("v{i}")))
    }
}

/// Sparse polynomial: a map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> Default for MultiPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Ring> MultiPoly<C> {
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(var: usize) -> Self {
        Self::term(Monomial::var_pow(var, 1), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in iter {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    /// Number of variable slots touched by any term.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.exps().len()).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add_ref(c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn sub_term(&mut self, m: Monomial, c: &C) {
        self.add_term(m, &c.neg_ref());
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (mut acc, other) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &other.terms {
            acc.add_term(m.clone(), c);
        }
        acc
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut acc = self.clone();
        for (m, c) in &rhs.terms {
            acc.sub_term(m.clone(), c);
        }
        acc
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // hashing beats ordered insertion for the many collisions of a product
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.terms.len().max(rhs.terms.len()));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca.mul_ref(cb);
                match acc.entry(ma.mul(mb)) {
                    Entry::Occupied(mut e) => {
                        let sum = e.get().add_ref(&c);
                        *e.get_mut() = sum;
                    }
                    Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        MultiPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(m, a)| (m.clone(), a.mul_ref(c))))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / den`.
    ///
    /// Fails with [`Error::NotDivisible`] if the remainder of the division is
    /// nonzero or a coefficient division is inexact.
    pub fn exact_div(&self, den: &Self) -> Result<Self, Error> {
        let (den_lm, den_lc) = den.leading_term().ok_or(Error::NotDivisible)?;
        let (den_lm, den_lc) = (den_lm.clone(), den_lc.clone());
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((lm, lc)) = rem.leading_term() {
            let m = lm.div(&den_lm).ok_or(Error::NotDivisible)?;
            let c = lc.div_exact(&den_lc).ok_or(Error::NotDivisible)?;
            for (dm, dc) in den.terms() {
                rem.sub_term(dm.mul(&m), &dc.mul_ref(&c));
            }
            quot.add_term(m, &c);
        }
        Ok(quot)
    }

    /// Exact quotient by the binomial `x_a - x_b`, via synthetic division in
    /// `x_a` with coefficients in the remaining variables.
    pub fn div_by_difference(&self, a: usize, b: usize) -> Result<Self, Error> {
        let slices = self.split_by_var(a);
        let Some(&top) = slices.keys().next_back() else {
            return Ok(Self::zero());
        };
        let xb = Monomial::var_pow(b, 1);
        let mut quot = Self::zero();
        // carry = q_{k-1} = P_k + x_b * q_k, descending from k = top
        let mut carry = Self::zero();
        for k in (1..=top).rev() {
            let pk = slices.get(&k).cloned().unwrap_or_default();
            carry = pk.add(&carry.mul_monomial(&xb));
            let shifted = carry.mul_monomial(&Monomial::var_pow(a, k - 1));
            quot = quot.add(&shifted);
        }
        let p0 = slices.get(&0).cloned().unwrap_or_default();
        if !p0.add(&carry.mul_monomial(&xb)).is_zero() {
            return Err(Error::NotDivisible);
        }
        Ok(quot)
    }

    /// Groups terms by the exponent of `var`, removing that variable.
    pub fn split_by_var(&self, var: usize) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(var))
                .or_default()
                .terms
                .insert(m.with_exp(var, 0), c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Substitutes `values[i]` for variable `i`; variables past the end of
    /// `values` are treated as zero.
    pub fn eval(&self, values: &[C]) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let Some(v) = values.get(i) else {
                    t = C::zero();
                    break;
                };
                for _ in 0..e {
                    t = t.mul_ref(v);
                }
            }
            acc = acc.add_ref(&t);
        }
        acc
    }

    /// Substitutes ring elements for variables, given as a closure so callers
    /// can map indeterminates into a different domain.
    pub fn eval_with<D: Ring>(&self, coeff: impl Fn(&C) -> D, value: impl Fn(usize) -> D) -> D {
        let mut acc = D::zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = value(i);
                for _ in 0..e {
                    t = t.mul_ref(&v);
                }
            }
            acc = acc.add_ref(&t);
        }
        acc
    }
}

impl MultiPoly<BigRational> {
    /// Human-readable rendering with leading monomial first, e.g.
    /// `c0_1_0*c1_0_1 - 2*c2_0_0`.
    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = super::rational_is_negative(c);
            let abs = if negative { -c.clone() } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let is_unit = abs == BigRational::from_integer(1.into());
            match (m.is_one(), is_unit) {
                (true, _) => out.push_str(&format_rational(&abs)),
                (false, true) => out.push_str(&m.render(name)),
                (false, false) => {
                    out.push_str(&format_rational(&abs));
                    out.push('*');
                    out.push_str(&m.render(name));
                }
            }
        }
        out
    }
}

impl<C: Ring> Ring for MultiPoly<C> {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::constant(C::one())
    }
    fn from_i64(v: i64) -> Self {
        MultiPoly::constant(C::from_i64(v))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.exact_div(rhs).ok()
    }
}

impl<C: Ring> fmt::Debug for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().rev()).finish()
    }
}

impl<C: Ring> Add for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn add(self, rhs: Self) -> MultiPoly<C> {
        MultiPoly::add(self, rhs)
    }
}

impl<C: Ring> Sub for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn sub(self, rhs: Self) -> MultiPoly<C> {
        MultiPoly::sub(self, rhs)
    }
}

impl<C: Ring> Mul for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn mul(self, rhs: Self) -> MultiPoly<C> {
        MultiPoly::mul(self, rhs)
    }
}

impl<C: Ring> Neg for &MultiPoly<C> {
    type Output = MultiPoly<C>;
    fn neg(self) -> MultiPoly<C> {
        MultiPoly::neg(self)
    }
}

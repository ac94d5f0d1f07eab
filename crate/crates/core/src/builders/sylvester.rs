use std::collections::HashMap;

use super::{monomial_basis, GenericSystem};
use crate::degree_vectors::admits_sylvester;
use crate::error::Error;
use crate::exact::{Label, LabeledMatrix, Ring};

/// Matrix of the Sylvester map `(g_0, ..., g_n) -> sum g_i f_i` restricted to
/// degree `m`.
///
/// Rows are the products `f_i * x^b` with `x^b` in the basis of degree
/// `m - d`; columns are the monomials of degree `m`. The entry in row
/// `(i, b)` and column `a` is the coefficient of `x^{a-b}` in `f_i`.
pub fn build_sylvester<C: Ring>(gs: &GenericSystem<C>, m: &[i64]) -> Result<LabeledMatrix<C>, Error> {
    let sys = gs.sys();
    sys.check_vector(m)?;
    let shifted: Vec<i64> = m.iter().zip(sys.d()).map(|(&mk, &dk)| mk - i64::from(dk)).collect();
    if shifted.iter().any(|&v| v < 0) {
        return Err(Error::InvalidDegreeVector(format!(
            "{m:?} is not componentwise at least the degree vector {:?}",
            sys.d()
        )));
    }
    if admits_sylvester(sys, m)?.is_none() {
        return Err(Error::InvalidDegreeVector(format!(
            "{m:?} does not dominate any Sylvester vector"
        )));
    }
    let cols = monomial_basis(sys, m)?;
    let col_index: HashMap<_, usize> = cols.iter().cloned().zip(0..).collect();
    let row_basis = monomial_basis(sys, &shifted)?;

    let mut row_labels = Vec::with_capacity(gs.num_polys() * row_basis.len());
    let mut entries = Vec::with_capacity(row_labels.capacity());
    for i in 0..gs.num_polys() {
        for b in &row_basis {
            let mut row = vec![C::zero(); cols.len()];
            for (mu, c) in gs.support().iter().zip(gs.coeffs(i)) {
                row[col_index[&b.mul(mu)]] = c.clone();
            }
            entries.push(row);
            row_labels.push(Label::Shifted {
                poly: i,
                monomial: b.clone(),
            });
        }
    }
    LabeledMatrix::new(row_labels, cols.into_iter().map(Label::X).collect(), entries)
}

use crate::error::Error;
use crate::exact::Monomial;
use crate::system::SystemData;

/// Per-group degrees of a monomial in the affine variables.
pub fn group_degrees(sys: &SystemData, mu: &Monomial) -> Vec<u32> {
    let mut out = vec![0; sys.r()];
    for (var, &e) in mu.exps().iter().enumerate() {
        out[sys.group_of(var)] += e;
    }
    out
}

/// Affine monomials of degree at most `e_k` in each group `k`, sorted in the
/// crate's monomial order. These dehomogenize a basis of `H^0(X, O(e))`.
pub fn monomial_basis(sys: &SystemData, e: &[i64]) -> Result<Vec<Monomial>, Error> {
    sys.check_vector(e)?;
    if let Some(bad) = e.iter().find(|&&v| v < 0) {
        return Err(Error::InvalidDegreeVector(format!(
            "monomial basis needs nonnegative degrees, got {bad}"
        )));
    }
    let mut exps: Vec<Vec<u32>> = vec![Vec::new()];
    for (k, &ek) in e.iter().enumerate() {
        let group = bounded_exponents(sys.l()[k] as usize, ek as u32);
        exps = exps
            .iter()
            .flat_map(|head| {
                group.iter().map(move |tail| {
                    let mut v = head.clone();
                    v.extend_from_slice(tail);
                    v
                })
            })
            .collect();
    }
    let mut out: Vec<Monomial> = exps.into_iter().map(Monomial::new).collect();
    out.sort();
    Ok(out)
}

/// Exponent vectors of length `len` with sum at most `bound`.
fn bounded_exponents(len: usize, bound: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=bound {
        for mut rest in bounded_exponents(len - 1, bound - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

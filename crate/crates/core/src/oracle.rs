//! Brute-force checks of resultant matrices: random rational systems,
//! systems with a prescribed common root, exact determinant comparisons and
//! the degree of a determinant in the coefficients of one polynomial.
//!
//! Random rationals have numerators in `-NUM_BOUND..=NUM_BOUND` and
//! denominators in `1..=DEN_BOUND`, drawn from a ChaCha generator seeded by
//! the caller. All comparisons are exact.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builders::{build_bezout_matrix, build_sylvester, rank_test, CoeffPoly, GenericSystem, RankReport};
use crate::degree_vectors::{find_sylvester, min_sylvester, resultant_degree, two_term_possible};
use crate::error::Error;
use crate::exact::{det_rational, LabeledMatrix, MultiPoly};
use crate::system::{DegreeVector, Permutation, SystemData};

pub const NUM_BOUND: i64 = 20;
pub const DEN_BOUND: i64 = 9;

/// Attempts at picking a solvable coefficient before giving up.
const ROOT_RETRIES: usize = 16;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    BigRational::new(
        rng.gen_range(-NUM_BOUND..=NUM_BOUND).into(),
        rng.gen_range(1..=DEN_BOUND).into(),
    )
}

pub fn random_values(count: usize, rng: &mut impl Rng) -> Vec<BigRational> {
    (0..count).map(|_| random_rational(rng)).collect()
}

/// System with every coefficient drawn at random.
pub fn random_system(sys: &SystemData, rng: &mut impl Rng) -> GenericSystem<BigRational> {
    let s = GenericSystem::generic(sys).support().len();
    let coeffs = (0..=sys.n()).map(|_| random_values(s, rng)).collect();
    GenericSystem::specialized(sys, coeffs).expect("shape matches the system")
}

/// System with random integer coefficients in `-NUM_BOUND..=NUM_BOUND`.
///
/// Integer arithmetic is much cheaper than rational for large symbolic
/// computations such as Bezoutians of four or more variables.
pub fn random_integer_system(sys: &SystemData, rng: &mut impl Rng) -> GenericSystem<BigInt> {
    let s = GenericSystem::generic(sys).support().len();
    let coeffs = (0..=sys.n())
        .map(|_| (0..s).map(|_| int(rng.gen_range(-NUM_BOUND..=NUM_BOUND))).collect())
        .collect();
    GenericSystem::specialized(sys, coeffs)
        .expect("shape matches the system")
        .map_coeffs(BigRational::to_integer)
}

/// Rational values for the affine variables `x_{k,j}` in flat order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePoint(pub Vec<BigRational>);

pub fn random_point(sys: &SystemData, rng: &mut impl Rng) -> AffinePoint {
    AffinePoint(random_values(sys.n() as usize, rng))
}

/// Random system whose polynomials all vanish at `point`.
///
/// Each polynomial gets random coefficients, then one randomly chosen
/// coefficient is solved for; the choice is redrawn if its monomial vanishes
/// at the point.
pub fn force_common_root(
    sys: &SystemData,
    point: &AffinePoint,
    seed: u64,
) -> Result<GenericSystem<BigRational>, Error> {
    if point.0.len() != sys.n() as usize {
        return Err(Error::LengthMismatch {
            expected: sys.n() as usize,
            got: point.0.len(),
        });
    }
    let mut rng = rng(seed);
    let generic = GenericSystem::generic(sys);
    let monomial_values: Vec<BigRational> = generic
        .support()
        .iter()
        .map(|mu| MultiPoly::term(mu.clone(), BigRational::one()).eval(&point.0))
        .collect();
    let mut coeffs = Vec::with_capacity(sys.n() as usize + 1);
    for _ in 0..=sys.n() {
        let mut row = random_values(monomial_values.len(), &mut rng);
        let solved = (0..ROOT_RETRIES)
            .map(|_| rng.gen_range(0..row.len()))
            .find(|&a| !monomial_values[a].is_zero())
            .ok_or(Error::DegeneratePoint)?;
        row[solved] = BigRational::zero();
        let rest: BigRational = row.iter().zip(&monomial_values).map(|(c, v)| c * v).sum();
        row[solved] = -rest / &monomial_values[solved];
        coeffs.push(row);
    }
    GenericSystem::specialized(sys, coeffs)
}

/// Substitutes rationals for the coefficient indeterminates of a generic matrix.
pub fn specialize_matrix(mat: &LabeledMatrix<CoeffPoly>, values: &[BigRational]) -> LabeledMatrix<BigRational> {
    mat.map(|c| c.eval(values))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DetVerdict {
    /// `det A = sign * det B` on every specialization.
    EqualUpToSign { sign: i8 },
    /// `det A = ratio * det B` for a fixed ratio other than `+-1`.
    Proportional(BigRational),
    Different,
}

fn classify(pairs: impl IntoIterator<Item = (BigRational, BigRational)>) -> Result<DetVerdict, Error> {
    let mut ratio: Option<BigRational> = None;
    for (a, b) in pairs {
        match (a.is_zero(), b.is_zero()) {
            (true, true) => continue,
            (true, false) | (false, true) => return Ok(DetVerdict::Different),
            (false, false) => {}
        }
        let q = a / b;
        match &ratio {
            None => ratio = Some(q),
            Some(r) if *r == q => {}
            Some(_) => return Ok(DetVerdict::Different),
        }
    }
    let ratio = ratio.ok_or(Error::VanishingDeterminant)?;
    Ok(if ratio.abs().is_one() {
        DetVerdict::EqualUpToSign {
            sign: if ratio.is_negative() { -1 } else { 1 },
        }
    } else {
        DetVerdict::Proportional(ratio)
    })
}

/// Compares the determinants of two generic square matrices over the same
/// indeterminates on `trials` random rational specializations.
///
/// Specializations where both determinants vanish are inconclusive and
/// skipped; if every one is, the result is [`Error::VanishingDeterminant`].
pub fn det_compare(
    a: &LabeledMatrix<CoeffPoly>,
    b: &LabeledMatrix<CoeffPoly>,
    trials: usize,
    seed: u64,
) -> Result<DetVerdict, Error> {
    let num_vars = [a, b]
        .iter()
        .flat_map(|m| m.entries().iter().flatten())
        .map(CoeffPoly::num_vars)
        .max()
        .unwrap_or(0);
    let mut rng = rng(seed);
    let pairs: Vec<_> = (0..trials)
        .map(|_| {
            let values = random_values(num_vars, &mut rng);
            (
                det_rational(&specialize_matrix(a, &values)),
                det_rational(&specialize_matrix(b, &values)),
            )
        })
        .collect();
    classify(pairs)
}

/// Like [`det_compare`], but builds both matrices from the same random
/// rational system on each trial.
pub fn det_compare_by(
    sys: &SystemData,
    trials: usize,
    seed: u64,
    build_a: impl Fn(&GenericSystem<BigRational>) -> Result<LabeledMatrix<BigRational>, Error>,
    build_b: impl Fn(&GenericSystem<BigRational>) -> Result<LabeledMatrix<BigRational>, Error>,
) -> Result<DetVerdict, Error> {
    let mut rng = rng(seed);
    let mut pairs = Vec::with_capacity(trials);
    for _ in 0..trials {
        let gs = random_system(sys, &mut rng);
        pairs.push((det_rational(&build_a(&gs)?), det_rational(&build_b(&gs)?)));
    }
    classify(pairs)
}

/// Degree of `det` of a generic square matrix in the coefficients of `f_i`.
///
/// Scales the coefficients of `f_i` by `t` in a random specialization,
/// evaluates the determinant at `t = 0, ..., rows` and interpolates exactly.
/// Every entry has degree at most one in those coefficients, so `rows + 1`
/// samples determine the polynomial in `t`.
pub fn coeff_degree_check(
    mat: &LabeledMatrix<CoeffPoly>,
    gs: &GenericSystem<CoeffPoly>,
    i: usize,
    seed: u64,
) -> Result<u32, Error> {
    let s = gs.support().len();
    let mut rng = rng(seed);
    let base = random_values(gs.num_indeterminates(), &mut rng);
    let samples = (0..=mat.rows() as i64)
        .map(|t| {
            let t = int(t);
            let mut values = base.clone();
            for v in &mut values[i * s..(i + 1) * s] {
                *v = &*v * &t;
            }
            det_rational(&specialize_matrix(mat, &values))
        })
        .collect::<Vec<_>>();
    homogeneous_degree(&samples)
}

/// Like [`coeff_degree_check`], for matrices built from a specialized system
/// by `build`.
pub fn coeff_degree_check_by(
    sys: &SystemData,
    i: usize,
    seed: u64,
    build: impl Fn(&GenericSystem<BigRational>) -> Result<LabeledMatrix<BigRational>, Error>,
) -> Result<u32, Error> {
    let mut rng = rng(seed);
    let base = random_system(sys, &mut rng);
    let rows = build(&base)?.rows();
    let mut samples = Vec::with_capacity(rows + 1);
    for t in 0..=rows as i64 {
        let t = int(t);
        let coeffs = (0..base.num_polys())
            .map(|j| {
                base.coeffs(j)
                    .iter()
                    .map(|c| if j == i { c * &t } else { c.clone() })
                    .collect()
            })
            .collect();
        samples.push(det_rational(&build(&GenericSystem::specialized(sys, coeffs)?)?));
    }
    homogeneous_degree(&samples)
}

/// Given `p(0), ..., p(N)` for a polynomial of degree at most `N`, returns
/// its degree provided it is a single monomial in `t`.
fn homogeneous_degree(samples: &[BigRational]) -> Result<u32, Error> {
    let coeffs = interpolate(samples);
    let nonzero: Vec<usize> = (0..coeffs.len()).filter(|&k| !coeffs[k].is_zero()).collect();
    match nonzero.as_slice() {
        [] => Err(Error::VanishingDeterminant),
        [k] => Ok(*k as u32),
        _ => Err(Error::NotHomogeneous),
    }
}

/// Monomial coefficients of the polynomial through `(j, samples[j])`.
fn interpolate(samples: &[BigRational]) -> Vec<BigRational> {
    // Newton divided differences at the nodes 0, 1, ..., N.
    let mut dd = samples.to_vec();
    for level in 1..dd.len() {
        for j in (level..dd.len()).rev() {
            dd[j] = (&dd[j] - &dd[j - 1]) / int(level as i64);
        }
    }
    // Horner expansion of sum dd[k] * t (t - 1) ... (t - k + 1).
    let mut poly: Vec<BigRational> = Vec::new();
    for k in (0..dd.len()).rev() {
        // poly = poly * (t - k) + dd[k]
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        let node = int(k as i64);
        for (e, c) in poly.iter().enumerate() {
            next[e + 1] += c;
            next[e] -= c * &node;
        }
        next[0] += &dd[k];
        poly = next;
    }
    poly
}

/// Outcome of [`verify_system`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub bezout: Vec<BezoutCheck>,
    /// Whether all determinantal formulas agree up to sign on a shared random
    /// system; `None` when fewer than two formulas exist.
    pub cross_consistent: Option<bool>,
    pub sylvester: Option<SylvesterCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.bezout.iter().all(BezoutCheck::passed)
            && self.cross_consistent != Some(false)
            && self.sylvester.as_ref().is_none_or(|s| s.surjective)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCheck {
    pub pi: Permutation,
    pub size: usize,
    pub nonzero_at_random: bool,
    pub forced_roots: usize,
    pub vanished_at_roots: usize,
    /// Sum over `i` of the degree in the coefficients of `f_i`.
    pub degree_sum: Option<BigUint>,
    pub expected_degree: BigUint,
}

impl BezoutCheck {
    pub fn passed(&self) -> bool {
        self.nonzero_at_random
            && self.vanished_at_roots == self.forced_roots
            && self.degree_sum.as_ref() == Some(&self.expected_degree)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylvesterCheck {
    pub m: DegreeVector,
    pub rank: RankReport,
    /// The map onto degree `m` has full column rank.
    pub surjective: bool,
}

type Formula = Box<dyn Fn(&GenericSystem<BigRational>) -> Result<LabeledMatrix<BigRational>, Error>>;

/// Runs the oracle checks that apply to a system.
///
/// With all defects zero, every Bezout matrix must be nonsingular on a
/// random system, singular on `roots` systems with a forced common root, and
/// have determinant of the resultant's degree; all Bezout matrices and any
/// square Sylvester matrices must agree up to sign. The smallest Sylvester
/// matrix must have full column rank generically.
pub fn verify_system(sys: &SystemData, roots: usize, seed: u64) -> Result<VerifyReport, Error> {
    let mut rng = rng(seed);
    let expected = resultant_degree(sys).total;
    let mut bezout = Vec::new();
    let mut formulas: Vec<Formula> =
        Vec::new();
    if two_term_possible(sys) {
        for pi in Permutation::all(sys.r())? {
            let build = {
                let pi = pi.clone();
                move |gs: &GenericSystem<BigRational>| build_bezout_matrix(gs, &pi)
            };
            let random = random_system(sys, &mut rng);
            let mat = build(&random)?;
            let nonzero_at_random =
                !det_rational(&mat).is_zero() || !det_rational(&build(&random_system(sys, &mut rng))?).is_zero();
            let mut vanished = 0;
            for _ in 0..roots {
                let point = random_point(sys, &mut rng);
                let forced = force_common_root(sys, &point, rng.gen())?;
                if det_rational(&build(&forced)?).is_zero() {
                    vanished += 1;
                }
            }
            let degree_sum = (0..=sys.n() as usize)
                .map(|i| coeff_degree_check_by(sys, i, rng.gen(), &build).map(BigUint::from))
                .sum::<Result<BigUint, Error>>()
                .ok();
            bezout.push(BezoutCheck {
                pi,
                size: mat.rows(),
                nonzero_at_random,
                forced_roots: roots,
                vanished_at_roots: vanished,
                degree_sum,
                expected_degree: expected.clone(),
            });
            formulas.push(Box::new(build));
        }
    }
    let search = find_sylvester(sys)?;
    for rec in search.records.iter().filter(|r| r.dim_k0 == r.dim_k1) {
        let m = rec.m.to_vec();
        formulas.push(Box::new(move |gs: &GenericSystem<BigRational>| build_sylvester(gs, &m)));
    }
    let cross_consistent = (formulas.len() >= 2).then(|| {
        let gs = random_system(sys, &mut rng);
        let dets: Result<Vec<BigRational>, Error> =
            formulas.iter().map(|f| f(&gs).map(|m| det_rational(&m))).collect();
        dets.map(|d| d.iter().all(|x| x.abs() == d[0].abs() && !x.is_zero()))
            .unwrap_or(false)
    });
    let sylvester = match min_sylvester(sys)?.first() {
        Some((_, rec)) => {
            let mat = build_sylvester(&GenericSystem::generic(sys), &rec.m)?;
            let rank = rank_test(&mat, crate::builders::DEFAULT_TRIALS, rng.gen());
            Some(SylvesterCheck {
                m: rec.m.clone(),
                surjective: rank.full_column_rank(),
                rank,
            })
        }
        None => None,
    };
    Ok(VerifyReport {
        bezout,
        cross_consistent,
        sylvester,
    })
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::CoeffPoly;
use crate::exact::{modp, LabeledMatrix};

pub const DEFAULT_TRIALS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankReport {
    /// Largest rank seen over the random substitutions.
    pub rank: usize,
    pub rows: usize,
    pub cols: usize,
}

impl RankReport {
    pub fn full_row_rank(&self) -> bool {
        self.rank == self.rows
    }

    pub fn full_column_rank(&self) -> bool {
        self.rank == self.cols
    }

    /// Rank equals `min(rows, cols)`.
    pub fn is_full(&self) -> bool {
        self.rank == self.rows.min(self.cols)
    }
}

/// Generic rank of a matrix over the coefficient indeterminates.
///
/// Each trial substitutes independent uniform residues modulo
/// [`modp::PRIME`] for all indeterminates and eliminates over that field;
/// the report keeps the maximum. Trials stop early once the rank is full.
/// A deficient result is wrong with probability at most `deg / p` per trial.
pub fn rank_test(mat: &LabeledMatrix<CoeffPoly>, trials: usize, seed: u64) -> RankReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let num_vars = mat.entries().iter().flatten().map(CoeffPoly::num_vars).max().unwrap_or(0);
    let mut report = RankReport {
        rank: 0,
        rows: mat.rows(),
        cols: mat.cols(),
    };
    for _ in 0..trials.max(1) {
        let values: Vec<u64> = (0..num_vars).map(|_| rng.gen_range(0..modp::PRIME)).collect();
        let rows = mat
            .entries()
            .iter()
            .map(|row| row.iter().map(|c| eval_mod_p(c, &values)).collect())
            .collect();
        report.rank = report.rank.max(modp::rank(rows));
        if report.is_full() {
            break;
        }
    }
    report
}

fn eval_mod_p(poly: &CoeffPoly, values: &[u64]) -> u64 {
    let mut acc = 0;
    for (mono, c) in poly.terms() {
        let mut t = modp::from_rational(c).expect("coefficient denominator vanishes modulo the prime");
        for (v, &e) in mono.exps().iter().enumerate() {
            t = modp::mul(t, modp::pow(values[v], u64::from(e)));
        }
        acc = modp::add(acc, t);
    }
    acc
}

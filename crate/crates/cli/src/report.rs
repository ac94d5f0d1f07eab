//! JSON and text renderings of library results.
//!
//! JSON goes out pretty-printed as a single document, except `enum-det`
//! which writes one compact record per line as it goes.

use std::io::{self, Write};
use std::ops::RangeInclusive;

use mhres_core::builders::{CoeffPoly, GenericSystem, RankReport};
use mhres_core::cohomology::{CohomologySummand, ComplexTerm};
use mhres_core::degree_vectors::{DeterminantalReport, FormulaRecord, FormulaSearch};
use mhres_core::exact::{format_rational, LabeledMatrix, Ring};
use mhres_core::oracle::VerifyReport;
use mhres_core::{DegreeVector, Permutation, SystemData};
use num_bigint::BigUint;
use num_rational::BigRational;
use serde_json::{json, Value};

/// Dimensions as JSON numbers when they fit in `u64`, strings otherwise.
fn big(v: &BigUint) -> Value {
    u64::try_from(v).map_or_else(|_| Value::String(v.to_string()), Value::from)
}

fn opt_big(v: Option<&BigUint>) -> Value {
    v.map_or(Value::Null, big)
}

fn summand(s: &CohomologySummand) -> Value {
    json!({
        "p": s.p,
        "q": s.q,
        "j": s.j_pattern,
        "dim": big(&s.dim),
        "multiplicity": big(&s.multiplicity),
        "total": big(&s.total()),
    })
}

fn term(t: &ComplexTerm) -> Value {
    json!({
        "nu": t.nu,
        "dim": big(&t.total_dim),
        "summands": t.summands.iter().map(summand).collect::<Vec<_>>(),
    })
}

/// `P_k(m)` as the list of its elements.
fn pk(sets: &[RangeInclusive<i64>]) -> Value {
    json!(sets.iter().map(|s| s.clone().collect::<Vec<_>>()).collect::<Vec<_>>())
}

fn record(r: &FormulaRecord) -> Value {
    json!({ "m": r.m.as_slice(), "dim_k1": big(&r.dim_k1), "dim_k0": big(&r.dim_k0) })
}

fn pk_text(sets: &[RangeInclusive<i64>]) -> String {
    let parts: Vec<String> = sets
        .iter()
        .map(|s| {
            let elems: Vec<String> = s.clone().map(|v| v.to_string()).collect();
            format!("{{{}}}", elems.join(","))
        })
        .collect();
    parts.join(" ")
}

fn matrix_json<C: Ring>(mat: &LabeledMatrix<C>, l: &[u32], entry: impl Fn(&C) -> String) -> Value {
    json!({
        "rows": mat.rows(),
        "cols": mat.cols(),
        "row_labels": mat.row_labels().iter().map(|x| x.render(l)).collect::<Vec<_>>(),
        "col_labels": mat.col_labels().iter().map(|x| x.render(l)).collect::<Vec<_>>(),
        "entries": mat.entries().iter().map(|row| row.iter().map(&entry).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn rank_json(r: &RankReport) -> Value {
    json!({ "rank": r.rank, "rows": r.rows, "cols": r.cols })
}

pub struct Out<'a, W: Write> {
    text: bool,
    w: &'a mut W,
}

impl<'a, W: Write> Out<'a, W> {
    pub fn new(text: bool, w: &'a mut W) -> Self {
        Out { text, w }
    }

    fn json(self, v: &Value) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut *self.w, v)?;
        writeln!(self.w)
    }

    pub fn term(mut self, t: &ComplexTerm) -> io::Result<()> {
        if !self.text {
            return self.json(&term(t));
        }
        self.term_text(t)
    }

    fn term_text(&mut self, t: &ComplexTerm) -> io::Result<()> {
        writeln!(self.w, "K_{}: {}", t.nu, t.total_dim)?;
        for s in &t.summands {
            writeln!(
                self.w,
                "  p={} q={} j={:?}: {} x {} = {}",
                s.p,
                s.q,
                s.j_pattern,
                s.multiplicity,
                s.dim,
                s.total()
            )?;
        }
        Ok(())
    }

    /// The nonzero terms of `K(m)`.
    pub fn complex(mut self, m: &[i64], terms: &[ComplexTerm]) -> io::Result<()> {
        let nonzero: Vec<&ComplexTerm> = terms.iter().filter(|t| !t.is_zero()).collect();
        if !self.text {
            return self.json(&json!({ "m": m, "terms": nonzero.iter().map(|t| term(t)).collect::<Vec<_>>() }));
        }
        writeln!(self.w, "m = {}", DegreeVector::from(m.to_vec()))?;
        for t in nonzero {
            self.term_text(t)?;
        }
        Ok(())
    }

    pub fn determinantal(self, m: &[i64], det: bool, k1: &ComplexTerm, k0: &ComplexTerm) -> io::Result<()> {
        if !self.text {
            return self.json(&json!({
                "m": m,
                "determinantal": det,
                "dim_k1": big(&k1.total_dim),
                "dim_k0": big(&k0.total_dim),
            }));
        }
        writeln!(
            self.w,
            "{}: {} (K_1 {}, K_0 {})",
            DegreeVector::from(m.to_vec()),
            if det { "determinantal" } else { "not determinantal" },
            k1.total_dim,
            k0.total_dim
        )
    }

    pub fn det_record(&mut self, r: &DeterminantalReport) -> io::Result<()> {
        if self.text {
            return writeln!(self.w, "{} dim {}  P: {}", r.m, r.matrix_dim, pk_text(&r.pk_sets));
        }
        let v = json!({ "m": r.m.as_slice(), "dim": big(&r.matrix_dim), "pk_sets": pk(&r.pk_sets) });
        serde_json::to_writer(&mut *self.w, &v)?;
        writeln!(self.w)
    }

    pub fn det_summary(&mut self, count: usize) -> io::Result<()> {
        if self.text {
            writeln!(self.w, "{count} determinantal degree vectors")?;
        }
        Ok(())
    }

    pub fn comp_m(self, rows: &[(Permutation, DegreeVector, BigUint, BigUint)]) -> io::Result<()> {
        if !self.text {
            let v: Vec<Value> = rows
                .iter()
                .map(|(pi, m, k1, k0)| {
                    json!({ "perm": pi.one_line(), "m": m.as_slice(), "dim_k1": big(k1), "dim_k0": big(k0) })
                })
                .collect();
            return self.json(&Value::Array(v));
        }
        for (pi, m, k1, k0) in rows {
            writeln!(self.w, "{pi} {m}  {k1} x {k0}")?;
        }
        Ok(())
    }

    pub fn search(self, s: &FormulaSearch) -> io::Result<()> {
        if !self.text {
            return self.json(&json!({
                "range": { "lower": s.range.lower, "upper": s.range.upper },
                "tested": s.tested,
                "first": record(&s.first),
                "records": s.records.iter().map(record).collect::<Vec<_>>(),
            }));
        }
        let lower = DegreeVector::from(s.range.lower.clone());
        let upper = DegreeVector::from(s.range.upper.clone());
        writeln!(self.w, "range {lower} .. {upper}, tested {}", s.tested)?;
        for r in &s.records {
            writeln!(self.w, "{}  {} x {}", r.m, r.dim_k1, r.dim_k0)?;
        }
        writeln!(self.w, "{} vectors", s.records.len())
    }

    pub fn min_syl(self, rows: &[(Permutation, FormulaRecord)]) -> io::Result<()> {
        if !self.text {
            let v: Vec<Value> = rows
                .iter()
                .map(|(pi, r)| {
                    json!({ "perm": pi.one_line(), "m": r.m.as_slice(), "dim_k1": big(&r.dim_k1), "dim_k0": big(&r.dim_k0) })
                })
                .collect();
            return self.json(&Value::Array(v));
        }
        for (pi, r) in rows {
            writeln!(self.w, "{pi} {}  {} x {}", r.m, r.dim_k1, r.dim_k0)?;
        }
        Ok(())
    }

    /// Matrix over the coefficient indeterminates, entries named
    /// `c{i}_{exponents}`.
    pub fn generic_matrix(self, gs: &GenericSystem<CoeffPoly>, mat: &LabeledMatrix<CoeffPoly>) -> io::Result<()> {
        let name = |v: usize| gs.indeterminate_name(v);
        self.matrix(mat, gs.sys().l(), |c| c.render(&name))
    }

    pub fn rational_matrix(self, sys: &SystemData, mat: &LabeledMatrix<BigRational>) -> io::Result<()> {
        self.matrix(mat, sys.l(), format_rational)
    }

    fn matrix<C: Ring>(self, mat: &LabeledMatrix<C>, l: &[u32], entry: impl Fn(&C) -> String) -> io::Result<()> {
        if !self.text {
            return self.json(&matrix_json(mat, l, entry));
        }
        writeln!(self.w, "{} x {}", mat.rows(), mat.cols())?;
        let cols: Vec<String> = mat.col_labels().iter().map(|c| c.render(l)).collect();
        writeln!(self.w, "columns: {}", cols.join(", "))?;
        for (label, row) in mat.row_labels().iter().zip(mat.entries()) {
            let cells: Vec<String> = row.iter().map(&entry).collect();
            writeln!(self.w, "{}: [{}]", label.render(l), cells.join(", "))?;
        }
        Ok(())
    }

    pub fn verify(self, r: &VerifyReport) -> io::Result<()> {
        if !self.text {
            let bezout: Vec<Value> = r
                .bezout
                .iter()
                .map(|b| {
                    json!({
                        "perm": b.pi.one_line(),
                        "size": b.size,
                        "nonzero_at_random": b.nonzero_at_random,
                        "forced_roots": b.forced_roots,
                        "vanished_at_roots": b.vanished_at_roots,
                        "degree_sum": opt_big(b.degree_sum.as_ref()),
                        "expected_degree": big(&b.expected_degree),
                        "passed": b.passed(),
                    })
                })
                .collect();
            let sylvester = r.sylvester.as_ref().map_or(Value::Null, |s| {
                json!({ "m": s.m.as_slice(), "rank": rank_json(&s.rank), "surjective": s.surjective })
            });
            return self.json(&json!({
                "passed": r.passed(),
                "bezout": bezout,
                "cross_consistent": r.cross_consistent,
                "sylvester": sylvester,
            }));
        }
        for b in &r.bezout {
            let degree = b.degree_sum.as_ref().map_or_else(|| "?".to_string(), BigUint::to_string);
            writeln!(
                self.w,
                "Bezout {} {}x{}: nonzero {}, roots {}/{}, degree {} of {}",
                b.pi, b.size, b.size, b.nonzero_at_random, b.vanished_at_roots, b.forced_roots, degree, b.expected_degree
            )?;
        }
        if let Some(c) = r.cross_consistent {
            writeln!(self.w, "formulas agree up to sign: {c}")?;
        }
        if let Some(s) = &r.sylvester {
            writeln!(
                self.w,
                "Sylvester {} {}x{}: rank {}, surjective {}",
                s.m, s.rank.rows, s.rank.cols, s.rank.rank, s.surjective
            )?;
        }
        writeln!(self.w, "{}", if r.passed() { "passed" } else { "FAILED" })
    }

    pub fn pk_sets(self, m: &[i64], sets: &[RangeInclusive<i64>]) -> io::Result<()> {
        if !self.text {
            return self.json(&json!({ "m": m, "pk_sets": pk(sets) }));
        }
        writeln!(self.w, "{}: {}", DegreeVector::from(m.to_vec()), pk_text(sets))
    }
}

//! Finite diversities stored as dense tables over the subset lattice, axiom
//! checking, restriction and the induced metric.

use num::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subset::{self, MAX_DENSE};

/// Largest ground set accepted by the fast axiom check.
pub const MAX_FAST_VALIDATE: usize = 10;
/// Largest ground set accepted by the naive `(A, B, C)` axiom check.
pub const MAX_NAIVE_VALIDATE: usize = 6;
/// Witnesses kept per report.
pub const MAX_WITNESSES: usize = 100;

/// A candidate diversity: labels plus a value for every subset, indexed by
/// bitmask. The empty set and singletons always carry zero; the remaining
/// axioms are checked by [`Diversity::validate`].
#[derive(Clone, Debug, PartialEq)]
pub struct Diversity<T = BigRational> {
    labels: Vec<String>,
    table: Vec<T>,
}

pub(crate) fn check_labels(labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::Parse("at least one label is required".into()));
    }
    if labels.len() > MAX_DENSE {
        return Err(Error::SizeCap {
            what: "ground set",
            size: labels.len(),
            cap: MAX_DENSE,
        });
    }
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() || l.contains([',', '|']) || l.trim() != l {
            return Err(Error::Parse(format!("invalid label `{l}`")));
        }
        if labels[..i].contains(l) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl<T: Scalar> Diversity<T> {
    pub fn from_table(labels: Vec<String>, table: Vec<T>) -> Result<Self> {
        check_labels(&labels)?;
        let expected = 1usize << labels.len();
        if table.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: table.len(),
            });
        }
        for (mask, v) in table.iter().enumerate() {
            if subset::size(mask) <= 1 && !v.is_zero() {
                return Err(Error::NonzeroSmallSet(subset::key(&labels, mask)));
            }
        }
        Ok(Self { labels, table })
    }

    /// Builds a table by evaluating `f` on every subset with at least two
    /// elements; smaller subsets get zero.
    pub fn from_fn(labels: Vec<String>, mut f: impl FnMut(usize) -> T) -> Result<Self> {
        check_labels(&labels)?;
        let table = (0..1usize << labels.len())
            .map(|mask| {
                if subset::size(mask) <= 1 {
                    T::zero()
                } else {
                    f(mask)
                }
            })
            .collect();
        Ok(Self { labels, table })
    }

    pub fn zero(labels: Vec<String>) -> Result<Self> {
        Self::from_fn(labels, |_| T::zero())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn full_mask(&self) -> usize {
        subset::full(self.n())
    }

    pub fn table(&self) -> &[T] {
        &self.table
    }

    pub fn into_table(self) -> Vec<T> {
        self.table
    }

    pub fn value(&self, mask: usize) -> &T {
        &self.table[mask]
    }

    /// Value on a list of label names.
    pub fn value_of(&self, names: &[&str]) -> Result<&T> {
        let mask =
            subset::mask_of(&self.labels, names.iter().copied()).map_err(Error::UnknownLabel)?;
        Ok(&self.table[mask])
    }

    pub fn mask_of(&self, names: &[&str]) -> Result<usize> {
        subset::mask_of(&self.labels, names.iter().copied()).map_err(Error::UnknownLabel)
    }

    pub fn key(&self, mask: usize) -> String {
        subset::key(&self.labels, mask)
    }

    /// Pointwise image of the table; `f` must send zero to zero.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Result<Diversity<U>> {
        Diversity::from_table(self.labels.clone(), self.table.iter().map(f).collect())
    }

    /// Sub-diversity on the points of `subset`, which keep their relative order.
    pub fn restrict(&self, subset: usize) -> Result<Self> {
        let subset = subset & self.full_mask();
        if subset == 0 {
            return Err(Error::EmptySubset);
        }
        let kept: Vec<usize> = subset::members(subset).collect();
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let table = (0..1usize << kept.len())
            .map(|local| {
                let global = subset::members(local).fold(0, |acc, j| acc | 1 << kept[j]);
                self.table[global].clone()
            })
            .collect();
        Ok(Self { labels, table })
    }

    /// `d(x, y) = δ({x, y})`. Zero off-diagonal entries (as produced by cut
    /// diversities) are kept and listed in [`MetricTable::zero_pairs`].
    pub fn induced_metric(&self) -> MetricTable<T> {
        let n = self.n();
        let mut d = vec![T::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    d[i * n + j] = self.table[(1 << i) | (1 << j)].clone();
                }
            }
        }
        MetricTable {
            labels: self.labels.clone(),
            d,
        }
    }

    /// Checks nonnegativity and the triangle axiom.
    ///
    /// [`ValidationMode::Fast`] uses monotonicity plus
    /// `δ(A∪{c}) + δ(B∪{c}) ≥ δ(A∪B∪{c})`, which together are equivalent to
    /// the triangle axiom; [`ValidationMode::Naive`] enumerates every
    /// `(A, B, C)` with `B ≠ ∅`.
    pub fn validate(&self, mode: ValidationMode) -> Result<ValidationReport<T>> {
        let n = self.n();
        let cap = match mode {
            ValidationMode::Fast => MAX_FAST_VALIDATE,
            ValidationMode::Naive => MAX_NAIVE_VALIDATE,
        };
        if n > cap {
            return Err(Error::SizeCap {
                what: "axiom validation",
                size: n,
                cap,
            });
        }
        let mut report = ReportBuilder::default();
        for (mask, v) in self.table.iter().enumerate() {
            if subset::size(mask) >= 2 {
                if v.is_negative() {
                    report.push(ViolationKind::D1, vec![mask], vec![v.clone()]);
                } else if v.is_zero() && report.degenerate.len() < MAX_WITNESSES {
                    report.degenerate.push(mask);
                }
            }
        }
        match mode {
            ValidationMode::Fast => {
                self.check_monotone(&mut report);
                self.check_c_triples(&mut report);
            }
            ValidationMode::Naive => self.check_naive(&mut report),
        }
        Ok(report.finish())
    }

    fn check_monotone(&self, report: &mut ReportBuilder<T>) {
        let n = self.n();
        for a in 0..self.table.len() {
            for x in 0..n {
                let b = a | (1 << x);
                if b != a && self.table[a] > self.table[b] {
                    report.push(
                        ViolationKind::Monotone,
                        vec![a, b],
                        vec![self.table[a].clone(), self.table[b].clone()],
                    );
                }
            }
        }
    }

    fn check_c_triples(&self, report: &mut ReportBuilder<T>) {
        let n = self.n();
        let t = &self.table;
        // A and B range over sets containing c; comparable pairs hold trivially
        // once monotonicity and nonnegativity do, but are cheap to include.
        let found: Vec<Vec<Violation<T>>> = (0..n)
            .into_par_iter()
            .map(|c| {
                let bit = 1usize << c;
                let with_c: Vec<usize> = (0..t.len()).filter(|m| m & bit != 0).collect();
                let mut out = Vec::new();
                for (i, &a) in with_c.iter().enumerate() {
                    for &b in &with_c[i + 1..] {
                        let u = a | b;
                        if t[a].clone() + t[b].clone() < t[u] {
                            out.push(Violation {
                                kind: ViolationKind::CTriple,
                                sets: vec![a, b, u],
                                values: vec![t[a].clone(), t[b].clone(), t[u].clone()],
                            });
                            if out.len() >= MAX_WITNESSES {
                                return out;
                            }
                        }
                    }
                }
                out
            })
            .collect();
        for v in found.into_iter().flatten() {
            report.push(v.kind, v.sets, v.values);
        }
    }

    fn check_naive(&self, report: &mut ReportBuilder<T>) {
        let t = &self.table;
        let size = t.len();
        for a in 0..size {
            for b in 1..size {
                for c in 0..size {
                    let lhs = t[a | b].clone() + t[b | c].clone();
                    if lhs < t[a | c] {
                        report.push(
                            ViolationKind::NaiveD2,
                            vec![a, b, c],
                            vec![t[a | b].clone(), t[b | c].clone(), t[a | c].clone()],
                        );
                    }
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ValidationMode {
    #[default]
    Fast,
    Naive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// Negative value on a set with at least two points.
    D1,
    /// `δ(A) > δ(B)` with `A ⊂ B`; sets `[A, B]`.
    Monotone,
    /// `δ(A) + δ(B) < δ(A∪B)` with a common point in `A` and `B`; sets `[A, B, A∪B]`.
    CTriple,
    /// `δ(A∪B) + δ(B∪C) < δ(A∪C)`; sets `[A, B, C]`.
    NaiveD2,
}

/// Free-function form of [`Diversity::validate`].
pub fn validate_axioms<T: Scalar>(
    d: &Diversity<T>,
    mode: ValidationMode,
) -> Result<ValidationReport<T>> {
    d.validate(mode)
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::D1 => "D1",
            ViolationKind::Monotone => "monotone",
            ViolationKind::CTriple => "c-triple",
            ViolationKind::NaiveD2 => "naive-D2",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation<T> {
    pub kind: ViolationKind,
    pub sets: Vec<usize>,
    pub values: Vec<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport<T> {
    pub ok: bool,
    pub violations: Vec<Violation<T>>,
    /// True when more than [`MAX_WITNESSES`] violations were found.
    pub truncated: bool,
    /// Sets with at least two points and value zero (first
    /// [`MAX_WITNESSES`]). They do not make `ok` false: cut diversities and
    /// other pseudo-diversities have them.
    pub degenerate: Vec<usize>,
}

impl<T> ValidationReport<T> {
    /// `ok` and no degenerate sets, i.e. `δ(A) = 0` exactly when `|A| ≤ 1`.
    pub fn is_strict(&self) -> bool {
        self.ok && self.degenerate.is_empty()
    }
}

struct ReportBuilder<T> {
    violations: Vec<Violation<T>>,
    truncated: bool,
    degenerate: Vec<usize>,
}

impl<T> Default for ReportBuilder<T> {
    fn default() -> Self {
        Self {
            violations: Vec::new(),
            truncated: false,
            degenerate: Vec::new(),
        }
    }
}

impl<T> ReportBuilder<T> {
    fn push(&mut self, kind: ViolationKind, sets: Vec<usize>, values: Vec<T>) {
        if self.violations.len() < MAX_WITNESSES {
            self.violations.push(Violation { kind, sets, values });
        } else {
            self.truncated = true;
        }
    }

    fn finish(self) -> ValidationReport<T> {
        ValidationReport {
            ok: self.violations.is_empty(),
            violations: self.violations,
            truncated: self.truncated,
            degenerate: self.degenerate,
        }
    }
}

/// A symmetric matrix of pairwise values with zero diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricTable<T = BigRational> {
    labels: Vec<String>,
    d: Vec<T>,
}

impl<T: Scalar> MetricTable<T> {
    pub fn from_rows(labels: Vec<String>, rows: Vec<Vec<T>>) -> Result<Self> {
        let n = labels.len();
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rows.len(),
            });
        }
        let mut d = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            d.extend(row);
        }
        for i in 0..n {
            if !d[i * n + i].is_zero() {
                return Err(Error::Parse(format!("nonzero diagonal at `{}`", labels[i])));
            }
            for j in 0..i {
                if d[i * n + j] != d[j * n + i] {
                    return Err(Error::Parse(format!(
                        "asymmetric entry between `{}` and `{}`",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(Self { labels, d })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.d[i * self.n() + j]
    }

    /// Off-diagonal pairs `(i, j)`, `i < j`, with distance zero.
    pub fn zero_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.get(i, j).is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Triples `(x, y, z)` with `d(x, z) > d(x, y) + d(y, z)`.
    pub fn triangle_violations(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.get(x, z).clone() > self.get(x, y).clone() + self.get(y, z).clone() {
                        out.push((x, y, z));
                    }
                }
            }
        }
        out
    }

    pub fn is_metric(&self) -> bool {
        let n = self.n();
        let positive = (0..n).all(|i| (0..n).all(|j| i == j || self.get(i, j).is_positive()));
        positive && self.triangle_violations().is_empty()
    }
}

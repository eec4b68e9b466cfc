//! The hypergraph diversity on `𝒳 = ([2m] choose m)`,
//! `δ_H(𝒜) = |⋃𝒜| - m`, with exhaustive cut enumeration over `𝒳`.
//!
//! Sets of `[2m]` are bitmasks over elements (bit `i` is element `i + 1`), so
//! colexicographic order is increasing numeric order. Subfamilies of `𝒳` and
//! of `𝒴 = ([2m] choose m+1)` are bitmasks over positions in those lists.

use num::{BigInt, BigRational};
use rayon::prelude::*;

use crate::diversity::Diversity;
use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

/// Largest `m` with a dense `2^|𝒳|` table (`|𝒳| = 20` at `m = 3`).
pub const MAX_DENSE_M: usize = 3;
/// Largest `m` accepted for on-demand `δ_H` evaluation.
pub const MAX_EVAL_M: usize = 16;

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn big_binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::from(1), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

/// All `k`-subsets of `[n]` in colex order.
fn ksubsets(n: usize, k: usize) -> Vec<u32> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .collect()
}

/// `δ_H` of a family of `m`-sets given as element bitmasks, for any `m`.
pub fn delta_h_of_sets(m: usize, sets: &[u32]) -> Result<i64> {
    if !(1..=MAX_EVAL_M).contains(&m) {
        return Err(Error::SizeCap {
            what: "hypergraph parameter m",
            size: m,
            cap: MAX_EVAL_M,
        });
    }
    if let Some(s) = sets
        .iter()
        .find(|s| s.count_ones() as usize != m || **s >> (2 * m) != 0)
    {
        return Err(Error::Parse(format!(
            "{s:#b} is not an {m}-subset of [{}]",
            2 * m
        )));
    }
    if sets.is_empty() {
        return Ok(0);
    }
    let union = sets.iter().fold(0u32, |a, s| a | s);
    Ok(union.count_ones() as i64 - m as i64)
}

/// `𝒳`, `𝒴` and, for each `B ∈ 𝒴`, the family `(B choose m)` as a mask
/// over `𝒳`.
#[derive(Clone, Debug)]
pub struct HypergraphInstance {
    m: usize,
    ground: Vec<u32>,
    upper: Vec<u32>,
    upper_family: Vec<u64>,
}

impl HypergraphInstance {
    pub fn new(m: usize) -> Result<Self> {
        if !(2..=MAX_DENSE_M).contains(&m) {
            return Err(Error::SizeCap {
                what: "hypergraph enumeration (m in 2..=3)",
                size: m,
                cap: MAX_DENSE_M,
            });
        }
        let ground = ksubsets(2 * m, m);
        let upper = ksubsets(2 * m, m + 1);
        let upper_family = upper
            .iter()
            .map(|&b| {
                ground
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a & !b == 0)
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok(Self {
            m,
            ground,
            upper,
            upper_family,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `𝒳` as element bitmasks.
    pub fn ground(&self) -> &[u32] {
        &self.ground
    }

    /// `𝒴` as element bitmasks.
    pub fn upper(&self) -> &[u32] {
        &self.upper
    }

    /// `(B choose m)` for each `B ∈ 𝒴`, as masks over `𝒳`.
    pub fn upper_families(&self) -> &[u64] {
        &self.upper_family
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn full(&self) -> u64 {
        (1u64 << self.size()) - 1
    }

    pub fn labels(&self) -> Vec<String> {
        self.ground.iter().map(|&s| set_name(s)).collect()
    }

    /// `δ_H` of a subfamily given as a mask over `𝒳`.
    pub fn delta(&self, family: u64) -> i64 {
        if family == 0 {
            return 0;
        }
        let union = (0..self.size())
            .filter(|i| family >> i & 1 == 1)
            .fold(0u32, |acc, i| acc | self.ground[i]);
        union.count_ones() as i64 - self.m as i64
    }

    fn counts(&self, u: u64) -> (u64, u64, u64) {
        let (mut int, mut ext, mut bd) = (0u64, 0u64, 0u64);
        for (k, &f) in self.upper_family.iter().enumerate() {
            let hit = f & u;
            if hit == f {
                int |= 1 << k;
            } else if hit == 0 {
                ext |= 1 << k;
            } else {
                bd |= 1 << k;
            }
        }
        (int, ext, bd)
    }

    pub fn boundary_sets(&self, u: u64) -> Result<CutEvaluation> {
        if u == 0 || u & self.full() == self.full() || u & !self.full() != 0 {
            return Err(Error::TrivialCut);
        }
        let (interior, exterior, boundary) = self.counts(u);
        let size_u = u.count_ones() as u64;
        let size_c = self.size() as u64 - size_u;
        Ok(CutEvaluation {
            u,
            interior,
            exterior,
            boundary,
            sparsity: BigRational::new(
                BigInt::from(boundary.count_ones()),
                BigInt::from(size_u * size_c),
            ),
        })
    }

    /// Johnson-graph vertex boundary of `Y' ⊆ 𝒴` (mask over `𝒴`): vertices
    /// outside `Y'` sharing `m` elements with some member.
    pub fn johnson_vertex_boundary(&self, y: u64) -> Result<JohnsonBoundary> {
        let count = self.upper.len();
        let full = (1u64 << count) - 1;
        if y == 0 || y == full || y & !full != 0 {
            return Err(Error::TrivialCut);
        }
        let mut boundary = 0u64;
        for b in 0..count {
            if y >> b & 1 == 1 {
                continue;
            }
            let adjacent = (0..count).any(|a| {
                y >> a & 1 == 1 && (self.upper[a] & self.upper[b]).count_ones() as usize == self.m
            });
            if adjacent {
                boundary |= 1 << b;
            }
        }
        let size = boundary.count_ones() as u64;
        let k = y.count_ones() as u64;
        let total = count as u64;
        let alpha = k as f64 / total as f64;
        let bound = 0.2 * (2.0 / self.m as f64).sqrt() * total as f64 * alpha * (1.0 - alpha);
        // |b| ≥ (1/5)√(2/m)·Y·α(1-α)  ⇔  25 m |b|² Y² ≥ 2 (k (Y - k))²
        let lhs = 25 * self.m as u128 * (size as u128).pow(2) * (total as u128).pow(2);
        let rhs = 2 * ((k * (total - k)) as u128).pow(2);
        Ok(JohnsonBoundary {
            boundary,
            size,
            bound,
            holds: lhs >= rhs,
        })
    }

    /// Dense `δ_H` table over all subfamilies of `𝒳`.
    pub fn diversity<T: Scalar>(&self) -> Result<Diversity<T>> {
        let size = self.size();
        let mut union = vec![0u32; 1 << size];
        for f in 1usize..1 << size {
            let low = f.trailing_zeros() as usize;
            union[f] = union[f & (f - 1)] | self.ground[low];
        }
        let m = self.m as i64;
        Diversity::from_fn(self.labels(), |f| int(union[f].count_ones() as i64 - m))
    }

    /// `c_𝒜 = 1` on the families `(B choose m)`, as a dense vector.
    pub fn c_vector<T: Scalar>(&self) -> Vec<T> {
        let mut c = vec![T::zero(); 1 << self.size()];
        for &f in &self.upper_family {
            c[f as usize] = T::one();
        }
        c
    }

    /// `d_𝒜 = 1` on the two-element families, as a dense vector.
    pub fn d_vector<T: Scalar>(&self) -> Vec<T> {
        (0..1usize << self.size())
            .map(|f| crate::scalar::one_if(f.count_ones() == 2))
            .collect()
    }
}

fn set_name(s: u32) -> String {
    let elems: Vec<String> = (0..32)
        .filter(|i| s >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    if elems.iter().all(|e| e.len() == 1) {
        elems.concat()
    } else {
        elems.join(".")
    }
}

pub fn build_hypergraph_diversity<T: Scalar>(m: usize) -> Result<Diversity<T>> {
    HypergraphInstance::new(m)?.diversity()
}

/// `Int`, `Ext` and `∂` of a cut `U` as masks over `𝒴`.
#[derive(Clone, Debug, PartialEq)]
pub struct CutEvaluation {
    pub u: u64,
    pub interior: u64,
    pub exterior: u64,
    pub boundary: u64,
    /// `|∂U| / (|U| |Ū|)`.
    pub sparsity: BigRational,
}

impl CutEvaluation {
    pub fn is_partition(&self, upper_count: usize) -> bool {
        let all = (1u64 << upper_count) - 1;
        self.interior & self.exterior == 0
            && self.interior & self.boundary == 0
            && self.exterior & self.boundary == 0
            && self.interior | self.exterior | self.boundary == all
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JohnsonBoundary {
    pub boundary: u64,
    pub size: u64,
    /// `(1/5)√(2/m)·|𝒴|·α(1-α)` with `α = |Y'|/|𝒴|`.
    pub bound: f64,
    /// Exact comparison `|b(Y')| ≥ bound`.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinSparsity {
    pub witness: CutEvaluation,
    pub ratio: BigRational,
    /// Proper nonempty cuts covered, counting each `U` and `Ū` separately.
    pub cuts_covered: u64,
}

// Ratio p/q with q > 0, compared exactly.
#[derive(Clone, Copy, Debug)]
struct Frac {
    num: u64,
    den: u64,
}

impl Frac {
    fn lt(self, other: Frac) -> bool {
        (self.num as u128) * (other.den as u128) < (other.num as u128) * (self.den as u128)
    }
}

const CHUNK: u64 = 1 << 12;

/// Exact minimum of `|∂U|/(|U||Ū|)` over proper nonempty `U`, witnessed by
/// the smallest minimizing bitmask. Only masks without the top bit are
/// visited: the ratio is invariant under `U ↔ Ū`.
pub fn brute_force_min_sparsity(m: usize) -> Result<MinSparsity> {
    let inst = HypergraphInstance::new(m)?;
    let size = inst.size() as u64;
    let end = 1u64 << (size - 1);
    let chunks = end.div_ceil(CHUNK);
    let best = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut best: Option<(Frac, u64)> = None;
            for u in (c * CHUNK).max(1)..((c + 1) * CHUNK).min(end) {
                let (_, _, bd) = inst.counts(u);
                let k = u.count_ones() as u64;
                let f = Frac {
                    num: bd.count_ones() as u64,
                    den: k * (size - k),
                };
                if best.is_none_or(|(b, _)| f.lt(b)) {
                    best = Some((f, u));
                }
            }
            best
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .fold(None::<(Frac, u64)>, |acc, (f, u)| match acc {
            Some((b, w)) if !f.lt(b) => Some((b, w)),
            _ => Some((f, u)),
        });
    let (_, u) = best.ok_or_else(|| Error::Internal("no cuts enumerated".into()))?;
    let witness = inst.boundary_sets(u)?;
    if !witness.is_partition(inst.upper.len()) {
        return Err(Error::Internal(
            "Int/Ext/boundary do not partition the (m+1)-sets".into(),
        ));
    }
    Ok(MinSparsity {
        ratio: witness.sparsity.clone(),
        witness,
        cuts_covered: 2 * (end - 1),
    })
}

impl MinSparsity {
    /// Exact check of `ratio ≥ (m/(m+1)) (1+5√(2m))^{-1} C(2m,m)^{-1}`.
    pub fn meets_floor(&self, m: usize) -> bool {
        let n = binomial(2 * m as u64, m as u64) as u128;
        let k = self.witness.u.count_ones() as u128;
        let p = self.witness.boundary.count_ones() as u128;
        let m = m as u128;
        // p/(k(n-k)) ≥ m/((m+1)(1+5√(2m)) n)
        at_least_over_one_plus_five_sqrt(p * (m + 1) * n, m * k * (n - k), 2 * m)
    }
}

/// Decides `a ≥ b / (1 + 5√k)` for nonnegative integers, exactly.
pub fn at_least_over_one_plus_five_sqrt(a: u128, b: u128, k: u128) -> bool {
    // a + 5a√k ≥ b  ⇔  b ≤ a  or  25 a² k ≥ (b - a)²
    b <= a || 25 * a * a * k >= (b - a) * (b - a)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionReport {
    pub m: usize,
    pub cuts_checked: u64,
    pub violations: u64,
    /// First violating cut (after normalization), if any.
    pub first_violation: Option<u64>,
    /// Smallest `|∂U|/|U|` seen after normalization.
    pub min_ratio: BigRational,
    /// `(m/(m+1)) / (1 + 5√(2m))`.
    pub bound: f64,
}

/// Checks `|∂U|/|U| ≥ (m/(m+1))(1+5√(2m))^{-1}` for every proper nonempty
/// `U`, after replacing `U` by `Ū` whenever `|Int(U)| > |Ext(U)|`.
pub fn check_boundary_expansion(m: usize) -> Result<ExpansionReport> {
    let inst = HypergraphInstance::new(m)?;
    let full = inst.full();
    let size = inst.size() as u64;
    let mm = m as u128;
    let chunks = full.div_ceil(CHUNK);
    // per chunk: (violations, first violation, min ratio)
    let parts: Vec<(u64, Option<u64>, Option<Frac>)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut viol = 0u64;
            let mut first = None;
            let mut min: Option<Frac> = None;
            for u in (c * CHUNK).max(1)..((c + 1) * CHUNK).min(full) {
                let (int, ext, bd) = inst.counts(u);
                let k = u.count_ones() as u64;
                let side = if int.count_ones() > ext.count_ones() {
                    size - k
                } else {
                    k
                };
                let p = bd.count_ones() as u64;
                // p/side ≥ m/((m+1)(1+5√(2m)))  ⇔  p(m+1) ≥ m·side/(1+5√(2m))
                if !at_least_over_one_plus_five_sqrt(
                    p as u128 * (mm + 1),
                    mm * side as u128,
                    2 * mm,
                ) {
                    viol += 1;
                    first.get_or_insert(u);
                }
                let f = Frac { num: p, den: side };
                if min.is_none_or(|b| f.lt(b)) {
                    min = Some(f);
                }
            }
            (viol, first, min)
        })
        .collect();
    let mut violations = 0;
    let mut first_violation = None;
    let mut min: Option<Frac> = None;
    for (v, f, mn) in parts {
        violations += v;
        if first_violation.is_none() {
            first_violation = f;
        }
        if let Some(mn) = mn {
            if min.is_none_or(|b| mn.lt(b)) {
                min = Some(mn);
            }
        }
    }
    let min = min.ok_or_else(|| Error::Internal("no cuts enumerated".into()))?;
    Ok(ExpansionReport {
        m,
        cuts_checked: full - 1,
        violations,
        first_violation,
        min_ratio: BigRational::new(min.num.into(), min.den.into()),
        bound: expansion_bounds(m).boundary_expansion.value,
    })
}

/// A closed-form constant, exact when `√(2m)` is rational.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForm {
    pub exact: Option<BigRational>,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Bounds {
    pub m: usize,
    /// `(m/(m+1)) (1 + 5√(2m))^{-1}`, lower bound on `|∂U|/|U|`.
    pub boundary_expansion: ClosedForm,
    /// `boundary_expansion / C(2m, m)`, lower bound on the sparsity of any cut. The
    /// exact value is given for `m ≤ MAX_EXACT_FLOOR_M` only.
    pub sparsity_floor: ClosedForm,
    /// `m / (4 + 20√(2m))`, lower bound on the L1 distortion of `δ_H`.
    pub distortion_floor: ClosedForm,
}

fn exact_sqrt(v: u64) -> Option<u64> {
    let r = (v as f64).sqrt().round() as u64;
    (r * r == v).then_some(r)
}

/// Largest `m` for which the exact sparsity floor (with `C(2m, m)` as a big
/// integer) is produced.
pub const MAX_EXACT_FLOOR_M: usize = 1000;

fn central_binomial_f64(m: usize) -> f64 {
    let mut c = 1.0f64;
    for k in 1..=m {
        c = c * (m + k) as f64 / k as f64;
        if c.is_infinite() {
            break;
        }
    }
    c
}

pub fn expansion_bounds(m: usize) -> Bounds {
    let mf = m as f64;
    let s = (2.0 * mf).sqrt();
    let root = exact_sqrt(2 * m as u64);
    let q = |p: BigInt, d: BigInt| BigRational::new(p, d);
    let boundary_expansion = ClosedForm {
        exact: root.map(|r| q(BigInt::from(m), BigInt::from((m as u64 + 1) * (1 + 5 * r)))),
        value: mf / (mf + 1.0) / (1.0 + 5.0 * s),
    };
    let sparsity_floor = ClosedForm {
        exact: boundary_expansion
            .exact
            .as_ref()
            .filter(|_| m <= MAX_EXACT_FLOOR_M)
            .map(|e| e / BigRational::from_integer(big_binomial(2 * m as u64, m as u64))),
        value: boundary_expansion.value / central_binomial_f64(m),
    };
    let distortion_floor = ClosedForm {
        exact: root.map(|r| q(BigInt::from(m), BigInt::from(4 + 20 * r))),
        value: mf / (4.0 + 20.0 * s),
    };
    Bounds {
        m,
        boundary_expansion,
        sparsity_floor,
        distortion_floor,
    }
}

/// `sparsity_floor / (Σcδ_H / Σdδ_H)` evaluated from its pieces; simplifies
/// to `m / (4 + 20√(2m))`. Not finite once `C(2m, m)` overflows an `f64`.
pub fn distortion_floor_chain(m: usize) -> f64 {
    let b = expansion_bounds(m);
    // 2 / ((m+1) C(2m-1, m)) with C(2m-1, m) = C(2m, m) / 2
    let ratio = 4.0 / ((m as f64 + 1.0) * central_binomial_f64(m));
    b.sparsity_floor.value / ratio
}

#[derive(Clone, Debug, PartialEq)]
pub struct Aggregates {
    pub m: usize,
    /// `Σ_𝒜 c_𝒜 δ_H(𝒜)` by enumeration.
    pub c_delta: BigInt,
    /// `Σ_𝒜 d_𝒜 δ_H(𝒜)` by enumeration.
    pub d_delta: BigInt,
    /// `C(2m, m+1)`.
    pub c_closed: BigInt,
    /// `m C(2m-1, m)^2`.
    pub d_closed: BigInt,
    pub ratio: BigRational,
    /// `2 / ((m+1) C(2m-1, m))`.
    pub ratio_closed: BigRational,
}

impl Aggregates {
    pub fn matches_closed_forms(&self) -> bool {
        self.c_delta == self.c_closed
            && self.d_delta == self.d_closed
            && self.ratio == self.ratio_closed
    }
}

pub fn aggregate_ratios(m: usize) -> Result<Aggregates> {
    let inst = HypergraphInstance::new(m)?;
    let c_delta: i64 = inst.upper_family.iter().map(|&f| inst.delta(f)).sum();
    let size = inst.size();
    let mut d_delta = 0i64;
    for i in 0..size {
        for j in i + 1..size {
            d_delta += inst.delta(1 << i | 1 << j);
        }
    }
    let mu = m as u64;
    let c_closed = big_binomial(2 * mu, mu + 1);
    let b = big_binomial(2 * mu - 1, mu);
    let d_closed = BigInt::from(mu) * &b * &b;
    Ok(Aggregates {
        m,
        ratio: BigRational::new(c_delta.into(), d_delta.into()),
        ratio_closed: BigRational::new(BigInt::from(2), BigInt::from(mu + 1) * b),
        c_delta: c_delta.into(),
        d_delta: d_delta.into(),
        c_closed,
        d_closed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_sizes() {
        let i2 = HypergraphInstance::new(2).unwrap();
        assert_eq!(i2.size(), 6);
        assert_eq!(i2.upper().len(), 4);
        assert_eq!(i2.labels(), vec!["12", "13", "23", "14", "24", "34"]);
        let i3 = HypergraphInstance::new(3).unwrap();
        assert_eq!(i3.size(), 20);
        assert_eq!(i3.upper().len(), 15);
        assert!(HypergraphInstance::new(4).is_err());
        assert!(HypergraphInstance::new(1).is_err());
    }

    #[test]
    fn delta_h_values() {
        let d: Diversity<i64> = build_hypergraph_diversity(2).unwrap();
        assert_eq!(*d.value_of(&["12", "34"]).unwrap(), 2);
        assert_eq!(*d.value_of(&["12", "13"]).unwrap(), 1);
        assert_eq!(*d.value_of(&["12"]).unwrap(), 0);
        assert_eq!(delta_h_of_sets(5, &[0b11111, 0b1111100000]).unwrap(), 5);
        assert!(delta_h_of_sets(2, &[0b111]).is_err());
    }

    #[test]
    fn boundary_of_star() {
        let inst = HypergraphInstance::new(2).unwrap();
        // 2-sets containing element 1: 12, 13, 14 at positions 0, 1, 3
        let u = 0b001011;
        let e = inst.boundary_sets(u).unwrap();
        assert_eq!(e.interior, 0);
        assert_eq!(e.exterior.count_ones(), 1);
        assert_eq!(inst.upper()[e.exterior.trailing_zeros() as usize], 0b1110);
        assert_eq!(e.boundary.count_ones(), 3);
        assert_eq!(e.sparsity, BigRational::new(1.into(), 3.into()));
        let ec = inst.boundary_sets(inst.full() & !u).unwrap();
        assert_eq!(ec.boundary, e.boundary);
        assert_eq!(ec.interior, e.exterior);
        assert!(e.is_partition(4));
        assert!(inst.boundary_sets(0).is_err());
        assert!(inst.boundary_sets(inst.full()).is_err());
    }

    #[test]
    fn min_sparsity_m2() {
        let r = brute_force_min_sparsity(2).unwrap();
        assert!(r.ratio <= BigRational::new(1.into(), 3.into()));
        assert_eq!(r.cuts_covered, 62);
        assert!(r.meets_floor(2));
    }

    #[test]
    fn bounds_closed_forms() {
        let b = expansion_bounds(2);
        assert_eq!(
            b.distortion_floor.exact,
            Some(BigRational::new(1.into(), 22.into()))
        );
        assert!(
            (expansion_bounds(3).boundary_expansion.value - 0.75 / (1.0 + 5.0 * 6f64.sqrt())).abs()
                < 1e-15
        );
        assert!(expansion_bounds(3).boundary_expansion.exact.is_none());
        for m in 2..=10 {
            let b = expansion_bounds(m);
            assert!(
                (distortion_floor_chain(m) - b.distortion_floor.value).abs()
                    < 1e-12 * b.distortion_floor.value.max(1.0)
            );
        }
    }

    #[test]
    fn aggregates_m2() {
        let a = aggregate_ratios(2).unwrap();
        assert_eq!(a.c_delta, 4.into());
        assert_eq!(a.d_delta, 18.into());
        assert_eq!(a.ratio, BigRational::new(2.into(), 9.into()));
        assert!(a.matches_closed_forms());
    }

    #[test]
    fn johnson_m2_is_complete() {
        let inst = HypergraphInstance::new(2).unwrap();
        let b = inst.johnson_vertex_boundary(0b0001).unwrap();
        assert_eq!(b.size, 3);
        let b = inst.johnson_vertex_boundary(0b1110).unwrap();
        assert_eq!(b.boundary, 0b0001);
        assert!(inst.johnson_vertex_boundary(0).is_err());
        assert!(inst.johnson_vertex_boundary(0b1111).is_err());
    }

    #[test]
    fn exact_sqrt_comparison() {
        // 1 ≥ 6/(1+5·2) = 6/11
        assert!(at_least_over_one_plus_five_sqrt(1, 6, 4));
        // 1 ≥ 12/11 fails
        assert!(!at_least_over_one_plus_five_sqrt(1, 12, 4));
        // equality: 1 = 11/11
        assert!(at_least_over_one_plus_five_sqrt(1, 11, 4));
    }
}

//! Cut diversities, their nonnegative combinations (the L1-embeddable
//! diversities), the L1 embeddability test, and exact minimal L1 distortion.
//!
//! Unordered cuts `C | C̄` are stored by the side that does not contain the
//! first label, so the canonical masks are the even masks in `2..2^n - 1`.

use num::BigRational;

use crate::diversity::Diversity;
use crate::error::{Error, Result};
use crate::lp::{simplex_solve, LinearProgram, LpSolution, Relation};
use crate::scalar::{Field, Scalar};
use crate::subset;
use crate::transform::{is_negative_type, LambdaVector};

/// Largest ground set for the distortion LP (`2^(n-1) - 1` cut variables).
pub const MAX_DISTORTION: usize = 10;

/// Canonical representative of the cut `mask | complement`.
pub fn canonical_cut(mask: usize, n: usize) -> usize {
    if mask & 1 == 1 {
        subset::full(n) & !mask
    } else {
        mask
    }
}

/// `δ_{C|C̄}(A) = 1` iff `A` meets both sides.
#[inline]
pub fn separates(cut: usize, a: usize, full: usize) -> bool {
    a & cut != 0 && a & full & !cut != 0
}

/// `"a,b|c"`: the side containing the first label, then the other side.
pub fn cut_key(labels: &[String], cut: usize) -> String {
    let full = subset::full(labels.len());
    let cut = canonical_cut(cut, labels.len());
    format!(
        "{}|{}",
        subset::key(labels, full & !cut),
        subset::key(labels, cut)
    )
}

/// Nonnegative weights on the `2^(n-1) - 1` unordered cuts.
#[derive(Clone, Debug, PartialEq)]
pub struct CutCombination<T = BigRational> {
    labels: Vec<String>,
    weights: Vec<T>,
}

impl<T: Scalar> CutCombination<T> {
    pub fn num_cuts(n: usize) -> usize {
        (1usize << (n - 1)) - 1
    }

    /// Canonical cut mask of weight slot `k`.
    pub fn cut_of(k: usize) -> usize {
        (k + 1) << 1
    }

    fn slot_of(canonical: usize) -> usize {
        (canonical >> 1) - 1
    }

    pub fn zero(labels: Vec<String>) -> Result<Self> {
        crate::diversity::check_labels(&labels)?;
        let k = Self::num_cuts(labels.len());
        Ok(Self {
            labels,
            weights: vec![T::zero(); k],
        })
    }

    /// Weights listed by slot (see [`CutCombination::cut_of`]).
    pub fn from_weights(labels: Vec<String>, weights: Vec<T>) -> Result<Self> {
        let mut c = Self::zero(labels)?;
        if weights.len() != c.weights.len() {
            return Err(Error::DimensionMismatch {
                expected: c.weights.len(),
                got: weights.len(),
            });
        }
        c.weights = weights;
        c.check_nonnegative()?;
        Ok(c)
    }

    /// Accumulates `(side, weight)` pairs; either side of a cut may be given.
    pub fn from_cuts(
        labels: Vec<String>,
        cuts: impl IntoIterator<Item = (usize, T)>,
    ) -> Result<Self> {
        let mut c = Self::zero(labels)?;
        for (side, w) in cuts {
            c.add(side, w)?;
        }
        c.check_nonnegative()?;
        Ok(c)
    }

    pub fn add(&mut self, side: usize, w: T) -> Result<()> {
        let n = self.n();
        let side = side & subset::full(n);
        if side == 0 || side == subset::full(n) {
            return Err(Error::TrivialCut);
        }
        let k = Self::slot_of(canonical_cut(side, n));
        self.weights[k] = self.weights[k].clone() + w;
        Ok(())
    }

    fn check_nonnegative(&self) -> Result<()> {
        match self.weights.iter().position(|w| w.is_negative()) {
            Some(k) => Err(Error::NegativeWeight(cut_key(
                &self.labels,
                Self::cut_of(k),
            ))),
            None => Ok(()),
        }
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn weight(&self, side: usize) -> &T {
        &self.weights[Self::slot_of(canonical_cut(side, self.n()))]
    }

    /// `(canonical cut, weight)` for every cut with nonzero weight.
    pub fn support(&self) -> impl Iterator<Item = (usize, &T)> + '_ {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(k, w)| (Self::cut_of(k), w))
    }

    /// Value of the combination on one subset.
    pub fn value(&self, a: usize) -> T {
        let full = subset::full(self.n());
        self.support()
            .filter(|(c, _)| separates(*c, a, full))
            .fold(T::zero(), |acc, (_, w)| acc + w.clone())
    }

    pub fn scale(&self, f: &T) -> Self {
        Self {
            labels: self.labels.clone(),
            weights: self.weights.iter().map(|w| w.clone() * f.clone()).collect(),
        }
    }
}

pub fn cut_diversity<T: Scalar>(labels: Vec<String>, side: usize) -> Result<Diversity<T>> {
    crate::diversity::check_labels(&labels)?;
    let full = subset::full(labels.len());
    if side & full == 0 || side & full == full {
        return Err(Error::TrivialCut);
    }
    let side = side & full;
    Diversity::from_fn(labels, |a| crate::scalar::one_if(separates(side, a, full)))
}

/// Weighted sum of cut diversities.
///
/// For nonempty `A`, the cuts not separating `A` are exactly those with one
/// (ordered) side containing `A`, so the table is the total weight minus a
/// superset sum over ordered sides.
pub fn combine_cuts<T: Scalar>(comb: &CutCombination<T>) -> Result<Diversity<T>> {
    comb.check_nonnegative()?;
    let n = comb.n();
    let full = subset::full(n);
    let mut ordered = vec![T::zero(); 1 << n];
    let mut total = T::zero();
    for (c, w) in comb.support() {
        ordered[c] = w.clone();
        ordered[full & !c] = w.clone();
        total = total + w.clone();
    }
    subset::superset_sums(&mut ordered);
    Diversity::from_fn(comb.labels.clone(), |a| total.clone() - ordered[a].clone())
}

#[derive(Clone, Debug, PartialEq)]
pub struct L1Verdict<T = BigRational> {
    pub embeddable: bool,
    pub negative_type: bool,
    /// First proper subset `A` (bitmask order) with `λ_A ≠ λ_Ā`.
    pub asymmetric_set: Option<usize>,
    /// The cut combination equal to the input, when embeddable.
    pub witness: Option<CutCombination<T>>,
}

/// L1 embeddability: negative type with `λ_A = λ_Ā` on proper subsets. The
/// witness `½ Σ_C λ_C δ_{C|C̄}` is rebuilt and compared with the input
/// exactly before a positive verdict is returned.
pub fn is_l1_embeddable<T: Field>(d: &Diversity<T>) -> Result<L1Verdict<T>> {
    let cert = is_negative_type(d);
    let n = d.n();
    let full = subset::full(n);
    let lam = &cert.lambda;
    let asymmetric_set = (1..full).find(|&a| lam.get(a) != lam.get(full & !a));
    if !cert.negative_type || asymmetric_set.is_some() || n == 1 {
        let trivial = n == 1;
        return Ok(L1Verdict {
            embeddable: trivial,
            negative_type: cert.negative_type,
            asymmetric_set,
            witness: trivial
                .then(|| CutCombination::zero(d.labels().to_vec()))
                .transpose()?,
        });
    }
    let witness = symmetric_weights(lam);
    let rebuilt = combine_cuts(&witness)?;
    if rebuilt.table() != d.table() {
        let a = (0..=full)
            .find(|&a| rebuilt.value(a) != d.value(a))
            .unwrap_or(0);
        return Err(Error::Internal(format!(
            "cut reconstruction differs from the input at {{{}}}: {} vs {}",
            d.key(a),
            rebuilt.value(a),
            d.value(a)
        )));
    }
    Ok(L1Verdict {
        embeddable: true,
        negative_type: true,
        asymmetric_set: None,
        witness: Some(witness),
    })
}

/// Unordered-cut weights `(λ_C + λ_C̄) / 2`.
pub fn symmetric_weights<T: Field>(lam: &LambdaVector<T>) -> CutCombination<T> {
    let n = lam.n();
    let full = subset::full(n);
    let half = crate::scalar::half::<T>();
    let weights = (0..CutCombination::<T>::num_cuts(n))
        .map(|k| {
            let c = CutCombination::<T>::cut_of(k);
            (lam.get(c).clone() + lam.get(full & !c).clone()) * half.clone()
        })
        .collect();
    CutCombination {
        labels: lam.labels().to_vec(),
        weights,
    }
}

/// Optimal distortion with its certificate.
///
/// Normalization: the witness `δ₁'` satisfies `δ ≤ δ₁' ≤ α δ` on every set;
/// dividing it by `α` gives the `δ₁ ≤ δ ≤ α δ₁` form.
#[derive(Clone, Debug, PartialEq)]
pub struct DistortionResult<T = BigRational> {
    pub alpha: T,
    pub witness: CutCombination<T>,
    /// `b·y` of the verified dual solution; equals `alpha`.
    pub dual_bound: T,
    pub program: LinearProgram<T>,
    pub solution: LpSolution<T>,
}

pub const DISTORTION_NORMALIZATION: &str = "delta <= delta1 <= alpha * delta";

/// Variables `(y_1, …, y_K, c)`; for every `|A| ≥ 2` one row
/// `Σ y_C δ_C(A) ≥ δ(A)` then one row `Σ y_C δ_C(A) - c δ(A) ≤ 0`.
pub fn distortion_program<T: Field>(d: &Diversity<T>) -> Result<LinearProgram<T>> {
    let n = d.n();
    if n > MAX_DISTORTION {
        return Err(Error::SizeCap {
            what: "distortion LP",
            size: n,
            cap: MAX_DISTORTION,
        });
    }
    let full = subset::full(n);
    let k = CutCombination::<T>::num_cuts(n);
    let mut objective = vec![T::zero(); k + 1];
    objective[k] = T::one();
    let mut lp = LinearProgram::new(objective);
    for a in 0..=full {
        if subset::size(a) < 2 {
            continue;
        }
        let sep: Vec<T> = (0..k)
            .map(|s| crate::scalar::one_if(separates(CutCombination::<T>::cut_of(s), a, full)))
            .collect();
        let mut lower = sep.clone();
        lower.push(T::zero());
        lp.add(lower, Relation::Ge, d.value(a).clone());
        let mut upper = sep;
        upper.push(-d.value(a).clone());
        lp.add(upper, Relation::Le, T::zero());
    }
    if d.table().iter().all(|v| v.is_zero()) {
        let mut row = vec![T::zero(); k + 1];
        row[k] = T::one();
        lp.add(row, Relation::Ge, T::one());
    }
    Ok(lp)
}

pub fn min_distortion_l1<T: Field>(d: &Diversity<T>) -> Result<DistortionResult<T>> {
    let program = distortion_program(d)?;
    let solution = simplex_solve(&program).map_err(|e| match e {
        crate::lp::LpError::Certificate(_) => Error::Lp(e),
        other => Error::Internal(format!("distortion LP: {other}")),
    })?;
    let k = CutCombination::<T>::num_cuts(d.n());
    let witness = CutCombination::from_weights(d.labels().to_vec(), solution.x[..k].to_vec())?;
    let alpha = solution.x[k].clone();
    let full = d.full_mask();
    for a in 0..=full {
        let v = witness.value(a);
        if v < *d.value(a) || v > alpha.clone() * d.value(a).clone() {
            return Err(Error::Internal(format!(
                "distortion witness fails at {{{}}}",
                d.key(a)
            )));
        }
    }
    Ok(DistortionResult {
        alpha,
        dual_bound: solution.dual_objective.clone(),
        witness,
        program,
        solution,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SparsestCut<T> {
    pub cut: usize,
    pub ratio: T,
    pub aggregate_ratio: T,
}

/// Among the support cuts of `comb`, the one minimizing
/// `Σ_A c_A δ_cut(A) / Σ_A d_A δ_cut(A)` (smallest canonical mask on ties).
/// Its ratio never exceeds the ratio of the whole combination.
pub fn sparsest_ratio_cut<T: Field>(
    comb: &CutCombination<T>,
    c: &[T],
    d: &[T],
) -> Result<SparsestCut<T>> {
    let n = comb.n();
    let size = 1usize << n;
    for v in [c, d] {
        if v.len() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                got: v.len(),
            });
        }
    }
    let full = subset::full(n);
    let mut agg_num = T::zero();
    let mut agg_den = T::zero();
    let mut best: Option<(usize, T)> = None;
    for (cut, w) in comb.support() {
        let mut num = T::zero();
        let mut den = T::zero();
        for a in 0..size {
            if separates(cut, a, full) {
                num = num + c[a].clone();
                den = den + d[a].clone();
            }
        }
        agg_num = agg_num + w.clone() * num.clone();
        agg_den = agg_den + w.clone() * den.clone();
        if !den.is_positive() {
            continue;
        }
        let ratio = num / den;
        if best.as_ref().is_none_or(|(_, r)| ratio < *r) {
            best = Some((cut, ratio));
        }
    }
    let (cut, ratio) = best.ok_or(Error::ZeroDenominator)?;
    if !agg_den.is_positive() {
        return Err(Error::ZeroDenominator);
    }
    let aggregate_ratio = agg_num / agg_den;
    if ratio > aggregate_ratio {
        return Err(Error::Internal(
            "sparsest support cut exceeds the aggregate ratio".into(),
        ));
    }
    Ok(SparsestCut {
        cut,
        ratio,
        aggregate_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::default_labels as labels;
    use crate::transform::lambda_of;
    use num::BigRational;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn cut_diversity_values() {
        let d: Diversity<i64> = cut_diversity(labels(3), 0b001).unwrap();
        assert_eq!(*d.value(0b011), 1);
        assert_eq!(*d.value(0b101), 1);
        assert_eq!(*d.value(0b111), 1);
        assert_eq!(*d.value(0b110), 0);
        assert!(is_negative_type(&d).negative_type);
        assert!(d.validate(crate::ValidationMode::Fast).unwrap().ok);
        assert!(matches!(
            cut_diversity::<i64>(labels(3), 0),
            Err(Error::TrivialCut)
        ));
        assert!(matches!(
            cut_diversity::<i64>(labels(3), 0b111),
            Err(Error::TrivialCut)
        ));
    }

    #[test]
    fn keys_and_canonical_form() {
        let l = labels(3);
        assert_eq!(cut_key(&l, 0b001), "a|b,c");
        assert_eq!(cut_key(&l, 0b110), "a|b,c");
        assert_eq!(cut_key(&l, 0b100), "a,b|c");
        assert_eq!(canonical_cut(0b011, 3), 0b100);
    }

    #[test]
    fn combine_examples() {
        let single = CutCombination::from_cuts(labels(3), [(0b010, 1i64)]).unwrap();
        assert_eq!(
            combine_cuts(&single).unwrap(),
            cut_diversity(labels(3), 0b010).unwrap()
        );
        let halves = CutCombination::from_cuts(
            labels(3),
            [(0b001, q(1, 2)), (0b010, q(1, 2)), (0b100, q(1, 2))],
        )
        .unwrap();
        let d = combine_cuts(&halves).unwrap();
        assert_eq!(*d.value(0b011), q(1, 1));
        assert_eq!(*d.value(0b111), q(3, 2));
        let empty = CutCombination::<i64>::zero(labels(3)).unwrap();
        let z = combine_cuts(&empty).unwrap();
        assert!(z.table().iter().all(|v| *v == 0));
        assert!(!z.validate(crate::ValidationMode::Fast).unwrap().is_strict());
        assert!(matches!(
            CutCombination::from_cuts(labels(3), [(0b001, -1i64)]),
            Err(Error::NegativeWeight(_))
        ));
    }

    #[test]
    fn embeddability_examples() {
        let cut: Diversity<BigRational> = cut_diversity(labels(4), 0b0110).unwrap();
        let v = is_l1_embeddable(&cut).unwrap();
        assert!(v.embeddable);
        let w = v.witness.unwrap();
        assert_eq!(w.support().collect::<Vec<_>>(), vec![(0b0110, &q(1, 1))]);

        let ones: Diversity<BigRational> = Diversity::from_fn(labels(3), |_| q(1, 1)).unwrap();
        let v = is_l1_embeddable(&ones).unwrap();
        assert!(v.negative_type && !v.embeddable);
        assert_eq!(v.asymmetric_set, Some(0b001));
    }

    #[test]
    fn symmetric_lambda_of_combination() {
        let comb = CutCombination::from_cuts(
            labels(4),
            [(0b0010, q(2, 3)), (0b0110, q(1, 1)), (0b1000, q(5, 1))],
        )
        .unwrap();
        let d = combine_cuts(&comb).unwrap();
        let lam = lambda_of(&d);
        for a in 1..15usize {
            assert_eq!(lam.get(a), lam.get(15 & !a));
        }
        assert_eq!(is_l1_embeddable(&d).unwrap().witness.unwrap(), comb);
    }

    #[test]
    fn distortion_of_all_ones_three_points() {
        let ones: Diversity<BigRational> = Diversity::from_fn(labels(3), |_| q(1, 1)).unwrap();
        let r = min_distortion_l1(&ones).unwrap();
        assert_eq!(r.alpha, q(3, 2));
        assert_eq!(r.dual_bound, q(3, 2));
    }

    #[test]
    fn distortion_of_cut_combination_is_one() {
        let comb =
            CutCombination::from_cuts(labels(4), [(0b0010, q(2, 3)), (0b1100, q(1, 1))]).unwrap();
        let d = combine_cuts(&comb).unwrap();
        assert_eq!(min_distortion_l1(&d).unwrap().alpha, q(1, 1));
        let one: Diversity<BigRational> = Diversity::zero(labels(1)).unwrap();
        assert_eq!(min_distortion_l1(&one).unwrap().alpha, q(1, 1));
    }

    #[test]
    fn sparsest_cut_picks_the_lower_ratio() {
        let l = labels(3);
        let comb = CutCombination::from_cuts(l, [(0b001, q(1, 1)), (0b100, q(1, 1))]).unwrap();
        // cut {a}: separates ab, ac, abc; cut {c}: separates ac, bc, abc
        let mut c = vec![q(0, 1); 8];
        let mut d = vec![q(0, 1); 8];
        c[0b011] = q(1, 1);
        d[0b011] = q(3, 1);
        c[0b110] = q(1, 1);
        d[0b110] = q(2, 1);
        let s = sparsest_ratio_cut(&comb, &c, &d).unwrap();
        assert_eq!(s.cut, canonical_cut(0b001, 3));
        assert_eq!(s.ratio, q(1, 3));
        assert_eq!(s.aggregate_ratio, q(2, 5));
        let single = CutCombination::from_cuts(labels(3), [(0b100, q(1, 1))]).unwrap();
        assert_eq!(sparsest_ratio_cut(&single, &c, &d).unwrap().cut, 0b100);
        let zero_d = vec![q(0, 1); 8];
        assert!(matches!(
            sparsest_ratio_cut(&comb, &c, &zero_d),
            Err(Error::ZeroDenominator)
        ));
    }
}

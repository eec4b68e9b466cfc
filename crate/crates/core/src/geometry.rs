//! The diversity `δ_neg(A) = Σ_i max{a_i : a ∈ A} - min{Σ_i a_i : a ∈ A}` on
//! `R^k`, which is universal for finite negative-type diversities.

use num::BigRational;

use crate::diversity::Diversity;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::subset::{self, MAX_DENSE};
use crate::transform::{is_negative_type, NotNegativeType};

/// Labelled points of `R^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfiguration<T = BigRational> {
    dim: usize,
    labels: Vec<String>,
    points: Vec<Vec<T>>,
}

impl<T: Scalar> PointConfiguration<T> {
    pub fn new(dim: usize, labels: Vec<String>, points: Vec<Vec<T>>) -> Result<Self> {
        if labels.len() != points.len() {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                got: points.len(),
            });
        }
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.contains([',', '|']) {
                return Err(Error::Parse(format!("invalid label `{l}`")));
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.len(),
            });
        }
        Ok(Self {
            dim,
            labels,
            points,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `δ_neg` of the points selected by `mask`.
    pub fn delta_neg(&self, mask: usize) -> Result<T> {
        if mask == 0 {
            return Err(Error::EmptySubset);
        }
        if mask >> self.len() != 0 {
            return Err(Error::Parse(format!(
                "subset {mask:#b} has points outside the configuration"
            )));
        }
        Ok(delta_neg(
            subset::members(mask).map(|i| self.points[i].as_slice()),
        ))
    }

    /// The finite diversity induced on the configuration.
    pub fn diversity(&self) -> Result<Diversity<T>> {
        if self.len() > MAX_DENSE {
            return Err(Error::SizeCap {
                what: "point configuration",
                size: self.len(),
                cap: MAX_DENSE,
            });
        }
        Diversity::from_fn(self.labels.clone(), |mask| {
            delta_neg(subset::members(mask).map(|i| self.points[i].as_slice()))
        })
    }

    /// `x ↦ (x, -Σx)`: every image sums to zero and `δ_neg` is unchanged.
    pub fn zero_sum_lift(&self) -> Self {
        let points = self
            .points
            .iter()
            .map(|p| {
                let total = p.iter().fold(T::zero(), |acc, v| acc + v.clone());
                let mut q = p.clone();
                q.push(-total);
                q
            })
            .collect();
        Self {
            dim: self.dim + 1,
            labels: self.labels.clone(),
            points,
        }
    }
}

/// `δ_neg` of a nonempty family of equal-length vectors. Returns zero for an
/// empty family.
pub fn delta_neg<'a, T: Scalar>(points: impl IntoIterator<Item = &'a [T]>) -> T {
    let mut maxima: Option<Vec<T>> = None;
    let mut min_sum: Option<T> = None;
    for p in points {
        let s = p.iter().fold(T::zero(), |acc, v| acc + v.clone());
        if min_sum.as_ref().is_none_or(|m| s < *m) {
            min_sum = Some(s);
        }
        match &mut maxima {
            None => maxima = Some(p.to_vec()),
            Some(mx) => {
                for (m, v) in mx.iter_mut().zip(p) {
                    if *v > *m {
                        *m = v.clone();
                    }
                }
            }
        }
    }
    match (maxima, min_sum) {
        (Some(mx), Some(ms)) => mx.into_iter().fold(T::zero(), |acc, v| acc + v) - ms,
        _ => T::zero(),
    }
}

pub fn diversity_from_points<T: Scalar>(config: &PointConfiguration<T>) -> Result<Diversity<T>> {
    config.diversity()
}

/// `φ: X → R^(2^n - 1)` with coordinates indexed by the nonempty subsets `B`
/// in increasing bitmask order and `φ(x)_B = -λ_B` when `x ∈ B`, else 0.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingMap<T = BigRational> {
    labels: Vec<String>,
    coords: Vec<Vec<T>>,
}

impl<T: Scalar> EmbeddingMap<T> {
    pub fn new(labels: Vec<String>, coords: Vec<Vec<T>>) -> Result<Self> {
        let dim = (1usize << labels.len()) - 1;
        if coords.len() != labels.len() {
            return Err(Error::DimensionMismatch {
                expected: labels.len(),
                got: coords.len(),
            });
        }
        if let Some(c) = coords.iter().find(|c| c.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: c.len(),
            });
        }
        Ok(Self { labels, coords })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        (1usize << self.labels.len()) - 1
    }

    /// Subset indexing coordinate `j`.
    pub fn coordinate_set(j: usize) -> usize {
        j + 1
    }

    pub fn coords(&self) -> &[Vec<T>] {
        &self.coords
    }

    pub fn coords_mut(&mut self) -> &mut [Vec<T>] {
        &mut self.coords
    }

    pub fn to_points(&self) -> PointConfiguration<T> {
        PointConfiguration {
            dim: self.dim(),
            labels: self.labels.clone(),
            points: self.coords.clone(),
        }
    }
}

pub fn universal_embedding<T: Scalar>(
    d: &Diversity<T>,
) -> Result<EmbeddingMap<T>, NotNegativeType<T>> {
    let lambda = is_negative_type(d).into_lambda()?;
    let n = d.n();
    let dim = (1usize << n) - 1;
    let coords = (0..n)
        .map(|x| {
            (0..dim)
                .map(|j| {
                    let b = EmbeddingMap::<T>::coordinate_set(j);
                    if b >> x & 1 == 1 {
                        -lambda.get(b).clone()
                    } else {
                        T::zero()
                    }
                })
                .collect()
        })
        .collect();
    Ok(EmbeddingMap {
        labels: d.labels().to_vec(),
        coords,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsometryReport<T> {
    pub ok: bool,
    pub subsets_checked: usize,
    /// First nonempty subset `A` (bitmask order) with `δ_neg(φ(A)) ≠ δ(A)`,
    /// as `(A, δ(A), δ_neg(φ(A)))`.
    pub mismatch: Option<(usize, T, T)>,
}

pub fn verify_isometry<T: Scalar>(
    d: &Diversity<T>,
    map: &EmbeddingMap<T>,
) -> Result<IsometryReport<T>> {
    if d.labels() != map.labels() {
        return Err(Error::Parse(
            "embedding labels differ from the diversity labels".into(),
        ));
    }
    let mut checked = 0;
    for a in 1..d.table().len() {
        checked += 1;
        let got = delta_neg(subset::members(a).map(|i| map.coords[i].as_slice()));
        if got != *d.value(a) {
            return Ok(IsometryReport {
                ok: false,
                subsets_checked: checked,
                mismatch: Some((a, d.value(a).clone(), got)),
            });
        }
    }
    Ok(IsometryReport {
        ok: true,
        subsets_checked: checked,
        mismatch: None,
    })
}

//! The metric `D(A,B) = δ(A∪B) - ½δ(A) - ½δ(B)` on nonempty subsets, its
//! decomposition into cut metrics, and floating-point negative-type and
//! Schoenberg (classical scaling) routines for distance matrices.

use nalgebra::{DMatrix, SymmetricEigen};
use num::BigRational;

use crate::diversity::{Diversity, MetricTable};
use crate::error::{Error, Result};
use crate::l1cone::{combine_cuts, symmetric_weights, CutCombination};
use crate::scalar::{half, to_f64, Field, Scalar};
use crate::subset;
use crate::transform::{
    is_negative_type, max_projected_eigenvalue, NotNegativeType, SpectralVerdict,
};

pub const MAX_POWERSET: usize = 12;
/// Largest literal cut-metric reconstruction (`(2^n - 1)^2 · 2^n` terms).
pub const MAX_RECONSTRUCT: usize = 6;
/// Largest matrix handed to the spectral routines.
pub const MAX_SPECTRAL_POINTS: usize = 64;

/// `D` over the nonempty subsets; row/column `i` is subset `i + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSetMetric<T = BigRational> {
    labels: Vec<String>,
    d: Vec<T>,
}

impl<T: Field> PowerSetMetric<T> {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Number of points, `2^n - 1`.
    pub fn size(&self) -> usize {
        (1usize << self.labels.len()) - 1
    }

    /// `D(A, B)` for nonempty bitmasks.
    pub fn get(&self, a: usize, b: usize) -> &T {
        &self.d[(a - 1) * self.size() + (b - 1)]
    }

    /// `D` restricted to singletons.
    pub fn on_singletons(&self) -> Result<MetricTable<T>> {
        let n = self.labels.len();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| self.get(1 << i, 1 << j).clone()).collect())
            .collect();
        MetricTable::from_rows(self.labels.clone(), rows)
    }

    /// First `(A, B, C)` with `D(A,C) > D(A,B) + D(B,C)`.
    pub fn first_triangle_violation(&self) -> Option<(usize, usize, usize)> {
        let s = self.size();
        for a in 1..=s {
            for b in 1..=s {
                for c in 1..=s {
                    if self.get(a, c).clone() > self.get(a, b).clone() + self.get(b, c).clone() {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

pub fn powerset_metric<T: Field>(d: &Diversity<T>) -> Result<PowerSetMetric<T>> {
    let n = d.n();
    if n > MAX_POWERSET {
        return Err(Error::SizeCap {
            what: "power-set metric",
            size: n,
            cap: MAX_POWERSET,
        });
    }
    let size = (1usize << n) - 1;
    let h = half::<T>();
    let t = d.table();
    let mut out = Vec::with_capacity(size * size);
    for a in 1..=size {
        for b in 1..=size {
            out.push(t[a | b].clone() - h.clone() * t[a].clone() - h.clone() * t[b].clone());
        }
    }
    Ok(PowerSetMetric {
        labels: d.labels().to_vec(),
        d: out,
    })
}

/// `2D = Σ_C w_C · d_C` where `d_C(A, B) = 1` iff exactly one of `A ⊆ C`,
/// `B ⊆ C` holds; `w_C = λ_C` on proper nonempty `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct CutMetricDecomposition<T = BigRational> {
    labels: Vec<String>,
    weights: Vec<(usize, T)>,
}

impl<T: Field> CutMetricDecomposition<T> {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `(C, w_C)` for every proper nonempty `C`, increasing bitmask.
    pub fn weights(&self) -> &[(usize, T)] {
        &self.weights
    }

    pub fn weights_mut(&mut self) -> &mut [(usize, T)] {
        &mut self.weights
    }

    /// `Σ_C w_C d_C(A, B)` summed literally, for every pair of nonempty sets.
    /// Returned in the layout of [`PowerSetMetric`].
    pub fn reconstruct_doubled(&self) -> Result<Vec<T>> {
        let n = self.labels.len();
        if n > MAX_RECONSTRUCT {
            return Err(Error::SizeCap {
                what: "cut-metric reconstruction",
                size: n,
                cap: MAX_RECONSTRUCT,
            });
        }
        let size = (1usize << n) - 1;
        let mut out = vec![T::zero(); size * size];
        for (c, w) in &self.weights {
            if w.is_zero() {
                continue;
            }
            for a in 1..=size {
                let a_in = subset::is_subset(a, *c);
                for b in 1..=size {
                    if a_in != subset::is_subset(b, *c) {
                        let e = &mut out[(a - 1) * size + (b - 1)];
                        *e = e.clone() + w.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact check `2D = Σ_C w_C d_C`.
    pub fn reconstructs(&self, metric: &PowerSetMetric<T>) -> Result<bool> {
        let two = T::one() + T::one();
        let rebuilt = self.reconstruct_doubled()?;
        Ok(rebuilt
            .iter()
            .zip(&metric.d)
            .all(|(r, d)| *r == two.clone() * d.clone()))
    }
}

pub fn cut_decomposition<T: Field>(
    d: &Diversity<T>,
) -> Result<CutMetricDecomposition<T>, NotNegativeType<T>> {
    let lambda = is_negative_type(d).into_lambda()?;
    let full = d.full_mask();
    Ok(CutMetricDecomposition {
        labels: d.labels().to_vec(),
        weights: (1..full).map(|c| (c, lambda.get(c).clone())).collect(),
    })
}

/// Read access to a square distance matrix in floating point.
pub trait DistanceMatrix {
    fn size(&self) -> usize;
    fn distance(&self, i: usize, j: usize) -> f64;
}

impl<T: Scalar> DistanceMatrix for MetricTable<T> {
    fn size(&self) -> usize {
        self.n()
    }

    fn distance(&self, i: usize, j: usize) -> f64 {
        to_f64(self.get(i, j))
    }
}

impl<T: Field> DistanceMatrix for PowerSetMetric<T> {
    fn size(&self) -> usize {
        PowerSetMetric::size(self)
    }

    fn distance(&self, i: usize, j: usize) -> f64 {
        to_f64(self.get(i + 1, j + 1))
    }
}

fn dense<M: DistanceMatrix + ?Sized>(m: &M) -> Result<DMatrix<f64>> {
    let s = m.size();
    if s > MAX_SPECTRAL_POINTS {
        return Err(Error::SizeCap {
            what: "distance matrix",
            size: s,
            cap: MAX_SPECTRAL_POINTS,
        });
    }
    Ok(DMatrix::from_fn(s, s, |i, j| m.distance(i, j)))
}

/// `Σ x_a x_b d(a,b) ≤ 0` on zero-sum `x`, decided by the largest eigenvalue
/// of the distance matrix compressed to the zero-sum subspace.
pub fn metric_negative_type<M: DistanceMatrix + ?Sized>(
    m: &M,
    tol: f64,
) -> Result<SpectralVerdict> {
    let mu = max_projected_eigenvalue(dense(m)?);
    Ok(SpectralVerdict {
        negative_type: mu <= tol,
        max_eigenvalue: mu,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct SchoenbergEmbedding {
    /// One row per point.
    pub coords: Vec<Vec<f64>>,
    /// Largest `|‖p_i - p_j‖² - D(i,j)|`.
    pub max_residual: f64,
}

/// Points with `‖p_i - p_j‖² ≈ D(i, j)` by classical scaling of
/// `-½ J D J`. Eigenvalues in `(-tol, tol]` are dropped; anything below
/// `-tol` means `D` is not of negative type.
pub fn schoenberg_embedding<M: DistanceMatrix + ?Sized>(
    m: &M,
    tol: f64,
) -> Result<SchoenbergEmbedding> {
    let d = dense(m)?;
    let s = d.nrows();
    if s == 0 {
        return Ok(SchoenbergEmbedding {
            coords: Vec::new(),
            max_residual: 0.0,
        });
    }
    let j = DMatrix::<f64>::identity(s, s) - DMatrix::<f64>::from_element(s, s, 1.0 / s as f64);
    let b = (&j * &d * &j) * -0.5;
    let b = (&b + b.transpose()) * 0.5;
    let eig = SymmetricEigen::new(b);
    let min = eig
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    if min < -tol {
        return Err(Error::NotNegativeTypeMetric(min));
    }
    let kept: Vec<usize> = (0..s).filter(|&k| eig.eigenvalues[k] > tol).collect();
    let coords: Vec<Vec<f64>> = (0..s)
        .map(|i| {
            kept.iter()
                .map(|&k| eig.eigenvectors[(i, k)] * eig.eigenvalues[k].sqrt())
                .collect()
        })
        .collect();
    let mut max_residual = 0.0f64;
    for i in 0..s {
        for k in 0..s {
            let sq: f64 = coords[i]
                .iter()
                .zip(&coords[k])
                .map(|(x, y)| (x - y) * (x - y))
                .sum();
            max_residual = max_residual.max((sq - d[(i, k)]).abs());
        }
    }
    Ok(SchoenbergEmbedding {
        coords,
        max_residual,
    })
}

/// Cut weights `(λ_C + λ_C̄)/2` realizing the induced metric of a
/// negative-type diversity; the reconstruction is checked exactly.
pub fn l1_embed_induced_metric<T: Field>(d: &Diversity<T>) -> Result<CutCombination<T>> {
    let lambda = is_negative_type(d).into_lambda()?;
    let weights = symmetric_weights(&lambda);
    let rebuilt = combine_cuts(&weights)?;
    let n = d.n();
    for i in 0..n {
        for j in i + 1..n {
            let pair = (1 << i) | (1 << j);
            if rebuilt.value(pair) != d.value(pair) {
                return Err(Error::Internal(format!(
                    "induced metric reconstruction differs at {{{}}}",
                    d.key(pair)
                )));
            }
        }
    }
    Ok(weights)
}

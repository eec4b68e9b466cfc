//! The λ vector of a diversity (signed Möbius transform over supersets), its
//! inverse, the negative-type test with certificates, and the quadratic form
//! `Σ x_A x_B φ(A∪B)` evaluated two independent ways.

use nalgebra::{DMatrix, SymmetricEigen};
use num::BigRational;

use crate::diversity::{check_labels, Diversity};
use crate::error::{Error, Result};
use crate::scalar::{sign, Scalar};
use crate::subset;

/// Largest ground set for the dense spectral oracle (`2^n - 1` square matrix).
pub const MAX_SPECTRAL: usize = 5;
pub const DEFAULT_TOL: f64 = 1e-9;

/// `λ_A = Σ_{B ⊇ A} (-1)^{|A|+|B|+1} δ(B)` for every subset `A`.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaVector<T = BigRational> {
    labels: Vec<String>,
    lam: Vec<T>,
}

impl<T: Scalar> LambdaVector<T> {
    pub fn from_values(labels: Vec<String>, lam: Vec<T>) -> Result<Self> {
        check_labels(&labels)?;
        let expected = 1usize << labels.len();
        if lam.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                got: lam.len(),
            });
        }
        Ok(Self { labels, lam })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn values(&self) -> &[T] {
        &self.lam
    }

    pub fn get(&self, mask: usize) -> &T {
        &self.lam[mask]
    }

    /// First proper nonempty subset (in bitmask order) with `λ < threshold`.
    fn first_below(&self, threshold: &T) -> Option<usize> {
        let full = subset::full(self.n());
        (1..full).find(|&a| self.lam[a] < *threshold)
    }
}

/// Signed superset-sum transform of an arbitrary set function, `O(n 2^n)`.
pub fn mobius_lambda<T: Scalar>(phi: &[T]) -> Vec<T> {
    let mut g: Vec<T> = phi
        .iter()
        .enumerate()
        .map(|(b, v)| {
            if subset::size(b).is_multiple_of(2) {
                v.clone()
            } else {
                -v.clone()
            }
        })
        .collect();
    subset::superset_sums(&mut g);
    for (a, v) in g.iter_mut().enumerate() {
        if subset::size(a).is_multiple_of(2) {
            *v = -v.clone();
        }
    }
    g
}

/// Inverse of [`mobius_lambda`]: `φ(A) = -Σ_{B ⊇ A} λ_B`.
pub fn mobius_delta<T: Scalar>(lam: &[T]) -> Vec<T> {
    let mut t = lam.to_vec();
    subset::superset_sums(&mut t);
    for v in &mut t {
        *v = -v.clone();
    }
    t
}

pub fn lambda_of<T: Scalar>(d: &Diversity<T>) -> LambdaVector<T> {
    LambdaVector {
        labels: d.labels().to_vec(),
        lam: mobius_lambda(d.table()),
    }
}

/// Rebuilds the diversity table from λ. The result must vanish on the empty
/// set and singletons and be nonnegative; the first offending subset is
/// reported otherwise.
pub fn delta_of<T: Scalar>(lam: &LambdaVector<T>) -> Result<Diversity<T>> {
    let table = mobius_delta(&lam.lam);
    for (mask, v) in table.iter().enumerate() {
        let bad = if subset::size(mask) <= 1 {
            (!v.is_zero()).then_some("value must vanish on sets with at most one point")
        } else {
            v.is_negative().then_some("value must be nonnegative")
        };
        if let Some(reason) = bad {
            return Err(Error::Precondition {
                subset: subset::key(&lam.labels, mask),
                reason: format!("{reason} (got {v})"),
            });
        }
    }
    Diversity::from_table(lam.labels.clone(), table)
}

/// A violated λ inequality together with the zero-sum test vector that
/// exposes it.
#[derive(Clone, Debug, PartialEq)]
pub struct NegativityWitness<T> {
    /// The subset `U` with `λ_U < 0`.
    pub set: usize,
    /// `x_A = (-1)^{|A|+|U|}` for `A ⊇ U`, zero elsewhere.
    pub vector: Vec<T>,
    /// `Σ x_A x_B δ(A∪B) = -λ_U`, positive.
    pub form_value: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NegativityCertificate<T = BigRational> {
    pub negative_type: bool,
    pub lambda: LambdaVector<T>,
    pub witness: Option<NegativityWitness<T>>,
}

/// Returned by constructions that require a negative-type input.
#[derive(Clone, Debug, PartialEq)]
pub struct NotNegativeType<T>(pub Box<NegativityCertificate<T>>);

impl<T: Scalar> std::fmt::Display for NotNegativeType<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.0.witness {
            Some(w) => write!(
                f,
                "not of negative type: lambda of {{{}}} is {}",
                subset::key(self.0.lambda.labels(), w.set),
                -w.form_value.clone()
            ),
            None => write!(f, "not of negative type"),
        }
    }
}

impl<T: Scalar> std::error::Error for NotNegativeType<T> {}

impl<T: Scalar> From<NotNegativeType<T>> for Error {
    fn from(e: NotNegativeType<T>) -> Self {
        let (witness, form_value) = match &e.0.witness {
            Some(w) => (
                subset::key(e.0.lambda.labels(), w.set),
                w.form_value.to_string(),
            ),
            None => (String::new(), String::new()),
        };
        Error::NotNegativeType {
            witness,
            form_value,
        }
    }
}

impl<T: Scalar> NegativityCertificate<T> {
    /// `Ok(λ)` for negative-type inputs, the certificate as error otherwise.
    pub fn into_lambda(self) -> Result<LambdaVector<T>, NotNegativeType<T>> {
        if self.negative_type {
            Ok(self.lambda)
        } else {
            Err(NotNegativeType(Box::new(self)))
        }
    }
}

/// Test vector isolating `λ_U` in the quadratic form.
pub fn witness_vector<T: Scalar>(n: usize, u: usize) -> Vec<T> {
    let u_size = subset::size(u);
    (0..1usize << n)
        .map(|a| {
            if subset::is_subset(u, a) {
                sign(subset::size(a) + u_size)
            } else {
                T::zero()
            }
        })
        .collect()
}

fn certify<T: Scalar>(lambda: LambdaVector<T>, threshold: &T) -> NegativityCertificate<T> {
    let witness = lambda.first_below(threshold).map(|u| NegativityWitness {
        set: u,
        vector: witness_vector(lambda.n(), u),
        form_value: -lambda.lam[u].clone(),
    });
    NegativityCertificate {
        negative_type: witness.is_none(),
        lambda,
        witness,
    }
}

/// Negative type holds iff `λ_A ≥ 0` for every `A ≠ ∅, X`.
pub fn is_negative_type<T: Scalar>(d: &Diversity<T>) -> NegativityCertificate<T> {
    certify(lambda_of(d), &T::zero())
}

/// `p`-negative type for a positive integer exponent: the λ test applied to
/// the pointwise power `δ^p`. The certificate refers to `δ^p`.
pub fn is_p_negative<T: Scalar>(d: &Diversity<T>, p: u32) -> Result<NegativityCertificate<T>> {
    if p == 0 {
        return Err(Error::NonPositiveExponent);
    }
    let powered = d.map(|v| num::pow(v.clone(), p as usize))?;
    Ok(is_negative_type(&powered))
}

/// Real exponent variant in floating point: `λ_A ≥ -tol` counts as
/// nonnegative.
pub fn is_p_negative_float<T: Scalar>(
    d: &Diversity<T>,
    p: f64,
    tol: f64,
) -> Result<NegativityCertificate<f64>> {
    if !p.is_finite() || p <= 0.0 {
        return Err(Error::NonPositiveExponent);
    }
    let powered = d.map(|v| crate::scalar::to_f64(v).powf(p))?;
    Ok(certify(lambda_of(&powered), &-tol))
}

fn check_form_dims<T>(phi: &[T], x: &[T]) -> Result<()> {
    if !phi.len().is_power_of_two() {
        return Err(Error::Parse(
            "set function length must be a power of two".into(),
        ));
    }
    if x.len() != phi.len() {
        return Err(Error::DimensionMismatch {
            expected: phi.len(),
            got: x.len(),
        });
    }
    Ok(())
}

/// `Σ_{A,B} x_A x_B φ(A∪B)` by direct double summation.
pub fn quadratic_form<T: Scalar>(phi: &[T], x: &[T]) -> Result<T> {
    check_form_dims(phi, x)?;
    let support: Vec<usize> = (0..x.len()).filter(|&a| !x[a].is_zero()).collect();
    let mut total = T::zero();
    for &a in &support {
        let mut row = T::zero();
        for &b in &support {
            row = row + x[b].clone() * phi[a | b].clone();
        }
        total = total + x[a].clone() * row;
    }
    Ok(total)
}

/// The same form through λ: `-Σ_C λ_C (Σ_{A ⊆ C} x_A)^2`.
pub fn quadratic_form_via_lambda<T: Scalar>(phi: &[T], x: &[T]) -> Result<T> {
    check_form_dims(phi, x)?;
    let lam = mobius_lambda(phi);
    let mut sums = x.to_vec();
    subset::subset_sums(&mut sums);
    let total = lam
        .iter()
        .zip(&sums)
        .filter(|(_, s)| !s.is_zero())
        .fold(T::zero(), |acc, (l, s)| {
            acc + l.clone() * s.clone() * s.clone()
        });
    Ok(-total)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralVerdict {
    pub negative_type: bool,
    /// Largest eigenvalue of the matrix compressed to zero-sum vectors.
    pub max_eigenvalue: f64,
}

/// Largest eigenvalue of `M` restricted to zero-sum vectors, computed as
/// `Hᵀ M H` for an orthonormal (Helmert) basis `H` of that subspace.
pub(crate) fn max_projected_eigenvalue(m: DMatrix<f64>) -> f64 {
    let size = m.nrows();
    if size <= 1 {
        return 0.0;
    }
    let h = DMatrix::<f64>::from_fn(size, size - 1, |i, k| {
        let k = k + 1;
        let norm = ((k * (k + 1)) as f64).sqrt();
        match i.cmp(&k) {
            std::cmp::Ordering::Less => 1.0 / norm,
            std::cmp::Ordering::Equal => -(k as f64) / norm,
            std::cmp::Ordering::Greater => 0.0,
        }
    });
    let c = h.transpose() * m * &h;
    let sym = (&c + c.transpose()) * 0.5;
    SymmetricEigen::new(sym)
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Floating-point check of the defining inequality, independent of λ.
pub fn spectral_negativity_oracle<T: Scalar>(
    d: &Diversity<T>,
    tol: f64,
) -> Result<SpectralVerdict> {
    if d.n() > MAX_SPECTRAL {
        return Err(Error::SizeCap {
            what: "spectral oracle",
            size: d.n(),
            cap: MAX_SPECTRAL,
        });
    }
    let size = d.table().len() - 1;
    let t: Vec<f64> = d.table().iter().map(crate::scalar::to_f64).collect();
    let m = DMatrix::from_fn(size, size, |i, j| t[(i + 1) | (j + 1)]);
    let mu = max_projected_eigenvalue(m);
    Ok(SpectralVerdict {
        negative_type: mu <= tol,
        max_eigenvalue: mu,
    })
}

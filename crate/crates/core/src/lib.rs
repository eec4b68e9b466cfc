//! Negative-type diversities on finite sets.
//!
//! A diversity assigns a nonnegative value to every subset of a finite ground
//! set. This crate stores diversities as dense tables over the subset lattice
//! and provides
//!
//! * axiom validation, restriction and induced metrics ([`diversity`]),
//! * the λ transform, the negative-type test with certificates and the
//!   associated quadratic form ([`transform`]),
//! * the universal `δ_neg` embedding ([`geometry`]),
//! * the power-set metric and its cut decomposition ([`metricization`]),
//! * cut diversities, L1 embeddability and exact minimal L1 distortion
//!   ([`l1cone`], on top of the exact simplex in [`lp`]),
//! * the hypergraph diversity on `m`-subsets of `[2m]` with brute-force cut
//!   enumeration ([`hypergraph`]),
//! * JSON formats ([`format`]) and the command line front end ([`cli`]).
//!
//! All algorithms are generic over a [`Scalar`]; the aliases below fix the
//! exact big-rational instantiation used by the CLI and the JSON formats.

pub mod cli;
pub mod diversity;
pub mod error;
pub mod format;
pub mod geometry;
pub mod hypergraph;
pub mod l1cone;
pub mod lp;
pub mod metricization;
pub mod scalar;
pub mod subset;
pub mod transform;

pub use diversity::{
    validate_axioms, MetricTable, ValidationMode, ValidationReport, Violation, ViolationKind,
};
pub use error::{Error, Result};
pub use scalar::{Field, Scalar};

/// Exact arbitrary-precision rational.
pub type Rational = num::BigRational;

pub type Diversity<T = Rational> = diversity::Diversity<T>;
pub type RationalDiversity = diversity::Diversity<Rational>;
pub type FloatDiversity = diversity::Diversity<f64>;
pub type IntDiversity = diversity::Diversity<i64>;
pub type LambdaVector<T = Rational> = transform::LambdaVector<T>;
pub type RationalLambda = transform::LambdaVector<Rational>;
pub type NegativityCertificate<T = Rational> = transform::NegativityCertificate<T>;
pub type PointConfiguration<T = Rational> = geometry::PointConfiguration<T>;
pub type RationalPoints = geometry::PointConfiguration<Rational>;
pub type EmbeddingMap<T = Rational> = geometry::EmbeddingMap<T>;
pub type PowerSetMetric<T = Rational> = metricization::PowerSetMetric<T>;
pub type CutCombination<T = Rational> = l1cone::CutCombination<T>;
pub type RationalCutCombination = l1cone::CutCombination<Rational>;
pub type DistortionResult<T = Rational> = l1cone::DistortionResult<T>;
pub use hypergraph::{CutEvaluation, HypergraphInstance};

/// `a, b, c, …` for up to 26 points, `p0, p1, …` beyond.
pub fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if n <= 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("p{i}")
            }
        })
        .collect()
}

//! Curve parameters and group arithmetic.
//!
//! [`CurveDescriptor`] models the `key value` parameter files for every curve
//! family; only type `a` (`y² = x³ + x`, `q ≡ 3 mod 4`) is executable. Group
//! arithmetic itself is written for any short Weierstrass curve over a prime
//! field so that point compression can be exercised on the other families'
//! base curves as well.

mod descriptor;
mod generate;
mod group;
mod point;
mod scalar;
pub mod shipped;

pub use descriptor::{CurveDescriptor, CurveType, ElementSizes};
pub use generate::{generate_type_a, DEFAULT_ATTEMPT_BUDGET};
pub use group::Group;
pub use point::{Curve, Point};
pub use scalar::Scalar;

use thiserror::Error;

use crate::fieldmath::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("missing required key `{key}` for type {curve_type}")]
    MissingKey {
        key: &'static str,
        curve_type: CurveType,
    },
    #[error("invalid parameters: {0}")]
    Validation(String),
    #[error("parameter generation gave up after {0} attempts")]
    GenerationTimeout(usize),
    #[error("invalid generation request: {0}")]
    Precondition(String),
    #[error("curve type {0} has no executable group arithmetic")]
    NotExecutable(CurveType),
    #[error("no generator found for the order-r subgroup")]
    NoGenerator,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point is not in the order-r subgroup")]
    NotInSubgroup,
    #[error(transparent)]
    Field(#[from] FieldError),
}

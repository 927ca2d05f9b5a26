//! Signature shortening and size accounting.
//!
//! * [`compress_point`] / [`decompress_point`]: `prefix ‖ X` with prefix
//!   `0x02` for even `Y` and `0x03` for odd `Y`.
//! * [`compress_hash_truncate`] / [`compress_hash_mod_r`]: the two ways of
//!   shrinking a 32-byte challenge hash.
//! * [`size_report`]: analytical signature sizes per scheme and curve.

mod compress;
mod hash;
mod sizes;

pub use compress::{compress_point, decompress_point, CompressedPoint, PREFIX_EVEN, PREFIX_ODD};
pub use hash::{compress_hash_mod_r, compress_hash_truncate, TRUNCATED_HASH_BYTES};
pub use sizes::{
    element_size_table, format_csv, format_element_table, format_table, size_report,
    size_report_by_name, ElementSizeRow, SizeRow, SizeScheme, FULL_HASH_BYTES,
};

use thiserror::Error;

use crate::curve::CurveError;
use crate::fieldmath::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("the point at infinity has no compressed form")]
    InfinityNotCompressible,
    #[error("invalid compression prefix {0:#04x}")]
    InvalidPrefix(u8),
    #[error("X does not correspond to a curve point")]
    NotOnCurve,
    #[error("expected {expected} bytes, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("malformed hex: {0}")]
    BadHex(String),
    #[error("unknown scheme `{0}`")]
    UnknownScheme(String),
    #[error("unknown curve `{0}`")]
    UnknownCurve(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

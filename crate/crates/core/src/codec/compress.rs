use std::fmt;

use num_bigint::BigUint;
use num_traits::Num;

use super::CodecError;
use crate::curve::{Curve, Point};
use crate::fieldmath::{to_fixed_be, FieldElement};

pub const PREFIX_EVEN: u8 = 0x02;
pub const PREFIX_ODD: u8 = 0x03;

/// A curve point reduced to its abscissa plus the parity of its ordinate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CompressedPoint {
    prefix: u8,
    x_bytes: Vec<u8>,
}

impl CompressedPoint {
    pub fn prefix(&self) -> u8 {
        self.prefix
    }

    pub fn x_bytes(&self) -> &[u8] {
        &self.x_bytes
    }

    pub fn len(&self) -> usize {
        1 + self.x_bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `prefix ‖ X`.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.len());
        out.push(self.prefix);
        out.extend_from_slice(&self.x_bytes);
        out
    }

    /// Splits `prefix ‖ X` for a field of `field_bytes` bytes. The prefix is
    /// checked here; whether `X` lies on the curve is left to decompression.
    pub fn from_bytes(bytes: &[u8], field_bytes: usize) -> Result<Self, CodecError> {
        if bytes.len() != field_bytes + 1 {
            return Err(CodecError::BadLength {
                expected: field_bytes + 1,
                got: bytes.len(),
            });
        }
        let prefix = bytes[0];
        if prefix != PREFIX_EVEN && prefix != PREFIX_ODD {
            return Err(CodecError::InvalidPrefix(prefix));
        }
        Ok(Self {
            prefix,
            x_bytes: bytes[1..].to_vec(),
        })
    }

    /// Display form: one hex digit `2`/`3` followed by `X` in hex without
    /// leading zeros.
    pub fn to_hex(&self) -> String {
        let x = BigUint::from_bytes_be(&self.x_bytes);
        format!("{:x}{}", self.prefix, x.to_str_radix(16))
    }

    /// Parses the display form; either letter case is accepted.
    pub fn from_hex(text: &str, field_bytes: usize) -> Result<Self, CodecError> {
        let text = text.trim();
        let (head, tail) = text
            .split_at_checked(1)
            .ok_or_else(|| CodecError::BadHex("empty string".into()))?;
        let prefix = match head {
            "2" => PREFIX_EVEN,
            "3" => PREFIX_ODD,
            other => {
                return Err(CodecError::InvalidPrefix(
                    u8::from_str_radix(other, 16).unwrap_or(0xff),
                ))
            }
        };
        if tail.is_empty() {
            return Err(CodecError::BadHex("missing X coordinate".into()));
        }
        let x = BigUint::from_str_radix(tail, 16).map_err(|e| CodecError::BadHex(e.to_string()))?;
        if x.bits() > 8 * field_bytes as u64 {
            return Err(CodecError::BadLength {
                expected: field_bytes,
                got: x.bits().div_ceil(8) as usize,
            });
        }
        Ok(Self {
            prefix,
            x_bytes: to_fixed_be(&x, field_bytes),
        })
    }
}

impl fmt::Debug for CompressedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CompressedPoint({})", self.to_hex())
    }
}

pub fn compress_point(p: &Point, curve: &Curve) -> Result<CompressedPoint, CodecError> {
    match p {
        Point::Infinity => Err(CodecError::InfinityNotCompressible),
        Point::Affine { x, y } => {
            debug_assert_eq!(x.modulus(), curve.modulus());
            Ok(CompressedPoint {
                prefix: if y.is_odd() { PREFIX_ODD } else { PREFIX_EVEN },
                x_bytes: x.to_bytes(),
            })
        }
    }
}

/// Solves `Y² = X³ + aX + b` and keeps the root whose parity the prefix names.
pub fn decompress_point(c: &CompressedPoint, curve: &Curve) -> Result<Point, CodecError> {
    if c.prefix != PREFIX_EVEN && c.prefix != PREFIX_ODD {
        return Err(CodecError::InvalidPrefix(c.prefix));
    }
    let x = FieldElement::from_bytes(&c.x_bytes, curve.modulus())?;
    let root = curve.rhs(&x).sqrt().map_err(|_| CodecError::NotOnCurve)?;
    let want_odd = c.prefix == PREFIX_ODD;
    let y = if root.is_odd() == want_odd {
        root
    } else {
        root.neg()
    };
    // y = 0 has only one root, which is even
    if y.is_odd() != want_odd {
        return Err(CodecError::NotOnCurve);
    }
    Ok(Point::Affine { x, y })
}

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use rand::RngCore;

use crate::fieldmath::{FieldElement, FieldError};

/// An element of `Z_r`: master secrets, nonces and hash-derived exponents.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(FieldElement);

impl Scalar {
    pub fn new(value: BigUint, order: &Arc<BigUint>) -> Self {
        Self(FieldElement::new(value, order))
    }

    pub fn from_bigint(value: &BigInt, order: &Arc<BigUint>) -> Self {
        Self(FieldElement::from_bigint(value, order))
    }

    pub fn from_u64(value: u64, order: &Arc<BigUint>) -> Self {
        Self(FieldElement::from_u64(value, order))
    }

    /// Big-endian digest bytes read as an integer and reduced mod `r`.
    pub fn from_digest(digest: &[u8], order: &Arc<BigUint>) -> Self {
        Self::new(BigUint::from_bytes_be(digest), order)
    }

    /// Uniform in `[1, r)`.
    pub fn random_nonzero<R: RngCore + ?Sized>(rng: &mut R, order: &Arc<BigUint>) -> Self {
        loop {
            let s = Self(FieldElement::random(rng, order));
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn value(&self) -> &BigUint {
        self.0.value()
    }

    pub fn order(&self) -> &Arc<BigUint> {
        self.0.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.add(&other.0))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.mul(&other.0))
    }

    pub fn neg(&self) -> Self {
        Self(self.0.neg())
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        self.0.inverse().map(Self)
    }

    /// Fixed-width big-endian, `ceil(bits(r)/8)` bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.to_bytes()
    }

    pub fn from_bytes(bytes: &[u8], order: &Arc<BigUint>) -> Result<Self, FieldError> {
        FieldElement::from_bytes(bytes, order).map(Self)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.0)
    }
}

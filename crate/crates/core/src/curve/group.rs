use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use rand::RngCore;
use sha2::{Digest, Sha256};

use super::{Curve, CurveDescriptor, CurveError, CurveType, Point, Scalar};
use crate::fieldmath::FieldElement;

/// How many abscissae the generator search tries before giving up.
const GENERATOR_SEARCH_LIMIT: u64 = 10_000;

/// The order-`r` subgroup of a curve, with its canonical generator.
///
/// The generator is the first point found scanning `x = 1, 2, ...` whose
/// cofactor-cleared image is not the identity. For each `x` the root `y`
/// returned by [`FieldElement::sqrt`] is used.
#[derive(Clone)]
pub struct Group {
    inner: Arc<GroupInner>,
}

struct GroupInner {
    curve: Curve,
    order: Arc<BigUint>,
    cofactor: BigUint,
    generator: Point,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("curve", &self.inner.curve)
            .field("order", &self.inner.order)
            .field("cofactor", &self.inner.cofactor)
            .finish()
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.curve == other.inner.curve
                && self.inner.order == other.inner.order
                && self.inner.cofactor == other.inner.cofactor)
    }
}

impl Group {
    pub fn new(curve: Curve, order: BigUint, cofactor: BigUint) -> Result<Self, CurveError> {
        let generator = (1..GENERATOR_SEARCH_LIMIT)
            .filter_map(|x| curve.lift_x(&FieldElement::from_u64(x, curve.modulus())))
            .map(|p| curve.scalar_mul(&cofactor, &p))
            .find(|p| !p.is_infinity())
            .ok_or(CurveError::NoGenerator)?;
        if !curve.scalar_mul(&order, &generator).is_infinity() {
            return Err(CurveError::Validation(
                "cofactor-cleared point is not annihilated by r".into(),
            ));
        }
        Ok(Self {
            inner: Arc::new(GroupInner {
                curve,
                order: Arc::new(order),
                cofactor,
                generator,
            }),
        })
    }

    /// The G1 group of a descriptor whose base curve is fully determined.
    pub fn from_descriptor(descriptor: &CurveDescriptor) -> Result<Self, CurveError> {
        let (a, b) = match (&descriptor.a, &descriptor.b) {
            (Some(a), Some(b)) if descriptor.curve_type != CurveType::A1 => (a, b),
            _ => return Err(CurveError::NotExecutable(descriptor.curve_type)),
        };
        let curve = Curve::new(descriptor.q.clone(), a.clone(), b.clone());
        Self::new(curve, descriptor.r.clone(), descriptor.h.clone())
    }

    pub fn curve(&self) -> &Curve {
        &self.inner.curve
    }

    pub fn order(&self) -> &Arc<BigUint> {
        &self.inner.order
    }

    pub fn cofactor(&self) -> &BigUint {
        &self.inner.cofactor
    }

    pub fn generator(&self) -> &Point {
        &self.inner.generator
    }

    pub fn scalar(&self, value: BigUint) -> Scalar {
        Scalar::new(value, self.order())
    }

    pub fn random_scalar<R: RngCore + ?Sized>(&self, rng: &mut R) -> Scalar {
        Scalar::random_nonzero(rng, self.order())
    }

    pub fn mul(&self, k: &Scalar, p: &Point) -> Point {
        self.inner.curve.scalar_mul(k.value(), p)
    }

    pub fn add(&self, p: &Point, q: &Point) -> Point {
        self.inner.curve.add(p, q)
    }

    pub fn negate(&self, p: &Point) -> Point {
        self.inner.curve.negate(p)
    }

    pub fn clear_cofactor(&self, p: &Point) -> Point {
        self.inner.curve.scalar_mul(&self.inner.cofactor, p)
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.inner.curve.is_on_curve(p)
            && self
                .inner
                .curve
                .scalar_mul(&self.inner.order, p)
                .is_infinity()
    }

    /// SHA-256 of `bytes`, read big-endian and reduced mod `r`.
    pub fn hash_to_scalar(&self, bytes: &[u8]) -> Scalar {
        Scalar::from_digest(&Sha256::digest(bytes), self.order())
    }

    /// Embeds a byte string into the subgroup as `(SHA-256(bytes) mod r)·g`.
    pub fn hash_to_point(&self, bytes: &[u8]) -> Point {
        let k = self.hash_to_scalar(bytes);
        self.mul(&k, self.generator())
    }

    /// Random abscissa until the curve equation has a root, then cofactor
    /// clearing. Never returns the identity.
    pub fn random_point<R: RngCore + ?Sized>(&self, rng: &mut R) -> Point {
        let curve = &self.inner.curve;
        loop {
            let x = FieldElement::random(rng, curve.modulus());
            let Some(mut p) = curve.lift_x(&x) else {
                continue;
            };
            if rng.next_u32() & 1 == 1 {
                p = curve.negate(&p);
            }
            let p = self.clear_cofactor(&p);
            if !p.is_infinity() {
                return p;
            }
        }
    }

    /// Decodes `X ‖ Y` and checks subgroup membership.
    pub fn decode_point(&self, bytes: &[u8]) -> Result<Point, CurveError> {
        let p = self.inner.curve.decode_uncompressed(bytes)?;
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(CurveError::NotInSubgroup)
        }
    }

    pub fn encode_point(&self, p: &Point) -> Vec<u8> {
        self.inner.curve.encode_uncompressed(p)
    }

    /// `h·r = q + 1`, the shape every Type-A curve has.
    pub fn is_type_a_shape(&self) -> bool {
        let curve = &self.inner.curve;
        curve.a().is_one()
            && curve.b().value() == &BigUint::from(0u32)
            && &self.inner.cofactor * self.inner.order.as_ref()
                == curve.modulus().as_ref() + BigUint::one()
    }
}

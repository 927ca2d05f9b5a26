//! Reduced Tate pairing on Type-A curves.
//!
//! For `E: y² = x³ + x` over `F_q` with `q ≡ 3 (mod 4)` the map
//! `φ(x, y) = (−x, i·y)` sends `E(F_q)` into `E(F_{q²})` outside the image of
//! `E(F_q)`, which makes
//!
//! ```text
//! e(P, Q) = f_{r,P}(φ(Q)) ^ ((q² − 1) / r)
//! ```
//!
//! a symmetric, non-degenerate bilinear map `G1 × G1 → GT ⊂ F_{q²}*`.

use std::cell::Cell;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Signed;
use thiserror::Error;

use crate::curve::{Group, Point};
use crate::fieldmath::{
    byte_width, check_quadratic_extension, FieldElement, FieldError, Fp2Element,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("the point at infinity cannot be paired")]
    InfinityInput,
    #[error("a Miller-loop line or vertical vanished at the evaluation point")]
    DegeneratePair,
    #[error("final exponentiation of zero")]
    ZeroInput,
    #[error("value is not in the order-r subgroup of F_q2*")]
    NotInGt,
    #[error("group is not a Type-A curve (y^2 = x^3 + x, h*r = q + 1, q = 3 mod 4)")]
    NotTypeA,
    #[error(transparent)]
    Field(#[from] FieldError),
}

thread_local! {
    static PAIRINGS: Cell<u64> = const { Cell::new(0) };
}

/// Runs `f` and reports how many pairings it evaluated on this thread.
pub fn count_pairings<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let before = PAIRINGS.with(Cell::get);
    let out = f();
    let after = PAIRINGS.with(Cell::get);
    (out, after - before)
}

/// A point of `E(F_{q²})`, never the identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fp2Point {
    pub x: Fp2Element,
    pub y: Fp2Element,
}

impl Fp2Point {
    /// `Y² = X³ + X` over `F_{q²}`.
    pub fn is_on_type_a_curve(&self) -> bool {
        self.y.square() == self.x.square().mul(&self.x).add(&self.x)
    }
}

/// An element of the order-`r` subgroup of `F_{q²}*`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GtElement(Fp2Element);

impl GtElement {
    pub fn one(modulus: &Arc<BigUint>) -> Self {
        Self(Fp2Element::one(modulus))
    }

    pub fn value(&self) -> &Fp2Element {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.mul(&other.0))
    }

    /// Raises to a signed exponent; negative exponents invert first.
    pub fn pow(&self, k: &BigInt) -> Self {
        let base = if k.is_negative() {
            // unitary after final exponentiation, so the inverse is the conjugate
            self.0.conjugate()
        } else {
            self.0.clone()
        };
        Self(base.pow(k.magnitude()))
    }

    pub fn pow_unsigned(&self, k: &BigUint) -> Self {
        Self(self.0.pow(k))
    }

    /// `c0 ‖ c1`, fixed-width big-endian.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.to_bytes()
    }
}

impl fmt::Debug for GtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gt({:?})", self.0)
    }
}

/// Pairing engine bound to one Type-A group.
#[derive(Clone, Debug)]
pub struct Pairing {
    group: Group,
    /// `(q + 1) / r`; the final exponent is `(q − 1)·cofactor`.
    cofactor: BigUint,
}

impl Pairing {
    pub fn new(group: &Group) -> Result<Self, PairingError> {
        let q = group.curve().modulus();
        check_quadratic_extension(q).map_err(|_| PairingError::NotTypeA)?;
        if !group.is_type_a_shape() {
            return Err(PairingError::NotTypeA);
        }
        Ok(Self {
            group: group.clone(),
            cofactor: group.cofactor().clone(),
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    fn modulus(&self) -> &Arc<BigUint> {
        self.group.curve().modulus()
    }

    /// Bytes of one serialized GT element.
    pub fn gt_bytes(&self) -> usize {
        2 * byte_width(self.modulus())
    }

    /// `φ(x, y) = (−x, i·y)`.
    pub fn distortion_map(&self, p: &Point) -> Result<Fp2Point, PairingError> {
        match p {
            Point::Infinity => Err(PairingError::InfinityInput),
            Point::Affine { x, y } => {
                let zero = FieldElement::zero(self.modulus());
                Ok(Fp2Point {
                    x: Fp2Element::new(x.neg(), zero.clone()),
                    y: Fp2Element::new(zero, y.clone()),
                })
            }
        }
    }

    /// Miller's algorithm for `f_{r,P}` evaluated at `q`, keeping numerator
    /// and denominator apart until the end.
    pub fn miller_loop(&self, p: &Point, q: &Fp2Point) -> Result<Fp2Element, PairingError> {
        let (px, py) = match p {
            Point::Infinity => return Err(PairingError::InfinityInput),
            Point::Affine { x, y } => (x, y),
        };
        let curve = self.group.curve();
        let modulus = self.modulus();
        let order = self.group.order();
        let three = FieldElement::from_u64(3, modulus);

        let mut numerator = Fp2Element::one(modulus);
        let mut denominator = Fp2Element::one(modulus);

        // line through T with slope λ, evaluated at q: Y − y_T − λ(X − x_T)
        let line = |tx: &FieldElement, ty: &FieldElement, slope: &FieldElement| {
            let dx = q.x.sub(&Fp2Element::from_base(tx.clone()));
            q.y.sub(&Fp2Element::from_base(ty.clone()))
                .sub(&dx.mul_base(slope))
        };
        let vertical = |x: &FieldElement| q.x.sub(&Fp2Element::from_base(x.clone()));

        let mut tx = px.clone();
        let mut ty = py.clone();
        let mut at_infinity = false;

        for i in (0..order.bits() - 1).rev() {
            if at_infinity {
                return Err(PairingError::DegeneratePair);
            }
            // doubling step
            let (l, v);
            if ty.is_zero() {
                l = vertical(&tx);
                v = Fp2Element::one(modulus);
                at_infinity = true;
            } else {
                let slope = tx
                    .square()
                    .mul(&three)
                    .add(curve.a())
                    .mul(&ty.double().inverse()?);
                l = line(&tx, &ty, &slope);
                let x2 = slope.square().sub(&tx.double());
                let y2 = slope.mul(&tx.sub(&x2)).sub(&ty);
                v = vertical(&x2);
                tx = x2;
                ty = y2;
            }
            numerator = numerator.square().mul(&l);
            denominator = denominator.square().mul(&v);

            if order.bit(i) {
                if at_infinity {
                    return Err(PairingError::DegeneratePair);
                }
                let (l, v);
                if &tx == px {
                    if &ty == py {
                        return Err(PairingError::DegeneratePair);
                    }
                    // T = −P: the chord is vertical and T + P = O
                    l = vertical(&tx);
                    v = Fp2Element::one(modulus);
                    at_infinity = true;
                } else {
                    let slope = py.sub(&ty).mul(&px.sub(&tx).inverse()?);
                    l = line(&tx, &ty, &slope);
                    let x3 = slope.square().sub(&tx).sub(px);
                    let y3 = slope.mul(&tx.sub(&x3)).sub(&ty);
                    v = vertical(&x3);
                    tx = x3;
                    ty = y3;
                }
                numerator = numerator.mul(&l);
                denominator = denominator.mul(&v);
            }
            if numerator.is_zero() || denominator.is_zero() {
                return Err(PairingError::DegeneratePair);
            }
        }
        Ok(numerator.mul(&denominator.inverse()?))
    }

    /// Raises to `(q² − 1)/r = (q − 1)·h`. The `q − 1` part is `conj(f)/f`.
    pub fn final_exponentiation(&self, f: &Fp2Element) -> Result<GtElement, PairingError> {
        if f.is_zero() {
            return Err(PairingError::ZeroInput);
        }
        let unitary = f.conjugate().mul(&f.inverse()?);
        Ok(GtElement(unitary.pow(&self.cofactor)))
    }

    /// `e(P, Q) = final_exponentiation(miller_loop(P, φ(Q)))`.
    pub fn pair(&self, p: &Point, q: &Point) -> Result<GtElement, PairingError> {
        if p.is_infinity() || q.is_infinity() {
            return Err(PairingError::InfinityInput);
        }
        PAIRINGS.with(|c| c.set(c.get() + 1));
        let image = self.distortion_map(q)?;
        let f = self.miller_loop(p, &image)?;
        self.final_exponentiation(&f)
    }

    pub fn gt_from_bytes(&self, bytes: &[u8]) -> Result<GtElement, PairingError> {
        let value = GtElement(Fp2Element::from_bytes(bytes, self.modulus())?);
        if value.0.is_zero() || !self.in_gt(&value) {
            return Err(PairingError::NotInGt);
        }
        Ok(value)
    }

    /// `g^k` with `k` taken mod `r`; convenient for negated hash exponents.
    pub fn gt_pow_mod_r(&self, g: &GtElement, k: &BigInt) -> GtElement {
        let r = BigInt::from_biguint(Sign::Plus, self.group.order().as_ref().clone());
        let reduced = ((k % &r) + &r) % &r;
        g.pow(&reduced)
    }

    /// Is `g^r = 1`?
    pub fn in_gt(&self, g: &GtElement) -> bool {
        g.pow_unsigned(self.group.order()).is_one()
    }
}

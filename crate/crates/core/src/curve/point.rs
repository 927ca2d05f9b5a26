use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;

use super::CurveError;
use crate::fieldmath::{byte_width, FieldElement};

/// An affine point, or the point at infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Affine { x: FieldElement, y: FieldElement },
}

impl Point {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<&FieldElement> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&FieldElement> {
        match self {
            Point::Infinity => None,
            Point::Affine { y, .. } => Some(y),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => f.write_str("O"),
            Point::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

/// `(X, Y, Z)` standing for `(X/Z², Y/Z³)`; `Z = 0` is infinity.
struct Jacobian {
    x: FieldElement,
    y: FieldElement,
    z: FieldElement,
}

impl Jacobian {
    fn infinity(modulus: &Arc<BigUint>) -> Self {
        Self {
            x: FieldElement::one(modulus),
            y: FieldElement::one(modulus),
            z: FieldElement::zero(modulus),
        }
    }

    fn from_affine(x: &FieldElement, y: &FieldElement) -> Self {
        Self {
            x: x.clone(),
            y: y.clone(),
            z: FieldElement::one(x.modulus()),
        }
    }

    fn to_affine(&self) -> Point {
        let Ok(z_inv) = self.z.inverse() else {
            return Point::Infinity;
        };
        let z_inv2 = z_inv.square();
        Point::Affine {
            x: self.x.mul(&z_inv2),
            y: self.y.mul(&z_inv2).mul(&z_inv),
        }
    }
}

/// `y² = x³ + a·x + b` over `F_q`, with the affine chord-and-tangent law.
#[derive(Clone, PartialEq, Eq)]
pub struct Curve {
    modulus: Arc<BigUint>,
    a: FieldElement,
    b: FieldElement,
}

impl fmt::Debug for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "y^2 = x^3 + {}x + {} mod {}",
            self.a, self.b, self.modulus
        )
    }
}

impl Curve {
    pub fn new(q: BigUint, a: BigUint, b: BigUint) -> Self {
        let modulus = Arc::new(q);
        Self {
            a: FieldElement::new(a, &modulus),
            b: FieldElement::new(b, &modulus),
            modulus,
        }
    }

    pub fn modulus(&self) -> &Arc<BigUint> {
        &self.modulus
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn b(&self) -> &FieldElement {
        &self.b
    }

    pub fn field_bytes(&self) -> usize {
        byte_width(&self.modulus)
    }

    pub fn element(&self, value: BigUint) -> FieldElement {
        FieldElement::new(value, &self.modulus)
    }

    /// `x³ + a·x + b`.
    pub fn rhs(&self, x: &FieldElement) -> FieldElement {
        x.square().mul(x).add(&self.a.mul(x)).add(&self.b)
    }

    pub fn is_on_curve(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => x.modulus() == &self.modulus && y.square() == self.rhs(x),
        }
    }

    /// Builds an affine point, checking the curve equation.
    pub fn point(&self, x: FieldElement, y: FieldElement) -> Result<Point, CurveError> {
        let p = Point::Affine { x, y };
        if self.is_on_curve(&p) {
            Ok(p)
        } else {
            Err(CurveError::NotOnCurve)
        }
    }

    /// Some point with abscissa `x`; `None` if `x³ + ax + b` is a non-residue.
    pub fn lift_x(&self, x: &FieldElement) -> Option<Point> {
        let y = self.rhs(x).sqrt().ok()?;
        Some(Point::Affine { x: x.clone(), y })
    }

    pub fn negate(&self, p: &Point) -> Point {
        match p {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine {
                x: x.clone(),
                y: y.neg(),
            },
        }
    }

    pub fn double(&self, p: &Point) -> Point {
        let (x, y) = match p {
            Point::Infinity => return Point::Infinity,
            Point::Affine { x, y } => (x, y),
        };
        if y.is_zero() {
            return Point::Infinity;
        }
        let numerator = x
            .square()
            .mul(&FieldElement::from_u64(3, &self.modulus))
            .add(&self.a);
        let slope = numerator.mul(&y.double().inverse().expect("y is non-zero"));
        let x3 = slope.square().sub(&x.double());
        let y3 = slope.mul(&x.sub(&x3)).sub(y);
        Point::Affine { x: x3, y: y3 }
    }

    pub fn add(&self, p: &Point, q: &Point) -> Point {
        let ((x1, y1), (x2, y2)) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => {
                ((x1, y1), (x2, y2))
            }
        };
        if x1 == x2 {
            return if y1 == y2 {
                self.double(p)
            } else {
                Point::Infinity
            };
        }
        let slope = y2
            .sub(y1)
            .mul(&x2.sub(x1).inverse().expect("distinct abscissae"));
        let x3 = slope.square().sub(x1).sub(x2);
        let y3 = slope.mul(&x1.sub(&x3)).sub(y1);
        Point::Affine { x: x3, y: y3 }
    }

    pub fn sub(&self, p: &Point, q: &Point) -> Point {
        self.add(p, &self.negate(q))
    }

    /// Left-to-right double-and-add in Jacobian coordinates, so only the
    /// final conversion back to affine pays for an inversion.
    pub fn scalar_mul(&self, k: &BigUint, p: &Point) -> Point {
        let (px, py) = match p {
            _ if k.is_zero() => return Point::Infinity,
            Point::Infinity => return Point::Infinity,
            Point::Affine { x, y } => (x, y),
        };
        let mut acc = Jacobian::infinity(&self.modulus);
        for i in (0..k.bits()).rev() {
            acc = self.jacobian_double(&acc);
            if k.bit(i) {
                acc = self.jacobian_add_affine(&acc, px, py);
            }
        }
        acc.to_affine()
    }

    /// `(X, Y, Z)` doubling: `M = 3X² + aZ⁴`, `S = 4XY²`.
    fn jacobian_double(&self, p: &Jacobian) -> Jacobian {
        if p.z.is_zero() || p.y.is_zero() {
            return Jacobian::infinity(&self.modulus);
        }
        let xx = p.x.square();
        let yy = p.y.square();
        let zz = p.z.square();
        let s = p.x.mul(&yy).double().double();
        let m = xx.double().add(&xx).add(&self.a.mul(&zz.square()));
        let x3 = m.square().sub(&s.double());
        let eight_yyyy = yy.square().double().double().double();
        let y3 = m.mul(&s.sub(&x3)).sub(&eight_yyyy);
        let z3 = p.y.mul(&p.z).double();
        Jacobian {
            x: x3,
            y: y3,
            z: z3,
        }
    }

    /// Mixed addition of a Jacobian point and an affine `(x2, y2)`.
    fn jacobian_add_affine(&self, p: &Jacobian, x2: &FieldElement, y2: &FieldElement) -> Jacobian {
        if p.z.is_zero() {
            return Jacobian::from_affine(x2, y2);
        }
        let z1z1 = p.z.square();
        let u2 = x2.mul(&z1z1);
        let s2 = y2.mul(&p.z).mul(&z1z1);
        let h = u2.sub(&p.x);
        let r = s2.sub(&p.y);
        if h.is_zero() {
            return if r.is_zero() {
                self.jacobian_double(p)
            } else {
                Jacobian::infinity(&self.modulus)
            };
        }
        let hh = h.square();
        let hhh = h.mul(&hh);
        let v = p.x.mul(&hh);
        let x3 = r.square().sub(&hhh).sub(&v.double());
        let y3 = r.mul(&v.sub(&x3)).sub(&p.y.mul(&hhh));
        let z3 = p.z.mul(&h);
        Jacobian {
            x: x3,
            y: y3,
            z: z3,
        }
    }

    /// `X ‖ Y`, each fixed-width big-endian. Infinity encodes as all zeros;
    /// `(0, 0)` has order two so this never collides with an odd-order point.
    pub fn encode_uncompressed(&self, p: &Point) -> Vec<u8> {
        match p {
            Point::Infinity => vec![0u8; 2 * self.field_bytes()],
            Point::Affine { x, y } => {
                let mut out = x.to_bytes();
                out.extend(y.to_bytes());
                out
            }
        }
    }

    pub fn decode_uncompressed(&self, bytes: &[u8]) -> Result<Point, CurveError> {
        let width = self.field_bytes();
        if bytes.len() != 2 * width {
            return Err(CurveError::Field(crate::fieldmath::FieldError::BadLength {
                expected: 2 * width,
                got: bytes.len(),
            }));
        }
        if bytes.iter().all(|&b| b == 0) {
            return Ok(Point::Infinity);
        }
        let x = FieldElement::from_bytes(&bytes[..width], &self.modulus)?;
        let y = FieldElement::from_bytes(&bytes[width..], &self.modulus)?;
        self.point(x, y)
    }
}

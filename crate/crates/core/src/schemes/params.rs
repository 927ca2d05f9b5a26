use std::fmt;

use rand::RngCore;

use super::SchemeError;
use crate::curve::{CurveDescriptor, Group, Point, Scalar};
use crate::pairing::{GtElement, Pairing};

/// Everything a verifier needs: the curve, its generators and the master
/// public keys.
///
/// The pairing is symmetric, so `g2 = g1` and `P2 = P1`. Scheme code still
/// reads the `G2` side through [`g2`](Self::g2) and [`p2`](Self::p2).
#[derive(Clone, Debug)]
pub struct PublicParams {
    descriptor: CurveDescriptor,
    group: Group,
    pairing: Pairing,
    g1: Point,
    g2: Point,
    p1: Point,
    p2: Point,
}

/// The PKG's secret `x`.
#[derive(Clone, PartialEq, Eq)]
pub struct MasterSecret {
    x: Scalar,
}

impl fmt::Debug for MasterSecret {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("MasterSecret(..)")
    }
}

impl MasterSecret {
    pub fn scalar(&self) -> &Scalar {
        &self.x
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        self.x.to_bytes()
    }

    pub fn from_bytes(bytes: &[u8], params: &PublicParams) -> Result<Self, SchemeError> {
        let x = Scalar::from_bytes(bytes, params.group.order())
            .map_err(|e| SchemeError::InvalidKey(e.to_string()))?;
        if x.is_zero() {
            return Err(SchemeError::InvalidKey("master secret is zero".into()));
        }
        if params.group.mul(&x, &params.g1) != params.p1 {
            return Err(SchemeError::InvalidKey(
                "master secret does not match P1".into(),
            ));
        }
        Ok(Self { x })
    }
}

/// A user's private key: `C_A = H(identity)` and `V_A = x·C_A`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UserKey {
    pub identity: Vec<u8>,
    pub c_a: Point,
    pub v_a: Point,
}

impl UserKey {
    /// `e(V_A, g2) = e(C_A, P2)`, checkable without the master secret.
    pub fn is_consistent(&self, params: &PublicParams) -> Result<bool, SchemeError> {
        if self.c_a != params.identity_point(&self.identity)? {
            return Ok(false);
        }
        if !params.group.contains(&self.v_a) || self.v_a.is_infinity() {
            return Ok(false);
        }
        let lhs = params.pairing.pair(&self.v_a, &params.g2)?;
        let rhs = params.pairing.pair(&self.c_a, &params.p2)?;
        Ok(lhs == rhs)
    }
}

impl PublicParams {
    fn build(descriptor: &CurveDescriptor, group: Group, x: &Scalar) -> Result<Self, SchemeError> {
        let pairing = Pairing::new(&group)?;
        let g1 = group.generator().clone();
        let p1 = group.mul(x, &g1);
        Ok(Self {
            descriptor: descriptor.clone(),
            g2: g1.clone(),
            p2: p1.clone(),
            group,
            pairing,
            g1,
            p1,
        })
    }

    /// Rebuilds the public side from a descriptor and a published `P1`.
    pub fn from_public(descriptor: &CurveDescriptor, p1: Point) -> Result<Self, SchemeError> {
        let group = executable_group(descriptor)?;
        if p1.is_infinity() || !group.contains(&p1) {
            return Err(SchemeError::InvalidKey("P1 is not a subgroup point".into()));
        }
        let pairing = Pairing::new(&group)?;
        let g1 = group.generator().clone();
        Ok(Self {
            descriptor: descriptor.clone(),
            g2: g1.clone(),
            p2: p1.clone(),
            group,
            pairing,
            g1,
            p1,
        })
    }

    pub fn descriptor(&self) -> &CurveDescriptor {
        &self.descriptor
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn g1(&self) -> &Point {
        &self.g1
    }

    pub fn g2(&self) -> &Point {
        &self.g2
    }

    pub fn p1(&self) -> &Point {
        &self.p1
    }

    pub fn p2(&self) -> &Point {
        &self.p2
    }

    /// `e(P1, g2) = e(g1, P2)`.
    pub fn is_consistent(&self) -> Result<bool, SchemeError> {
        Ok(self.pairing.pair(&self.p1, &self.g2)? == self.pairing.pair(&self.g1, &self.p2)?)
    }

    pub fn pair(&self, p: &Point, q: &Point) -> Result<GtElement, SchemeError> {
        Ok(self.pairing.pair(p, q)?)
    }

    /// `C_A = H(identity)`.
    pub fn identity_point(&self, identity: &[u8]) -> Result<Point, SchemeError> {
        if identity.is_empty() {
            return Err(SchemeError::EmptyIdentity);
        }
        Ok(self.group.hash_to_point(identity))
    }
}

fn executable_group(descriptor: &CurveDescriptor) -> Result<Group, SchemeError> {
    if !descriptor.is_executable() {
        return Err(SchemeError::UnsupportedCurve(descriptor.curve_type));
    }
    Ok(Group::from_descriptor(descriptor)?)
}

/// Draws `x` uniformly from `[1, r)` and publishes `P1 = x·g1`, `P2 = x·g2`.
pub fn setup<R: RngCore + ?Sized>(
    descriptor: &CurveDescriptor,
    rng: &mut R,
) -> Result<(MasterSecret, PublicParams), SchemeError> {
    let group = executable_group(descriptor)?;
    let x = group.random_scalar(rng);
    let params = PublicParams::build(descriptor, group, &x)?;
    Ok((MasterSecret { x }, params))
}

/// [`setup`] with a caller-chosen master secret.
pub fn setup_with_secret(
    descriptor: &CurveDescriptor,
    x: &Scalar,
) -> Result<(MasterSecret, PublicParams), SchemeError> {
    let group = executable_group(descriptor)?;
    let x = group.scalar(x.value().clone());
    if x.is_zero() {
        return Err(SchemeError::InvalidKey("master secret is zero".into()));
    }
    let params = PublicParams::build(descriptor, group, &x)?;
    Ok((MasterSecret { x }, params))
}

pub fn extract(
    msk: &MasterSecret,
    params: &PublicParams,
    identity: &[u8],
) -> Result<UserKey, SchemeError> {
    let c_a = params.identity_point(identity)?;
    if c_a.is_infinity() {
        return Err(SchemeError::DegenerateIdentity);
    }
    let v_a = params.group.mul(&msk.x, &c_a);
    Ok(UserKey {
        identity: identity.to_vec(),
        c_a,
        v_a,
    })
}

//! El-Gamal-type SK signature: `Z_A = k·g2`, `x_za = x(Z_A) mod r`,
//! `S = k⁻¹·h·C_A + k⁻¹·x_za·V_A` with `h = H(m)`.
//!
//! Verification: `e(S, Z_A) = e(C_A, h·g2 + x_za·P2)`.

use rand::RngCore;

use super::{
    hash_to_scalar, pair_or_one, precheck, reject_degenerate, sign_with_fresh_nonce, HashMode,
    PublicParams, Scheme, SchemeError, Signature, SignaturePart, UserKey,
};
use crate::curve::{Point, Scalar};

/// The big-endian `X` bytes of `Z_A`, reduced mod `r`.
fn abscissa_scalar(params: &PublicParams, z_a: &Point) -> Option<Scalar> {
    let x = z_a.x()?;
    Some(Scalar::from_digest(&x.to_bytes(), params.group().order()))
}

pub fn sign<R: RngCore + ?Sized>(
    params: &PublicParams,
    key: &UserKey,
    message: &[u8],
    rng: &mut R,
    compress: bool,
) -> Result<Signature, SchemeError> {
    let group = params.group();
    let h = hash_to_scalar(params, &[message]);
    sign_with_fresh_nonce(params, rng, |k| {
        let z_a = group.mul(k, params.g2());
        let Some(x_za) = abscissa_scalar(params, &z_a).filter(|x| !x.is_zero()) else {
            return Ok(None);
        };
        let k_inv = k.inverse().map_err(crate::curve::CurveError::from)?;
        let s = group.add(
            &group.mul(&k_inv.mul(&h), &key.c_a),
            &group.mul(&k_inv.mul(&x_za), &key.v_a),
        );
        Ok(Some(Signature {
            scheme: Scheme::SkElGamal,
            part1: SignaturePart::Point(z_a),
            part2: s,
            point_compressed: compress,
            hash_mode: HashMode::None,
        }))
    })
}

pub fn verify(
    params: &PublicParams,
    identity: &[u8],
    message: &[u8],
    sig: &Signature,
) -> Result<bool, SchemeError> {
    let Some(c_a) = precheck(params, Scheme::SkElGamal, identity, sig)? else {
        return Ok(false);
    };
    let z_a = sig.z_a().expect("precheck saw a point");
    let group = params.group();
    let Some(x_za) = abscissa_scalar(params, z_a).filter(|x| !x.is_zero()) else {
        return Ok(false);
    };
    let h = hash_to_scalar(params, &[message]);
    let q = group.add(&group.mul(&h, params.g2()), &group.mul(&x_za, params.p2()));
    reject_degenerate((|| {
        let lhs = params.pair(sig.s(), z_a)?;
        let rhs = pair_or_one(params, &c_a, &q)?;
        Ok(lhs == rhs)
    })())
}

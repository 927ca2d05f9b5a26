//! Sakai-Ohgishi-Kasahara: `Z_A = k·g2`, `S = V_A + k·H(m)`.
//!
//! Verification: `e(S, g2) = e(C_A, P2)·e(H(m), Z_A)`.

use rand::RngCore;

use super::{
    pair_or_one, precheck, reject_degenerate, sign_with_fresh_nonce, HashMode, PublicParams,
    Scheme, SchemeError, Signature, SignaturePart, UserKey,
};

pub fn sign<R: RngCore + ?Sized>(
    params: &PublicParams,
    key: &UserKey,
    message: &[u8],
    rng: &mut R,
    compress: bool,
) -> Result<Signature, SchemeError> {
    let group = params.group();
    let r_point = group.hash_to_point(message);
    sign_with_fresh_nonce(params, rng, |k| {
        let z_a = group.mul(k, params.g2());
        let s = group.add(&key.v_a, &group.mul(k, &r_point));
        Ok(Some(Signature {
            scheme: Scheme::Sok,
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
    let Some(c_a) = precheck(params, Scheme::Sok, identity, sig)? else {
        return Ok(false);
    };
    let z_a = sig.z_a().expect("precheck saw a point");
    reject_degenerate((|| {
        let r_point = params.group().hash_to_point(message);
        let lhs = params.pair(sig.s(), params.g2())?;
        let rhs = params
            .pair(&c_a, params.p2())?
            .mul(&pair_or_one(params, &r_point, z_a)?);
        Ok(lhs == rhs)
    })())
}

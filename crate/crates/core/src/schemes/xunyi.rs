//! Xun-Yi: `Z_A = k·g1`, `h = H(m ‖ Z_A)`, `S = k·P1 + h·V_A`.
//!
//! Verification: `e(S, g2) = e(Z_A + h·C_A, P2)`. Both parts are G1 points,
//! so both shrink under compression.

use rand::RngCore;

use super::{
    hash_to_scalar, pair_or_one, precheck, reject_degenerate, sign_with_fresh_nonce, HashMode,
    PublicParams, Scheme, SchemeError, Signature, SignaturePart, UserKey,
};

pub fn sign<R: RngCore + ?Sized>(
    params: &PublicParams,
    key: &UserKey,
    message: &[u8],
    rng: &mut R,
    compress: bool,
) -> Result<Signature, SchemeError> {
    let group = params.group();
    sign_with_fresh_nonce(params, rng, |k| {
        let z_a = group.mul(k, params.g1());
        let h = hash_to_scalar(params, &[message, &group.encode_point(&z_a)]);
        let s = group.add(&group.mul(k, params.p1()), &group.mul(&h, &key.v_a));
        Ok(Some(Signature {
            scheme: Scheme::XunYi,
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
    let Some(c_a) = precheck(params, Scheme::XunYi, identity, sig)? else {
        return Ok(false);
    };
    let z_a = sig.z_a().expect("precheck saw a point");
    let group = params.group();
    let h = hash_to_scalar(params, &[message, &group.encode_point(z_a)]);
    let q = group.add(z_a, &group.mul(&h, &c_a));
    reject_degenerate((|| {
        let lhs = params.pair(sig.s(), params.g2())?;
        let rhs = pair_or_one(params, &q, params.p2())?;
        Ok(lhs == rhs)
    })())
}

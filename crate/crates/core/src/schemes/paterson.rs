//! Paterson: `Z_A = k·g2`, `S = k⁻¹·h0·g1 + k⁻¹·h1·V_A` with
//! `h0 = H(m)` and `h1 = H(Z_A)`.
//!
//! Verification: `e(S, Z_A) = e(g1, g2)^h0 · e(C_A, P2)^h1`.

use rand::RngCore;

use super::{
    hash_to_scalar, precheck, reject_degenerate, sign_with_fresh_nonce, HashMode, PublicParams,
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
    let h0 = hash_to_scalar(params, &[message]);
    sign_with_fresh_nonce(params, rng, |k| {
        let z_a = group.mul(k, params.g2());
        let h1 = hash_to_scalar(params, &[&group.encode_point(&z_a)]);
        let k_inv = k.inverse().map_err(crate::curve::CurveError::from)?;
        let s = group.add(
            &group.mul(&k_inv.mul(&h0), params.g1()),
            &group.mul(&k_inv.mul(&h1), &key.v_a),
        );
        Ok(Some(Signature {
            scheme: Scheme::Paterson,
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
    let Some(c_a) = precheck(params, Scheme::Paterson, identity, sig)? else {
        return Ok(false);
    };
    let z_a = sig.z_a().expect("precheck saw a point");
    let h0 = hash_to_scalar(params, &[message]);
    let h1 = hash_to_scalar(params, &[&params.group().encode_point(z_a)]);
    reject_degenerate((|| {
        let lhs = params.pair(sig.s(), z_a)?;
        let rhs = params
            .pair(params.g1(), params.g2())?
            .pow_unsigned(h0.value())
            .mul(&params.pair(&c_a, params.p2())?.pow_unsigned(h1.value()));
        Ok(lhs == rhs)
    })())
}

//! Schnorr-type SK signature: `e = e(C_A, k·g2)`, challenge `c` from
//! `H(m ‖ e)`, `S = c·V_A + k·C_A`.
//!
//! Verification recomputes `w = e(S, g2)·e(C_A, −c·P2)`, which equals `e`
//! for an honest signature, and checks the challenge. The stored challenge
//! (and the scalar `c` used on both sides) follows the [`HashMode`].

use rand::RngCore;
use sha2::{Digest, Sha256};

use super::{
    pair_or_one, precheck, reject_degenerate, sign_with_fresh_nonce, HashMode, PublicParams,
    Scheme, SchemeError, SignOptions, Signature, SignaturePart, UserKey,
};
use crate::codec::{compress_hash_mod_r, compress_hash_truncate};
use crate::curve::Scalar;
use crate::fieldmath::to_fixed_be;
use crate::pairing::GtElement;

/// Challenge bytes for `H(m ‖ w)` in the given mode.
pub fn challenge(params: &PublicParams, mode: HashMode, message: &[u8], w: &GtElement) -> Vec<u8> {
    let digest = Sha256::new()
        .chain_update(message)
        .chain_update(w.to_bytes())
        .finalize();
    match mode {
        HashMode::None => digest.to_vec(),
        HashMode::Truncate20 => compress_hash_truncate(&digest)
            .expect("SHA-256 digests are 32 bytes")
            .to_vec(),
        HashMode::ModR => {
            let c = compress_hash_mod_r(&digest, params.group().order());
            to_fixed_be(c.value(), params.descriptor().scalar_bytes())
        }
    }
}

fn challenge_scalar(params: &PublicParams, bytes: &[u8]) -> Scalar {
    Scalar::from_digest(bytes, params.group().order())
}

pub fn sign<R: RngCore + ?Sized>(
    params: &PublicParams,
    key: &UserKey,
    message: &[u8],
    rng: &mut R,
    options: SignOptions,
) -> Result<Signature, SchemeError> {
    let group = params.group();
    sign_with_fresh_nonce(params, rng, |k| {
        let z_a = group.mul(k, params.g2());
        let e = params.pair(&key.c_a, &z_a)?;
        let chal = challenge(params, options.hash_mode, message, &e);
        let c = challenge_scalar(params, &chal);
        if c.is_zero() {
            return Ok(None);
        }
        let s = group.add(&group.mul(&c, &key.v_a), &group.mul(k, &key.c_a));
        Ok(Some(Signature {
            scheme: Scheme::SkSchnorr,
            part1: SignaturePart::Challenge(chal),
            part2: s,
            point_compressed: options.compress,
            hash_mode: options.hash_mode,
        }))
    })
}

pub fn verify(
    params: &PublicParams,
    identity: &[u8],
    message: &[u8],
    sig: &Signature,
) -> Result<bool, SchemeError> {
    let Some(c_a) = precheck(params, Scheme::SkSchnorr, identity, sig)? else {
        return Ok(false);
    };
    let stored = sig.challenge().ok_or_else(|| {
        SchemeError::MalformedSignature("SK-Schnorr part1 must be a challenge".into())
    })?;
    let expected_len = sig
        .hash_mode
        .challenge_len(params.descriptor().scalar_bytes());
    if stored.len() != expected_len {
        return Err(SchemeError::MalformedSignature(format!(
            "challenge is {} bytes, expected {expected_len}",
            stored.len()
        )));
    }
    let c = challenge_scalar(params, stored);
    if c.is_zero() {
        return Ok(false);
    }
    let group = params.group();
    let neg_c_p2 = group.mul(&c.neg(), params.p2());
    reject_degenerate((|| {
        let w = params
            .pair(sig.s(), params.g2())?
            .mul(&pair_or_one(params, &c_a, &neg_c_p2)?);
        Ok(challenge(params, sig.hash_mode, message, &w) == stored)
    })())
}

//! Identity-based signatures over the Type-A pairing.
//!
//! A PKG runs [`setup`] once and [`extract`]s a key per identity. Signers
//! call [`sign`] with one of the five [`Scheme`]s; anyone holding the
//! [`PublicParams`] can [`verify`] against the signer's identity string.
//!
//! The signing nonce is called `k` throughout; `r` is always the group order.

mod params;
mod signature;

pub mod paterson;
pub mod sk_elgamal;
pub mod sk_schnorr;
pub mod sok;
pub mod xunyi;

pub use params::{extract, setup, setup_with_secret, MasterSecret, PublicParams, UserKey};
pub use signature::{HashMode, Scheme, SignOptions, Signature, SignaturePart};

use rand::RngCore;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::codec::CodecError;
use crate::curve::{CurveError, CurveType, Point, Scalar};
use crate::pairing::{GtElement, PairingError};

/// How many nonces signing draws before giving up. Each redraw has
/// probability about `1/r`, so hitting the limit means a broken RNG.
const MAX_NONCE_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("curve type {0} has no executable pairing")]
    UnsupportedCurve(CurveType),
    #[error("identity must not be empty")]
    EmptyIdentity,
    #[error("identity hashes to the identity element")]
    DegenerateIdentity,
    #[error("malformed signature: {0}")]
    MalformedSignature(String),
    #[error("unknown hash mode `{0}`")]
    UnknownHashMode(String),
    #[error("unknown scheme `{0}`")]
    UnknownScheme(String),
    #[error("hash mode {0} only applies to sk_schnorr")]
    HashModeNotApplicable(HashMode),
    #[error("invalid key material: {0}")]
    InvalidKey(String),
    #[error("no usable nonce after {0} draws")]
    NonceExhausted(usize),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error(transparent)]
    Codec(#[from] CodecError),
}

pub fn sign<R: RngCore + ?Sized>(
    scheme: Scheme,
    params: &PublicParams,
    key: &UserKey,
    message: &[u8],
    rng: &mut R,
    options: SignOptions,
) -> Result<Signature, SchemeError> {
    if options.hash_mode != HashMode::None && scheme != Scheme::SkSchnorr {
        return Err(SchemeError::HashModeNotApplicable(options.hash_mode));
    }
    match scheme {
        Scheme::Sok => sok::sign(params, key, message, rng, options.compress),
        Scheme::Paterson => paterson::sign(params, key, message, rng, options.compress),
        Scheme::SkElGamal => sk_elgamal::sign(params, key, message, rng, options.compress),
        Scheme::SkSchnorr => sk_schnorr::sign(params, key, message, rng, options),
        Scheme::XunYi => xunyi::sign(params, key, message, rng, options.compress),
    }
}

/// `Ok(false)` is a rejection; `Err` means the signature could not be
/// interpreted at all.
pub fn verify(
    params: &PublicParams,
    identity: &[u8],
    message: &[u8],
    signature: &Signature,
) -> Result<bool, SchemeError> {
    match signature.scheme {
        Scheme::Sok => sok::verify(params, identity, message, signature),
        Scheme::Paterson => paterson::verify(params, identity, message, signature),
        Scheme::SkElGamal => sk_elgamal::verify(params, identity, message, signature),
        Scheme::SkSchnorr => sk_schnorr::verify(params, identity, message, signature),
        Scheme::XunYi => xunyi::verify(params, identity, message, signature),
    }
}

/// SHA-256 of the concatenated inputs, reduced mod `r`.
fn hash_to_scalar(params: &PublicParams, parts: &[&[u8]]) -> Scalar {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p);
    }
    Scalar::from_digest(&h.finalize(), params.group().order())
}

/// Draws nonces until `attempt` produces a signature. `attempt` returns
/// `None` to ask for a fresh nonce; a degenerate pairing does the same.
/// Signatures holding the identity element are never emitted.
fn sign_with_fresh_nonce<R, F>(
    params: &PublicParams,
    rng: &mut R,
    mut attempt: F,
) -> Result<Signature, SchemeError>
where
    R: RngCore + ?Sized,
    F: FnMut(&Scalar) -> Result<Option<Signature>, SchemeError>,
{
    for _ in 0..MAX_NONCE_ATTEMPTS {
        let k = params.group().random_scalar(rng);
        match attempt(&k) {
            Ok(Some(sig)) if !has_infinity(&sig) => return Ok(sig),
            Ok(_) | Err(SchemeError::Pairing(PairingError::DegeneratePair)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(SchemeError::NonceExhausted(MAX_NONCE_ATTEMPTS))
}

fn has_infinity(sig: &Signature) -> bool {
    sig.part2.is_infinity() || sig.z_a().is_some_and(Point::is_infinity)
}

/// Shared front half of every verifier. `Err` for a foreign scheme tag or a
/// point outside the subgroup, `Ok(None)` for anything that must simply be
/// rejected, otherwise the signer's `C_A`.
fn precheck(
    params: &PublicParams,
    scheme: Scheme,
    identity: &[u8],
    sig: &Signature,
) -> Result<Option<Point>, SchemeError> {
    if sig.scheme != scheme {
        return Err(SchemeError::MalformedSignature(format!(
            "expected a {scheme} signature, got {}",
            sig.scheme
        )));
    }
    let group = params.group();
    let points = sig.z_a().into_iter().chain(std::iter::once(&sig.part2));
    for p in points {
        if !group.contains(p) {
            return Err(SchemeError::MalformedSignature(
                "point is not in the order-r subgroup".into(),
            ));
        }
    }
    if has_infinity(sig) {
        return Ok(None);
    }
    let c_a = params.identity_point(identity)?;
    if c_a.is_infinity() {
        return Ok(None);
    }
    Ok(Some(c_a))
}

/// `e(P, Q)`, taking either argument at infinity to the identity of GT.
fn pair_or_one(params: &PublicParams, p: &Point, q: &Point) -> Result<GtElement, SchemeError> {
    if p.is_infinity() || q.is_infinity() {
        return Ok(GtElement::one(params.group().curve().modulus()));
    }
    params.pair(p, q)
}

/// A pairing that vanished on attacker-chosen input is a rejection.
fn reject_degenerate(result: Result<bool, SchemeError>) -> Result<bool, SchemeError> {
    match result {
        Err(SchemeError::Pairing(PairingError::DegeneratePair | PairingError::InfinityInput)) => {
            Ok(false)
        }
        other => other,
    }
}

#[cfg(test)]
pub(crate) mod test_support {
    use std::sync::OnceLock;

    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    use super::*;
    use crate::curve::{generate_type_a, CurveDescriptor, DEFAULT_ATTEMPT_BUDGET};

    /// A 40-bit-order, 64-bit-field Type-A curve, generated once.
    pub fn small_params() -> &'static (MasterSecret, PublicParams) {
        static PARAMS: OnceLock<(MasterSecret, PublicParams)> = OnceLock::new();
        PARAMS.get_or_init(|| {
            let mut rng = ChaCha20Rng::seed_from_u64(11);
            let d = generate_type_a(40, 64, &mut rng, DEFAULT_ATTEMPT_BUDGET).unwrap();
            setup(&d, &mut rng).unwrap()
        })
    }

    pub fn toy_descriptor() -> CurveDescriptor {
        CurveDescriptor::parse("type a\nq 347\nh 12\nr 29\n").unwrap()
    }

    pub fn rng(seed: u64) -> ChaCha20Rng {
        ChaCha20Rng::seed_from_u64(seed)
    }
}

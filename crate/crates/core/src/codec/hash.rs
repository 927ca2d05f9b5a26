use std::sync::Arc;

use num_bigint::BigUint;

use super::CodecError;
use crate::curve::Scalar;

pub const TRUNCATED_HASH_BYTES: usize = 20;

/// Keeps the last 20 bytes of a 32-byte digest.
pub fn compress_hash_truncate(digest: &[u8]) -> Result<[u8; TRUNCATED_HASH_BYTES], CodecError> {
    if digest.len() != 32 {
        return Err(CodecError::BadLength {
            expected: 32,
            got: digest.len(),
        });
    }
    let mut out = [0u8; TRUNCATED_HASH_BYTES];
    out.copy_from_slice(&digest[32 - TRUNCATED_HASH_BYTES..]);
    Ok(out)
}

/// The digest as a big-endian integer, reduced mod `r`.
pub fn compress_hash_mod_r(digest: &[u8], order: &Arc<BigUint>) -> Scalar {
    Scalar::from_digest(digest, order)
}

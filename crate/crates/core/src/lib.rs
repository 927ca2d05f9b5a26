//! Identity-based signatures from the Type-A symmetric pairing.
//!
//! The crate is layered bottom-up:
//!
//! * [`fieldmath`]: residues mod `q`, the extension `F_{q²}`, square roots.
//! * [`curve`]: parameter files for every curve family, the Type-A group law,
//!   hashing identities into G1.
//! * [`pairing`]: the reduced Tate pairing via Miller's algorithm.
//! * [`schemes`]: setup/extract and sign/verify for five IBS schemes.
//! * [`codec`]: point and hash compression, and the signature-size calculator.
//! * [`bench`]: sign/verify timing with pairing-count accounting.

pub mod bench;
pub mod codec;
pub mod curve;
pub mod fieldmath;
pub mod pairing;
pub mod schemes;

//! Arithmetic modulo a prime `q` and in the quadratic extension `Fq[i]/(i² + 1)`.
//!
//! Every value carries its modulus behind an `Arc`, so elements can be passed
//! around freely without a separate field context. All results are reduced to
//! the canonical representative in `[0, q)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("value is not a quadratic residue")]
    NoRoot,
    #[error("encoded value is not a canonical residue")]
    NonCanonical,
    #[error("expected {expected} bytes, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("i² = -1 needs a modulus congruent to 3 mod 4")]
    NotThreeModFour,
}

/// Number of bytes needed to hold any residue of `modulus`.
pub fn byte_width(modulus: &BigUint) -> usize {
    modulus.bits().div_ceil(8) as usize
}

/// Big-endian encoding of `value`, left-padded with zeros to `width` bytes.
pub fn to_fixed_be(value: &BigUint, width: usize) -> Vec<u8> {
    let raw = if value.is_zero() {
        Vec::new()
    } else {
        value.to_bytes_be()
    };
    assert!(raw.len() <= width, "value does not fit in {width} bytes");
    let mut out = vec![0u8; width - raw.len()];
    out.extend_from_slice(&raw);
    out
}

/// Uniform integer in `[0, bound)` by rejection sampling on `bits(bound)` bits.
pub fn random_below<R: RngCore + ?Sized>(rng: &mut R, bound: &BigUint) -> BigUint {
    assert!(!bound.is_zero(), "empty range");
    let bits = bound.bits();
    let bytes = bits.div_ceil(8) as usize;
    let excess = (bytes as u64) * 8 - bits;
    let mut buf = vec![0u8; bytes];
    loop {
        rng.fill_bytes(&mut buf);
        buf[0] &= 0xff >> excess;
        let candidate = BigUint::from_bytes_be(&buf);
        if &candidate < bound {
            return candidate;
        }
    }
}

const SMALL_PRIMES: [u32; 54] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193,
    197, 199, 211, 223, 227, 229, 233, 239, 241, 251,
];

/// Default Miller-Rabin round count used when validating parameters.
pub const PRIMALITY_ROUNDS: usize = 40;

/// Miller-Rabin with `rounds` random bases.
///
/// The bases come from a generator seeded by a hash of `n`, so the answer for a
/// given input never changes between runs and never consumes caller randomness.
pub fn is_probable_prime(n: &BigUint, rounds: usize) -> bool {
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for &p in SMALL_PRIMES.iter() {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }

    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;

    let seed: [u8; 32] = Sha256::digest(n.to_bytes_be()).into();
    let mut rng = ChaCha20Rng::from_seed(seed);
    let span = n - 3u32;

    'witness: for _ in 0..rounds {
        let a = random_below(&mut rng, &span) + 2u32;
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A residue modulo a prime, always held in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: BigUint,
    modulus: Arc<BigUint>,
}

impl FieldElement {
    pub fn new(value: BigUint, modulus: &Arc<BigUint>) -> Self {
        let value = if &value < modulus.as_ref() {
            value
        } else {
            value % modulus.as_ref()
        };
        Self {
            value,
            modulus: Arc::clone(modulus),
        }
    }

    /// Reduces a signed integer into `[0, modulus)`.
    pub fn from_bigint(value: &BigInt, modulus: &Arc<BigUint>) -> Self {
        let m = BigInt::from_biguint(Sign::Plus, modulus.as_ref().clone());
        let reduced = value.mod_floor(&m);
        Self::new(
            reduced.to_biguint().expect("mod_floor is non-negative"),
            modulus,
        )
    }

    pub fn from_u64(value: u64, modulus: &Arc<BigUint>) -> Self {
        Self::new(BigUint::from(value), modulus)
    }

    pub fn zero(modulus: &Arc<BigUint>) -> Self {
        Self::new(BigUint::zero(), modulus)
    }

    pub fn one(modulus: &Arc<BigUint>) -> Self {
        Self::new(BigUint::one(), modulus)
    }

    pub fn random<R: RngCore + ?Sized>(rng: &mut R, modulus: &Arc<BigUint>) -> Self {
        Self::new(random_below(rng, modulus), modulus)
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn modulus(&self) -> &Arc<BigUint> {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    pub fn is_odd(&self) -> bool {
        self.value.bit(0)
    }

    fn check_same_field(&self, other: &Self) {
        debug_assert!(
            Arc::ptr_eq(&self.modulus, &other.modulus) || self.modulus == other.modulus,
            "mixing residues of different moduli"
        );
    }

    fn with_value(&self, value: BigUint) -> Self {
        Self {
            value,
            modulus: Arc::clone(&self.modulus),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_field(other);
        let mut sum = &self.value + &other.value;
        if sum >= *self.modulus {
            sum -= self.modulus.as_ref();
        }
        self.with_value(sum)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same_field(other);
        let diff = if self.value >= other.value {
            &self.value - &other.value
        } else {
            self.modulus.as_ref() - &other.value + &self.value
        };
        self.with_value(diff)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same_field(other);
        self.with_value((&self.value * &other.value) % self.modulus.as_ref())
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn double(&self) -> Self {
        self.add(self)
    }

    pub fn neg(&self) -> Self {
        if self.value.is_zero() {
            self.clone()
        } else {
            self.with_value(self.modulus.as_ref() - &self.value)
        }
    }

    /// `self^exponent mod q`.
    pub fn pow(&self, exponent: &BigUint) -> Self {
        self.with_value(self.value.modpow(exponent, &self.modulus))
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inverse(&self) -> Result<Self, FieldError> {
        if self.value.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let m = BigInt::from_biguint(Sign::Plus, self.modulus.as_ref().clone());
        let (mut old_r, mut r) = (
            BigInt::from_biguint(Sign::Plus, self.value.clone()),
            m.clone(),
        );
        let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
        while !r.is_zero() {
            let (quotient, remainder) = old_r.div_rem(&r);
            old_r = std::mem::replace(&mut r, remainder);
            let next_s = &old_s - &quotient * &s;
            old_s = std::mem::replace(&mut s, next_s);
        }
        // old_r is the gcd; anything other than 1 means the modulus was not prime.
        if !old_r.is_one() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(Self::from_bigint(&old_s, &self.modulus))
    }

    /// Legendre symbol via Euler's criterion: 0, 1 or -1.
    pub fn legendre(&self) -> i8 {
        if self.value.is_zero() {
            return 0;
        }
        if self.modulus.as_ref() == &BigUint::from(2u32) {
            return 1;
        }
        let exponent = (self.modulus.as_ref() - 1u32) >> 1;
        if self.pow(&exponent).is_one() {
            1
        } else {
            -1
        }
    }

    /// A square root of `self`, if one exists.
    ///
    /// For `q ≡ 3 (mod 4)` this is `self^((q+1)/4)`; otherwise Tonelli-Shanks.
    /// Which of the two roots comes back is unspecified; callers that care
    /// pick between `y` and `q - y` themselves.
    pub fn sqrt(&self) -> Result<Self, FieldError> {
        if self.value.is_zero() {
            return Ok(self.clone());
        }
        let q = self.modulus.as_ref();
        if q == &BigUint::from(2u32) {
            return Ok(self.clone());
        }
        if self.legendre() != 1 {
            return Err(FieldError::NoRoot);
        }
        if q.bit(1) {
            let exponent = (q + 1u32) >> 2;
            return Ok(self.pow(&exponent));
        }
        Ok(self.tonelli_shanks())
    }

    fn tonelli_shanks(&self) -> Self {
        let q = self.modulus.as_ref();
        let q_minus_one = q - 1u32;
        let two_adicity = q_minus_one.trailing_zeros().expect("q > 2");
        let odd_part = &q_minus_one >> two_adicity;

        let mut z = Self::from_u64(2, &self.modulus);
        while z.legendre() != -1 {
            z = z.add(&Self::one(&self.modulus));
        }

        let mut m = two_adicity;
        let mut c = z.pow(&odd_part);
        let mut t = self.pow(&odd_part);
        let mut root = self.pow(&((&odd_part + 1u32) >> 1));

        while !t.is_one() {
            // least i with t^(2^i) = 1
            let mut i = 0;
            let mut probe = t.clone();
            while !probe.is_one() {
                probe = probe.square();
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = b.square();
            }
            m = i;
            c = b.square();
            t = t.mul(&c);
            root = root.mul(&b);
        }
        root
    }

    /// Fixed-width big-endian bytes, `ceil(bits(q)/8)` long.
    pub fn to_bytes(&self) -> Vec<u8> {
        to_fixed_be(&self.value, byte_width(&self.modulus))
    }

    pub fn from_bytes(bytes: &[u8], modulus: &Arc<BigUint>) -> Result<Self, FieldError> {
        let expected = byte_width(modulus);
        if bytes.len() != expected {
            return Err(FieldError::BadLength {
                expected,
                got: bytes.len(),
            });
        }
        let value = BigUint::from_bytes_be(bytes);
        if &value >= modulus.as_ref() {
            return Err(FieldError::NonCanonical);
        }
        Ok(Self::new(value, modulus))
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! forward_binop {
    ($ty:ty, $trait:ident, $method:ident) => {
        impl<'a> $trait<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                <$ty>::$method(self, rhs)
            }
        }
    };
}

forward_binop!(FieldElement, Add, add);
forward_binop!(FieldElement, Sub, sub);
forward_binop!(FieldElement, Mul, mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

/// Checks that `i² = -1` defines a field extension of degree two over `Fq`.
pub fn check_quadratic_extension(modulus: &BigUint) -> Result<(), FieldError> {
    if modulus % 4u32 == BigUint::from(3u32) {
        Ok(())
    } else {
        Err(FieldError::NotThreeModFour)
    }
}

/// `c0 + c1·i` with `i² = -1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fp2Element {
    pub c0: FieldElement,
    pub c1: FieldElement,
}

impl Fp2Element {
    pub fn new(c0: FieldElement, c1: FieldElement) -> Self {
        c0.check_same_field(&c1);
        Self { c0, c1 }
    }

    /// Embeds a base-field element as `x + 0·i`.
    pub fn from_base(c0: FieldElement) -> Self {
        let c1 = FieldElement::zero(c0.modulus());
        Self { c0, c1 }
    }

    pub fn zero(modulus: &Arc<BigUint>) -> Self {
        Self::from_base(FieldElement::zero(modulus))
    }

    pub fn one(modulus: &Arc<BigUint>) -> Self {
        Self::from_base(FieldElement::one(modulus))
    }

    pub fn random<R: RngCore + ?Sized>(rng: &mut R, modulus: &Arc<BigUint>) -> Self {
        Self::new(
            FieldElement::random(rng, modulus),
            FieldElement::random(rng, modulus),
        )
    }

    pub fn modulus(&self) -> &Arc<BigUint> {
        self.c0.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.c0.is_one() && self.c1.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.c0.add(&other.c0), self.c1.add(&other.c1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(self.c0.sub(&other.c0), self.c1.sub(&other.c1))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.c0.neg(), self.c1.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        // Karatsuba: three base multiplications.
        let v0 = self.c0.mul(&other.c0);
        let v1 = self.c1.mul(&other.c1);
        let cross = self.c0.add(&self.c1).mul(&other.c0.add(&other.c1));
        Self::new(v0.sub(&v1), cross.sub(&v0).sub(&v1))
    }

    pub fn mul_base(&self, k: &FieldElement) -> Self {
        Self::new(self.c0.mul(k), self.c1.mul(k))
    }

    pub fn square(&self) -> Self {
        // (a + bi)² = (a + b)(a - b) + 2ab·i
        let ab = self.c0.mul(&self.c1);
        Self::new(
            self.c0.add(&self.c1).mul(&self.c0.sub(&self.c1)),
            ab.double(),
        )
    }

    /// `c0 - c1·i`; equals the Frobenius `x^q` when `q ≡ 3 (mod 4)`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.c0.clone(), self.c1.neg())
    }

    /// `c0² + c1²`, the norm down to `Fq`.
    pub fn norm(&self) -> FieldElement {
        self.c0.square().add(&self.c1.square())
    }

    pub fn inverse(&self) -> Result<Self, FieldError> {
        let norm_inv = self.norm().inverse()?;
        Ok(self.conjugate().mul_base(&norm_inv))
    }

    /// Square-and-multiply, most significant bit first.
    pub fn pow(&self, exponent: &BigUint) -> Self {
        let mut acc = Self::one(self.modulus());
        for i in (0..exponent.bits()).rev() {
            acc = acc.square();
            if exponent.bit(i) {
                acc = acc.mul(self);
            }
        }
        acc
    }

    /// `c0 ‖ c1`, each fixed-width big-endian.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = self.c0.to_bytes();
        out.extend(self.c1.to_bytes());
        out
    }

    pub fn from_bytes(bytes: &[u8], modulus: &Arc<BigUint>) -> Result<Self, FieldError> {
        let width = byte_width(modulus);
        if bytes.len() != 2 * width {
            return Err(FieldError::BadLength {
                expected: 2 * width,
                got: bytes.len(),
            });
        }
        Ok(Self::new(
            FieldElement::from_bytes(&bytes[..width], modulus)?,
            FieldElement::from_bytes(&bytes[width..], modulus)?,
        ))
    }
}

impl fmt::Debug for Fp2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·i", self.c0, self.c1)
    }
}

forward_binop!(Fp2Element, Add, add);
forward_binop!(Fp2Element, Sub, sub);
forward_binop!(Fp2Element, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn m(q: u64) -> Arc<BigUint> {
        Arc::new(BigUint::from(q))
    }

    fn fe(v: u64, q: &Arc<BigUint>) -> FieldElement {
        FieldElement::from_u64(v, q)
    }

    #[test]
    fn pow_small_cases() {
        let q = m(11);
        assert_eq!(fe(5, &q).pow(&BigUint::from(3u32)), fe(4, &q));
        assert!(fe(7, &q).pow(&BigUint::zero()).is_one());
        assert!(fe(7, &q).pow(&BigUint::from(10u32)).is_one());
    }

    #[test]
    fn inverse_small_cases() {
        let q = m(7);
        assert_eq!(fe(3, &q).inverse().unwrap(), fe(5, &q));
        assert_eq!(fe(1, &q).inverse().unwrap(), fe(1, &q));
        assert_eq!(fe(0, &q).inverse(), Err(FieldError::ZeroInverse));
        let x = fe(4, &q);
        assert_eq!(x.inverse().unwrap().inverse().unwrap(), x);
    }

    #[test]
    fn sqrt_small_cases() {
        let q = m(11);
        let root = fe(5, &q).sqrt().unwrap();
        assert!(root == fe(4, &q) || root == fe(7, &q));
        assert!(fe(0, &q).sqrt().unwrap().is_zero());
        assert_eq!(fe(3, &m(7)).sqrt(), Err(FieldError::NoRoot));
    }

    #[test]
    fn tonelli_shanks_high_two_adicity() {
        // 257 - 1 = 2^8
        let q = m(257);
        for a in 1..257u64 {
            let x = fe(a, &q);
            if let Ok(r) = x.sqrt() {
                assert_eq!(r.square(), x);
            }
        }
    }

    #[test]
    fn i_squared_is_minus_one() {
        let q = m(19);
        let i = Fp2Element::new(fe(0, &q), fe(1, &q));
        let minus_one = Fp2Element::from_base(fe(18, &q));
        assert_eq!(i.square(), minus_one);
        assert_eq!(i.mul(&i), minus_one);
    }

    #[test]
    fn fp2_inverse_of_zero_fails() {
        assert_eq!(
            Fp2Element::zero(&m(19)).inverse(),
            Err(FieldError::ZeroInverse)
        );
    }

    #[test]
    fn fixed_width_encoding_pads_left() {
        let q = Arc::new(BigUint::from(0x1_0001u32));
        let x = fe(5, &q);
        assert_eq!(x.to_bytes(), vec![0, 0, 5]);
        assert_eq!(FieldElement::from_bytes(&[0, 0, 5], &q).unwrap(), x);
        assert_eq!(
            FieldElement::from_bytes(&[1, 0, 1], &q),
            Err(FieldError::NonCanonical)
        );
    }

    #[test]
    fn primality_small_numbers() {
        let primes: Vec<u32> = (0..300u32)
            .filter(|&n| is_probable_prime(&BigUint::from(n), 20))
            .collect();
        let brute: Vec<u32> = (0..300u32)
            .filter(|&n| n >= 2 && (2..n).all(|d| n % d != 0))
            .collect();
        assert_eq!(primes, brute);
        // Carmichael numbers
        for c in [561u32, 1105, 1729, 2465, 2821, 6601, 8911] {
            assert!(!is_probable_prime(&BigUint::from(c), 20));
        }
    }

    #[test]
    fn extension_needs_three_mod_four() {
        assert!(check_quadratic_extension(&BigUint::from(19u32)).is_ok());
        assert_eq!(
            check_quadratic_extension(&BigUint::from(17u32)),
            Err(FieldError::NotThreeModFour)
        );
    }
}

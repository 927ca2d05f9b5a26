use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::{Rng, RngCore};

use super::{CurveDescriptor, CurveError, CurveType};
use crate::fieldmath::{is_probable_prime, random_below, PRIMALITY_ROUNDS};

pub const DEFAULT_ATTEMPT_BUDGET: usize = 20_000;

/// Cofactor candidates tried per prime order before drawing a new order.
const COFACTOR_TRIES: usize = 10;

/// Generates Type-A parameters: a Solinas prime `r = 2^exp2 ± 2^exp1 ± 1` of
/// exactly `r_bits` bits and a prime `q = h·r − 1` of exactly `q_bits` bits,
/// with `h` a multiple of 12 (which forces `q ≡ 3 mod 4`).
///
/// `attempt_budget` bounds the number of candidate orders drawn.
pub fn generate_type_a<R: RngCore + ?Sized>(
    r_bits: u64,
    q_bits: u64,
    rng: &mut R,
    attempt_budget: usize,
) -> Result<CurveDescriptor, CurveError> {
    if r_bits < 16 {
        return Err(CurveError::Precondition(format!(
            "r needs at least 16 bits, got {r_bits}"
        )));
    }
    if r_bits >= q_bits {
        return Err(CurveError::Precondition(format!(
            "r bits ({r_bits}) must be below q bits ({q_bits})"
        )));
    }

    // q = 12·m·r − 1 must land in [2^(q_bits−1), 2^q_bits).
    let q_low = BigUint::one() << (q_bits - 1);
    let q_high = BigUint::one() << q_bits;

    for _ in 0..attempt_budget {
        let (r, exp2, exp1, sign1, sign0) = solinas_candidate(r_bits, rng);
        if r.bits() != r_bits || !is_probable_prime(&r, PRIMALITY_ROUNDS) {
            continue;
        }
        let step = &r * 12u32;
        // smallest m with 12·m·r − 1 ≥ q_low, largest with 12·m·r − 1 < q_high
        let m_min = (&q_low + 1u32 + &step - 1u32) / &step;
        let m_max = &q_high / &step;
        if m_min > m_max {
            continue;
        }
        let span = &m_max - &m_min + 1u32;

        for _ in 0..COFACTOR_TRIES {
            let m = &m_min + random_below(rng, &span);
            let h = &m * 12u32;
            let q = &h * &r - 1u32;
            if q.bits() != q_bits || !is_probable_prime(&q, PRIMALITY_ROUNDS) {
                continue;
            }
            let mut aux = BTreeMap::new();
            aux.insert("exp2".to_string(), BigInt::from(exp2));
            aux.insert("exp1".to_string(), BigInt::from(exp1));
            aux.insert("sign1".to_string(), BigInt::from(sign1));
            aux.insert("sign0".to_string(), BigInt::from(sign0));
            return Ok(CurveDescriptor {
                curve_type: CurveType::A,
                q,
                r,
                h,
                a: Some(BigUint::one()),
                b: Some(BigUint::from(0u32)),
                k: 2,
                aux,
            });
        }
    }
    Err(CurveError::GenerationTimeout(attempt_budget))
}

fn solinas_candidate<R: RngCore + ?Sized>(
    r_bits: u64,
    rng: &mut R,
) -> (BigUint, u64, u64, i32, i32) {
    let (exp2, sign1) = if rng.gen::<bool>() {
        (r_bits - 1, 1)
    } else {
        (r_bits, -1)
    };
    let exp1 = rng.gen_range(1..exp2 - 1);
    let sign0 = if rng.gen::<bool>() { 1 } else { -1 };
    let r = (BigInt::one() << exp2)
        + BigInt::from(sign1) * (BigInt::one() << exp1)
        + BigInt::from(sign0);
    let r = r.to_biguint().expect("2^exp2 dominates");
    (r, exp2, exp1, sign1, sign0)
}

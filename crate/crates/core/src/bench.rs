//! Sign/verify timing with pairing accounting.
//!
//! Wall time depends on the machine; the pairing counts do not, so both are
//! reported side by side.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::RngCore;

use crate::pairing::count_pairings;
use crate::schemes::{self, PublicParams, Scheme, SchemeError, SignOptions, UserKey};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Timing {
    pub mean: Duration,
    pub median: Duration,
}

impl Timing {
    fn from_samples(samples: &mut [Duration]) -> Self {
        samples.sort_unstable();
        let n = samples.len();
        let total: Duration = samples.iter().sum();
        let median = if n % 2 == 1 {
            samples[n / 2]
        } else {
            (samples[n / 2 - 1] + samples[n / 2]) / 2
        };
        Self {
            mean: total / n as u32,
            median,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub scheme: Scheme,
    pub iterations: usize,
    pub sign: Timing,
    pub verify: Timing,
    /// Pairings per call, averaged over the run.
    pub sign_pairings: u64,
    pub verify_pairings: u64,
    pub payload_bytes: usize,
}

/// Signs and verifies a fixed message `iterations` times per scheme, in
/// sequence. With zero iterations the report is empty.
pub fn run<R: RngCore + ?Sized>(
    params: &PublicParams,
    key: &UserKey,
    schemes: &[Scheme],
    iterations: usize,
    options: SignOptions,
    rng: &mut R,
) -> Result<Vec<BenchRow>, SchemeError> {
    if iterations == 0 {
        return Ok(Vec::new());
    }
    let message = b"benchmark message";
    let mut rows = Vec::with_capacity(schemes.len());
    for &scheme in schemes {
        let opts = if scheme == Scheme::SkSchnorr {
            options
        } else {
            SignOptions {
                hash_mode: Default::default(),
                ..options
            }
        };
        let mut sign_times = Vec::with_capacity(iterations);
        let mut verify_times = Vec::with_capacity(iterations);
        let (mut sign_pairings, mut verify_pairings) = (0, 0);
        let mut payload_bytes = 0;
        for _ in 0..iterations {
            let start = Instant::now();
            let (sig, n) =
                count_pairings(|| schemes::sign(scheme, params, key, message, rng, opts));
            sign_times.push(start.elapsed());
            let sig = sig?;
            sign_pairings += n;
            payload_bytes = sig.payload_len(params)?;

            let start = Instant::now();
            let (ok, n) = count_pairings(|| schemes::verify(params, &key.identity, message, &sig));
            verify_times.push(start.elapsed());
            verify_pairings += n;
            if !ok? {
                return Err(SchemeError::MalformedSignature(format!(
                    "{scheme} rejected its own signature"
                )));
            }
        }
        rows.push(BenchRow {
            scheme,
            iterations,
            sign: Timing::from_samples(&mut sign_times),
            verify: Timing::from_samples(&mut verify_times),
            sign_pairings: sign_pairings / iterations as u64,
            verify_pairings: verify_pairings / iterations as u64,
            payload_bytes,
        });
    }
    Ok(rows)
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn format_report(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    if rows.is_empty() {
        out.push_str("no iterations run\n");
        return out;
    }
    let _ = writeln!(
        out,
        "{:<11} {:>5} {:>12} {:>12} {:>12} {:>12} {:>8} {:>10} {:>7}",
        "scheme",
        "iters",
        "sign mean",
        "sign median",
        "verify mean",
        "verify med",
        "sign e()",
        "verify e()",
        "bytes"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:<11} {:>5} {:>10.3}ms {:>10.3}ms {:>10.3}ms {:>10.3}ms {:>8} {:>10} {:>7}",
            r.scheme.tag(),
            r.iterations,
            ms(r.sign.mean),
            ms(r.sign.median),
            ms(r.verify.mean),
            ms(r.verify.median),
            r.sign_pairings,
            r.verify_pairings,
            r.payload_bytes
        );
    }
    out
}

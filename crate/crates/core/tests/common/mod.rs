//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use ibs_core::curve::{
    generate_type_a, shipped, Curve, CurveDescriptor, Group, Point, DEFAULT_ATTEMPT_BUDGET,
};
use ibs_core::pairing::Pairing;
use ibs_core::schemes::{setup, MasterSecret, PublicParams};
use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

pub const TOY_Q: u64 = 347;
pub const TOY_R: u64 = 29;
pub const TOY_H: u64 = 12;

pub fn toy_descriptor() -> CurveDescriptor {
    CurveDescriptor::parse(&format!("type a\nq {TOY_Q}\nh {TOY_H}\nr {TOY_R}\n")).unwrap()
}

pub fn toy_group() -> Group {
    Group::from_descriptor(&toy_descriptor()).unwrap()
}

/// Type-A curve with `r` ≈ 2^40 and `q` ≈ 2^64, generated from a fixed seed.
pub fn desk_descriptor() -> &'static CurveDescriptor {
    static D: OnceLock<CurveDescriptor> = OnceLock::new();
    D.get_or_init(|| generate_type_a(40, 64, &mut rng(2024), DEFAULT_ATTEMPT_BUDGET).unwrap())
}

pub fn desk_params() -> &'static (MasterSecret, PublicParams) {
    static P: OnceLock<(MasterSecret, PublicParams)> = OnceLock::new();
    P.get_or_init(|| setup(desk_descriptor(), &mut rng(99)).unwrap())
}

pub fn desk_pairing() -> &'static Pairing {
    static P: OnceLock<Pairing> = OnceLock::new();
    P.get_or_init(|| desk_params().1.pairing().clone())
}

/// The bundled 512-bit type `a` curve.
pub fn a_params() -> &'static (MasterSecret, PublicParams) {
    static P: OnceLock<(MasterSecret, PublicParams)> = OnceLock::new();
    P.get_or_init(|| setup(shipped::by_name("a").unwrap(), &mut rng(512)).unwrap())
}

/// Base curve `y² = x³ + ax + b` of a bundled descriptor that carries both
/// coefficients.
pub fn base_curve(name: &str) -> Curve {
    let d = shipped::by_name(name).unwrap();
    Curve::new(d.q.clone(), d.a.clone().unwrap(), d.b.clone().unwrap())
}

pub fn modulus(v: u64) -> Arc<BigUint> {
    Arc::new(BigUint::from(v))
}

pub fn small_primes(below: u64) -> Vec<u64> {
    (2..below)
        .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .collect()
}

pub fn as_u64(x: &BigUint) -> u64 {
    u64::try_from(x).unwrap()
}

pub fn affine_u64(p: &Point) -> Option<(u64, u64)> {
    match p {
        Point::Infinity => None,
        Point::Affine { x, y } => Some((as_u64(x.value()), as_u64(y.value()))),
    }
}

/// A from-scratch Tate pairing for tiny Type-A curves in plain `u64`
/// arithmetic: Miller's function built by the linear recursion
/// `f_{i+1} = f_i · l_{iP,P} / v_{(i+1)P}`, then the full exponent
/// `(q² − 1)/r` by square-and-multiply. Shares no code with the library.
pub mod oracle {
    pub type Fq2 = (u64, u64);

    pub struct Toy {
        pub q: u64,
        pub r: u64,
    }

    impl Toy {
        fn add(&self, a: u64, b: u64) -> u64 {
            (a + b) % self.q
        }
        fn sub(&self, a: u64, b: u64) -> u64 {
            (a + self.q - b % self.q) % self.q
        }
        fn mul(&self, a: u64, b: u64) -> u64 {
            ((a as u128 * b as u128) % self.q as u128) as u64
        }
        fn pow(&self, mut a: u64, mut e: u64) -> u64 {
            let mut acc = 1;
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.mul(acc, a);
                }
                a = self.mul(a, a);
                e >>= 1;
            }
            acc
        }
        fn inv(&self, a: u64) -> u64 {
            assert_ne!(a % self.q, 0);
            self.pow(a, self.q - 2)
        }

        pub fn f2_mul(&self, a: Fq2, b: Fq2) -> Fq2 {
            (
                self.sub(self.mul(a.0, b.0), self.mul(a.1, b.1)),
                self.add(self.mul(a.0, b.1), self.mul(a.1, b.0)),
            )
        }
        fn f2_inv(&self, a: Fq2) -> Fq2 {
            let n = self.inv(self.add(self.mul(a.0, a.0), self.mul(a.1, a.1)));
            (self.mul(a.0, n), self.mul(self.sub(0, a.1), n))
        }
        pub fn f2_pow(&self, mut a: Fq2, mut e: u128) -> Fq2 {
            let mut acc = (1, 0);
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.f2_mul(acc, a);
                }
                a = self.f2_mul(a, a);
                e >>= 1;
            }
            acc
        }

        /// Affine addition on `y² = x³ + x`; `None` is infinity.
        pub fn point_add(
            &self,
            p: Option<(u64, u64)>,
            q: Option<(u64, u64)>,
        ) -> Option<(u64, u64)> {
            let (Some((x1, y1)), Some((x2, y2))) = (p, q) else {
                return p.or(q);
            };
            let slope = if x1 == x2 {
                if self.add(y1, y2) == 0 {
                    return None;
                }
                let num = self.add(self.mul(3, self.mul(x1, x1)), 1);
                self.mul(num, self.inv(self.mul(2, y1)))
            } else {
                self.mul(self.sub(y2, y1), self.inv(self.sub(x2, x1)))
            };
            let x3 = self.sub(self.sub(self.mul(slope, slope), x1), x2);
            let y3 = self.sub(self.mul(slope, self.sub(x1, x3)), y1);
            Some((x3, y3))
        }

        pub fn point_mul(&self, k: u64, p: Option<(u64, u64)>) -> Option<(u64, u64)> {
            (0..k).fold(None, |acc, _| self.point_add(acc, p))
        }

        /// `e(P, Q) = f_{r,P}(φ(Q))^((q²−1)/r)` with `φ(x, y) = (−x, i·y)`.
        pub fn pair(&self, p: (u64, u64), q: (u64, u64)) -> Fq2 {
            let qx: Fq2 = (self.sub(0, q.0), 0);
            let qy: Fq2 = (0, q.1);
            let mut f: Fq2 = (1, 0);
            let mut t = Some(p);
            for _ in 1..self.r {
                let (tx, ty) = t.unwrap();
                // line through T and P evaluated at φ(Q)
                let line: Fq2 = if tx == p.0 && self.add(ty, p.1) == 0 {
                    (self.sub(qx.0, tx), qx.1)
                } else {
                    let slope = if tx == p.0 {
                        let num = self.add(self.mul(3, self.mul(tx, tx)), 1);
                        self.mul(num, self.inv(self.mul(2, ty)))
                    } else {
                        self.mul(self.sub(p.1, ty), self.inv(self.sub(p.0, tx)))
                    };
                    // (Y − ty) − slope·(X − tx)
                    let dx = (self.sub(qx.0, tx), qx.1);
                    (
                        self.sub(self.sub(qy.0, ty), self.mul(slope, dx.0)),
                        self.sub(qy.1, self.mul(slope, dx.1)),
                    )
                };
                let next = self.point_add(t, Some(p));
                let vertical: Fq2 = match next {
                    None => (1, 0),
                    Some((nx, _)) => (self.sub(qx.0, nx), qx.1),
                };
                f = self.f2_mul(f, self.f2_mul(line, self.f2_inv(vertical)));
                t = next;
            }
            assert!(t.is_none(), "P must have order r");
            let exponent = (self.q as u128 * self.q as u128 - 1) / self.r as u128;
            self.f2_pow(f, exponent)
        }
    }
}

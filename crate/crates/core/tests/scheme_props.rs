mod common;

use common::{a_params, desk_descriptor, desk_params, rng};
use ibs_core::codec::SizeScheme;
use ibs_core::curve::shipped;
use ibs_core::pairing::count_pairings;
use ibs_core::schemes::{
    extract, setup, sign, verify, HashMode, MasterSecret, PublicParams, Scheme, SchemeError,
    SignOptions, Signature, SignaturePart, UserKey,
};
use rand::{Rng, RngCore};

fn random_bytes(rng: &mut impl RngCore, max: usize) -> Vec<u8> {
    let len = rng.gen_range(1..=max);
    let mut v = vec![0u8; len];
    rng.fill_bytes(&mut v);
    v
}

fn honest(
    (msk, params): &(MasterSecret, PublicParams),
    scheme: Scheme,
    rng: &mut impl RngCore,
    options: SignOptions,
) -> (UserKey, Vec<u8>, Signature) {
    let id = random_bytes(rng, 24);
    let m = random_bytes(rng, 64);
    let key = extract(msk, params, &id).unwrap();
    let sig = sign(scheme, params, &key, &m, rng, options).unwrap();
    (key, m, sig)
}

#[test]
fn completeness_at_desk_scale() {
    let mut rng = rng(10);
    for scheme in Scheme::ALL {
        for i in 0..100 {
            let options = SignOptions {
                compress: i % 2 == 1,
                hash_mode: HashMode::None,
            };
            let (key, m, sig) = honest(desk_params(), scheme, &mut rng, options);
            assert!(
                verify(&desk_params().1, &key.identity, &m, &sig).unwrap(),
                "{scheme} trial {i}"
            );
        }
    }
}

#[test]
fn completeness_at_512_bits() {
    let mut rng = rng(11);
    for scheme in Scheme::ALL {
        for _ in 0..3 {
            let (key, m, sig) = honest(a_params(), scheme, &mut rng, SignOptions::default());
            assert!(
                verify(&a_params().1, &key.identity, &m, &sig).unwrap(),
                "{scheme}"
            );
        }
    }
}

#[test]
fn single_perturbations_are_rejected() {
    let params = &desk_params().1;
    let group = params.group();
    let mut rng = rng(12);
    for scheme in Scheme::ALL {
        for _ in 0..20 {
            let (key, m, sig) = honest(desk_params(), scheme, &mut rng, SignOptions::default());

            let mut flipped = m.clone();
            let bit = rng.gen_range(0..flipped.len() * 8);
            flipped[bit / 8] ^= 1 << (bit % 8);
            assert!(
                !verify(params, &key.identity, &flipped, &sig).unwrap(),
                "{scheme}: m"
            );

            let mut bad = sig.clone();
            bad.part2 = group.add(&bad.part2, params.g1());
            assert!(
                !verify(params, &key.identity, &m, &bad).unwrap(),
                "{scheme}: S"
            );

            let mut bad = sig.clone();
            bad.part1 = match &sig.part1 {
                SignaturePart::Point(z) => SignaturePart::Point(group.add(z, params.g2())),
                SignaturePart::Challenge(c) => {
                    let mut c = c.clone();
                    c[0] ^= 0x80;
                    SignaturePart::Challenge(c)
                }
            };
            assert!(
                !verify(params, &key.identity, &m, &bad).unwrap(),
                "{scheme}: part1"
            );

            let mut other = key.identity.clone();
            other.push(b'!');
            assert!(
                !verify(params, &other, &m, &sig).unwrap(),
                "{scheme}: identity"
            );
        }
    }
}

#[test]
fn extracted_keys_are_consistent() {
    let (msk, params) = desk_params();
    let mut rng = rng(13);
    for _ in 0..30 {
        let key = extract(msk, params, &random_bytes(&mut rng, 32)).unwrap();
        assert!(key.is_consistent(params).unwrap());
    }
    let (msk, params) = a_params();
    assert!(extract(msk, params, b"alice@example.com")
        .unwrap()
        .is_consistent(params)
        .unwrap());
}

#[test]
fn setup_is_deterministic_and_consistent() {
    let d = desk_descriptor();
    let (x1, p1) = setup(d, &mut rng(5)).unwrap();
    let (x2, p2) = setup(d, &mut rng(5)).unwrap();
    assert_eq!(x1, x2);
    assert_eq!(p1.p1(), p2.p1());
    assert!(p1.is_consistent().unwrap());
    let (x3, _) = setup(d, &mut rng(6)).unwrap();
    assert_ne!(x1, x3);
}

#[test]
fn size_only_curves_cannot_sign() {
    for name in ["a1", "d159", "e", "f", "g"] {
        let d = shipped::by_name(name).unwrap();
        assert!(
            matches!(setup(d, &mut rng(0)), Err(SchemeError::UnsupportedCurve(_))),
            "{name}"
        );
    }
}

#[test]
fn schnorr_mod_r_challenge_has_order_width() {
    let mut rng = rng(14);
    for fixture in [desk_params(), a_params()] {
        let options = SignOptions {
            compress: false,
            hash_mode: HashMode::ModR,
        };
        let (key, m, sig) = honest(fixture, Scheme::SkSchnorr, &mut rng, options);
        let params = &fixture.1;
        assert_eq!(
            sig.challenge().unwrap().len(),
            params.descriptor().scalar_bytes()
        );
        assert!(verify(params, &key.identity, &m, &sig).unwrap());
        let decoded = Signature::from_bytes(&sig.to_bytes(params).unwrap(), params).unwrap();
        assert!(verify(params, &key.identity, &m, &decoded).unwrap());
    }
}

#[test]
fn nonces_are_fresh() {
    let (msk, params) = desk_params();
    let key = extract(msk, params, b"alice").unwrap();
    let mut rng = rng(15);
    for scheme in Scheme::ALL {
        let a = sign(
            scheme,
            params,
            &key,
            b"same",
            &mut rng,
            SignOptions::default(),
        )
        .unwrap();
        let b = sign(
            scheme,
            params,
            &key,
            b"same",
            &mut rng,
            SignOptions::default(),
        )
        .unwrap();
        assert_ne!(a.part1, b.part1, "{scheme}");
        assert!(verify(params, b"alice", b"same", &a).unwrap());
        assert!(verify(params, b"alice", b"same", &b).unwrap());
    }
}

#[test]
fn payloads_at_512_bits_match_the_calculator() {
    let (msk, params) = a_params();
    let key = extract(msk, params, b"alice").unwrap();
    let sizes = params.descriptor().element_sizes();
    let cg1 = params.descriptor().compressed_g1_bytes();
    let mut rng = rng(16);
    for scheme in Scheme::ALL {
        for compress in [false, true] {
            let hash_mode = if compress && scheme == Scheme::SkSchnorr {
                HashMode::Truncate20
            } else {
                HashMode::None
            };
            let options = SignOptions {
                compress,
                hash_mode,
            };
            let sig = sign(scheme, params, &key, b"m", &mut rng, options).unwrap();
            let size: SizeScheme = scheme.size_scheme();
            let expected = if compress {
                size.compressed(&sizes, cg1)
            } else {
                size.uncompressed(&sizes)
            };
            assert_eq!(
                sig.payload_len(params).unwrap(),
                expected,
                "{scheme} {compress}"
            );
            let wire = sig.to_bytes(params).unwrap();
            assert_eq!(wire.len(), expected + 6);
            let back = Signature::from_bytes(&wire, params).unwrap();
            assert!(verify(params, b"alice", b"m", &back).unwrap());
        }
    }
}

#[test]
fn verify_pairing_counts() {
    let (msk, params) = desk_params();
    let key = extract(msk, params, b"alice").unwrap();
    let mut rng = rng(17);
    for (scheme, expected) in [
        (Scheme::Sok, 3),
        (Scheme::Paterson, 3),
        (Scheme::SkElGamal, 2),
        (Scheme::SkSchnorr, 2),
        (Scheme::XunYi, 2),
    ] {
        let sig = sign(scheme, params, &key, b"m", &mut rng, SignOptions::default()).unwrap();
        let (ok, n) = count_pairings(|| verify(params, b"alice", b"m", &sig));
        assert!(ok.unwrap());
        assert_eq!(n, expected, "{scheme}");
    }
}

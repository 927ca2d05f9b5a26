use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn ibs(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ibs"))
        .current_dir(dir)
        .env_remove("IBS_PARAM_DIR")
        .args(args)
        .output()
        .expect("spawn ibs")
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = ibs(dir, args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

/// Runs setup and extract for `alice` on `params`, returning the workspace.
fn provision(params: &str) -> (TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_path_buf();
    ok(
        &d,
        &[
            "setup",
            "--params",
            params,
            "--out-keystore",
            "master.toml",
            "--out-params",
            "public.toml",
            "--seed",
            "5",
        ],
    );
    ok(
        &d,
        &[
            "extract",
            "--keystore",
            "master.toml",
            "--identity",
            "alice",
            "--out",
            "alice.toml",
        ],
    );
    fs::write(d.join("msg"), b"pay bob 10").unwrap();
    (dir, d)
}

fn verify(d: &Path, identity: &str, scheme: &str, sig: &str) -> Output {
    ibs(
        d,
        &[
            "verify",
            "--params",
            "public.toml",
            "--identity",
            identity,
            "--scheme",
            scheme,
            "--message-file",
            "msg",
            "--signature-file",
            sig,
        ],
    )
}

const SCHEMES: [&str; 5] = ["sok", "paterson", "sk-elgamal", "sk-schnorr", "xunyi"];

#[test]
fn pipeline_per_scheme_on_the_a_curve() {
    let (_tmp, d) = provision("a");
    for scheme in SCHEMES {
        for compress in [false, true] {
            let sig = format!("{scheme}-{compress}.sig");
            let mut args = vec![
                "sign",
                "--keystore",
                "alice.toml",
                "--identity",
                "alice",
                "--scheme",
                scheme,
                "--message-file",
                "msg",
                "--out",
                &sig,
            ];
            if compress {
                args.push("--compress");
            }
            ok(&d, &args);
            assert_eq!(code(&verify(&d, "alice", scheme, &sig)), 0, "{scheme}");
            assert_eq!(code(&verify(&d, "bob", scheme, &sig)), 1, "{scheme}");
        }
    }
}

#[test]
fn verify_exit_codes_cover_malformed_input() {
    let (_tmp, d) = provision("a");
    ok(
        &d,
        &[
            "sign",
            "--keystore",
            "alice.toml",
            "--scheme",
            "xunyi",
            "--message-file",
            "msg",
            "--out",
            "x.sig",
        ],
    );
    let good = fs::read(d.join("x.sig")).unwrap();

    fs::write(d.join("short.sig"), &good[..good.len() - 3]).unwrap();
    assert_eq!(code(&verify(&d, "alice", "xunyi", "short.sig")), 2);

    let mut tag = good.clone();
    tag[0] = 0xee;
    fs::write(d.join("tag.sig"), tag).unwrap();
    assert_eq!(code(&verify(&d, "alice", "xunyi", "tag.sig")), 2);

    assert_eq!(code(&verify(&d, "alice", "sok", "x.sig")), 2);
    assert_eq!(code(&verify(&d, "alice", "xunyi", "missing.sig")), 2);

    // a tampered message is a cryptographic rejection
    fs::write(d.join("msg"), b"pay bob 11").unwrap();
    assert_eq!(code(&verify(&d, "alice", "xunyi", "x.sig")), 1);

    // any record role works as --params
    fs::write(d.join("msg"), b"pay bob 10").unwrap();
    let out = ibs(
        &d,
        &[
            "verify",
            "--params",
            "alice.toml",
            "--identity",
            "alice",
            "--scheme",
            "xunyi",
            "--message-file",
            "msg",
            "--signature-file",
            "x.sig",
        ],
    );
    assert_eq!(code(&out), 0);
}

#[test]
fn sign_rejects_a_foreign_identity_and_bad_hash_mode() {
    let (_tmp, d) = provision("a");
    let out = ibs(
        &d,
        &[
            "sign",
            "--keystore",
            "alice.toml",
            "--identity",
            "bob",
            "--scheme",
            "sok",
            "--message-file",
            "msg",
            "--out",
            "s.sig",
        ],
    );
    assert_eq!(code(&out), 2);
    let out = ibs(
        &d,
        &[
            "sign",
            "--keystore",
            "alice.toml",
            "--scheme",
            "sok",
            "--hash-mode",
            "truncate20",
            "--message-file",
            "msg",
            "--out",
            "s.sig",
        ],
    );
    assert_eq!(code(&out), 2);
    let out = ibs(
        &d,
        &[
            "sign",
            "--keystore",
            "master.toml",
            "--scheme",
            "sok",
            "--message-file",
            "msg",
            "--out",
            "s.sig",
        ],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn gen_params_is_deterministic_under_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        d,
        &[
            "gen-params",
            "--rbits",
            "20",
            "--qbits",
            "64",
            "--seed",
            "7",
            "--out",
            "one.properties",
        ],
    );
    ok(
        d,
        &[
            "gen-params",
            "--rbits",
            "20",
            "--qbits",
            "64",
            "--seed",
            "7",
            "--out",
            "two.properties",
        ],
    );
    let one = fs::read(d.join("one.properties")).unwrap();
    assert_eq!(one, fs::read(d.join("two.properties")).unwrap());
    let text = String::from_utf8(one).unwrap();
    assert!(text.starts_with("type a"), "{text}");
    assert_eq!(
        ok(
            d,
            &[
                "gen-params",
                "--rbits",
                "20",
                "--qbits",
                "64",
                "--seed",
                "7"
            ]
        ),
        text
    );
}

#[test]
fn gen_params_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        code(&ibs(
            dir.path(),
            &["gen-params", "--rbits", "64", "--qbits", "32"]
        )),
        2
    );
    assert_eq!(code(&ibs(dir.path(), &["gen-params", "--qbits", "32"])), 2);
}

#[test]
fn gen_params_timeout_is_a_runtime_failure() {
    let dir = tempfile::tempdir().unwrap();
    let out = ibs(
        dir.path(),
        &[
            "gen-params",
            "--rbits",
            "40",
            "--qbits",
            "400",
            "--attempts",
            "0",
            "--seed",
            "1",
        ],
    );
    assert_eq!(code(&out), 1);
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn generated_params_feed_the_pipeline_and_schnorr_truncates_to_41_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        d,
        &[
            "gen-params",
            "--rbits",
            "100",
            "--qbits",
            "159",
            "--seed",
            "3",
            "--out",
            "d159ish.properties",
        ],
    );
    let (_tmp, w) = provision(d.join("d159ish.properties").to_str().unwrap());
    let out = ok(
        &w,
        &[
            "sign",
            "--keystore",
            "alice.toml",
            "--scheme",
            "sk-schnorr",
            "--compress",
            "--hash-mode",
            "truncate20",
            "--message-file",
            "msg",
            "--out",
            "s.sig",
        ],
    );
    assert!(out.contains("payload 41 bytes"), "{out}");
    assert_eq!(code(&verify(&w, "alice", "sk-schnorr", "s.sig")), 0);
}

#[test]
fn param_dir_env_resolves_bare_names() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        d,
        &[
            "gen-params",
            "--rbits",
            "24",
            "--qbits",
            "64",
            "--seed",
            "9",
            "--out",
            "tiny.properties",
        ],
    );
    let out = Command::new(env!("CARGO_BIN_EXE_ibs"))
        .current_dir(std::env::temp_dir())
        .env("IBS_PARAM_DIR", d)
        .args(["setup", "--params", "tiny", "--out-keystore"])
        .arg(d.join("m.toml"))
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(
        code(&ibs(
            d,
            &["setup", "--params", "nowhere", "--out-keystore", "x.toml"]
        )),
        2
    );
}

#[test]
fn sizes_tables() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let f = ok(d, &["sizes", "--curves", "f", "--schemes", "sok"]);
    assert!(
        f.lines()
            .nth(1)
            .unwrap()
            .split_whitespace()
            .any(|c| c == "120"),
        "{f}"
    );

    let a1 = ok(
        d,
        &[
            "sizes",
            "--curves",
            "a1",
            "--schemes",
            "sk-schnorr",
            "--compressed",
        ],
    );
    assert!(a1.contains("292/151"), "{a1}");

    let grid = ok(
        d,
        &[
            "sizes",
            "--curves",
            "all",
            "--schemes",
            "all",
            "--compressed",
        ],
    );
    let lines: Vec<&str> = grid.lines().collect();
    assert_eq!(lines.len(), 8, "{grid}");
    assert!(lines
        .iter()
        .skip(1)
        .all(|l| l.split_whitespace().count() == 8));
    assert!(lines[4].contains("72/41"), "{grid}");

    let csv = ok(d, &["sizes", "--csv"]);
    assert_eq!(csv.lines().count(), 1 + 49);

    let elements = ok(d, &["sizes", "--elements", "--curves", "g"]);
    assert!(
        elements.contains("19") && elements.contains("190"),
        "{elements}"
    );

    assert_eq!(code(&ibs(d, &["sizes", "--curves", "zz"])), 2);
    assert_eq!(code(&ibs(d, &["sizes", "--schemes", "bls"])), 2);
}

#[test]
fn bench_reports_pairing_counts() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        d,
        &[
            "gen-params",
            "--rbits",
            "40",
            "--qbits",
            "64",
            "--seed",
            "4",
            "--out",
            "small.properties",
        ],
    );
    let report = ok(
        d,
        &[
            "bench",
            "--params",
            "small.properties",
            "--iterations",
            "2",
            "--seed",
            "1",
        ],
    );
    let counts: Vec<(String, String, String)> = report
        .lines()
        .skip(1)
        .map(|l| {
            let c: Vec<&str> = l.split_whitespace().collect();
            (c[0].to_string(), c[6].to_string(), c[7].to_string())
        })
        .collect();
    let expect = [
        ("sok", "0", "3"),
        ("paterson", "0", "3"),
        ("sk_elgamal", "0", "2"),
        ("sk_schnorr", "1", "2"),
        ("xunyi", "0", "2"),
    ];
    assert_eq!(counts.len(), expect.len(), "{report}");
    for ((s, sp, vp), (es, esp, evp)) in counts.iter().zip(expect) {
        assert_eq!((s.as_str(), sp.as_str(), vp.as_str()), (es, esp, evp));
    }

    let empty = ibs(
        d,
        &["bench", "--params", "small.properties", "--iterations", "0"],
    );
    assert_eq!(code(&empty), 0);
    assert_eq!(
        String::from_utf8_lossy(&empty.stdout),
        "no iterations run\n"
    );
}

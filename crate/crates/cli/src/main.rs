//! `ibs`: parameter generation, PKG operations, signing, verification, size
//! tables and benchmarks.
//!
//! Exit status: 0 on success or an accepted signature, 1 on a rejected
//! signature or a runtime failure, 2 on unusable input.

mod curves;
mod error;
mod keystore;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ibs_core::bench;
use ibs_core::codec::{
    element_size_table, format_csv, format_element_table, format_table, size_report_by_name,
};
use ibs_core::curve::{generate_type_a, shipped, CurveError, DEFAULT_ATTEMPT_BUDGET};
use ibs_core::schemes::{self, extract, HashMode, Scheme, SignOptions, Signature};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use error::{CliError, CliResult};
use keystore::KeystoreRecord;

#[derive(Parser)]
#[command(
    name = "ibs",
    version,
    about = "Identity-based signatures over a Type-A pairing"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate Type-A curve parameters.
    GenParams(GenParamsArgs),
    /// Create a master secret and public parameters.
    Setup(SetupArgs),
    /// Issue a user key for an identity.
    Extract(ExtractArgs),
    /// Sign a message with a user key.
    Sign(SignArgs),
    /// Verify a signature: exit 0 accept, 1 reject, 2 malformed input.
    Verify(VerifyArgs),
    /// Print signature and element size tables for the bundled curves.
    Sizes(SizesArgs),
    /// Time signing and verification and count pairings.
    Bench(BenchArgs),
}

#[derive(Args)]
struct GenParamsArgs {
    /// Bit length of the group order r.
    #[arg(long)]
    rbits: u64,
    /// Bit length of the field prime q.
    #[arg(long)]
    qbits: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// Candidate orders drawn before giving up.
    #[arg(long, default_value_t = DEFAULT_ATTEMPT_BUDGET)]
    attempts: usize,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SetupArgs {
    /// Parameter file path or bundled curve name.
    #[arg(long)]
    params: String,
    /// Master record (holds the secret).
    #[arg(long)]
    out_keystore: PathBuf,
    /// Public record for verifiers.
    #[arg(long)]
    out_params: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct ExtractArgs {
    /// Master record written by `setup`.
    #[arg(long)]
    keystore: PathBuf,
    #[arg(long)]
    identity: String,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SignArgs {
    /// User record written by `extract`.
    #[arg(long)]
    keystore: PathBuf,
    /// Must match the record when given.
    #[arg(long)]
    identity: Option<String>,
    #[arg(long)]
    scheme: Scheme,
    #[arg(long)]
    message_file: PathBuf,
    #[arg(long)]
    compress: bool,
    /// SK-Schnorr challenge format: none, truncate20 or mod_r.
    #[arg(long, default_value = "none")]
    hash_mode: HashMode,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Any record produced by `setup` or `extract`.
    #[arg(long)]
    params: PathBuf,
    #[arg(long)]
    identity: String,
    #[arg(long)]
    scheme: Scheme,
    #[arg(long)]
    message_file: PathBuf,
    #[arg(long)]
    signature_file: PathBuf,
}

#[derive(Args)]
struct SizesArgs {
    /// Comma-separated curve names, or `all`.
    #[arg(long, default_value = "all", value_delimiter = ',')]
    curves: Vec<String>,
    /// Comma-separated scheme tags, or `all`.
    #[arg(long, default_value = "all", value_delimiter = ',')]
    schemes: Vec<String>,
    /// Show `uncompressed/compressed` in each cell.
    #[arg(long)]
    compressed: bool,
    /// Emit comma-separated rows instead of a grid.
    #[arg(long)]
    csv: bool,
    /// Print per-element sizes instead of signature sizes.
    #[arg(long)]
    elements: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Parameter file path or bundled curve name.
    #[arg(long)]
    params: String,
    /// Comma-separated scheme tags, or `all`.
    #[arg(long, default_value = "all", value_delimiter = ',')]
    schemes: Vec<String>,
    #[arg(long, default_value_t = 10)]
    iterations: usize,
    #[arg(long)]
    compress: bool,
    /// Applied to SK-Schnorr only.
    #[arg(long, default_value = "none")]
    hash_mode: HashMode,
    #[arg(long)]
    seed: Option<u64>,
}

fn rng(seed: Option<u64>) -> ChaCha20Rng {
    match seed {
        Some(s) => ChaCha20Rng::seed_from_u64(s),
        None => ChaCha20Rng::from_entropy(),
    }
}

fn read(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, bytes: &[u8]) -> CliResult<()> {
    fs::write(path, bytes).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn gen_params(args: GenParamsArgs) -> CliResult<()> {
    if args.rbits >= args.qbits {
        return Err(CliError::Input(format!(
            "--rbits ({}) must be below --qbits ({})",
            args.rbits, args.qbits
        )));
    }
    let d = generate_type_a(args.rbits, args.qbits, &mut rng(args.seed), args.attempts).map_err(
        |e| match e {
            CurveError::GenerationTimeout(_) => CliError::failure(e),
            other => CliError::input(other),
        },
    )?;
    let text = d.to_properties();
    match args.out {
        Some(path) => {
            write(&path, text.as_bytes())?;
            eprintln!(
                "wrote {} ({} bit q, {} bit r)",
                path.display(),
                d.q_bits(),
                d.r_bits()
            );
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn setup(args: SetupArgs) -> CliResult<()> {
    let resolved = curves::resolve(&args.params)?;
    let (msk, params) =
        schemes::setup(&resolved.descriptor, &mut rng(args.seed)).map_err(CliError::input)?;
    let master = KeystoreRecord::master(&resolved.reference, &params, &msk);
    master.write(&args.out_keystore)?;
    if let Some(path) = &args.out_params {
        master.public_only().write(path)?;
    }
    eprintln!("wrote master record {}", args.out_keystore.display());
    Ok(())
}

fn extract_cmd(args: ExtractArgs) -> CliResult<()> {
    let record = KeystoreRecord::read(&args.keystore)?;
    let (msk, params) = record.load_master()?;
    let key = extract(&msk, &params, args.identity.as_bytes()).map_err(CliError::input)?;
    KeystoreRecord::user(&record.curve, &params, &key)?.write(&args.out)?;
    eprintln!(
        "wrote user record {} for `{}`",
        args.out.display(),
        args.identity
    );
    Ok(())
}

fn sign(args: SignArgs) -> CliResult<()> {
    let (key, params) = KeystoreRecord::read(&args.keystore)?.load_user()?;
    if let Some(id) = &args.identity {
        if id.as_bytes() != key.identity.as_slice() {
            return Err(CliError::Input(format!(
                "--identity `{id}` does not match the keystore identity"
            )));
        }
    }
    let message = read(&args.message_file)?;
    let options = SignOptions {
        compress: args.compress,
        hash_mode: args.hash_mode,
    };
    let sig = schemes::sign(
        args.scheme,
        &params,
        &key,
        &message,
        &mut rng(args.seed),
        options,
    )
    .map_err(|e| match e {
        schemes::SchemeError::NonceExhausted(_) => CliError::failure(e),
        other => CliError::input(other),
    })?;
    let bytes = sig.to_bytes(&params).map_err(CliError::failure)?;
    write(&args.out, &bytes)?;
    let payload = sig.payload_len(&params).map_err(CliError::failure)?;
    println!(
        "{} signature: payload {payload} bytes ({} on the wire)",
        args.scheme,
        bytes.len()
    );
    Ok(())
}

fn verify(args: VerifyArgs) -> CliResult<bool> {
    let params = KeystoreRecord::read(&args.params)?.public_params()?;
    let message = read(&args.message_file)?;
    let bytes = read(&args.signature_file)?;
    let sig = Signature::from_bytes(&bytes, &params).map_err(CliError::input)?;
    if sig.scheme != args.scheme {
        return Err(CliError::Input(format!(
            "signature is {}, not {}",
            sig.scheme, args.scheme
        )));
    }
    schemes::verify(&params, args.identity.as_bytes(), &message, &sig).map_err(CliError::input)
}

fn sizes(args: SizesArgs) -> CliResult<()> {
    let curves: Vec<&str> = args.curves.iter().map(|s| s.trim()).collect();
    if args.elements {
        let names: Vec<&str> = if curves.contains(&"all") {
            shipped::names().collect()
        } else {
            curves
        };
        let resolved = names
            .iter()
            .map(|n| {
                shipped::by_name(n)
                    .map(|d| (*n, d))
                    .ok_or_else(|| CliError::Input(format!("unknown curve `{n}`")))
            })
            .collect::<CliResult<Vec<_>>>()?;
        print!("{}", format_element_table(&element_size_table(&resolved)));
        return Ok(());
    }
    let schemes: Vec<&str> = args.schemes.iter().map(|s| s.trim()).collect();
    let rows = size_report_by_name(&curves, &schemes).map_err(CliError::input)?;
    if args.csv {
        print!("{}", format_csv(&rows));
    } else {
        print!("{}", format_table(&rows, args.compressed));
    }
    Ok(())
}

fn parse_schemes(list: &[String]) -> CliResult<Vec<Scheme>> {
    if list.iter().any(|s| s.trim() == "all") {
        return Ok(Scheme::ALL.to_vec());
    }
    list.iter()
        .map(|s| s.trim().parse().map_err(CliError::input))
        .collect()
}

fn bench_cmd(args: BenchArgs) -> CliResult<()> {
    let schemes = parse_schemes(&args.schemes)?;
    let resolved = curves::resolve(&args.params)?;
    let mut rng = rng(args.seed);
    let (msk, params) = schemes::setup(&resolved.descriptor, &mut rng).map_err(CliError::input)?;
    let key = extract(&msk, &params, b"bench@example.org").map_err(CliError::failure)?;
    let options = SignOptions {
        compress: args.compress,
        hash_mode: args.hash_mode,
    };
    let rows = bench::run(&params, &key, &schemes, args.iterations, options, &mut rng)
        .map_err(CliError::failure)?;
    print!("{}", bench::format_report(&rows));
    Ok(())
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::GenParams(a) => gen_params(a)?,
        Command::Setup(a) => setup(a)?,
        Command::Extract(a) => extract_cmd(a)?,
        Command::Sign(a) => sign(a)?,
        Command::Verify(a) => {
            return Ok(if verify(a)? {
                println!("accept");
                ExitCode::SUCCESS
            } else {
                println!("reject");
                ExitCode::from(1)
            });
        }
        Command::Sizes(a) => sizes(a)?,
        Command::Bench(a) => bench_cmd(a)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

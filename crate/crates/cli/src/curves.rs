//! Turning a `--params`/`curve` reference into a descriptor.

use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use ibs_core::curve::{shipped, CurveDescriptor};

use crate::error::{CliError, CliResult};

/// Directory searched for parameter files named on the command line.
pub const PARAM_DIR_ENV: &str = "IBS_PARAM_DIR";

/// A resolved descriptor and the reference to record for it: an absolute
/// path for files, the bare name for bundled curves.
pub struct Resolved {
    pub reference: String,
    pub descriptor: CurveDescriptor,
}

fn from_file(path: &Path) -> CliResult<Resolved> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let descriptor = CurveDescriptor::parse(&text)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let reference = fs::canonicalize(path)
        .unwrap_or_else(|_| path.to_path_buf())
        .display()
        .to_string();
    Ok(Resolved {
        reference,
        descriptor,
    })
}

/// Looks `reference` up as a file path, then inside `$IBS_PARAM_DIR`
/// (with and without a `.properties` suffix), then among the bundled curves.
pub fn resolve(reference: &str) -> CliResult<Resolved> {
    let direct = Path::new(reference);
    if direct.is_file() {
        return from_file(direct);
    }
    if let Some(dir) = env::var_os(PARAM_DIR_ENV) {
        let dir = PathBuf::from(dir);
        for candidate in [
            dir.join(reference),
            dir.join(format!("{reference}.properties")),
        ] {
            if candidate.is_file() {
                return from_file(&candidate);
            }
        }
    }
    if let Some(descriptor) = shipped::by_name(reference) {
        return Ok(Resolved {
            reference: reference.trim_end_matches(".properties").to_string(),
            descriptor: descriptor.clone(),
        });
    }
    Err(CliError::Input(format!(
        "no parameter file `{reference}` (not a file, not in ${PARAM_DIR_ENV}, not a bundled curve)"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_names_resolve() {
        let r = resolve("a.properties").unwrap();
        assert_eq!(r.reference, "a");
        assert_eq!(&r.descriptor, shipped::by_name("a").unwrap());
    }

    #[test]
    fn files_resolve_to_absolute_paths() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.properties");
        fs::write(&path, shipped::text_by_name("a").unwrap()).unwrap();
        let r = resolve(path.to_str().unwrap()).unwrap();
        assert!(Path::new(&r.reference).is_absolute());
    }

    #[test]
    fn unknown_reference_is_an_input_error() {
        assert!(matches!(resolve("no-such-curve"), Err(CliError::Input(_))));
    }
}

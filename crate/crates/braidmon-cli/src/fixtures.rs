//! The shipped fixture directory.

use std::path::{Path, PathBuf};

use braidmon::halftwist::Conventions;

use crate::error::CliError;
use crate::formats::parse_calibration;

/// Environment variable that replaces the fixture directory.
pub const FIXTURES_ENV: &str = "BRAIDMON_FIXTURES";

/// Factorizations shipped with the crate.
pub const NAMES: [&str; 4] = ["cayley", "conic", "delta-tilde", "three-lines"];

/// `$BRAIDMON_FIXTURES`, or the directory next to this crate's manifest.
pub fn dir() -> PathBuf {
    match std::env::var_os(FIXTURES_ENV) {
        Some(d) if !d.is_empty() => PathBuf::from(d),
        _ => PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")),
    }
}

pub(crate) fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Path of `<name>.<ext>` in the fixture directory.
pub fn path(name: &str, ext: &str) -> PathBuf {
    dir().join(format!("{name}.{ext}"))
}

/// Text of a named factorization.
pub fn bmf_text(name: &str) -> Result<String, CliError> {
    let p = path(name, "bmf");
    if name.contains(['/', '\\']) || !p.is_file() {
        return Err(CliError::UnknownFixture(name.to_string()));
    }
    read(&p)
}

/// The calibration record, or the built-in default when the file is absent.
pub fn conventions() -> Result<Conventions, CliError> {
    let p = dir().join("calibration");
    if !p.exists() {
        return Ok(Conventions::CALIBRATED);
    }
    parse_calibration(&read(&p)?).map_err(|source| CliError::Parse { path: p.display().to_string(), source })
}

/// Every `*.bmf` file in the fixture directory, sorted.
pub fn list() -> Result<Vec<String>, CliError> {
    let d = dir();
    let entries = std::fs::read_dir(&d).map_err(|source| CliError::Io { path: d.clone(), source })?;
    let mut names: Vec<String> = entries
        .filter_map(|e| e.ok())
        .filter_map(|e| e.file_name().to_str().and_then(|n| n.strip_suffix(".bmf")).map(str::to_string))
        .collect();
    names.sort();
    Ok(names)
}

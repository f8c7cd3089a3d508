use std::io::Write;
use std::path::Path;

use rectlevel_core::{parse_instance, Family};
use tempfile::NamedTempFile;

use crate::error::CliError;

/// Write through a temporary file in the target directory, then rename.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(|e| CliError::io(path, e))?;
    tmp.write_all(contents).map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

/// Read, parse and validate an instance file.
pub fn read_family(path: &Path) -> Result<Family, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let f = parse_instance(&text).map_err(|e| CliError::bad_input(format!("{}: {e}", path.display())))?;
    f.validate().map_err(|e| CliError::bad_input(format!("{}: {e}", path.display())))?;
    Ok(f)
}

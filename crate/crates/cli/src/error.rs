use std::fmt;
use std::path::Path;

/// Process exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_BAD_INPUT: u8 = 2;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn bad_input(message: impl Into<String>) -> Self {
        CliError { code: EXIT_BAD_INPUT, message: message.into() }
    }

    pub fn failed(message: impl Into<String>) -> Self {
        CliError { code: EXIT_CHECK_FAILED, message: message.into() }
    }

    pub fn io(path: &Path, err: impl fmt::Display) -> Self {
        Self::bad_input(format!("{}: {err}", path.display()))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<rectlevel_core::Error> for CliError {
    fn from(e: rectlevel_core::Error) -> Self {
        CliError::bad_input(e.to_string())
    }
}

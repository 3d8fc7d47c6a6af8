//! CLI failures and their exit codes.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Malformed arguments or an invalid Hessenberg function.
    Usage(String),
    /// The input exceeds `--max-n`.
    SizeGuard { n: usize, max_n: usize },
    /// An exact computation failed an internal consistency check.
    Compute(hessdot::Error),
    /// Writing output or preparing the cache directory failed.
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::SizeGuard { .. } => 2,
            CliError::Compute(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::SizeGuard { n, max_n } => {
                write!(
                    f,
                    "n = {n} exceeds --max-n {max_n}; raise --max-n to run it anyway"
                )
            }
            CliError::Compute(e) => write!(f, "computation failed: {e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<hessdot::Error> for CliError {
    fn from(e: hessdot::Error) -> Self {
        CliError::Compute(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

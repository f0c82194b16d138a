use std::fmt;

/// Failure of a command, split by exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, missing or malformed inputs, bad configuration. Exit code 2.
    Usage(String),
    /// Anything that went wrong after the inputs were accepted. Exit code 1.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Internal(m) => f.write_str(m),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Input-side errors are the user's to fix.
pub fn input<E: fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn internal<E: fmt::Display>(e: E) -> CliError {
    CliError::Internal(e.to_string())
}

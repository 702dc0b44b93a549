use std::fmt;
use std::io;

/// Exit status: 0 ok, 1 runtime failure, 2 usage error.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Runtime(m) => f.write_str(m),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Runtime(format!("I/O error: {e}"))
    }
}

impl From<rngpack::Error> for CliError {
    fn from(e: rngpack::Error) -> Self {
        use rngpack::Error::*;
        match e {
            UnknownEngine(_) | InvalidParameter(_) | NotPositiveSemidefinite(_) | JumpUnsupported(_)
            | StreamUnsupported(_) | WrongEngine(..) => CliError::Usage(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

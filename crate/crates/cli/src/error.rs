use std::fmt;

use projgeo_core::Error;

/// Process exit codes.
pub mod code {
    pub const CHECK_FAILED: u8 = 1;
    pub const BAD_INPUT: u8 = 2;
    pub const MISMATCH: u8 = 3;
    pub const ILL_CONDITIONED: u8 = 4;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn bad_input(message: impl Into<String>) -> Self {
        Self {
            code: code::BAD_INPUT,
            message: message.into(),
        }
    }

    pub fn mismatch(message: impl Into<String>) -> Self {
        Self {
            code: code::MISMATCH,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DimensionMismatch { .. }
            | Error::FieldMismatch { .. }
            | Error::ShapeMismatch { .. }
            | Error::NotSquare { .. }
            | Error::NotTransverse(_) => code::MISMATCH,
            Error::IllConditioned { .. }
            | Error::SingularCoefficients(_)
            | Error::RankDeficientToZero
            | Error::DegenerateProjection => code::ILL_CONDITIONED,
            Error::ZeroVector | Error::InvalidRange(_) | Error::NonFinite | Error::SamePoint => code::BAD_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::bad_input(format!("invalid JSON: {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::bad_input(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        Self::bad_input(e.to_string())
    }
}

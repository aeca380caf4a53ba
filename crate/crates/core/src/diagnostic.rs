//! Machine-readable errors shared by the parser, checker and driver.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::span::SourceSpan;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ErrorCode {
    UnboundVariable,
    SyntaxError,
    ConversionFailure,
    UniverseError,
    FibrancyViolation,
    NonFibrantMotive,
    NonFibrantEqualityFormation,
    InferenceFailure,
    DuplicateName,
    /// A `#fail` item checked, or failed with a different code than pinned.
    ExpectationFailed,
    /// The definition unfolding budget ran out.
    BudgetExhausted,
}

impl ErrorCode {
    pub const ALL: [ErrorCode; 11] = [
        ErrorCode::UnboundVariable,
        ErrorCode::SyntaxError,
        ErrorCode::ConversionFailure,
        ErrorCode::UniverseError,
        ErrorCode::FibrancyViolation,
        ErrorCode::NonFibrantMotive,
        ErrorCode::NonFibrantEqualityFormation,
        ErrorCode::InferenceFailure,
        ErrorCode::DuplicateName,
        ErrorCode::ExpectationFailed,
        ErrorCode::BudgetExhausted,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::UnboundVariable => "UnboundVariable",
            ErrorCode::SyntaxError => "SyntaxError",
            ErrorCode::ConversionFailure => "ConversionFailure",
            ErrorCode::UniverseError => "UniverseError",
            ErrorCode::FibrancyViolation => "FibrancyViolation",
            ErrorCode::NonFibrantMotive => "NonFibrantMotive",
            ErrorCode::NonFibrantEqualityFormation => "NonFibrantEqualityFormation",
            ErrorCode::InferenceFailure => "InferenceFailure",
            ErrorCode::DuplicateName => "DuplicateName",
            ErrorCode::ExpectationFailed => "ExpectationFailed",
            ErrorCode::BudgetExhausted => "BudgetExhausted",
        }
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown error code `{0}`")]
pub struct UnknownErrorCode(pub String);

impl FromStr for ErrorCode {
    type Err = UnknownErrorCode;

    fn from_str(s: &str) -> Result<ErrorCode, UnknownErrorCode> {
        ErrorCode::ALL.into_iter().find(|code| code.as_str() == s).ok_or_else(|| UnknownErrorCode(s.to_owned()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{span}: {code}: {message}")]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: ErrorCode,
    pub span: SourceSpan,
    pub message: String,
    /// Pretty-printed expected term, for conversion and sort mismatches.
    pub expected: Option<String>,
    /// Pretty-printed actual term, for conversion and sort mismatches.
    pub actual: Option<String>,
}

impl Diagnostic {
    pub fn error(code: ErrorCode, span: SourceSpan, message: impl Into<String>) -> Diagnostic {
        Diagnostic { severity: Severity::Error, code, span, message: message.into(), expected: None, actual: None }
    }

    pub fn with_terms(mut self, expected: String, actual: String) -> Diagnostic {
        self.expected = Some(expected);
        self.actual = Some(actual);
        self
    }
}

use thiserror::Error;

/// Errors surfaced by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A rational operation left the representable i64 range.
    #[error("rational arithmetic overflow")]
    Overflow,
    /// Division by zero or a zero denominator.
    #[error("zero denominator")]
    ZeroDenominator,
    /// Malformed input text (rationals, parabolic names).
    #[error("parse error: {0}")]
    Parse(String),
    /// A differential-operator edge set fed to transitive reduction has a cycle.
    #[error("cycle detected in differential-operator edge set")]
    Cycle,
    /// An orbit node has no Knapp-Stein partner; the orbit is corrupted.
    #[error("missing Knapp-Stein partner for node \"{0}\"")]
    MissingKsPartner(String),
}

pub type Result<T> = std::result::Result<T, Error>;

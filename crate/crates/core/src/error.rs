//! Error type shared by all core modules.

use thiserror::Error;

/// Errors raised by state algebra, perceptron and network operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    /// Zero or non-finite amplitude pair cannot be rescaled to unit norm.
    #[error("unnormalizable state: zero or non-finite amplitudes")]
    Unnormalizable,

    /// Born probabilities are undefined for a zero-norm state.
    #[error("unmeasurable state: zero norm")]
    UnmeasurableState,

    /// Input list length does not match the perceptron arity.
    #[error("arity mismatch: expected {expected} inputs, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// The learning rule is only defined when the output operator is the identity.
    #[error("learning with a non-identity output operator ({label}) is undefined")]
    NonIdentityOutputOperator { label: String },

    /// Step size must be positive and finite.
    #[error("invalid step size {0}: must be positive and finite")]
    InvalidStepSize(f64),

    /// Classical rule requires a step size strictly inside (0, 1).
    #[error("classical step size {0} outside (0, 1)")]
    StepSizeOutOfRange(f64),

    /// A learning configuration field violates its invariant.
    #[error("invalid learning config: {0}")]
    InvalidConfig(String),

    /// A fan-in index references a nonexistent upstream output.
    #[error("dangling fan-in index {index} in layer {layer}: only {available} upstream outputs")]
    WiringError {
        layer: usize,
        index: usize,
        available: usize,
    },

    /// Training requires at least one pattern.
    #[error("empty pattern set")]
    EmptyPatterns,
}

pub type Result<T> = std::result::Result<T, CoreError>;

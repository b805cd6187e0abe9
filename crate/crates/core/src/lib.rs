//! Deterministic simulation library for a single-qubit perceptron with
//! matrix-valued weights: qubit state algebra, the outer-product learning
//! rule and its closed-form geometric convergence law, a classical perceptron
//! baseline, and an optical (phase shifter / beam splitter / attenuator)
//! realization of learned weights.

pub mod classical;
mod error;
pub mod optics;
pub mod perceptron;
pub mod qstate;

pub use error::{CoreError, Result};
pub use num_complex::Complex64;

pub use classical::{Activation, ClassicalPerceptron};
pub use optics::{
    decompose_weight, singular_values, unitarity_deviation, BeamSplitter, OpticalCircuit,
    PhaseShifter,
};
pub use perceptron::{
    init_weights, predicted_ratio, predicted_ratio_unit_inputs, LayeredNetwork, LearningConfig,
    OutputOperator, Perceptron, TraceStep, TrainingTrace,
};
pub use qstate::{Qubit, StateVector, WeightMatrix, RATIO_FLOOR, TOL};

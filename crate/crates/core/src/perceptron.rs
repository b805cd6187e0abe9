//! The quantum perceptron: forward rule, outer-product learning rule,
//! single-pattern training loop with its closed-form contraction ratio, and a
//! thin layering facility for composing trained units.
//!
//! The forward rule maps n input states through per-input 2×2 weight matrices
//! to one output state, |y⟩ = F̂ Σⱼ ŵⱼ|xⱼ⟩. With F̂ the identity, one learning
//! step sends the residual |d⟩ − |y⟩ to (1 − ηS)·(|d⟩ − |y⟩), where
//! S = Σⱼ⟨xⱼ|xⱼ⟩, so the squared error contracts by exactly (1 − ηS)² per
//! step — (1 − nη)² for unit-norm inputs. The training loop records both the
//! measured and the predicted ratio at every step.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{CoreError, Result};
use crate::qstate::{Qubit, StateVector, WeightMatrix, RATIO_FLOOR, TOL};

/// The operator F̂ applied to the weighted input sum.
///
/// Defaults to the identity. Learning with any other operator is undefined
/// and refused by [`Perceptron::learn_step`].
#[derive(Debug, Clone, PartialEq)]
pub struct OutputOperator {
    matrix: WeightMatrix,
    label: String,
}

impl OutputOperator {
    pub fn new(matrix: WeightMatrix, label: impl Into<String>) -> Self {
        Self {
            matrix,
            label: label.into(),
        }
    }

    /// The identity operator, the only case the learning rule covers.
    pub fn identity() -> Self {
        Self::new(WeightMatrix::identity(), "identity")
    }

    pub fn matrix(&self) -> &WeightMatrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Entrywise identity check within the stored-value tolerance.
    pub fn is_identity(&self) -> bool {
        self.matrix.max_abs_diff_from_identity() < TOL
    }
}

impl Default for OutputOperator {
    fn default() -> Self {
        Self::identity()
    }
}

/// Step size, stopping rule and reproducibility knobs for a training run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LearningConfig {
    /// Step size η of the update rule. Must be positive and finite. Values
    /// at or above 1/S leave the guaranteed-convergence regime; training
    /// still runs but the trace carries a warning flag.
    pub eta: f64,
    /// Maximum number of weight updates before giving up.
    pub max_steps: usize,
    /// Stop once the squared error falls below this threshold.
    pub tolerance: f64,
    /// Seed for reproducible weight initialization.
    pub seed: u64,
    /// Radius of the complex disc weights are initialized from.
    pub init_radius: f64,
}

impl LearningConfig {
    pub fn new(
        eta: f64,
        max_steps: usize,
        tolerance: f64,
        seed: u64,
        init_radius: f64,
    ) -> Result<Self> {
        let cfg = Self {
            eta,
            max_steps,
            tolerance,
            seed,
            init_radius,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eta > 0.0) || !self.eta.is_finite() {
            return Err(CoreError::InvalidConfig(format!(
                "eta must be positive and finite, got {}",
                self.eta
            )));
        }
        if self.max_steps < 1 {
            return Err(CoreError::InvalidConfig(
                "max_steps must be at least 1".into(),
            ));
        }
        if !(self.tolerance >= 0.0) {
            return Err(CoreError::InvalidConfig(format!(
                "tolerance must be non-negative, got {}",
                self.tolerance
            )));
        }
        if !(self.init_radius >= 0.0) || !self.init_radius.is_finite() {
            return Err(CoreError::InvalidConfig(format!(
                "init_radius must be non-negative and finite, got {}",
                self.init_radius
            )));
        }
        Ok(())
    }
}

impl Default for LearningConfig {
    fn default() -> Self {
        Self {
            eta: 0.1,
            max_steps: 1000,
            tolerance: 1e-20,
            seed: 0,
            init_radius: 0.1,
        }
    }
}

/// One recorded time point of a training run.
///
/// Row `t = 0` is the state before any update and never carries a measured
/// ratio. Row `t ≥ 1` records the squared error after the t-th update and the
/// ratio against the previous row, absent when the previous error was below
/// [`RATIO_FLOOR`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceStep {
    pub t: usize,
    pub error_sq: f64,
    pub measured_ratio: Option<f64>,
    /// Closed-form per-step ratio (1 − ηS)². Absent for training loops that
    /// have no prediction (the classical baseline).
    pub predicted_ratio: Option<f64>,
}

/// Per-step record of a training run.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainingTrace {
    pub steps: Vec<TraceStep>,
    /// Set when η ≥ 1/S, i.e. outside the guaranteed-convergence regime.
    pub eta_warning: bool,
    /// Set when the run stopped because the error fell below tolerance.
    pub converged: bool,
}

impl TrainingTrace {
    /// Squared error at the last recorded step.
    pub fn final_error_sq(&self) -> f64 {
        self.steps.last().map(|s| s.error_sq).unwrap_or(0.0)
    }

    /// Number of weight updates taken (one less than the number of rows).
    pub fn update_count(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }
}

/// Closed-form squared-error contraction ratio (1 − ηS)² with
/// S = Σⱼ ‖xⱼ‖². Reduces to (1 − nη)² when every input has unit norm.
pub fn predicted_ratio(eta: f64, input_norms_sq: &[f64]) -> f64 {
    let s: f64 = input_norms_sq.iter().sum();
    let factor = 1.0 - eta * s;
    factor * factor
}

/// Unit-norm special case (1 − nη)².
pub fn predicted_ratio_unit_inputs(n: usize, eta: f64) -> f64 {
    let factor = 1.0 - n as f64 * eta;
    factor * factor
}

/// Draw n weight matrices with entries independently uniform on the complex
/// disc of radius `init_radius`, reproducibly from `seed`.
///
/// A zero radius yields all-zero matrices.
pub fn init_weights(n: usize, init_radius: f64, seed: u64) -> Vec<WeightMatrix> {
    assert!(
        init_radius >= 0.0 && init_radius.is_finite(),
        "init_radius must be non-negative and finite"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let mut rows = [[Complex64::new(0.0, 0.0); 2]; 2];
            for row in rows.iter_mut() {
                for cell in row.iter_mut() {
                    // sqrt-radius polar sampling is uniform over the disc
                    let r = init_radius * rng.gen::<f64>().sqrt();
                    let phi = rng.gen::<f64>() * std::f64::consts::TAU;
                    *cell = Complex64::from_polar(r, phi);
                }
            }
            WeightMatrix::from_rows(rows)
        })
        .collect()
}

/// Single computational unit: n weight matrices and an output operator.
///
/// Values are immutable; the learning operations return updated copies.
#[derive(Debug, Clone, PartialEq)]
pub struct Perceptron {
    weights: Vec<WeightMatrix>,
    output_op: OutputOperator,
}

impl Perceptron {
    /// Build from weight matrices with the identity output operator.
    pub fn new(weights: Vec<WeightMatrix>) -> Result<Self> {
        Self::with_output_op(weights, OutputOperator::identity())
    }

    /// Build with an explicit output operator.
    pub fn with_output_op(weights: Vec<WeightMatrix>, output_op: OutputOperator) -> Result<Self> {
        if weights.is_empty() {
            return Err(CoreError::InvalidConfig(
                "a perceptron needs at least one input channel".into(),
            ));
        }
        if weights.iter().any(|w| !w.is_finite()) || !output_op.matrix().is_finite() {
            return Err(CoreError::InvalidConfig(
                "weight and operator entries must be finite".into(),
            ));
        }
        Ok(Self { weights, output_op })
    }

    /// Build with seeded random small weights (see [`init_weights`]).
    pub fn from_seed(n: usize, init_radius: f64, seed: u64) -> Result<Self> {
        Self::new(init_weights(n, init_radius, seed))
    }

    /// Number of input channels.
    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[WeightMatrix] {
        &self.weights
    }

    pub fn output_op(&self) -> &OutputOperator {
        &self.output_op
    }

    fn check_arity(&self, got: usize) -> Result<()> {
        if got != self.weights.len() {
            return Err(CoreError::ArityMismatch {
                expected: self.weights.len(),
                got,
            });
        }
        Ok(())
    }

    /// Forward rule: `output_op` applied to Σⱼ ŵⱼ|xⱼ⟩.
    ///
    /// The result is generally unnormalized.
    pub fn forward(&self, inputs: &[StateVector]) -> Result<StateVector> {
        self.check_arity(inputs.len())?;
        let mut sum = StateVector::zero();
        for (w, x) in self.weights.iter().zip(inputs) {
            sum = sum + w.apply(x);
        }
        Ok(self.output_op.matrix().apply(&sum))
    }

    /// One application of the learning rule
    /// ŵⱼ ← ŵⱼ + η (|d⟩ − |y⟩)⟨xⱼ|, returning the updated perceptron.
    ///
    /// Only defined for the identity output operator; anything else is
    /// refused rather than guessed at.
    pub fn learn_step(
        &self,
        inputs: &[StateVector],
        desired: &StateVector,
        eta: f64,
    ) -> Result<Perceptron> {
        self.check_arity(inputs.len())?;
        if !self.output_op.is_identity() {
            return Err(CoreError::NonIdentityOutputOperator {
                label: self.output_op.label().to_string(),
            });
        }
        if !(eta > 0.0) || !eta.is_finite() {
            return Err(CoreError::InvalidStepSize(eta));
        }
        let residual = *desired - self.forward(inputs)?;
        let scale = Complex64::new(eta, 0.0);
        let weights = self
            .weights
            .iter()
            .zip(inputs)
            .map(|(w, x)| *w + residual.outer(x).scale(scale))
            .collect();
        Ok(Perceptron {
            weights,
            output_op: self.output_op.clone(),
        })
    }

    /// Train on one fixed pattern until the squared error drops below
    /// `cfg.tolerance` or `cfg.max_steps` updates have been taken.
    ///
    /// The trace records row t = 0 (initial state) through the last update:
    /// squared error, measured ratio error_sq(t)/error_sq(t−1), and the
    /// closed-form prediction (1 − ηS)² on every row. The perceptron itself
    /// is not modified; identical inputs reproduce the trace bit for bit.
    pub fn train(
        &self,
        inputs: &[StateVector],
        desired: &StateVector,
        cfg: &LearningConfig,
    ) -> Result<(Perceptron, TrainingTrace)> {
        cfg.validate()?;
        self.check_arity(inputs.len())?;

        let norms_sq: Vec<f64> = inputs.iter().map(|x| x.norm_sqr()).collect();
        let s: f64 = norms_sq.iter().sum();
        let predicted = predicted_ratio(cfg.eta, &norms_sq);
        let eta_warning = cfg.eta * s >= 1.0;

        let mut current = self.clone();
        let mut steps = Vec::new();
        let mut prev_error: Option<f64> = None;
        let mut converged = false;
        let mut t = 0;

        loop {
            let y = current.forward(inputs)?;
            let error_sq = (*desired - y).norm_sqr();
            let measured_ratio = match prev_error {
                Some(prev) if prev >= RATIO_FLOOR => Some(error_sq / prev),
                _ => None,
            };
            steps.push(TraceStep {
                t,
                error_sq,
                measured_ratio,
                predicted_ratio: Some(predicted),
            });

            if error_sq < cfg.tolerance {
                converged = true;
                break;
            }
            if t >= cfg.max_steps {
                break;
            }
            current = current.learn_step(inputs, desired, cfg.eta)?;
            prev_error = Some(error_sq);
            t += 1;
        }

        Ok((
            current,
            TrainingTrace {
                steps,
                eta_warning,
                converged,
            },
        ))
    }
}

/// Feed-forward composition of perceptrons, evaluated layer by layer.
///
/// Each unit's unnormalized output is rescaled to a qubit before feeding the
/// next layer; the layers themselves are wired by explicit fan-in index
/// lists. Training across layers is not provided.
#[derive(Debug, Clone)]
pub struct LayeredNetwork {
    input_count: usize,
    layers: Vec<Layer>,
}

#[derive(Debug, Clone)]
struct Layer {
    units: Vec<Perceptron>,
    fanin: Vec<Vec<usize>>,
}

impl LayeredNetwork {
    /// An empty network over `input_count` network inputs.
    pub fn new(input_count: usize) -> Self {
        Self {
            input_count,
            layers: Vec::new(),
        }
    }

    /// Number of outputs of the last layer (the network inputs when empty).
    pub fn output_count(&self) -> usize {
        self.layers
            .last()
            .map(|l| l.units.len())
            .unwrap_or(self.input_count)
    }

    /// Append a layer. `fanin[k]` lists the upstream output indices feeding
    /// unit k, in input-slot order; indices must resolve against the previous
    /// layer (or the network inputs for the first layer).
    pub fn add_layer(&mut self, units: Vec<Perceptron>, fanin: Vec<Vec<usize>>) -> Result<()> {
        let layer_index = self.layers.len();
        if units.len() != fanin.len() {
            return Err(CoreError::InvalidConfig(format!(
                "layer {}: {} units but {} fan-in lists",
                layer_index,
                units.len(),
                fanin.len()
            )));
        }
        let available = self.output_count();
        for (unit, wires) in units.iter().zip(&fanin) {
            if wires.len() != unit.arity() {
                return Err(CoreError::ArityMismatch {
                    expected: unit.arity(),
                    got: wires.len(),
                });
            }
            if let Some(&bad) = wires.iter().find(|&&ix| ix >= available) {
                return Err(CoreError::WiringError {
                    layer: layer_index,
                    index: bad,
                    available,
                });
            }
        }
        self.layers.push(Layer { units, fanin });
        Ok(())
    }

    /// Evaluate the network, renormalizing every unit output (including the
    /// final layer) to a qubit. A zero-norm intermediate state propagates as
    /// [`CoreError::UnmeasurableState`].
    pub fn eval(&self, inputs: &[Qubit]) -> Result<Vec<Qubit>> {
        let raw = self.eval_raw(inputs)?;
        raw.iter().map(|s| s.normalized()).collect()
    }

    /// Evaluate the network, returning the final layer's raw (unnormalized)
    /// outputs. Intermediate layers are still renormalized, matching the
    /// qubit-in contract of every unit.
    pub fn eval_raw(&self, inputs: &[Qubit]) -> Result<Vec<StateVector>> {
        if inputs.len() != self.input_count {
            return Err(CoreError::ArityMismatch {
                expected: self.input_count,
                got: inputs.len(),
            });
        }
        let mut carried: Vec<Qubit> = inputs.to_vec();
        let mut raw: Vec<StateVector> = carried.iter().map(|q| q.as_state()).collect();

        for layer in &self.layers {
            raw = layer
                .units
                .iter()
                .zip(&layer.fanin)
                .map(|(unit, wires)| {
                    let unit_inputs: Vec<StateVector> =
                        wires.iter().map(|&ix| carried[ix].as_state()).collect();
                    unit.forward(&unit_inputs)
                })
                .collect::<Result<Vec<_>>>()?;
            carried = raw.iter().map(|s| s.normalized()).collect::<Result<_>>()?;
        }
        Ok(raw)
    }
}

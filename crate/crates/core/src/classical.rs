//! Classical perceptron baseline: real weights, step or identity activation,
//! and cyclic-presentation training for side-by-side comparison with the
//! quantum unit.
//!
//! There is no bias term; a constant input channel emulates one.

use crate::error::{CoreError, Result};
use crate::perceptron::{TraceStep, TrainingTrace};

/// Activation applied to the weighted input sum.
///
/// `Step` thresholds at zero with f(0) = 0, the classic convention for the
/// residual update rule with binary targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Activation {
    Step,
    Identity,
}

impl Activation {
    fn apply(&self, sum: f64) -> f64 {
        match self {
            Activation::Step => {
                if sum > 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Activation::Identity => sum,
        }
    }
}

/// Real-weighted single unit y = f(Σ wⱼxⱼ).
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalPerceptron {
    weights: Vec<f64>,
    activation: Activation,
}

impl ClassicalPerceptron {
    pub fn new(weights: Vec<f64>, activation: Activation) -> Result<Self> {
        if weights.is_empty() {
            return Err(CoreError::InvalidConfig(
                "a perceptron needs at least one input channel".into(),
            ));
        }
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(CoreError::InvalidConfig(
                "weights must be finite".into(),
            ));
        }
        Ok(Self {
            weights,
            activation,
        })
    }

    /// All-zero weights of the given arity.
    pub fn zeros(n: usize, activation: Activation) -> Result<Self> {
        Self::new(vec![0.0; n], activation)
    }

    pub fn arity(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn activation(&self) -> Activation {
        self.activation
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

    /// Output f(Σ wⱼxⱼ).
    pub fn forward(&self, x: &[f64]) -> Result<f64> {
        self.check_arity(x.len())?;
        let sum: f64 = self.weights.iter().zip(x).map(|(w, xi)| w * xi).sum();
        Ok(self.activation.apply(sum))
    }

    /// One update wⱼ ← wⱼ + η(d − y)xⱼ with post-activation y.
    ///
    /// The step size must lie strictly inside (0, 1).
    pub fn learn_step(&self, x: &[f64], d: f64, eta: f64) -> Result<ClassicalPerceptron> {
        if !(eta > 0.0 && eta < 1.0) {
            return Err(CoreError::StepSizeOutOfRange(eta));
        }
        let y = self.forward(x)?;
        let delta = eta * (d - y);
        let weights = self
            .weights
            .iter()
            .zip(x)
            .map(|(w, xi)| w + delta * xi)
            .collect();
        Ok(ClassicalPerceptron {
            weights,
            activation: self.activation,
        })
    }

    /// Cyclic-presentation training: every epoch presents each pattern once
    /// and applies the update rule. Stops when an epoch changes no weight or
    /// `max_steps` epochs have elapsed.
    ///
    /// The trace records one row per epoch (t = 0 is the first epoch) with
    /// the squared residuals accumulated during that epoch; there is no
    /// closed-form ratio for the classical rule, so `predicted_ratio` is
    /// absent.
    pub fn train(
        &self,
        patterns: &[(Vec<f64>, f64)],
        eta: f64,
        max_steps: usize,
    ) -> Result<(ClassicalPerceptron, TrainingTrace)> {
        if patterns.is_empty() {
            return Err(CoreError::EmptyPatterns);
        }
        if max_steps < 1 {
            return Err(CoreError::InvalidConfig(
                "max_steps must be at least 1".into(),
            ));
        }

        let mut current = self.clone();
        let mut steps = Vec::new();
        let mut prev_error: Option<f64> = None;
        let mut converged = false;

        for epoch in 0..max_steps {
            let mut epoch_error = 0.0;
            let mut updated = false;
            for (x, d) in patterns {
                let y = current.forward(x)?;
                epoch_error += (d - y) * (d - y);
                let next = current.learn_step(x, *d, eta)?;
                if next.weights != current.weights {
                    updated = true;
                    current = next;
                }
            }
            let measured_ratio = match prev_error {
                Some(prev) if prev >= crate::qstate::RATIO_FLOOR => Some(epoch_error / prev),
                _ => None,
            };
            steps.push(TraceStep {
                t: epoch,
                error_sq: epoch_error,
                measured_ratio,
                predicted_ratio: None,
            });
            prev_error = Some(epoch_error);
            if !updated {
                converged = true;
                break;
            }
        }

        Ok((
            current,
            TrainingTrace {
                steps,
                eta_warning: false,
                converged,
            },
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // truth tables carry a constant third channel emulating the bias
    fn with_bias(rows: &[([f64; 2], f64)]) -> Vec<(Vec<f64>, f64)> {
        rows.iter()
            .map(|(x, d)| (vec![x[0], x[1], 1.0], *d))
            .collect()
    }

    const AND: [([f64; 2], f64); 4] = [
        ([0.0, 0.0], 0.0),
        ([0.0, 1.0], 0.0),
        ([1.0, 0.0], 0.0),
        ([1.0, 1.0], 1.0),
    ];
    const OR: [([f64; 2], f64); 4] = [
        ([0.0, 0.0], 0.0),
        ([0.0, 1.0], 1.0),
        ([1.0, 0.0], 1.0),
        ([1.0, 1.0], 1.0),
    ];
    const XOR: [([f64; 2], f64); 4] = [
        ([0.0, 0.0], 0.0),
        ([0.0, 1.0], 1.0),
        ([1.0, 0.0], 1.0),
        ([1.0, 1.0], 0.0),
    ];

    #[test]
    fn step_activation_thresholds_at_zero() {
        let p = ClassicalPerceptron::new(vec![1.0, 1.0], Activation::Step).unwrap();
        assert_eq!(p.forward(&[1.0, 1.0]).unwrap(), 1.0);
        let z = ClassicalPerceptron::new(vec![0.0, 0.0], Activation::Step).unwrap();
        assert_eq!(z.forward(&[1.0, 1.0]).unwrap(), 0.0); // f(0) = 0
    }

    #[test]
    fn identity_activation_returns_dot_product() {
        let p = ClassicalPerceptron::new(vec![0.5, -1.0], Activation::Identity).unwrap();
        assert_eq!(p.forward(&[2.0, 1.0]).unwrap(), 0.0);
    }

    #[test]
    fn forward_rejects_arity_mismatch() {
        let p = ClassicalPerceptron::zeros(2, Activation::Step).unwrap();
        assert!(matches!(
            p.forward(&[1.0]),
            Err(CoreError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn learn_step_is_noop_on_matched_output() {
        let p = ClassicalPerceptron::new(vec![1.0, 1.0], Activation::Step).unwrap();
        let q = p.learn_step(&[1.0, 1.0], 1.0, 0.5).unwrap();
        assert_eq!(q.weights(), p.weights());
    }

    #[test]
    fn learn_step_moves_along_input_direction() {
        let p = ClassicalPerceptron::zeros(2, Activation::Step).unwrap();
        let q = p.learn_step(&[1.0, 0.0], 1.0, 0.5).unwrap();
        assert_eq!(q.weights(), &[0.5, 0.0]);
    }

    #[test]
    fn learn_step_rejects_step_size_outside_unit_interval() {
        let p = ClassicalPerceptron::zeros(2, Activation::Step).unwrap();
        for eta in [0.0, 1.0, 1.5, -0.1, f64::NAN] {
            assert!(matches!(
                p.learn_step(&[1.0, 0.0], 1.0, eta),
                Err(CoreError::StepSizeOutOfRange(_))
            ));
        }
    }

    #[test]
    fn already_classified_pattern_stops_after_one_epoch() {
        let p = ClassicalPerceptron::new(vec![1.0], Activation::Step).unwrap();
        let (_, trace) = p.train(&[(vec![1.0], 1.0)], 0.3, 100).unwrap();
        assert!(trace.converged);
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].error_sq, 0.0);
    }

    #[test]
    fn and_truth_table_converges() {
        let p = ClassicalPerceptron::zeros(3, Activation::Step).unwrap();
        let (trained, trace) = p.train(&with_bias(&AND), 0.3, 100).unwrap();
        assert!(trace.converged, "AND should separate within 100 epochs");
        for (x, d) in with_bias(&AND) {
            assert_eq!(trained.forward(&x).unwrap(), d);
        }
    }

    #[test]
    fn or_truth_table_converges() {
        let p = ClassicalPerceptron::zeros(3, Activation::Step).unwrap();
        let (trained, trace) = p.train(&with_bias(&OR), 0.3, 100).unwrap();
        assert!(trace.converged);
        for (x, d) in with_bias(&OR) {
            assert_eq!(trained.forward(&x).unwrap(), d);
        }
    }

    #[test]
    fn xor_truth_table_never_converges() {
        let p = ClassicalPerceptron::zeros(3, Activation::Step).unwrap();
        let (_, trace) = p.train(&with_bias(&XOR), 0.3, 100).unwrap();
        assert!(!trace.converged);
        assert_eq!(trace.steps.len(), 100);
    }

    #[test]
    fn empty_pattern_set_is_rejected() {
        let p = ClassicalPerceptron::zeros(2, Activation::Step).unwrap();
        assert_eq!(p.train(&[], 0.3, 10), Err(CoreError::EmptyPatterns));
    }
}

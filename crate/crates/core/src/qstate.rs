//! Complex 2-dimensional state algebra: qubits, unnormalized state vectors,
//! inner and outer products, and Born-rule measurement probabilities.
//!
//! A [`Qubit`] is a unit-norm pair of amplitudes over the basis (|0⟩, |1⟩).
//! A [`StateVector`] is an arbitrary (possibly unnormalized) complex 2-vector,
//! the natural codomain of a linear sum of weighted inputs. A [`WeightMatrix`]
//! is an arbitrary 2×2 complex matrix with no unitarity constraint.
//!
//! Global phase is not quotiented: (1, 0) and (i, 0) are distinct values.
//! The learning arithmetic is phase-sensitive and exact contraction checks
//! would break under phase canonicalization.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{CoreError, Result};

/// Absolute tolerance used for equality assertions on stored doubles.
pub const TOL: f64 = 1e-12;

/// Denominator floor below which an error ratio is reported as absent.
pub const RATIO_FLOOR: f64 = 1e-20;

/// Unit-norm single-qubit state α|0⟩ + β|1⟩.
///
/// Construction rescales to unit norm, so |α|² + |β|² = 1 always holds
/// (within floating-point rounding, well under [`TOL`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Qubit {
    a0: Complex64,
    a1: Complex64,
}

impl Qubit {
    /// Build a qubit from an amplitude pair, rescaling to unit norm.
    ///
    /// Rejects pairs that are zero or non-finite with
    /// [`CoreError::Unnormalizable`].
    pub fn new(a0: Complex64, a1: Complex64) -> Result<Self> {
        if !a0.is_finite() || !a1.is_finite() {
            return Err(CoreError::Unnormalizable);
        }
        let norm = (a0.norm_sqr() + a1.norm_sqr()).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(CoreError::Unnormalizable);
        }
        Ok(Self {
            a0: a0 / norm,
            a1: a1 / norm,
        })
    }

    /// Basis state |0⟩.
    pub fn zero() -> Self {
        Self {
            a0: Complex64::new(1.0, 0.0),
            a1: Complex64::new(0.0, 0.0),
        }
    }

    /// Basis state |1⟩.
    pub fn one() -> Self {
        Self {
            a0: Complex64::new(0.0, 0.0),
            a1: Complex64::new(1.0, 0.0),
        }
    }

    /// Amplitude of |0⟩.
    pub fn a0(&self) -> Complex64 {
        self.a0
    }

    /// Amplitude of |1⟩.
    pub fn a1(&self) -> Complex64 {
        self.a1
    }

    /// View as an (unnormalized-capable) state vector.
    pub fn as_state(&self) -> StateVector {
        StateVector::new(self.a0, self.a1)
    }
}

impl From<Qubit> for StateVector {
    fn from(q: Qubit) -> Self {
        q.as_state()
    }
}

/// Unnormalized complex 2-vector over the basis (|0⟩, |1⟩).
///
/// Outputs of the forward rule are generally unnormalized sums; the norm may
/// be any non-negative real. Components are expected to stay finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVector {
    pub c0: Complex64,
    pub c1: Complex64,
}

impl StateVector {
    pub fn new(c0: Complex64, c1: Complex64) -> Self {
        Self { c0, c1 }
    }

    /// The zero vector.
    pub fn zero() -> Self {
        Self::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    }

    /// Squared Euclidean norm |c0|² + |c1|².
    pub fn norm_sqr(&self) -> f64 {
        self.c0.norm_sqr() + self.c1.norm_sqr()
    }

    /// Inner product ⟨self|other⟩, conjugate-linear in `self`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.c0.conj() * other.c0 + self.c1.conj() * other.c1
    }

    /// Outer product |self⟩⟨bra|: the rank-1 matrix with entries
    /// `self[r] · conj(bra[c])`.
    pub fn outer(&self, bra: &StateVector) -> WeightMatrix {
        WeightMatrix::from_rows([
            [self.c0 * bra.c0.conj(), self.c0 * bra.c1.conj()],
            [self.c1 * bra.c0.conj(), self.c1 * bra.c1.conj()],
        ])
    }

    /// Born-rule measurement probabilities (|c0|², |c1|²) / ‖·‖².
    ///
    /// The pair sums to 1 within [`TOL`]. A zero (or non-finite) state has no
    /// measurement distribution and yields [`CoreError::UnmeasurableState`].
    pub fn born_probs(&self) -> Result<(f64, f64)> {
        let n2 = self.norm_sqr();
        if !(n2 > 0.0) || !n2.is_finite() {
            return Err(CoreError::UnmeasurableState);
        }
        Ok((self.c0.norm_sqr() / n2, self.c1.norm_sqr() / n2))
    }

    /// Rescale to a unit-norm qubit. Zero states propagate as
    /// [`CoreError::UnmeasurableState`].
    pub fn normalized(&self) -> Result<Qubit> {
        if self.norm_sqr() == 0.0 {
            return Err(CoreError::UnmeasurableState);
        }
        Qubit::new(self.c0, self.c1).map_err(|_| CoreError::UnmeasurableState)
    }

    /// Scale by a complex factor.
    pub fn scale(&self, k: Complex64) -> StateVector {
        StateVector::new(self.c0 * k, self.c1 * k)
    }
}

impl Add for StateVector {
    type Output = StateVector;
    fn add(self, rhs: StateVector) -> StateVector {
        StateVector::new(self.c0 + rhs.c0, self.c1 + rhs.c1)
    }
}

impl Sub for StateVector {
    type Output = StateVector;
    fn sub(self, rhs: StateVector) -> StateVector {
        StateVector::new(self.c0 - rhs.c0, self.c1 - rhs.c1)
    }
}

impl Neg for StateVector {
    type Output = StateVector;
    fn neg(self) -> StateVector {
        StateVector::new(-self.c0, -self.c1)
    }
}

/// Arbitrary 2×2 complex matrix acting on the basis (|0⟩, |1⟩).
///
/// Weights carry no unitarity constraint; trained weights both rotate phase
/// and attenuate amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightMatrix {
    m: [[Complex64; 2]; 2],
}

impl WeightMatrix {
    pub fn from_rows(m: [[Complex64; 2]; 2]) -> Self {
        Self { m }
    }

    /// All-zero matrix.
    pub fn zero() -> Self {
        Self {
            m: [[Complex64::new(0.0, 0.0); 2]; 2],
        }
    }

    /// Identity matrix.
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let nil = Complex64::new(0.0, 0.0);
        Self {
            m: [[one, nil], [nil, one]],
        }
    }

    /// Entry at (row, col).
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    /// Row-major entries.
    pub fn rows(&self) -> [[Complex64; 2]; 2] {
        self.m
    }

    /// Apply to a state: matrix-vector product.
    pub fn apply(&self, v: &StateVector) -> StateVector {
        StateVector::new(
            self.m[0][0] * v.c0 + self.m[0][1] * v.c1,
            self.m[1][0] * v.c0 + self.m[1][1] * v.c1,
        )
    }

    /// Matrix product self · rhs.
    pub fn matmul(&self, rhs: &WeightMatrix) -> WeightMatrix {
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, cell) in row.iter_mut().enumerate() {
                *cell = self.m[r][0] * rhs.m[0][c] + self.m[r][1] * rhs.m[1][c];
            }
        }
        WeightMatrix { m: out }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> WeightMatrix {
        WeightMatrix::from_rows([
            [self.m[0][0].conj(), self.m[1][0].conj()],
            [self.m[0][1].conj(), self.m[1][1].conj()],
        ])
    }

    /// Scale every entry by a complex factor.
    pub fn scale(&self, k: Complex64) -> WeightMatrix {
        WeightMatrix::from_rows([
            [self.m[0][0] * k, self.m[0][1] * k],
            [self.m[1][0] * k, self.m[1][1] * k],
        ])
    }

    /// Frobenius norm: sqrt of the sum of squared entry magnitudes.
    pub fn frobenius_norm(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// True when every entry is finite.
    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|z| z.is_finite())
    }

    /// Entrywise distance to the identity, measured in max-abs difference.
    pub fn max_abs_diff_from_identity(&self) -> f64 {
        let id = WeightMatrix::identity();
        let mut d: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                d = d.max((self.m[r][c] - id.m[r][c]).norm());
            }
        }
        d
    }
}

impl Add for WeightMatrix {
    type Output = WeightMatrix;
    fn add(self, rhs: WeightMatrix) -> WeightMatrix {
        let mut out = self.m;
        for r in 0..2 {
            for c in 0..2 {
                out[r][c] += rhs.m[r][c];
            }
        }
        WeightMatrix { m: out }
    }
}

impl Sub for WeightMatrix {
    type Output = WeightMatrix;
    fn sub(self, rhs: WeightMatrix) -> WeightMatrix {
        let mut out = self.m;
        for r in 0..2 {
            for c in 0..2 {
                out[r][c] -= rhs.m[r][c];
            }
        }
        WeightMatrix { m: out }
    }
}

impl Mul<WeightMatrix> for WeightMatrix {
    type Output = WeightMatrix;
    fn mul(self, rhs: WeightMatrix) -> WeightMatrix {
        self.matmul(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn basis_qubit_is_exact() {
        let q = Qubit::new(c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(q.a0(), c(1.0, 0.0));
        assert_eq!(q.a1(), c(0.0, 0.0));
    }

    #[test]
    fn normalization_is_scale_invariant() {
        let q = Qubit::new(c(2.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(q.a0(), c(1.0, 0.0));
        assert_eq!(q.a1(), c(0.0, 0.0));
    }

    #[test]
    fn one_i_pair_normalizes_to_half_weights() {
        // direct arithmetic oracle: norm of (1, i) is sqrt(2)
        let expected = 1.0 / 2.0_f64.sqrt();
        let q = Qubit::new(c(1.0, 0.0), c(0.0, 1.0)).unwrap();
        assert!((q.a0() - c(expected, 0.0)).norm() < TOL);
        assert!((q.a1() - c(0.0, expected)).norm() < TOL);
        let n = q.a0().norm_sqr() + q.a1().norm_sqr();
        assert!((n - 1.0).abs() < TOL);
    }

    #[test]
    fn zero_pair_is_unnormalizable() {
        assert_eq!(
            Qubit::new(c(0.0, 0.0), c(0.0, 0.0)),
            Err(CoreError::Unnormalizable)
        );
    }

    #[test]
    fn non_finite_pair_is_unnormalizable() {
        assert_eq!(
            Qubit::new(c(f64::NAN, 0.0), c(1.0, 0.0)),
            Err(CoreError::Unnormalizable)
        );
        assert_eq!(
            Qubit::new(c(f64::INFINITY, 0.0), c(1.0, 0.0)),
            Err(CoreError::Unnormalizable)
        );
    }

    #[test]
    fn inner_on_orthonormal_basis() {
        let zero = Qubit::zero().as_state();
        let one = Qubit::one().as_state();
        assert_eq!(zero.inner(&zero), c(1.0, 0.0));
        assert_eq!(zero.inner(&one), c(0.0, 0.0));
    }

    #[test]
    fn inner_of_superposition_with_itself_is_one() {
        let s = Qubit::new(c(1.0, 0.0), c(0.0, 1.0)).unwrap().as_state();
        let p = s.inner(&s);
        assert!((p - c(1.0, 0.0)).norm() < TOL);
    }

    #[test]
    fn inner_is_conjugate_linear_in_first_argument() {
        let u = StateVector::new(c(0.3, -0.4), c(1.2, 0.9));
        let v = StateVector::new(c(-0.7, 0.2), c(0.1, -1.1));
        let direct = u.c0.conj() * v.c0 + u.c1.conj() * v.c1;
        assert!((u.inner(&v) - direct).norm() < TOL);
    }

    #[test]
    fn outer_of_basis_states() {
        let one = Qubit::one().as_state();
        let zero = Qubit::zero().as_state();
        let m = one.outer(&zero);
        assert_eq!(m.entry(0, 0), c(0.0, 0.0));
        assert_eq!(m.entry(0, 1), c(0.0, 0.0));
        assert_eq!(m.entry(1, 0), c(1.0, 0.0));
        assert_eq!(m.entry(1, 1), c(0.0, 0.0));

        let proj = zero.outer(&zero);
        assert_eq!(proj.entry(0, 0), c(1.0, 0.0));
        assert_eq!(proj.entry(1, 1), c(0.0, 0.0));
    }

    #[test]
    fn outer_conjugates_second_argument() {
        // elementwise oracle: M[r][c] = ket[r] * conj(bra[c])
        let r = 1.0 / 2.0_f64.sqrt();
        let ket = StateVector::new(c(0.0, 0.0), c(1.0, 0.0));
        let bra = StateVector::new(c(r, 0.0), c(r, 0.0));
        let m = ket.outer(&bra);
        assert!((m.entry(1, 0) - c(r, 0.0)).norm() < TOL);
        assert!((m.entry(1, 1) - c(r, 0.0)).norm() < TOL);
        assert_eq!(m.entry(0, 0), c(0.0, 0.0));
        assert_eq!(m.entry(0, 1), c(0.0, 0.0));
    }

    #[test]
    fn born_probs_of_basis_and_superposition() {
        let (p0, p1) = Qubit::zero().as_state().born_probs().unwrap();
        assert_eq!((p0, p1), (1.0, 0.0));

        let r = 1.0 / 2.0_f64.sqrt();
        let (p0, p1) = StateVector::new(c(r, 0.0), c(r, 0.0))
            .born_probs()
            .unwrap();
        assert!((p0 - 0.5).abs() < TOL);
        assert!((p1 - 0.5).abs() < TOL);
    }

    #[test]
    fn born_probs_factor_out_normalization() {
        let (p0, p1) = StateVector::new(c(2.0, 0.0), c(0.0, 0.0))
            .born_probs()
            .unwrap();
        assert_eq!((p0, p1), (1.0, 0.0));
    }

    #[test]
    fn born_probs_reject_zero_state() {
        assert_eq!(
            StateVector::zero().born_probs(),
            Err(CoreError::UnmeasurableState)
        );
    }

    #[test]
    fn matrix_apply_and_adjoint() {
        let m = WeightMatrix::from_rows([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]);
        let v = m.apply(&Qubit::zero().as_state());
        assert_eq!(v.c0, c(0.0, 0.0));
        assert_eq!(v.c1, c(1.0, 0.0));

        let a = WeightMatrix::from_rows([[c(1.0, 2.0), c(3.0, -1.0)], [c(0.0, 0.5), c(-2.0, 0.0)]]);
        let aa = a.adjoint();
        assert_eq!(aa.entry(0, 1), c(0.0, -0.5));
        assert_eq!(aa.entry(1, 0), c(3.0, 1.0));
    }

    #[test]
    fn frobenius_norm_matches_hand_computation() {
        let a = WeightMatrix::from_rows([[c(3.0, 0.0), c(0.0, 0.0)], [c(0.0, 4.0), c(0.0, 0.0)]]);
        assert!((a.frobenius_norm() - 5.0).abs() < TOL);
    }
}

//! Factor weight matrices into linear-optical elements: phase shifters, one
//! beam-splitter rotation per unitary factor, per-arm attenuators and a
//! global gain. Non-unitary weights decompose into passive optics exactly
//! when the gain stays at or below one.
//!
//! The scheme is a singular-value factorization w = U·Σ·V† computed in
//! closed form (eigenvalues of w†w), with each 2×2 unitary canonicalized as
//! phases·rotation·phases. The two inner phase layers merge with Σ into a
//! common global phase plus one arm-differential phase at the attenuation
//! stage ([`OpticalCircuit::mid_phase`]); without that extra parameter the
//! element chain covers only a measure-zero subset of complex matrices.
//!
//! Canonical conventions: beam-splitter angles lie in [0, π/2] with sign
//! freedom pushed into phases; all phases are reduced to [0, 2π); equal
//! singular values (and any diagonal w†w) select the identity basis, so the
//! identity matrix factors with every angle and phase exactly zero.

use num_complex::Complex64;

use crate::qstate::{StateVector, WeightMatrix};

/// Single-mode phase shifter e^{iθ}, canonical θ ∈ [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseShifter {
    theta: f64,
}

impl PhaseShifter {
    pub fn new(theta: f64) -> Self {
        assert!(theta.is_finite(), "phase must be finite");
        Self {
            theta: theta.rem_euclid(std::f64::consts::TAU),
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// Diagonal unitary applying e^{iθ} to one mode and leaving the other.
    pub fn matrix_on(&self, mode: usize) -> WeightMatrix {
        assert!(mode < 2, "mode index out of range");
        let one = Complex64::new(1.0, 0.0);
        let phase = Complex64::from_polar(1.0, self.theta);
        let mut rows = [[Complex64::new(0.0, 0.0); 2]; 2];
        rows[0][0] = if mode == 0 { phase } else { one };
        rows[1][1] = if mode == 1 { phase } else { one };
        WeightMatrix::from_rows(rows)
    }
}

/// Two-mode beam splitter acting as the real rotation
/// [[cos θ, −sin θ], [sin θ, cos θ]], θ ∈ [0, π/2].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamSplitter {
    angle: f64,
}

impl BeamSplitter {
    pub fn new(angle: f64) -> Self {
        assert!(
            (0.0..=std::f64::consts::FRAC_PI_2 + 1e-12).contains(&angle),
            "beam-splitter angle {} outside [0, pi/2]",
            angle
        );
        Self { angle }
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn matrix(&self) -> WeightMatrix {
        let (s, c) = self.angle.sin_cos();
        let re = |x: f64| Complex64::new(x, 0.0);
        WeightMatrix::from_rows([[re(c), re(-s)], [re(s), re(c)]])
    }
}

/// Factored physical form of a weight matrix.
///
/// Recomposition multiplies, right to left as light propagates:
/// input phases, input beam splitter, per-arm attenuators with the
/// arm-differential `mid_phase` (±ρ/2 on the two arms), output beam
/// splitter, output phases, then the global phase and gain. The gain equals
/// the largest singular value of the source matrix, so `attenuations.0` is 1
/// whenever the gain is positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpticalCircuit {
    pub gain: f64,
    pub pre_phases: (f64, f64),
    pub pre_bs: BeamSplitter,
    pub attenuations: (f64, f64),
    /// Arm-differential phase ρ at the attenuation stage, applied as
    /// diag(e^{iρ/2}, e^{−iρ/2}).
    pub mid_phase: f64,
    pub post_bs: BeamSplitter,
    pub post_phases: (f64, f64),
    pub global_phase: f64,
}

impl OpticalCircuit {
    /// The zero-gain circuit with every angle and phase at zero.
    pub fn canonical_zero() -> Self {
        Self {
            gain: 0.0,
            pre_phases: (0.0, 0.0),
            pre_bs: BeamSplitter::new(0.0),
            attenuations: (1.0, 1.0),
            mid_phase: 0.0,
            post_bs: BeamSplitter::new(0.0),
            post_phases: (0.0, 0.0),
            global_phase: 0.0,
        }
    }

    /// Multiply the factors back into a weight matrix.
    pub fn recompose(&self) -> WeightMatrix {
        let att = WeightMatrix::from_rows([
            [Complex64::new(self.attenuations.0, 0.0), Complex64::new(0.0, 0.0)],
            [Complex64::new(0.0, 0.0), Complex64::new(self.attenuations.1, 0.0)],
        ]);
        let mid = phase_pair(self.mid_phase / 2.0, -self.mid_phase / 2.0);
        let m = phase_pair(self.post_phases.0, self.post_phases.1)
            .matmul(&self.post_bs.matrix())
            .matmul(&att)
            .matmul(&mid)
            .matmul(&self.pre_bs.matrix())
            .matmul(&phase_pair(self.pre_phases.0, self.pre_phases.1));
        m.scale(Complex64::from_polar(self.gain, self.global_phase))
    }

    /// Physically realizable without amplification: gain at most 1 + tol.
    pub fn is_passive(&self, tol: f64) -> bool {
        debug_assert!(tol >= 0.0);
        self.gain <= 1.0 + tol
    }
}

fn phase_pair(p0: f64, p1: f64) -> WeightMatrix {
    WeightMatrix::from_rows([
        [Complex64::from_polar(1.0, p0), Complex64::new(0.0, 0.0)],
        [Complex64::new(0.0, 0.0), Complex64::from_polar(1.0, p1)],
    ])
}

/// Frobenius norm of w†w − I: zero exactly for unitary (lossless,
/// phase-only) weights.
pub fn unitarity_deviation(w: &WeightMatrix) -> f64 {
    (w.adjoint().matmul(w) - WeightMatrix::identity()).frobenius_norm()
}

/// Singular values of w, descending, from the eigenvalues of w†w.
pub fn singular_values(w: &WeightMatrix) -> (f64, f64) {
    let h = w.adjoint().matmul(w);
    let a = h.entry(0, 0).re;
    let d = h.entry(1, 1).re;
    let b = h.entry(0, 1);
    // (a - d)^2 + 4|b|^2 never cancels, unlike tr^2 - 4 det
    let disc = ((a - d) * (a - d) + 4.0 * b.norm_sqr()).sqrt();
    let lambda1 = 0.5 * (a + d + disc);
    let det = a * d - b.norm_sqr();
    let lambda2 = if lambda1 > 0.0 {
        (det / lambda1).max(0.0)
    } else {
        0.0
    };
    (lambda1.max(0.0).sqrt(), lambda2.sqrt())
}

/// Factor a weight matrix into optical elements.
///
/// The recomposition reproduces the input within 1e-10 Frobenius; the gain
/// is the spectral norm, so the circuit is passive iff gain ≤ 1. The zero
/// matrix yields the canonical zero circuit.
pub fn decompose_weight(w: &WeightMatrix) -> OpticalCircuit {
    assert!(w.is_finite(), "weight entries must be finite");

    let h = w.adjoint().matmul(w);
    let a = h.entry(0, 0).re;
    let d = h.entry(1, 1).re;
    let b = h.entry(0, 1);
    let (sigma1, sigma2) = singular_values(w);

    if sigma1 == 0.0 {
        return OpticalCircuit::canonical_zero();
    }

    // Right singular basis: eigenvectors of the Hermitian w†w. A diagonal
    // w†w (ties included) selects the identity basis.
    let (v1, v2) = if b.norm_sqr() == 0.0 {
        if a >= d {
            (col(1.0.into(), 0.0.into()), col(0.0.into(), 1.0.into()))
        } else {
            (col(0.0.into(), 1.0.into()), col((-1.0).into(), 0.0.into()))
        }
    } else {
        let lambda1 = sigma1 * sigma1;
        // pick the better-conditioned eigenvector formula
        let cand = if d >= a {
            col(b, Complex64::new(lambda1 - a, 0.0))
        } else {
            col(Complex64::new(lambda1 - d, 0.0), b.conj())
        };
        let v1 = normalize(&cand);
        let v2 = orth_complement(&v1);
        (v1, v2)
    };

    // Left singular vectors: u_i = w v_i / sigma_i; the second column falls
    // back to the orthonormal complement when sigma2 is negligible.
    let u1 = normalize(&w.apply(&v1));
    let u2 = if sigma2 > sigma1 * 1e-14 {
        normalize(&w.apply(&v2))
    } else {
        orth_complement(&u1)
    };

    let u = WeightMatrix::from_rows([[u1.c0, u2.c0], [u1.c1, u2.c1]]);
    let v_dag = WeightMatrix::from_rows([[v1.c0.conj(), v1.c1.conj()], [v2.c0.conj(), v2.c1.conj()]]);

    let fu = factor_unitary(&u);
    let fv = factor_unitary(&v_dag);

    // Inner phase layers commute past the real diagonal Σ and merge into a
    // global phase plus one arm-differential phase.
    let mu0 = fu.beta.0 + fv.alpha.0;
    let mu1 = fu.beta.1 + fv.alpha.1;
    let mut global = 0.5 * (mu0 + mu1);
    let mut rho = mu0 - mu1;

    // shifting rho by 2πk flips the mid stage by (−1)^k; compensate globally
    let k = rho.div_euclid(std::f64::consts::TAU);
    rho -= k * std::f64::consts::TAU;
    global += k * std::f64::consts::PI;

    OpticalCircuit {
        gain: sigma1,
        pre_phases: (canon_phase(fv.beta.0), canon_phase(fv.beta.1)),
        pre_bs: BeamSplitter::new(fv.theta),
        attenuations: (1.0, (sigma2 / sigma1).min(1.0)),
        mid_phase: canon_phase(rho),
        post_bs: BeamSplitter::new(fu.theta),
        post_phases: (canon_phase(fu.alpha.0), canon_phase(fu.alpha.1)),
        global_phase: canon_phase(global),
    }
}

fn col(c0: Complex64, c1: Complex64) -> StateVector {
    StateVector::new(c0, c1)
}

fn normalize(v: &StateVector) -> StateVector {
    let n = v.norm_sqr().sqrt();
    StateVector::new(v.c0 / n, v.c1 / n)
}

fn orth_complement(v: &StateVector) -> StateVector {
    StateVector::new(-v.c1.conj(), v.c0.conj())
}

fn canon_phase(p: f64) -> f64 {
    p.rem_euclid(std::f64::consts::TAU)
}

struct UnitaryFactors {
    alpha: (f64, f64),
    theta: f64,
    beta: (f64, f64),
}

/// Split a 2×2 unitary as P(α)·R(θ)·P(β) with θ ∈ [0, π/2].
///
/// The one-parameter gauge freedom is fixed by zeroing one β component,
/// anchored on whichever diagonal dominates so phase reads stay on
/// large-magnitude entries.
fn factor_unitary(u: &WeightMatrix) -> UnitaryFactors {
    let u00 = u.entry(0, 0);
    let u01 = u.entry(0, 1);
    let u10 = u.entry(1, 0);
    let u11 = u.entry(1, 1);
    let c = u00.norm();
    let s = u10.norm();
    let theta = s.atan2(c).clamp(0.0, std::f64::consts::FRAC_PI_2);

    if c >= s {
        let alpha0 = u00.arg();
        let alpha1 = u10.arg();
        UnitaryFactors {
            alpha: (alpha0, alpha1),
            theta,
            beta: (0.0, u11.arg() - alpha1),
        }
    } else {
        let alpha0 = (-u01).arg();
        let alpha1 = u11.arg();
        UnitaryFactors {
            alpha: (alpha0, alpha1),
            theta,
            beta: (u10.arg() - alpha1, 0.0),
        }
    }
}

//! Entanglement quantifiers for the boosted state: relative entropy of
//! entanglement of the velocity modes, the maximal CHSH value from the
//! Horodecki correlation-matrix criterion, and the pure-state concurrence
//! between velocity and spin.

use crate::boosted::{
    boost, effective_two_qubit, initial_state, velocity_density_matrix, Branch,
    EffectiveTwoQubitState, Spin, VelocitySpinState,
};
use crate::error::{Error, Result};
use crate::kinematics::{wigner_angle, Velocity};
use crate::quantum::entropy::{binary_entropy, von_neumann_entropy};
use crate::quantum::{hermitian_eigenvalues, kron, pauli, ComplexMatrix, DensityMatrix};

/// Allowed deviation of the velocity populations from ½.
pub const EQUAL_WEIGHT_TOLERANCE: f64 = 1e-9;

/// `E = 1 - S(rho_v)` for a two-mode state with equal populations.
pub fn relative_entropy_of_entanglement(rho_v: &DensityMatrix) -> Result<f64> {
    if rho_v.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: rho_v.dim(),
        });
    }
    let (p0, p1) = (rho_v.entry(0, 0).re, rho_v.entry(1, 1).re);
    if (p0 - 0.5).abs() > EQUAL_WEIGHT_TOLERANCE || (p1 - 0.5).abs() > EQUAL_WEIGHT_TOLERANCE {
        return Err(Error::NotEqualWeight(p0, p1));
    }
    Ok(1.0 - von_neumann_entropy(rho_v)?)
}

/// `1 + p log2 p + (1-p) log2 (1-p)` with `p = (1 + cos 2w)/2`.
pub fn relative_entropy_closed_form(cos_two_omega: f64) -> f64 {
    1.0 - binary_entropy(0.5 * (1.0 + cos_two_omega))
}

/// `t_ij = tr(rho sigma_i ⊗ sigma_j)`, indices in x, y, z order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationMatrix(pub [[f64; 3]; 3]);

impl CorrelationMatrix {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[i][j]
    }

    /// `t^T t`.
    pub fn gram(&self) -> [[f64; 3]; 3] {
        let t = &self.0;
        let mut g = [[0.0; 3]; 3];
        for (i, row) in g.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..3).map(|k| t[k][i] * t[k][j]).sum();
            }
        }
        g
    }
}

pub fn correlation_matrix(rho: &EffectiveTwoQubitState) -> Result<CorrelationMatrix> {
    correlation_matrix_with(rho.density(), &pauli::all())
}

/// Correlation matrix of any two-qubit density matrix against the given
/// single-qubit observables.
pub fn correlation_matrix_with(
    rho: &DensityMatrix,
    paulis: &[ComplexMatrix; 3],
) -> Result<CorrelationMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    let mut t = [[0.0; 3]; 3];
    for (i, si) in paulis.iter().enumerate() {
        for (j, sj) in paulis.iter().enumerate() {
            t[i][j] = (rho.matrix() * &kron(si, sj)).trace().re;
        }
    }
    Ok(CorrelationMatrix(t))
}

/// Horodecki maximum `2 sqrt(m1 + m2)` over the two largest eigenvalues of `t^T t`.
pub fn horodecki_bell_value(t: &CorrelationMatrix) -> Result<f64> {
    let g = t.gram();
    let flat: Vec<f64> = g.iter().flatten().copied().collect();
    let ev = hermitian_eigenvalues(&ComplexMatrix::from_real(3, 3, &flat)?)?;
    Ok(2.0 * (ev[1] + ev[2]).max(0.0).sqrt())
}

pub fn bell_chsh_max(rho: &EffectiveTwoQubitState) -> Result<f64> {
    horodecki_bell_value(&correlation_matrix(rho)?)
}

/// `2 sqrt(1 + cos^2 2w)`.
pub fn bell_closed_form(cos_two_omega: f64) -> f64 {
    2.0 * (1.0 + cos_two_omega * cos_two_omega).sqrt()
}

/// `2 |a0 a3 - a1 a2|` over the velocity⊗spin amplitudes.
pub fn concurrence_pure(state: &VelocitySpinState) -> f64 {
    let a = |b, s| state.amplitude(b, s);
    let det = a(Branch::Forward, Spin::Up) * a(Branch::Backward, Spin::Down)
        - a(Branch::Forward, Spin::Down) * a(Branch::Backward, Spin::Up);
    2.0 * det.norm()
}

/// Entanglement of formation of a pure two-qubit state with concurrence `c`.
pub fn entanglement_of_formation(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    binary_entropy(0.5 * (1.0 + (1.0 - c * c).sqrt()))
}

/// Every quantity of the analysis at one pair of speeds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisRecord {
    pub v1: Velocity,
    pub v2: Velocity,
    pub omega: f64,
    pub cos_two_omega: f64,
    /// Spectrum of the velocity density matrix, ascending.
    pub eigs: [f64; 2],
    pub entropy_s: f64,
    pub entanglement_e: f64,
    pub bell_b: f64,
    pub concurrence_c: f64,
}

pub fn analyze(v1: Velocity, v2: Velocity) -> Result<AnalysisRecord> {
    let angle = wigner_angle(v1, v2);
    let boosted = boost(&initial_state(v1), v2)?;
    let rho_v = velocity_density_matrix(&boosted);
    let eigs = rho_v.eigenvalues()?;
    let entropy_s = von_neumann_entropy(&rho_v)?;
    let entanglement_e = relative_entropy_of_entanglement(&rho_v)?;
    let bell_b = bell_chsh_max(&effective_two_qubit(&rho_v)?)?;
    Ok(AnalysisRecord {
        v1,
        v2,
        omega: angle.omega(),
        cos_two_omega: angle.cos_two_omega,
        eigs: [eigs[0], eigs[1]],
        entropy_s,
        entanglement_e,
        bell_b,
        concurrence_c: concurrence_pure(&boosted),
    })
}

//! The two-velocity spin-1/2 state, its Wigner rotation under a
//! perpendicular boost, and the reductions and re-encodings used by the
//! entanglement analysis.
//!
//! The velocity⊗spin basis is ordered
//! `{|+v1>|up>, |+v1>|down>, |-v1>|up>, |-v1>|down>}`. The boosted observer
//! sees the spin rotated by `exp(+i omega sigma_x)` on the `+v1` branch and by
//! `exp(-i omega sigma_x)` on the `-v1` branch; on `|up>` this gives
//! `cos(omega)|up> ± i sin(omega)|down>`. Velocity labels are not relabelled
//! by the boost.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kinematics::{wigner_angle, Velocity, WignerAngle};
use crate::quantum::entropy::von_neumann_entropy;
use crate::quantum::{kron, ComplexMatrix, DensityMatrix, PureState};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Tensor factor holding the velocity branch.
pub const VELOCITY_FACTOR: usize = 0;
/// Tensor factor holding the spin.
pub const SPIN_FACTOR: usize = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// `|+v1>`
    Forward,
    /// `|-v1>`
    Backward,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Forward => 1.0,
            Branch::Backward => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spin {
    Up,
    Down,
}

/// Position of `|branch>|spin>` in the velocity⊗spin basis.
pub fn basis_index(branch: Branch, spin: Spin) -> usize {
    let b = match branch {
        Branch::Forward => 0,
        Branch::Backward => 1,
    };
    let s = match spin {
        Spin::Up => 0,
        Spin::Down => 1,
    };
    2 * b + s
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Frame {
    /// Frame in which the two branches move with opposite velocities `±v1`.
    ParticleAverage,
    /// Observer moving with speed `v2` along x.
    Boosted(Velocity),
}

#[derive(Debug, Clone, PartialEq)]
pub struct VelocitySpinState {
    state: PureState,
    v1: Velocity,
    frame: Frame,
}

impl VelocitySpinState {
    pub fn state(&self) -> &PureState {
        &self.state
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        self.state.amplitudes()
    }

    pub fn amplitude(&self, branch: Branch, spin: Spin) -> Complex64 {
        self.amplitudes()[basis_index(branch, spin)]
    }

    pub fn v1(&self) -> Velocity {
        self.v1
    }

    pub fn frame(&self) -> Frame {
        self.frame
    }

    pub fn density_matrix(&self) -> DensityMatrix {
        self.state.density_matrix()
    }
}

/// Equal superposition of `±v1` with spin up.
///
/// `v1 = 0` is admitted as the rest limit; the two branches stay distinct
/// basis labels.
pub fn initial_state(v1: Velocity) -> VelocitySpinState {
    let mut amps = vec![ZERO; 4];
    amps[basis_index(Branch::Forward, Spin::Up)] = Complex64::new(FRAC_1_SQRT_2, 0.0);
    amps[basis_index(Branch::Backward, Spin::Up)] = Complex64::new(FRAC_1_SQRT_2, 0.0);
    VelocitySpinState {
        state: PureState::new(amps, vec![2, 2]).expect("unit norm"),
        v1,
        frame: Frame::ParticleAverage,
    }
}

/// Spin rotation `[[cos w, ±i sin w], [±i sin w, cos w]]` applied on one branch.
pub fn wigner_rotation(angle: &WignerAngle, branch: Branch) -> ComplexMatrix {
    let c = Complex64::new(angle.cos_omega(), 0.0);
    let s = Complex64::new(0.0, branch.sign() * angle.sin_omega);
    ComplexMatrix::new(2, 2, vec![c, s, s, c]).expect("2x2")
}

/// Block-diagonal `diag(R(+w), R(-w))` on velocity⊗spin.
pub fn boost_operator(angle: &WignerAngle) -> ComplexMatrix {
    let mut u = ComplexMatrix::zeros(4, 4);
    for (k, branch) in [Branch::Forward, Branch::Backward].into_iter().enumerate() {
        let r = wigner_rotation(angle, branch);
        for i in 0..2 {
            for j in 0..2 {
                u[(2 * k + i, 2 * k + j)] = r[(i, j)];
            }
        }
    }
    u.with_factors(vec![2, 2]).expect("4 = 2 x 2")
}

/// The state as seen by an observer moving with speed `v2` along x.
pub fn boost(state: &VelocitySpinState, v2: Velocity) -> Result<VelocitySpinState> {
    if state.frame != Frame::ParticleAverage {
        return Err(Error::AlreadyBoosted);
    }
    let angle = wigner_angle(state.v1, v2);
    let rotated = boost_operator(&angle).apply(state.amplitudes());
    // renormalising strips the last-bit drift of the product, which keeps
    // the light-speed limit state exactly (1, i, 1, -i)/2
    let state_out = PureState::normalized(rotated, vec![2, 2])?;
    Ok(VelocitySpinState {
        state: state_out,
        v1: state.v1,
        frame: Frame::Boosted(v2),
    })
}

/// Reduced state on the velocity branches, basis `{|+v1>, |-v1>}`.
pub fn velocity_density_matrix(state: &VelocitySpinState) -> DensityMatrix {
    state
        .density_matrix()
        .partial_trace(VELOCITY_FACTOR)
        .expect("velocity⊗spin carries two factors")
}

/// Reduced spin state, basis `{|up>, |down>}`.
pub fn spin_density_matrix(state: &VelocitySpinState) -> DensityMatrix {
    state
        .density_matrix()
        .partial_trace(SPIN_FACTOR)
        .expect("velocity⊗spin carries two factors")
}

/// `½ [[1, c], [c, 1]]` for velocity coherence `c = cos(2 omega)`.
pub fn closed_form_velocity_matrix(cos_two_omega: f64) -> ComplexMatrix {
    let h = 0.5 * cos_two_omega;
    ComplexMatrix::from_real(2, 2, &[0.5, h, h, 0.5]).expect("2x2")
}

/// Single-mode occupation basis: vacuum, one particle spin up, one spin down.
pub const MODE_VACUUM: usize = 0;
pub const MODE_UP: usize = 1;
pub const MODE_DOWN: usize = 2;

fn mode_level(spin: Spin) -> usize {
    match spin {
        Spin::Up => MODE_UP,
        Spin::Down => MODE_DOWN,
    }
}

/// One particle shared between the `+v1` mode (factor 0) and the `-v1` mode
/// (factor 1), each with levels `{vac, up, down}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeEmbeddedState(PureState);

impl ModeEmbeddedState {
    pub fn state(&self) -> &PureState {
        &self.0
    }

    pub fn amplitude(&self, forward_level: usize, backward_level: usize) -> Complex64 {
        self.0.amplitudes()[3 * forward_level + backward_level]
    }

    /// Largest amplitude outside the one-particle sector.
    pub fn leakage(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..3 {
            for b in 0..3 {
                let one_particle = (a == MODE_VACUUM) != (b == MODE_VACUUM);
                if !one_particle {
                    worst = worst.max(self.amplitude(a, b).norm());
                }
            }
        }
        worst
    }

    /// Reduced state of one mode (0 = `+v1`, 1 = `-v1`).
    pub fn mode_density_matrix(&self, mode: usize) -> Result<DensityMatrix> {
        self.0.density_matrix().partial_trace(mode)
    }

    /// Entanglement across the mode bipartition, in bits.
    pub fn mode_entropy(&self, mode: usize) -> Result<f64> {
        von_neumann_entropy(&self.mode_density_matrix(mode)?)
    }
}

/// `|+v1>|chi> -> |chi>|vac>`, `|-v1>|chi> -> |vac>|chi>`.
pub fn mode_embedding(state: &VelocitySpinState) -> ModeEmbeddedState {
    let mut amps = vec![ZERO; 9];
    for spin in [Spin::Up, Spin::Down] {
        let level = mode_level(spin);
        amps[3 * level + MODE_VACUUM] = state.amplitude(Branch::Forward, spin);
        amps[3 * MODE_VACUUM + level] = state.amplitude(Branch::Backward, spin);
    }
    ModeEmbeddedState(PureState::new(amps, vec![3, 3]).expect("relabelling preserves norm"))
}

/// The boost in the mode picture: `(U_forward, U_backward)`, each acting on
/// one mode's `{vac, up, down}` as `1 ⊕ R(±w)`. Their tensor product maps
/// `mode_embedding(s)` to `mode_embedding(boost(s))`.
pub fn mode_local_boost(angle: &WignerAngle) -> (ComplexMatrix, ComplexMatrix) {
    let local = |branch| {
        let r = wigner_rotation(angle, branch);
        let mut u = ComplexMatrix::zeros(3, 3);
        u[(0, 0)] = ONE;
        for i in 0..2 {
            for j in 0..2 {
                u[(1 + i, 1 + j)] = r[(i, j)];
            }
        }
        u
    };
    (local(Branch::Forward), local(Branch::Backward))
}

/// `U_forward ⊗ U_backward` on the 9-dimensional mode space.
pub fn mode_boost_operator(angle: &WignerAngle) -> ComplexMatrix {
    let (a, b) = mode_local_boost(angle);
    kron(&a, &b)
}

/// Velocity-mode state written as two occupation qubits, basis
/// `{|00>, |01>, |10>, |11>}` with `|+v1> -> |10>` and `|-v1> -> |01>`.
#[derive(Debug, Clone, PartialEq)]
pub struct EffectiveTwoQubitState(DensityMatrix);

impl EffectiveTwoQubitState {
    pub fn density(&self) -> &DensityMatrix {
        &self.0
    }

    /// Largest entry outside the `{|01>, |10>}` block.
    pub fn leakage(&self) -> f64 {
        let m = self.0.matrix();
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                if !(matches!(i, 1 | 2) && matches!(j, 1 | 2)) {
                    worst = worst.max(m[(i, j)].norm());
                }
            }
        }
        worst
    }
}

const OCCUPIED_FORWARD: usize = 2; // |10>
const OCCUPIED_BACKWARD: usize = 1; // |01>

pub fn effective_two_qubit(rho_v: &DensityMatrix) -> Result<EffectiveTwoQubitState> {
    if rho_v.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: rho_v.dim(),
        });
    }
    let map = [OCCUPIED_FORWARD, OCCUPIED_BACKWARD];
    let mut m = ComplexMatrix::zeros(4, 4);
    for (i, &row) in map.iter().enumerate() {
        for (j, &col) in map.iter().enumerate() {
            m[(row, col)] = rho_v.entry(i, j);
        }
    }
    let m = m.with_factors(vec![2, 2]).expect("4 = 2 x 2");
    Ok(EffectiveTwoQubitState(DensityMatrix::from_trusted(m)))
}

/// The light-speed limit state `(|+v1>(|up> + i|down>) + |-v1>(|up> - i|down>))/2`.
pub fn cnot_limit_state() -> PureState {
    let half = 0.5;
    PureState::new(
        vec![
            Complex64::new(half, 0.0),
            Complex64::new(0.0, half),
            Complex64::new(half, 0.0),
            Complex64::new(0.0, -half),
        ],
        vec![2, 2],
    )
    .expect("unit norm")
}

/// `|<limit|boosted(v1, v2)>|^2`, which equals `(1 + sin 2w)/2`.
pub fn cnot_limit_fidelity(v1: Velocity, v2: Velocity) -> Result<f64> {
    let boosted = boost(&initial_state(v1), v2)?;
    Ok(cnot_limit_state().fidelity(boosted.state()))
}

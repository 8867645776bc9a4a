//! Velocity-mode entanglement of a single spin-1/2 particle in a superposition
//! of two opposite velocities, as seen by an observer boosted perpendicular to
//! the motion.
//!
//! The pipeline is [`kinematics::wigner_angle`] → [`boosted::initial_state`] →
//! [`boosted::boost`] → reductions → [`measures`]; [`measures::analyze`] runs it
//! end to end for one pair of speeds.

pub mod boosted;
pub mod error;
pub mod kinematics;
pub mod measures;
pub mod quantum;

pub use error::{Error, Result};
pub use kinematics::{gamma, rapidity, wigner_angle, Gamma, Velocity, WignerAngle};
pub use measures::{analyze, AnalysisRecord};

//! Dense complex linear algebra for the handful of small matrices the
//! analysis needs (dimension 9 at most).

pub mod eigen;
pub mod entropy;
pub mod matrix;
pub mod pauli;
pub mod state;

pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use entropy::{binary_entropy, spectrum_entropy, von_neumann_entropy};
pub use matrix::{kron, kron_vec, ComplexMatrix};
pub use state::{DensityMatrix, PureState};

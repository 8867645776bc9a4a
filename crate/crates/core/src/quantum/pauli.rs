//! Standard Pauli matrices, `sigma_y = [[0, -i], [i, 0]]`.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn x() -> ComplexMatrix {
    ComplexMatrix::new(2, 2, vec![ZERO, ONE, ONE, ZERO]).expect("2x2")
}

pub fn y() -> ComplexMatrix {
    ComplexMatrix::new(2, 2, vec![ZERO, -I, I, ZERO]).expect("2x2")
}

pub fn z() -> ComplexMatrix {
    ComplexMatrix::new(2, 2, vec![ONE, ZERO, ZERO, -ONE]).expect("2x2")
}

/// `[sigma_x, sigma_y, sigma_z]`.
pub fn all() -> [ComplexMatrix; 3] {
    [x(), y(), z()]
}

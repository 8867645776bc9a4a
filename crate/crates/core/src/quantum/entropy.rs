use super::state::{DensityMatrix, PSD_TOLERANCE};
use crate::error::Result;

/// `-sum p log2 p` over a spectrum, with `0 log 0 = 0`. Eigenvalues in
/// `[-1e-10, 0)` are numerical noise and are clamped to zero.
pub fn spectrum_entropy(eigenvalues: &[f64]) -> f64 {
    eigenvalues
        .iter()
        .map(|&p| {
            debug_assert!(p >= -PSD_TOLERANCE, "eigenvalue {p} below PSD tolerance");
            if p <= 0.0 {
                0.0
            } else {
                -p * p.log2()
            }
        })
        .sum()
}

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    Ok(spectrum_entropy(&rho.eigenvalues()?))
}

/// Shannon entropy of the distribution `(p, 1 - p)` in bits.
pub fn binary_entropy(p: f64) -> f64 {
    spectrum_entropy(&[p, 1.0 - p])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantum::matrix::ComplexMatrix;
    use crate::quantum::state::PureState;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    #[test]
    fn pure_state_has_zero_entropy() {
        let psi = PureState::normalized(
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)],
            vec![2],
        )
        .unwrap();
        assert_abs_diff_eq!(
            von_neumann_entropy(&psi.density_matrix()).unwrap(),
            0.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn maximally_mixed() {
        assert_eq!(
            von_neumann_entropy(&DensityMatrix::maximally_mixed(2)).unwrap(),
            1.0
        );
        assert_abs_diff_eq!(
            von_neumann_entropy(&DensityMatrix::maximally_mixed(9)).unwrap(),
            9f64.log2(),
            epsilon = 1e-14
        );
    }

    #[test]
    fn ninety_ten_split() {
        let rho = DensityMatrix::new(ComplexMatrix::diagonal(&[0.9, 0.1])).unwrap();
        let expected = 0.468_995_593_589_281_2;
        assert_abs_diff_eq!(
            von_neumann_entropy(&rho).unwrap(),
            expected,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(binary_entropy(0.1), expected, epsilon = 1e-15);
    }

    #[test]
    fn clamps_noise() {
        assert_eq!(spectrum_entropy(&[-1e-12, 1.0]), 0.0);
        assert_eq!(binary_entropy(0.0), 0.0);
        assert_eq!(binary_entropy(0.5), 1.0);
    }
}

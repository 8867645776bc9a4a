use num_complex::Complex64;

use super::eigen::hermitian_eigenvalues;
use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

pub const NORM_TOLERANCE: f64 = 1e-12;
pub const TRACE_TOLERANCE: f64 = 1e-12;
pub const DENSITY_HERMITIAN_TOLERANCE: f64 = 1e-12;
/// Most negative eigenvalue still accepted as positive semidefinite.
pub const PSD_TOLERANCE: f64 = 1e-10;

/// Unit-norm state vector over a tensor-product basis.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
    factors: Vec<usize>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>, factors: Vec<usize>) -> Result<Self> {
        check_factors(&factors, amplitudes.len())?;
        let norm = norm(&amplitudes);
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm));
        }
        Ok(PureState {
            amplitudes,
            factors,
        })
    }

    /// Rescales `amplitudes` to unit norm.
    pub fn normalized(amplitudes: Vec<Complex64>, factors: Vec<usize>) -> Result<Self> {
        check_factors(&factors, amplitudes.len())?;
        let n = norm(&amplitudes);
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NotNormalized(n));
        }
        let amplitudes = amplitudes.into_iter().map(|a| a / n).collect();
        Ok(PureState {
            amplitudes,
            factors,
        })
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "state dimensions differ");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `|<self|other>|^2`.
    pub fn fidelity(&self, other: &PureState) -> f64 {
        self.inner(other).norm_sqr()
    }

    pub fn density_matrix(&self) -> DensityMatrix {
        let m = ComplexMatrix::outer(&self.amplitudes)
            .with_factors(self.factors.clone())
            .expect("factors validated at construction");
        DensityMatrix { matrix: m }
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
}

fn check_factors(factors: &[usize], dim: usize) -> Result<()> {
    if factors.is_empty() || factors.iter().product::<usize>() != dim || dim == 0 {
        return Err(Error::FactorMismatch {
            factors: factors.to_vec(),
            dim,
        });
    }
    Ok(())
}

/// Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let dev = matrix.hermiticity_error();
        if dev > DENSITY_HERMITIAN_TOLERANCE {
            return Err(Error::NotHermitian(dev));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > TRACE_TOLERANCE || tr.im.abs() > TRACE_TOLERANCE {
            return Err(Error::TraceNotUnity(tr.re));
        }
        let lowest = hermitian_eigenvalues(&matrix)?[0];
        if lowest < -PSD_TOLERANCE {
            return Err(Error::NotPositive(lowest));
        }
        Ok(DensityMatrix { matrix })
    }

    /// Skips validation. For results of trace- and Hermiticity-preserving
    /// maps applied to an already valid density matrix.
    pub(crate) fn from_trusted(matrix: ComplexMatrix) -> Self {
        debug_assert!(matrix.is_square());
        DensityMatrix { matrix }
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        DensityMatrix {
            matrix: ComplexMatrix::identity(dim).scale(Complex64::new(1.0 / dim as f64, 0.0)),
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.matrix[(i, j)]
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        hermitian_eigenvalues(&self.matrix)
    }

    /// Reduced state on tensor factor `keep`, tracing out every other factor.
    pub fn partial_trace(&self, keep: usize) -> Result<DensityMatrix> {
        let factors = match self.matrix.factors() {
            Some(f) if f.len() >= 2 => f,
            _ => return Err(Error::MissingBasisLabels),
        };
        if keep >= factors.len() {
            return Err(Error::FactorOutOfRange {
                index: keep,
                count: factors.len(),
            });
        }
        let d_keep = factors[keep];
        let stride: usize = factors[keep + 1..].iter().product();
        let n = self.dim();

        let mut out = ComplexMatrix::zeros(d_keep, d_keep);
        for row in 0..n {
            let a = (row / stride) % d_keep;
            for b in 0..d_keep {
                // same environment digits as `row`, kept digit replaced by b
                let col = row + b * stride - a * stride;
                out[(a, b)] += self.matrix[(row, col)];
            }
        }
        let out = out.with_factors(vec![d_keep])?;
        Ok(DensityMatrix::from_trusted(out))
    }
}

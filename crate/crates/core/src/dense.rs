//! Small dense complex matrices used as the numerical oracle.
//!
//! Basis index `k` is the computational basis state whose binary expansion
//! lists qubit 1 as the most significant bit.

use std::ops::{Add, Mul, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Qubit cap for displacement, Fourier and line-projector matrices.
pub const MAX_DENSE_QUBITS: u32 = 10;
/// Qubit cap for Wigner kernels, eigensystems and Wigner tables.
pub const MAX_KERNEL_QUBITS: u32 = 8;

pub(crate) fn check_cap(qubits: u32, limit: u32) -> Result<()> {
    if qubits > limit {
        Err(Error::DenseLimit { qubits, limit })
    } else {
        Ok(())
    }
}

/// A `2^N × 2^N` complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator(DMatrix<Complex64>);

impl DenseOperator {
    /// Wraps a square matrix whose side is a power of two.
    pub fn from_matrix(m: DMatrix<Complex64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(m.nrows()));
        }
        if !m.nrows().is_power_of_two() {
            return Err(Error::Dimension(m.nrows()));
        }
        Ok(DenseOperator(m))
    }

    pub(crate) fn wrap(m: DMatrix<Complex64>) -> Self {
        debug_assert!(m.is_square() && m.nrows().is_power_of_two());
        DenseOperator(m)
    }

    pub fn zeros(dim: usize) -> Self {
        DenseOperator::wrap(DMatrix::zeros(dim, dim))
    }

    pub fn identity(dim: usize) -> Self {
        DenseOperator::wrap(DMatrix::identity(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn num_qubits(&self) -> u32 {
        self.dim().trailing_zeros()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.0
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.0
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.0[(row, col)]
    }

    pub fn adjoint(&self) -> Self {
        DenseOperator(self.0.adjoint())
    }

    pub fn trace(&self) -> Complex64 {
        self.0.trace()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        DenseOperator(&self.0 * c)
    }

    pub fn kron(&self, other: &DenseOperator) -> Self {
        DenseOperator(self.0.kronecker(&other.0))
    }

    /// `U · self · U†`.
    pub fn conjugate_by(&self, u: &DenseOperator) -> Self {
        DenseOperator(&u.0 * &self.0 * u.0.adjoint())
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        (&self.0 - &other.0)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn approx_eq(&self, other: &DenseOperator, tol: f64) -> bool {
        self.dim() == other.dim() && self.max_abs_diff(other) <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.0.iter().all(|z| z.norm() <= tol)
    }

    /// Eigenvalues of a Hermitian operator, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let sym = (&self.0 + self.0.adjoint()) * Complex64::new(0.5, 0.0);
        let mut ev: Vec<f64> = sym.symmetric_eigenvalues().iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }
}

impl Add<&DenseOperator> for &DenseOperator {
    type Output = DenseOperator;

    fn add(self, rhs: &DenseOperator) -> DenseOperator {
        DenseOperator(&self.0 + &rhs.0)
    }
}

impl Sub<&DenseOperator> for &DenseOperator {
    type Output = DenseOperator;

    fn sub(self, rhs: &DenseOperator) -> DenseOperator {
        DenseOperator(&self.0 - &rhs.0)
    }
}

impl Mul<&DenseOperator> for &DenseOperator {
    type Output = DenseOperator;

    fn mul(self, rhs: &DenseOperator) -> DenseOperator {
        DenseOperator(&self.0 * &rhs.0)
    }
}

impl std::iter::Sum for DenseOperator {
    fn sum<I: Iterator<Item = DenseOperator>>(mut iter: I) -> DenseOperator {
        let first = iter.next().expect("sum of an empty operator list");
        iter.fold(first, |acc, x| DenseOperator(acc.0 + x.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_power_of_two() {
        assert!(DenseOperator::from_matrix(DMatrix::zeros(3, 3)).is_err());
        assert!(DenseOperator::from_matrix(DMatrix::zeros(2, 4)).is_err());
        assert!(DenseOperator::from_matrix(DMatrix::zeros(4, 4)).is_ok());
    }

    #[test]
    fn identity_properties() {
        let i = DenseOperator::identity(8);
        assert_eq!(i.num_qubits(), 3);
        assert!(i.is_hermitian(0.0));
        assert_eq!(i.trace(), Complex64::new(8.0, 0.0));
        assert_eq!(i.hermitian_eigenvalues(), vec![1.0; 8]);
    }

    #[test]
    fn dense_cap() {
        assert!(check_cap(10, MAX_DENSE_QUBITS).is_ok());
        let err = check_cap(11, MAX_DENSE_QUBITS).unwrap_err();
        assert!(err.to_string().contains("dense oracle limit"));
    }
}

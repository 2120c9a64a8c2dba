use super::{Matrix, Scalar};
use crate::error::{Error, Result};

/// The standard form `[[0, I], [-I, 0]]` of size `2n`.
pub fn symplectic_j<T: Scalar>(n: usize) -> Matrix<T> {
    Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if j == i + n && i < n {
            T::one()
        } else if i == j + n && j < n {
            T::one().neg()
        } else {
            T::zero()
        }
    })
}

/// Whether `MᵀJM = J`.
pub fn is_symplectic<T: Scalar>(m: &Matrix<T>, n: usize) -> Result<bool> {
    if m.rows() != 2 * n || m.cols() != 2 * n {
        return Err(Error::DimensionMismatch(format!(
            "expected {0}x{0}, got {1}x{2}",
            2 * n,
            m.rows(),
            m.cols()
        )));
    }
    let j = symplectic_j::<T>(n);
    Ok(m.transpose().mul(&j).mul(m).approx_eq(&j))
}

/// `M⁻¹ = -J Mᵀ J` for symplectic `M`.
pub fn symplectic_inverse<T: Scalar>(m: &Matrix<T>, n: usize) -> Result<Matrix<T>> {
    if !is_symplectic(m, n)? {
        return Err(Error::NotSymplectic);
    }
    Ok(symplectic_inverse_unchecked(m, n))
}

pub(crate) fn symplectic_inverse_unchecked<T: Scalar>(m: &Matrix<T>, n: usize) -> Matrix<T> {
    let j = symplectic_j::<T>(n);
    j.mul(&m.transpose()).mul(&j).neg()
}

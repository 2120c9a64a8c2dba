use crate::algebra::{Matrix, Rational, Scalar};
use crate::error::{Error, Result};

/// The real form `ρ(M) = [[Re M, Im M], [−Im M, Re M]]` of a unitary `M = Re + i·Im`.
///
/// The result is symplectic and commutes with `J`.
pub fn unitary_embed<T: Scalar>(re: &Matrix<T>, im: &Matrix<T>) -> Result<Matrix<T>> {
    let n = re.rows();
    if !re.is_square() || (im.rows(), im.cols()) != (n, n) {
        return Err(Error::DimensionMismatch("real and imaginary parts must be n×n".into()));
    }
    // M*M = (Reᵀ − i Imᵀ)(Re + i Im).
    let real = re.transpose().mul(re).add(&im.transpose().mul(im));
    let imag = re.transpose().mul(im).sub(&im.transpose().mul(re));
    if !real.is_identity() || !imag.approx_eq(&Matrix::zeros(n, n)) {
        return Err(Error::NotUnitary);
    }
    let mut out = Matrix::zeros(2 * n, 2 * n);
    out.set_block(0, 0, re);
    out.set_block(0, n, im);
    out.set_block(n, 0, &im.neg());
    out.set_block(n, n, re);
    Ok(out)
}

/// `R = [[c, s], [−s, c]]` for an exact point on the unit circle.
pub fn rotation_matrix(c: &Rational, s: &Rational) -> Result<Matrix<Rational>> {
    if &(c * c) + &(s * s) != Rational::one() {
        return Err(Error::NotOnCircle(c.to_string(), s.to_string()));
    }
    Ok(rotation_2x2(c.clone(), s.clone()))
}

/// `R_θ = [[cos θ, sin θ], [−sin θ, cos θ]]`.
pub fn rotation_matrix_f64(theta: f64) -> Matrix<f64> {
    rotation_2x2(theta.cos(), theta.sin())
}

fn rotation_2x2<T: Scalar>(c: T, s: T) -> Matrix<T> {
    Matrix::from_rows(vec![vec![c.clone(), s.clone()], vec![s.neg(), c]]).expect("2x2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_symplectic, symplectic_j};

    #[test]
    fn embedding_of_i_is_j() {
        let re = Matrix::<Rational>::zeros(1, 1);
        let im = Matrix::<Rational>::identity(1);
        assert_eq!(unitary_embed(&re, &im).unwrap(), symplectic_j(1));
        let id = unitary_embed(&Matrix::<Rational>::identity(3), &Matrix::zeros(3, 3)).unwrap();
        assert!(id.is_identity());
        let twice = Matrix::scalar(1, Rational::from_integer(2));
        assert_eq!(unitary_embed(&twice, &Matrix::zeros(1, 1)), Err(Error::NotUnitary));
    }

    #[test]
    fn pythagorean_rotation() {
        let r = rotation_matrix(&Rational::new(3, 5), &Rational::new(4, 5)).unwrap();
        let j = symplectic_j::<Rational>(1);
        assert_eq!(r.mul(&j), j.mul(&r));
        assert!(is_symplectic(&r, 1).unwrap());
        assert_eq!(rotation_matrix(&Rational::zero(), &Rational::one()).unwrap(), j);
        assert!(rotation_matrix(&Rational::one(), &Rational::zero()).unwrap().is_identity());
        assert!(matches!(
            rotation_matrix(&Rational::new(1, 2), &Rational::new(1, 2)),
            Err(Error::NotOnCircle(..))
        ));
    }
}

use super::layout::permutations;
use crate::algebra::{Matrix, Scalar};
use crate::error::{Error, Result};

/// Number of inversions of a permutation.
pub fn inversions(p: &[usize]) -> u32 {
    let mut k = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                k += 1;
            }
        }
    }
    k
}

/// `det_q(A) = Σ_σ (−q)^{ℓ(σ)} a_{1σ(1)} ⋯ a_{nσ(n)}`, with `q` any ring element.
pub fn qdet<T: Scalar>(a: &Matrix<T>, q: &T) -> Result<T> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("quantum determinant of a non-square matrix".into()));
    }
    let minus_q = q.neg();
    let mut total = T::zero();
    for p in permutations(a.rows()) {
        let mut term = minus_q.pow(inversions(&p));
        for (i, &j) in p.iter().enumerate() {
            term = term.mul(a.get(i, j));
            if term.is_zero() {
                break;
            }
        }
        total.add_assign(&term);
    }
    Ok(total)
}

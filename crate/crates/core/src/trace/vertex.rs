use super::layout::{perm_sign, permutations};
use crate::algebra::{det, symplectic_j, Matrix, Scalar};
use crate::error::{Error, Result};

/// A perfect pairing of `0..2n` as pairs `(i, j)` with `i < j` and `i` increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingDiagram {
    pub pairs: Vec<(usize, usize)>,
}

impl PairingDiagram {
    /// `K_α`: pairs `(i_k, j_k)`, `(i_l, j_l)` with `i_k < i_l < j_k < j_l`.
    pub fn crossing_count(&self) -> usize {
        let mut k = 0;
        for &(a, b) in &self.pairs {
            for &(c, d) in &self.pairs {
                if a < c && c < b && b < d {
                    k += 1;
                }
            }
        }
        k
    }

    /// All `(2n − 1)!!` pairings of `0..2n`.
    pub fn all(two_n: usize) -> Vec<PairingDiagram> {
        let mut out = Vec::new();
        let mut used = vec![false; two_n];
        let mut pairs = Vec::new();
        all_rec(&mut used, &mut pairs, &mut out);
        out
    }
}

fn all_rec(used: &mut [bool], pairs: &mut Vec<(usize, usize)>, out: &mut Vec<PairingDiagram>) {
    let Some(i) = used.iter().position(|&u| !u) else {
        out.push(PairingDiagram { pairs: pairs.clone() });
        return;
    };
    used[i] = true;
    for j in i + 1..used.len() {
        if !used[j] {
            used[j] = true;
            pairs.push((i, j));
            all_rec(used, pairs, out);
            pairs.pop();
            used[j] = false;
        }
    }
    used[i] = false;
}

pub fn crossing_count(alpha: &PairingDiagram) -> usize {
    alpha.crossing_count()
}

fn check_square(vectors: &[Vec<impl Scalar>]) -> Result<usize> {
    let k = vectors.len();
    if k == 0 || k % 2 == 1 || vectors.iter().any(|v| v.len() != k) {
        return Err(Error::DimensionMismatch(format!(
            "need 2n vectors of length 2n, got {k} vectors"
        )));
    }
    Ok(k / 2)
}

/// The 2n-valent vertex: `Σ_α (−1)^{K_α + n(n+1)/2} ∏_k v_{j_k}ᵀ J v_{i_k}`.
pub fn det_vertex<T: Scalar>(vectors: &[Vec<T>]) -> Result<T> {
    let n = check_square(vectors)?;
    let j = symplectic_j::<T>(n);
    let form = |a: &[T], b: &[T]| -> T {
        let mut acc = T::zero();
        for r in 0..2 * n {
            for c in 0..2 * n {
                let x = j.get(r, c);
                if !x.is_zero() {
                    acc.add_assign(&a[r].mul(x).mul(&b[c]));
                }
            }
        }
        acc
    };
    let base = n * (n + 1) / 2;
    let mut total = T::zero();
    for alpha in PairingDiagram::all(2 * n) {
        let mut term = T::one();
        for &(i, jj) in &alpha.pairs {
            term = term.mul(&form(&vectors[jj], &vectors[i]));
        }
        if (alpha.crossing_count() + base) % 2 == 1 {
            term = term.neg();
        }
        total.add_assign(&term);
    }
    Ok(total)
}

/// `v_1 ∧ ⋯ ∧ v_{2n}` as the determinant of the matrix with these columns.
pub fn wedge_norm<T: Scalar>(vectors: &[Vec<T>]) -> Result<T> {
    check_square(vectors)?;
    det(&Matrix::from_columns(vectors)?)
}

/// The codeterminant `Σ_σ sgn(σ) e_{σ(1)} ⊗ ⋯ ⊗ e_{σ(2n)}` as its nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexTensor {
    pub n: usize,
    pub entries: Vec<(Vec<usize>, i64)>,
}

impl VertexTensor {
    pub fn entry(&self, index: &[usize]) -> i64 {
        self.entries
            .iter()
            .find(|(i, _)| i == index)
            .map_or(0, |&(_, s)| s)
    }
}

pub fn codeterminant(n: usize) -> VertexTensor {
    VertexTensor {
        n,
        entries: permutations(2 * n)
            .into_iter()
            .map(|p| {
                let s = perm_sign(&p);
                (p, s)
            })
            .collect(),
    }
}

use super::layout::{normalize, perm_sign, prepare};
use crate::algebra::{Matrix, Scalar};
use crate::connection::Connection;
use crate::error::Result;
use crate::graph::{PlanarGraph, Structure};
use crate::multiweb::Multiweb;

/// Dense tensor with one named index per label, each of dimension `dim`.
#[derive(Clone, Debug)]
struct Tensor<T> {
    labels: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    /// The codeterminant on the given legs: `sgn(c)` on permutations, else 0.
    fn codeterminant(labels: Vec<usize>, dim: usize) -> Self {
        let r = labels.len();
        let size = dim.pow(r as u32);
        let mut data = vec![T::zero(); size];
        let mut digits = vec![0usize; r];
        for (idx, slot) in data.iter_mut().enumerate() {
            let mut x = idx;
            for k in (0..r).rev() {
                digits[k] = x % dim;
                x /= dim;
            }
            let mut seen = 0u64;
            let distinct = digits.iter().all(|&c| {
                let fresh = seen & (1 << c) == 0;
                seen |= 1 << c;
                fresh
            });
            if distinct {
                *slot = T::from_i64(perm_sign(&digits));
            }
        }
        Tensor { labels, data }
    }

    fn rank(&self) -> usize {
        self.labels.len()
    }

    /// Replaces index `label` by `j` via `Σ_i T[.., i, ..] M[i][j]`.
    fn absorb(&mut self, label: usize, m: &Matrix<T>, dim: usize) {
        let p = self.labels.iter().position(|&l| l == label).expect("label present");
        let stride = dim.pow((self.rank() - 1 - p) as u32);
        let mut out = vec![T::zero(); self.data.len()];
        for (idx, v) in self.data.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let i = (idx / stride) % dim;
            let base = idx - i * stride;
            for j in 0..dim {
                let mij = m.get(i, j);
                if !mij.is_zero() {
                    out[base + j * stride].add_assign(&v.mul(mij));
                }
            }
        }
        self.data = out;
    }

    /// Data reordered so that labels appear in `order`.
    fn permuted(&self, order: &[usize], dim: usize) -> Vec<T> {
        let r = self.rank();
        let pos: Vec<usize> = order
            .iter()
            .map(|l| self.labels.iter().position(|x| x == l).expect("label present"))
            .collect();
        let strides: Vec<usize> = (0..r).map(|k| dim.pow((r - 1 - k) as u32)).collect();
        let mut out = Vec::with_capacity(self.data.len());
        let mut digits = vec![0usize; r];
        for _ in 0..self.data.len() {
            let src: usize = (0..r).map(|k| digits[k] * strides[pos[k]]).sum();
            out.push(self.data[src].clone());
            for k in (0..r).rev() {
                digits[k] += 1;
                if digits[k] < dim {
                    break;
                }
                digits[k] = 0;
            }
        }
        out
    }

    /// Contracts all shared labels of `self` and `other`.
    fn contract(&self, other: &Self, dim: usize) -> Self {
        let shared: Vec<usize> = self.labels.iter().copied().filter(|l| other.labels.contains(l)).collect();
        let a_free: Vec<usize> = self.labels.iter().copied().filter(|l| !shared.contains(l)).collect();
        let b_free: Vec<usize> = other.labels.iter().copied().filter(|l| !shared.contains(l)).collect();
        let a_order: Vec<usize> = a_free.iter().chain(&shared).copied().collect();
        let b_order: Vec<usize> = shared.iter().chain(&b_free).copied().collect();
        let a = self.permuted(&a_order, dim);
        let b = other.permuted(&b_order, dim);
        let (na, ns, nb) = (
            dim.pow(a_free.len() as u32),
            dim.pow(shared.len() as u32),
            dim.pow(b_free.len() as u32),
        );
        let mut data = vec![T::zero(); na * nb];
        for i in 0..na {
            for k in 0..ns {
                let x = &a[i * ns + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..nb {
                    let y = &b[k * nb + j];
                    if !y.is_zero() {
                        data[i * nb + j].add_assign(&x.mul(y));
                    }
                }
            }
        }
        Tensor {
            labels: a_free.into_iter().chain(b_free).collect(),
            data,
        }
    }
}

/// Trace by contracting a codeterminant at every vertex along `Jφ` on every
/// strand, merging tensors greedily by smallest resulting rank.
pub fn trace_contraction<T: Scalar>(g: &PlanarGraph, conn: &Connection<T>, m: &Multiweb, s: &Structure) -> Result<T> {
    let p = prepare(g, conn, m, s)?;
    let dim = 2 * m.rank();
    let layout = &p.layout;
    let mut tensors: Vec<Tensor<T>> = layout
        .slots
        .iter()
        .map(|slots| Tensor::codeterminant(slots.clone(), dim))
        .collect();
    for (k, st) in layout.strands.iter().enumerate() {
        tensors[st.tail].absorb(k, &p.factors[k], dim);
    }
    while tensors.len() > 1 {
        let mut best = (usize::MAX, 0usize, 0, 1);
        for i in 0..tensors.len() {
            for j in i + 1..tensors.len() {
                let shared = tensors[i].labels.iter().filter(|l| tensors[j].labels.contains(l)).count();
                let rank = tensors[i].rank() + tensors[j].rank() - 2 * shared;
                if (rank, usize::MAX - shared) < (best.0, usize::MAX - best.1) {
                    best = (rank, shared, i, j);
                }
            }
        }
        let (_, _, i, j) = best;
        let b = tensors.swap_remove(j);
        let a = tensors.swap_remove(i);
        tensors.push(a.contract(&b, dim));
    }
    let total = tensors.pop().map_or_else(T::one, |t| t.data[0].clone());
    Ok(normalize(total, p.symmetry))
}

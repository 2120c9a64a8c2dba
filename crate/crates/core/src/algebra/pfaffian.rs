use super::{Matrix, Scalar, SkewMatrix};
use crate::error::{Error, Result};

/// Pfaffian as the signed sum over all perfect pairings. Limited to 8×8.
pub fn pf_combinatorial<T: Scalar>(a: &SkewMatrix<T>) -> Result<T> {
    let dim = a.dim();
    if dim > 8 {
        return Err(Error::TooLarge(dim));
    }
    if dim % 2 == 1 {
        return Ok(T::zero());
    }
    let mut total = T::zero();
    let mut word = Vec::with_capacity(dim);
    let mut used = vec![false; dim];
    pairings(dim, &mut used, &mut word, &mut |w| {
        let mut term = T::one();
        for pair in w.chunks(2) {
            term = term.mul(a.get(pair[0], pair[1]));
            if term.is_zero() {
                return;
            }
        }
        if inversions(w) % 2 == 1 {
            term = term.neg();
        }
        total.add_assign(&term);
    });
    Ok(total)
}

/// Visits every pairing as a word `i1 j1 i2 j2 ...` with `ik < jk` and `ik` increasing.
fn pairings(dim: usize, used: &mut [bool], word: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    let Some(i) = (0..dim).find(|&i| !used[i]) else {
        f(word);
        return;
    };
    used[i] = true;
    for j in i + 1..dim {
        if used[j] {
            continue;
        }
        used[j] = true;
        word.push(i);
        word.push(j);
        pairings(dim, used, word, f);
        word.truncate(word.len() - 2);
        used[j] = false;
    }
    used[i] = false;
}

fn inversions(w: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                count += 1;
            }
        }
    }
    count
}

/// Pfaffian by skew-symmetric elimination with pivoting.
///
/// Fields use Schur complements. Polynomial rings use a fraction-free scheme
/// where every intermediate entry is itself the Pfaffian of a principal
/// submatrix, so all divisions are exact.
pub fn pf_eliminate<T: Scalar>(a: &SkewMatrix<T>) -> T {
    let dim = a.dim();
    if dim % 2 == 1 {
        return T::zero();
    }
    if dim == 0 {
        return T::one();
    }
    let mut m = a.as_matrix().clone();
    if T::FIELD {
        pf_schur(&mut m)
    } else {
        pf_fraction_free(&mut m)
    }
}

/// Moves the best nonzero pair among active indices `k..` to `(k, k+1)`.
/// Returns the sign of the permutation applied, or `None` if all are zero.
fn pivot<T: Scalar>(m: &mut Matrix<T>, k: usize) -> Option<bool> {
    let dim = m.rows();
    let mut best: Option<(usize, usize, f64)> = None;
    for i in k..dim {
        for j in i + 1..dim {
            let s = m.get(i, j).pivot_score();
            if !m.get(i, j).is_zero() && best.is_none_or(|(_, _, b)| s > b) {
                best = Some((i, j, s));
            }
        }
    }
    let (p, q, _) = best?;
    let mut flip = false;
    if p != k {
        swap_index(m, p, k);
        flip = !flip;
    }
    // `q > p >= k`, and `q` never equals `k` after the first swap.
    if q != k + 1 {
        swap_index(m, q, k + 1);
        flip = !flip;
    }
    Some(flip)
}

fn swap_index<T: Scalar>(m: &mut Matrix<T>, a: usize, b: usize) {
    let dim = m.rows();
    for j in 0..dim {
        let (x, y) = (m.get(a, j).clone(), m.get(b, j).clone());
        m.set(a, j, y);
        m.set(b, j, x);
    }
    for i in 0..dim {
        let (x, y) = (m.get(i, a).clone(), m.get(i, b).clone());
        m.set(i, a, y);
        m.set(i, b, x);
    }
}

fn pf_schur<T: Scalar>(m: &mut Matrix<T>) -> T {
    let dim = m.rows();
    let mut pf = T::one();
    let mut k = 0;
    while k < dim {
        let Some(flip) = pivot(m, k) else {
            return T::zero();
        };
        if flip {
            pf = pf.neg();
        }
        let (a, b) = (k, k + 1);
        let p = m.get(a, b).clone();
        pf = pf.mul(&p);
        for i in k + 2..dim {
            for j in i + 1..dim {
                let num = m
                    .get(b, i)
                    .mul(m.get(a, j))
                    .sub(&m.get(a, i).mul(m.get(b, j)));
                if num.is_zero() {
                    continue;
                }
                let v = m.get(i, j).add(&num.div_exact(&p).expect("nonzero pivot"));
                m.set(j, i, v.neg());
                m.set(i, j, v);
            }
        }
        k += 2;
    }
    pf
}

fn pf_fraction_free<T: Scalar>(m: &mut Matrix<T>) -> T {
    let dim = m.rows();
    let mut negate = false;
    let mut prev = T::one();
    let mut k = 0;
    while k < dim {
        let Some(flip) = pivot(m, k) else {
            return T::zero();
        };
        negate ^= flip;
        let (a, b) = (k, k + 1);
        let p = m.get(a, b).clone();
        for i in k + 2..dim {
            for j in i + 1..dim {
                let num = p
                    .mul(m.get(i, j))
                    .sub(&m.get(a, i).mul(m.get(b, j)))
                    .add(&m.get(a, j).mul(m.get(b, i)));
                let v = num
                    .div_exact(&prev)
                    .expect("fraction-free Pfaffian step must divide exactly");
                m.set(j, i, v.neg());
                m.set(i, j, v);
            }
        }
        prev = p;
        k += 2;
    }
    if negate {
        prev.neg()
    } else {
        prev
    }
}

/// Determinant by Bareiss elimination with row pivoting.
pub fn det<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "determinant of {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut rows = a.to_rows();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n {
        let best = (k..n)
            .filter(|&i| !rows[i][k].is_zero())
            .max_by(|&i, &j| rows[i][k].pivot_score().total_cmp(&rows[j][k].pivot_score()));
        let Some(p) = best else {
            return Ok(T::zero());
        };
        if p != k {
            rows.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = rows[k][k].mul(&rows[i][j]).sub(&rows[i][k].mul(&rows[k][j]));
                rows[i][j] = num.div_exact(&prev).expect("Bareiss step must divide exactly");
            }
            rows[i][k] = T::zero();
        }
        prev = rows[k][k].clone();
    }
    let d = rows[n - 1][n - 1].clone();
    Ok(if negate { d.neg() } else { d })
}

/// `tr(⋀ᵏA)`, the sum of all principal `k×k` minors.
pub fn exterior_power_trace<T: Scalar>(a: &Matrix<T>, k: usize) -> Result<T> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("exterior power of a non-square matrix".into()));
    }
    let n = a.rows();
    if k > n {
        return Err(Error::BadK { k, max: n });
    }
    let mut total = T::zero();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        total.add_assign(&det(&a.submatrix(&subset, &subset))?);
        // Next k-subset in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(total);
            }
            i -= 1;
            if subset[i] < n - k + i {
                break;
            }
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly, Rational};

    fn p(s: &str) -> Poly {
        Poly::var(s)
    }

    #[test]
    fn two_by_two_and_four_by_four() {
        let a = SkewMatrix::from_upper(2, |_, _| p("a"));
        assert_eq!(pf_combinatorial(&a).unwrap(), p("a"));
        assert_eq!(pf_eliminate(&a), p("a"));

        let name = |i: usize, j: usize| format!("a{}{}", i + 1, j + 1);
        let a4 = SkewMatrix::from_upper(4, |i, j| p(&name(i, j)));
        let expect = &(&(&p("a12") * &p("a34")) - &(&p("a13") * &p("a24"))) + &(&p("a14") * &p("a23"));
        assert_eq!(pf_combinatorial(&a4).unwrap(), expect);
        assert_eq!(pf_eliminate(&a4), expect);
    }

    #[test]
    fn generic_six_by_six_polynomial_agrees() {
        let a6 = SkewMatrix::from_upper(6, |i, j| p(&format!("x{i}{j}")));
        let pf = pf_eliminate(&a6);
        assert_eq!(pf.num_terms(), 15);
        assert_eq!(pf, pf_combinatorial(&a6).unwrap());
        assert_eq!(&pf * &pf, det(a6.as_matrix()).unwrap());
    }

    #[test]
    fn zero_leading_pivot_is_handled() {
        // Row 0 is zero except against index 3.
        let m = SkewMatrix::from_upper(4, |i, j| match (i, j) {
            (0, 3) => Rational::from_integer(2),
            (1, 2) => Rational::from_integer(5),
            _ => Rational::zero(),
        });
        assert_eq!(pf_eliminate(&m), Rational::from_integer(10));
        assert_eq!(pf_combinatorial(&m).unwrap(), Rational::from_integer(10));
    }

    #[test]
    fn block_j_has_pfaffian_one() {
        let m = SkewMatrix::from_upper(8, |i, j| {
            if j == i + 1 && i % 2 == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        assert_eq!(pf_eliminate(&m), Rational::one());
        let f = SkewMatrix::new(m.as_matrix().to_f64()).unwrap();
        assert!((pf_eliminate(&f) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn odd_and_oversized() {
        let m = SkewMatrix::from_upper(3, |_, _| Rational::one());
        assert_eq!(pf_eliminate(&m), Rational::zero());
        let big = SkewMatrix::from_upper(10, |_, _| Rational::one());
        assert_eq!(pf_combinatorial(&big), Err(Error::TooLarge(10)));
    }

    #[test]
    fn exterior_powers_of_identity() {
        let i4 = Matrix::<Rational>::identity(4);
        assert_eq!(exterior_power_trace(&i4, 2).unwrap(), Rational::from_integer(6));
        assert_eq!(exterior_power_trace(&i4, 0).unwrap(), Rational::one());
        assert_eq!(exterior_power_trace(&i4, 4).unwrap(), Rational::one());
        assert_eq!(exterior_power_trace(&i4, 5), Err(Error::BadK { k: 5, max: 4 }));
    }
}

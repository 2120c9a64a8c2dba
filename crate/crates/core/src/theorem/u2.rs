use super::hmatrix::{build_h, unit_weights};
use crate::algebra::{exterior_power_trace, symplectic_j, Matrix};
use crate::connection::{flat_annulus_connection, j_power, kasteleyn_connection, rotation_matrix_f64, unitary_embed, AnnulusSpec};
use crate::error::{Error, Result};
use crate::graph::{standard_structure, PlanarGraph};
use crate::multiweb::Multiweb;
use crate::trace::trace_contraction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum U2LoopKind {
    OddDoubled,
    EvenSingle,
    EvenDoubled,
}

/// Closed-form loop traces under a Kasteleyn connection twisted by `R ∈ U(2)`.
pub fn u2_loop_trace(kind: U2LoopKind, alpha: f64, eps: f64, theta: f64) -> f64 {
    let c = (alpha - eps / 2.0).cos();
    match kind {
        U2LoopKind::OddDoubled => {
            1.0 - (2.0 * alpha - eps).cos() + 2.0 * eps.cos() - 2.0 * c * c * (2.0 * theta).cos()
        }
        U2LoopKind::EvenSingle => 2.0 * (alpha.cos() + (alpha - eps).cos()) * theta.cos(),
        U2LoopKind::EvenDoubled => {
            1.0 + (2.0 * alpha - eps).cos() + 2.0 * eps.cos() + 2.0 * c * c * (2.0 * theta).cos()
        }
    }
}

/// The value of `cos 2θ` that makes the odd doubled-loop trace vanish.
pub fn solve_theta(alpha: f64, eps: f64) -> Result<f64> {
    let c = (alpha - eps / 2.0).cos();
    let den = 2.0 * c * c;
    if den.abs() < 1e-14 {
        return Err(Error::DivByZero);
    }
    let v = (1.0 - (2.0 * alpha - eps).cos() + 2.0 * eps.cos()) / den;
    if v.abs() > 1.0 + 1e-12 {
        return Err(Error::OutOfRange(v));
    }
    Ok(v.clamp(-1.0, 1.0))
}

/// `θ ∈ [0, π]` with `cos 2θ` from [`solve_theta`], on the branch where the
/// single even loop has positive weight `2 + 2 cos ε`.
pub fn solved_theta(alpha: f64, eps: f64) -> Result<f64> {
    let theta = solve_theta(alpha, eps)?.acos() / 2.0;
    if (alpha - eps / 2.0).cos() * (eps / 2.0).cos() < 0.0 {
        Ok(std::f64::consts::PI - theta)
    } else {
        Ok(theta)
    }
}

/// Real and imaginary parts of
/// `[[cos θ e^{iα}, sin θ e^{iβ}], [−sin θ e^{i(ε−β)}, cos θ e^{i(ε−α)}]]`.
pub fn u2_matrix(theta: f64, alpha: f64, beta: f64, eps: f64) -> (Matrix<f64>, Matrix<f64>) {
    let (c, s) = (theta.cos(), theta.sin());
    let entries = [
        (c, alpha),
        (s, beta),
        (-s, eps - beta),
        (c, eps - alpha),
    ];
    let part = |f: fn(f64) -> f64| {
        Matrix::from_fn(2, 2, |i, j| {
            let (r, phase) = entries[2 * i + j];
            r * f(phase)
        })
    };
    (part(f64::cos), part(f64::sin))
}

/// `ρ(R)` for the matrix of [`u2_matrix`].
pub fn u2_rho(theta: f64, alpha: f64, beta: f64, eps: f64) -> Matrix<f64> {
    let (re, im) = u2_matrix(theta, alpha, beta, eps);
    unitary_embed(&re, &im).expect("u2_matrix is unitary")
}

/// A cycle on `len` vertices drawn convex, or a digon when `len == 2`.
/// Its single bounded face has area `len − 2`.
pub fn cycle_graph(len: usize) -> PlanarGraph {
    assert!(len >= 2);
    if len == 2 {
        return PlanarGraph::from_integer_points(&[(0, 0), (1, 2)], &[(0, 1), (0, 1)]).expect("digon");
    }
    let pts: Vec<(i64, i64)> = (0..len as i64).map(|k| (k, k * k)).collect();
    let edges: Vec<(usize, usize)> = (0..len).map(|k| (k, (k + 1) % len)).collect();
    PlanarGraph::from_integer_points(&pts, &edges).expect("convex cycle")
}

/// Loop trace from raw matrices on a cycle enclosing `area` triangles,
/// under the rank-2 Kasteleyn connection twisted by `rho` around the face.
///
/// Multiplicity 1 gives `−tr φ_γ` rescaled by the sign of the untwisted
/// loop `−tr J^A`; multiplicity 2 contracts the doubled cycle.
pub fn raw_loop_trace(area: usize, multiplicity: u32, rho: &Matrix<f64>) -> Result<f64> {
    let g = cycle_graph(area + 2);
    let face = g.bounded_faces().next().expect("one bounded face");
    let spec = AnnulusSpec::new(&g, face)?;
    let conn = kasteleyn_connection::<f64>(&g, 2).edgewise_product(&g, &flat_annulus_connection(&g, &spec, rho, 2)?)?;
    match multiplicity {
        1 => {
            let phi = conn.monodromy(&g, &crate::graph::Loop::face_boundary(&g, face));
            let raw = -phi.trace();
            Ok(if area.is_multiple_of(4) { -raw } else { raw })
        }
        2 => {
            let m = Multiweb::new(&g, 2, vec![2; g.num_edges()])?;
            trace_contraction(&g, &conn, &m, &standard_structure(&g)?)
        }
        _ => Err(Error::MalformedWeb("loop multiplicity must be 1 or 2".into())),
    }
}

/// `tr ⋀²(J^A ρ)`, the doubled-loop trace before the odd-area correction.
pub fn doubled_exterior_trace(area: usize, rho: &Matrix<f64>) -> f64 {
    let x = j_power::<f64>(2, area as i64).mul(rho);
    exterior_power_trace(&x, 2).expect("4x4")
}

/// Loop weights `(2 cos θ, −2 sin θ, −2 cos θ, 2 sin θ)` for areas `0..3 mod 4`.
pub fn rsigns(theta: f64) -> [f64; 4] {
    let (c, s) = (theta.cos(), theta.sin());
    [2.0 * c, -2.0 * s, -2.0 * c, 2.0 * s]
}

/// `−tr(J^A R_θ)` for `A = 0..3`, from the matrices.
pub fn rsigns_raw(theta: f64) -> [f64; 4] {
    let r = rotation_matrix_f64(theta);
    let j = symplectic_j::<f64>(1);
    let mut out = [0.0; 4];
    let mut p = Matrix::identity(2);
    for slot in &mut out {
        *slot = -p.mul(&r).trace();
        p = p.mul(&j);
    }
    out
}

/// `Z₄(ε) = Pf K̃` for the rank-2 Kasteleyn connection times a flat twist
/// `R(θ, α, β, ε)` around the hole, with `θ` from [`solved_theta`].
pub fn z4(g: &PlanarGraph, spec: &AnnulusSpec, alpha: f64, beta: f64, eps: f64) -> Result<f64> {
    let theta = solved_theta(alpha, eps)?;
    let rho = u2_rho(theta, alpha, beta, eps);
    let conn = kasteleyn_connection::<f64>(g, 2).edgewise_product(g, &flat_annulus_connection(g, spec, &rho, 2)?)?;
    Ok(build_h(g, &conn, &unit_weights(g))?.pfaffian())
}

#[derive(Clone, Debug, PartialEq)]
pub struct CkFit {
    /// `C_0 ..= C_K`.
    pub c: Vec<f64>,
    /// `|Z₄ − Σ C_k x^k|` at the held-out sample.
    pub residual: f64,
}

/// Fits `Z₄(ε) = Σ_{k ≤ K} C_k x^k` with `x = 2 + 4 cos ε` by least squares
/// over `samples`, then measures the error at `holdout`.
pub fn extract_ck(
    g: &PlanarGraph,
    spec: &AnnulusSpec,
    degree: usize,
    samples: &[f64],
    holdout: f64,
    alpha: f64,
    beta: f64,
) -> Result<CkFit> {
    if samples.len() < degree + 1 {
        return Err(Error::DimensionMismatch(format!(
            "{} samples for degree {degree}",
            samples.len()
        )));
    }
    let xs: Vec<f64> = samples.iter().map(|e| 2.0 + 4.0 * e.cos()).collect();
    let zs: Vec<f64> = samples.iter().map(|&e| z4(g, spec, alpha, beta, e)).collect::<Result<_>>()?;
    let c = polyfit(&xs, &zs, degree)?;
    let x = 2.0 + 4.0 * holdout.cos();
    let residual = (horner(&c, x) - z4(g, spec, alpha, beta, holdout)?).abs();
    Ok(CkFit { c, residual })
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck)
}

/// Least-squares polynomial fit through the normal equations.
fn polyfit(xs: &[f64], ys: &[f64], degree: usize) -> Result<Vec<f64>> {
    let n = degree + 1;
    let mut a = vec![vec![0.0; n + 1]; n];
    for (&x, &y) in xs.iter().zip(ys) {
        let powers: Vec<f64> = (0..n).map(|k| x.powi(k as i32)).collect();
        for r in 0..n {
            for c in 0..n {
                a[r][c] += powers[r] * powers[c];
            }
            a[r][n] += powers[r] * y;
        }
    }
    let (mut big, mut small) = (0.0f64, f64::INFINITY);
    for col in 0..n {
        let p = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .expect("nonempty");
        a.swap(col, p);
        let piv = a[col][col];
        big = big.max(piv.abs());
        small = small.min(piv.abs());
        if piv == 0.0 {
            return Err(Error::IllConditioned(f64::INFINITY));
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col] / piv;
                for k in col..=n {
                    a[r][k] -= f * a[col][k];
                }
            }
        }
    }
    let cond = big / small;
    if cond > 1e13 {
        return Err(Error::IllConditioned(cond));
    }
    Ok((0..n).map(|i| a[i][n] / a[i][i]).collect())
}

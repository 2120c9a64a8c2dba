use super::hmatrix::{build_h, web_weight};
use crate::algebra::{Matrix, Rational, Scalar};
use crate::connection::{face_spin_connection, flat_annulus_connection, kasteleyn_connection, AnnulusSpec, Connection};
use crate::error::{Error, Result};
use crate::graph::{Enclosure, PlanarGraph};
use crate::multiweb::{decompose_2multiweb, enumerate_dimers, superposition, Multiweb};

#[derive(Clone, Debug, PartialEq)]
pub struct SpinCorrelation {
    /// `Pf K̃(Φ_K ⊗ σ) / Pf K̃(Φ_K)`.
    pub value: Rational,
    /// Whether both faces have length `2 mod 4`.
    pub lengths_ok: bool,
}

fn pfaffian_ratio(g: &PlanarGraph, twist: &Connection<Rational>, w: &[Rational]) -> Result<Rational> {
    let k = kasteleyn_connection::<Rational>(g, 1);
    let z = build_h(g, &k, w)?.pfaffian();
    let zt = build_h(g, &k.edgewise_product(g, twist)?, w)?.pfaffian();
    zt.div_exact(&z).ok_or(Error::DivByZero)
}

/// `E[τ(f₁)τ(f₂)]` in the double-dimer model from a ratio of Pfaffians.
pub fn spin_correlation(g: &PlanarGraph, f1: usize, f2: usize, w: &[Rational]) -> Result<SpinCorrelation> {
    for f in [f1, f2] {
        if f >= g.num_faces() {
            return Err(Error::UnknownFace(f));
        }
    }
    let lengths_ok = [f1, f2].iter().all(|&f| g.face_len(f) % 4 == 2);
    let spin = face_spin_connection::<Rational>(g, &[f1, f2], 1)?;
    Ok(SpinCorrelation {
        value: pfaffian_ratio(g, &spin, w)?,
        lengths_ok,
    })
}

/// `E[(−1)^k]` over ordered pairs of dimer covers, where `k` counts the loops
/// of the superposition for which `separates` holds.
pub fn double_dimer_expectation(
    g: &PlanarGraph,
    w: &[Rational],
    separates: impl Fn(&Enclosure) -> bool,
) -> Result<Rational> {
    let covers = enumerate_dimers(g);
    let weights: Vec<Rational> = covers
        .iter()
        .map(|d| web_weight(&Multiweb::new_unchecked(1, d.clone()), w))
        .collect();
    let mut num = Rational::zero();
    let mut den = Rational::zero();
    for (d1, w1) in covers.iter().zip(&weights) {
        for (d2, w2) in covers.iter().zip(&weights) {
            let web = superposition(g, d1, d2)?;
            let mut sign = 1;
            for gamma in decompose_2multiweb(g, &web)?.loops {
                if separates(&Enclosure::of(g, &gamma)?) {
                    sign = -sign;
                }
            }
            let x = w1.mul(w2);
            den.add_assign(&x);
            num.add_assign(&if sign > 0 { x } else { x.neg() });
        }
    }
    num.div_exact(&den).ok_or(Error::DivByZero)
}

/// Spin correlation by summing over all pairs of dimer covers.
pub fn spin_correlation_enumerated(g: &PlanarGraph, f1: usize, f2: usize, w: &[Rational]) -> Result<Rational> {
    double_dimer_expectation(g, w, |enc| enc.inside[f1] != enc.inside[f2])
}

/// `E[(−1)^{#loops around the hole}]` from Kasteleyn times a flat `−I` twist.
pub fn annulus_parity(g: &PlanarGraph, spec: &AnnulusSpec, w: &[Rational]) -> Result<Rational> {
    let minus = Matrix::<Rational>::identity(2).neg();
    let twist = flat_annulus_connection(g, spec, &minus, 1)?;
    pfaffian_ratio(g, &twist, w)
}

pub fn annulus_parity_enumerated(g: &PlanarGraph, spec: &AnnulusSpec, w: &[Rational]) -> Result<Rational> {
    double_dimer_expectation(g, w, |enc| enc.inside[spec.inner_face])
}

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use super::{Rational, Scalar};
use crate::error::{Error, Result};

/// A monomial: variables with positive exponents, sorted by variable name.
///
/// Ordered graded-lexicographically with `a > b > c > ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Arc<str>, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(Arc::from(name), 1)])
    }

    /// Builds a monomial from `(name, exponent)` pairs; repeated names add up.
    pub fn from_powers<'a, I: IntoIterator<Item = (&'a str, u32)>>(powers: I) -> Self {
        let mut map: BTreeMap<&str, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_default() += e;
        }
        Monomial(
            map.into_iter()
                .filter(|&(_, e)| e > 0)
                .map(|(v, e)| (Arc::from(v), e))
                .collect(),
        )
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.0
            .iter()
            .find(|(v, _)| &**v == name)
            .map_or(0, |&(_, e)| e)
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(v, _)| &**v)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < *v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == *v {
                let d = other.0[j].1;
                if d > *e {
                    return None;
                }
                if *e > d {
                    out.push((v.clone(), e - d));
                }
                j += 1;
            } else {
                out.push((v.clone(), *e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                // `a` carries an earlier variable that `b` lacks.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match a[i].1.cmp(&b[j].1) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    ord => return ord,
                },
            }
        }
        (a.len() - i).cmp(&(b.len() - j))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses `a^2*b*c`; `1` is the empty monomial.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Monomial::one());
        }
        let mut powers = Vec::new();
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            if !is_identifier(name) {
                return Err(Error::Parse(format!("bad variable name {name:?}")));
            }
            powers.push((name, exp));
        }
        Ok(Monomial::from_powers(powers))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn var(name: &str) -> Self {
        Poly::term(Rational::one(), Monomial::var(name))
    }

    pub fn constant(c: Rational) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> BTreeSet<&str> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Multiplies by -1 if needed so the leading coefficient is positive.
    pub fn normalize_sign(&self) -> (Poly, i32) {
        match self.leading() {
            Some((_, c)) if c.is_negative() => (Scalar::neg(self), -1),
            _ => (self.clone(), 1),
        }
    }

    /// Substitutes rational values for every variable.
    pub fn eval(&self, value: &dyn Fn(&str) -> Option<Rational>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in &m.0 {
                let x = value(v).ok_or_else(|| Error::UnknownVariable(v.to_string()))?;
                t = &t * &Scalar::pow(&x, *e);
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let v = slot.get() + &c;
                if v.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = v;
                }
            }
        }
    }

    fn scale_term(&self, c: &Rational, m: &Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Coefficient of a monomial such as `a^2*b*c*d^2*e*f`.
///
/// Variables that never occur in `p` are rejected rather than read as zero.
pub fn poly_coefficient(p: &Poly, monomial: &str) -> Result<Rational> {
    let m: Monomial = monomial.parse()?;
    let known = p.variables();
    if let Some(v) = m.vars().find(|v| !known.contains(v)) {
        return Err(Error::UnknownVariable(v.to_string()));
    }
    Ok(p.coefficient(&m))
}

impl Scalar for Poly {
    const EXACT: bool = true;
    const FIELD: bool = false;

    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(Rational::one())
    }
    fn from_i64(v: i64) -> Self {
        Poly::constant(Rational::from_integer(v))
    }
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(r.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
    fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Multivariate long division by leading terms; `None` unless exact.
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lm, lc) = divisor.leading()?;
        if let Some(c) = divisor.as_constant() {
            let inv = c.recip()?;
            return Some(self.scale_term(&inv, &Monomial::one()));
        }
        let lc_inv = lc.recip()?;
        let mut rem = self.clone();
        let mut quot = Poly::default();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(lm)?;
            let qc = rc * &lc_inv;
            rem = Scalar::sub(&rem, &divisor.scale_term(&qc, &qm));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    fn pivot_score(&self) -> f64 {
        if self.terms.is_empty() {
            f64::NEG_INFINITY
        } else {
            -(self.terms.len() as f64)
        }
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                Scalar::$method(self, rhs)
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                Scalar::$method(&self, &rhs)
            }
        }
    };
}

poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Scalar::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Poly {
        Poly::var(s)
    }

    #[test]
    fn canonical_printing_is_graded_lex() {
        let p = &(&v("a") * &v("d")) + &(&v("b") * &v("e"));
        let sq = &p * &p;
        assert_eq!(sq.to_string(), "a^2*d^2 + 2*a*b*d*e + b^2*e^2");
        let q = &v("x") - &Poly::constant(Rational::new(3, 2));
        assert_eq!(q.to_string(), "x - 3/2");
        assert_eq!(Scalar::neg(&v("y")).to_string(), "-y");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = &v("a") + &v("b");
        let b = &(&v("a") * &v("c")) - &Poly::from_i64(2);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        assert_eq!(v("a").div_exact(&v("b")), None);
        assert_eq!(
            (&v("a") + &Poly::one()).div_exact(&v("a")),
            None,
            "remainder must make division fail"
        );
    }

    #[test]
    fn coefficient_lookup() {
        let a = v("a");
        assert_eq!(poly_coefficient(&a, "a").unwrap(), Rational::one());
        let x2y2 = &(&v("x") * &v("x")) + &(&v("y") * &v("y"));
        assert_eq!(poly_coefficient(&x2y2, "x*y").unwrap(), Rational::zero());
        assert!(matches!(
            poly_coefficient(&x2y2, "z"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn monomial_parse_round_trip() {
        let m: Monomial = "a^2*b*c*d^2*e*f".parse().unwrap();
        assert_eq!(m.degree(), 8);
        assert_eq!(m.to_string(), "a^2*b*c*d^2*e*f");
        let n: Monomial = "b*a*a".parse().unwrap();
        assert_eq!(n.to_string(), "a^2*b");
    }
}

use std::cmp::Ordering;

use crate::algebra::Rational;

/// A point or direction with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(Rational::from_integer(x), Rational::from_integer(y))
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn neg(&self) -> Point {
        Point::new(-&self.x, -&self.y)
    }
}

/// Sign of the cross product `a × b`.
pub fn cross_sign(a: &Point, b: &Point) -> Ordering {
    (&a.x * &b.y).cmp(&(&a.y * &b.x))
}

/// Sign of `(b - a) × (c - a)`: positive when `a, b, c` turn left.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    cross_sign(&b.sub(a), &c.sub(a))
}

fn is_same_dir(a: &Point, b: &Point) -> bool {
    cross_sign(a, b) == Ordering::Equal && (&a.x * &b.x + &a.y * &b.y).is_positive()
}

/// Compares `a` and `b` by counterclockwise angle from the ray `r`, with
/// angles taken in `(0, 2π]` so that `r` itself is the largest.
pub fn cmp_ccw_from(r: &Point, a: &Point, b: &Point) -> Ordering {
    let first_half = |x: &Point| match cross_sign(r, x) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => !is_same_dir(r, x),
    };
    match (first_half(a), first_half(b)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        // Within a half-plane `b` comes later iff it is counterclockwise of `a`.
        _ => cross_sign(b, a),
    }
}

pub fn west() -> Point {
    Point::from_ints(-1, 0)
}

/// Compares two nonzero directions by counterclockwise angle from west,
/// where west itself is the largest angle.
pub fn cmp_from_west(a: &Point, b: &Point) -> Ordering {
    cmp_ccw_from(&west(), a, b)
}

/// Whether `w` lies strictly inside the counterclockwise sector from `from` to `to`.
pub fn strictly_in_sector(w: &Point, from: &Point, to: &Point) -> bool {
    !is_same_dir(w, from) && cmp_ccw_from(from, w, to) == Ordering::Less
}

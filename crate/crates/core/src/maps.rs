//! Parameter domain and the two realization maps.
//!
//! The strip parameter domain is the rectangle `[0, 2*pi) x [-delta, delta]`
//! with the seam identification `(2*pi, r) ~ (0, -r)`. Two maps into R^3 are
//! provided: the common surface-of-revolution-style realization and the
//! simple one whose moving segment stays parallel to the plane y = z.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Strip half-width. Finite and positive, or the distinguished infinite
/// strip (the union of all finite-width strips).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum HalfWidth {
    Finite(f64),
    Infinite,
}

impl HalfWidth {
    /// Validated finite half-width.
    pub fn new(delta: f64) -> Result<Self> {
        if delta.is_finite() && delta > 0.0 {
            Ok(HalfWidth::Finite(delta))
        } else {
            Err(Error::InvalidHalfWidth(delta))
        }
    }

    /// The finite value, or an error for the infinite strip. Cross-section
    /// operations accept `Infinite`; mesh and oracle operations do not.
    pub fn finite(self) -> Result<f64> {
        match self {
            HalfWidth::Finite(d) => Ok(d),
            HalfWidth::Infinite => Err(Error::InfiniteHalfWidth),
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, HalfWidth::Infinite)
    }
}

/// Which realization map to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealizationKind {
    /// The common realization: segment revolving in a plane through the z-axis.
    Common,
    /// The simple realization: segment parallel to the plane y = z.
    Simple,
}

impl RealizationKind {
    pub fn eval(self, p: ParamPoint) -> Point3 {
        match self {
            RealizationKind::Common => eval_common(p),
            RealizationKind::Simple => eval_simple(p),
        }
    }
}

/// A point `(t, r)` of the parameter rectangle. Canonical points have
/// `t` in `[0, 2*pi)`; [`canonicalize`] reduces an arbitrary angle modulo
/// the seam identification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPoint {
    pub t: f64,
    pub r: f64,
}

impl ParamPoint {
    pub fn new(t: f64, r: f64) -> Self {
        ParamPoint { t, r }
    }

    pub fn is_canonical(self) -> bool {
        (0.0..TAU).contains(&self.t)
    }

    /// Membership in the width-`delta` strip (after canonicalization).
    pub fn in_strip(self, delta: HalfWidth) -> bool {
        match delta {
            HalfWidth::Finite(d) => self.r.abs() <= d,
            HalfWidth::Infinite => true,
        }
    }
}

/// A point of R^3 produced by a realization map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn distance(self, other: Point3) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    pub fn midpoint(self, other: Point3) -> Point3 {
        Point3 {
            x: 0.5 * (self.x + other.x),
            y: 0.5 * (self.y + other.y),
            z: 0.5 * (self.z + other.z),
        }
    }

    /// Distance to the vertical line through (-1, 0, 0), measured in the xy-plane.
    pub fn axis_distance(self) -> f64 {
        let dx = self.x + 1.0;
        (dx * dx + self.y * self.y).sqrt()
    }
}

/// Reduce `(t, r)` modulo the identification `(t, r) ~ (t - 2*pi, -r)` so
/// that the angle lands in `[0, 2*pi)`. The sign of `r` flips once per
/// 2*pi shift.
pub fn canonicalize(t: f64, r: f64) -> Result<ParamPoint> {
    if !t.is_finite() {
        return Err(Error::NonFinite("t"));
    }
    if !r.is_finite() {
        return Err(Error::NonFinite("r"));
    }
    let k = (t / TAU).floor();
    let mut tc = t - k * TAU;
    // Parity of the shift count decides the sign of r. k is an integral f64,
    // so the remainder mod 2 is exact.
    let mut flip = (k.abs() % 2.0) == 1.0;
    // Rounding can leave tc just outside the half-open interval, and a
    // fixup can itself round onto the seam (t just below a multiple of
    // 2*pi absorbs into TAU); keep wrapping until it lands inside.
    let mut guard = 0;
    while !(0.0..TAU).contains(&tc) && guard < 8 {
        if tc < 0.0 {
            tc += TAU;
        } else {
            tc -= TAU;
        }
        flip = !flip;
        guard += 1;
    }
    if !(0.0..TAU).contains(&tc) {
        tc = 0.0;
    }
    Ok(ParamPoint {
        t: tc,
        r: if flip { -r } else { r },
    })
}

/// The simple realization `(cos t + r cos(t/2), sin t + r sin(t/2), r sin(t/2))`.
pub fn eval_simple(p: ParamPoint) -> Point3 {
    let half = 0.5 * p.t;
    let zs = p.r * half.sin();
    Point3 {
        x: p.t.cos() + p.r * half.cos(),
        y: p.t.sin() + zs,
        z: zs,
    }
}

/// The common realization `((1 + r cos(t/2)) cos t, (1 + r cos(t/2)) sin t, r sin(t/2))`.
pub fn eval_common(p: ParamPoint) -> Point3 {
    let half = 0.5 * p.t;
    let w = 1.0 + p.r * half.cos();
    Point3 {
        x: w * p.t.cos(),
        y: w * p.t.sin(),
        z: p.r * half.sin(),
    }
}

/// Distance in the parameter rectangle, aware of the seam identification:
/// the minimum Euclidean distance from `p1` to the three representatives
/// `(t2, r2)`, `(t2 + 2*pi, -r2)`, `(t2 - 2*pi, -r2)` of `p2`. Zero exactly
/// when the two points are identified.
pub fn param_distance(p1: ParamPoint, p2: ParamPoint) -> f64 {
    // Differences first, so the result is exactly symmetric in its
    // arguments (rounding commutes with negation).
    let dt = p1.t - p2.t;
    let dr_same = p1.r - p2.r;
    let dr_flip = p1.r + p2.r;
    let norm = |a: f64, b: f64| (a * a + b * b).sqrt();
    norm(dt, dr_same)
        .min(norm(dt - TAU, dr_flip))
        .min(norm(dt + TAU, dr_flip))
}

/// Endpoints of the moving segment at angle `t`: `(eval(t, -delta), eval(t, +delta))`.
pub fn moving_segment(t: f64, delta: HalfWidth, kind: RealizationKind) -> Result<(Point3, Point3)> {
    if !t.is_finite() {
        return Err(Error::NonFinite("t"));
    }
    let d = delta.finite()?;
    Ok((
        kind.eval(ParamPoint::new(t, -d)),
        kind.eval(ParamPoint::new(t, d)),
    ))
}

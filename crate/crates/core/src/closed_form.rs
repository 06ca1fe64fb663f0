//! Closed-form geometry of the two realizations: self-intersection and axis
//! sets, the glued-pair family, the rational function whose graph is the
//! simple realization, graph inversion, cross-section solvers for both maps,
//! the cubic residual of the common map, and the embedding thresholds.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2, TAU};

use crate::error::{Error, Result};
use crate::maps::{canonicalize, eval_simple, HalfWidth, ParamPoint, Point3, RealizationKind};

/// `s_delta = 2c sqrt(1 - c^2)` with `c = min(1, max(delta, sqrt(2))/2)`.
///
/// Lower endpoint of the self-intersection |z|-range of the simple map.
/// Equals 1 exactly when `delta <= sqrt(2)` (no self-intersections) and 0
/// when `delta >= 2`.
pub fn s_delta(delta: HalfWidth) -> Result<f64> {
    let d = delta.finite()?;
    let c = 1f64.min(d.max(SQRT_2) / 2.0);
    Ok(2.0 * c * (1.0 - c * c).sqrt())
}

/// `sigma_delta = 2b sqrt(1 - b^2)` with `b = min(delta, sqrt(2))/2`.
///
/// Half-height of the segment in which the simple realization meets the
/// vertical line through (-1, 0, 0). Equals 1 exactly when `delta >= sqrt(2)`.
pub fn sigma_delta(delta: HalfWidth) -> Result<f64> {
    let d = delta.finite()?;
    let b = d.min(SQRT_2) / 2.0;
    Ok(2.0 * b * (1.0 - b * b).sqrt())
}

/// The self-intersection set of the simple map:
/// `{(-1, 0, s) : s_min <= |s| < 1}`, half-open at `|s| = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelfIntersectionSet {
    /// The value `s_delta`; the set is empty iff this equals 1.
    pub s_min: f64,
    pub empty: bool,
}

impl SelfIntersectionSet {
    /// Whether `(-1, 0, z)` belongs to the set.
    pub fn contains_z(&self, z: f64) -> bool {
        !self.empty && self.s_min <= z.abs() && z.abs() < 1.0
    }
}

/// Descriptor of the self-intersection set for a finite half-width.
pub fn self_intersection_set(delta: HalfWidth) -> Result<SelfIntersectionSet> {
    let d = delta.finite()?;
    let s_min = s_delta(delta)?;
    let empty = d <= SQRT_2;
    debug_assert_eq!(empty, s_min == 1.0);
    Ok(SelfIntersectionSet { s_min, empty })
}

/// The closed segment `{(-1, 0, z) : |z| <= sigma}` in which the simple
/// realization meets the vertical line through (-1, 0, 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSegment {
    pub sigma: f64,
}

impl AxisSegment {
    pub fn contains_z(&self, z: f64) -> bool {
        z.abs() <= self.sigma
    }
}

pub fn axis_intersection(delta: HalfWidth) -> Result<AxisSegment> {
    Ok(AxisSegment {
        sigma: sigma_delta(delta)?,
    })
}

/// A pair of distinct parameter points glued by the simple map, together
/// with the branch index producing it and the common image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GluedPair {
    pub p1: ParamPoint,
    pub p2: ParamPoint,
    pub k: u8,
    pub image: Point3,
}

/// The glued partner of `t1` on branch `k`, if one exists inside the
/// width-`delta` strip.
///
/// The family is `t2 = (2k+1) pi - t1`, `r1 = -2 cos(t1/2)`,
/// `r2 = (-1)^(k+1) 2 sin(t1/2)`, admissible when
/// `s_delta <= |sin t1| < 1` and both offsets fit in `[-delta, delta]`.
/// `t2` is reduced by the seam identification when it lands at or beyond
/// 2*pi, which flips the sign of `r2` consistently.
pub fn glued_partner(t1: f64, k: u8, delta: HalfWidth) -> Result<Option<GluedPair>> {
    if !t1.is_finite() || !(0.0..TAU).contains(&t1) {
        return Err(Error::AngleOutOfRange(t1));
    }
    if k > 1 {
        return Err(Error::InvalidBranch(k));
    }
    let d = delta.finite()?;
    let s_min = s_delta(delta)?;

    let sin_t1 = t1.sin();
    if !(s_min <= sin_t1.abs() && sin_t1.abs() < 1.0) {
        return Ok(None);
    }
    let half = 0.5 * t1;
    let r1 = -2.0 * half.cos();
    let r2 = if k == 0 { -1.0 } else { 1.0 } * 2.0 * half.sin();
    let t2_raw = (2.0 * k as f64 + 1.0) * PI - t1;
    let p2 = canonicalize(t2_raw, r2).expect("finite by construction");
    if r1.abs() > d || p2.r.abs() > d {
        return Ok(None);
    }
    let p1 = ParamPoint::new(t1, r1);

    let image = Point3::new(-1.0, 0.0, -sin_t1);
    // Both parameter points must land on the same image; guards the seam
    // reduction of t2.
    debug_assert!(eval_simple(p1).distance(image) <= 1e-12);
    debug_assert!(eval_simple(p2).distance(image) <= 1e-12);

    Ok(Some(GluedPair { p1, p2, k, image }))
}

/// The rational function whose graph (over [`in_region`]) is the simple
/// realization minus the axis line.
///
/// Computed in the factored form `y (x^2 + y^2 - 1) / ((x+1)^2 + y^2)`,
/// which avoids the cancellation the subtraction form suffers near the unit
/// circle.
pub fn f(x: f64, y: f64) -> Result<f64> {
    let denom = singular_guard(x, y)?;
    Ok(y * (x * x + y * y - 1.0) / denom)
}

/// `g(x, y) = (x^2 + y^2 - 1)^2 / ((x+1)^2 + y^2)`, the squared offset
/// whose sublevel set `g <= delta^2` is the footprint of the strip.
pub fn g(x: f64, y: f64) -> Result<f64> {
    let denom = singular_guard(x, y)?;
    let num = x * x + y * y - 1.0;
    Ok(num * num / denom)
}

fn singular_guard(x: f64, y: f64) -> Result<f64> {
    if x == -1.0 && y == 0.0 {
        return Err(Error::SingularPoint);
    }
    let dx = x + 1.0;
    Ok(dx * dx + y * y)
}

/// Membership of `(x, y)` in the footprint `S_delta = {g <= delta^2}`
/// (minus the singular point). The infinite strip covers the whole plane
/// except (-1, 0).
pub fn in_region(x: f64, y: f64, delta: HalfWidth) -> bool {
    match g(x, y) {
        Err(_) => false,
        Ok(gv) => match delta {
            HalfWidth::Infinite => true,
            HalfWidth::Finite(d) => gv <= d * d,
        },
    }
}

/// Invert the graph: the parameter point `(t, r)` with
/// `eval_simple(t, r) = (x, y, f(x, y))`.
///
/// For `y = 0` this is `(0, x - 1)`; otherwise `t = 2 arccot((x+1)/y)` with
/// arccot valued in `(0, pi)`, and `r = (y - sin t)/sin(t/2)`.
pub fn invert_graph(x: f64, y: f64) -> Result<ParamPoint> {
    singular_guard(x, y)?;
    if y == 0.0 {
        return Ok(ParamPoint::new(0.0, x - 1.0));
    }
    let t = 2.0 * arccot((x + 1.0) / y);
    let r = (y - t.sin()) / (0.5 * t).sin();
    Ok(ParamPoint::new(t, r))
}

/// arccot with values in (0, pi).
fn arccot(q: f64) -> f64 {
    FRAC_PI_2 - q.atan()
}

/// The set of z such that `(x, y, z)` lies on the realized surface.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossSection {
    Empty,
    /// Strictly increasing list; exact duplicates merged.
    Finite(Vec<f64>),
    Interval {
        lo: f64,
        hi: f64,
        closed: bool,
    },
    AllReals,
}

impl CrossSection {
    /// Number of z values for finite sections; `None` for intervals and R.
    pub fn cardinality(&self) -> Option<usize> {
        match self {
            CrossSection::Empty => Some(0),
            CrossSection::Finite(zs) => Some(zs.len()),
            _ => None,
        }
    }
}

/// Vertical cross-section of the simple realization of half-width `delta`
/// over `(x, y)`.
///
/// On the axis point (-1, 0) this is the closed interval
/// `[-sigma_delta, sigma_delta]`; elsewhere it is the single graph value
/// `{f(x, y)}` inside the footprint and empty outside.
pub fn cross_section_simple(x: f64, y: f64, delta: HalfWidth) -> CrossSection {
    if x == -1.0 && y == 0.0 {
        let sigma = match delta {
            HalfWidth::Infinite => 1.0,
            HalfWidth::Finite(_) => sigma_delta(delta).expect("finite"),
        };
        return CrossSection::Interval {
            lo: -sigma,
            hi: sigma,
            closed: true,
        };
    }
    if in_region(x, y, delta) {
        CrossSection::Finite(vec![f(x, y).expect("not singular")])
    } else {
        CrossSection::Empty
    }
}

/// Signed polar coordinates `(rho, theta)` with `theta` in `[0, pi)`,
/// unique for `(x, y) != (0, 0)`. The half-open angle range keeps
/// `cos(theta/2)` away from zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarCoords {
    pub rho: f64,
    pub theta: f64,
}

impl PolarCoords {
    pub fn from_xy(x: f64, y: f64) -> Option<PolarCoords> {
        if x == 0.0 && y == 0.0 {
            return None;
        }
        if y == 0.0 {
            return Some(PolarCoords { rho: x, theta: 0.0 });
        }
        let radius = x.hypot(y);
        let phi = y.atan2(x);
        if phi >= 0.0 {
            Some(PolarCoords {
                rho: radius,
                theta: phi,
            })
        } else {
            Some(PolarCoords {
                rho: -radius,
                theta: phi + PI,
            })
        }
    }
}

/// Vertical cross-section of the common realization over the infinite strip.
///
/// The generic point has exactly two values
/// `z1 = (rho - 1) tan(theta/2)` and `z2 = (rho + 1) cot(theta/2)`; the
/// points (0, 0) and (-1, 0) see the whole line, and the rest of the x-axis
/// sees only z = 0. The half-angle factors are computed in rational form
/// (`tan(theta/2) = (rho - x)/y`), which keeps exact inputs exact.
pub fn cross_section_common(x: f64, y: f64) -> CrossSection {
    if y == 0.0 {
        if x == 0.0 || x == -1.0 {
            return CrossSection::AllReals;
        }
        return CrossSection::Finite(vec![0.0]);
    }
    if x == -1.0 {
        // The two branches meet at (rho^2 - 1)/y, and rho^2 = 1 + y^2
        // exactly, so the merged value is y itself.
        return CrossSection::Finite(vec![y]);
    }
    let polar = PolarCoords::from_xy(x, y).expect("y != 0");
    let rho = polar.rho;
    let z1 = (rho - 1.0) * ((rho - x) / y);
    let z2 = (rho + 1.0) * ((rho + x) / y);
    if z1 == z2 {
        CrossSection::Finite(vec![z1])
    } else if z1 < z2 {
        CrossSection::Finite(vec![z1, z2])
    } else {
        CrossSection::Finite(vec![z2, z1])
    }
}

/// Left-hand side of the cubic `-y + x^2 y + y^3 - 2xz - 2x^2 z - 2y^2 z + y z^2`,
/// which vanishes on the entire common realization.
pub fn cubic_residual(p: Point3) -> f64 {
    let Point3 { x, y, z } = p;
    -y + x * x * y + y * y * y - 2.0 * x * z - 2.0 * x * x * z - 2.0 * y * y * z + y * z * z
}

/// `inf over theta in (0, pi) of max(((rho-1)/cos(theta/2))^2, ((rho+1)/sin(theta/2))^2)`,
/// in closed form: `2 + 2 rho^2`.
///
/// The infimum of the larger of the two squared offsets needed to make the
/// common map hit a double point above radius |rho|; always above 2, so the
/// doubled region has positive measure only for wide strips.
pub fn min_max_r_squared(rho: f64) -> f64 {
    2.0 + 2.0 * rho * rho
}

/// Whether the realization of half-width `delta` is an embedding (the map
/// is one-to-one on the strip).
///
/// Simple map: `delta <= sqrt(2)` (boundary included). Common map:
/// `delta < 2` (boundary excluded). Exact comparisons, no epsilon: `delta`
/// is taken at face value, and `f64::consts::SQRT_2` is the value the CLI
/// literal `sqrt2` supplies.
pub fn is_embedding(delta: HalfWidth, kind: RealizationKind) -> Result<bool> {
    let d = delta.finite()?;
    Ok(match kind {
        RealizationKind::Simple => d <= SQRT_2,
        RealizationKind::Common => d < 2.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    fn width(d: f64) -> HalfWidth {
        HalfWidth::new(d).unwrap()
    }

    #[test]
    fn s_delta_examples() {
        assert_eq!(s_delta(width(1.0)).unwrap(), 1.0);
        assert_eq!(s_delta(width(2.0)).unwrap(), 0.0);
        // Exact closed form at delta = 1.97 (c = 0.985); approximately 0.34.
        let c: f64 = 0.985;
        let expected = 2.0 * c * (1.0 - c * c).sqrt();
        let s = s_delta(width(1.97)).unwrap();
        assert!((s - expected).abs() < 1e-15);
        assert!((s - 0.34).abs() < 2e-3, "s(1.97) = {s}");
    }

    #[test]
    fn sigma_delta_examples() {
        assert_eq!(sigma_delta(width(SQRT_2)).unwrap(), 1.0);
        assert!((sigma_delta(width(1.0)).unwrap() - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert_eq!(sigma_delta(width(3.0)).unwrap(), 1.0);
        // sigma -> 0 as delta -> 0.
        assert!(sigma_delta(width(1e-9)).unwrap() < 2e-9);
    }

    #[test]
    fn self_intersection_set_examples() {
        let set = self_intersection_set(width(SQRT_2)).unwrap();
        assert!(set.empty);
        assert!(!set.contains_z(0.99));

        let set = self_intersection_set(width(2.0)).unwrap();
        assert_eq!(set.s_min, 0.0);
        assert!(!set.empty);
        assert!(set.contains_z(0.0));
        assert!(set.contains_z(-0.999));
        assert!(!set.contains_z(1.0)); // half-open at |s| = 1

        let set = self_intersection_set(width(1.97)).unwrap();
        assert!((set.s_min - 0.34).abs() < 2e-3);
    }

    #[test]
    fn axis_intersection_examples() {
        assert_eq!(axis_intersection(width(1.97)).unwrap().sigma, 1.0);
        let seg = axis_intersection(width(1.0)).unwrap();
        assert!((seg.sigma - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert!(seg.contains_z(seg.sigma));
        assert!(!seg.contains_z(seg.sigma + 1e-12));
        assert!(axis_intersection(width(1e-12)).unwrap().sigma < 1e-11);
    }

    #[test]
    fn glued_partner_example_pair() {
        let pair = glued_partner(FRAC_PI_3, 0, width(2.0)).unwrap().unwrap();
        let s3 = 3f64.sqrt();
        assert!((pair.p1.t - FRAC_PI_3).abs() < 1e-15);
        assert!((pair.p1.r + s3).abs() < 1e-15);
        assert!((pair.p2.t - 2.0 * FRAC_PI_3).abs() < 1e-15);
        assert!((pair.p2.r + 1.0).abs() < 1e-15);
        assert!(pair.image.distance(Point3::new(-1.0, 0.0, -s3 / 2.0)) < 1e-15);
        assert!(eval_simple(pair.p1).distance(eval_simple(pair.p2)) <= 1e-12);
    }

    #[test]
    fn glued_partner_rejections() {
        // |sin t1| = 1 violates the strict bound.
        assert_eq!(glued_partner(FRAC_PI_2, 0, width(3.0)).unwrap(), None);
        assert_eq!(glued_partner(FRAC_PI_2, 1, width(9.0)).unwrap(), None);
        // No glued pairs at all for delta <= sqrt(2).
        assert_eq!(glued_partner(FRAC_PI_3, 0, width(1.0)).unwrap(), None);
        // Domain errors.
        assert!(matches!(
            glued_partner(-0.1, 0, width(2.0)),
            Err(Error::AngleOutOfRange(_))
        ));
        assert!(matches!(
            glued_partner(TAU, 0, width(2.0)),
            Err(Error::AngleOutOfRange(_))
        ));
        assert_eq!(
            glued_partner(1.0, 2, width(2.0)),
            Err(Error::InvalidBranch(2))
        );
    }

    #[test]
    fn glued_partner_k1_reduces_into_range() {
        // For t1 < pi and k = 1, t2 = 3 pi - t1 >= 2 pi reduces through the
        // seam; the reduced pair must coincide with the k = 0 pair.
        let t1 = 0.4;
        let pair0 = glued_partner(t1, 0, width(2.1)).unwrap().unwrap();
        let pair1 = glued_partner(t1, 1, width(2.1)).unwrap().unwrap();
        assert!((pair0.p2.t - pair1.p2.t).abs() < 1e-12);
        assert!((pair0.p2.r - pair1.p2.r).abs() < 1e-12);
    }

    #[test]
    fn f_examples() {
        for x in [-3.0, 0.0, 2.5] {
            assert_eq!(f(x, 0.0).unwrap(), 0.0);
        }
        for y in [-2.0, 0.5] {
            assert!((f(-1.0, y).unwrap() - y).abs() < 1e-15);
        }
        assert_eq!(f(0.0, 1.0).unwrap(), 0.0); // unit circle
        assert_eq!(f(-1.0, 0.0), Err(Error::SingularPoint));
    }

    #[test]
    fn g_examples() {
        for x in [-0.5, 0.0, 1.0, 4.0] {
            let expected = (x - 1.0) * (x - 1.0);
            assert!((g(x, 0.0).unwrap() - expected).abs() < 1e-12 * (1.0 + expected));
        }
        assert_eq!(g(0.0, 1.0).unwrap(), 0.0);
        assert_eq!(g(1.0, 0.0).unwrap(), 0.0);
        assert_eq!(g(-1.0, 0.0), Err(Error::SingularPoint));
    }

    #[test]
    fn in_region_examples() {
        // Boundary point (1 + delta, 0) has g = delta^2 exactly.
        for d in [0.5, 1.0, 2.0] {
            assert!(in_region(1.0 + d, 0.0, width(d)));
        }
        assert!(!in_region(-1.0, 0.0, width(5.0)));
        assert!(!in_region(-1.0, 0.0, HalfWidth::Infinite));
        assert!(in_region(0.5, 0.0, width(0.5)));
        assert!(!in_region(10.0, 0.0, width(1.0)));
        assert!(in_region(10.0, 0.0, HalfWidth::Infinite));
    }

    #[test]
    fn invert_graph_examples() {
        let p = invert_graph(0.0, 1.0).unwrap();
        assert!((p.t - FRAC_PI_2).abs() < 1e-15);
        assert!(p.r.abs() < 1e-15);

        for c in [-0.7, 0.0, 1.3] {
            let p = invert_graph(1.0 + c, 0.0).unwrap();
            assert_eq!(p.t, 0.0);
            assert!((p.r - c).abs() < 1e-15);
        }

        let p = invert_graph(-1.0, 0.5).unwrap();
        assert!((p.t - PI).abs() < 1e-15);
        assert!((p.r - 0.5).abs() < 1e-15);

        assert_eq!(invert_graph(-1.0, 0.0), Err(Error::SingularPoint));
    }

    #[test]
    fn invert_graph_round_trip() {
        for &(x, y) in &[
            (0.3, 0.9),
            (-1.0, 0.5),
            (1.4, -0.1),
            (0.0, -2.0),
            (1.5, 0.0),
        ] {
            let p = invert_graph(x, y).unwrap();
            let q = eval_simple(p);
            let expected = Point3::new(x, y, f(x, y).unwrap());
            assert!(
                q.distance(expected) <= 1e-9,
                "({x}, {y}): {q:?} vs {expected:?}"
            );
        }
    }

    #[test]
    fn cross_section_simple_examples() {
        assert_eq!(
            cross_section_simple(-1.0, 0.0, HalfWidth::Infinite),
            CrossSection::Interval {
                lo: -1.0,
                hi: 1.0,
                closed: true
            }
        );
        assert_eq!(
            cross_section_simple(0.0, 1.0, width(1.0)),
            CrossSection::Finite(vec![0.0])
        );
        assert_eq!(
            cross_section_simple(10.0, 0.0, width(1.0)),
            CrossSection::Empty
        );
        // Off the axis, every in-region point has exactly one value.
        assert_eq!(
            cross_section_simple(0.3, -0.4, HalfWidth::Infinite).cardinality(),
            Some(1)
        );
        let CrossSection::Interval { lo, hi, closed } = cross_section_simple(-1.0, 0.0, width(1.0))
        else {
            panic!("expected interval")
        };
        assert!(closed);
        assert!((hi - 3f64.sqrt() / 2.0).abs() < 1e-15);
        assert_eq!(lo, -hi);
    }

    #[test]
    fn polar_coords() {
        let p = PolarCoords::from_xy(0.0, 1.0).unwrap();
        assert_eq!(p.theta, FRAC_PI_2);
        assert_eq!(p.rho, 1.0);
        // Negative y flips rho, keeps theta in [0, pi).
        let p = PolarCoords::from_xy(0.0, -2.0).unwrap();
        assert_eq!(p.theta, FRAC_PI_2);
        assert_eq!(p.rho, -2.0);
        // x-axis: theta = 0, rho = x with sign.
        let p = PolarCoords::from_xy(-3.0, 0.0).unwrap();
        assert_eq!((p.rho, p.theta), (-3.0, 0.0));
        assert_eq!(PolarCoords::from_xy(0.0, 0.0), None);
        // Round trip.
        for &(x, y) in &[(1.0, 2.0), (-0.3, -0.8), (2.0, -1.0)] {
            let p = PolarCoords::from_xy(x, y).unwrap();
            assert!((p.rho * p.theta.cos() - x).abs() < 1e-14);
            assert!((p.rho * p.theta.sin() - y).abs() < 1e-14);
            assert!((0.0..PI).contains(&p.theta));
        }
    }

    #[test]
    fn cross_section_common_examples() {
        assert_eq!(cross_section_common(0.0, 0.0), CrossSection::AllReals);
        assert_eq!(cross_section_common(-1.0, 0.0), CrossSection::AllReals);
        assert_eq!(
            cross_section_common(2.0, 0.0),
            CrossSection::Finite(vec![0.0])
        );
        // (0, 1): rho = 1, theta = pi/2, z = {0, 2} exactly.
        assert_eq!(
            cross_section_common(0.0, 1.0),
            CrossSection::Finite(vec![0.0, 2.0])
        );
        // x = -1 merges the two branches.
        assert_eq!(cross_section_common(-1.0, 1.0).cardinality(), Some(1));
        // Generic points have exactly two values.
        assert_eq!(cross_section_common(0.7, -1.3).cardinality(), Some(2));
    }

    #[test]
    fn cross_section_common_sorted() {
        for &(x, y) in &[(0.5, 0.5), (-2.0, 1.0), (3.0, -0.2), (0.0, -1.0)] {
            if let CrossSection::Finite(zs) = cross_section_common(x, y) {
                for w in zs.windows(2) {
                    assert!(w[0] < w[1], "({x}, {y}): {zs:?}");
                }
            } else {
                panic!("expected finite section");
            }
        }
    }

    #[test]
    fn cubic_residual_examples() {
        assert_eq!(cubic_residual(Point3::new(-1.0, 0.0, 5.0)), 0.0);
        assert_eq!(cubic_residual(Point3::new(0.0, 1.0, 2.0)), 0.0);
        // Off-surface point has a nonzero residual.
        assert_eq!(cubic_residual(Point3::new(1.0, 1.0, 1.0)), -4.0);
    }

    #[test]
    fn min_max_examples() {
        assert_eq!(min_max_r_squared(0.0), 2.0);
        assert_eq!(min_max_r_squared(1.0), 4.0);
        assert_eq!(min_max_r_squared(2.0), 10.0);
    }

    #[test]
    fn embedding_thresholds() {
        assert!(is_embedding(width(SQRT_2), RealizationKind::Simple).unwrap());
        assert!(!is_embedding(width(SQRT_2 + 1e-12), RealizationKind::Simple).unwrap());
        assert!(!is_embedding(width(2.0), RealizationKind::Common).unwrap());
        assert!(is_embedding(width(1.99), RealizationKind::Common).unwrap());
        assert!(is_embedding(width(2.0), RealizationKind::Simple).is_ok());
        assert!(!is_embedding(width(2.0), RealizationKind::Simple).unwrap());
    }

    #[test]
    fn factored_and_subtraction_forms_agree() {
        // Both displayed forms of f are algebraically equal; check away from
        // the singular point.
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = || {
            state = state.wrapping_add(0x9E3779B97F4A7C15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
            z ^= z >> 31;
            (z >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..20_000 {
            let x = 8.0 * next() - 4.0;
            let y = 8.0 * next() - 4.0;
            if (x + 1.0).abs() + y.abs() < 1e-3 {
                continue;
            }
            let factored = f(x, y).unwrap();
            let subtraction = y - 2.0 * (x + 1.0) * y / ((x + 1.0) * (x + 1.0) + y * y);
            assert!(
                (factored - subtraction).abs() <= 1e-12,
                "({x}, {y}): {factored} vs {subtraction}"
            );
        }
    }
}

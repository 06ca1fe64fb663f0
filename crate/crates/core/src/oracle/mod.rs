//! Brute-force numerical verification engine.
//!
//! Samples the parameter rectangle densely, finds spatial near-coincidences
//! with a uniform-grid hash, and checks every closed-form prediction without
//! reusing the closed-form code paths. All sweeps are deterministic: sample
//! `i` of a seed is a pure function of `(seed, i)`, and collision output is
//! canonically sorted, so results do not depend on thread count.

mod report;
mod spatial;

pub use report::{ParamValue, VerificationReport};

use std::f64::consts::{PI, SQRT_2, TAU};

use rayon::prelude::*;

use crate::closed_form::{self, s_delta, sigma_delta};
use crate::error::{Error, Result};
use crate::maps::{eval_simple, param_distance, HalfWidth, ParamPoint, Point3, RealizationKind};
use crate::rng;
use spatial::SpatialGrid;

/// Default spatial tolerance for collision detection.
pub const EPS_SPACE: f64 = 1e-3;
/// Default parameter-separation floor; far above grid spacing, far below
/// the separation of genuine glued pairs.
pub const EPS_PARAM: f64 = 0.1;
/// Default grid used by acceptance-grade embedding sweeps.
pub const DEFAULT_GRID: usize = 1024;
/// Half-width window around each embedding threshold inside which grid
/// resolution cannot certify shallow intersections.
pub const THRESHOLD_WINDOW: f64 = 0.02;

/// A deterministic sample of the strip: every parameter node paired with
/// its image under the chosen map.
#[derive(Debug, Clone)]
pub struct SampleCloud {
    pub kind: RealizationKind,
    pub delta: f64,
    pub nt: usize,
    pub nr: usize,
    pub points: Vec<(ParamPoint, Point3)>,
}

/// Build the `nt x (nr + 1)` cloud with nodes `t_i = 2 pi i / nt`
/// (half-open, so no node is sampled twice under the seam identification)
/// and `r_j = -delta + 2 delta j / nr`.
pub fn build_cloud(
    kind: RealizationKind,
    delta: HalfWidth,
    nt: usize,
    nr: usize,
) -> Result<SampleCloud> {
    let d = delta.finite()?;
    if nt < 4 || nr < 1 {
        return Err(Error::DegenerateGrid { nt, nr });
    }
    let points: Vec<(ParamPoint, Point3)> = (0..nt)
        .into_par_iter()
        .flat_map_iter(|i| {
            let t = TAU * i as f64 / nt as f64;
            (0..=nr).map(move |j| {
                let r = -d + 2.0 * d * j as f64 / nr as f64;
                let p = ParamPoint::new(t, r);
                (p, kind.eval(p))
            })
        })
        .collect();
    Ok(SampleCloud {
        kind,
        delta: d,
        nt,
        nr,
        points,
    })
}

/// Two cloud points whose images nearly coincide while their parameters do
/// not: the discrete surrogate of a glued pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollisionPair {
    pub a: ParamPoint,
    pub b: ParamPoint,
    pub spatial_gap: f64,
    pub param_gap: f64,
    pub midpoint: Point3,
}

/// All point pairs with 3D distance <= `eps_space` and seam-aware parameter
/// distance >= `eps_param`.
///
/// Uses a uniform hash of cell size `eps_space` (each point is compared
/// only against its own and the 26 neighboring cells). Output is sorted by
/// `(a.t, a.r, b.t, b.r)`, so it is independent of iteration and thread
/// order.
pub fn detect_collisions(
    cloud: &SampleCloud,
    eps_space: f64,
    eps_param: f64,
) -> Vec<CollisionPair> {
    assert!(eps_space > 0.0 && eps_param > 0.0);
    let images: Vec<Point3> = cloud.points.iter().map(|&(_, q)| q).collect();
    let grid = SpatialGrid::build(&images, eps_space);

    let mut pairs: Vec<CollisionPair> = (0..cloud.points.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let (pa, qa) = cloud.points[i];
            let mut local = Vec::new();
            grid.for_each_neighbor(&qa, |j| {
                // Each unordered pair is visited from both sides; keep i < j.
                if (j as usize) <= i {
                    return;
                }
                let (pb, qb) = cloud.points[j as usize];
                let spatial_gap = qa.distance(qb);
                if spatial_gap > eps_space {
                    return;
                }
                let param_gap = param_distance(pa, pb);
                if param_gap < eps_param {
                    return;
                }
                local.push(CollisionPair {
                    a: pa,
                    b: pb,
                    spatial_gap,
                    param_gap,
                    midpoint: qa.midpoint(qb),
                });
            });
            local
        })
        .collect();
    sort_pairs(&mut pairs);
    pairs
}

/// Reference implementation: the same filter over all O(n^2) pairs.
/// Collision detection must match this exactly on small clouds.
pub fn detect_collisions_quadratic(
    cloud: &SampleCloud,
    eps_space: f64,
    eps_param: f64,
) -> Vec<CollisionPair> {
    let mut pairs = Vec::new();
    for i in 0..cloud.points.len() {
        let (pa, qa) = cloud.points[i];
        for j in (i + 1)..cloud.points.len() {
            let (pb, qb) = cloud.points[j];
            let spatial_gap = qa.distance(qb);
            if spatial_gap > eps_space {
                continue;
            }
            let param_gap = param_distance(pa, pb);
            if param_gap < eps_param {
                continue;
            }
            pairs.push(CollisionPair {
                a: pa,
                b: pb,
                spatial_gap,
                param_gap,
                midpoint: qa.midpoint(qb),
            });
        }
    }
    sort_pairs(&mut pairs);
    pairs
}

fn sort_pairs(pairs: &mut [CollisionPair]) {
    pairs.sort_by(|p, q| {
        (p.a.t, p.a.r, p.b.t, p.b.r)
            .partial_cmp(&(q.a.t, q.a.r, q.b.t, q.b.r))
            .expect("grid coordinates are never NaN")
    });
}

/// Aggregate |z| and axis deviation of collision midpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZProfile {
    pub z_min_abs: f64,
    pub z_max_abs: f64,
    pub max_axis_deviation: f64,
}

/// Profile of the midpoints of `pairs`; `None` for an empty list.
pub fn collision_z_profile(pairs: &[CollisionPair]) -> Option<ZProfile> {
    if pairs.is_empty() {
        return None;
    }
    let mut z_min_abs = f64::INFINITY;
    let mut z_max_abs = 0.0f64;
    let mut max_dev = 0.0f64;
    for p in pairs {
        let z = p.midpoint.z.abs();
        z_min_abs = z_min_abs.min(z);
        z_max_abs = z_max_abs.max(z);
        max_dev = max_dev.max(p.midpoint.axis_distance());
    }
    Some(ZProfile {
        z_min_abs,
        z_max_abs,
        max_axis_deviation: max_dev,
    })
}

/// Check the graph identity: `n_samples` seeded points of the strip must
/// satisfy `|f(x, y) - z| <= 1e-9 (1 + |z|)` and `g(x, y) <= delta^2 + 1e-9`
/// away from the axis line (skip band `|x+1| + |y| < 1e-6`).
pub fn verify_graph_identity(
    delta: HalfWidth,
    n_samples: u64,
    seed: u64,
) -> Result<VerificationReport> {
    let d = delta.finite()?;
    let d2 = d * d;

    // (worst relative f residual, worst g excess, skipped count)
    let (worst_f, worst_g, skipped) = (0..n_samples)
        .into_par_iter()
        .fold(
            || (0.0f64, 0.0f64, 0u64),
            |(wf, wg, sk), i| {
                let t = TAU * rng::nth_f64(seed, 2 * i);
                let r = d * (2.0 * rng::nth_f64(seed, 2 * i + 1) - 1.0);
                let q = eval_simple(ParamPoint::new(t, r));
                if (q.x + 1.0).abs() + q.y.abs() < 1e-6 {
                    return (wf, wg, sk + 1);
                }
                let fv = closed_form::f(q.x, q.y).expect("outside skip band");
                let gv = closed_form::g(q.x, q.y).expect("outside skip band");
                let f_res = (fv - q.z).abs() / (1.0 + q.z.abs());
                let g_exc = (gv - d2).max(0.0);
                (wf.max(f_res), wg.max(g_exc), sk)
            },
        )
        .reduce(
            || (0.0, 0.0, 0),
            |a, b| (a.0.max(b.0), a.1.max(b.1), a.2 + b.2),
        );

    let pass = worst_f <= 1e-9 && worst_g <= 1e-9;
    Ok(
        VerificationReport::new("graph_identity", pass, worst_f, n_samples)
            .with("delta", d)
            .with("seed", seed as f64)
            .with("worst_g_excess", worst_g)
            .with("skipped_near_axis", skipped),
    )
}

/// Check the axis segment: scanning the band `2 |cos(t/2)| <= delta` with
/// `r = -2 cos(t/2)` must attain exactly the z-range
/// `[-sigma_delta, sigma_delta]` (tolerance 1e-6), and no cloud point off
/// that construction may land on the axis line beyond
/// `|z| <= sigma_delta + 1e-3`.
pub fn verify_axis_segment(delta: HalfWidth, n_scan: usize) -> Result<VerificationReport> {
    let d = delta.finite()?;
    debug_assert!(n_scan >= 2);
    let sigma = sigma_delta(delta)?;

    // Band boundaries: |cos(t/2)| <= delta/2 for t/2 in [0, pi).
    let half_lo = (d.min(2.0) / 2.0).acos();
    let t_lo = 2.0 * half_lo;
    let t_hi = TAU - t_lo;

    let (z_min, z_max) = (0..n_scan)
        .into_par_iter()
        .fold(
            || (f64::INFINITY, f64::NEG_INFINITY),
            |(lo, hi), k| {
                let t = t_lo + (t_hi - t_lo) * k as f64 / (n_scan - 1) as f64;
                let z = -t.sin();
                (lo.min(z), hi.max(z))
            },
        )
        .reduce(
            || (f64::INFINITY, f64::NEG_INFINITY),
            |a, b| (a.0.min(b.0), a.1.max(b.1)),
        );

    let range_residual = (z_max - sigma).abs().max((z_min + sigma).abs());

    // Independent cloud scan: points that land near the axis line must stay
    // inside the predicted segment (tolerance one grid step's worth).
    let cloud = build_cloud(RealizationKind::Simple, delta, 512, 128)?;
    let mut stray = 0.0f64;
    for &(_, q) in &cloud.points {
        if q.axis_distance() <= 1e-3 {
            stray = stray.max((q.z.abs() - sigma).max(0.0));
        }
    }

    let pass = range_residual <= 1e-6 && stray <= 1e-3;
    Ok(
        VerificationReport::new("axis_segment", pass, range_residual, n_scan as u64)
            .with("delta", d)
            .with("sigma", sigma)
            .with("attained", vec![z_min, z_max])
            .with("worst_stray_excess", stray),
    )
}

/// Compare collision emptiness on a fine grid against the closed-form
/// embedding predicate for each half-width in `deltas`.
///
/// Half-widths within [`THRESHOLD_WINDOW`] of the threshold (sqrt(2) for
/// the simple map, 2 for the common one) are reported informationally but
/// excluded from the hard assertion: shallow tangential intersections are
/// not detectable at this resolution.
pub fn verify_embedding_threshold(
    kind: RealizationKind,
    deltas: &[f64],
    nt: usize,
    nr: usize,
    eps_space: f64,
    eps_param: f64,
) -> Result<VerificationReport> {
    let threshold = match kind {
        RealizationKind::Simple => SQRT_2,
        RealizationKind::Common => 2.0,
    };
    let mut counts = Vec::with_capacity(deltas.len());
    let mut expected = Vec::with_capacity(deltas.len());
    let mut excluded = Vec::with_capacity(deltas.len());
    let mut pass = true;
    for &d in deltas {
        let hw = HalfWidth::new(d)?;
        let cloud = build_cloud(kind, hw, nt, nr)?;
        let pairs = detect_collisions(&cloud, eps_space, eps_param);
        let embeds = closed_form::is_embedding(hw, kind)?;
        let near = (d - threshold).abs() < THRESHOLD_WINDOW;
        if !near && embeds != pairs.is_empty() {
            pass = false;
        }
        counts.push(pairs.len() as f64);
        expected.push(if embeds { 1.0 } else { 0.0 });
        excluded.push(if near { 1.0 } else { 0.0 });
    }
    Ok(
        VerificationReport::new("embedding_threshold", pass, 0.0, deltas.len() as u64)
            .with("kind", kind_name(kind))
            .with("nt", nt)
            .with("nr", nr)
            .with("deltas", deltas.to_vec())
            .with("collisions", counts)
            .with("embedding_expected", expected)
            .with("excluded_near_threshold", excluded),
    )
}

/// Detect collisions for a wide simple strip and compare the attained
/// midpoint |z|-profile with the closed-form self-intersection set.
///
/// The hard assertions are the directions eps-ball profiling guarantees at
/// any resolution: the profile may not dip below `s_delta` by more than
/// collision slack, may not overshoot |z| = 1 beyond the fold-tangency
/// bound, and may not stray from the axis line beyond
/// eps_space / sin(dihedral at the eps_param cutoff). How closely the
/// profile reaches down to `s_delta` depends on grid resolution and is
/// reported, not asserted.
pub fn self_intersection_profile(
    delta: HalfWidth,
    nt: usize,
    nr: usize,
    eps_space: f64,
    eps_param: f64,
) -> Result<VerificationReport> {
    let d = delta.finite()?;
    let s_min = s_delta(delta)?;
    let cloud = build_cloud(RealizationKind::Simple, delta, nt, nr)?;
    let pairs = detect_collisions(&cloud, eps_space, eps_param);
    let report = match collision_z_profile(&pairs) {
        None => VerificationReport::new(
            "self_intersection_profile",
            d <= SQRT_2 + THRESHOLD_WINDOW,
            0.0,
            0,
        )
        .with("delta", d)
        .with("s_delta", s_min)
        .with("collisions", 0.0),
        Some(profile) => {
            let residual = (profile.z_min_abs - s_min).abs();
            let pass = profile.z_min_abs >= s_min - 5e-3
                && profile.z_max_abs <= 1.05
                && profile.max_axis_deviation <= 0.05;
            VerificationReport::new(
                "self_intersection_profile",
                pass,
                residual,
                pairs.len() as u64,
            )
            .with("delta", d)
            .with("s_delta", s_min)
            .with("collisions", pairs.len())
            .with("z_min_abs", profile.z_min_abs)
            .with("z_max_abs", profile.z_max_abs)
            .with("max_axis_deviation", profile.max_axis_deviation)
        }
    };
    Ok(report.with("nt", nt).with("nr", nr))
}

/// Grid-minimize `max(((rho-1)/cos(theta/2))^2, ((rho+1)/sin(theta/2))^2)`
/// over `theta in (0, pi)` and compare with the closed form `2 + 2 rho^2`
/// (tolerance 1e-6 at 1e5 nodes plus one local refinement pass).
pub fn verify_min_max(rho_list: &[f64], n_theta: usize) -> VerificationReport {
    debug_assert!(n_theta >= 1000);
    let mut worst = 0.0f64;
    let mut minima = Vec::with_capacity(rho_list.len());
    for &rho in rho_list {
        let attained = minimize_max_r_squared(rho, n_theta);
        minima.push(attained);
        worst = worst.max((attained - closed_form::min_max_r_squared(rho)).abs());
    }
    let pass = worst <= 1e-6;
    VerificationReport::new(
        "min_max_identity",
        pass,
        worst,
        (rho_list.len() * n_theta) as u64,
    )
    .with("rho", rho_list.to_vec())
    .with("attained", minima)
}

fn max_r_squared(rho: f64, theta: f64) -> f64 {
    let c = (0.5 * theta).cos();
    let s = (0.5 * theta).sin();
    let a = (rho - 1.0) / c;
    let b = (rho + 1.0) / s;
    (a * a).max(b * b)
}

fn minimize_max_r_squared(rho: f64, n_theta: usize) -> f64 {
    // Interior grid over the open interval.
    let node = |i: usize| PI * i as f64 / (n_theta + 1) as f64;
    let mut best_i = 1;
    let mut best = f64::INFINITY;
    for i in 1..=n_theta {
        let v = max_r_squared(rho, node(i));
        if v < best {
            best = v;
            best_i = i;
        }
    }
    // One refinement pass: ternary search on the bracketing interval. The
    // max of one increasing and one decreasing function is unimodal.
    let mut lo = node(best_i.saturating_sub(1)).max(PI * 1e-12);
    let mut hi = node((best_i + 1).min(n_theta + 1)).min(PI * (1.0 - 1e-12));
    for _ in 0..200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if max_r_squared(rho, m1) <= max_r_squared(rho, m2) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    best.min(max_r_squared(rho, 0.5 * (lo + hi)))
}

fn kind_name(kind: RealizationKind) -> &'static str {
    match kind {
        RealizationKind::Common => "common",
        RealizationKind::Simple => "simple",
    }
}

//! Marching-squares extraction of the footprint boundary `{g = delta^2}`.
//!
//! Crossing points are computed once per grid edge and refined by bisection,
//! so segments from neighboring cells share endpoints bit-exactly and chain
//! into polylines. Segments are directed with the region on the left.

use std::collections::HashMap;

use crate::closed_form::g;
use crate::error::{Error, Result};
use crate::maps::HalfWidth;

/// Axis-aligned sampling window for the extraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundingBox {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl BoundingBox {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Result<Self> {
        if !(x0.is_finite() && y0.is_finite() && x1.is_finite() && y1.is_finite())
            || x0 >= x1
            || y0 >= y1
        {
            return Err(Error::EmptyBoundingBox);
        }
        Ok(BoundingBox { x0, y0, x1, y1 })
    }

    /// Window covering the footprint of half-width `delta`, which lies in
    /// the annulus `|hypot(x, y) - 1| <= delta`.
    pub fn for_width(delta: f64) -> Self {
        let m = 1.0 + delta + 0.25;
        BoundingBox {
            x0: -m,
            y0: -m,
            x1: m,
            y1: m,
        }
    }
}

/// An ordered planar polyline; `closed` when the endpoints met during
/// chaining.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline2 {
    pub points: Vec<(f64, f64)>,
    pub closed: bool,
}

/// A directed level-set segment inside one grid cell.
type Segment = ((f64, f64), (f64, f64));

/// Extract the level set `g = delta^2` over `bbox` on a
/// `resolution x resolution` cell grid.
///
/// The level passes arbitrarily close to the removed point (-1, 0) when
/// `delta < 2`; the cell containing it is subdivided 4x as a guard, and the
/// point itself is treated as outside the region. Every returned vertex
/// satisfies `|g - delta^2| <= 1e-3 delta^2` (bisection refinement).
pub fn region_boundary(
    delta: HalfWidth,
    bbox: BoundingBox,
    resolution: usize,
) -> Result<Vec<Polyline2>> {
    let d = delta.finite()?;
    if resolution < 16 {
        return Err(Error::ResolutionTooLow(resolution));
    }
    let level = d * d;
    let n = resolution;
    let dx = (bbox.x1 - bbox.x0) / n as f64;
    let dy = (bbox.y1 - bbox.y0) / n as f64;
    let xs: Vec<f64> = (0..=n).map(|i| bbox.x0 + dx * i as f64).collect();
    let ys: Vec<f64> = (0..=n).map(|j| bbox.y0 + dy * j as f64).collect();

    // g - level, with the singular point marked as outside.
    let field = |x: f64, y: f64| match g(x, y) {
        Ok(v) => v - level,
        Err(_) => f64::INFINITY,
    };

    let values: Vec<Vec<f64>> = xs
        .iter()
        .map(|&x| ys.iter().map(|&y| field(x, y)).collect())
        .collect();

    // The cell containing the singular point gets a finer pass.
    let singular_cell =
        |i: usize, j: usize| xs[i] <= -1.0 && -1.0 <= xs[i + 1] && ys[j] <= 0.0 && 0.0 <= ys[j + 1];

    let mut segments: Vec<Segment> = Vec::new();
    let mut edge_cache: HashMap<(u64, u64, u64, u64), (f64, f64)> = HashMap::new();
    let mut crossing = |pa: (f64, f64), va: f64, pb: (f64, f64), vb: f64| -> (f64, f64) {
        let key = (
            pa.0.to_bits(),
            pa.1.to_bits(),
            pb.0.to_bits(),
            pb.1.to_bits(),
        );
        *edge_cache
            .entry(key)
            .or_insert_with(|| refine_crossing(pa, va, pb, vb, &field))
    };

    for i in 0..n {
        for j in 0..n {
            let corners = [
                ((xs[i], ys[j]), values[i][j]),
                ((xs[i + 1], ys[j]), values[i + 1][j]),
                ((xs[i + 1], ys[j + 1]), values[i + 1][j + 1]),
                ((xs[i], ys[j + 1]), values[i][j + 1]),
            ];
            if singular_cell(i, j) {
                // 4x subdivision around the removed point.
                let sub = 4;
                for si in 0..sub {
                    for sj in 0..sub {
                        let fx = |k: usize| xs[i] + dx * k as f64 / sub as f64;
                        let fy = |k: usize| ys[j] + dy * k as f64 / sub as f64;
                        let c = [
                            ((fx(si), fy(sj)), field(fx(si), fy(sj))),
                            ((fx(si + 1), fy(sj)), field(fx(si + 1), fy(sj))),
                            ((fx(si + 1), fy(sj + 1)), field(fx(si + 1), fy(sj + 1))),
                            ((fx(si), fy(sj + 1)), field(fx(si), fy(sj + 1))),
                        ];
                        march_cell(&c, &field, &mut crossing, &mut segments);
                    }
                }
            } else {
                march_cell(&corners, &field, &mut crossing, &mut segments);
            }
        }
    }

    Ok(chain_segments(segments))
}

/// Emit the directed segments of one cell. Corners are in order
/// SW, SE, NE, NW; inside means field <= 0; the region stays on the left
/// of each segment. Saddle cells are disambiguated by the center sample.
fn march_cell(
    corners: &[((f64, f64), f64); 4],
    field: &impl Fn(f64, f64) -> f64,
    crossing: &mut impl FnMut((f64, f64), f64, (f64, f64), f64) -> (f64, f64),
    out: &mut Vec<Segment>,
) {
    let [(psw, vsw), (pse, vse), (pne, vne), (pnw, vnw)] = *corners;
    let inside = |v: f64| v <= 0.0;
    let mut case = 0u8;
    if inside(vsw) {
        case |= 1;
    }
    if inside(vse) {
        case |= 2;
    }
    if inside(vne) {
        case |= 4;
    }
    if inside(vnw) {
        case |= 8;
    }
    if case == 0 || case == 15 {
        return;
    }

    // Crossings exist exactly where the incident corners disagree.
    let b = (inside(vsw) != inside(vse)).then(|| crossing(psw, vsw, pse, vse));
    let r = (inside(vse) != inside(vne)).then(|| crossing(pse, vse, pne, vne));
    let t = (inside(vnw) != inside(vne)).then(|| crossing(pnw, vnw, pne, vne));
    let l = (inside(vsw) != inside(vnw)).then(|| crossing(psw, vsw, pnw, vnw));

    let mut seg = |a: Option<(f64, f64)>, b: Option<(f64, f64)>| {
        let (a, b) = (a.expect("crossing"), b.expect("crossing"));
        if a != b {
            out.push((a, b));
        }
    };

    match case {
        1 => seg(b, l),
        2 => seg(r, b),
        3 => seg(r, l),
        4 => seg(t, r),
        6 => seg(t, b),
        7 => seg(t, l),
        8 => seg(l, t),
        9 => seg(b, t),
        11 => seg(r, t),
        12 => seg(l, r),
        13 => seg(b, r),
        14 => seg(l, b),
        5 => {
            // SW and NE inside; connectivity decided at the cell center.
            let cx = 0.5 * (psw.0 + pse.0);
            let cy = 0.5 * (psw.1 + pnw.1);
            if field(cx, cy) <= 0.0 {
                seg(t, l);
                seg(b, r);
            } else {
                seg(b, l);
                seg(t, r);
            }
        }
        10 => {
            let cx = 0.5 * (psw.0 + pse.0);
            let cy = 0.5 * (psw.1 + pnw.1);
            if field(cx, cy) <= 0.0 {
                seg(l, b);
                seg(r, t);
            } else {
                seg(r, b);
                seg(l, t);
            }
        }
        _ => unreachable!("cases 0 and 15 returned early"),
    }
}

/// Bisection along the edge from the inside sample to the outside sample;
/// converges to the level crossing at f64 resolution.
fn refine_crossing(
    pa: (f64, f64),
    va: f64,
    pb: (f64, f64),
    vb: f64,
    field: &impl Fn(f64, f64) -> f64,
) -> (f64, f64) {
    debug_assert!((va <= 0.0) != (vb <= 0.0));
    let (mut pin, mut pout) = if va <= 0.0 { (pa, pb) } else { (pb, pa) };
    for _ in 0..80 {
        let mid = (0.5 * (pin.0 + pout.0), 0.5 * (pin.1 + pout.1));
        if mid == pin || mid == pout {
            break;
        }
        if field(mid.0, mid.1) <= 0.0 {
            pin = mid;
        } else {
            pout = mid;
        }
    }
    pin
}

/// Chain directed segments end-to-start into polylines. Endpoints match
/// bit-exactly because crossings are cached per edge.
fn chain_segments(segments: Vec<Segment>) -> Vec<Polyline2> {
    let key = |p: (f64, f64)| (p.0.to_bits(), p.1.to_bits());
    let mut by_start: HashMap<(u64, u64), Vec<usize>> = HashMap::new();
    let mut by_end: HashMap<(u64, u64), Vec<usize>> = HashMap::new();
    for (idx, seg) in segments.iter().enumerate() {
        by_start.entry(key(seg.0)).or_default().push(idx);
        by_end.entry(key(seg.1)).or_default().push(idx);
    }
    let mut used = vec![false; segments.len()];
    let mut polylines = Vec::new();

    for start_idx in 0..segments.len() {
        if used[start_idx] {
            continue;
        }
        used[start_idx] = true;
        let mut chain = vec![segments[start_idx].0, segments[start_idx].1];
        // Extend forward.
        loop {
            let tail = key(*chain.last().unwrap());
            let next = by_start
                .get(&tail)
                .and_then(|c| c.iter().copied().find(|&i| !used[i]));
            let Some(next) = next else { break };
            used[next] = true;
            chain.push(segments[next].1);
        }
        // Extend backward.
        loop {
            let head = key(chain[0]);
            let prev = by_end
                .get(&head)
                .and_then(|c| c.iter().copied().find(|&i| !used[i]));
            let Some(prev) = prev else { break };
            used[prev] = true;
            chain.insert(0, segments[prev].0);
        }
        let closed = chain.len() > 2 && key(chain[0]) == key(*chain.last().unwrap());
        if closed {
            chain.pop();
        }
        chain.dedup();
        if chain.len() >= 2 {
            polylines.push(Polyline2 {
                points: chain,
                closed,
            });
        }
    }
    polylines
}

//! Triangle meshes of the realizations, with correct seam identification,
//! the four figure patches around the self-intersection set, and the
//! footprint boundary as polylines.

mod export;
mod region;
mod topology;

pub use export::{fmt_sig, obj_bytes, polylines_csv, write_obj};
pub use region::{region_boundary, BoundingBox, Polyline2};
pub use topology::{analyze_topology, MeshTopology};

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, SQRT_2, TAU};

use crate::error::{Error, Result};
use crate::maps::{HalfWidth, ParamPoint, Point3, RealizationKind};

/// Triangle mesh with per-vertex parameter coordinates.
///
/// Welded meshes identify the seam column `(2 pi, r) ~ (0, -r)` node to
/// node, which produces the strip's actual topology: Euler characteristic 0
/// and a single boundary circle of combinatorial length `2 nt`.
#[derive(Debug, Clone)]
pub struct SurfaceMesh {
    pub vertices: Vec<Point3>,
    pub params: Vec<ParamPoint>,
    pub faces: Vec<[u32; 3]>,
    pub welded: bool,
}

impl SurfaceMesh {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }
}

/// Tessellate the strip of half-width `delta` on an `nt x nr` quad grid,
/// two triangles per quad, split along the `(i, j) -> (i+1, j+1)` diagonal.
///
/// Unwelded meshes keep the closing column `t = 2 pi` as separate vertices
/// (a rectangle, Euler characteristic 1); welded meshes merge it into
/// column 0 in reversed r-order. Welding requires even `nr` so the reversed
/// column matches node to node, including the fixed middle node.
pub fn tessellate(
    kind: RealizationKind,
    delta: HalfWidth,
    nt: usize,
    nr: usize,
    weld: bool,
) -> Result<SurfaceMesh> {
    let d = delta.finite()?;
    if nt < 3 || nr < 1 {
        return Err(Error::DegenerateGrid { nt, nr });
    }
    if weld && !nr.is_multiple_of(2) {
        return Err(Error::OddWeldRows(nr));
    }

    let cols = if weld { nt } else { nt + 1 };
    let mut vertices = Vec::with_capacity(cols * (nr + 1));
    let mut params = Vec::with_capacity(cols * (nr + 1));
    for i in 0..cols {
        let t = TAU * i as f64 / nt as f64;
        for j in 0..=nr {
            let r = -d + 2.0 * d * j as f64 / nr as f64;
            let p = ParamPoint::new(t, r);
            params.push(p);
            vertices.push(kind.eval(p));
        }
    }

    let vid = |i: usize, j: usize| -> u32 {
        if weld && i == nt {
            // Seam: (2 pi, r_j) is the vertex (0, r_{nr - j}) = (0, -r_j).
            (nr - j) as u32
        } else {
            (i * (nr + 1) + j) as u32
        }
    };

    let mut faces = Vec::with_capacity(2 * nt * nr);
    for i in 0..nt {
        for j in 0..nr {
            let a = vid(i, j);
            let b = vid(i + 1, j);
            let c = vid(i + 1, j + 1);
            let e = vid(i, j + 1);
            faces.push([a, b, c]);
            faces.push([a, c, e]);
        }
    }

    Ok(SurfaceMesh {
        vertices,
        params,
        faces,
        welded: weld,
    })
}

/// Which of the four viewing patches around the self-intersection set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatchName {
    S1Bot,
    S1Top,
    S2Bot,
    S2Top,
}

impl PatchName {
    pub fn as_str(self) -> &'static str {
        match self {
            PatchName::S1Bot => "s1_bot",
            PatchName::S1Top => "s1_top",
            PatchName::S2Bot => "s2_bot",
            PatchName::S2Top => "s2_top",
        }
    }
}

/// Parameter rectangle of one figure patch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PatchSpec {
    pub name: PatchName,
    pub t_range: (f64, f64),
    pub r_range: (f64, f64),
    pub h2: f64,
    pub h3: f64,
}

/// The four parameter rectangles whose images frame the self-intersection
/// set: the bottom and top halves of each of the two crossing sheets.
/// Requires `delta > sqrt(2)` so the set is nonempty. `h2 = arcsin(min(delta, 2)/2)`
/// lies in `(pi/4, pi/2]` and `h3 = pi - h2`.
pub fn patch_specs(delta: HalfWidth) -> Result<[PatchSpec; 4]> {
    let d = delta.finite()?;
    if d <= SQRT_2 {
        return Err(Error::PatchesRequireWideStrip(d));
    }
    let h2 = (d.min(2.0) / 2.0).asin();
    let h3 = PI - h2;
    let specs = [
        PatchSpec {
            name: PatchName::S1Bot,
            t_range: (FRAC_PI_2, 2.0 * h2),
            r_range: (-2.0 * FRAC_PI_4.cos(), -2.0 * h2.cos()),
            h2,
            h3,
        },
        PatchSpec {
            name: PatchName::S1Top,
            t_range: (2.0 * h3, 1.5 * PI),
            r_range: (-2.0 * h3.cos(), -2.0 * (0.75 * PI).cos()),
            h2,
            h3,
        },
        PatchSpec {
            name: PatchName::S2Bot,
            t_range: (PI - 2.0 * h2, FRAC_PI_2),
            r_range: (-2.0 * h2.sin(), -2.0 * FRAC_PI_4.sin()),
            h2,
            h3,
        },
        PatchSpec {
            name: PatchName::S2Top,
            t_range: (1.5 * PI, 3.0 * PI - 2.0 * h3),
            r_range: (2.0 * (0.75 * PI).sin(), 2.0 * h3.sin()),
            h2,
            h3,
        },
    ];
    for s in &specs {
        debug_assert!(s.t_range.0 <= s.t_range.1 && s.r_range.0 <= s.r_range.1);
        debug_assert!(s.r_range.0 >= -d - 1e-12 && s.r_range.1 <= d + 1e-12);
    }
    Ok(specs)
}

/// One figure patch: its parameter rectangle and its tessellation under the
/// simple map.
#[derive(Debug, Clone)]
pub struct FigurePatch {
    pub spec: PatchSpec,
    pub mesh: SurfaceMesh,
}

/// Tessellate the four patches on `nt x nr` grids via the simple map.
pub fn figure_patches(delta: HalfWidth, nt: usize, nr: usize) -> Result<Vec<FigurePatch>> {
    if nt < 1 || nr < 1 {
        return Err(Error::DegenerateGrid { nt, nr });
    }
    let specs = patch_specs(delta)?;
    Ok(specs
        .into_iter()
        .map(|spec| FigurePatch {
            spec,
            mesh: tessellate_rect(spec.t_range, spec.r_range, nt, nr),
        })
        .collect())
}

/// Plain rectangle tessellation of the simple map over the given parameter
/// ranges. Angles outside `[0, 2 pi)` are evaluated directly: the defining
/// formulas respect the seam identification.
fn tessellate_rect(t_range: (f64, f64), r_range: (f64, f64), nt: usize, nr: usize) -> SurfaceMesh {
    let mut vertices = Vec::with_capacity((nt + 1) * (nr + 1));
    let mut params = Vec::with_capacity((nt + 1) * (nr + 1));
    for i in 0..=nt {
        let t = t_range.0 + (t_range.1 - t_range.0) * i as f64 / nt as f64;
        for j in 0..=nr {
            let r = r_range.0 + (r_range.1 - r_range.0) * j as f64 / nr as f64;
            let p = ParamPoint::new(t, r);
            params.push(p);
            vertices.push(crate::maps::eval_simple(p));
        }
    }
    let vid = |i: usize, j: usize| (i * (nr + 1) + j) as u32;
    let mut faces = Vec::with_capacity(2 * nt * nr);
    for i in 0..nt {
        for j in 0..nr {
            faces.push([vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)]);
            faces.push([vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)]);
        }
    }
    SurfaceMesh {
        vertices,
        params,
        faces,
        welded: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::s_delta;
    use crate::maps::eval_simple;

    fn width(d: f64) -> HalfWidth {
        HalfWidth::new(d).unwrap()
    }

    #[test]
    fn welded_hand_count() {
        // 8 columns x 3 rows after merging column 8 into column 0 reversed:
        // V = 24, E = nt (3 nr + 1) = 56, F = 2 nt nr = 32, chi = 0.
        let mesh = tessellate(RealizationKind::Simple, width(1.0), 8, 2, true).unwrap();
        let topo = analyze_topology(&mesh).unwrap();
        assert_eq!(topo.vertices, 24);
        assert_eq!(topo.edges, 56);
        assert_eq!(topo.faces, 32);
        assert_eq!(topo.euler_characteristic, 0);
        assert_eq!(topo.boundary_loops, 1);
        assert_eq!(topo.boundary_edges, 16);
    }

    #[test]
    fn unwelded_is_a_disk() {
        let mesh = tessellate(RealizationKind::Simple, width(0.6), 8, 2, false).unwrap();
        let topo = analyze_topology(&mesh).unwrap();
        assert_eq!(topo.euler_characteristic, 1);
        assert_eq!(topo.boundary_loops, 1);
    }

    #[test]
    fn weld_rejects_odd_rows() {
        assert_eq!(
            tessellate(RealizationKind::Simple, width(1.0), 8, 3, true).unwrap_err(),
            Error::OddWeldRows(3)
        );
        assert!(tessellate(RealizationKind::Simple, width(1.0), 8, 3, false).is_ok());
    }

    #[test]
    fn vertices_reevaluate_exactly() {
        let mesh = tessellate(RealizationKind::Simple, width(0.6), 24, 4, true).unwrap();
        for (v, p) in mesh.vertices.iter().zip(&mesh.params) {
            assert_eq!(*v, eval_simple(*p));
        }
    }

    #[test]
    fn no_degenerate_faces() {
        for weld in [false, true] {
            let mesh = tessellate(RealizationKind::Common, width(0.6), 5, 2, weld).unwrap();
            for f in &mesh.faces {
                assert!(f[0] != f[1] && f[1] != f[2] && f[0] != f[2], "{f:?}");
                assert!(f.iter().all(|&i| (i as usize) < mesh.vertices.len()));
            }
        }
    }

    #[test]
    fn patch_specs_examples() {
        let specs = patch_specs(width(1.97)).unwrap();
        let h2 = specs[0].h2;
        assert!(h2 > FRAC_PI_4 && h2 <= FRAC_PI_2);
        assert!((specs[0].h3 - (PI - h2)).abs() < 1e-15);

        // delta >= 2 clamps: h2 = h3 = pi/2, patches still well-defined.
        let specs = patch_specs(width(2.5)).unwrap();
        assert!((specs[0].h2 - FRAC_PI_2).abs() < 1e-12);
        assert!((specs[0].h3 - FRAC_PI_2).abs() < 1e-12);
        for s in &specs {
            assert!(s.t_range.0 <= s.t_range.1);
            assert!(s.r_range.0 <= s.r_range.1);
        }

        assert_eq!(
            patch_specs(width(1.0)).unwrap_err(),
            Error::PatchesRequireWideStrip(1.0)
        );
        assert!(patch_specs(width(SQRT_2)).is_err());
    }

    #[test]
    fn patch_rectangles_satisfy_containments() {
        // Each patch rectangle sits inside its coarse bounding rectangle,
        // which in turn sits inside the parameter domain:
        //   S1_bot in (0, pi]    x [-sqrt2, 0]
        //   S1_top in [pi, 2 pi) x [0, sqrt2]
        //   S2_bot in [0, pi)    x [-delta, -sqrt2]
        //   S2_top in (pi, 2 pi) x [sqrt2, delta]
        for d in [1.5, 1.97, 2.0, 3.5] {
            let [s1b, s1t, s2b, s2t] = patch_specs(width(d)).unwrap();
            let tol = 1e-12;

            assert!(s1b.t_range.0 > 0.0 && s1b.t_range.1 <= PI + tol, "{d}");
            assert!(
                s1b.r_range.0 >= -SQRT_2 - tol && s1b.r_range.1 <= tol,
                "{d}"
            );

            assert!(s1t.t_range.0 >= PI - tol && s1t.t_range.1 < TAU, "{d}");
            assert!(
                s1t.r_range.0 >= -tol && s1t.r_range.1 <= SQRT_2 + tol,
                "{d}"
            );

            assert!(s2b.t_range.0 >= -tol && s2b.t_range.1 < PI, "{d}");
            assert!(
                s2b.r_range.0 >= -d - tol && s2b.r_range.1 <= -SQRT_2 + tol,
                "{d}"
            );

            assert!(s2t.t_range.0 > PI && s2t.t_range.1 <= TAU + tol, "{d}");
            assert!(
                s2t.r_range.0 >= SQRT_2 - tol && s2t.r_range.1 <= d + tol,
                "{d}"
            );
        }
    }

    #[test]
    fn patches_frame_the_self_intersection_set() {
        // S1_bot and S2_bot contain the glued parameter curve for the lower
        // half of the set: for sampled s in [s_delta, 1), the parameters
        // (t1, -2 cos(t1/2)) and (pi - t1, -2 sin(t1/2)) with sin t1 = s lie
        // in the respective rectangles and map within 1e-6 of (-1, 0, -s).
        let delta = width(1.97);
        let specs = patch_specs(delta).unwrap();
        let s_min = s_delta(delta).unwrap();
        let (s1, s2) = (specs[0], specs[2]);
        for k in 0..50 {
            let s = s_min + (1.0 - s_min) * k as f64 / 50.0;
            let t1 = PI - s.asin();
            let r1 = -2.0 * (0.5 * t1).cos();
            assert!(t1 >= s1.t_range.0 - 1e-9 && t1 <= s1.t_range.1 + 1e-9);
            assert!(r1 >= s1.r_range.0 - 1e-9 && r1 <= s1.r_range.1 + 1e-9);
            let target = Point3::new(-1.0, 0.0, -s);
            assert!(eval_simple(ParamPoint::new(t1, r1)).distance(target) <= 1e-6);

            let t2 = PI - t1;
            let r2 = -2.0 * (0.5 * t1).sin();
            assert!(t2 >= s2.t_range.0 - 1e-9 && t2 <= s2.t_range.1 + 1e-9);
            assert!(r2 >= s2.r_range.0 - 1e-9 && r2 <= s2.r_range.1 + 1e-9);
            assert!(eval_simple(ParamPoint::new(t2, r2)).distance(target) <= 1e-6);
        }
    }

    #[test]
    fn figure_patches_are_disks() {
        for patch in figure_patches(width(1.97), 24, 8).unwrap() {
            let topo = analyze_topology(&patch.mesh).unwrap();
            assert_eq!(topo.euler_characteristic, 1, "{:?}", patch.spec.name);
            assert_eq!(topo.boundary_loops, 1);
            for (v, p) in patch.mesh.vertices.iter().zip(&patch.mesh.params) {
                assert_eq!(*v, eval_simple(*p));
            }
        }
    }
}

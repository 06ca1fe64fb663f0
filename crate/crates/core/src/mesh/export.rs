//! Text exporters: Wavefront OBJ for meshes, CSV for plot polylines.
//!
//! Output is byte-deterministic. No normals are emitted: the welded strip
//! is non-orientable, so globally consistent per-vertex normals do not
//! exist.

use std::io::Write;

use crate::error::Result;

use super::{Polyline2, SurfaceMesh};

/// Format with `sig` significant digits in plain decimal notation.
/// Negative zero prints as zero.
pub fn fmt_sig(value: f64, sig: usize) -> String {
    debug_assert!(sig >= 1);
    if value == 0.0 || !value.is_finite() {
        return format!("{:.*}", sig - 1, 0.0);
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - magnitude).max(0) as usize;
    let formatted = format!("{value:.decimals$}");
    // Rounding can carry across a power of ten (0.99999... -> 1.0),
    // leaving one digit too many; reformat with one fewer decimal.
    let rounded: f64 = formatted.parse().expect("formatted float");
    if decimals > 0 && rounded != 0.0 && (rounded.abs().log10().floor() as i32) > magnitude {
        format!("{value:.*}", decimals - 1)
    } else {
        formatted
    }
}

/// OBJ with `v x y z` lines (9 significant digits, LF endings) followed by
/// 1-based `f i j k` lines, vertices in stored order.
pub fn obj_bytes(mesh: &SurfaceMesh) -> Vec<u8> {
    let mut out = String::with_capacity(mesh.vertices.len() * 40 + mesh.faces.len() * 16);
    for v in &mesh.vertices {
        out.push_str("v ");
        out.push_str(&fmt_sig(v.x, 9));
        out.push(' ');
        out.push_str(&fmt_sig(v.y, 9));
        out.push(' ');
        out.push_str(&fmt_sig(v.z, 9));
        out.push('\n');
    }
    for f in &mesh.faces {
        out.push_str(&format!("f {} {} {}\n", f[0] + 1, f[1] + 1, f[2] + 1));
    }
    out.into_bytes()
}

pub fn write_obj(mesh: &SurfaceMesh, w: &mut impl Write) -> Result<()> {
    w.write_all(&obj_bytes(mesh))?;
    Ok(())
}

/// CSV with header `x,y` and 9-significant-digit values; polylines are
/// separated by a blank line.
pub fn polylines_csv(lines: &[Polyline2]) -> String {
    let mut out = String::from("x,y\n");
    for (i, line) in lines.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for &(x, y) in &line.points {
            out.push_str(&fmt_sig(x, 9));
            out.push(',');
            out.push_str(&fmt_sig(y, 9));
            out.push('\n');
        }
    }
    out
}

//! Uniform-grid spatial hash over 3D points.
//!
//! Cell size equals the query radius, so any two points within that radius
//! sit in the same cell or in one of the 26 neighbors.

use std::collections::HashMap;

use crate::maps::Point3;

pub struct SpatialGrid {
    cells: HashMap<(i64, i64, i64), Vec<u32>>,
    inv_cell: f64,
}

impl SpatialGrid {
    /// Index `points` into cells of size `cell_size`.
    pub fn build(points: &[Point3], cell_size: f64) -> Self {
        assert!(cell_size > 0.0 && cell_size.is_finite());
        let inv_cell = 1.0 / cell_size;
        let mut cells: HashMap<(i64, i64, i64), Vec<u32>> = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            cells
                .entry(cell_of(p, inv_cell))
                .or_default()
                .push(i as u32);
        }
        SpatialGrid { cells, inv_cell }
    }

    /// Visit the indices stored in the 3x3x3 neighborhood of `p`'s cell.
    pub fn for_each_neighbor(&self, p: &Point3, mut visit: impl FnMut(u32)) {
        let (cx, cy, cz) = cell_of(p, self.inv_cell);
        for dx in -1..=1 {
            for dy in -1..=1 {
                for dz in -1..=1 {
                    if let Some(ids) = self.cells.get(&(cx + dx, cy + dy, cz + dz)) {
                        for &id in ids {
                            visit(id);
                        }
                    }
                }
            }
        }
    }
}

fn cell_of(p: &Point3, inv_cell: f64) -> (i64, i64, i64) {
    (
        (p.x * inv_cell).floor() as i64,
        (p.y * inv_cell).floor() as i64,
        (p.z * inv_cell).floor() as i64,
    )
}

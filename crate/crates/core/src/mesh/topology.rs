//! Combinatorial validation of triangle meshes: Euler characteristic and
//! boundary-loop structure, via edge/face incidence counting.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::SurfaceMesh;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MeshTopology {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    /// Edges incident to exactly one face.
    pub boundary_edges: usize,
    /// Closed walks formed by the boundary edges.
    pub boundary_loops: usize,
}

/// Count simplices and walk the boundary.
///
/// Fails on degenerate faces, out-of-range indices, edges shared by more
/// than two faces, or boundary vertices without exactly two incident
/// boundary edges (a non-manifold boundary cannot be walked into loops).
pub fn analyze_topology(mesh: &SurfaceMesh) -> Result<MeshTopology> {
    let nv = mesh.vertices.len();
    let mut edge_faces: HashMap<(u32, u32), u32> = HashMap::new();
    for face in &mesh.faces {
        let [a, b, c] = *face;
        if a == b || b == c || a == c {
            return Err(Error::Invalid(format!("degenerate face {face:?}")));
        }
        for (u, v) in [(a, b), (b, c), (c, a)] {
            if u as usize >= nv || v as usize >= nv {
                return Err(Error::Invalid(format!("face index out of range: {face:?}")));
            }
            let key = (u.min(v), u.max(v));
            let n = edge_faces.entry(key).or_insert(0);
            *n += 1;
            if *n > 2 {
                return Err(Error::Invalid(format!("edge {key:?} shared by > 2 faces")));
            }
        }
    }

    let edges = edge_faces.len();
    let faces = mesh.faces.len();
    let chi = nv as i64 - edges as i64 + faces as i64;

    // Boundary walk: each boundary vertex must have exactly two incident
    // boundary edges; loops are counted by following them.
    let mut incident: HashMap<u32, Vec<u32>> = HashMap::new();
    let mut boundary_edges = 0usize;
    for (&(u, v), &n) in &edge_faces {
        if n == 1 {
            boundary_edges += 1;
            incident.entry(u).or_default().push(v);
            incident.entry(v).or_default().push(u);
        }
    }
    for (v, nbrs) in &incident {
        if nbrs.len() != 2 {
            return Err(Error::Invalid(format!(
                "non-manifold boundary at vertex {v}: {} incident boundary edges",
                nbrs.len()
            )));
        }
    }

    let mut visited: HashMap<u32, bool> = incident.keys().map(|&v| (v, false)).collect();
    let mut boundary_loops = 0usize;
    let mut starts: Vec<u32> = incident.keys().copied().collect();
    starts.sort_unstable();
    for start in starts {
        if visited[&start] {
            continue;
        }
        boundary_loops += 1;
        let mut prev = start;
        let mut cur = incident[&start][0];
        visited.insert(start, true);
        while cur != start {
            visited.insert(cur, true);
            let nbrs = &incident[&cur];
            let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
            prev = cur;
            cur = next;
        }
    }

    Ok(MeshTopology {
        vertices: nv,
        edges,
        faces,
        euler_characteristic: chi,
        boundary_edges,
        boundary_loops,
    })
}

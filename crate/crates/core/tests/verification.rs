//! Deterministic cross-validation of closed forms against independent
//! numerical scans.

use std::f64::consts::{SQRT_2, TAU};

use moebius_core::closed_form::{s_delta, sigma_delta};
use moebius_core::maps::{HalfWidth, RealizationKind};
use moebius_core::mesh::{analyze_topology, tessellate};
use moebius_core::oracle::{
    build_cloud, detect_collisions, verify_graph_identity, EPS_PARAM, EPS_SPACE,
};

fn width(d: f64) -> HalfWidth {
    HalfWidth::new(d).unwrap()
}

/// The admissible-angle set of the glued-pair family has two displayed
/// characterizations: max(|2 cos(t/2)|, |2 sin(t/2)|) in (sqrt(2), delta],
/// and s_delta <= |sin t| < 1. Scan a fine angle grid and check they agree
/// pointwise, and that the attained |sin t| values cover [s_delta, 1) to
/// grid resolution.
#[test]
fn admissible_angle_set_dual_characterization() {
    let n = 200_000usize;
    for d in [1.5, 1.97, 2.5, 4.0] {
        let s_min = s_delta(width(d)).unwrap();
        let mut attained: Vec<f64> = Vec::new();
        for i in 0..n {
            let t = TAU * i as f64 / n as f64;
            let big = (2.0 * (0.5 * t).cos().abs()).max(2.0 * (0.5 * t).sin().abs());
            let by_offsets = big > SQRT_2 && big <= d;
            let s = t.sin().abs();
            let by_sine = s_min <= s && s < 1.0;
            // Skip knife-edge grid nodes where the two forms round apart.
            if (big - SQRT_2).abs() < 1e-9
                || (big - d).abs() < 1e-9
                || (s - s_min).abs() < 1e-9
                || (s - 1.0).abs() < 1e-9
            {
                continue;
            }
            assert_eq!(
                by_offsets, by_sine,
                "delta {d}, t {t}: big {big}, |sin| {s}"
            );
            if by_sine {
                attained.push(s);
            }
        }
        // Interior coverage of [s_min, 1): every bucket of width 1e-3 that
        // lies strictly inside gets a hit.
        attained.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!(!attained.is_empty());
        assert!((attained[0] - s_min).abs() <= 1e-4, "delta {d}");
        assert!(*attained.last().unwrap() < 1.0);
        assert!(*attained.last().unwrap() >= 1.0 - 1e-4, "delta {d}");
        let buckets = 1000;
        let mut hit = vec![false; buckets];
        for &s in &attained {
            let b = ((s - s_min) / (1.0 - s_min) * buckets as f64) as usize;
            hit[b.min(buckets - 1)] = true;
        }
        for (b, &h) in hit.iter().enumerate() {
            let lo = s_min + (1.0 - s_min) * b as f64 / buckets as f64;
            let hi = s_min + (1.0 - s_min) * (b + 1) as f64 / buckets as f64;
            if lo > s_min + 1e-3 && hi < 1.0 - 1e-3 {
                assert!(h, "delta {d}: no attained |sin t| in [{lo}, {hi}]");
            }
        }
    }
}

/// sigma_delta against a dumb uniform scan of z = -sin t over the band
/// 2 |cos(t/2)| <= delta, independent of the closed-form code path. The
/// scan cannot land exactly on the band boundary, where the maximum is
/// attained for narrow strips, so the tolerance is one grid step
/// (|dz/dt| <= 1).
#[test]
fn axis_range_matches_direct_scan() {
    let n = 400_000usize;
    let step = TAU / n as f64;
    for d in [0.1, 0.7, 1.0, SQRT_2, 2.0, 3.0] {
        let sigma = sigma_delta(width(d)).unwrap();
        let mut max_abs = 0.0f64;
        for i in 0..=n {
            let t = TAU * i as f64 / n as f64;
            if 2.0 * (0.5 * t).cos().abs() <= d {
                max_abs = max_abs.max(t.sin().abs());
            }
        }
        assert!(
            (max_abs - sigma).abs() <= 2.0 * step,
            "delta {d}: scan {max_abs} vs sigma {sigma}"
        );
    }
}

/// Welded tessellations carry the strip topology for every grid size:
/// Euler characteristic 0 and one boundary circle of length 2 nt.
#[test]
fn welded_topology_sweep() {
    for nt in [3, 4, 5, 8, 13, 33] {
        for nr in [2, 4, 10] {
            let mesh = tessellate(RealizationKind::Simple, width(0.6), nt, nr, true).unwrap();
            let topo = analyze_topology(&mesh).unwrap();
            assert_eq!(topo.euler_characteristic, 0, "nt {nt}, nr {nr}");
            assert_eq!(topo.boundary_loops, 1, "nt {nt}, nr {nr}");
            assert_eq!(topo.boundary_edges, 2 * nt, "nt {nt}, nr {nr}");
            assert_eq!(topo.vertices, nt * (nr + 1));
            assert_eq!(topo.faces, 2 * nt * nr);

            let flat = tessellate(RealizationKind::Simple, width(0.6), nt, nr, false).unwrap();
            let topo = analyze_topology(&flat).unwrap();
            assert_eq!(topo.euler_characteristic, 1, "nt {nt}, nr {nr}");
            assert_eq!(topo.boundary_loops, 1);
        }
    }
}

/// The report wire format: exactly these five fields.
#[test]
fn report_json_schema() {
    let report = verify_graph_identity(width(1.0), 1000, 1).unwrap();
    let json: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    let obj = json.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        ["check", "n_samples", "params", "pass", "worst_residual"]
    );
    assert!(obj["worst_residual"].as_f64().unwrap() >= 0.0);
    assert!(obj["n_samples"].as_u64().is_some());
}

/// Observable oracle output is independent of the rayon pool size.
#[test]
fn thread_count_does_not_change_results() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            let cloud = build_cloud(RealizationKind::Simple, width(1.97), 512, 256).unwrap();
            let pairs = detect_collisions(&cloud, EPS_SPACE, EPS_PARAM);
            let graph = verify_graph_identity(width(1.97), 100_000, 7).unwrap();
            (pairs, serde_json::to_string(&graph).unwrap())
        })
    };
    let (pairs_1, graph_1) = run(1);
    let (pairs_4, graph_4) = run(4);
    assert_eq!(pairs_1, pairs_4);
    assert_eq!(graph_1, graph_4);
}

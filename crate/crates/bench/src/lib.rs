//! Shared fixtures for the criterion benchmarks.

use moebius_core::maps::{HalfWidth, RealizationKind};
use moebius_core::oracle::SampleCloud;

pub fn width(d: f64) -> HalfWidth {
    HalfWidth::new(d).expect("positive finite width")
}

/// A wide simple-map cloud with plenty of real near-coincidences.
pub fn wide_cloud(nt: usize, nr: usize) -> SampleCloud {
    moebius_core::oracle::build_cloud(RealizationKind::Simple, width(1.97), nt, nr)
        .expect("valid grid")
}

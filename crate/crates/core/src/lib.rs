//! Two R^3 realizations of the Möbius strip and every closed-form fact
//! about them, cross-validated by an independent brute-force oracle.
//!
//! The strip of half-width `delta` is the rectangle
//! `[0, 2*pi) x [-delta, delta]` with the seam identification
//! `(2*pi, r) ~ (0, -r)`. Two parametric maps realize it in space:
//!
//! * the common realization, a segment revolving in a rotating plane
//!   through the z-axis (an embedding iff `delta < 2`), and
//! * the simple realization, whose moving segment stays parallel to the
//!   plane `y = z` (an embedding iff `delta <= sqrt(2)`).
//!
//! The simple realization is the closure of the graph of one rational
//! function over a polynomially defined footprint; [`closed_form`] exposes
//! that function, the footprint, the self-intersection and axis segments,
//! the glued-pair family, and per-point cross-sections for both maps.
//! [`oracle`] re-derives the same facts numerically from dense parameter
//! sampling and spatial hashing. [`mesh`] tessellates the realizations
//! (with genuine seam welding), extracts footprint boundaries, and writes
//! OBJ/CSV.
//!
//! ```
//! use moebius_core::closed_form::{f, in_region, is_embedding};
//! use moebius_core::{canonicalize, eval_simple, HalfWidth, RealizationKind};
//!
//! let delta = HalfWidth::new(0.6)?;
//!
//! // Narrow strips embed; every surface point off the axis line sits on
//! // the graph of f over the footprint.
//! assert!(is_embedding(delta, RealizationKind::Simple)?);
//! let p = canonicalize(2.1, -0.4)?;
//! let q = eval_simple(p);
//! assert!(in_region(q.x, q.y, delta));
//! assert!((f(q.x, q.y)? - q.z).abs() <= 1e-9 * (1.0 + q.z.abs()));
//! # Ok::<(), moebius_core::Error>(())
//! ```

pub mod closed_form;
pub mod error;
pub mod maps;
pub mod mesh;
pub mod oracle;
pub mod rng;

pub use closed_form::{AxisSegment, CrossSection, GluedPair, SelfIntersectionSet};
pub use error::{Error, Result};
pub use maps::{
    canonicalize, eval_common, eval_simple, moving_segment, param_distance, HalfWidth, ParamPoint,
    Point3, RealizationKind,
};
pub use mesh::SurfaceMesh;
pub use oracle::{CollisionPair, SampleCloud, VerificationReport};

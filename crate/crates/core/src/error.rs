//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A numeric input was NaN or infinite where a finite value is required.
    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    /// An angle was outside its required range.
    #[error("angle t = {0} outside [0, 2*pi)")]
    AngleOutOfRange(f64),

    /// The point (-1, 0) is removed from the domain of f, g and the graph inversion.
    #[error("the point (-1, 0) is excluded from the domain")]
    SingularPoint,

    /// Half-widths must be positive (and finite unless explicitly infinite).
    #[error("half-width must be positive and finite, got {0}")]
    InvalidHalfWidth(f64),

    /// The operation needs a finite half-width but was given the infinite strip.
    #[error("operation requires a finite half-width")]
    InfiniteHalfWidth,

    /// Branch index for glued pairs must be 0 or 1.
    #[error("branch index must be 0 or 1, got {0}")]
    InvalidBranch(u8),

    /// Sampling grid too small to be meaningful.
    #[error("degenerate grid: nt = {nt}, nr = {nr}")]
    DegenerateGrid { nt: usize, nr: usize },

    /// Welding identifies (2*pi, r) with (0, -r) node-to-node, which needs a
    /// symmetric row grid with a fixed middle node; odd nr is rejected.
    #[error("welding requires an even number of r subdivisions, got {0}")]
    OddWeldRows(usize),

    /// The four figure patches exist only when the self-intersection set is nonempty.
    #[error("figure patches require delta > sqrt(2), got {0}")]
    PatchesRequireWideStrip(f64),

    /// Marching-squares resolution floor.
    #[error("region boundary resolution must be at least 16, got {0}")]
    ResolutionTooLow(usize),

    /// Degenerate bounding box for region extraction.
    #[error("empty bounding box")]
    EmptyBoundingBox,

    /// Malformed input outside the other categories (bad mesh connectivity,
    /// unsupported output format, ...).
    #[error("{0}")]
    Invalid(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

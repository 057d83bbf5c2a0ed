use thiserror::Error;

use crate::complex::Simplex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong, with enough payload to act as a witness.
///
/// Verification failures carry the first offending face in a deterministic
/// iteration order, so repeated runs report the same witness.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("simplex has no vertices")]
    EmptySimplex,
    #[error("vertex {0} repeats within a simplex")]
    DuplicateVertexInSimplex(u32),
    #[error("complex has no simplices")]
    EmptyComplex,
    #[error("malformed complex: {0}")]
    InvalidComplex(String),
    #[error("complex carries no orientation")]
    MissingOrientation,
    #[error("edge {0}-{1} lacks an orientation")]
    UnorientedEdge(u32, u32),
    #[error("cyclically oriented triangle {0}")]
    OrientedTriangleCycle(Simplex),
    #[error("integer overflow")]
    Overflow,
    #[error("invalid Morse face: {0}")]
    InvalidMorseFace(String),
    #[error("tile carries a Morse face")]
    NotBasic,
    #[error("face family is not a Morse tile: {0}")]
    NotAMorseTile(String),
    #[error("invalid staircase: {0}")]
    InvalidStaircase(String),
    #[error("invalid product tile spec: {0}")]
    InvalidSpec(String),

    // tiling verification witnesses
    #[error("tile {tile_index} is invalid: {reason}")]
    InvalidTile { tile_index: usize, reason: String },
    #[error("tile {tile_index} does not lie on a simplex of the complex")]
    TileNotInComplex { tile_index: usize },
    #[error("face {face} belongs to tiles {first} and {second}")]
    Overlap {
        face: Simplex,
        first: usize,
        second: usize,
    },
    #[error("tiles of dimension >= {level} are not closed: face {face} escapes into a lower-dimensional tile")]
    NotClosed { level: usize, face: Simplex },
    #[error("prefix of length {prefix} is not closed: face {face} is only covered later")]
    PrefixNotClosed { prefix: usize, face: Simplex },
    #[error("tile {tile_index}: edge {}-{} must point into the Morse face", .edge.0, .edge.1)]
    MorseFaceOrder { tile_index: usize, edge: (u32, u32) },
    #[error("tiling is not tame: {0}")]
    NotTame(String),

    // product-level failures
    #[error("h-tiling condition fails for tile {0} of the first factor and tile {1} of the second")]
    ConditionHViolated(usize, usize),
    #[error("tiling is not pure dimensional")]
    NotPure,
    #[error("not an h-tiling: {0}")]
    NotHTiling(String),

    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),
    #[error("{0}")]
    InvalidInput(String),
}

//! Morse tilings and shellings of simplicial complexes.
//!
//! The crate models tiles (simplices with a removed interval of faces),
//! tilings and shellings of complexes by such tiles, staircase
//! triangulations of products of simplices together with their induced tile
//! products, and the mixed decompositions of a simplex obtained from a
//! weighted Minkowski sum. Everything is exact: vertex sets are integer
//! labelled, counting uses checked 64-bit arithmetic, and the mixed
//! decomposition code works over arbitrary-precision rationals.

pub mod catalog;
pub mod cayley;
pub mod complex;
pub mod error;
pub mod json;
pub mod product_complex;
pub mod product_simplex;
pub mod staircase;
pub mod tile;
pub mod tiling;
pub mod vector;

pub use catalog::{
    capped_cylinder_tiling, closed_simplex_tiling, handle_tiling, iso_tiles_tiling,
    octahedron_tiling, IsoTilesVariant,
};
pub use cayley::{
    cell_contains, cell_intersection, export_svg, minkowski_points, piece_contains, CellFace,
    MixedCell, RationalPoint,
};
pub use complex::{build_complex, Orientation, Simplex, SimplicialComplex, VertexId};
pub use error::{Error, Result};
pub use json::{
    complex_from_json, complex_to_json, report_to_json, staircase_from_json, staircase_to_json,
    tile_from_json, tile_to_json, tiling_from_json, tiling_to_json, CliReport,
};
pub use product_complex::{
    boundary_simplex_shelling, boundary_triangle_fan, delta2_product, enumerate_walks,
    h_from_walks, product_h_tiling, product_tiling, sphere_torus_tiling, walk_weight,
    FormulaComparison, Walk,
};
pub use product_simplex::{product_shelling, tile_product_shelling, ProductTileSpec};
pub use staircase::{enumerate_staircases, staircase_count, Staircase};
pub use tile::{make_tile, recognize_tile, MorseTile, TileSignature};
pub use tiling::{
    analyze, c_vector_tiling, h_vector_tiling, verify_shelling, verify_tiling, TiledSet,
    TilingReport,
};
pub use vector::GradedVector;

//! Named example tilings.
//!
//! The shelled boundary sphere and the three-tile circle live next to the
//! product machinery; this module collects the remaining constructions that
//! get referred to by name: the trivial one-tile simplex, the octahedron
//! with its hand-picked mixed tile list, the capped cylinder sphere, the
//! handles, and the products tiled by a single repeated tile shape.

use std::collections::BTreeSet;

use crate::complex::{build_complex, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::product_complex::{boundary_triangle_fan, product_h_tiling};
use crate::product_simplex::{tile_product_shelling, ProductTileSpec};
use crate::tile::make_tile;
use crate::tiling::TiledSet;

/// The closed n-simplex as a single closed tile, the shortest shelling
/// there is.
pub fn closed_simplex_tiling(n: usize) -> Result<TiledSet> {
    let simplex = Simplex::from_ids(0..=(n as u32))?;
    let mut complex = build_complex(vec![simplex.clone()])?;
    complex.orient_by_id();
    let tile = make_tile(simplex, BTreeSet::new(), None)?;
    Ok(TiledSet::new(complex, vec![tile], true))
}

/// The octahedron with poles 0 and 5 and equator 1-2-3-4, shelled by one
/// closed tile, four basic tiles, one Morse tile pinned at the south pole
/// and two open tiles. The tile list realizes h = (1, 4, 1, 2) and
/// c = (1, 1, 2): neither is palindromic, yet both open tile counts and the
/// Euler identity behave, so the sphere carries Morse shellings that no
/// shelling in the classical sense can mimic.
pub fn octahedron_tiling() -> TiledSet {
    let tiles = [
        (vec![0, 1, 2], vec![], None),
        (vec![0, 2, 3], vec![3], None),
        (vec![0, 3, 4], vec![4], None),
        (vec![0, 1, 4], vec![1, 4], None),
        (vec![1, 2, 5], vec![5], None),
        (vec![3, 4, 5], vec![5], Some(vec![5])),
        (vec![2, 3, 5], vec![2, 3, 5], None),
        (vec![1, 4, 5], vec![1, 4, 5], None),
    ];
    let mut maximal = Vec::new();
    let mut tiled = Vec::new();
    for (simplex, removed, mu) in tiles {
        let simplex = Simplex::from_ids(simplex).expect("octahedron facet");
        maximal.push(simplex.clone());
        let removed = removed.into_iter().map(VertexId).collect();
        let mu = mu.map(|vs| Simplex::from_ids(vs).expect("Morse face"));
        tiled.push(make_tile(simplex, removed, mu).expect("tile shapes are valid"));
    }
    let mut complex = build_complex(maximal).expect("eight facets");
    // 5 is the largest id, so the Morse face {5} sits atop every id order
    complex.orient_by_id();
    TiledSet::new(complex, tiled, true)
}

/// The 2-sphere as a prism over the three-tile circle closed off by two
/// open caps. The six prism tiles all have order one, so h = (0, 6, 0, 2)
/// has no closed tile at all and no reordering is ever a shelling; the
/// partition is still a tame h-tiling with two critical tiles on top.
pub fn capped_cylinder_tiling() -> TiledSet {
    let segment = closed_simplex_tiling(1).expect("segment");
    let circle = boundary_triangle_fan();
    let cylinder =
        product_h_tiling(&segment, &circle).expect("a closed factor satisfies the h condition");
    // product vertices are ring * 3 + circle vertex, so the boundary rings
    // are 0-1-2 and 3-4-5 and their triangles bring no new edges
    let caps = [
        Simplex::from_ids([0, 1, 2]).expect("bottom cap"),
        Simplex::from_ids([3, 4, 5]).expect("top cap"),
    ];
    let mut maximal = cylinder.complex.maximal().to_vec();
    maximal.extend(caps.iter().cloned());
    let mut complex = build_complex(maximal).expect("cylinder plus caps");
    // the circular orientation of the fan would turn cyclic on the filled
    // caps; ids give an order that is acyclic on every tile at once
    complex.orient_by_id();
    let mut tiles = cylinder.tiles;
    for cap in caps {
        let removed = cap.vertices().iter().copied().collect();
        tiles.push(make_tile(cap, removed, None).expect("open triangle"));
    }
    TiledSet::new(complex, tiles, false)
}

/// The handle of index k and dimension n: the open k-simplex times the
/// closed (n-k)-simplex, triangulated by staircases. The result is a Morse
/// shelling with exactly one critical tile, of index k, which is how
/// handle attachments enter the tile calculus.
pub fn handle_tiling(k: usize, n: usize) -> Result<TiledSet> {
    if k > n {
        return Err(Error::InvalidInput(format!(
            "handle index {k} exceeds the dimension {n}"
        )));
    }
    // the open 0-simplex is already closed, so index 0 removes nothing
    let j1: Vec<usize> = if k == 0 { Vec::new() } else { (0..=k).collect() };
    let spec = ProductTileSpec::new(k, n - k, j1, [], None, None)?;
    Ok(tile_product_shelling(&spec)?.0)
}

/// Which product of a tile with a simplex factor to build over the product
/// of an n- and an m-simplex. Each choice shells the product into staircase
/// tiles that are all basic of one single order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoTilesVariant {
    /// The order-n tile on the first factor times the closed m-simplex.
    OrderN,
    /// The closed n-simplex times the order-m tile on the second factor.
    OrderM,
    /// The open n-simplex times the order-1 tile on the second factor.
    OrderNPlusOne,
    /// The order-1 tile on the first factor times the open m-simplex.
    OrderMPlusOne,
}

impl IsoTilesVariant {
    /// The common order of every tile in the resulting shelling.
    pub fn tile_order(self, n: usize, m: usize) -> usize {
        match self {
            IsoTilesVariant::OrderN => n,
            IsoTilesVariant::OrderM => m,
            IsoTilesVariant::OrderNPlusOne => n + 1,
            IsoTilesVariant::OrderMPlusOne => m + 1,
        }
    }
}

/// Shell a tile product whose staircase tiles are pairwise isomorphic; the
/// common order is `variant.tile_order(n, m)`. Both factors must have
/// positive dimension.
pub fn iso_tiles_tiling(n: usize, m: usize, variant: IsoTilesVariant) -> Result<TiledSet> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidInput(
            "single-shape products need both factors of positive dimension".into(),
        ));
    }
    let (j1, j2): (Vec<usize>, Vec<usize>) = match variant {
        IsoTilesVariant::OrderN => ((0..n).collect(), Vec::new()),
        IsoTilesVariant::OrderM => (Vec::new(), (0..m).collect()),
        IsoTilesVariant::OrderNPlusOne => ((0..=n).collect(), vec![0]),
        IsoTilesVariant::OrderMPlusOne => (vec![0], (0..=m).collect()),
    };
    let spec = ProductTileSpec::new(n, m, j1, j2, None, None)?;
    Ok(tile_product_shelling(&spec)?.0)
}

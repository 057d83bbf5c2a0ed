//! Verification and analysis of tilings and shellings.
//!
//! A TiledSet pairs a complex with an ordered list of tiles. The tiles need
//! not cover the whole complex: the tiled subset S is the union of their
//! face sets, and all closure conditions are relative to S. The checks here
//! are independent of the constructions elsewhere in the crate; they consume
//! nothing but the face sets.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::complex::{Orientation, Simplex, SimplicialComplex, VertexId, VertexOrders};
use crate::error::{Error, Result};
use crate::tile::MorseTile;
use crate::vector::{binomial, GradedVector};

#[derive(Clone, Debug)]
pub struct TiledSet {
    pub complex: SimplicialComplex,
    pub tiles: Vec<MorseTile>,
    /// Whether the tile order is claimed to be a shelling order.
    pub is_shelling: bool,
}

impl TiledSet {
    pub fn new(complex: SimplicialComplex, tiles: Vec<MorseTile>, is_shelling: bool) -> Self {
        TiledSet {
            complex,
            tiles,
            is_shelling,
        }
    }

    /// The tiled subset: every face covered by some tile, mapped to the
    /// index of the covering tile. Fails on double coverage.
    pub fn cover(&self) -> Result<BTreeMap<Simplex, usize>> {
        let mut cover = BTreeMap::new();
        for (idx, tile) in self.tiles.iter().enumerate() {
            if !self.complex.has_face(tile.simplex()) {
                return Err(Error::TileNotInComplex { tile_index: idx });
            }
            for face in tile.face_set() {
                if let Some(first) = cover.insert(face.clone(), idx) {
                    return Err(Error::Overlap {
                        face,
                        first,
                        second: idx,
                    });
                }
            }
        }
        Ok(cover)
    }
}

/// Tiles per order: entry k counts tiles with k removed vertices.
pub fn h_vector_tiling(ts: &TiledSet) -> GradedVector {
    let mut h = GradedVector::zeros(ts.complex.dim() + 2);
    for t in &ts.tiles {
        h.add_at(t.order(), 1).expect("tile counts fit in i64");
    }
    h
}

/// Critical tiles per index.
pub fn c_vector_tiling(ts: &TiledSet) -> GradedVector {
    let mut c = GradedVector::zeros(ts.complex.dim() + 1);
    for t in &ts.tiles {
        if let Some(ix) = t.critical_index() {
            c.add_at(ix, 1).expect("tile counts fit in i64");
        }
    }
    c
}

/// Check the tiles partition their union and that, for every j, the union
/// of tiles of dimension at least j is closed inside the tiled subset.
pub fn verify_tiling(ts: &TiledSet) -> Result<()> {
    let cover = ts.cover()?;
    closure_by_dimension(ts, &cover)
}

fn closure_by_dimension(ts: &TiledSet, cover: &BTreeMap<Simplex, usize>) -> Result<()> {
    // Claim: all unions U_j are closed iff along every covered facet step
    // phi > psi the covering dimension does not drop. Facet steps suffice
    // because the condition composes along chains.
    for (face, &idx) in cover {
        if face.len() < 2 {
            continue;
        }
        let level = ts.tiles[idx].dim();
        for v in face.vertices() {
            let facet = Simplex::new(
                face.vertices().iter().copied().filter(|w| w != v).collect(),
            )
            .expect("facet of a non-vertex face");
            if let Some(&other) = cover.get(&facet) {
                if ts.tiles[other].dim() < level {
                    return Err(Error::NotClosed {
                        level,
                        face: facet,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Check the tile order is a shelling: every prefix union is closed in the
/// tiled subset. Implies and includes the tiling checks.
pub fn verify_shelling(ts: &TiledSet) -> Result<()> {
    let cover = ts.cover()?;
    closure_by_dimension(ts, &cover)?;
    for (face, &idx) in &cover {
        if face.len() < 2 {
            continue;
        }
        for v in face.vertices() {
            let facet = Simplex::new(
                face.vertices().iter().copied().filter(|w| w != v).collect(),
            )
            .expect("facet of a non-vertex face");
            if let Some(&other) = cover.get(&facet) {
                if other > idx {
                    return Err(Error::PrefixNotClosed {
                        prefix: idx + 1,
                        face: facet,
                    });
                }
            }
        }
    }
    Ok(())
}

/// Tameness of a tiling with respect to an edge orientation: the
/// orientation must induce a total vertex order on every simplex, and every
/// Morse face must sit at the top of its simplex's order.
pub fn check_tameness(ts: &TiledSet, orientation: &Orientation) -> Result<()> {
    VertexOrders::validate(&ts.complex, orientation)?;
    for (idx, tile) in ts.tiles.iter().enumerate() {
        let Some(mu) = tile.morse_face() else {
            continue;
        };
        for x in tile.simplex().vertices() {
            if mu.contains(*x) {
                continue;
            }
            for y in mu.vertices() {
                if orientation.points_at(*x, *y) != Some(true) {
                    return Err(Error::MorseFaceOrder {
                        tile_index: idx,
                        edge: (x.0, y.0),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Tameness against the orientation stored on the complex.
pub fn check_tameness_attached(ts: &TiledSet) -> Result<()> {
    let orientation = ts.complex.orientation().ok_or(Error::MissingOrientation)?;
    check_tameness(ts, orientation)
}

/// A global order putting all Morse-face vertices in a terminal block; for
/// tilings whose Morse faces restrict compatibly this produces a tame
/// orientation. Heuristic: it is not guaranteed to succeed.
pub fn suggest_orientation(ts: &TiledSet) -> Orientation {
    let mu_vertices: BTreeSet<VertexId> = ts
        .tiles
        .iter()
        .filter_map(|t| t.morse_face())
        .flat_map(|mu| mu.vertices().iter().copied())
        .collect();
    let mut rank = BTreeMap::new();
    let mut next = 0usize;
    for v in ts.complex.vertices() {
        if !mu_vertices.contains(v) {
            rank.insert(*v, next);
            next += 1;
        }
    }
    for v in &mu_vertices {
        rank.insert(*v, next);
        next += 1;
    }
    Orientation::by_rank(&ts.complex.edges(), &rank).expect("rank is injective and total")
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CriticalCount {
    pub index: usize,
    pub count: i64,
}

/// Everything `analyze` finds out about a tiling.
#[derive(Clone, Debug, Serialize)]
pub struct TilingReport {
    pub dimension: usize,
    pub tile_count: usize,
    pub valid_partition: bool,
    pub valid_closure: bool,
    pub valid_shelling: bool,
    /// None when the complex carries no orientation to check against.
    pub tame: Option<bool>,
    pub pure: bool,
    pub covers_complex: bool,
    pub h: GradedVector,
    pub c: GradedVector,
    pub palindromic_h: bool,
    pub palindromic_c: bool,
    pub euler: i64,
    pub euler_identity: bool,
    pub critical_tiles: Vec<CriticalCount>,
    /// For h-tilings of even dimension on a claimed closed manifold:
    /// h_i - h_(n+1-i) = (-1)^i binom(n+1, i) (h_0 - h_(n+1)) for all i.
    pub dehn_sommerville_even_relation: Option<bool>,
    /// For claimed closed manifolds of dimension at most 3: equality of open
    /// and closed tile counts, palindromic c and palindromic h are
    /// equivalent; this flag records whether the three agree.
    pub open_closed_palindromy_equivalence: Option<bool>,
    pub witnesses: Vec<String>,
}

/// Run every check and collect the results. Never fails; defects end up as
/// flags plus witness strings.
pub fn analyze(ts: &TiledSet, closed_manifold_hint: bool) -> TilingReport {
    let n = ts.complex.dim();
    let mut witnesses = Vec::new();

    let (valid_partition, valid_closure) = match verify_tiling(ts) {
        Ok(()) => (true, true),
        Err(e @ (Error::Overlap { .. } | Error::TileNotInComplex { .. })) => {
            witnesses.push(e.to_string());
            (false, false)
        }
        Err(e) => {
            witnesses.push(e.to_string());
            (true, false)
        }
    };
    let valid_shelling = match verify_shelling(ts) {
        Ok(()) => true,
        Err(e) => {
            if valid_partition && valid_closure {
                witnesses.push(e.to_string());
            }
            false
        }
    };
    let tame = ts.complex.orientation().map(|o| match check_tameness(ts, o) {
        Ok(()) => true,
        Err(e) => {
            witnesses.push(e.to_string());
            false
        }
    });

    let h = h_vector_tiling(ts);
    let c = c_vector_tiling(ts);
    let pure = ts.tiles.iter().all(|t| t.dim() == n);
    let all_basic = ts.tiles.iter().all(MorseTile::is_basic);

    // Euler characteristic of the tiled subset, measured on raw faces; the
    // identity compares it against the alternating critical count.
    let mut covered = BTreeSet::new();
    for t in &ts.tiles {
        covered.extend(t.face_set());
    }
    let euler: i64 = covered
        .iter()
        .map(|s| if s.dim() % 2 == 0 { 1i64 } else { -1 })
        .sum();
    let euler_identity = c.alternating_sum().map(|v| v == euler).unwrap_or(false);
    let covers_complex = covered.len() == ts.complex.faces().len();

    let critical_tiles = c
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &count)| count != 0)
        .map(|(index, &count)| CriticalCount { index, count })
        .collect();

    let dehn_sommerville_even_relation = if closed_manifold_hint && all_basic && n % 2 == 0 {
        Some(even_dimension_relation(&h, n))
    } else {
        None
    };

    let open_closed_palindromy_equivalence = if closed_manifold_hint && n <= 3 {
        let open = ts.tiles.iter().filter(|t| t.order() == t.dim() + 1).count();
        let closed = ts.tiles.iter().filter(|t| t.order() == 0).count();
        let balanced = open == closed;
        Some(balanced == c.is_palindromic() && c.is_palindromic() == h.is_palindromic())
    } else {
        None
    };

    TilingReport {
        dimension: n,
        tile_count: ts.tiles.len(),
        valid_partition,
        valid_closure,
        valid_shelling,
        tame,
        pure,
        covers_complex,
        palindromic_h: h.is_palindromic(),
        palindromic_c: c.is_palindromic(),
        h,
        c,
        euler,
        euler_identity,
        critical_tiles,
        dehn_sommerville_even_relation,
        open_closed_palindromy_equivalence,
        witnesses,
    }
}

fn even_dimension_relation(h: &GradedVector, n: usize) -> bool {
    let gap = h.entry(0) - h.entry(n + 1);
    (0..=(n + 1)).all(|i| {
        let rhs = binomial((n + 1) as u64, i as u64)
            .map(|b| if i % 2 == 0 { b * gap } else { -b * gap });
        match rhs {
            Ok(r) => h.entry(i) - h.entry(n + 1 - i) == r,
            Err(_) => false,
        }
    })
}

//! Products of Morse-tiled sets.
//!
//! A tame tiled set carries a total order on the vertices of each of its
//! simplices, read off the edge orientation of its complex. Given two tame
//! sets, every pair of maximal simplices spans a prism which the staircase
//! simplices of [`crate::product_simplex`] triangulate in those orders, and
//! the prisms agree along shared boundaries because all the orders restrict
//! from the same two global orientations. Every pair of tiles likewise cuts
//! a shelled family of Morse tiles out of its prism; concatenating the
//! families in lexicographic (first tile, second tile, staircase) order
//! tiles the whole product, and is a shelling whenever both inputs are.
//!
//! The second half of the module builds the sphere and circle factors the
//! torus constructions multiply together, and the walk-weight formula their
//! h-vectors follow.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::complex::{build_complex, Orientation, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::product_simplex::{
    decode_vertex, staircase_simplex, tile_product_shelling, ProductTileSpec,
};
use crate::staircase::{enumerate_staircases, staircase_count};
use crate::tile::{make_tile, recognize_tile, MorseTile};
use crate::tiling::{check_tameness_attached, h_vector_tiling, verify_tiling, TiledSet};
use crate::vector::{checked_pow, GradedVector};

/// A grade record w(n), ..., w(n+m) with every step adding zero or one.
///
/// Walks trace how tile orders evolve under repeated multiplication with the
/// three-tile circle: a flat step keeps the order of a tile pair, a rising
/// step bumps it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    offset: usize,
    values: Vec<usize>,
}

impl Walk {
    pub fn start(&self) -> usize {
        self.values[0]
    }

    pub fn end(&self) -> usize {
        *self.values.last().expect("walks store at least one value")
    }

    /// The recorded values, indexed from the offset grade.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Product over all steps of the value reached on a flat step and of
    /// (position + 1 - value) on a rising step.
    pub fn weight(&self) -> i64 {
        let mut w: i64 = 1;
        for (t, pair) in self.values.windows(2).enumerate() {
            let position = (self.offset + t + 1) as i64;
            let value = pair[1] as i64;
            let factor = if pair[0] == pair[1] {
                value
            } else {
                position + 1 - value
            };
            w = w.checked_mul(factor).expect("walk weights stay small");
        }
        w
    }
}

/// All walks of length `m` starting at some grade in {0, ..., n+1} and
/// ending at `k`, in lexicographic order of their value records.
pub fn enumerate_walks(n: usize, m: usize, k: usize) -> Vec<Walk> {
    let mut out = Vec::new();
    for a in 0..=(n + 1) {
        let mut values = Vec::with_capacity(m + 1);
        values.push(a);
        grow_walk(n, m, k, &mut values, &mut out);
    }
    out
}

fn grow_walk(n: usize, m: usize, k: usize, values: &mut Vec<usize>, out: &mut Vec<Walk>) {
    let last = *values.last().expect("start value is pushed first");
    let steps_left = m + 1 - values.len();
    if last > k || last + steps_left < k {
        return;
    }
    if steps_left == 0 {
        out.push(Walk {
            offset: n,
            values: values.clone(),
        });
        return;
    }
    for next in [last, last + 1] {
        values.push(next);
        grow_walk(n, m, k, values, out);
        values.pop();
    }
}

pub fn walk_weight(w: &Walk) -> i64 {
    w.weight()
}

/// The h-vector of the product of the shelled n-sphere with m circle
/// factors, as a sum of walk weights per end grade.
pub fn h_from_walks(n: usize, m: usize) -> GradedVector {
    let mut h = GradedVector::zeros(n + m + 2);
    for k in 0..=(n + m + 1) {
        let total: i64 = enumerate_walks(n, m, k).iter().map(Walk::weight).sum();
        h.add_at(k, total).expect("walk sums stay small");
    }
    h
}

/// The boundary of the (n+1)-simplex, shelled facet by facet: the tile
/// missing vertex j is deprived of its facets opposite 0, ..., j-1, so the
/// orders run through 0, ..., n+1 once and the h-vector is all ones.
pub fn boundary_simplex_shelling(n: usize) -> TiledSet {
    let top = n as u32 + 1;
    let mut maximal = Vec::new();
    let mut tiles = Vec::new();
    for j in 0..=top {
        let simplex =
            Simplex::from_ids((0..=top).filter(|&v| v != j)).expect("boundary facet");
        let removed = (0..j).map(VertexId).collect();
        maximal.push(simplex.clone());
        tiles.push(make_tile(simplex, removed, None).expect("prefix removal is valid"));
    }
    let mut complex = build_complex(maximal).expect("boundary is nonempty");
    complex.orient_by_id();
    TiledSet::new(complex, tiles, true)
}

/// The three-tile circle: each edge of the triangle boundary keeps the
/// faces containing one vertex, cyclically, so every tile is deprived of
/// the facet opposite its greatest vertex. No proper prefix is closed,
/// hence no reordering makes this a shelling; it is nevertheless a tame
/// h-tiling and the circle factor of the cylinder and torus constructions.
pub fn boundary_triangle_fan() -> TiledSet {
    let mut maximal = Vec::new();
    let mut tiles = Vec::new();
    for (kept, other) in [(0u32, 1u32), (1, 2), (2, 0)] {
        let simplex = Simplex::from_ids([kept, other]).expect("edge");
        maximal.push(simplex.clone());
        let removed = BTreeSet::from([VertexId(kept)]);
        tiles.push(make_tile(simplex, removed, None).expect("edge tile"));
    }
    let mut complex = build_complex(maximal).expect("triangle boundary");
    let orientation = Orientation::from_pairs([
        (VertexId(1), VertexId(0)),
        (VertexId(2), VertexId(1)),
        (VertexId(0), VertexId(2)),
    ])
    .expect("three distinct edges");
    complex
        .set_orientation(orientation)
        .expect("orientation covers the triangle boundary");
    TiledSet::new(complex, tiles, false)
}

/// Orders of the product tiles cut out of one tile pair, in emission order,
/// tagged with the index of the first-factor tile.
struct PairTiles {
    first: usize,
    orders: Vec<usize>,
}

fn glue_vertex(local: VertexId, first: &[VertexId], second: &[VertexId], stride: u32) -> u32 {
    let pv = decode_vertex(local, second.len() - 1);
    first[pv.first].0 * stride + second[pv.second].0
}

fn glue_simplex(
    s: &Simplex,
    first: &[VertexId],
    second: &[VertexId],
    stride: u32,
) -> Simplex {
    Simplex::from_ids(
        s.vertices()
            .iter()
            .map(|&v| glue_vertex(v, first, second, stride)),
    )
    .expect("factor orders are injective")
}

fn glue_tile(
    tile: &MorseTile,
    first: &[VertexId],
    second: &[VertexId],
    stride: u32,
) -> Result<MorseTile> {
    make_tile(
        glue_simplex(tile.simplex(), first, second, stride),
        tile.removed()
            .iter()
            .map(|&v| VertexId(glue_vertex(v, first, second, stride)))
            .collect(),
        tile.morse_face()
            .map(|mu| glue_simplex(mu, first, second, stride)),
    )
}

/// Read a tile off the tame order of its simplex: removed facets as
/// positions, the Morse face as the start of its terminal block.
fn tile_positions(tile: &MorseTile, order: &[VertexId]) -> (BTreeSet<usize>, Option<usize>) {
    let pos: BTreeMap<VertexId, usize> =
        order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let j = tile.removed().iter().map(|v| pos[v]).collect();
    let cut = tile.morse_face().map(|mu| {
        let cut = order.len() - mu.len();
        // tameness pins Morse-face vertices to the top of the order
        assert!(
            mu.vertices().iter().all(|v| pos[v] >= cut),
            "tame Morse face is not a terminal block of {order:?}"
        );
        cut
    });
    (j, cut)
}

/// Orient each product edge by its first factor when the first coordinates
/// differ and by its second factor otherwise. On every staircase simplex
/// this agrees with the componentwise order of its vertex chain.
fn product_orientation(
    complex: &SimplicialComplex,
    first: &Orientation,
    second: &Orientation,
    stride: u32,
) -> Result<Orientation> {
    let mut pairs = Vec::new();
    for e in complex.edges() {
        let vs = e.vertices();
        let (a, b) = (vs[0], vs[1]);
        let (a1, a2) = (a.0 / stride, a.0 % stride);
        let (b1, b2) = (b.0 / stride, b.0 % stride);
        let towards_b = if a1 == b1 {
            second
                .points_at(VertexId(a2), VertexId(b2))
                .ok_or(Error::UnorientedEdge(a2, b2))?
        } else {
            first
                .points_at(VertexId(a1), VertexId(b1))
                .ok_or(Error::UnorientedEdge(a1, b1))?
        };
        pairs.push(if towards_b { (a, b) } else { (b, a) });
    }
    Orientation::from_pairs(pairs)
}

fn product_tiling_impl(s1: &TiledSet, s2: &TiledSet) -> Result<(TiledSet, Vec<PairTiles>)> {
    check_tameness_attached(s1)?;
    check_tameness_attached(s2)?;
    let orders1 = s1.complex.derive_vertex_orders()?;
    let orders2 = s2.complex.derive_vertex_orders()?;
    let stride = s2.complex.max_vertex_id() + 1;

    let mut maximal = Vec::new();
    let mut expected: i64 = 0;
    for a in s1.complex.maximal() {
        let oa = orders1.order(a)?;
        for b in s2.complex.maximal() {
            let ob = orders2.order(b)?;
            expected += staircase_count(a.dim(), b.dim())?;
            for stair in enumerate_staircases(a.dim(), b.dim())? {
                maximal.push(glue_simplex(&staircase_simplex(&stair), &oa, &ob, stride));
            }
        }
    }
    let mut complex = build_complex(maximal)?;
    // a staircase simplex spans its whole cell pair, so distinct pairs can
    // neither share nor nest top simplices and none may collapse away
    if complex.maximal().len() as i64 != expected {
        return Err(Error::InvalidComplex(format!(
            "glued product triangulation kept {} of {expected} simplices",
            complex.maximal().len()
        )));
    }
    let orientation = product_orientation(
        &complex,
        s1.complex.orientation().expect("tameness was checked"),
        s2.complex.orientation().expect("tameness was checked"),
        stride,
    )?;
    complex.set_orientation(orientation)?;
    // global acyclicity of the glued orders, not assumed
    complex.derive_vertex_orders()?;

    let mut tiles = Vec::new();
    let mut census = Vec::new();
    for (k, t1) in s1.tiles.iter().enumerate() {
        let oa = orders1.order(t1.simplex())?;
        let (j1, k1) = tile_positions(t1, &oa);
        for t2 in &s2.tiles {
            let ob = orders2.order(t2.simplex())?;
            let (j2, k2) = tile_positions(t2, &ob);
            let spec = ProductTileSpec::new(
                t1.dim(),
                t2.dim(),
                j1.iter().copied(),
                j2.iter().copied(),
                k1,
                k2,
            )?;
            let (local, _family) = tile_product_shelling(&spec)?;
            let mut orders = Vec::with_capacity(local.tiles.len());
            for tile in &local.tiles {
                let glued = glue_tile(tile, &oa, &ob, stride)?;
                orders.push(glued.order());
                tiles.push(glued);
            }
            census.push(PairTiles { first: k, orders });
        }
    }
    let out = TiledSet::new(complex, tiles, s1.is_shelling && s2.is_shelling);
    check_tameness_attached(&out)?;
    Ok((out, census))
}

/// Tile the product of two tame tiled sets, in lexicographic (first tile,
/// second tile, staircase) order. The result is a shelling when both inputs
/// are, its critical tiles are the products of critical pairs with indices
/// adding, and its complex carries the componentwise orientation, so
/// products can be iterated.
pub fn product_tiling(s1: &TiledSet, s2: &TiledSet) -> Result<TiledSet> {
    Ok(product_tiling_impl(s1, s2)?.0)
}

/// Whether each tile is deprived of the facet opposite its least vertex and
/// of the one opposite its greatest.
fn extreme_removals(s: &TiledSet) -> Result<Vec<(bool, bool)>> {
    let orders = s.complex.derive_vertex_orders()?;
    s.tiles
        .iter()
        .map(|t| {
            let o = orders.order(t.simplex())?;
            let least = o[0];
            let greatest = *o.last().expect("simplices are nonempty");
            Ok((t.removed().contains(&least), t.removed().contains(&greatest)))
        })
        .collect()
}

fn product_h_tiling_impl(s1: &TiledSet, s2: &TiledSet) -> Result<(TiledSet, Vec<PairTiles>)> {
    for (which, s) in [("first", s1), ("second", s2)] {
        if let Some(i) = s.tiles.iter().position(|t| !t.is_basic()) {
            return Err(Error::NotHTiling(format!(
                "tile {i} of the {which} factor has a Morse face"
            )));
        }
    }
    // a tile deprived of both extreme facets forces every partner tile to
    // give up one of its own
    let e1 = extreme_removals(s1)?;
    let e2 = extreme_removals(s2)?;
    let both1 = e1.iter().position(|&(lo, hi)| lo && hi);
    let both2 = e2.iter().position(|&(lo, hi)| lo && hi);
    let neither1 = e1.iter().position(|&(lo, hi)| !lo && !hi);
    let neither2 = e2.iter().position(|&(lo, hi)| !lo && !hi);
    if let (Some(k), Some(l)) = (both1, neither2) {
        return Err(Error::ConditionHViolated(k, l));
    }
    if let (Some(k), Some(l)) = (neither1, both2) {
        return Err(Error::ConditionHViolated(k, l));
    }
    let (out, census) = product_tiling_impl(s1, s2)?;
    for (i, tile) in out.tiles.iter().enumerate() {
        if !recognize_tile(&tile.face_set())?.is_basic() {
            return Err(Error::NotHTiling(format!(
                "product tile {i} came out non-basic"
            )));
        }
    }
    Ok((out, census))
}

/// Product of two h-tilings whose extreme facet removals are compatible;
/// the output is certified all-basic by re-recognizing every tile from its
/// face set.
pub fn product_h_tiling(s1: &TiledSet, s2: &TiledSet) -> Result<TiledSet> {
    Ok(product_h_tiling_impl(s1, s2)?.0)
}

/// A measured h-vector next to a closed-formula candidate and an integer
/// rescaling of that candidate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaComparison {
    pub measured: GradedVector,
    pub formula: GradedVector,
    pub scaled: GradedVector,
    pub scale: i64,
    pub matches_formula: bool,
    pub matches_scaled: bool,
}

impl FormulaComparison {
    fn new(measured: GradedVector, formula: GradedVector, scale: i64) -> Result<Self> {
        let scaled = formula.scaled(scale)?;
        Ok(FormulaComparison {
            matches_formula: measured == formula,
            matches_scaled: measured == scaled,
            measured,
            formula,
            scaled,
            scale,
        })
    }
}

/// Multiply a pure h-tiled set with the three-tile circle and compare the
/// measured h-vector against h_j = j h_j(S) + (n+2-j) h_{j-1}(S) and
/// against three times that value.
///
/// Each tile pair must come out as ord(T) product tiles of order ord(T) and
/// n+1-ord(T) of order ord(T)+1; the construction asserts this bookkeeping.
pub fn delta2_product(s: &TiledSet) -> Result<(TiledSet, FormulaComparison)> {
    let n = s.tiles.first().map(MorseTile::dim).ok_or(Error::NotPure)?;
    if s.tiles.iter().any(|t| t.dim() != n) {
        return Err(Error::NotPure);
    }
    if let Some(i) = s.tiles.iter().position(|t| !t.is_basic()) {
        return Err(Error::NotHTiling(format!("tile {i} has a Morse face")));
    }
    let (out, census) = product_h_tiling_impl(s, &boundary_triangle_fan())?;
    for pair in &census {
        let ord = s.tiles[pair.first].order();
        let low = pair.orders.iter().filter(|&&o| o == ord).count();
        let high = pair.orders.iter().filter(|&&o| o == ord + 1).count();
        assert!(
            low == ord && high == n + 1 - ord && low + high == pair.orders.len(),
            "tile {} of order {ord} multiplied into orders {:?}",
            pair.first,
            pair.orders
        );
    }
    let hs = h_vector_tiling(s);
    let mut formula = GradedVector::zeros(n + 3);
    for j in 0..=(n + 2) {
        let value = j as i64 * hs.entry(j) + (n + 2 - j) as i64 * hs.entry(j.wrapping_sub(1));
        formula.add_at(j, value)?;
    }
    let comparison = FormulaComparison::new(h_vector_tiling(&out), formula, 3)?;
    Ok((out, comparison))
}

/// Iterated product of the shelled n-sphere boundary with m circle factors,
/// verified as a tiling; the measured h-vector is reported against the walk
/// formula and its 3^m rescaling.
pub fn sphere_torus_tiling(n: usize, m: usize) -> Result<(TiledSet, FormulaComparison)> {
    let fan = boundary_triangle_fan();
    let mut out = boundary_simplex_shelling(n);
    for _ in 0..m {
        out = product_h_tiling(&out, &fan)?;
    }
    verify_tiling(&out)?;
    let comparison = FormulaComparison::new(
        h_vector_tiling(&out),
        h_from_walks(n, m),
        checked_pow(3, m as u32)?,
    )?;
    Ok((out, comparison))
}

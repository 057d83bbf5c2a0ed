//! Mixed decompositions of the standard simplex.
//!
//! A staircase of `I(n, m)` together with strictly positive weights
//! α_0, .., α_n summing to one determines a Minkowski cell
//! Δ_{I,α} = α_0 Δ_{I_0} + .. + α_n Δ_{I_n} inside the m-simplex. Listed in
//! lexicographic staircase order the cells cover the simplex and every
//! prefix union of cells equals the matching prefix union of pieces, where
//! the piece of a cell is the cell stripped of the walls it shares with
//! earlier cells. The pieces are pairwise disjoint, so they partition the
//! simplex. Membership runs on the inequality description
//!
//! ```text
//! λ_0 + .. + λ_{e(j)-1}  ≤  α_0 + .. + α_j  ≤  λ_0 + .. + λ_{e(j)}   for all j,
//! ```
//!
//! where λ are the barycentric coordinates of the point and e is the end
//! function of the staircase. A piece further requires the left inequality
//! to be strict for every j < n whose interval keeps more than one vertex.
//! Everything is exact rational arithmetic; nothing in this module takes a
//! tolerance.
//!
//! The planar case m = 2 can be drawn: [`export_svg`] renders the cells of
//! the triangle as labelled polygons and dashes every wall that a piece
//! cedes to an earlier piece.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num::{BigInt, BigRational, Integer as _, One, Signed, ToPrimitive as _, Zero};

use crate::error::{Error, Result};
use crate::staircase::{enumerate_staircases, Staircase};

// SVG layout, fixed so exports are byte reproducible.
const SVG_SIZE: (i64, i64) = (800, 600);
/// Pixel corners of the drawn triangle, carrying λ_0, λ_1, λ_2.
const CORNERS: [(i64, i64); 3] = [(40, 560), (760, 560), (400, 40)];
/// Anchors of the corner labels, slightly outside the triangle.
const CORNER_LABELS: [(i64, i64); 3] = [(24, 584), (776, 584), (400, 24)];
/// Cell fills, cycled in staircase order.
const PALETTE: [&str; 6] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
];

/// A point of the standard m-simplex in exact barycentric coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RationalPoint {
    coords: Vec<BigRational>,
}

impl RationalPoint {
    /// Wraps barycentric coordinates; they must be non-negative and sum to one.
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidInput(
                "a barycentric point needs at least one coordinate".into(),
            ));
        }
        if coords.iter().any(|l| l.is_negative()) {
            return Err(Error::InvalidInput(
                "barycentric coordinates must be non-negative".into(),
            ));
        }
        let total = coords.iter().fold(BigRational::zero(), |acc, l| acc + l);
        if !total.is_one() {
            return Err(Error::InvalidInput(format!(
                "barycentric coordinates must sum to 1, got {total}"
            )));
        }
        Ok(Self { coords })
    }

    /// The point with coordinates `numerators[i] / denominator`.
    pub fn from_fractions(numerators: &[i64], denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Self::new(
            numerators
                .iter()
                .map(|&p| BigRational::new(BigInt::from(p), BigInt::from(denominator)))
                .collect(),
        )
    }

    /// The i-th vertex of the m-simplex.
    pub fn vertex(m: usize, i: usize) -> Result<Self> {
        if i > m {
            return Err(Error::InvalidInput(format!(
                "vertex {i} outside 0..={m}"
            )));
        }
        let mut coords = vec![BigRational::zero(); m + 1];
        coords[i] = BigRational::one();
        Ok(Self { coords })
    }

    pub fn m(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    // prefix_sums()[e] = λ_0 + .. + λ_{e-1}, length m + 2
    fn prefix_sums(&self) -> Vec<BigRational> {
        let mut acc = BigRational::zero();
        let mut out = Vec::with_capacity(self.coords.len() + 1);
        out.push(acc.clone());
        for l in &self.coords {
            acc += l;
            out.push(acc.clone());
        }
        out
    }
}

/// A Minkowski cell Δ_{I,α}: a staircase with strictly positive weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedCell {
    staircase: Staircase,
    weights: Vec<BigRational>,
}

impl MixedCell {
    /// Requires one strictly positive weight per interval, summing to one.
    pub fn new(staircase: Staircase, weights: Vec<BigRational>) -> Result<Self> {
        if weights.len() != staircase.n() + 1 {
            return Err(Error::InvalidInput(format!(
                "{} weights for {} intervals",
                weights.len(),
                staircase.n() + 1
            )));
        }
        if weights.iter().any(|a| !a.is_positive()) {
            return Err(Error::InvalidInput(
                "cell weights must be strictly positive".into(),
            ));
        }
        let total = weights.iter().fold(BigRational::zero(), |acc, a| acc + a);
        if !total.is_one() {
            return Err(Error::InvalidInput(format!(
                "cell weights must sum to 1, got {total}"
            )));
        }
        Ok(Self { staircase, weights })
    }

    /// The cell with every weight 1 / (n + 1).
    pub fn uniform(staircase: Staircase) -> Self {
        let share = BigRational::new(BigInt::one(), BigInt::from(staircase.n() as i64 + 1));
        let weights = vec![share; staircase.n() + 1];
        Self { staircase, weights }
    }

    pub fn staircase(&self) -> &Staircase {
        &self.staircase
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }

    pub fn n(&self) -> usize {
        self.staircase.n()
    }

    pub fn m(&self) -> usize {
        self.staircase.m()
    }

    // weight_prefixes()[j] = α_0 + .. + α_j
    fn weight_prefixes(&self) -> Vec<BigRational> {
        let mut acc = BigRational::zero();
        self.weights
            .iter()
            .map(|a| {
                acc += a;
                acc.clone()
            })
            .collect()
    }
}

/// Whether `p` lies in the cell, by the exact inequality description.
pub fn cell_contains(cell: &MixedCell, p: &RationalPoint) -> bool {
    assert_eq!(cell.m(), p.m(), "point and cell live in different simplices");
    let pre = p.prefix_sums();
    let cut = cell.weight_prefixes();
    (0..=cell.n()).all(|j| {
        let e = cell.staircase.end(j);
        pre[e] <= cut[j] && cut[j] <= pre[e + 1]
    })
}

/// Whether `p` lies in the piece of the cell: cell membership plus a strict
/// left inequality at every j < n whose interval is not a single vertex. The
/// walls where equality holds are exactly the ones shared with
/// lexicographically earlier cells, so the pieces partition the simplex.
pub fn piece_contains(cell: &MixedCell, p: &RationalPoint) -> bool {
    if !cell_contains(cell, p) {
        return false;
    }
    let pre = p.prefix_sums();
    let cut = cell.weight_prefixes();
    (0..cell.n())
        .all(|j| cell.staircase.interval_len(j) == 1 || pre[cell.staircase.end(j)] < cut[j])
}

/// Intersection of two cells over the same weights: the weighted sum of the
/// interval intersections, empty as soon as one of them is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellFace {
    Empty,
    Sum {
        /// Inclusive vertex bounds of I_j ∩ I'_j, one pair per weight.
        intervals: Vec<(usize, usize)>,
        weights: Vec<BigRational>,
    },
}

impl CellFace {
    /// The whole cell, seen as a face of itself.
    pub fn of_cell(cell: &MixedCell) -> Self {
        CellFace::Sum {
            intervals: (0..=cell.n())
                .map(|j| (cell.staircase.begin(j), cell.staircase.end(j)))
                .collect(),
            weights: cell.weights.clone(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, CellFace::Empty)
    }
}

/// Common face of two cells of the same mixed decomposition.
pub fn cell_intersection(c1: &MixedCell, c2: &MixedCell) -> CellFace {
    assert_eq!(c1.n(), c2.n(), "cells come from different decompositions");
    assert_eq!(c1.m(), c2.m(), "cells live in different simplices");
    assert_eq!(c1.weights, c2.weights, "cells carry different weights");
    let mut intervals = Vec::with_capacity(c1.n() + 1);
    for j in 0..=c1.n() {
        let lo = c1.staircase.begin(j).max(c2.staircase.begin(j));
        let hi = c1.staircase.end(j).min(c2.staircase.end(j));
        if lo > hi {
            return CellFace::Empty;
        }
        intervals.push((lo, hi));
    }
    CellFace::Sum {
        intervals,
        weights: c1.weights.clone(),
    }
}

/// Every weighted vertex choice Σ_j α_j v_{i_j} with i_j ∈ I_j, deduplicated
/// and sorted. The cell is the convex hull of these points.
pub fn minkowski_points(cell: &MixedCell) -> Vec<RationalPoint> {
    let n = cell.n();
    let mut choice: Vec<usize> = (0..=n).map(|j| cell.staircase.begin(j)).collect();
    let mut seen: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    loop {
        let mut coords = vec![BigRational::zero(); cell.m() + 1];
        for (j, &i) in choice.iter().enumerate() {
            coords[i] += &cell.weights[j];
        }
        seen.insert(coords);
        // odometer over the intervals
        let mut j = 0;
        loop {
            if j > n {
                return seen
                    .into_iter()
                    .map(|coords| RationalPoint { coords })
                    .collect();
            }
            if choice[j] < cell.staircase.end(j) {
                choice[j] += 1;
                for t in 0..j {
                    choice[t] = cell.staircase.begin(t);
                }
                break;
            }
            j += 1;
        }
    }
}

fn to_pixel(p: &RationalPoint) -> (BigRational, BigRational) {
    let mut x = BigRational::zero();
    let mut y = BigRational::zero();
    for (l, &(cx, cy)) in p.coords().iter().zip(CORNERS.iter()) {
        x += l * BigRational::from_integer(BigInt::from(cx));
        y += l * BigRational::from_integer(BigInt::from(cy));
    }
    (x, y)
}

// positive exactly when o -> a -> b turns left
fn cross(
    o: &(BigRational, BigRational),
    a: &(BigRational, BigRational),
    b: &(BigRational, BigRational),
) -> BigRational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

// Monotone chain over sorted distinct points; counter-clockwise indices,
// collinear midpoints dropped.
fn convex_hull(points: &[(BigRational, BigRational)]) -> Vec<usize> {
    if points.len() <= 2 {
        return (0..points.len()).collect();
    }
    let keeps_turning = |chain: &[usize], i: usize| {
        let o = &points[chain[chain.len() - 2]];
        let a = &points[chain[chain.len() - 1]];
        cross(o, a, &points[i]).is_positive()
    };
    let mut lower: Vec<usize> = Vec::new();
    for i in 0..points.len() {
        while lower.len() >= 2 && !keeps_turning(&lower, i) {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for i in (0..points.len()).rev() {
        while upper.len() >= 2 && !keeps_turning(&upper, i) {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

// two-decimal fixed point, rounding half up
fn px_str(v: &BigRational) -> String {
    let shifted = v * BigRational::from_integer(BigInt::from(100))
        + BigRational::new(BigInt::one(), BigInt::from(2));
    let hundredths = shifted.floor().to_integer();
    let sign = if hundredths.is_negative() { "-" } else { "" };
    let (whole, cents) = hundredths.abs().div_rem(&BigInt::from(100));
    format!("{sign}{whole}.{:02}", cents.to_u32().expect("cents below 100"))
}

/// Renders the mixed decomposition of the triangle (m = 2) for the given
/// weights as a standalone SVG document. One labelled polygon per cell in
/// staircase order; dashed strokes mark the walls each piece cedes to
/// earlier pieces. The output is deterministic byte for byte.
pub fn export_svg(n: usize, m: usize, weights: &[BigRational]) -> Result<String> {
    if m != 2 {
        return Err(Error::UnsupportedDimension(format!(
            "can only draw the triangle m = 2, got m = {m}"
        )));
    }
    let cells: Vec<MixedCell> = enumerate_staircases(n, m)?
        .into_iter()
        .map(|s| MixedCell::new(s, weights.to_vec()))
        .collect::<Result<_>>()?;

    let mut svg = String::new();
    let mut walls: Vec<(String, String, String, String)> = Vec::new();
    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {} {}" font-family="monospace">"#,
        SVG_SIZE.0, SVG_SIZE.1
    )
    .unwrap();

    writeln!(svg, r##"  <g stroke="#444444" stroke-width="1.5">"##).unwrap();
    for (idx, cell) in cells.iter().enumerate() {
        let candidates = minkowski_points(cell);
        let mut proj: Vec<((BigRational, BigRational), usize)> = candidates
            .iter()
            .enumerate()
            .map(|(i, p)| (to_pixel(p), i))
            .collect();
        proj.sort();
        let pix: Vec<(BigRational, BigRational)> = proj.iter().map(|(q, _)| q.clone()).collect();
        let hull = convex_hull(&pix);

        let outline = hull
            .iter()
            .map(|&h| format!("{},{}", px_str(&pix[h].0), px_str(&pix[h].1)))
            .collect::<Vec<_>>()
            .join(" ");
        let count = BigRational::from_integer(BigInt::from(hull.len() as i64));
        let cx = hull
            .iter()
            .fold(BigRational::zero(), |acc, &h| acc + &pix[h].0)
            / &count;
        let cy = hull
            .iter()
            .fold(BigRational::zero(), |acc, &h| acc + &pix[h].1)
            / &count;
        let label = cell
            .staircase
            .ends()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",");

        writeln!(svg, r#"    <g class="cell">"#).unwrap();
        writeln!(
            svg,
            r#"      <polygon points="{outline}" fill="{}" fill-opacity="0.6"/>"#,
            PALETTE[idx % PALETTE.len()]
        )
        .unwrap();
        writeln!(
            svg,
            r##"      <text x="{}" y="{}" text-anchor="middle" font-size="15" stroke="none" fill="#1a1a1a">{label}</text>"##,
            px_str(&cx),
            px_str(&cy)
        )
        .unwrap();
        writeln!(svg, r#"    </g>"#).unwrap();

        // walls the piece gives up: left equality attained, one per j
        let cut = cell.weight_prefixes();
        for j in 0..cell.n() {
            if cell.staircase.interval_len(j) == 1 {
                continue;
            }
            let e = cell.staircase.end(j);
            let mut on_wall: Vec<&(BigRational, BigRational)> = hull
                .iter()
                .filter(|&&h| candidates[proj[h].1].prefix_sums()[e] == cut[j])
                .map(|&h| &pix[h])
                .collect();
            on_wall.sort();
            debug_assert!(on_wall.len() <= 2, "a wall is a vertex or an edge");
            if on_wall.len() == 2 {
                walls.push((
                    px_str(&on_wall[0].0),
                    px_str(&on_wall[0].1),
                    px_str(&on_wall[1].0),
                    px_str(&on_wall[1].1),
                ));
            }
        }
    }
    writeln!(svg, r#"  </g>"#).unwrap();

    writeln!(
        svg,
        r##"  <g class="walls" stroke="#b03030" stroke-width="2.5" stroke-dasharray="7 5">"##
    )
    .unwrap();
    for (x1, y1, x2, y2) in &walls {
        writeln!(svg, r#"    <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#).unwrap();
    }
    writeln!(svg, r#"  </g>"#).unwrap();

    let frame = CORNERS
        .iter()
        .map(|&(x, y)| format!("{x},{y}"))
        .collect::<Vec<_>>()
        .join(" ");
    writeln!(
        svg,
        r##"  <polygon points="{frame}" fill="none" stroke="#000000" stroke-width="2"/>"##
    )
    .unwrap();
    for (i, &(x, y)) in CORNER_LABELS.iter().enumerate() {
        writeln!(
            svg,
            r##"  <text x="{x}" y="{y}" text-anchor="middle" font-size="16" fill="#000000">{i}</text>"##
        )
        .unwrap();
    }
    writeln!(svg, "</svg>").unwrap();
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    fn pt(numerators: &[i64], denominator: i64) -> RationalPoint {
        RationalPoint::from_fractions(numerators, denominator).unwrap()
    }

    fn uniform_cells(n: usize, m: usize) -> Vec<MixedCell> {
        enumerate_staircases(n, m)
            .unwrap()
            .into_iter()
            .map(MixedCell::uniform)
            .collect()
    }

    // all barycentric points with the given denominator
    fn grid(m: usize, d: i64) -> Vec<RationalPoint> {
        fn rec(i: usize, left: i64, parts: &mut Vec<i64>, d: i64, out: &mut Vec<RationalPoint>) {
            if i + 1 == parts.len() {
                parts[i] = left;
                out.push(RationalPoint::from_fractions(parts, d).unwrap());
                return;
            }
            for a in 0..=left {
                parts[i] = a;
                rec(i + 1, left - a, parts, d, out);
            }
        }
        let mut parts = vec![0i64; m + 1];
        let mut out = Vec::new();
        rec(0, d, &mut parts, d, &mut out);
        out
    }

    fn strictly_inside(cell: &MixedCell, p: &RationalPoint) -> bool {
        if !cell_contains(cell, p) {
            return false;
        }
        let pre = p.prefix_sums();
        let cut = cell.weight_prefixes();
        (0..cell.n()).all(|j| {
            let e = cell.staircase().end(j);
            pre[e] < cut[j] && cut[j] < pre[e + 1]
        })
    }

    fn inside_hull(cell: &MixedCell, p: &RationalPoint) -> bool {
        let mut pix: Vec<(BigRational, BigRational)> =
            minkowski_points(cell).iter().map(to_pixel).collect();
        pix.sort();
        let hull = convex_hull(&pix);
        let q = to_pixel(p);
        (0..hull.len()).all(|i| {
            let a = &pix[hull[i]];
            let b = &pix[hull[(i + 1) % hull.len()]];
            !cross(a, b, &q).is_negative()
        })
    }

    #[test]
    fn simplex_vertices_lie_exactly_in_the_cells_listing_them() {
        for (n, m) in [(2, 2), (1, 3), (3, 2)] {
            for i in 0..=m {
                let v = RationalPoint::vertex(m, i).unwrap();
                let mut homes = 0;
                for s in enumerate_staircases(n, m).unwrap() {
                    let admits = (0..=n).all(|j| s.interval_contains(j, i));
                    let cell = MixedCell::uniform(s);
                    assert_eq!(cell_contains(&cell, &v), admits);
                    homes += usize::from(admits);
                }
                // a vertex pins e(j) = i for all j < n, hence its staircase
                assert_eq!(homes, 1);
            }
        }
    }

    #[test]
    fn the_barycenter_meets_the_four_middle_cells_of_the_triangle() {
        let cells = uniform_cells(2, 2);
        assert_eq!(cells[1].staircase().ends(), &[0, 1, 2]);
        let b = pt(&[1, 1, 1], 3);
        let containing: Vec<usize> = (0..cells.len())
            .filter(|&k| cell_contains(&cells[k], &b))
            .collect();
        assert_eq!(containing, vec![1, 2, 3, 4]);
        let pieces: Vec<usize> = (0..cells.len())
            .filter(|&k| piece_contains(&cells[k], &b))
            .collect();
        assert_eq!(pieces, vec![1]);
    }

    // Pointwise form of the prefix filtration: every point's unique piece is
    // its lexicographically least cell, which also certifies covering and
    // the partition into pieces.
    fn assert_partition(cells: &[MixedCell], d: i64) {
        for p in grid(cells[0].m(), d) {
            let least = (0..cells.len()).find(|&k| cell_contains(&cells[k], &p));
            let pieces: Vec<usize> = (0..cells.len())
                .filter(|&k| piece_contains(&cells[k], &p))
                .collect();
            assert_eq!(pieces.len(), 1, "{:?}", p.coords());
            assert_eq!(least, Some(pieces[0]), "{:?}", p.coords());
        }
    }

    #[test]
    fn grid_points_have_one_piece_their_least_cell() {
        for (n, m, d) in [(2, 2, 12), (1, 3, 8), (2, 3, 6)] {
            assert_partition(&uniform_cells(n, m), d);
        }
    }

    #[test]
    fn lopsided_weights_still_partition_the_triangle() {
        let weights = vec![rat(1, 2), rat(1, 3), rat(1, 6)];
        let cells: Vec<MixedCell> = enumerate_staircases(2, 2)
            .unwrap()
            .into_iter()
            .map(|s| MixedCell::new(s, weights.clone()).unwrap())
            .collect();
        assert_partition(&cells, 12);
    }

    #[test]
    fn the_first_cell_keeps_its_whole_piece() {
        for (n, m) in [(2, 2), (1, 3), (3, 3)] {
            let cells = uniform_cells(n, m);
            let first = &cells[0];
            // lex least staircase: every interval before the last is {0}
            assert!(first.staircase().ends()[..n].iter().all(|&e| e == 0));
            for p in grid(m, 4) {
                assert_eq!(cell_contains(first, &p), piece_contains(first, &p));
            }
        }
    }

    #[test]
    fn wall_points_stay_with_the_earlier_piece() {
        let cells = uniform_cells(2, 2);
        // wall shared by the second and third cells: (2-t, t, 1)/3, t in (0,1)
        for (p, q) in [(1, 4), (1, 2), (3, 4)] {
            let point = RationalPoint::new(vec![
                rat(2 * q - p, 3 * q),
                rat(p, 3 * q),
                rat(1, 3),
            ])
            .unwrap();
            assert!(cell_contains(&cells[1], &point));
            assert!(cell_contains(&cells[2], &point));
            let pieces: Vec<usize> = (0..cells.len())
                .filter(|&k| piece_contains(&cells[k], &point))
                .collect();
            assert_eq!(pieces, vec![1]);
        }
    }

    #[test]
    fn intersections_intersect_interval_by_interval() {
        let cells = uniform_cells(2, 2);
        assert_eq!(
            cell_intersection(&cells[1], &cells[2]),
            CellFace::Sum {
                intervals: vec![(0, 0), (0, 1), (2, 2)],
                weights: cells[1].weights().to_vec(),
            }
        );
        assert!(cell_intersection(&cells[0], &cells[5]).is_empty());
        for a in &cells {
            assert_eq!(cell_intersection(a, a), CellFace::of_cell(a));
            for b in &cells {
                assert_eq!(cell_intersection(a, b), cell_intersection(b, a));
            }
        }
    }

    #[test]
    fn distinct_cells_meet_only_along_their_boundaries() {
        for (n, m, d) in [(2, 2, 12), (1, 3, 6)] {
            let cells = uniform_cells(n, m);
            for p in grid(m, d) {
                for k in 0..cells.len() {
                    for l in 0..cells.len() {
                        if k != l && strictly_inside(&cells[k], &p) {
                            assert!(!cell_contains(&cells[l], &p), "{:?}", p.coords());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn minkowski_combination_points_realize_the_cell() {
        for (n, m) in [(2, 2), (1, 3), (2, 3)] {
            for cell in uniform_cells(n, m) {
                for q in minkowski_points(&cell) {
                    assert!(cell_contains(&cell, &q));
                }
            }
        }
        // on the triangle the hull of the combination points is the cell
        for cell in uniform_cells(2, 2) {
            for p in grid(2, 8) {
                assert_eq!(inside_hull(&cell, &p), cell_contains(&cell, &p));
            }
        }
    }

    #[test]
    fn triangle_svg_lists_every_cell_once() {
        let third = vec![rat(1, 3); 3];
        let svg = export_svg(2, 2, &third).unwrap();
        assert_eq!(svg.matches("class=\"cell\"").count(), 6);
        assert_eq!(svg.matches("<line ").count(), 6);
        for label in ["0,0,2", "0,1,2", "0,2,2", "1,1,2", "1,2,2", "2,2,2"] {
            assert!(svg.contains(&format!(">{label}<")), "{label}");
        }
        assert_eq!(svg, export_svg(2, 2, &third).unwrap());

        let halves = vec![rat(1, 2); 2];
        assert_eq!(
            export_svg(1, 2, &halves).unwrap().matches("class=\"cell\"").count(),
            3
        );

        let whole = export_svg(0, 2, &[rat(1, 1)]).unwrap();
        assert_eq!(whole.matches("class=\"cell\"").count(), 1);
        assert_eq!(whole.matches("<line ").count(), 0);
        assert!(whole.contains(">2<"));
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert!(RationalPoint::new(vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(RationalPoint::new(vec![rat(3, 2), rat(-1, 2)]).is_err());
        assert!(RationalPoint::new(vec![]).is_err());
        assert!(RationalPoint::from_fractions(&[1, 0], 0).is_err());
        assert!(RationalPoint::vertex(2, 5).is_err());

        let s = Staircase::new(1, 1, vec![0, 1]).unwrap();
        assert!(MixedCell::new(s.clone(), vec![rat(1, 1)]).is_err());
        assert!(MixedCell::new(s.clone(), vec![rat(0, 1), rat(1, 1)]).is_err());
        assert!(MixedCell::new(s, vec![rat(1, 2), rat(1, 3)]).is_err());

        assert!(matches!(
            export_svg(1, 3, &[rat(1, 2), rat(1, 2)]),
            Err(Error::UnsupportedDimension(_))
        ));
        assert!(export_svg(2, 2, &[rat(1, 2), rat(1, 2)]).is_err());
    }
}

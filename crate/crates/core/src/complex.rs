//! Simplicial complexes presented by their maximal simplices.
//!
//! Vertices are bare integer labels. A complex may carry an orientation of
//! its 1-skeleton; when that orientation restricts to a total order on every
//! simplex (no cyclic triangle) it induces the per-simplex vertex orders that
//! the tiling machinery consumes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::{binomial, GradedVector};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Non-empty set of vertices, stored strictly increasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertexInSimplex(w[0].0));
            }
        }
        Ok(Simplex { vertices })
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Result<Self> {
        Self::new(ids.into_iter().map(VertexId).collect())
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: never empty
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.vertices.iter().all(|v| other.contains(*v))
    }

    /// All non-empty subsets. Exponential; callers keep simplices small.
    pub fn faces(&self) -> Vec<Simplex> {
        let k = self.vertices.len();
        debug_assert!(k <= 24, "face enumeration of a {k}-vertex simplex");
        let mut out = Vec::with_capacity((1usize << k) - 1);
        for mask in 1u32..(1u32 << k) {
            out.push(self.subset(mask));
        }
        out
    }

    /// Subset selected by a bitmask over the sorted vertex list.
    pub fn subset(&self, mask: u32) -> Simplex {
        debug_assert!(mask != 0);
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, v)| *v)
            .collect();
        Simplex { vertices }
    }

    pub fn intersection(&self, other: &Simplex) -> Vec<VertexId> {
        self.vertices
            .iter()
            .copied()
            .filter(|v| other.contains(*v))
            .collect()
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut set: BTreeSet<VertexId> = self.vertices.iter().copied().collect();
        set.extend(other.vertices.iter().copied());
        Simplex {
            vertices: set.into_iter().collect(),
        }
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Orientation of a 1-skeleton: each edge gets a direction.
///
/// Stored keyed by the unordered pair (small id, large id); the flag records
/// whether the edge points from the smaller id to the larger one.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Orientation {
    map: BTreeMap<(VertexId, VertexId), bool>,
}

impl Orientation {
    /// Build from (tail, head) pairs.
    pub fn from_pairs<I: IntoIterator<Item = (VertexId, VertexId)>>(pairs: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (tail, head) in pairs {
            if tail == head {
                return Err(Error::InvalidComplex(format!(
                    "edge {tail}-{head} is a loop"
                )));
            }
            let key = (tail.min(head), tail.max(head));
            let forward = tail < head;
            if map.insert(key, forward).is_some_and(|prev| prev != forward) {
                return Err(Error::InvalidComplex(format!(
                    "edge {}-{} is oriented both ways",
                    key.0, key.1
                )));
            }
        }
        Ok(Orientation { map })
    }

    /// Orient every edge from the smaller to the larger vertex id.
    pub fn by_increasing_id(edges: &BTreeSet<Simplex>) -> Orientation {
        let mut map = BTreeMap::new();
        for e in edges {
            let vs = e.vertices();
            map.insert((vs[0], vs[1]), true);
        }
        Orientation { map }
    }

    /// Orient every edge from lower to higher rank. Any injective rank map
    /// yields an acyclic orientation.
    pub fn by_rank(edges: &BTreeSet<Simplex>, rank: &BTreeMap<VertexId, usize>) -> Result<Orientation> {
        let mut map = BTreeMap::new();
        for e in edges {
            let vs = e.vertices();
            let (ra, rb) = match (rank.get(&vs[0]), rank.get(&vs[1])) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(Error::InvalidComplex(format!(
                        "no rank for an endpoint of {e}"
                    )))
                }
            };
            if ra == rb {
                return Err(Error::InvalidComplex(format!("tied rank on edge {e}")));
            }
            map.insert((vs[0], vs[1]), ra < rb);
        }
        Ok(Orientation { map })
    }

    /// Direction of the edge between `u` and `v` as (tail, head), if oriented.
    pub fn direction(&self, u: VertexId, v: VertexId) -> Option<(VertexId, VertexId)> {
        let key = (u.min(v), u.max(v));
        self.map
            .get(&key)
            .map(|&forward| if forward { key } else { (key.1, key.0) })
    }

    /// True when the edge between `u` and `v` points at `v`.
    pub fn points_at(&self, u: VertexId, v: VertexId) -> Option<bool> {
        self.direction(u, v).map(|(_, head)| head == v)
    }

    /// All (tail, head) pairs, sorted by unordered key.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.map
            .iter()
            .map(|(&(a, b), &forward)| if forward { (a, b) } else { (b, a) })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Check the oriented edges are exactly the given ones.
    pub fn covers_exactly(&self, edges: &BTreeSet<Simplex>) -> Result<()> {
        for e in edges {
            let vs = e.vertices();
            if !self.map.contains_key(&(vs[0], vs[1])) {
                return Err(Error::UnorientedEdge(vs[0].0, vs[1].0));
            }
        }
        if self.map.len() != edges.len() {
            let extra = self
                .map
                .keys()
                .find(|(a, b)| {
                    !edges.contains(&Simplex {
                        vertices: vec![*a, *b],
                    })
                })
                .expect("count mismatch implies an extra edge");
            return Err(Error::InvalidComplex(format!(
                "orientation mentions edge {}-{} outside the complex",
                extra.0, extra.1
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: BTreeSet<VertexId>,
    maximal: Vec<Simplex>,
    orientation: Option<Orientation>,
}

/// Normalize a list of simplices into a complex: drop faces of other listed
/// simplices, deduplicate, sort.
pub fn build_complex(input: Vec<Simplex>) -> Result<SimplicialComplex> {
    if input.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let mut sorted = input;
    sorted.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut maximal: Vec<Simplex> = Vec::new();
    for s in sorted {
        if !maximal.iter().any(|m| s.is_face_of(m)) {
            maximal.push(s);
        }
    }
    maximal.sort_unstable();
    let vertices = maximal
        .iter()
        .flat_map(|s| s.vertices().iter().copied())
        .collect();
    Ok(SimplicialComplex {
        vertices,
        maximal,
        orientation: None,
    })
}

impl SimplicialComplex {
    pub fn dim(&self) -> usize {
        self.maximal.iter().map(Simplex::dim).max().unwrap_or(0)
    }

    pub fn maximal(&self) -> &[Simplex] {
        &self.maximal
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn max_vertex_id(&self) -> u32 {
        self.vertices.iter().next_back().map(|v| v.0).unwrap_or(0)
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        self.orientation.as_ref()
    }

    /// Attach an orientation; it must cover the edge set exactly.
    pub fn set_orientation(&mut self, orientation: Orientation) -> Result<()> {
        orientation.covers_exactly(&self.edges())?;
        self.orientation = Some(orientation);
        Ok(())
    }

    /// Convenience: orient all edges by increasing vertex id.
    pub fn orient_by_id(&mut self) {
        self.orientation = Some(Orientation::by_increasing_id(&self.edges()));
    }

    pub fn has_face(&self, s: &Simplex) -> bool {
        self.maximal.iter().any(|m| s.is_face_of(m))
    }

    /// Every face of the complex, each listed once.
    pub fn faces(&self) -> BTreeSet<Simplex> {
        let mut out = BTreeSet::new();
        for m in &self.maximal {
            out.extend(m.faces());
        }
        out
    }

    pub fn faces_of_dim(&self, d: usize) -> BTreeSet<Simplex> {
        self.faces().into_iter().filter(|s| s.dim() == d).collect()
    }

    pub fn edges(&self) -> BTreeSet<Simplex> {
        self.faces_of_dim(1)
    }

    pub fn triangles(&self) -> BTreeSet<Simplex> {
        self.faces_of_dim(2)
    }

    /// Face counts by dimension, led by the count 1 of the empty face.
    pub fn f_vector(&self) -> GradedVector {
        let mut counts = vec![0i64; self.dim() + 2];
        counts[0] = 1;
        for s in self.faces() {
            counts[s.dim() + 1] += 1;
        }
        GradedVector::new(counts)
    }

    /// The h-vector of the complex, the binomial transform of the f-vector:
    /// sum_k h_k X^(n+1-k) = sum_i f_(i-1) (X-1)^(n+1-i) with n the dimension.
    pub fn h_vector(&self) -> Result<GradedVector> {
        let f = self.f_vector();
        let n = self.dim();
        let mut h = GradedVector::zeros(n + 2);
        for k in 0..=(n + 1) {
            for i in 0..=k {
                let c = binomial((n + 1 - i) as u64, (k - i) as u64)?;
                let term = c.checked_mul(f.entry(i)).ok_or(Error::Overflow)?;
                let signed = if (k - i) % 2 == 0 {
                    term
                } else {
                    term.checked_neg().ok_or(Error::Overflow)?
                };
                h.add_at(k, signed)?;
            }
        }
        Ok(h)
    }

    /// Alternating face count, empty face excluded.
    pub fn euler_characteristic(&self) -> Result<i64> {
        let f = self.f_vector();
        // f starts at the empty face; chop it off before alternating.
        let positive = GradedVector::new(f.entries()[1..].to_vec());
        positive.alternating_sum()
    }

    /// Validate the attached orientation restricts to a total order on every
    /// simplex and hand out the induced per-simplex vertex orders.
    pub fn derive_vertex_orders(&self) -> Result<VertexOrders<'_>> {
        let orientation = self.orientation.as_ref().ok_or(Error::MissingOrientation)?;
        VertexOrders::validate(self, orientation)
    }

    /// Barycentric subdivision with the canonical orientation pointing from
    /// the vertex of a face to the vertex of each proper subface.
    pub fn barycentric_subdivision(&self) -> Result<SubdividedComplex> {
        let mut faces: Vec<Simplex> = self.faces().into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let index: BTreeMap<&Simplex, u32> = faces
            .iter()
            .enumerate()
            .map(|(i, s)| (s, i as u32))
            .collect();

        let mut maximal = Vec::new();
        for m in &self.maximal {
            for perm in permutations(m.vertices()) {
                // prefixes of the permutation form a maximal chain of faces
                let mut chain = Vec::with_capacity(perm.len());
                let mut prefix = Vec::new();
                for v in perm {
                    prefix.push(v);
                    let mut sorted = prefix.clone();
                    sorted.sort_unstable();
                    let face = Simplex { vertices: sorted };
                    chain.push(VertexId(index[&face]));
                }
                maximal.push(Simplex::new(chain)?);
            }
        }
        let mut complex = build_complex(maximal)?;
        // ids were assigned by (cardinality, lex), so inclusion of faces
        // refines the id order and orienting large id -> small id is acyclic
        let pairs: Vec<(VertexId, VertexId)> = complex
            .edges()
            .iter()
            .map(|e| {
                let vs = e.vertices();
                (vs[1], vs[0])
            })
            .collect();
        complex.set_orientation(Orientation::from_pairs(pairs)?)?;
        let vertex_map = faces
            .into_iter()
            .enumerate()
            .map(|(i, s)| (VertexId(i as u32), s))
            .collect();
        Ok(SubdividedComplex {
            complex,
            vertex_map,
        })
    }
}

/// Result of a barycentric subdivision: the new complex plus the dictionary
/// from new vertices back to the faces they subdivide.
#[derive(Clone, Debug)]
pub struct SubdividedComplex {
    pub complex: SimplicialComplex,
    pub vertex_map: BTreeMap<VertexId, Simplex>,
}

/// Access to the per-simplex total orders induced by a validated orientation.
#[derive(Debug)]
pub struct VertexOrders<'a> {
    orientation: &'a Orientation,
}

impl<'a> VertexOrders<'a> {
    /// Check `orientation` covers the edges of `complex` exactly and has no
    /// cyclically oriented triangle; the two together make the restriction
    /// to each simplex a total order.
    pub fn validate(
        complex: &SimplicialComplex,
        orientation: &'a Orientation,
    ) -> Result<Self> {
        orientation.covers_exactly(&complex.edges())?;
        for t in complex.triangles() {
            let vs = t.vertices();
            // a 3-cycle is the only obstruction to transitivity on a triangle
            let ab = orientation.points_at(vs[0], vs[1]).expect("covered");
            let bc = orientation.points_at(vs[1], vs[2]).expect("covered");
            let ca = orientation.points_at(vs[2], vs[0]).expect("covered");
            if (ab && bc && ca) || (!ab && !bc && !ca) {
                return Err(Error::OrientedTriangleCycle(t));
            }
        }
        Ok(VertexOrders { orientation })
    }

    pub fn order(&self, s: &Simplex) -> Result<Vec<VertexId>> {
        let vs = s.vertices();
        let mut indegree = vec![0usize; vs.len()];
        for a in 0..vs.len() {
            for b in (a + 1)..vs.len() {
                match self.orientation.direction(vs[a], vs[b]) {
                    Some((_, head)) => {
                        let h = if head == vs[a] { a } else { b };
                        indegree[h] += 1;
                    }
                    None => return Err(Error::UnorientedEdge(vs[a].0, vs[b].0)),
                }
            }
        }
        let mut order: Vec<usize> = (0..vs.len()).collect();
        order.sort_by_key(|&i| indegree[i]);
        // a transitive tournament has pairwise distinct in-degrees
        for w in order.windows(2) {
            if indegree[w[0]] == indegree[w[1]] {
                return Err(Error::NotTame(format!(
                    "orientation is not a total order on {s}"
                )));
            }
        }
        Ok(order.into_iter().map(|i| vs[i]).collect())
    }

    /// Position of each vertex of `s` in its induced order.
    pub fn positions(&self, s: &Simplex) -> Result<BTreeMap<VertexId, usize>> {
        Ok(self
            .order(s)?
            .into_iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect())
    }
}

fn permutations(items: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(items.len());
    let mut used = vec![false; items.len()];
    permute_rec(items, &mut current, &mut used, &mut out);
    out
}

fn permute_rec(
    items: &[VertexId],
    current: &mut Vec<VertexId>,
    used: &mut [bool],
    out: &mut Vec<Vec<VertexId>>,
) {
    if current.len() == items.len() {
        out.push(current.clone());
        return;
    }
    for i in 0..items.len() {
        if !used[i] {
            used[i] = true;
            current.push(items[i]);
            permute_rec(items, current, used, out);
            current.pop();
            used[i] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simplex(ids: &[u32]) -> Simplex {
        Simplex::from_ids(ids.iter().copied()).unwrap()
    }

    pub(crate) fn boundary_simplex_complex(n: usize) -> SimplicialComplex {
        // boundary of the n-simplex on vertices 0..=n
        let all: Vec<u32> = (0..=n as u32).collect();
        let mut facets = Vec::new();
        for skip in &all {
            facets.push(
                Simplex::from_ids(all.iter().copied().filter(|v| v != skip)).unwrap(),
            );
        }
        build_complex(facets).unwrap()
    }

    #[test]
    fn simplex_normalizes_and_validates() {
        assert_eq!(simplex(&[2, 0, 1]).vertices(), simplex(&[0, 1, 2]).vertices());
        assert_eq!(Simplex::from_ids([1, 1]), Err(Error::DuplicateVertexInSimplex(1)));
        assert_eq!(Simplex::new(vec![]), Err(Error::EmptySimplex));
        assert_eq!(simplex(&[3, 1, 4]).dim(), 2);
    }

    #[test]
    fn faces_enumerate_all_subsets() {
        let s = simplex(&[0, 1, 2]);
        let faces = s.faces();
        assert_eq!(faces.len(), 7);
        assert!(faces.contains(&simplex(&[0, 2])));
        assert!(faces.contains(&simplex(&[1])));
        assert!(faces.contains(&s));
    }

    #[test]
    fn build_complex_absorbs_faces() {
        let c = build_complex(vec![simplex(&[0, 1, 2]), simplex(&[1, 2]), simplex(&[2, 3])])
            .unwrap();
        assert_eq!(c.maximal().len(), 2);
        assert_eq!(c.dim(), 2);
        assert_eq!(c.vertices().len(), 4);
        assert!(c.has_face(&simplex(&[1, 2])));
        assert!(!c.has_face(&simplex(&[0, 3])));
    }

    #[test]
    fn f_vector_of_octahedron_boundary() {
        // octahedron: 6 vertices, 12 edges, 8 triangles
        let mut tris = Vec::new();
        for &a in &[1u32, 3] {
            for &b in &[2u32, 4] {
                for &c in &[0u32, 5] {
                    tris.push(simplex(&[a, b, c]));
                }
            }
        }
        let c = build_complex(tris).unwrap();
        assert_eq!(c.f_vector(), GradedVector::new(vec![1, 6, 12, 8]));
        assert_eq!(c.euler_characteristic().unwrap(), 2);
    }

    #[test]
    fn h_vector_matches_polynomial_expansion() {
        // independent oracle: expand sum_i f_(i-1) (X-1)^(n+1-i) directly
        // and read off coefficients of X^(n+1-k)
        for n in 1..=4usize {
            let c = boundary_simplex_complex(n + 1);
            assert_eq!(c.dim(), n);
            let f = c.f_vector();
            let mut poly = vec![0i64; n + 2]; // coefficient of X^d at index d
            for i in 0..=(n + 1) {
                // (X-1)^(n+1-i) scaled by f_(i-1)
                let e = n + 1 - i;
                for d in 0..=e {
                    let sign = if (e - d) % 2 == 0 { 1 } else { -1 };
                    poly[d] += f.entry(i) * sign * binomial(e as u64, d as u64).unwrap();
                }
            }
            let h = c.h_vector().unwrap();
            for k in 0..=(n + 1) {
                assert_eq!(h.entry(k), poly[n + 1 - k], "h_{k} of the {n}-sphere");
            }
        }
    }

    #[test]
    fn h_vector_of_boundary_simplex_is_all_ones() {
        for n in 1..=5usize {
            let c = boundary_simplex_complex(n + 1);
            assert_eq!(c.h_vector().unwrap(), GradedVector::new(vec![1; n + 2]));
        }
    }

    #[test]
    fn euler_characteristic_of_spheres_alternates() {
        for n in 1..=5usize {
            let c = boundary_simplex_complex(n + 1);
            let expect = if n % 2 == 0 { 2 } else { 0 };
            assert_eq!(c.euler_characteristic().unwrap(), expect);
        }
    }

    #[test]
    fn orientation_round_trips_and_rejects_conflicts() {
        let o = Orientation::from_pairs([(VertexId(2), VertexId(0)), (VertexId(0), VertexId(1))])
            .unwrap();
        assert_eq!(o.direction(VertexId(0), VertexId(2)), Some((VertexId(2), VertexId(0))));
        assert_eq!(o.points_at(VertexId(0), VertexId(1)), Some(true));
        assert_eq!(o.pairs(), vec![(VertexId(0), VertexId(1)), (VertexId(2), VertexId(0))]);
        assert!(Orientation::from_pairs([
            (VertexId(0), VertexId(1)),
            (VertexId(1), VertexId(0))
        ])
        .is_err());
    }

    #[test]
    fn cyclic_triangle_is_detected() {
        let mut c = build_complex(vec![simplex(&[0, 1, 2])]).unwrap();
        let cyclic = Orientation::from_pairs([
            (VertexId(0), VertexId(1)),
            (VertexId(1), VertexId(2)),
            (VertexId(2), VertexId(0)),
        ])
        .unwrap();
        c.set_orientation(cyclic).unwrap();
        assert_eq!(
            c.derive_vertex_orders().unwrap_err(),
            Error::OrientedTriangleCycle(simplex(&[0, 1, 2]))
        );
    }

    #[test]
    fn vertex_orders_follow_the_orientation() {
        let mut c = build_complex(vec![simplex(&[0, 1, 2])]).unwrap();
        c.set_orientation(
            Orientation::from_pairs([
                (VertexId(1), VertexId(0)),
                (VertexId(0), VertexId(2)),
                (VertexId(1), VertexId(2)),
            ])
            .unwrap(),
        )
        .unwrap();
        let orders = c.derive_vertex_orders().unwrap();
        assert_eq!(
            orders.order(&simplex(&[0, 1, 2])).unwrap(),
            vec![VertexId(1), VertexId(0), VertexId(2)]
        );
        assert_eq!(
            orders.order(&simplex(&[0, 1])).unwrap(),
            vec![VertexId(1), VertexId(0)]
        );
    }

    #[test]
    fn orientation_must_cover_edges_exactly() {
        let mut c = build_complex(vec![simplex(&[0, 1, 2])]).unwrap();
        let partial = Orientation::from_pairs([(VertexId(0), VertexId(1))]).unwrap();
        assert!(c.set_orientation(partial).is_err());
        let extra = Orientation::from_pairs([
            (VertexId(0), VertexId(1)),
            (VertexId(0), VertexId(2)),
            (VertexId(1), VertexId(2)),
            (VertexId(0), VertexId(7)),
        ])
        .unwrap();
        assert!(c.set_orientation(extra).is_err());
    }

    #[test]
    fn subdivision_counts_flags() {
        // oracle: faces of Sd correspond to chains of faces; maximal
        // simplices to maximal chains, i.e. permutations of each facet
        let edge = build_complex(vec![simplex(&[0, 1])]).unwrap();
        let sd = edge.barycentric_subdivision().unwrap();
        assert_eq!(sd.complex.f_vector(), GradedVector::new(vec![1, 3, 2]));

        let tri = build_complex(vec![simplex(&[0, 1, 2])]).unwrap();
        let sd2 = tri.barycentric_subdivision().unwrap();
        assert_eq!(sd2.complex.f_vector(), GradedVector::new(vec![1, 7, 12, 6]));

        let hollow = boundary_simplex_complex(2);
        let sd3 = hollow.barycentric_subdivision().unwrap();
        // hexagon boundary
        assert_eq!(sd3.complex.f_vector(), GradedVector::new(vec![1, 6, 6]));
    }

    #[test]
    fn subdivision_orientation_points_into_subfaces() {
        let tri = build_complex(vec![simplex(&[0, 1, 2])]).unwrap();
        let sd = tri.barycentric_subdivision().unwrap();
        let orders = sd.complex.derive_vertex_orders().unwrap();
        for m in sd.complex.maximal() {
            let order = orders.order(m).unwrap();
            // along each maximal simplex, faces must shrink strictly
            for w in order.windows(2) {
                let big = &sd.vertex_map[&w[0]];
                let small = &sd.vertex_map[&w[1]];
                assert!(small.is_face_of(big) && small.len() < big.len());
            }
        }
    }

    #[test]
    fn subdivision_vertex_map_is_total() {
        let tri = build_complex(vec![simplex(&[0, 1, 2]), simplex(&[2, 3])]).unwrap();
        let sd = tri.barycentric_subdivision().unwrap();
        assert_eq!(sd.vertex_map.len(), sd.complex.vertices().len());
        // dictionary ids are ordered by (cardinality, lex) over the faces
        let mut last: Option<(usize, Simplex)> = None;
        for (_, face) in &sd.vertex_map {
            if let Some((len, prev)) = &last {
                assert!((face.len(), face.clone()) > (*len, prev.clone()));
            }
            last = Some((face.len(), face.clone()));
        }
    }
}

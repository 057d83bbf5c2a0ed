//! Morse tiles: the face intervals out of which tilings are built.
//!
//! A tile on a simplex keeps every face that contains a fixed set of
//! `removed` vertices, except those inside an optional Morse face. With
//! `removed` of size k on an n-simplex the plain tile realizes every order k
//! from 0 (the closed simplex) to n+1 (the open simplex); a Morse face
//! additionally deletes the faces between `removed` and a proper subsimplex.

use std::collections::BTreeSet;
use std::fmt;

use crate::complex::{Simplex, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorseTile {
    simplex: Simplex,
    removed: BTreeSet<VertexId>,
    morse_face: Option<Simplex>,
}

/// Construct a tile, enforcing the shape constraints.
///
/// With a Morse face present: `removed` must be non-empty and contained in
/// the Morse face, and the Morse face must miss at least two vertices of the
/// simplex. An empty Morse face is normalized away.
pub fn make_tile(
    simplex: Simplex,
    removed: BTreeSet<VertexId>,
    morse_face: Option<Simplex>,
) -> Result<MorseTile> {
    for v in &removed {
        if !simplex.contains(*v) {
            return Err(Error::InvalidMorseFace(format!(
                "removed vertex {v} is not in the simplex {simplex}"
            )));
        }
    }
    if let Some(mu) = &morse_face {
        if removed.is_empty() {
            return Err(Error::InvalidMorseFace(
                "a Morse face needs at least one removed vertex".into(),
            ));
        }
        for v in &removed {
            if !mu.contains(*v) {
                return Err(Error::InvalidMorseFace(format!(
                    "removed vertex {v} lies outside the Morse face {mu}"
                )));
            }
        }
        if !mu.is_face_of(&simplex) || mu.len() + 2 > simplex.len() {
            return Err(Error::InvalidMorseFace(format!(
                "Morse face {mu} must miss at least two vertices of {simplex}"
            )));
        }
    }
    Ok(MorseTile {
        simplex,
        removed,
        morse_face,
    })
}

impl MorseTile {
    pub fn simplex(&self) -> &Simplex {
        &self.simplex
    }

    pub fn removed(&self) -> &BTreeSet<VertexId> {
        &self.removed
    }

    pub fn morse_face(&self) -> Option<&Simplex> {
        self.morse_face.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.simplex.dim()
    }

    /// The order of the tile is the number of removed vertices.
    pub fn order(&self) -> usize {
        self.removed.len()
    }

    pub fn is_basic(&self) -> bool {
        self.morse_face.is_none()
    }

    /// A tile is critical when its face count deviates from a half-open
    /// simplex: closed, open, or Morse with the face interval cut as low as
    /// it goes.
    pub fn is_critical(&self) -> bool {
        self.critical_index().is_some()
    }

    /// The index of a critical tile: 0 for closed, dimension plus one is
    /// never an index (open tiles have index equal to the dimension), and a
    /// Morse tile is critical of index k exactly when its Morse face has
    /// dimension k-1.
    pub fn critical_index(&self) -> Option<usize> {
        let n = self.dim();
        let k = self.order();
        match &self.morse_face {
            None if k == 0 => Some(0),
            None if k == n + 1 => Some(n),
            None => None,
            Some(mu) if mu.len() == k => Some(k),
            Some(_) => None,
        }
    }

    /// Every face kept by the tile.
    pub fn face_set(&self) -> BTreeSet<Simplex> {
        let vs = self.simplex.vertices();
        let removed_mask: u32 = vs
            .iter()
            .enumerate()
            .filter(|(_, v)| self.removed.contains(v))
            .map(|(i, _)| 1u32 << i)
            .sum();
        let mu_mask: Option<u32> = self.morse_face.as_ref().map(|mu| {
            vs.iter()
                .enumerate()
                .filter(|(_, v)| mu.contains(**v))
                .map(|(i, _)| 1u32 << i)
                .sum()
        });
        let mut out = BTreeSet::new();
        for mask in 1u32..(1u32 << vs.len()) {
            if mask & removed_mask != removed_mask {
                continue;
            }
            if let Some(mu) = mu_mask {
                if mask & !mu == 0 {
                    continue; // inside the Morse face
                }
            }
            out.insert(self.simplex.subset(mask));
        }
        out
    }

    pub fn signature(&self) -> TileSignature {
        TileSignature {
            dimension: self.dim(),
            order: self.order(),
            morse_face_dim: self.morse_face.as_ref().map(Simplex::dim),
            critical_index: self.critical_index(),
        }
    }

    /// The complementary basic tile on the same simplex: swap removed and
    /// kept vertices. Fails on Morse tiles, which have no dual of this kind.
    pub fn dual_basic(&self) -> Result<MorseTile> {
        if self.morse_face.is_some() {
            return Err(Error::NotBasic);
        }
        let removed = self
            .simplex
            .vertices()
            .iter()
            .copied()
            .filter(|v| !self.removed.contains(v))
            .collect();
        make_tile(self.simplex.clone(), removed, None)
    }
}

impl fmt::Display for MorseTile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.simplex)?;
        write!(f, " \\ {{")?;
        for (i, v) in self.removed.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")?;
        if let Some(mu) = &self.morse_face {
            write!(f, " mu={mu}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MorseTile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TileSignature {
    pub dimension: usize,
    pub order: usize,
    pub morse_face_dim: Option<usize>,
    pub critical_index: Option<usize>,
}

/// Reconstruct a tile from its face set.
///
/// The faces of a tile form an interval complement: all subsets of the top
/// simplex containing the removed set, minus an interval below the Morse
/// face. This recovers the unique such presentation or reports that none
/// exists. The one ambiguous case is a single vertex, where the closed and
/// the half-open reading coincide; the closed one is returned.
pub fn recognize_tile(faces: &BTreeSet<Simplex>) -> Result<MorseTile> {
    if faces.is_empty() {
        return Err(Error::NotAMorseTile("empty face family".into()));
    }
    let mut iter = faces.iter();
    let first = iter.next().expect("non-empty");
    let top = iter.fold(first.clone(), |acc, s| acc.union(s));
    if !faces.contains(&top) {
        return Err(Error::NotAMorseTile(format!(
            "the union {top} of the faces is not itself a face"
        )));
    }
    let removed: BTreeSet<VertexId> = top
        .vertices()
        .iter()
        .copied()
        .filter(|v| faces.iter().all(|s| s.contains(*v)))
        .collect();

    // walk the interval above `removed` inside `top`; anything missing from
    // `faces` must assemble into a single interval below one Morse face
    let free: Vec<VertexId> = top
        .vertices()
        .iter()
        .copied()
        .filter(|v| !removed.contains(v))
        .collect();
    if free.len() > 24 {
        return Err(Error::UnsupportedDimension(format!(
            "tile recognition on {} free vertices",
            free.len()
        )));
    }
    let mut absent: Vec<Simplex> = Vec::new();
    for mask in 0u32..(1u32 << free.len()) {
        let mut vertices: Vec<VertexId> = removed.iter().copied().collect();
        for (i, v) in free.iter().enumerate() {
            if mask & (1 << i) != 0 {
                vertices.push(*v);
            }
        }
        if vertices.is_empty() {
            continue;
        }
        let candidate = Simplex::new(vertices)?;
        if !faces.contains(&candidate) {
            absent.push(candidate);
        }
    }
    if absent.is_empty() {
        if top.len() == 1 {
            // single vertex: closed and half-open coincide, prefer closed
            return make_tile(top, BTreeSet::new(), None);
        }
        return make_tile(top, removed, None);
    }

    if removed.is_empty() {
        return Err(Error::NotAMorseTile(
            "faces are missing although no vertex is common to all".into(),
        ));
    }
    let mu = absent
        .iter()
        .max_by_key(|s| s.len())
        .expect("non-empty")
        .clone();
    let expected = 1usize << (mu.len() - removed.len());
    if absent.len() != expected || !absent.iter().all(|s| s.is_face_of(&mu)) {
        return Err(Error::NotAMorseTile(
            "missing faces do not form a single interval".into(),
        ));
    }
    make_tile(top, removed, Some(mu))
}

//! JSON wire formats.
//!
//! Serialization is canonical so that identical objects print identical
//! bytes: vertex lists ascend, maximal simplices sort lexicographically,
//! object keys come out alphabetically, and tile lists keep their order,
//! which is the claimed shelling order. Deserialization re-runs every
//! constructor check; a tiling read back from disk additionally has its
//! shelling claim measured rather than trusted.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::{build_complex, Orientation, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::product_complex::FormulaComparison;
use crate::staircase::Staircase;
use crate::tile::{make_tile, MorseTile};
use crate::tiling::{verify_shelling, CriticalCount, TiledSet, TilingReport};
use crate::vector::GradedVector;

fn malformed(e: serde_json::Error) -> Error {
    Error::InvalidInput(format!("malformed JSON: {e}"))
}

fn ids(s: &Simplex) -> Vec<u32> {
    s.vertices().iter().map(|v| v.0).collect()
}

#[derive(Serialize, Deserialize)]
struct ComplexWire {
    vertices: Vec<u32>,
    maximal: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    orientation: Option<Vec<(u32, u32)>>,
}

pub fn complex_to_json(complex: &SimplicialComplex) -> Value {
    let vertices = complex.vertices().iter().map(|v| v.0).collect();
    let mut maximal: Vec<Vec<u32>> = complex.maximal().iter().map(ids).collect();
    maximal.sort();
    let orientation = complex
        .orientation()
        .map(|o| o.pairs().into_iter().map(|(t, h)| (t.0, h.0)).collect());
    serde_json::to_value(ComplexWire {
        vertices,
        maximal,
        orientation,
    })
    .expect("plain data serializes")
}

pub fn complex_from_json(v: &Value) -> Result<SimplicialComplex> {
    let wire: ComplexWire = serde_json::from_value(v.clone()).map_err(malformed)?;
    let maximal = wire
        .maximal
        .into_iter()
        .map(Simplex::from_ids)
        .collect::<Result<Vec<_>>>()?;
    let mut complex = build_complex(maximal)?;
    let declared: BTreeSet<u32> = wire.vertices.into_iter().collect();
    let actual: BTreeSet<u32> = complex.vertices().iter().map(|v| v.0).collect();
    if declared != actual {
        return Err(Error::InvalidInput(format!(
            "declared vertex set {declared:?} disagrees with the maximal simplices"
        )));
    }
    if let Some(pairs) = wire.orientation {
        let orientation =
            Orientation::from_pairs(pairs.into_iter().map(|(t, h)| (VertexId(t), VertexId(h))))?;
        complex.set_orientation(orientation)?;
    }
    Ok(complex)
}

#[derive(Serialize, Deserialize)]
struct TileWire {
    simplex: Vec<u32>,
    removed: Vec<u32>,
    morse_face: Option<Vec<u32>>,
}

pub fn tile_to_json(tile: &MorseTile) -> Value {
    serde_json::to_value(TileWire {
        simplex: ids(tile.simplex()),
        removed: tile.removed().iter().map(|v| v.0).collect(),
        morse_face: tile.morse_face().map(ids),
    })
    .expect("plain data serializes")
}

pub fn tile_from_json(v: &Value) -> Result<MorseTile> {
    let wire: TileWire = serde_json::from_value(v.clone()).map_err(malformed)?;
    make_tile(
        Simplex::from_ids(wire.simplex)?,
        wire.removed.into_iter().map(VertexId).collect(),
        wire.morse_face.map(Simplex::from_ids).transpose()?,
    )
}

#[derive(Serialize, Deserialize)]
struct TilingWire {
    complex: Value,
    tiles: Vec<Value>,
}

pub fn tiling_to_json(ts: &TiledSet) -> Value {
    serde_json::to_value(TilingWire {
        complex: complex_to_json(&ts.complex),
        tiles: ts.tiles.iter().map(tile_to_json).collect(),
    })
    .expect("plain data serializes")
}

/// Read a tiling back. The wire format carries no shelling claim beyond the
/// tile order itself, so the claim is measured: the flag is set exactly
/// when the listed order verifies as a shelling.
pub fn tiling_from_json(v: &Value) -> Result<TiledSet> {
    let wire: TilingWire = serde_json::from_value(v.clone()).map_err(malformed)?;
    let complex = complex_from_json(&wire.complex)?;
    let tiles = wire
        .tiles
        .iter()
        .map(tile_from_json)
        .collect::<Result<Vec<_>>>()?;
    let ts = TiledSet::new(complex, tiles, false);
    let shelled = verify_shelling(&ts).is_ok();
    Ok(TiledSet::new(ts.complex, ts.tiles, shelled))
}

#[derive(Serialize, Deserialize)]
struct StaircaseWire {
    n: usize,
    m: usize,
    e: Vec<usize>,
}

pub fn staircase_to_json(s: &Staircase) -> Value {
    serde_json::to_value(StaircaseWire {
        n: s.n(),
        m: s.m(),
        e: s.ends().to_vec(),
    })
    .expect("plain data serializes")
}

pub fn staircase_from_json(v: &Value) -> Result<Staircase> {
    let wire: StaircaseWire = serde_json::from_value(v.clone()).map_err(malformed)?;
    Staircase::new(wire.n, wire.m, wire.e)
}

/// The flat vector-centric summary the command line prints: the two graded
/// vectors with their palindromy flags, the Euler characteristic, purity,
/// the critical census and, when a construction carried one, the formula
/// comparison.
#[derive(Clone, Debug, Serialize)]
pub struct CliReport {
    pub h: GradedVector,
    pub c: GradedVector,
    pub palindromic_h: bool,
    pub palindromic_c: bool,
    pub euler: i64,
    pub pure: bool,
    pub critical_tiles: Vec<CriticalCount>,
    pub formula_comparison: Option<FormulaComparison>,
}

impl CliReport {
    pub fn new(report: &TilingReport, formula_comparison: Option<FormulaComparison>) -> CliReport {
        CliReport {
            h: report.h.clone(),
            c: report.c.clone(),
            palindromic_h: report.palindromic_h,
            palindromic_c: report.palindromic_c,
            euler: report.euler,
            pure: report.pure,
            critical_tiles: report.critical_tiles.clone(),
            formula_comparison,
        }
    }
}

pub fn report_to_json(report: &TilingReport) -> Value {
    serde_json::to_value(report).expect("report fields serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{capped_cylinder_tiling, octahedron_tiling};
    use crate::staircase::enumerate_staircases;

    #[test]
    fn complexes_round_trip_and_print_canonically() {
        let mut complex = build_complex(vec![
            Simplex::from_ids([2, 0, 1]).unwrap(),
            Simplex::from_ids([2, 3]).unwrap(),
        ])
        .unwrap();
        complex.orient_by_id();
        let v = complex_to_json(&complex);
        assert_eq!(
            v.to_string(),
            r#"{"maximal":[[0,1,2],[2,3]],"orientation":[[0,1],[0,2],[1,2],[2,3]],"vertices":[0,1,2,3]}"#
        );
        assert_eq!(complex_from_json(&v).unwrap(), complex);

        let bare = build_complex(vec![Simplex::from_ids([0, 1]).unwrap()]).unwrap();
        let v = complex_to_json(&bare);
        assert_eq!(v.to_string(), r#"{"maximal":[[0,1]],"vertices":[0,1]}"#);
        assert_eq!(complex_from_json(&v).unwrap(), bare);
    }

    #[test]
    fn complex_reading_rejects_vertex_set_lies() {
        let v: Value =
            serde_json::from_str(r#"{"vertices":[0,1,2,9],"maximal":[[0,1,2]]}"#).unwrap();
        assert!(complex_from_json(&v).is_err());
        let v: Value = serde_json::from_str(r#"{"vertices":[0,1],"maximal":[[0,1,2]]}"#).unwrap();
        assert!(complex_from_json(&v).is_err());
    }

    #[test]
    fn tiles_round_trip_with_and_without_morse_face() {
        let ts = octahedron_tiling();
        for tile in &ts.tiles {
            let v = tile_to_json(tile);
            assert_eq!(&tile_from_json(&v).unwrap(), tile);
        }
        let closed = tile_to_json(&ts.tiles[0]);
        assert_eq!(
            closed.to_string(),
            r#"{"morse_face":null,"removed":[],"simplex":[0,1,2]}"#
        );
        let pinned = tile_to_json(&ts.tiles[5]);
        assert_eq!(
            pinned.to_string(),
            r#"{"morse_face":[5],"removed":[5],"simplex":[3,4,5]}"#
        );
    }

    #[test]
    fn tile_reading_rejects_a_removed_vertex_outside_the_simplex() {
        let v: Value =
            serde_json::from_str(r#"{"simplex":[0,1,2],"removed":[7],"morse_face":null}"#).unwrap();
        assert!(tile_from_json(&v).is_err());
    }

    #[test]
    fn tilings_round_trip_and_the_shelling_claim_is_measured() {
        for (ts, shelled) in [(octahedron_tiling(), true), (capped_cylinder_tiling(), false)] {
            let v = tiling_to_json(&ts);
            let back = tiling_from_json(&v).unwrap();
            assert_eq!(back.complex, ts.complex);
            assert_eq!(back.tiles, ts.tiles);
            assert_eq!(back.is_shelling, shelled);
            // canonical output is reproducible byte for byte
            assert_eq!(v.to_string(), tiling_to_json(&back).to_string());
        }
    }

    #[test]
    fn staircases_round_trip() {
        for s in enumerate_staircases(2, 3).unwrap() {
            let v = staircase_to_json(&s);
            assert_eq!(staircase_from_json(&v).unwrap(), s);
        }
        let v: Value = serde_json::from_str(r#"{"n":2,"m":3,"e":[3,1,3]}"#).unwrap();
        assert!(staircase_from_json(&v).is_err(), "ends must be monotone");
    }
}

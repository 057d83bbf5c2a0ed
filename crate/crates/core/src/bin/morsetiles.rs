//! Command-line front end: named example tilings, products of tiling
//! files, verification and reporting, staircase and subdivision dumps, and
//! mixed decompositions with optional SVG export.
//!
//! All machine output is canonical JSON (sorted keys, sorted collections)
//! on stdout or `--out`, so identical invocations print identical bytes. A
//! one-line summary goes to stderr unless `--quiet`. Exit codes: 0 when
//! every declared check passes, 1 for usage errors, 2 when verification
//! fails.

use std::fs;
use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;
use serde_json::{json, Value};

use morsetiles::{
    analyze, boundary_simplex_shelling, boundary_triangle_fan, c_vector_tiling,
    capped_cylinder_tiling, complex_from_json, complex_to_json, enumerate_staircases, export_svg,
    h_vector_tiling, handle_tiling, iso_tiles_tiling, octahedron_tiling, product_h_tiling,
    product_tiling, report_to_json, sphere_torus_tiling, staircase_to_json, tiling_from_json,
    tiling_to_json, CliReport, Error, FormulaComparison, GradedVector, IsoTilesVariant, MixedCell,
    MorseTile, TiledSet, TilingReport,
};

#[derive(Parser)]
#[command(name = "morsetiles", version, about = "Morse tilings, shellings and mixed decompositions")]
struct Cli {
    /// Write the JSON or SVG document here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Refuse constructions whose total dimension exceeds this bound.
    #[arg(long, global = true, default_value_t = 8)]
    max_dim: usize,

    /// Suppress the summary line on stderr.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named example, verify its declared properties and emit the
    /// tiling together with its report.
    Example {
        #[command(subcommand)]
        which: ExampleCmd,
    },
    /// Multiply two tiling files; with --h-tiling both factors must be
    /// h-tilings and the compatibility condition is enforced.
    Product {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        h_tiling: bool,
    },
    /// Re-verify a tiling file and emit its full report.
    Verify { file: PathBuf },
    /// Emit the flat vector summary of a tiling file.
    Vectors { file: PathBuf },
    /// List every staircase of the (n, m) product.
    Staircases {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Barycentrically subdivide a complex file; the output carries the
    /// orientation that makes subdivided tilings tame.
    Subdivide { file: PathBuf },
    /// Mixed decomposition of the m-simplex by n+1 weighted copies; JSON
    /// cell list by default, a drawing with --svg (m = 2 only).
    Mixdec {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Comma-separated positive fractions summing to 1, e.g. 1/2,1/3,1/6;
        /// uniform weights when omitted.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        svg: bool,
    },
}

#[derive(Subcommand)]
enum ExampleCmd {
    /// The boundary of the n-simplex, shelled with one tile per order.
    BoundarySimplex {
        #[arg(long)]
        n: usize,
    },
    /// The three-tile circle: a valid tiling no order of which shells.
    BoundarySimplexNonshellable,
    /// The octahedron sphere with its mixed Morse shelling.
    Octahedron,
    /// The sphere built from a prism and two open caps; h-tiling, never a
    /// shelling.
    CappedCylinder,
    /// The open k-simplex times the closed (n-k)-simplex: one critical tile
    /// of index k.
    Handle {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// The shelled (n-1)-sphere multiplied by m circle factors.
    SphereTorus {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// A product of simplices shelled by a single repeated tile shape.
    IsoTiles {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        variant: VariantArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    OrderN,
    OrderM,
    OrderNPlusOne,
    OrderMPlusOne,
}

impl From<VariantArg> for IsoTilesVariant {
    fn from(v: VariantArg) -> IsoTilesVariant {
        match v {
            VariantArg::OrderN => IsoTilesVariant::OrderN,
            VariantArg::OrderM => IsoTilesVariant::OrderM,
            VariantArg::OrderNPlusOne => IsoTilesVariant::OrderNPlusOne,
            VariantArg::OrderMPlusOne => IsoTilesVariant::OrderMPlusOne,
        }
    }
}

/// Usage problems exit 1, failed verification exits 2.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::InvalidInput(_) | Error::UnsupportedDimension(_) => Failure::Usage(e.to_string()),
            other => Failure::Verification(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
        // help and version go to stdout and exit cleanly
        Err(e) => {
            let _ = write!(std::io::stdout(), "{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            let _ = emit(&cli, &json!({ "error": msg }).to_string());
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            match out
                .write_all(text.as_bytes())
                .and_then(|()| out.write_all(b"\n"))
            {
                Ok(()) => Ok(()),
                // the consumer hung up; that is their call, not a failure
                Err(e) if e.kind() == ErrorKind::BrokenPipe => std::process::exit(0),
                Err(e) => Err(Failure::Usage(format!("cannot write to stdout: {e}"))),
            }
        }
    }
}

fn summary(cli: &Cli, line: &str) {
    if !cli.quiet {
        eprintln!("{line}");
    }
}

fn guard_dim(cli: &Cli, dim: usize, what: &str) -> Result<(), Failure> {
    if dim > cli.max_dim {
        return Err(Failure::Usage(format!(
            "{what} has dimension {dim}, above the bound {} (raise --max-dim to override)",
            cli.max_dim
        )));
    }
    Ok(())
}

fn read_json(path: &PathBuf) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("{} is not JSON: {e}", path.display())))
}

/// Accept either a bare tiling or a whole emitted document; the commands
/// compose that way, e.g. an `example` output feeds straight into
/// `product`.
fn read_tiling(path: &PathBuf) -> Result<TiledSet, Failure> {
    let mut value = read_json(path)?;
    if let Some(inner) = value.get_mut("tiling") {
        value = inner.take();
    }
    Ok(tiling_from_json(&value)?)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Example { which } => cmd_example(cli, which),
        Command::Product {
            file1,
            file2,
            h_tiling,
        } => cmd_product(cli, file1, file2, *h_tiling),
        Command::Verify { file } => cmd_verify(cli, file),
        Command::Vectors { file } => cmd_vectors(cli, file),
        Command::Staircases { n, m } => cmd_staircases(cli, *n, *m),
        Command::Subdivide { file } => cmd_subdivide(cli, file),
        Command::Mixdec { n, m, alpha, svg } => cmd_mixdec(cli, *n, *m, alpha.as_deref(), *svg),
    }
}

/// The checks an example promises, beyond being a valid tiling. Handles
/// and single-shape products tile a half-open subset of their carrier, so
/// full coverage is a declaration, not a given.
struct Declared {
    name: &'static str,
    shelling: bool,
    covers: bool,
    extras: Vec<(String, bool)>,
}

fn ones(len: usize) -> GradedVector {
    GradedVector::new(vec![1; len])
}

fn cmd_example(cli: &Cli, which: &ExampleCmd) -> Result<(), Failure> {
    let (ts, formula, declared) = build_example(cli, which)?;
    let report = analyze(&ts, false);
    let mut failed: Vec<String> = Vec::new();
    if !(report.valid_partition && report.valid_closure) {
        failed.push("tiling".into());
    }
    if report.covers_complex != declared.covers {
        failed.push("coverage".into());
    }
    if report.tame != Some(true) {
        failed.push("tame".into());
    }
    if !report.euler_identity {
        failed.push("euler-identity".into());
    }
    if declared.shelling && !report.valid_shelling {
        failed.push("shelling".into());
    }
    if !declared.shelling && report.valid_shelling {
        failed.push("advertised-as-nonshellable".into());
    }
    for (label, ok) in &declared.extras {
        if !ok {
            failed.push(label.clone());
        }
    }
    let doc = json!({
        "failed_checks": failed,
        "formula_comparison": formula,
        "report": report_to_json(&report),
        "tiling": tiling_to_json(&ts),
    });
    emit(cli, &doc.to_string())?;
    summary(
        cli,
        &format!(
            "{}: {} tiles, dimension {}, h={:?}, c={:?}, {}",
            declared.name,
            report.tile_count,
            report.dimension,
            report.h.entries(),
            report.c.entries(),
            if failed.is_empty() {
                "all declared checks pass".to_string()
            } else {
                format!("FAILED {failed:?}")
            },
        ),
    );
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "example {} failed checks: {}",
            declared.name,
            failed.join(", ")
        )))
    }
}

fn build_example(
    cli: &Cli,
    which: &ExampleCmd,
) -> Result<(TiledSet, Option<FormulaComparison>, Declared), Failure> {
    match which {
        ExampleCmd::BoundarySimplex { n } => {
            // the boundary of the n-simplex is an (n-1)-sphere
            if *n == 0 {
                return Err(Failure::Usage("the 0-simplex has empty boundary".into()));
            }
            guard_dim(cli, n - 1, "boundary-simplex")?;
            let ts = boundary_simplex_shelling(n - 1);
            let h = h_vector_tiling(&ts);
            let extras = vec![("h-all-ones".to_string(), h == ones(n + 1))];
            Ok((
                ts,
                None,
                Declared {
                    name: "boundary-simplex",
                    covers: true,
                    shelling: true,
                    extras,
                },
            ))
        }
        ExampleCmd::BoundarySimplexNonshellable => {
            let ts = boundary_triangle_fan();
            let h = h_vector_tiling(&ts);
            let extras = vec![("h".to_string(), h == GradedVector::new(vec![0, 3, 0]))];
            Ok((
                ts,
                None,
                Declared {
                    name: "boundary-simplex-nonshellable",
                    covers: true,
                    shelling: false,
                    extras,
                },
            ))
        }
        ExampleCmd::Octahedron => {
            let ts = octahedron_tiling();
            let h = h_vector_tiling(&ts);
            let c = c_vector_tiling(&ts);
            let extras = vec![
                ("h".to_string(), h == GradedVector::new(vec![1, 4, 1, 2])),
                ("c".to_string(), c == GradedVector::new(vec![1, 1, 2])),
            ];
            Ok((
                ts,
                None,
                Declared {
                    name: "octahedron",
                    covers: true,
                    shelling: true,
                    extras,
                },
            ))
        }
        ExampleCmd::CappedCylinder => {
            let ts = capped_cylinder_tiling();
            let h = h_vector_tiling(&ts);
            let c = c_vector_tiling(&ts);
            let extras = vec![
                ("h".to_string(), h == GradedVector::new(vec![0, 6, 0, 2])),
                ("c".to_string(), c == GradedVector::new(vec![0, 0, 2])),
            ];
            Ok((
                ts,
                None,
                Declared {
                    name: "capped-cylinder",
                    covers: true,
                    shelling: false,
                    extras,
                },
            ))
        }
        ExampleCmd::Handle { k, n } => {
            guard_dim(cli, *n, "handle")?;
            let ts = handle_tiling(*k, *n)?;
            let criticals: Vec<usize> = ts
                .tiles
                .iter()
                .filter_map(MorseTile::critical_index)
                .collect();
            let extras = vec![(format!("one-critical-of-index-{k}"), criticals == vec![*k])];
            Ok((
                ts,
                None,
                Declared {
                    name: "handle",
                    covers: false,
                    shelling: true,
                    extras,
                },
            ))
        }
        ExampleCmd::SphereTorus { n, m } => {
            guard_dim(cli, n + m, "sphere-torus")?;
            let (ts, formula) = sphere_torus_tiling(*n, *m)?;
            let c = c_vector_tiling(&ts);
            let h = h_vector_tiling(&ts);
            let extras = vec![
                ("no-critical-tiles".to_string(), c.entries().iter().all(|&x| x == 0)),
                ("palindromic-h".to_string(), h.is_palindromic()),
                (
                    "exactly-one-formula-candidate".to_string(),
                    formula.matches_formula != formula.matches_scaled,
                ),
            ];
            Ok((
                ts,
                Some(formula),
                Declared {
                    name: "sphere-torus",
                    covers: true,
                    shelling: false,
                    extras,
                },
            ))
        }
        ExampleCmd::IsoTiles { n, m, variant } => {
            guard_dim(cli, n + m, "iso-tiles")?;
            let v = IsoTilesVariant::from(*variant);
            let ts = iso_tiles_tiling(*n, *m, v)?;
            let order = v.tile_order(*n, *m);
            let uniform = ts.tiles.iter().all(|t| t.is_basic() && t.order() == order);
            let extras = vec![(format!("all-basic-of-order-{order}"), uniform)];
            Ok((
                ts,
                None,
                Declared {
                    name: "iso-tiles",
                    covers: false,
                    shelling: true,
                    extras,
                },
            ))
        }
    }
}

fn cmd_product(cli: &Cli, file1: &PathBuf, file2: &PathBuf, h_tiling: bool) -> Result<(), Failure> {
    let s1 = read_tiling(file1)?;
    let s2 = read_tiling(file2)?;
    guard_dim(cli, s1.complex.dim() + s2.complex.dim(), "product")?;
    let out = if h_tiling {
        product_h_tiling(&s1, &s2)?
    } else {
        product_tiling(&s1, &s2)?
    };
    let report = analyze(&out, false);
    let mut failed: Vec<String> = Vec::new();
    if !(report.valid_partition && report.valid_closure) {
        failed.push("tiling".into());
    }
    if report.tame != Some(true) {
        failed.push("tame".into());
    }
    if !report.euler_identity {
        failed.push("euler-identity".into());
    }
    if out.is_shelling && !report.valid_shelling {
        failed.push("shelling".into());
    }
    let doc = json!({
        "failed_checks": failed,
        "formula_comparison": Value::Null,
        "report": report_to_json(&report),
        "tiling": tiling_to_json(&out),
    });
    emit(cli, &doc.to_string())?;
    summary(
        cli,
        &format!(
            "product: {} tiles, dimension {}, h={:?}, c={:?}",
            report.tile_count,
            report.dimension,
            report.h.entries(),
            report.c.entries(),
        ),
    );
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "product failed checks: {}",
            failed.join(", ")
        )))
    }
}

fn load_and_analyze(cli: &Cli, file: &PathBuf) -> Result<(TiledSet, TilingReport), Failure> {
    let ts = read_tiling(file)?;
    guard_dim(cli, ts.complex.dim(), "input tiling")?;
    let report = analyze(&ts, false);
    Ok((ts, report))
}

fn cmd_verify(cli: &Cli, file: &PathBuf) -> Result<(), Failure> {
    let (_, report) = load_and_analyze(cli, file)?;
    emit(cli, &report_to_json(&report).to_string())?;
    summary(
        cli,
        &format!(
            "verify: partition {}, closure {}, shelling order {}, tame {:?}",
            report.valid_partition, report.valid_closure, report.valid_shelling, report.tame,
        ),
    );
    if report.valid_partition && report.valid_closure {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "invalid tiling: {}",
            report.witnesses.join("; ")
        )))
    }
}

fn cmd_vectors(cli: &Cli, file: &PathBuf) -> Result<(), Failure> {
    let (_, report) = load_and_analyze(cli, file)?;
    let flat = CliReport::new(&report, None);
    let doc = serde_json::to_value(&flat).expect("report serializes");
    emit(cli, &doc.to_string())?;
    summary(
        cli,
        &format!("vectors: h={:?}, c={:?}", report.h.entries(), report.c.entries()),
    );
    if report.valid_partition && report.valid_closure {
        Ok(())
    } else {
        Err(Failure::Verification("invalid tiling".into()))
    }
}

fn cmd_staircases(cli: &Cli, n: usize, m: usize) -> Result<(), Failure> {
    guard_dim(cli, n + m, "staircases")?;
    let list = enumerate_staircases(n, m).map_err(Failure::from)?;
    let doc = Value::Array(list.iter().map(staircase_to_json).collect());
    emit(cli, &doc.to_string())?;
    summary(cli, &format!("staircases({n},{m}): {} entries", list.len()));
    Ok(())
}

fn cmd_subdivide(cli: &Cli, file: &PathBuf) -> Result<(), Failure> {
    // bare complex, bare tiling or whole document all work
    let mut value = read_json(file)?;
    for key in ["tiling", "complex"] {
        if let Some(inner) = value.get_mut(key) {
            value = inner.take();
        }
    }
    let complex = complex_from_json(&value)?;
    guard_dim(cli, complex.dim(), "input complex")?;
    let subdivided = complex.barycentric_subdivision()?;
    let doc = complex_to_json(&subdivided.complex);
    emit(cli, &doc.to_string())?;
    summary(
        cli,
        &format!(
            "subdivide: {} maximal simplices over {} vertices",
            subdivided.complex.maximal().len(),
            subdivided.complex.vertices().len(),
        ),
    );
    Ok(())
}

fn parse_weights(n: usize, alpha: Option<&str>) -> Result<Vec<BigRational>, Failure> {
    match alpha {
        None => {
            let share = BigRational::new(1.into(), (n as i64 + 1).into());
            Ok(vec![share; n + 1])
        }
        Some(text) => text
            .split(',')
            .map(|part| {
                BigRational::from_str(part.trim())
                    .map_err(|e| Failure::Usage(format!("bad weight {part:?}: {e}")))
            })
            .collect(),
    }
}

fn cmd_mixdec(cli: &Cli, n: usize, m: usize, alpha: Option<&str>, svg: bool) -> Result<(), Failure> {
    guard_dim(cli, n + m, "mixdec")?;
    let weights = parse_weights(n, alpha)?;
    if svg {
        let drawing = export_svg(n, m, &weights)?;
        emit(cli, drawing.trim_end())?;
        summary(cli, &format!("mixdec({n},{m}): svg"));
        return Ok(());
    }
    let staircases = enumerate_staircases(n, m).map_err(Failure::from)?;
    let mut cells = Vec::new();
    for s in &staircases {
        // validates positivity and total weight once per cell
        let cell = MixedCell::new(s.clone(), weights.clone()).map_err(Failure::from)?;
        cells.push(staircase_to_json(cell.staircase()));
    }
    let doc = json!({
        "cells": cells,
        "m": m,
        "n": n,
        "weights": weights.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
    });
    emit(cli, &doc.to_string())?;
    summary(cli, &format!("mixdec({n},{m}): {} cells", cells_len(&doc)));
    Ok(())
}

fn cells_len(doc: &Value) -> usize {
    doc.get("cells").and_then(Value::as_array).map_or(0, Vec::len)
}

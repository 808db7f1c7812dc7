//! Command implementations behind the `gc-fibers` binary.
//!
//! Every command returns a [`Report`]: the rendered output and whether all requested checks
//! passed. The binary writes the text and turns `ok` into the exit code.

pub mod render;

use std::fmt::Write;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use serde::Serialize;

use gc_fibers::{
    build_ladder, enumerate_faces, face_from_equalities, face_lattice, fiber_descriptor,
    gc_inequalities, homotopy_invariants, lagrangian_classification, psi, rigid_l_blocks,
    torus_factorization, verify_face, Face, LBlock, LadderDiagram, LambdaSpec, StageFiber,
    VerifyReport,
};

/// Output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Ascii,
    Svg,
}

/// Which faces a command acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceSelector {
    All,
    Id(String),
    /// A comma-separated equality list such as `u11=u12,u13=4`.
    Equalities(String),
}

impl FaceSelector {
    /// `--face` takes an id or `all`; `--face-by-equalities` wins when both are absent.
    pub fn from_args(face: Option<&str>, equalities: Option<&str>) -> Result<Self> {
        match (face, equalities) {
            (Some(_), Some(_)) => bail!("--face and --face-by-equalities are mutually exclusive"),
            (None, Some(eq)) => Ok(FaceSelector::Equalities(eq.to_string())),
            (Some("all") | None, None) => Ok(FaceSelector::All),
            (Some(id), None) => Ok(FaceSelector::Id(id.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Faces,
    Lagrangian,
    Fiber {
        face: FaceSelector,
    },
    Verify {
        face: FaceSelector,
        samples: usize,
    },
    Render {
        face: FaceSelector,
        overlay: Option<usize>,
    },
    Polytope,
}

/// Everything one invocation needs.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub lambda: LambdaSpec,
    pub command: Command,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
    pub tol: f64,
    pub jobs: Option<usize>,
}

/// Rendered output and the overall verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub text: String,
    pub ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, ok: true }
    }
}

/// Parses `--overlay w2` into `Some(2)`.
pub fn parse_overlay(s: &str) -> Result<usize> {
    s.strip_prefix('w')
        .or_else(|| s.strip_prefix('W'))
        .and_then(|k| k.parse().ok())
        .ok_or_else(|| anyhow!("overlay must look like w2, got {s:?}"))
}

/// Runs a command inside a thread pool of `jobs` threads when requested.
pub fn run(config: &RunConfig) -> Result<Report> {
    if config.tol.is_nan() || config.tol <= 0.0 {
        bail!("--tol must be positive");
    }
    match config.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .context("cannot start the worker pool")?
            .install(|| dispatch(config)),
        None => dispatch(config),
    }
}

fn dispatch(config: &RunConfig) -> Result<Report> {
    match &config.command {
        Command::Faces => cmd_faces(config),
        Command::Lagrangian => cmd_lagrangian(config),
        Command::Fiber { face } => cmd_fiber(config, face),
        Command::Verify { face, samples } => cmd_verify(config, face, *samples),
        Command::Render { face, overlay } => cmd_render(config, face, *overlay),
        Command::Polytope => cmd_polytope(config),
    }
}

fn diagram(config: &RunConfig) -> Result<Arc<LadderDiagram>> {
    Ok(build_ladder(&config.lambda)?)
}

/// Every face, ordered by id so output does not depend on the enumeration strategy.
pub fn all_faces(diagram: &Arc<LadderDiagram>) -> Result<Vec<Face>> {
    let mut faces = enumerate_faces(diagram)?;
    faces.sort_by_cached_key(Face::id);
    Ok(faces)
}

/// Resolves a selector to at least one face, ordered by id.
pub fn resolve_faces(diagram: &Arc<LadderDiagram>, selector: &FaceSelector) -> Result<Vec<Face>> {
    match selector {
        FaceSelector::Equalities(text) => Ok(vec![face_from_equalities(diagram, text)?]),
        FaceSelector::All => all_faces(diagram),
        FaceSelector::Id(id) => {
            if id == "improper" {
                return Ok(vec![Face::improper(diagram)]);
            }
            let face = enumerate_faces(diagram)?
                .into_iter()
                .find(|f| f.id() == *id)
                .ok_or_else(|| {
                    anyhow!("no face with id {id:?}; list ids with the faces command")
                })?;
            Ok(vec![face])
        }
    }
}

fn block_label(b: &LBlock) -> String {
    format!("L{}({},{})", b.k, b.p, b.q)
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn expect_format(config: &RunConfig, allowed: &[Format]) -> Result<()> {
    if allowed.contains(&config.format) {
        Ok(())
    } else {
        bail!(
            "format {:?} is not available for this command (use one of {:?})",
            config.format,
            allowed
        )
    }
}

#[derive(Serialize)]
struct FaceRow {
    id: String,
    dim: usize,
    edges: Vec<String>,
    equalities: Vec<String>,
}

#[derive(Serialize)]
struct FacesReport {
    lambda: Vec<String>,
    f_vector: Vec<usize>,
    faces: Vec<FaceRow>,
}

fn lambda_strings(spec: &LambdaSpec) -> Vec<String> {
    spec.values().iter().map(ToString::to_string).collect()
}

/// Every face with its dimension and the equalities cutting out its polytope face.
pub fn cmd_faces(config: &RunConfig) -> Result<Report> {
    expect_format(config, &[Format::Table, Format::Json])?;
    let d = diagram(config)?;
    let faces = all_faces(&d)?;
    let rows: Vec<FaceRow> = faces
        .par_iter()
        .map(|f| FaceRow {
            id: f.id(),
            dim: f.dim(),
            edges: f.edges().iter().map(ToString::to_string).collect(),
            equalities: psi(f).items.iter().map(ToString::to_string).collect(),
        })
        .collect();
    let f_vector = face_lattice(faces).f_vector();
    let report = FacesReport {
        lambda: lambda_strings(&config.lambda),
        f_vector,
        faces: rows,
    };
    if config.format == Format::Json {
        return Ok(Report::ok(json(&report)?));
    }
    let mut s = String::new();
    let _ = writeln!(s, "{:<12}  {:>3}  equalities", "id", "dim");
    for r in &report.faces {
        let eq = if r.equalities.is_empty() {
            "-".to_string()
        } else {
            r.equalities.join(",")
        };
        let _ = writeln!(s, "{:<12}  {:>3}  {}", r.id, r.dim, eq);
    }
    let fv: Vec<String> = report.f_vector.iter().map(ToString::to_string).collect();
    let _ = writeln!(
        s,
        "f-vector: {} ({} faces)",
        fv.join(" "),
        report.faces.len()
    );
    Ok(Report::ok(s))
}

#[derive(Serialize)]
struct LagrangianRow {
    id: String,
    dim: usize,
    proper: bool,
    blocks: Vec<String>,
    fiber_dim: usize,
    bundle: String,
}

#[derive(Serialize)]
struct LagrangianSummary {
    lambda: Vec<String>,
    complex_dim: usize,
    proper: usize,
    improper: usize,
    faces: Vec<LagrangianRow>,
}

/// The Lagrangian faces with their rigid L-blocks.
pub fn cmd_lagrangian(config: &RunConfig) -> Result<Report> {
    expect_format(config, &[Format::Table, Format::Json])?;
    let d = diagram(config)?;
    let faces = all_faces(&d)?;
    let rows: Vec<Option<LagrangianRow>> = faces
        .par_iter()
        .map(|f| -> Result<Option<LagrangianRow>> {
            let r = lagrangian_classification(f)?;
            if !r.is_lagrangian {
                return Ok(None);
            }
            Ok(Some(LagrangianRow {
                id: f.id(),
                dim: f.dim(),
                proper: !f.is_improper(),
                blocks: r.blocks.iter().map(block_label).collect(),
                fiber_dim: r.fiber_dim,
                bundle: fiber_descriptor(f).bundle,
            }))
        })
        .collect::<Result<_>>()?;
    let rows: Vec<LagrangianRow> = rows.into_iter().flatten().collect();
    let proper = rows.iter().filter(|r| r.proper).count();
    let summary = LagrangianSummary {
        lambda: lambda_strings(&config.lambda),
        complex_dim: gc_fibers::complex_dimension(&config.lambda),
        proper,
        improper: rows.len() - proper,
        faces: rows,
    };
    if config.format == Format::Json {
        return Ok(Report::ok(json(&summary)?));
    }
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<12}  {:>3}  {:<8}  {:<28}  fiber",
        "id", "dim", "kind", "rigid blocks"
    );
    for r in &summary.faces {
        let _ = writeln!(
            s,
            "{:<12}  {:>3}  {:<8}  {:<28}  {}",
            r.id,
            r.dim,
            if r.proper { "proper" } else { "improper" },
            r.blocks.join(" "),
            r.bundle
        );
    }
    let _ = writeln!(
        s,
        "{} proper + {} improper Lagrangian faces (complex dimension {})",
        summary.proper, summary.improper, summary.complex_dim
    );
    Ok(Report::ok(s))
}

/// One fiber record; the leading fields form the stable JSON schema.
#[derive(Serialize)]
struct FiberRecord {
    face_id: String,
    dim: usize,
    stages: Vec<StageFiber>,
    total_dim: usize,
    r: usize,
    lagrangian: bool,
    l_blocks: Vec<LBlock>,
    bundle: String,
    y_stages: Vec<StageFiber>,
    y_bundle: String,
    pi1_rank: usize,
    pi2_trivial: bool,
}

fn fiber_record(face: &Face) -> Result<FiberRecord> {
    let d = fiber_descriptor(face);
    let torus = torus_factorization(&d);
    let homotopy = homotopy_invariants(&d);
    let l_blocks = if d.is_lagrangian {
        lagrangian_classification(face)?.blocks
    } else {
        rigid_l_blocks(face)
    };
    Ok(FiberRecord {
        face_id: d.face_id,
        dim: face.dim(),
        stages: d.stages,
        total_dim: d.total_dim,
        r: torus.r,
        lagrangian: d.is_lagrangian,
        l_blocks,
        bundle: d.bundle,
        y_stages: torus.y_stages,
        y_bundle: torus.y_bundle,
        pi1_rank: homotopy.pi1_rank,
        pi2_trivial: homotopy.pi2_trivial,
    })
}

/// Stages, bundle string, `T^r × Y` splitting and homotopy data of each selected face.
pub fn cmd_fiber(config: &RunConfig, selector: &FaceSelector) -> Result<Report> {
    expect_format(config, &[Format::Table, Format::Json])?;
    let d = diagram(config)?;
    let faces = resolve_faces(&d, selector)?;
    let rows: Vec<FiberRecord> = faces.par_iter().map(fiber_record).collect::<Result<_>>()?;
    if config.format == Format::Json {
        return Ok(Report::ok(json(&rows)?));
    }
    let mut s = String::new();
    for r in &rows {
        let stages: Vec<String> = r.stages.iter().map(|st| st.product_string()).collect();
        let blocks: Vec<String> = r.l_blocks.iter().map(block_label).collect();
        let _ = writeln!(s, "face {} (dim {})", r.face_id, r.dim);
        let _ = writeln!(s, "  stages:     {}", stages.join(" | "));
        let _ = writeln!(s, "  fiber:      {}", r.bundle);
        let _ = writeln!(
            s,
            "  dimension:  {}{}",
            r.total_dim,
            if r.lagrangian { " (Lagrangian)" } else { "" }
        );
        let _ = writeln!(s, "  splitting:  T^{} x Y, Y = {}", r.r, r.y_bundle);
        if !blocks.is_empty() {
            let _ = writeln!(s, "  L-blocks:   {}", blocks.join(" "));
        }
        let _ = writeln!(
            s,
            "  homotopy:   pi_1 = Z^{}, pi_2 {}",
            r.pi1_rank,
            if r.pi2_trivial { "= 0" } else { "!= 0" }
        );
    }
    Ok(Report::ok(s))
}

#[derive(Serialize)]
struct VerifySummary {
    lambda: Vec<String>,
    seed: u64,
    samples: usize,
    tolerance: f64,
    passed: usize,
    failed: usize,
    reports: Vec<VerifyReport>,
}

/// Samples matrices over each selected face and compares them with the diagram prediction.
pub fn cmd_verify(config: &RunConfig, selector: &FaceSelector, samples: usize) -> Result<Report> {
    expect_format(config, &[Format::Table, Format::Json])?;
    if samples == 0 {
        bail!("--samples must be at least 1");
    }
    let d = diagram(config)?;
    let faces = resolve_faces(&d, selector)?;
    let reports: Vec<VerifyReport> = faces
        .par_iter()
        .map(|f| verify_face(f, samples, config.seed, config.tol))
        .collect::<gc_fibers::Result<_>>()?;
    let passed = reports.iter().filter(|r| r.passed).count();
    let summary = VerifySummary {
        lambda: lambda_strings(&config.lambda),
        seed: config.seed,
        samples,
        tolerance: config.tol,
        passed,
        failed: reports.len() - passed,
        reports,
    };
    let ok = summary.failed == 0;
    let text = if config.format == Format::Json {
        json(&summary)?
    } else {
        let mut s = String::new();
        for r in &summary.reports {
            let _ = writeln!(
                s,
                "[{}] {}  dim {}={}  round-trip {:.1e}  spectrum {:.1e}",
                if r.passed { "PASS" } else { "FAIL" },
                r.face_id,
                r.expected_dim,
                r.empirical_dim,
                r.max_roundtrip_err,
                r.max_spectrum_err
            );
            for f in &r.failures {
                let _ = writeln!(s, "    {f}");
            }
        }
        let _ = writeln!(
            s,
            "{} passed, {} failed ({} samples per face, seed {})",
            summary.passed, summary.failed, samples, config.seed
        );
        s
    };
    Ok(Report { text, ok })
}

/// ASCII or SVG picture of one face; without a selector the whole diagram is drawn.
pub fn cmd_render(
    config: &RunConfig,
    selector: &FaceSelector,
    overlay: Option<usize>,
) -> Result<Report> {
    expect_format(config, &[Format::Table, Format::Ascii, Format::Svg])?;
    let d = diagram(config)?;
    let face = match selector {
        FaceSelector::All => Face::improper(&d),
        other => resolve_faces(&d, other)?.remove(0),
    };
    let text = match config.format {
        Format::Svg => render::svg(&face, overlay)?,
        _ => render::ascii(&face, overlay)?,
    };
    Ok(Report::ok(text))
}

/// The H-representation of the polytope.
pub fn cmd_polytope(config: &RunConfig) -> Result<Report> {
    expect_format(config, &[Format::Table, Format::Json])?;
    let h = gc_inequalities(&config.lambda);
    if config.format == Format::Json {
        return Ok(Report::ok(json(&h)?));
    }
    let mut s = String::new();
    let _ = writeln!(s, "variables: {}", h.variables.join(" "));
    for ineq in &h.inequalities {
        let _ = writeln!(s, "{}", ineq.text);
    }
    let _ = writeln!(s, "{} inequalities", h.inequalities.len());
    Ok(Report::ok(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(lambda: &str, command: Command, format: Format) -> RunConfig {
        RunConfig {
            lambda: lambda.parse().unwrap(),
            command,
            format,
            out: None,
            seed: 7,
            tol: 1e-8,
            jobs: None,
        }
    }

    #[test]
    fn selector_parsing() {
        assert_eq!(
            FaceSelector::from_args(None, None).unwrap(),
            FaceSelector::All
        );
        assert_eq!(
            FaceSelector::from_args(Some("all"), None).unwrap(),
            FaceSelector::All
        );
        assert_eq!(
            FaceSelector::from_args(Some("abc"), None).unwrap(),
            FaceSelector::Id("abc".into())
        );
        assert!(FaceSelector::from_args(Some("abc"), Some("u11=0")).is_err());
    }

    #[test]
    fn overlay_parsing() {
        assert_eq!(parse_overlay("w2").unwrap(), 2);
        assert!(parse_overlay("x").is_err());
    }

    #[test]
    fn interval_has_three_faces() {
        let r = run(&config("1,0", Command::Faces, Format::Table)).unwrap();
        assert!(r.text.contains("f-vector: 2 1 (3 faces)"), "{}", r.text);
    }

    #[test]
    fn lagrangian_summary_lines() {
        let r = run(&config("3,2,1,0", Command::Lagrangian, Format::Table)).unwrap();
        assert!(r.text.contains("3 proper + 1 improper"));
        let r = run(&config("1,0", Command::Lagrangian, Format::Table)).unwrap();
        assert!(r.text.contains("0 proper + 1 improper"));
    }

    #[test]
    fn unknown_id_is_an_error() {
        let c = config(
            "1,0,-1",
            Command::Fiber {
                face: FaceSelector::Id("nope".into()),
            },
            Format::Table,
        );
        assert!(run(&c).is_err());
    }

    #[test]
    fn wrong_format_is_an_error() {
        assert!(run(&config("1,0", Command::Faces, Format::Svg)).is_err());
    }

    #[test]
    fn jobs_do_not_change_output() {
        let mut c = config("2,1,1,0", Command::Faces, Format::Json);
        let one = run(&c).unwrap();
        c.jobs = Some(3);
        assert_eq!(run(&c).unwrap(), one);
    }
}

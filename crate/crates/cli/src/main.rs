use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use gc_fibers::LambdaSpec;
use gc_fibers_cli::{parse_overlay, run, Command, FaceSelector, Format, RunConfig};

/// Gelfand-Cetlin fibers of co-adjoint orbits: faces, Lagrangian faces, fiber topology and
/// numerical verification.
#[derive(Parser, Debug)]
#[command(name = "gc-fibers", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Debug)]
struct Global {
    /// Non-increasing spectrum, comma separated (integers, p/q ratios or decimals).
    #[arg(long, global = true, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed of the matrix sampler.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Numerical tolerance, relative to the largest |λ_i|.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
struct FaceArgs {
    /// Face id from the `faces` command, `improper`, or `all`.
    #[arg(long)]
    face: Option<String>,
    /// Face given by equalities, e.g. "u11=u12,u13=4".
    #[arg(long)]
    face_by_equalities: Option<String>,
}

impl FaceArgs {
    fn selector(&self) -> Result<FaceSelector> {
        FaceSelector::from_args(self.face.as_deref(), self.face_by_equalities.as_deref())
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List every face with its dimension and defining equalities.
    Faces,
    /// List the Lagrangian faces and their rigid L-blocks.
    Lagrangian,
    /// Describe the fiber over the selected faces.
    Fiber(FaceArgs),
    /// Sample matrices in the fibers and check them against the diagram.
    Verify {
        #[command(flatten)]
        face: FaceArgs,
        /// Matrices sampled per face.
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
    /// Draw a face of the ladder diagram (ascii or svg).
    Render {
        #[command(flatten)]
        face: FaceArgs,
        /// Label the regions of a W-block, e.g. w2.
        #[arg(long)]
        overlay: Option<String>,
    },
    /// Export the inequalities of the polytope.
    Polytope,
}

fn config(cli: Cli) -> Result<RunConfig> {
    let text = cli
        .global
        .lambda
        .context("--lambda is required, e.g. --lambda 1,0,-1")?;
    let lambda: LambdaSpec = text
        .parse()
        .with_context(|| format!("invalid --lambda {text:?}"))?;
    let command = match cli.command {
        Cmd::Faces => Command::Faces,
        Cmd::Lagrangian => Command::Lagrangian,
        Cmd::Fiber(f) => Command::Fiber {
            face: f.selector()?,
        },
        Cmd::Verify { face, samples } => Command::Verify {
            face: face.selector()?,
            samples,
        },
        Cmd::Render { face, overlay } => Command::Render {
            face: face.selector()?,
            overlay: overlay.as_deref().map(parse_overlay).transpose()?,
        },
        Cmd::Polytope => Command::Polytope,
    };
    Ok(RunConfig {
        lambda,
        command,
        format: cli.global.format,
        out: cli.global.out,
        seed: cli.global.seed,
        tol: cli.global.tol,
        jobs: cli.global.jobs,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = config(cli).and_then(|cfg| {
        let report = run(&cfg)?;
        match &cfg.out {
            Some(path) => fs::write(path, &report.text)
                .with_context(|| format!("cannot write {}", path.display()))?,
            None => std::io::stdout()
                .write_all(report.text.as_bytes())
                .context("cannot write to stdout")?,
        }
        Ok(report.ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

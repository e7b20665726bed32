//! Command-line front end: parse a neutral-format model (or generate a
//! named fixture), run the extraction pipeline, and write a JSON report
//! plus an optional color-annotated mesh.

mod mesh;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use brep_extract::convexity::ClassifyParams;
use brep_extract::factory::{build_fixture, FixtureSpec};
use brep_extract::subgraph::extract_features_with;
use brep_extract::{parse_model, SolidModel};

/// Extracts convexity-homogeneous feature subgraphs and their boundaries
/// from a B-REP solid model.
#[derive(Parser, Debug)]
#[command(name = "brep-extract", version, about)]
struct Args {
    /// Neutral-format model file (.nbrep)
    #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
    input: Option<PathBuf>,

    /// Built-in fixture name (see --fixture help for the list)
    #[arg(long, value_parser = fixture_names())]
    fixture: Option<String>,

    /// Report output path (JSON)
    #[arg(long)]
    out: PathBuf,

    /// Optional color-annotated mesh output (ASCII PLY)
    #[arg(long)]
    export_mesh: Option<PathBuf>,

    /// Classification tolerance for the edge-convexity sign
    #[arg(long, default_value_t = 1e-7)]
    tolerance: f64,

    /// Suppress the stderr summary
    #[arg(long)]
    quiet: bool,
}

fn fixture_names() -> clap::builder::PossibleValuesParser {
    let names: Vec<&'static str> = FixtureSpec::all_defaults()
        .iter()
        .map(|s| s.name())
        .collect();
    clap::builder::PossibleValuesParser::new(names)
}

fn main() -> ExitCode {
    // Exit code 2 is reserved for "completed with diagnostics", so usage
    // errors (which clap would exit 2 for) are mapped to 1 instead.
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match run(&args) {
        Ok(had_diagnostics) => {
            if had_diagnostics {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load_model(args: &Args) -> Result<SolidModel, String> {
    if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        parse_model(&text).map_err(|e| e.to_string())
    } else {
        let name = args
            .fixture
            .as_deref()
            .expect("clap enforces input xor fixture");
        let spec = FixtureSpec::by_name(name).ok_or_else(|| format!("unknown fixture `{name}`"))?;
        build_fixture(&spec).map_err(|e| e.to_string())
    }
}

fn run(args: &Args) -> Result<bool, String> {
    if args.tolerance <= 0.0 {
        return Err("tolerance must be positive".to_string());
    }
    let model = load_model(args)?;

    let started = Instant::now();
    let params = ClassifyParams {
        tau: args.tolerance,
    };
    let ex = extract_features_with(&model, &params).map_err(|e| e.to_string())?;
    let timing_ms = started.elapsed().as_millis() as u64;

    // All outputs are rendered before anything is written, so a failure
    // leaves no partial files behind.
    let report = report::build_report(&model, &ex, args.tolerance, timing_ms);
    let report_json = report::to_json(&report);
    let mesh_doc = match &args.export_mesh {
        Some(_) => Some(mesh::export_ply(&model, &ex).map_err(|e| e.to_string())?),
        None => None,
    };

    std::fs::write(&args.out, report_json)
        .map_err(|e| format!("cannot write {}: {e}", args.out.display()))?;
    if let (Some(path), Some(doc)) = (&args.export_mesh, mesh_doc) {
        std::fs::write(path, doc).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }

    if !args.quiet {
        eprintln!(
            "{}: {} faces, {} edges -> {} boundaries, {} subgraphs, {} diagnostics ({} ms)",
            model.name,
            model.faces.len(),
            model.edges.len(),
            ex.boundaries().len(),
            ex.subgraphs.len(),
            ex.diagnostics.len(),
            timing_ms
        );
    }
    Ok(!ex.diagnostics.is_empty())
}

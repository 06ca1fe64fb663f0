//! Command-line surface: evaluation, verification suites, meshes, figure
//! patches, footprint boundaries, and cross-sections.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or precondition
//! error. `MOEBIUS_THREADS` caps internal parallelism; output is identical
//! for any thread count.

use std::f64::consts::{PI, SQRT_2};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use moebius_core::closed_form::{cross_section_common, cross_section_simple};
use moebius_core::maps::{canonicalize, HalfWidth, RealizationKind};
use moebius_core::mesh::{
    analyze_topology, figure_patches, fmt_sig, obj_bytes, polylines_csv, region_boundary,
    tessellate, BoundingBox, Polyline2, SurfaceMesh,
};
use moebius_core::oracle::{
    self_intersection_profile, verify_axis_segment, verify_embedding_threshold,
    verify_graph_identity, verify_min_max, VerificationReport, DEFAULT_GRID, EPS_PARAM, EPS_SPACE,
    THRESHOLD_WINDOW,
};

/// Möbius strip realizations: closed forms, numerical verification, meshes.
#[derive(Parser)]
#[command(name = "moebius", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a realization map at a parameter point, print "x y z".
    Eval {
        #[arg(long, value_enum, default_value_t = KindArg::Simple)]
        kind: KindArg,
        /// Angle in radians ("pi" and "sqrt2" accepted).
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        t: f64,
        /// Signed offset from the centerline.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        r: f64,
    },
    /// Run verification suites and print a JSON report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = KindArg::Simple)]
        kind: KindArg,
        /// Half-width (defaults to 3/5).
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        delta: Option<f64>,
        /// Comma-separated half-widths for the embedding sweep.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_real)]
        deltas: Option<Vec<f64>>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random samples for the graph-identity sweep.
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        nt: usize,
        #[arg(long, default_value_t = DEFAULT_GRID)]
        nr: usize,
        /// Spatial tolerance for collision detection.
        #[arg(long, default_value_t = EPS_SPACE, value_parser = parse_real)]
        eps_space: f64,
        /// Parameter-separation floor distinguishing genuine collisions
        /// from seam-adjacent duplicates.
        #[arg(long, default_value_t = EPS_PARAM, value_parser = parse_real)]
        eps_param: f64,
    },
    /// Tessellate a realization and write a Wavefront OBJ.
    Mesh {
        #[arg(long, value_enum, default_value_t = KindArg::Simple)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        delta: Option<f64>,
        #[arg(long, default_value_t = 256)]
        nt: usize,
        #[arg(long, default_value_t = 16)]
        nr: usize,
        /// Identify the seam column (2*pi, r) ~ (0, -r); requires even nr.
        #[arg(long)]
        weld: bool,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Obj)]
        format: FormatArg,
    },
    /// Write the four patches that frame the self-intersection set.
    Patches {
        /// Half-width; must exceed sqrt(2).
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        delta: Option<f64>,
        #[arg(long, default_value_t = 64)]
        nt: usize,
        #[arg(long, default_value_t = 16)]
        nr: usize,
        /// Output prefix: writes <out>_s1_bot.obj and three siblings.
        #[arg(long)]
        out: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Obj)]
        format: FormatArg,
    },
    /// Extract the footprint boundary g = delta^2 as polylines.
    Region {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        delta: Option<f64>,
        #[arg(long, default_value_t = 256)]
        resolution: usize,
        /// Sampling window "x0,y0,x1,y1" (auto-sized when omitted).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_real)]
        bbox: Option<Vec<f64>>,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Print the vertical cross-section over (x, y) as JSON.
    CrossSection {
        #[arg(long, value_enum, default_value_t = KindArg::Simple)]
        kind: KindArg,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        x: f64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_real)]
        y: f64,
        /// Half-width for the simple map; "inf" selects the infinite strip.
        /// The common-map section is always over the infinite strip.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_width)]
        delta: Option<WidthArg>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Common,
    Simple,
}

impl From<KindArg> for RealizationKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Common => RealizationKind::Common,
            KindArg::Simple => RealizationKind::Simple,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Graph,
    Axis,
    Embedding,
    Minmax,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Obj,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq)]
enum WidthArg {
    Finite(f64),
    Infinite,
}

/// Decimal literal, or "pi" / "sqrt2", optionally negated.
fn parse_real(s: &str) -> Result<f64, String> {
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1.0, rest),
        None => (1.0, s),
    };
    let value = match body {
        "pi" => PI,
        "sqrt2" => SQRT_2,
        _ => body
            .parse::<f64>()
            .map_err(|e| format!("invalid number {s:?}: {e}"))?,
    };
    Ok(sign * value)
}

fn parse_width(s: &str) -> Result<WidthArg, String> {
    if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinite") {
        return Ok(WidthArg::Infinite);
    }
    parse_real(s).map(WidthArg::Finite)
}

/// Half-width used when the flag is omitted.
const DEFAULT_DELTA: f64 = 0.6;

fn main() -> ExitCode {
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// MOEBIUS_THREADS caps the rayon pool. Results are identical for any
/// value; only wall time changes.
fn configure_threads() -> Result<(), String> {
    match std::env::var("MOEBIUS_THREADS") {
        Err(_) => Ok(()),
        Ok(raw) => {
            let n: usize = raw.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
                format!("MOEBIUS_THREADS must be a positive integer, got {raw:?}")
            })?;
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| e.to_string())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, moebius_core::Error> {
    match cli.command {
        Command::Eval { kind, t, r } => {
            let p = canonicalize(t, r)?;
            let q = RealizationKind::from(kind).eval(p);
            println!(
                "{} {} {}",
                fmt_sig(q.x, 12),
                fmt_sig(q.y, 12),
                fmt_sig(q.z, 12)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            kind,
            delta,
            deltas,
            seed,
            samples,
            nt,
            nr,
            eps_space,
            eps_param,
        } => {
            let kind = RealizationKind::from(kind);
            let hw = HalfWidth::new(delta.unwrap_or(DEFAULT_DELTA))?;
            let sweep = embedding_deltas(kind, delta, deltas);
            let mut reports: Vec<VerificationReport> = Vec::new();
            if matches!(suite, Suite::Graph | Suite::All) {
                reports.push(verify_graph_identity(hw, samples, seed)?);
            }
            if matches!(suite, Suite::Axis | Suite::All) {
                reports.push(verify_axis_segment(hw, 100_000)?);
            }
            if matches!(suite, Suite::Embedding | Suite::All) {
                reports.push(verify_embedding_threshold(
                    kind, &sweep, nt, nr, eps_space, eps_param,
                )?);
            }
            if matches!(suite, Suite::Minmax | Suite::All) {
                reports.push(verify_min_max(&[0.0, 0.1, 1.0, 2.0], 100_000));
            }
            if suite == Suite::All
                && kind == RealizationKind::Simple
                && hw.finite()? > SQRT_2 + THRESHOLD_WINDOW
            {
                reports.push(self_intersection_profile(hw, nt, nr, eps_space, eps_param)?);
            }
            let all_pass = reports.iter().all(|r| r.pass);
            println!(
                "{}",
                serde_json::to_string_pretty(&reports).expect("serializable")
            );
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Mesh {
            kind,
            delta,
            nt,
            nr,
            weld,
            out,
            format,
        } => {
            if format != FormatArg::Obj {
                return Err(moebius_core::Error::Invalid(
                    "mesh output supports only --format obj".into(),
                ));
            }
            let hw = HalfWidth::new(delta.unwrap_or(DEFAULT_DELTA))?;
            let mesh = tessellate(kind.into(), hw, nt, nr, weld)?;
            report_topology(&mesh)?;
            write_bytes(&obj_bytes(&mesh), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Patches {
            delta,
            nt,
            nr,
            out,
            format,
        } => {
            if format != FormatArg::Obj {
                return Err(moebius_core::Error::Invalid(
                    "patch output supports only --format obj".into(),
                ));
            }
            let hw = HalfWidth::new(delta.unwrap_or(DEFAULT_DELTA))?;
            for patch in figure_patches(hw, nt, nr)? {
                let path = format!("{out}_{}.obj", patch.spec.name.as_str());
                write_bytes(&obj_bytes(&patch.mesh), Some(&path))?;
                eprintln!(
                    "{}: t in [{}, {}], r in [{}, {}] -> {path}",
                    patch.spec.name.as_str(),
                    fmt_sig(patch.spec.t_range.0, 6),
                    fmt_sig(patch.spec.t_range.1, 6),
                    fmt_sig(patch.spec.r_range.0, 6),
                    fmt_sig(patch.spec.r_range.1, 6),
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Region {
            delta,
            resolution,
            bbox,
            out,
            format,
        } => {
            let d = delta.unwrap_or(DEFAULT_DELTA);
            let hw = HalfWidth::new(d)?;
            let window = match bbox {
                None => BoundingBox::for_width(d),
                Some(v) if v.len() == 4 => BoundingBox::new(v[0], v[1], v[2], v[3])?,
                Some(v) => {
                    return Err(moebius_core::Error::Invalid(format!(
                        "--bbox needs 4 comma-separated values, got {}",
                        v.len()
                    )))
                }
            };
            let lines = region_boundary(hw, window, resolution)?;
            let payload = match format {
                FormatArg::Csv => polylines_csv(&lines).into_bytes(),
                FormatArg::Json => polylines_json(&lines).into_bytes(),
                FormatArg::Obj => {
                    return Err(moebius_core::Error::Invalid(
                        "region output supports --format csv or json".into(),
                    ))
                }
            };
            write_bytes(&payload, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CrossSection { kind, x, y, delta } => {
            let section = match kind {
                KindArg::Common => {
                    if delta.is_some() {
                        return Err(moebius_core::Error::Invalid(
                            "--delta does not apply to the common map (its cross-section \
                             is over the infinite strip)"
                                .into(),
                        ));
                    }
                    cross_section_common(x, y)
                }
                KindArg::Simple => {
                    let hw = match delta {
                        None => HalfWidth::new(DEFAULT_DELTA)?,
                        Some(WidthArg::Finite(d)) => HalfWidth::new(d)?,
                        Some(WidthArg::Infinite) => HalfWidth::Infinite,
                    };
                    cross_section_simple(x, y, hw)
                }
            };
            println!("{}", serde_json::to_string(&section).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Half-widths for the embedding sweep: explicit list, else the single
/// delta flag, else a default sweep bracketing the kind's threshold.
fn embedding_deltas(
    kind: RealizationKind,
    delta: Option<f64>,
    deltas: Option<Vec<f64>>,
) -> Vec<f64> {
    if let Some(list) = deltas {
        return list;
    }
    if let Some(d) = delta {
        return vec![d];
    }
    match kind {
        RealizationKind::Simple => vec![1.0, 1.41, 1.5, 1.97, 2.5],
        RealizationKind::Common => vec![1.9, 2.0, 2.5],
    }
}

fn report_topology(mesh: &SurfaceMesh) -> Result<(), moebius_core::Error> {
    let topo = analyze_topology(mesh)?;
    eprintln!(
        "V={} E={} F={} chi={} boundary_loops={} boundary_edges={}",
        topo.vertices,
        topo.edges,
        topo.faces,
        topo.euler_characteristic,
        topo.boundary_loops,
        topo.boundary_edges,
    );
    Ok(())
}

fn polylines_json(lines: &[Polyline2]) -> String {
    let as_json: Vec<serde_json::Value> = lines
        .iter()
        .map(|l| {
            serde_json::json!({
                "closed": l.closed,
                "points": l.points.iter().map(|&(x, y)| vec![x, y]).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&as_json).expect("serializable")
}

fn write_bytes(bytes: &[u8], out: Option<&str>) -> Result<(), moebius_core::Error> {
    match out {
        None => {
            io::stdout().write_all(bytes)?;
            Ok(())
        }
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            w.write_all(bytes)?;
            w.flush()?;
            Ok(())
        }
    }
}

//! The `ctf` command line.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::branched::{ArcSystemRibbon, SectorComplex};
use crate::census::{bundled_census, load_census, verify_census_with, MatchKind};
use crate::covers::{branched_cover_ctf, pretzel_data, CoverWitness};
use crate::error::{Error, Result};
use crate::interval::ctf_interval;
use crate::monodromy::{validate_triple, PhiTriple};
use crate::slope::{classify_knot_type, normalize_degeneracy, Slope};
use crate::track::{build_track, measure_class, realize_slope, Mode};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "ctf", version, about = "Taut foliation filling intervals for fibered manifolds")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Filling interval of one boundary orbit.
    Interval(IntervalArgs),
    /// Boundary train track operations.
    Track {
        #[command(subcommand)]
        action: TrackAction,
    },
    /// Sink-disk and arc-complement checks on text files.
    Check {
        #[command(subcommand)]
        what: CheckWhat,
    },
    /// Cyclic branched cover of a genus g knot with degeneracy slope 4g-2.
    Cover {
        #[arg(long)]
        genus: i64,
        #[arg(long)]
        n: i64,
    },
    /// Data for the pretzel knot P(-2, 3, 2q+1).
    Pretzel {
        #[arg(long)]
        q: i64,
    },
    /// Census verification.
    Census {
        #[command(subcommand)]
        action: CensusAction,
    },
    /// Knot type from the meridian and the degeneracy locus.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        meridian: Slope,
        #[arg(long, allow_hyphen_values = true)]
        delta: Slope,
        #[arg(long, default_value_t = 1)]
        mult: i64,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
struct IntervalSource {
    /// φ-triple as c,p,q.
    #[arg(long, allow_hyphen_values = true)]
    triple: Option<String>,
    /// Degeneracy slope P/Q.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<Slope>,
}

#[derive(Debug, Args)]
struct IntervalArgs {
    #[command(flatten)]
    source: IntervalSource,
    /// Orbit length of the boundary circle (with --delta).
    #[arg(long, default_value_t = 1, requires = "delta")]
    cusps: i64,
    /// Multiplicity of the degeneracy locus (with --delta).
    #[arg(long, default_value_t = 1, requires = "delta")]
    mult: i64,
}

#[derive(Debug, Subcommand)]
enum TrackAction {
    /// Strictly positive measure realizing a slope.
    Realize {
        #[arg(long, allow_hyphen_values = true)]
        triple: String,
        #[arg(long, allow_hyphen_values = true)]
        slope: Slope,
    },
}

#[derive(Debug, Subcommand)]
enum CheckWhat {
    /// Sector complex file: sector and segment lines.
    Sectors { file: PathBuf },
    /// Arc system file: vertex, edge and arc lines.
    Arcs { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum CensusAction {
    Verify {
        /// Census file; the bundled table when omitted.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        cusps: i64,
        #[arg(long, default_value_t = 1)]
        mult: i64,
    },
}

struct Output {
    text: String,
    json: Value,
    code: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }
}

/// Runs the CLI on `argv` (program name first); returns the exit status
/// and the text to print.
pub fn run_cli(argv: &[String]) -> (i32, String) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let json = cli.json;
    match dispatch(cli.command) {
        Ok(out) => {
            let text = if json { render_json(out.json) } else { out.text };
            (out.code, text)
        }
        Err(e) => {
            let text = if json {
                render_json(json!({ "error": e.to_string(), "kind": format!("{e:?}").split(['(', ' ', '{']).next() }))
            } else {
                format!("error: {e}\n")
            };
            (1, text)
        }
    }
}

fn render_json(mut v: Value) -> String {
    if let Value::Object(map) = &mut v {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    }
    format!("{}\n", serde_json::to_string_pretty(&v).expect("values serialize"))
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn dispatch(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Interval(args) => {
            let triple: PhiTriple = match (args.source.triple, args.source.delta) {
                (Some(t), _) => t.parse()?,
                (None, Some(d)) => {
                    let locus = normalize_degeneracy(d, args.mult)?;
                    validate_triple(args.cusps, locus.p(), locus.q())?
                }
                (None, None) => unreachable!("clap requires one source"),
            };
            let j = ctf_interval(&triple);
            Ok(Output::ok(
                format!("{j}\n"),
                json!({ "command": "interval", "triple": triple.to_string(), "delta": triple.delta(), "interval": j }),
            ))
        }
        Command::Track { action: TrackAction::Realize { triple, slope } } => {
            let t: PhiTriple = triple.parse()?;
            let track = build_track(&t);
            let m = realize_slope(&track, slope)?;
            let class = measure_class(&track, &m, Mode::Upward)?;
            let realized = class.slope()?;
            let mut text = track.to_text();
            text.push_str(&m.to_text());
            writeln!(text, "class {} {}", class.a, class.b).unwrap();
            writeln!(text, "slope {realized}").unwrap();
            writeln!(text, "strictly_positive {}", m.is_strictly_positive()).unwrap();
            let weights: Vec<String> = m.weights().iter().map(|w| w.to_string()).collect();
            Ok(Output::ok(
                text,
                json!({
                    "command": "track realize",
                    "triple": t.to_string(),
                    "target": slope,
                    "slope": realized,
                    "class": { "a": class.a.to_string(), "b": class.b.to_string() },
                    "switches": track.switches(),
                    "edges": track.edges(),
                    "weights": weights,
                    "strictly_positive": m.is_strictly_positive(),
                }),
            ))
        }
        Command::Check { what: CheckWhat::Sectors { file } } => {
            let complex = SectorComplex::parse_text(&read(&file)?)?;
            let report = complex.detect_sink_disks();
            let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            let text = format!(
                "sink_disks {}\nhalf_sink_disks {}\nsink_disk_free {}\n",
                list(&report.sink_disks),
                list(&report.half_sink_disks),
                report.is_empty()
            );
            Ok(Output::ok(
                text,
                json!({
                    "command": "check sectors",
                    "sink_disks": report.sink_disks,
                    "half_sink_disks": report.half_sink_disks,
                    "sink_disk_free": report.is_empty(),
                }),
            ))
        }
        Command::Check { what: CheckWhat::Arcs { file } } => {
            let ribbon = ArcSystemRibbon::parse_text(&read(&file)?)?;
            let faces = ribbon.trace_complement_faces();
            let total: i64 = faces.iter().map(|f| f.euler_characteristic).sum();
            let mut text = format!(
                "surface genus {} boundary {} euler {}\narcs {}\n",
                ribbon.genus(),
                ribbon.boundary_count(),
                ribbon.euler_characteristic(),
                ribbon.arcs().len()
            );
            for f in &faces {
                writeln!(
                    text,
                    "face {} euler {} genus {} boundary {} {}",
                    f.id,
                    f.euler_characteristic,
                    f.genus,
                    f.boundary_circles,
                    if f.is_disk { "disk" } else { "nondisk" }
                )
                .unwrap();
            }
            let no_disk = faces.iter().all(|f| !f.is_disk);
            writeln!(text, "euler_sum {total}\nno_disk_face {no_disk}").unwrap();
            writeln!(text, "endpoints_alternate {}", ribbon.endpoint_signs_alternate()).unwrap();
            Ok(Output::ok(
                text,
                json!({
                    "command": "check arcs",
                    "genus": ribbon.genus(),
                    "boundary": ribbon.boundary_count(),
                    "euler_characteristic": ribbon.euler_characteristic(),
                    "arcs": ribbon.arcs().len(),
                    "faces": faces,
                    "euler_sum": total,
                    "no_disk_face": no_disk,
                    "endpoints_alternate": ribbon.endpoint_signs_alternate(),
                }),
            ))
        }
        Command::Cover { genus, n } => {
            let v = branched_cover_ctf(genus, n)?;
            let mut text = format!("genus {genus}\nn {n}\n");
            match &v.witness {
                CoverWitness::PreservingPower => {
                    text.push_str("witness co-orientation-preserving power\n");
                }
                CoverWitness::Interval { locus, meridian, interval } => {
                    writeln!(text, "p {}\na {}\nb {}", locus.p, locus.a, locus.b).unwrap();
                    writeln!(text, "lifted_meridian {meridian}\ninterval {interval}").unwrap();
                }
            }
            writeln!(text, "ctf {}", v.has_ctf).unwrap();
            Ok(Output::ok(text, json!({ "command": "cover", "result": v })))
        }
        Command::Pretzel { q } => {
            let d = pretzel_data(q)?;
            Ok(Output::ok(
                format!("q {}\ngenus {}\ndelta {}\ninterval {}\n", d.q, d.genus, d.delta, d.ctf_interval),
                json!({ "command": "pretzel", "result": d }),
            ))
        }
        Command::Census { action: CensusAction::Verify { file, cusps, mult } } => {
            let records = match &file {
                Some(path) => load_census(path)?,
                None => bundled_census(),
            };
            let report = verify_census_with(&records, cusps, mult);
            let mut text = String::new();
            for o in &report.records {
                let kind = match o.kind {
                    MatchKind::Exact => "exact",
                    MatchKind::KnownDiscrepancy => "known-discrepancy",
                    MatchKind::Mismatch => "MISMATCH",
                };
                let computed = match (&o.computed, &o.error) {
                    (Some(j), _) => j.to_string(),
                    (None, Some(e)) => format!("error: {e}"),
                    (None, None) => String::new(),
                };
                writeln!(text, "{}\t{kind}\texpected {}\tcomputed {computed}", o.name, o.expected).unwrap();
            }
            writeln!(
                text,
                "summary exact {} known-discrepancy {} mismatch {}",
                report.exact, report.known_discrepancy, report.mismatch
            )
            .unwrap();
            let code = if report.mismatch > 0 { 1 } else { 0 };
            Ok(Output { text, json: json!({ "command": "census verify", "report": report }), code })
        }
        Command::Classify { meridian, delta, mult } => {
            let locus = normalize_degeneracy(delta, mult)?;
            let kind = classify_knot_type(meridian, locus)?;
            Ok(Output::ok(
                format!("{kind}\n"),
                json!({ "command": "classify", "locus": locus.to_string(), "type": kind }),
            ))
        }
    }
}

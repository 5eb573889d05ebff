//! `orilat` — build and verify posets of acyclic orientations.
//!
//! Exit codes: 0 all checks pass, 1 a verification check failed, 2 usage or
//! input error.

use clap::{Parser, Subcommand, ValueEnum};
use orilat_core::checks::{
    check_firing_lemmas, check_geometry_lemmas, check_lift_roundtrips, CheckSummary,
};
use orilat_core::geometry::{lift_fire, lift_unfire, phi};
use orilat_core::graph::connected_graphs_up_to;
use orilat_core::lattice::{
    chromatic_polynomial, geometric_bound, greene_zaslavsky_count, poset_bound, verify_corpus,
    verify_theorem, BoundDir, LatticeReport,
};
use orilat_core::orientation::{enumerate_acyclic, enumerate_sink_zero, Orientation};
use orilat_core::poset::Poset;
use orilat_core::{Graph, Point};
use serde::{Deserialize, Serialize};
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const RANDOM_SAMPLES: usize = 1000;

#[derive(Parser)]
#[command(
    name = "orilat",
    version,
    about = "Acyclic orientations under source firing: poset construction, exact geometric \
             realization, and distributive-lattice verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    /// All acyclic orientations
    #[value(name = "P")]
    P,
    /// Acyclic orientations with 0 as a sink
    #[value(name = "P0")]
    P0,
}

#[derive(Clone, Copy, ValueEnum)]
enum LiftOp {
    Fire,
    Unfire,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirArg {
    Meet,
    Join,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Geometric,
    Bruteforce,
}

#[derive(Subcommand)]
enum Cmd {
    /// List acyclic orientations of a graph
    Enumerate {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "P0")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build the sink-fixed firing poset: elements and covers
    Poset {
        graph: PathBuf,
        /// Emit the Hasse diagram as DOT text instead
        #[arg(long)]
        dot: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Connected components of the firing poset
    Components {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check lattice structure, distributivity, and the component count
    Verify {
        graph: Option<PathBuf>,
        /// Verify every connected graph on at most N vertices instead
        #[arg(long, value_name = "N", conflicts_with = "graph")]
        all_connected: Option<usize>,
        /// Additionally run the seeded random suites (1000 samples each)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Map a point (JSON on stdin) to its orientation
    Phi {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Fire or unfire a vertex geometrically on a point read from stdin
    Lift {
        graph: PathBuf,
        #[arg(value_enum)]
        op: LiftOp,
        vertex: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Meet or join of two orientations given by their bit encodings
    Bound {
        graph: PathBuf,
        a: u64,
        b: u64,
        #[arg(value_enum)]
        dir: DirArg,
        #[arg(value_enum)]
        route: RouteArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Chromatic polynomial coefficients, constant term first
    Chromatic {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    /// Bad input or usage: exit 2.
    Usage(String),
    /// A verification check failed: exit 1.
    Check(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

#[derive(Serialize, Deserialize)]
struct RandomChecks {
    lift_roundtrips: CheckSummaryOut,
    firing_lemmas: CheckSummaryOut,
    geometry_lemmas: CheckSummaryOut,
}

#[derive(Serialize, Deserialize)]
struct CheckSummaryOut {
    samples: usize,
    checked: usize,
    violations: usize,
    first_failure: Option<String>,
}

impl From<CheckSummary> for CheckSummaryOut {
    fn from(s: CheckSummary) -> Self {
        CheckSummaryOut {
            samples: s.samples,
            checked: s.checked,
            violations: s.violations,
            first_failure: s.first_failure,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct VerifyOut {
    report: LatticeReport,
    random_checks: Option<RandomChecks>,
    pass: bool,
}

#[derive(Serialize, Deserialize)]
struct CorpusEntry {
    n: usize,
    edges: Vec<(usize, usize)>,
    component_count: usize,
    greene_zaslavsky: i64,
    unique_sink_zero: usize,
    pass: bool,
}

#[derive(Serialize, Deserialize)]
struct CorpusOut {
    total: usize,
    pass: bool,
    graphs: Vec<CorpusEntry>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    Graph::parse_edge_list(&text).map_err(usage)
}

fn read_point_stdin() -> Result<Point, Failure> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
    serde_json::from_str(&buf).map_err(|e| Failure::Usage(format!("bad point JSON: {e}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Enumerate {
            graph,
            mode,
            format,
        } => {
            let g = load_graph(&graph)?;
            let list = match mode {
                ModeArg::P => enumerate_acyclic(&g),
                ModeArg::P0 => enumerate_sink_zero(&g),
            };
            match format {
                Format::Json => {
                    let orientations: Vec<_> = list.iter().map(|o| o.to_json(&g)).collect();
                    let out = serde_json::json!({
                        "count": list.len(),
                        "orientations": orientations,
                    });
                    println!("{out}");
                }
                Format::Text => {
                    for o in &list {
                        println!("bits={:<4} {}", o.bits(), arcs_text(o, &g));
                    }
                    println!("count: {}", list.len());
                }
            }
            Ok(())
        }

        Cmd::Poset { graph, dot, format } => {
            let g = load_graph(&graph)?;
            let p = Poset::build(&g);
            if dot {
                print!("{}", p.to_dot());
                return Ok(());
            }
            match format {
                Format::Json => println!("{}", p.to_json()),
                Format::Text => {
                    println!("elements: {}", p.len());
                    for (i, o) in p.elements().iter().enumerate() {
                        println!("  e{i}: bits={} {}", o.bits(), arcs_text(o, &g));
                    }
                    println!("covers: {}", p.covers().len());
                    for c in p.covers() {
                        println!("  e{} -> e{} (fire {})", c.from, c.to, c.fired);
                    }
                }
            }
            Ok(())
        }

        Cmd::Components { graph, format } => {
            let g = load_graph(&graph)?;
            let p = Poset::build(&g);
            let comps = p.components();
            match format {
                Format::Json => {
                    let list: Vec<_> = comps
                        .iter()
                        .map(|c| {
                            serde_json::json!({
                                "members": c.members(),
                                "size": c.len(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::json!({ "components": list }));
                }
                Format::Text => {
                    println!("components: {}", comps.len());
                    for (i, c) in comps.iter().enumerate() {
                        println!("  component {i}: size {} members {:?}", c.len(), c.members());
                    }
                }
            }
            Ok(())
        }

        Cmd::Verify {
            graph,
            all_connected,
            seed,
            format,
        } => match (graph, all_connected) {
            (Some(path), None) => {
                let g = load_graph(&path)?;
                verify_one(&g, seed, format)
            }
            (None, Some(n)) => verify_all(n, seed, format),
            _ => Err(Failure::Usage(
                "provide a graph file or --all-connected N".into(),
            )),
        },

        Cmd::Phi { graph, format } => {
            let g = load_graph(&graph)?;
            let x = read_point_stdin()?;
            let o = phi(&g, &x).map_err(usage)?;
            match format {
                Format::Json => println!("{}", o.to_json(&g)),
                Format::Text => println!("bits={} {}", o.bits(), arcs_text(&o, &g)),
            }
            Ok(())
        }

        Cmd::Lift {
            graph,
            op,
            vertex,
            format,
        } => {
            let g = load_graph(&graph)?;
            let x = read_point_stdin()?;
            let z = match op {
                LiftOp::Fire => lift_fire(&g, &x, vertex),
                LiftOp::Unfire => lift_unfire(&g, &x, vertex),
            }
            .map_err(usage)?;
            match format {
                Format::Json => print_json(&z),
                Format::Text => {
                    let coords: Vec<String> =
                        z.coords().iter().map(|c| c.to_string()).collect();
                    println!("({})", coords.join(", "));
                }
            }
            Ok(())
        }

        Cmd::Bound {
            graph,
            a,
            b,
            dir,
            route,
            format,
        } => {
            let g = load_graph(&graph)?;
            let a = Orientation::from_bits(&g, a).map_err(usage)?;
            let b = Orientation::from_bits(&g, b).map_err(usage)?;
            let p = Poset::build(&g);
            let comps = p.components();
            let c = comps
                .iter()
                .find(|c| c.contains(&a))
                .ok_or_else(|| Failure::Usage("first orientation is not in the poset".into()))?;
            if !c.contains(&b) {
                return Err(Failure::Usage(
                    "orientations lie in different components (or outside the poset)".into(),
                ));
            }
            let dir = match dir {
                DirArg::Meet => BoundDir::Meet,
                DirArg::Join => BoundDir::Join,
            };
            let bound = match route {
                RouteArg::Geometric => geometric_bound(c, &a, &b, dir),
                RouteArg::Bruteforce => poset_bound(c, &a, &b, dir),
            }
            .map_err(usage)?;
            match format {
                Format::Json => println!("{}", bound.to_json(&g)),
                Format::Text => println!("bits={} {}", bound.bits(), arcs_text(&bound, &g)),
            }
            Ok(())
        }

        Cmd::Chromatic { graph, format } => {
            let g = load_graph(&graph)?;
            let poly = chromatic_polynomial(&g);
            match format {
                Format::Json => print_json(&poly.coefficients()),
                Format::Text => {
                    println!("coefficients (constant first): {:?}", poly.coefficients());
                    match greene_zaslavsky_count(&g) {
                        Ok(k) => println!("unique-sink count: {k}"),
                        Err(e) => println!("unique-sink count: {e}"),
                    }
                }
            }
            Ok(())
        }
    }
}

/// All JSON goes out in canonical form (sorted object keys), so parsing a
/// payload and re-serializing it reproduces the exact bytes.
fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_value(value).expect("output serializes")
    );
}

fn arcs_text(o: &Orientation, g: &Graph) -> String {
    o.arcs(g)
        .iter()
        .map(|(t, h)| format!("{t}->{h}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_random_checks(g: &Graph, seed: u64) -> RandomChecks {
    let poset = Poset::build(g);
    RandomChecks {
        lift_roundtrips: check_lift_roundtrips(g, seed, RANDOM_SAMPLES).into(),
        firing_lemmas: check_firing_lemmas(g, seed.wrapping_add(1), RANDOM_SAMPLES).into(),
        geometry_lemmas: check_geometry_lemmas(g, &poset, seed.wrapping_add(2), RANDOM_SAMPLES)
            .into(),
    }
}

fn first_report_failure(report: &LatticeReport) -> Option<String> {
    if !report.counts_match {
        return Some(format!(
            "component count {} != greene-zaslavsky {} or unique-sink count {}",
            report.component_count, report.greene_zaslavsky, report.unique_sink_zero
        ));
    }
    for (i, c) in report.components.iter().enumerate() {
        if !c.is_lattice {
            return Some(format!("component {i} is not a lattice"));
        }
        if !c.is_distributive {
            return Some(format!("component {i} is not distributive"));
        }
        if c.minimum.is_none() || !c.minimum_unique_sink_zero {
            return Some(format!("component {i} lacks a unique-sink-0 minimum"));
        }
        if !c.bounds_agree {
            return Some(format!(
                "component {i}: geometric bounds disagree with the oracle"
            ));
        }
    }
    None
}

fn verify_one(g: &Graph, seed: Option<u64>, format: Format) -> Result<(), Failure> {
    let report = verify_theorem(g);
    let random_checks = seed.map(|s| run_random_checks(g, s));
    let random_ok = random_checks.as_ref().map_or(true, |r| {
        r.lift_roundtrips.violations == 0
            && r.firing_lemmas.violations == 0
            && r.geometry_lemmas.violations == 0
    });
    let pass = report.pass && random_ok;
    let out = VerifyOut {
        report,
        random_checks,
        pass,
    };
    match format {
        Format::Json => print_json(&out),
        Format::Text => {
            let r = &out.report;
            println!("components: {}", r.component_count);
            println!("greene-zaslavsky count: {}", r.greene_zaslavsky);
            println!("unique-sink orientations: {}", r.unique_sink_zero);
            for (i, c) in r.components.iter().enumerate() {
                println!(
                    "  component {i}: size {} lattice {} distributive {} min-sink-0 {} bounds-agree {}",
                    c.size,
                    yes_no(c.is_lattice),
                    yes_no(c.is_distributive),
                    yes_no(c.minimum_unique_sink_zero),
                    yes_no(c.bounds_agree),
                );
            }
            if let Some(rc) = &out.random_checks {
                println!(
                    "random checks: lifts {}/{} lemmas {}/{} geometry {}/{}",
                    rc.lift_roundtrips.checked - rc.lift_roundtrips.violations,
                    rc.lift_roundtrips.checked,
                    rc.firing_lemmas.checked - rc.firing_lemmas.violations,
                    rc.firing_lemmas.checked,
                    rc.geometry_lemmas.checked - rc.geometry_lemmas.violations,
                    rc.geometry_lemmas.checked,
                );
            }
            println!("{}", if pass { "PASS" } else { "FAIL" });
        }
    }
    if pass {
        Ok(())
    } else {
        let why = first_report_failure(&out.report)
            .or_else(|| {
                out.random_checks.as_ref().and_then(|rc| {
                    rc.lift_roundtrips
                        .first_failure
                        .clone()
                        .or_else(|| rc.firing_lemmas.first_failure.clone())
                        .or_else(|| rc.geometry_lemmas.first_failure.clone())
                })
            })
            .unwrap_or_else(|| "verification failed".into());
        Err(Failure::Check(why))
    }
}

fn verify_all(max_vertices: usize, seed: Option<u64>, format: Format) -> Result<(), Failure> {
    if max_vertices == 0 || max_vertices > 6 {
        return Err(Failure::Usage(
            "--all-connected expects N between 1 and 6".into(),
        ));
    }
    let graphs = connected_graphs_up_to(max_vertices);
    let reports = verify_corpus(&graphs);
    let mut entries = Vec::with_capacity(graphs.len());
    let mut pass = true;
    for (i, (g, r)) in graphs.iter().zip(&reports).enumerate() {
        let mut graph_pass = r.pass;
        if let Some(s) = seed {
            let rc = run_random_checks(g, s.wrapping_add(i as u64));
            graph_pass &= rc.lift_roundtrips.violations == 0
                && rc.firing_lemmas.violations == 0
                && rc.geometry_lemmas.violations == 0;
        }
        pass &= graph_pass;
        entries.push(CorpusEntry {
            n: g.max_vertex(),
            edges: g.edges().to_vec(),
            component_count: r.component_count,
            greene_zaslavsky: r.greene_zaslavsky,
            unique_sink_zero: r.unique_sink_zero,
            pass: graph_pass,
        });
    }
    let out = CorpusOut {
        total: entries.len(),
        pass,
        graphs: entries,
    };
    match format {
        Format::Json => print_json(&out),
        Format::Text => {
            for e in out.graphs.iter().filter(|e| !e.pass) {
                println!("FAIL: n={} edges={:?}", e.n, e.edges);
            }
            println!(
                "verified {} connected graphs on <= {max_vertices} vertices: {}",
                out.total,
                if out.pass { "all pass" } else { "FAILURES" }
            );
        }
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Check(
            "theorem verification failed on at least one graph".into(),
        ))
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

//! `polydeza` command-line front end.

mod io;

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use polydeza::analysis::type_profile;
use polydeza::classify::{
    classify_planar_regular, population, run_suite, run_suite_on, table_census, DezaClass, Member,
    SCHEMA_VERSION, SUITES,
};
use polydeza::fixtures::FixtureManifest;
use polydeza::generate::{
    cubic_levels, quadrangulation_levels, quartic_levels, triangulation_levels,
};
use polydeza::transforms::{
    line_graph, medial, medial_preimage, radial, t_construct, t_decompose, valid_sites,
    TDecomposition, TSite,
};
use polydeza::{canonical_code, dual};
use serde::Serialize;

use crate::io::{encode, read_graphs, write_file, write_json, Format, Graph};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    /// Unreadable or unsuitable input data.
    Input(String),
    FormatLoss,
    Violations(usize),
}

impl CliError {
    pub fn io(path: &Path, e: std::io::Error) -> Self {
        CliError::Io(format!("{}: {e}", path.display()))
    }

    pub fn input(e: polydeza::Error) -> Self {
        CliError::Input(e.to_string())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Violations(_) => 1,
            CliError::Usage(_) | CliError::FormatLoss => 2,
            CliError::Io(_) | CliError::Input(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Io(m) => write!(f, "i/o: {m}"),
            CliError::Input(m) => write!(f, "input: {m}"),
            CliError::FormatLoss => {
                write!(
                    f,
                    "graph6 drops the embedding; pass --allow-loss to convert anyway"
                )
            }
            CliError::Violations(k) => write!(f, "{k} violation(s) found"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "polydeza",
    version,
    about = "Regular polyhedral graphs and their Deza classification"
)]
pub struct RunConfig {
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, env = "POLYDEZA_THREADS", value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Single thread and no timing fields, so outputs are byte-identical across runs.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Class {
    Quartic,
    Cubic,
    Quad,
    Tri,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Op {
    Medial,
    Radial,
    Dual,
    Line,
    MedialPreimage,
    TConstruct,
    TDecompose,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a class of plane graphs up to an order.
    Gen {
        #[arg(long, value_enum)]
        class: Class,
        #[arg(long, value_parser = clap::value_parser!(u16).range(0..=255))]
        max_n: u16,
        /// Quadrangulations from expansion A only (no separating 4-cycles).
        #[arg(long)]
        no_b: bool,
        #[arg(long, value_enum, default_value = "planar_code")]
        format: Format,
        #[arg(long)]
        allow_loss: bool,
        #[arg(long)]
        out: PathBuf,
        /// Also write the summary JSON here.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Classify graphs from a file or a population.
    Classify {
        #[arg(
            long,
            conflicts_with = "population",
            required_unless_present = "population"
        )]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        population: Option<String>,
        /// JSON records; printed to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// CSV of classification rows per order.
        #[arg(long)]
        census: Option<PathBuf>,
    },
    /// Apply a transform to every input graph.
    Transform {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "planar_code")]
        to: Format,
        #[arg(long)]
        allow_loss: bool,
        /// Site `v,u,w` in the first host for t-construct; the first legal site by default.
        #[arg(long, value_parser = parse_site)]
        site1: Option<TSite>,
        #[arg(long, value_parser = parse_site)]
        site2: Option<TSite>,
    },
    /// Re-encode a graph file.
    Convert {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum)]
        to: Format,
        #[arg(long)]
        allow_loss: bool,
    },
    /// Run a verification suite over a population.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        population: Option<String>,
        /// Check the graphs of a file instead of a population.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Write the named fixtures as planar_code and graph6 files plus a manifest.
    Fixtures {
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match run(cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("polydeza: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cfg: RunConfig) -> Result<(), CliError> {
    let threads = if cfg.deterministic {
        Some(1)
    } else {
        cfg.threads.map(usize::from)
    };
    if let Some(t) = threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match cfg.command {
        Command::Gen {
            class,
            max_n,
            no_b,
            format,
            allow_loss,
            out,
            summary,
        } => {
            if no_b && class != Class::Quad {
                return Err(CliError::Usage(
                    "--no-b applies to --class quad only".into(),
                ));
            }
            cmd_gen(
                class,
                max_n as usize,
                no_b,
                format,
                allow_loss,
                &out,
                summary.as_deref(),
                cfg.deterministic,
            )
        }
        Command::Classify {
            input,
            format,
            population,
            out,
            census,
        } => cmd_classify(
            input.as_deref(),
            format,
            population.as_deref(),
            out.as_deref(),
            census.as_deref(),
        ),
        Command::Transform {
            op,
            input,
            format,
            output,
            to,
            allow_loss,
            site1,
            site2,
        } => {
            let graphs = read_graphs(&input, format)?;
            let out = match op {
                Op::TConstruct => t_construct_pair(&graphs, site1, site2)?,
                _ => graphs
                    .iter()
                    .map(|g| transform(op, g))
                    .collect::<Result<Vec<_>, _>>()?
                    .concat(),
            };
            write_file(&output, &encode(&out, to, allow_loss)?)
        }
        Command::Convert {
            input,
            format,
            output,
            to,
            allow_loss,
        } => {
            let graphs = read_graphs(&input, format)?;
            write_file(&output, &encode(&graphs, to, allow_loss)?)
        }
        Command::Verify {
            suite,
            population,
            input,
            format,
            report,
        } => cmd_verify(
            &suite,
            population.as_deref(),
            input.as_deref(),
            format,
            report.as_deref(),
        ),
        Command::Fixtures { out } => cmd_fixtures(&out),
    }
}

#[derive(Serialize)]
struct GenSummary {
    schema_version: u32,
    class: String,
    max_n: usize,
    counts: BTreeMap<usize, usize>,
    total: usize,
    wall_seconds: Option<f64>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    class: Class,
    max_n: usize,
    no_b: bool,
    format: Format,
    allow_loss: bool,
    out: &Path,
    summary: Option<&Path>,
    deterministic: bool,
) -> Result<(), CliError> {
    let start = Instant::now();
    let levels = match class {
        Class::Quartic => quartic_levels(max_n),
        Class::Cubic => cubic_levels(max_n),
        Class::Quad => quadrangulation_levels(max_n, !no_b),
        Class::Tri => triangulation_levels(max_n),
    };
    let graphs: Vec<Graph> = levels.graphs().map(Graph::Plane).collect();
    write_file(out, &encode(&graphs, format, allow_loss)?)?;
    let report = GenSummary {
        schema_version: SCHEMA_VERSION,
        class: format!("{class:?}").to_lowercase(),
        max_n,
        counts: levels.counts(),
        total: levels.len(),
        wall_seconds: (!deterministic).then(|| start.elapsed().as_secs_f64()),
    };
    println!(
        "{}",
        serde_json::to_string(&report).expect("summary serialises")
    );
    if let Some(path) = summary {
        write_json(path, &report)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyRecord {
    label: String,
    order: usize,
    edges: usize,
    regularity: Option<usize>,
    type_profile: Option<Vec<usize>>,
    class: Option<DezaClass>,
    error: Option<String>,
}

#[derive(Serialize)]
struct ClassifyReport {
    schema_version: u32,
    records: Vec<ClassifyRecord>,
}

/// Input graphs as suite members, labelled by canonical code or position.
fn members_from_file(path: &Path, format: Option<Format>) -> Result<Vec<Member>, CliError> {
    Ok(read_graphs(path, format)?
        .into_iter()
        .enumerate()
        .map(|(i, g)| match g {
            Graph::Plane(p) => {
                let label = canonical_code(&p)
                    .map(|c| c.to_hex())
                    .unwrap_or_else(|_| i.to_string());
                Member::plane(label, p)
            }
            Graph::Abstract(a) => Member::abstract_only(i.to_string(), a),
        })
        .collect())
}

fn cmd_classify(
    input: Option<&Path>,
    format: Option<Format>,
    spec: Option<&str>,
    out: Option<&Path>,
    census: Option<&Path>,
) -> Result<(), CliError> {
    let members: Vec<Member> = match (input, spec) {
        (Some(path), _) => members_from_file(path, format)?,
        (None, Some(spec)) => population(spec).map_err(|e| CliError::Usage(e.to_string()))?,
        (None, None) => {
            return Err(CliError::Usage(
                "--input or --population is required".into(),
            ))
        }
    };
    let records = members
        .iter()
        .map(|m| {
            let g = &m.graph;
            let (class, error) = match classify_planar_regular(g) {
                Ok(c) => (Some(c), None),
                Err(e) => (None, Some(e.to_string())),
            };
            ClassifyRecord {
                label: m.label.clone(),
                order: g.n(),
                edges: g.q(),
                regularity: g.regularity(),
                type_profile: type_profile(g).ok().map(|t| t.as_vec()),
                class,
                error,
            }
        })
        .collect();
    let report = ClassifyReport {
        schema_version: SCHEMA_VERSION,
        records,
    };
    match out {
        Some(path) => write_json(path, &report)?,
        None => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialises")
        ),
    }
    if let Some(path) = census {
        let mut csv = String::from("order,row,count\n");
        for ((n, row), count) in table_census(&members) {
            csv.push_str(&format!("{n},{row},{count}\n"));
        }
        write_file(path, csv.as_bytes())?;
    }
    Ok(())
}

fn parse_site(s: &str) -> Result<TSite, String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("{s}: {e}")))
        .collect::<Result<_, _>>()?;
    match parts.as_slice() {
        [v, u, w] => Ok(TSite::new(*v, *u, *w)),
        _ => Err(format!("{s}: expected v,u,w")),
    }
}

/// Graphs produced from one input; medial-preimage and t-decompose yield two.
fn transform(op: Op, g: &Graph) -> Result<Vec<Graph>, CliError> {
    let plane =
        |r: polydeza::Result<polydeza::PlaneGraph>| r.map(Graph::Plane).map_err(CliError::input);
    Ok(match op {
        Op::Line => vec![Graph::Abstract(line_graph(&g.to_abstract()))],
        Op::Medial => vec![plane(medial(&g.plane()?))?],
        Op::Radial => vec![plane(radial(&g.plane()?))?],
        Op::Dual => vec![plane(dual(&g.plane()?))?],
        Op::MedialPreimage => match medial_preimage(&g.plane()?).map_err(CliError::input)? {
            Some((h, hd)) => vec![Graph::Plane(h), Graph::Plane(hd)],
            None => {
                eprintln!("polydeza: graph is not a medial graph; skipped");
                Vec::new()
            }
        },
        Op::TDecompose => match t_decompose(&g.plane()?).map_err(CliError::input)? {
            TDecomposition::Split { g1, g2, .. } => vec![Graph::Plane(g1), Graph::Plane(g2)],
            TDecomposition::Pyramid { pyramid, .. } => {
                eprintln!("polydeza: square pyramid {pyramid:?}; no decomposition");
                Vec::new()
            }
        },
        Op::TConstruct => unreachable!("needs two hosts"),
    })
}

fn t_construct_pair(
    graphs: &[Graph],
    site1: Option<TSite>,
    site2: Option<TSite>,
) -> Result<Vec<Graph>, CliError> {
    let [a, b] = graphs else {
        return Err(CliError::Input(format!(
            "t-construct needs two hosts, got {}",
            graphs.len()
        )));
    };
    let (g1, g2) = (a.plane()?, b.plane()?);
    let first = |g: &polydeza::PlaneGraph| {
        valid_sites(g)
            .into_iter()
            .next()
            .ok_or_else(|| CliError::Input("host has no site".into()))
    };
    let s1 = site1.map_or_else(|| first(&g1), Ok)?;
    let s2 = site2.map_or_else(|| first(&g2), Ok)?;
    let glue = t_construct(&g1, s1, &g2, s2).map_err(CliError::input)?;
    Ok(vec![Graph::Plane(glue.graph)])
}

fn cmd_verify(
    suite: &str,
    spec: Option<&str>,
    input: Option<&Path>,
    format: Option<Format>,
    report: Option<&Path>,
) -> Result<(), CliError> {
    if !SUITES.contains(&suite) {
        return Err(CliError::Usage(format!(
            "unknown suite {suite}; known: {}",
            SUITES.join(", ")
        )));
    }
    let usage = |e: polydeza::Error| CliError::Usage(e.to_string());
    let rep = match (input, spec) {
        (Some(path), _) => {
            let members = members_from_file(path, format)?;
            run_suite_on(suite, &path.display().to_string(), &members).map_err(usage)?
        }
        (None, Some(spec)) => run_suite(suite, spec).map_err(usage)?,
        (None, None) => {
            return Err(CliError::Usage(
                "--input or --population is required".into(),
            ))
        }
    };
    println!(
        "{} on {}: checked {}, skipped {}, violations {}",
        rep.suite,
        rep.population,
        rep.checked,
        rep.skipped,
        rep.violations.len()
    );
    for note in &rep.notes {
        println!("  note: {note}");
    }
    if let Some(path) = report {
        write_json(path, &rep)?;
    }
    if rep.passes() {
        Ok(())
    } else {
        Err(CliError::Violations(rep.violations.len()))
    }
}

fn cmd_fixtures(dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let mut records = Vec::new();
    for (record, bytes) in polydeza::fixtures::manifest() {
        write_file(&dir.join(&record.file), &bytes)?;
        write_file(
            &dir.join(format!("{}.g6", record.name)),
            format!("{}\n", record.graph6).as_bytes(),
        )?;
        println!("{} ({} vertices)", record.name, record.order);
        records.push(record);
    }
    let manifest = FixtureManifest {
        schema_version: SCHEMA_VERSION,
        fixtures: records,
    };
    write_json(&dir.join("manifest.json"), &manifest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Violations(2).exit_code(), 1);
        assert_eq!(CliError::Usage(String::new()).exit_code(), 2);
        assert_eq!(CliError::FormatLoss.exit_code(), 2);
        assert_eq!(CliError::Io(String::new()).exit_code(), 3);
        assert_eq!(CliError::Input(String::new()).exit_code(), 3);
    }

    #[test]
    fn sites_parse() {
        assert_eq!(parse_site("3, 1,4"), Ok(TSite::new(3, 1, 4)));
        assert!(parse_site("3,1").is_err());
        assert!(parse_site("a,b,c").is_err());
    }
}

//! The `pargraph` command-line front end.
//!
//! Every subcommand reads a pargraph document (except `corpus`) and prints one
//! JSON value on standard output. Failures print
//! `{"error": {"code", "message", "context"}}` instead. Exit status is 0 on
//! success, 1 for bad input or usage, and 2 for internal consistency failures.
//! Vertices and blocks are 1-based in all output.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cellres::{bounded_complex, report_from_cells, zero_cells};
use crate::chipfire::{equivalent, reduce_with, Divisor, ReduceOptions};
use crate::corpus::{run_suite, SuiteOptions};
use crate::error::Error;
use crate::graph::{parse_multigraph, parse_pargraph, spanning_tree_count, Pargraph};
use crate::ideals::{groebner_basis, hilbert_counts_in, parking_ideal, Ambient};
use crate::picard::{
    freeness_by_coprime, freeness_by_forest, freeness_by_snf, picard_structure, search_coprime_alternative,
    toric_certificate, FreenessCertificate,
};

#[derive(Debug, Parser)]
#[command(name = "pargraph", version, about = "Chip-firing and toppling ideals on partitioned graphs")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AmbientArg {
    Full,
    DropRoot,
}

impl From<AmbientArg> for Ambient {
    fn from(a: AmbientArg) -> Self {
        match a {
            AmbientArg::Full => Ambient::Full,
            AmbientArg::DropRoot => Ambient::DropRoot,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a document and summarise it.
    Check { input: PathBuf },
    /// Number of spanning trees of the underlying graph.
    Trees { input: PathBuf },
    /// Picard group structure and freeness certificates.
    Picard {
        input: PathBuf,
        /// Alternative graph (document with `vertices` and `edges`) for the
        /// coprime spanning-tree test.
        #[arg(long)]
        alt: Option<PathBuf>,
        /// Also try `G` minus each basic edge as the alternative graph.
        #[arg(long)]
        search_alt: bool,
    },
    /// Reduced divisor equivalent to `--divisor`.
    Reduce {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        #[arg(long)]
        allow_non_effective: bool,
    },
    /// Whether two divisors differ by block firings.
    Equivalent {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        divisor: String,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
    /// Gröbner basis of the toppling ideal as `[lead, tail]` exponent pairs.
    Groebner {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Minimal generators of the parking ideal as exponent vectors.
    Parking {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Standard monomial counts of the parking ideal by degree.
    Hilbert {
        input: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_degree: u64,
        #[arg(long, value_enum, default_value = "full")]
        ambient: AmbientArg,
    },
    /// Betti numbers and Cohen–Macaulay report from the bounded complex.
    Resolution {
        input: PathBuf,
        /// Dump every cell.
        #[arg(long)]
        cells: bool,
    },
    /// Run the invariant suite over every small pargraph.
    Corpus {
        #[arg(long, default_value_t = 6)]
        limit: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random divisors per instance.
        #[arg(long, default_value_t = 50)]
        divisors: usize,
        #[arg(long, default_value_t = 5)]
        max_degree: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Check { .. } => "check",
            Command::Trees { .. } => "trees",
            Command::Picard { .. } => "picard",
            Command::Reduce { .. } => "reduce",
            Command::Equivalent { .. } => "equivalent",
            Command::Groebner { .. } => "groebner",
            Command::Parking { .. } => "parking",
            Command::Hilbert { .. } => "hilbert",
            Command::Resolution { .. } => "resolution",
            Command::Corpus { .. } => "corpus",
        }
    }

    fn input(&self) -> Option<&Path> {
        match self {
            Command::Check { input }
            | Command::Trees { input }
            | Command::Picard { input, .. }
            | Command::Reduce { input, .. }
            | Command::Equivalent { input, .. }
            | Command::Groebner { input, .. }
            | Command::Parking { input, .. }
            | Command::Hilbert { input, .. }
            | Command::Resolution { input, .. } => Some(input),
            Command::Corpus { .. } => None,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> &'static str {
        match self {
            Failure::Usage(_) => "usage",
            Failure::Io(_) => "io",
            Failure::Lib(e) => e.code(),
        }
    }

    fn exit_code(&self) -> i32 {
        match self {
            Failure::Lib(e) if e.is_internal() => 2,
            _ => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Io(m) => m.clone(),
            Failure::Lib(e) => e.to_string(),
        }
    }
}

/// Exit status and the JSON document to print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub json: Value,
}

impl Outcome {
    pub fn render(&self) -> String {
        serde_json::to_string_pretty(&self.json).expect("values serialize")
    }
}

pub fn error_json(code: &str, message: &str, context: Value) -> Value {
    json!({ "error": { "code": code, "message": message, "context": context } })
}

pub fn run(config: &RunConfig) -> Outcome {
    match execute(&config.command) {
        Ok(json) => Outcome { exit_code: 0, json },
        Err(f) => {
            let mut context = json!({ "subcommand": config.command.name() });
            if let Some(p) = config.command.input() {
                context["input"] = json!(p.display().to_string());
            }
            Outcome { exit_code: f.exit_code(), json: error_json(f.code(), &f.message(), context) }
        }
    }
}

/// Parses `args` (including the program name) and runs; clap's own help and
/// version output pass through as plain text.
pub fn run_args<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => {
            let out = run(&cfg);
            (out.exit_code, out.render())
        }
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            (0, e.to_string())
        }
        Err(e) => {
            let message = e.to_string().lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            let v = error_json("usage", &message, json!({}));
            (1, serde_json::to_string_pretty(&v).expect("values serialize"))
        }
    }
}

fn load(path: &Path) -> Result<Pargraph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(parse_pargraph(&text)?)
}

fn parse_divisor(s: &str, n: usize) -> Result<Divisor, Failure> {
    let values = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Failure::Usage(format!("`{}` is not an integer", t.trim()))))
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: values.len() }.into());
    }
    Ok(Divisor(values))
}

fn one_based(edges: &[(usize, usize)]) -> Vec<[usize; 2]> {
    edges.iter().map(|&(i, j)| [i + 1, j + 1]).collect()
}

fn certificate_json(c: &FreenessCertificate) -> Value {
    match c {
        FreenessCertificate::Forest { forest_edges } => {
            json!({ "kind": "forest", "forest_edges": one_based(forest_edges) })
        }
        FreenessCertificate::CoprimeTrees { trees, alt_trees, gcd, alt } => {
            let edges: Vec<(usize, usize)> = alt
                .edges()
                .iter()
                .flat_map(|&(i, j, m)| std::iter::repeat_n((i, j), m as usize))
                .collect();
            json!({
                "kind": "coprime_trees",
                "trees": trees.to_string(),
                "alt_trees": alt_trees.to_string(),
                "gcd": gcd.to_string(),
                "alt_edges": one_based(&edges),
            })
        }
        FreenessCertificate::DirectSnf { invariant_factors } => json!({
            "kind": "direct_snf",
            "invariant_factors": invariant_factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        }),
    }
}

fn execute(cmd: &Command) -> Result<Value, Failure> {
    match cmd {
        Command::Check { input } => {
            let pg = load(input)?;
            let edges = |v: Vec<(usize, usize, u32)>| -> Vec<[usize; 3]> {
                v.into_iter().map(|(i, j, m)| [i + 1, j + 1, m as usize]).collect()
            };
            Ok(json!({
                "valid": true,
                "vertices": pg.n(),
                "blocks": pg.blocks().iter().map(|b| b.iter().map(|v| v + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "sink_block": pg.sink_block() + 1,
                "root": pg.root() + 1,
                "pseudo": pg.is_pseudo(),
                "simple": pg.graph().is_simple(),
                "relevant_edges": edges(pg.relevant_edges()),
                "basic_edges": edges(pg.basic_edges()),
            }))
        }
        Command::Trees { input } => {
            let pg = load(input)?;
            Ok(json!({ "spanning_trees": spanning_tree_count(pg.graph()).to_string() }))
        }
        Command::Picard { input, alt, search_alt } => {
            let pg = load(input)?;
            let pic = picard_structure(&pg);
            let mut certs = Vec::new();
            match freeness_by_forest(&pg) {
                Ok(Some(c)) => certs.push(c),
                Ok(None) | Err(Error::NotSimple { .. }) => {}
                Err(e) => return Err(e.into()),
            }
            if let Some(path) = alt {
                let text =
                    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                if let Some(c) = freeness_by_coprime(&pg, &parse_multigraph(&text)?)? {
                    certs.push(c);
                }
            }
            if *search_alt {
                if let Some(c) = search_coprime_alternative(&pg).filter(|c| !certs.contains(c)) {
                    certs.push(c);
                }
            }
            certs.extend(freeness_by_snf(&pg));
            for c in &certs {
                if !c.verify(&pg) {
                    return Err(Error::ComplexInconsistent(format!("{} certificate fails to verify", c.kind())).into());
                }
            }
            Ok(json!({
                "free_rank": pic.free_rank,
                "torsion": pic.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                "toric": toric_certificate(&pg),
                "certificates": certs.iter().map(certificate_json).collect::<Vec<_>>(),
            }))
        }
        Command::Reduce { input, divisor, allow_non_effective } => {
            let pg = load(input)?;
            let d = parse_divisor(divisor, pg.n())?;
            let r = reduce_with(&pg, &d, ReduceOptions { allow_non_effective: *allow_non_effective })?;
            let script: Vec<Value> = r
                .script
                .counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(b, &c)| json!({ "block": b + 1, "times": c }))
                .collect();
            Ok(json!({ "divisor": r.divisor, "script": script }))
        }
        Command::Equivalent { input, divisor, other } => {
            let pg = load(input)?;
            let a = parse_divisor(divisor, pg.n())?;
            let b = parse_divisor(other, pg.n())?;
            Ok(json!({ "equivalent": equivalent(&pg, &a, &b) }))
        }
        Command::Groebner { input, format } => {
            let pg = load(input)?;
            let gb = groebner_basis(&pg);
            Ok(match format {
                Format::Json => json!(gb.iter().map(|g| [&g.lead, &g.tail]).collect::<Vec<_>>()),
                Format::Latex => json!(gb.iter().map(|g| g.to_latex()).collect::<Vec<_>>()),
            })
        }
        Command::Parking { input, format } => {
            let pg = load(input)?;
            let gens = parking_ideal(&pg);
            Ok(match format {
                Format::Json => json!(gens),
                Format::Latex => json!(gens.iter().map(|m| m.to_latex()).collect::<Vec<_>>()),
            })
        }
        Command::Hilbert { input, max_degree, ambient } => {
            let pg = load(input)?;
            let ambient = Ambient::from(*ambient);
            let counts = hilbert_counts_in(pg.n(), &ambient.variables(&pg), &parking_ideal(&pg), *max_degree)?;
            Ok(json!({ "ambient": ambient, "counts": counts }))
        }
        Command::Resolution { input, cells } => {
            let pg = load(input)?;
            let complex = bounded_complex(&pg)?;
            let report = report_from_cells(&pg, &complex)?;
            let mut v = serde_json::to_value(&report).expect("report serializes");
            if *cells {
                v["relevant_edges"] =
                    json!(pg.relevant_edges().iter().map(|&(i, j, _)| [i + 1, j + 1]).collect::<Vec<_>>());
                v["zero_cells"] = json!(zero_cells(&pg)
                    .iter()
                    .map(|z| json!({
                        "parset": z.parset.block_indices().iter().map(|b| b + 1).collect::<Vec<_>>(),
                        "point": z.point.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "label": z.label,
                    }))
                    .collect::<Vec<_>>());
                v["cells"] = json!(complex);
            }
            Ok(v)
        }
        Command::Corpus { limit, seed, divisors, max_degree } => {
            if *limit == 0 || *limit > crate::corpus::MAX_CORPUS_VERTICES {
                return Err(Failure::Usage(format!(
                    "--limit must be between 1 and {}",
                    crate::corpus::MAX_CORPUS_VERTICES
                )));
            }
            let summary = run_suite(&SuiteOptions {
                limit: *limit,
                seed: *seed,
                divisors: *divisors,
                max_degree: *max_degree,
            });
            Ok(serde_json::to_value(&summary).expect("summary serializes"))
        }
    }
}

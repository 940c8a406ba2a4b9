//! Command-line front end. [`run_command`] parses an argument vector and
//! returns the exit code together with what would be written to stdout and
//! stderr, so the binary is a thin wrapper and the commands are testable.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 bad input,
//! 3 face budget exhausted.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{SimplicialComplex, DEFAULT_FACE_BUDGET};
use crate::error::{ComplexError, EngineError, GraphError, ParityError, ParseError};
use crate::graph::Pseudograph;
use crate::homology::{betti_reduced, BettiVector};
use crate::io::{format_collection, parse_collection, parse_graph};
use crate::lattice::{self, DelzantReport, Designation, RowSpaceReport};
use crate::parity::{self, Parity};
use crate::poincare::{self, Counterexample};
use crate::poly::IntPolynomial;
use crate::poset::{s_parity_poset, Exclusion};
use crate::shelling::{shellable, Shellability, DEFAULT_SHELLING_BUDGET};
use crate::tube::TubingComplex;

#[derive(Debug, Parser)]
#[command(name = "tubings", version, about = "Tubings of pseudographs and Betti numbers of their real toric manifolds")]
struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum number of faces any one complex may enumerate.
    #[arg(long, global = true, env = "TUBINGS_FACE_BUDGET")]
    face_budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every tube.
    Tubes { graph: PathBuf },
    /// The tubing complex: tubes and maximal tubings.
    Complex { graph: PathBuf },
    /// Reduced Betti numbers of a parity subcomplex.
    Betti {
        graph: PathBuf,
        /// Comma-separated nodes and bundle-edge labels, e.g. `1,3,a,b`.
        #[arg(long)]
        collection: String,
        #[arg(long, value_enum, default_value_t = Variant::Odd)]
        variant: Variant,
    },
    /// The a-polynomial.
    Apoly { graph: PathBuf },
    /// The Poincaré polynomial.
    Poincare {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Cross-check both Poincaré routes and the lattice data.
    Verify {
        graph: PathBuf,
        /// Number of random designations to recompute the Poincaré
        /// polynomial with.
        #[arg(long, default_value_t = 8)]
        budget: usize,
    },
    /// Order complex of the poset of unions of separated tubes of one parity.
    OrderComplex {
        graph: PathBuf,
        #[arg(long)]
        collection: String,
        #[arg(long, value_enum)]
        parity: ParityArg,
        /// Also search for a shelling.
        #[arg(long)]
        shellable: bool,
    },
    /// Check that every maximal tubing gives a lattice basis of normals.
    DelzantCheck { graph: PathBuf },
    /// List every H ⋖ G with its a-polynomial.
    Lessdot { graph: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Variant {
    Odd,
    Even,
    Prime,
    Dprime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Reduced,
    Brute,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        match e {
            ComplexError::FaceBudgetExceeded(_) => CliError::Budget(e.to_string()),
            ComplexError::VertexClash(_) => CliError::Input(e.to_string()),
        }
    }
}

impl From<ParityError> for CliError {
    fn from(e: ParityError) -> Self {
        match e {
            ParityError::Complex(c) => c.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        match e {
            EngineError::FaceBudget { .. } => CliError::Budget(e.to_string()),
            EngineError::Graph(g) => g.into(),
            EngineError::Parity(p) => p.into(),
        }
    }
}

/// What a command produced: an exit code and the two output streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A finished command: its JSON document, its text rendering, and whether a
/// check it ran failed.
struct Report {
    json: String,
    text: String,
    failed: bool,
}

impl Report {
    fn ok(json: impl Serialize, text: String) -> Self {
        Report { json: serde_json::to_string(&json).expect("plain data serializes"), text, failed: false }
    }
}

/// Runs the command line `argv` (including the program name).
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                CommandOutput { code, stdout: rendered, stderr: String::new() }
            } else {
                CommandOutput { code, stdout: String::new(), stderr: rendered }
            };
        }
    };
    let budget = cli.face_budget.unwrap_or(DEFAULT_FACE_BUDGET);
    match execute(&cli.command, budget, cli.seed) {
        Ok(report) => {
            let stdout = if cli.json {
                report.json + "\n"
            } else {
                report.text
            };
            CommandOutput { code: if report.failed { 1 } else { 0 }, stdout, stderr: String::new() }
        }
        Err(e) => CommandOutput { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn load(path: &Path) -> Result<Pseudograph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map(|doc| doc.graph).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct ComplexJson {
    vertices: Vec<String>,
    maximal_faces: Vec<Vec<String>>,
}

fn complex_json(k: &SimplicialComplex, budget: usize) -> Result<ComplexJson, CliError> {
    let faces = k.maximal_faces(budget)?;
    let maximal_faces = if k.vertex_count() == 0 { Vec::new() } else { faces.iter().map(|f| k.name_face(f)).collect() };
    Ok(ComplexJson { vertices: k.labels().to_vec(), maximal_faces })
}

fn braces(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

fn betti_list(b: &BettiVector) -> String {
    format!("[{}]", b.as_slice().iter().map(u64::to_string).collect::<Vec<_>>().join(", "))
}

fn execute(command: &Command, budget: usize, seed: u64) -> Result<Report, CliError> {
    match command {
        Command::Tubes { graph } => {
            let g = load(graph)?;
            let cx = TubingComplex::new(&g)?;
            let names: Vec<String> = cx.tubes().iter().map(ToString::to_string).collect();
            let mut text = format!("{} tubes of {g}\n", names.len());
            for n in &names {
                writeln!(text, "  {n}").unwrap();
            }
            #[derive(Serialize)]
            struct Out {
                graph: String,
                count: usize,
                tubes: Vec<String>,
            }
            Ok(Report::ok(Out { graph: g.to_string(), count: names.len(), tubes: names }, text))
        }
        Command::Complex { graph } => {
            let g = load(graph)?;
            let cx = TubingComplex::new(&g)?;
            let doc = complex_json(&cx.complex(), budget)?;
            let mut text = format!(
                "{} tubes, {} maximal tubings of size {}\n",
                doc.vertices.len(),
                doc.maximal_faces.len(),
                cx.dimension()
            );
            for f in &doc.maximal_faces {
                writeln!(text, "  {}", braces(f)).unwrap();
            }
            Ok(Report::ok(doc, text))
        }
        Command::Betti { graph, collection, variant } => {
            let g = load(graph)?;
            let c = parse_collection(collection, &g)?;
            let k = match variant {
                Variant::Odd => parity::k_odd(&g, &c)?,
                Variant::Even => parity::k_even(&g, &c)?,
                Variant::Prime => parity::k_prime(&g, &c)?,
                Variant::Dprime => parity::k_double_prime(&g, &c)?,
            };
            let betti = betti_reduced(&k, budget)?;
            let complex = complex_json(&k, budget)?;
            let text = format!(
                "{} vertices {}\nbetti {}\n",
                complex.vertices.len(),
                braces(&complex.vertices),
                betti_list(&betti)
            );
            #[derive(Serialize)]
            struct Out {
                collection: String,
                variant: Variant,
                betti: BettiVector,
                complex: ComplexJson,
            }
            Ok(Report::ok(Out { collection: format_collection(&c), variant: *variant, betti, complex }, text))
        }
        Command::Apoly { graph } => {
            let g = load(graph)?;
            let a = poincare::a_polynomial(&g, budget)?;
            #[derive(Serialize)]
            struct Out {
                a: IntPolynomial,
            }
            let text = format!("{a}\n");
            Ok(Report::ok(Out { a }, text))
        }
        Command::Poincare { graph, method } => {
            let g = load(graph)?;
            let reduced =
                matches!(method, Method::Reduced | Method::Both).then(|| poincare::poincare_reduced(&g, budget)).transpose()?;
            let brute =
                matches!(method, Method::Brute | Method::Both).then(|| poincare::poincare_brute(&g, budget)).transpose()?;
            let equal = match (&reduced, &brute) {
                (Some(r), Some(b)) => Some(r == b),
                _ => None,
            };
            let text = match (&reduced, &brute) {
                (Some(r), Some(b)) => format!("reduced {r}\nbrute   {b}\nequal   {}\n", r == b),
                (Some(p), None) | (None, Some(p)) => format!("{p}\n"),
                (None, None) => unreachable!("at least one method runs"),
            };
            #[derive(Serialize)]
            struct Out {
                #[serde(skip_serializing_if = "Option::is_none")]
                reduced: Option<IntPolynomial>,
                #[serde(skip_serializing_if = "Option::is_none")]
                brute: Option<IntPolynomial>,
                #[serde(skip_serializing_if = "Option::is_none")]
                equal: Option<bool>,
            }
            let mut report = Report::ok(Out { reduced, brute, equal }, text);
            report.failed = equal == Some(false);
            Ok(report)
        }
        Command::Verify { graph, budget: samples } => verify(&load(graph)?, budget, *samples, seed),
        Command::OrderComplex { graph, collection, parity, shellable: shell } => {
            let g = load(graph)?;
            let c = parse_collection(collection, &g)?;
            let parity = match parity {
                ParityArg::Odd => Parity::Odd,
                ParityArg::Even => Parity::Even,
            };
            let poset = s_parity_poset(&g, &c, parity, Exclusion::Collection)?;
            let k = poset.order_complex();
            let betti = betti_reduced(&k, budget)?;
            let mobius = poset.mobius();
            let shelling = if *shell { Some(shellable(&k, DEFAULT_SHELLING_BUDGET)?) } else { None };
            let verdict = shelling.as_ref().map(|s| match s {
                Shellability::Yes(_) => "yes",
                Shellability::No => "no",
                Shellability::Unknown => "unknown",
            });
            let mut text = format!(
                "{} elements {}\nbetti {}\nmobius {mobius}\n",
                poset.len(),
                braces(poset.labels()),
                betti_list(&betti)
            );
            if let Some(v) = verdict {
                writeln!(text, "shellable: {v}").unwrap();
            }
            #[derive(Serialize)]
            struct Out<'a> {
                collection: String,
                parity: Parity,
                elements: &'a [String],
                betti: BettiVector,
                mobius: i64,
                complex: ComplexJson,
                #[serde(skip_serializing_if = "Option::is_none")]
                shellable: Option<&'static str>,
            }
            let complex = complex_json(&k, budget)?;
            let out = Out {
                collection: format_collection(&c),
                parity,
                elements: poset.labels(),
                betti,
                mobius,
                complex,
                shellable: verdict,
            };
            Ok(Report::ok(out, text))
        }
        Command::DelzantCheck { graph } => {
            let g = load(graph)?;
            let cx = TubingComplex::new(&g)?;
            let report = lattice::delzant_check(&cx, &Designation::canonical(&g)?, budget)?;
            let text = delzant_text(&report);
            let failed = !report.passed();
            #[derive(Serialize)]
            struct Out {
                passed: bool,
                #[serde(flatten)]
                report: DelzantReport,
            }
            let mut out = Report::ok(Out { passed: !failed, report }, text);
            out.failed = failed;
            Ok(out)
        }
        Command::Lessdot { graph } => {
            let g = load(graph)?;
            let parts = poincare::lessdot_polynomials(&g, budget)?;
            let mut text = format!("{} graphs H with H ⋖ {g}\n", parts.len());
            #[derive(Serialize)]
            struct Entry {
                graph: String,
                a: IntPolynomial,
            }
            let entries: Vec<Entry> = parts.iter().map(|(h, a)| Entry { graph: h.to_string(), a: a.clone() }).collect();
            let width = entries.iter().map(|e| e.graph.chars().count()).max().unwrap_or(0);
            for e in &entries {
                writeln!(text, "  {:width$}  {}", e.graph, e.a).unwrap();
            }
            #[derive(Serialize)]
            struct Out {
                graphs: Vec<Entry>,
            }
            Ok(Report::ok(Out { graphs: entries }, text))
        }
    }
}

fn delzant_text(r: &DelzantReport) -> String {
    let mut text = format!(
        "dimension {}\nmaximal tubings {} ({} of the wrong size)\nrank of lambda mod 2: {}\nunimodular: {}\n",
        r.dimension,
        r.maximal_tubings,
        r.wrong_size,
        r.lambda_rank,
        if r.violations.is_empty() { "all".to_string() } else { format!("{} violations", r.violations.len()) }
    );
    for v in &r.violations {
        writeln!(text, "  {} det {}", braces(&v.tubing), v.determinant).unwrap();
    }
    writeln!(text, "{}", if r.passed() { "passed" } else { "FAILED" }).unwrap();
    text
}

/// A designation with a random last node and a random last edge per bundle.
fn random_designation(g: &Pseudograph, rng: &mut ChaCha8Rng) -> Result<Designation, GraphError> {
    let node = *g.nodes().choose(rng).ok_or(GraphError::Disconnected)?;
    let labels: Vec<&String> = g.bundles().iter().map(|b| b.labels.choose(rng).expect("bundles are nonempty")).collect();
    Designation::new(g, node, labels)
}

fn verify(g: &Pseudograph, budget: usize, samples: usize, seed: u64) -> Result<Report, CliError> {
    let check = poincare::cross_check(g, budget)?;
    let mut failed = !check.passed();
    let mut text = format!(
        "{}\nreduced {}\nbrute   {}\neven collections checked: {}\n",
        check.graph, check.reduced, check.brute, check.collections
    );
    for f in &check.failures {
        writeln!(text, "  FAILED {} at {}: {}", f.check, f.collection, f.detail).unwrap();
    }

    #[derive(Serialize)]
    struct Lattice {
        delzant: DelzantReport,
        row_space: RowSpaceReport,
        designations: usize,
        designation_independent: bool,
    }
    let lattice = if g.is_connected() {
        let cx = TubingComplex::new(g)?;
        let canonical = Designation::canonical(g)?;
        let delzant = lattice::delzant_check(&cx, &canonical, budget)?;
        let row_space = lattice::row_space_identification(&cx, &canonical);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut independent = true;
        for _ in 0..samples {
            let d = random_designation(g, &mut rng)?;
            independent &= lattice::poincare_characteristic(&cx, &d, budget)? == check.brute;
        }
        text.push_str(&delzant_text(&delzant));
        writeln!(text, "row space parametrized by even collections: {}", row_space.passed()).unwrap();
        writeln!(text, "same polynomial under {samples} random designations: {independent}").unwrap();
        failed |= !delzant.passed() || !row_space.passed() || !independent;
        Some(Lattice { delzant, row_space, designations: samples, designation_independent: independent })
    } else {
        text.push_str("lattice checks skipped: graph is not connected\n");
        None
    };
    writeln!(text, "{}", if failed { "FAILED" } else { "all checks passed" }).unwrap();

    #[derive(Serialize)]
    struct Out {
        graph: String,
        passed: bool,
        reduced: IntPolynomial,
        brute: IntPolynomial,
        collections: usize,
        failures: Vec<Counterexample>,
        lattice: Option<Lattice>,
    }
    let out = Out {
        graph: check.graph,
        passed: !failed,
        reduced: check.reduced,
        brute: check.brute,
        collections: check.collections,
        failures: check.failures,
        lattice,
    };
    let mut report = Report::ok(out, text);
    report.failed = failed;
    Ok(report)
}

//! The `orbigraph` command line.
//!
//! Exit codes: 0 success, 1 the graph fails validation, 2 a witness is
//! missing or inconsistent with the local picture, 3 parse, I/O or usage
//! errors. Diagnostics go to the error stream. Set `ORBIGRAPH_LOG` (for
//! example `ORBIGRAPH_LOG=debug`) for log output; the default is quiet.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::classify::{classify, ClassifyError};
use crate::decompose::{carry_through, decompose, DecomposeError};
use crate::dot::to_dot;
use crate::graph::{validate_graph, SingularGraph};
use crate::ids::{EdgeId, End};
use crate::io::{parse_document, parse_document_unchecked, write_document, DocumentError, OrbifoldDocument, TraceRecord};
use crate::oracle::{graphs_isomorphic, random_bad_orbifold, GenerateError, GenerateOptions};
use crate::surgery::apply_cut_and_cap;
use crate::witness::BadnessWitness;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INCONSISTENT: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "orbigraph", version, about = "Singular-graph calculus for bad 2-suborbifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the graph and the witness references of a document.
    Validate { file: PathBuf },
    /// Print the local picture of one witness, or of every witness in the file.
    Classify {
        #[command(flatten)]
        witness: WitnessArgs,
        file: PathBuf,
    },
    /// Cut and cap along one witness (default: the first in the file).
    Cutcap {
        #[command(flatten)]
        witness: WitnessArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        file: PathBuf,
    },
    /// Run the whole witness list and attach the trace to the document.
    Decompose {
        #[arg(long)]
        out: Option<PathBuf>,
        file: PathBuf,
    },
    /// Build a bad orbifold by attaching random pieces to a seed graph.
    Generate {
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        rng: u64,
        #[arg(long, default_value_t = 6)]
        max_weight: u32,
        /// Start from this document's graph instead of the empty graph.
        #[arg(long)]
        seed_file: Option<PathBuf>,
        /// Never attach at smooth points.
        #[arg(long)]
        no_smooth: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether two documents have isomorphic graphs.
    Iso { a: PathBuf, b: PathBuf },
    /// Write the graph as Graphviz DOT, witness edges highlighted.
    ExportDot {
        #[arg(long)]
        out: Option<PathBuf>,
        file: PathBuf,
    },
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[arg(long, value_name = "E", conflicts_with = "football")]
    teardrop: Option<EdgeId>,
    /// Heavy edge, then light edge.
    #[arg(long, num_args = 2, value_names = ["E", "F"])]
    football: Option<Vec<EdgeId>>,
    /// End of F on the same side as end 1 of E.
    #[arg(long, requires = "football", value_parser = clap::value_parser!(u8).range(0..=1))]
    f_plus_side: Option<u8>,
}

impl WitnessArgs {
    fn witness(&self) -> Option<BadnessWitness> {
        if let Some(e) = self.teardrop {
            return Some(BadnessWitness::teardrop(e));
        }
        let ef = self.football.as_ref()?;
        let side = self.f_plus_side.and_then(|s| End::from_index(s as usize));
        Some(BadnessWitness::football(ef[0], ef[1], side))
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        let code = match e {
            DocumentError::Validation(_) => EXIT_INVALID,
            DocumentError::UnknownWitnessEdge { .. } | DocumentError::BadSide { .. } => EXIT_INCONSISTENT,
            _ => EXIT_USAGE,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        let code = match e {
            ClassifyError::InvalidGraph(_) => EXIT_INVALID,
            _ => EXIT_INCONSISTENT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<DecomposeError> for Failure {
    fn from(e: DecomposeError) -> Self {
        let code = match e {
            DecomposeError::InvalidGraph(_) => EXIT_INVALID,
            _ => EXIT_INCONSISTENT,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<OrbifoldDocument, Failure> {
    parse_document(&read(path)?).map_err(|e| {
        let f = Failure::from(e);
        Failure::new(f.code, format!("{}: {}", path.display(), f.message))
    })
}

/// Writes `text` to `out` if given; otherwise to the output stream.
fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display()))),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn check_witness(g: &SingularGraph, w: &BadnessWitness) -> Result<(), Failure> {
    match w.edges().into_iter().find(|e| g.edge(*e).is_none()) {
        Some(e) => Err(Failure::new(EXIT_INCONSISTENT, format!("witness {w} refers to missing edge {e}"))),
        None => Ok(()),
    }
}

fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { file } => {
            let doc = parse_document_unchecked(&read(&file)?)?;
            let violations = validate_graph(&doc.graph);
            if !violations.is_empty() {
                let lines: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                return Err(Failure::new(EXIT_INVALID, lines.join("\n")));
            }
            for w in &doc.witnesses {
                check_witness(&doc.graph, w)?;
            }
            writeln!(
                stdout,
                "ok: {} vertices, {} edges, {} witnesses",
                doc.graph.vertex_count(),
                doc.graph.edge_count(),
                doc.witnesses.len()
            )?;
        }
        Command::Classify { witness, file } => {
            let doc = load(&file)?;
            let list = match witness.witness() {
                Some(w) => vec![w],
                None => doc.witnesses.clone(),
            };
            for w in &list {
                check_witness(&doc.graph, w)?;
                let x = classify(&doc.graph, w)?;
                writeln!(stdout, "{}", x.summary())?;
            }
        }
        Command::Cutcap { witness, out, file } => {
            let doc = load(&file)?;
            let (w, rest): (BadnessWitness, Vec<BadnessWitness>) = match witness.witness() {
                Some(w) => (w, doc.witnesses.iter().filter(|o| **o != w).copied().collect()),
                None => match doc.witnesses.split_first() {
                    Some((w, rest)) => (*w, rest.to_vec()),
                    None => return Err(Failure::new(EXIT_INCONSISTENT, "no witness given and none in the file")),
                },
            };
            check_witness(&doc.graph, &w)?;
            let x = classify(&doc.graph, &w)?;
            let cut = apply_cut_and_cap(&doc.graph, &x)
                .map_err(|e| Failure::new(EXIT_INCONSISTENT, e.to_string()))?;
            let mut carried = Vec::with_capacity(rest.len());
            for r in rest {
                let c = carry_through(r, &cut)
                    .map_err(|e| Failure::new(EXIT_INCONSISTENT, format!("witness {r} loses edge {e} in the cut")))?;
                carried.push(c);
            }
            if out.is_some() {
                writeln!(stdout, "{}", x.summary())?;
                for cap in &cut.caps {
                    writeln!(stdout, "cap {} {}", cap.kind, cap.signature)?;
                }
            }
            let result = OrbifoldDocument::new(cut.graph, carried);
            emit(&write_document(&result), out.as_deref(), stdout)?;
        }
        Command::Decompose { out, file } => {
            let mut doc = load(&file)?;
            let trace = decompose(&doc.graph, &doc.witnesses)?;
            if out.is_some() {
                for s in &trace.steps {
                    writeln!(stdout, "step {}: {}  {}", s.index, s.witness, s.x.summary())?;
                }
                writeln!(stdout, "{} steps", trace.steps.len())?;
            }
            doc.trace = Some(TraceRecord::from(&trace));
            emit(&write_document(&doc), out.as_deref(), stdout)?;
        }
        Command::Generate { steps, rng, max_weight, seed_file, no_smooth, out } => {
            let seed = match seed_file {
                Some(path) => load(&path)?.graph,
                None => SingularGraph::new(),
            };
            let options = GenerateOptions { max_weight, allow_smooth: !no_smooth };
            let (graph, witnesses) = random_bad_orbifold(&seed, steps, rng, options).map_err(|e| match e {
                GenerateError::NoAdmissibleAttachment { .. } => Failure::new(EXIT_INCONSISTENT, e.to_string()),
                e => Failure::new(EXIT_INCONSISTENT, format!("internal error: {e}")),
            })?;
            emit(&write_document(&OrbifoldDocument::new(graph, witnesses)), out.as_deref(), stdout)?;
        }
        Command::Iso { a, b } => {
            let (ga, gb) = (load(&a)?.graph, load(&b)?.graph);
            let verdict = if graphs_isomorphic(&ga, &gb) { "isomorphic" } else { "not isomorphic" };
            writeln!(stdout, "{verdict}")?;
        }
        Command::ExportDot { out, file } => {
            let doc = load(&file)?;
            emit(&to_dot(&doc.graph, &doc.witnesses), out.as_deref(), stdout)?;
        }
    }
    Ok(())
}

/// Runs one command line (including the program name) and returns the exit
/// code.
pub fn run_command<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let _ = env_logger::Builder::from_env(env_logger::Env::new().filter_or("ORBIGRAPH_LOG", "off")).try_init();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match run(cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

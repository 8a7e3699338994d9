//! The `adjhopf` command line tool.
//!
//! Every subcommand reads JSON documents from files, or from standard input
//! when the path is `-`, and writes one JSON document per line.
//!
//! | code | meaning                                      |
//! |------|----------------------------------------------|
//! | 0    | success                                      |
//! | 1    | success, with diagnostics worth reading      |
//! | 2    | a verified law failed                        |
//! | 64   | usage error or an argument the input rejects |
//! | 65   | malformed input                              |
//! | 69   | a capacity bound was exceeded                |

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::basis::{graded_basis, graded_basis_ext, graded_dim};
use crate::canonical::{aut_order, aut_order_ext, canonical_form, canonical_form_ext, ClassKind};
use crate::contraction::{quotient, quotient_ext};
use crate::error::Error;
use crate::harness::{duality_diagnostic, run_suite, Suite};
use crate::hopf::{
    antipode, antipode1, coproduct, coproduct1, lie_bracket, pairing_tensor, product_bullet, product_dual,
};
use crate::insertion::{enumerate_insertions_ext, insert_ext, InsertionSpec};
use crate::linear::{LinComb, Rational, TensorComb};
use crate::matrix::{ExtAdjMatrix, VertexSet};
use crate::wire::{self, Document, WireGraph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIAGNOSTICS: i32 = 1;
pub const EXIT_LAW_FAILURE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_MALFORMED: i32 = 65;
pub const EXIT_CAPACITY: i32 = 69;

#[derive(Parser, Debug)]
#[command(
    name = "adjhopf",
    version,
    about = "Exact Hopf-algebra computations on adjacency matrices of multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct One {
    /// JSON document, or `-` for standard input
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Args, Debug)]
struct Two {
    left: String,
    right: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical form of a graph; combinations and tensors are normalized
    Canon(One),
    /// Degree (number of edges) of a graph
    Deg(One),
    /// Connected components with their vertex labels
    Components(One),
    /// Order of the automorphism group of a graph
    AutOrder(One),
    /// Contract the diagonal block on a vertex set
    Quotient {
        /// Comma separated one-based vertices, e.g. `1,2`
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Insert a connected graph at one host vertex
    Insert {
        /// One-based host vertex
        #[arg(long)]
        at: usize,
        /// Decomposing map: one composition per other host vertex, rows
        /// separated by `;`, entries by `,`
        #[arg(long, default_value = "")]
        map: String,
        /// How the host vertex's legs are split over the inserted vertices
        #[arg(long)]
        legs: Option<String>,
        guest: String,
        host: String,
    },
    /// All single insertions of a connected guest, with multiplicities
    Insertions(Two),
    /// Coproduct by contraction
    Coproduct(One),
    /// Coproduct by unshuffling components
    Coproduct1(One),
    /// Antipode of the direct-sum Hopf algebra
    Antipode(One),
    /// Antipode of the insertion Hopf algebra
    Antipode1(One),
    /// Insertion product of two combinations
    Bullet(Two),
    /// Product of the graded dual, on coefficient vectors in the dual basis
    DualBullet(Two),
    /// Commutator of the insertion product
    Bracket(Two),
    /// Pairing of the dual basis with a combination or tensor
    Pair(Two),
    /// Graded dimensions up to a degree
    Dims {
        #[arg(long)]
        max: usize,
    },
    /// Basis classes of one degree
    Basis {
        #[arg(long)]
        degree: usize,
        /// List extended classes with at most this many legs in total
        #[arg(long)]
        legs: Option<u32>,
    },
    /// Run law suites and print one JSON report per law
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long = "max-degree", default_value_t = 2)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare insertion products with coproduct coefficients
    Duality {
        #[arg(long = "max-degree", default_value_t = 3)]
        max_degree: usize,
    },
}

enum Fail {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

type Outcome = std::result::Result<i32, Fail>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> std::result::Result<String, Fail> {
        if path == "-" {
            if self.stdin_used {
                return Err(Fail::Usage("standard input can be read only once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Fail::Lib(Error::malformed("<stdin>", e.to_string())))?;
            return Ok(s);
        }
        fs::read_to_string(path).map_err(|e| Fail::Usage(format!("cannot read {path}: {e}")))
    }

    fn document(&mut self, path: &str) -> std::result::Result<Document, Fail> {
        let text = self.read(path)?;
        Ok(wire::parse_document(&text)?)
    }

    fn graph(&mut self, path: &str) -> std::result::Result<WireGraph, Fail> {
        match self.document(path)? {
            Document::Graph(g) => Ok(g),
            _ => Err(Fail::Lib(Error::malformed("$", "expected a graph"))),
        }
    }

    fn lincomb(&mut self, path: &str) -> std::result::Result<LinComb, Fail> {
        Ok(self.document(path)?.into_lincomb()?)
    }

    fn line(&mut self, s: &str) -> std::result::Result<(), Fail> {
        writeln!(self.out, "{s}").map_err(|e| Fail::Usage(format!("cannot write output: {e}")))
    }
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    let mut io = Io {
        stdin,
        stdin_used: false,
        out: stdout,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(Fail::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Fail::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) => EXIT_USAGE,
        Error::Malformed { .. } => EXIT_MALFORMED,
        Error::Capacity { .. } => EXIT_CAPACITY,
    }
}

fn parse_list(s: &str, what: &str) -> std::result::Result<Vec<u32>, Fail> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Fail::Usage(format!("{what}: {x:?} is not a natural number")))
        })
        .collect()
}

fn parse_map(s: &str) -> std::result::Result<Vec<Vec<u32>>, Fail> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(|row| parse_list(row, "--map")).collect()
}

fn extended_pair(a: &WireGraph, b: &WireGraph) -> (ClassKind, ExtAdjMatrix, ExtAdjMatrix) {
    let kind = a.kind.max(b.kind);
    (kind, a.diagram.clone(), b.diagram.clone())
}

fn graph_out(kind: ClassKind, d: ExtAdjMatrix) -> String {
    match kind {
        ClassKind::Plain => WireGraph::plain(d.internal().clone()),
        ClassKind::Extended => WireGraph::extended(d),
    }
    .to_json()
}

fn rational_json(r: &Rational) -> String {
    serde_json::Value::String(wire::rational_to_string(r)).to_string()
}

fn unary(io: &mut Io<'_>, input: &str, f: fn(&LinComb) -> crate::Result<LinComb>) -> Outcome {
    let x = io.lincomb(input)?;
    io.line(&wire::lincomb_to_json(&f(&x)?))?;
    Ok(EXIT_OK)
}

fn unary_tensor(io: &mut Io<'_>, input: &str, f: fn(&LinComb) -> crate::Result<TensorComb>) -> Outcome {
    let x = io.lincomb(input)?;
    io.line(&wire::tensor_to_json(&f(&x)?))?;
    Ok(EXIT_OK)
}

fn binary(io: &mut Io<'_>, two: &Two, f: fn(&LinComb, &LinComb) -> crate::Result<LinComb>) -> Outcome {
    let x = io.lincomb(&two.left)?;
    let y = io.lincomb(&two.right)?;
    io.line(&wire::lincomb_to_json(&f(&x, &y)?))?;
    Ok(EXIT_OK)
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Outcome {
    match command {
        Command::Canon(One { input }) => {
            let out = match io.document(&input)? {
                Document::Graph(g) => {
                    let d = match g.kind {
                        ClassKind::Plain => ExtAdjMatrix::without_legs(canonical_form(g.matrix())?),
                        ClassKind::Extended => canonical_form_ext(&g.diagram)?,
                    };
                    graph_out(g.kind, d)
                }
                doc => doc.to_json(),
            };
            io.line(&out)?;
        }
        Command::Deg(One { input }) => {
            let g = io.graph(&input)?;
            io.line(&g.matrix().degree().to_string())?;
        }
        Command::Components(One { input }) => {
            let g = io.graph(&input)?;
            for (set, part) in g.diagram.components() {
                let vertices = serde_json::to_string(set.labels()).expect("labels serialize");
                let line = format!("{{\"vertices\":{vertices},\"graph\":{}}}", graph_out(g.kind, part));
                io.line(&line)?;
            }
        }
        Command::AutOrder(One { input }) => {
            let g = io.graph(&input)?;
            let n = match g.kind {
                ClassKind::Plain => aut_order(g.matrix())?,
                ClassKind::Extended => aut_order_ext(&g.diagram)?,
            };
            io.line(&n.to_string())?;
        }
        Command::Quotient { set, input } => {
            let labels = parse_list(&set, "--set")?;
            let set = VertexSet::new(labels.into_iter().map(|l| l as usize))?;
            let g = io.graph(&input)?;
            let d = match g.kind {
                ClassKind::Plain => ExtAdjMatrix::without_legs(quotient(g.matrix(), &set)?.matrix),
                ClassKind::Extended => quotient_ext(&g.diagram, &set)?,
            };
            io.line(&graph_out(g.kind, d))?;
        }
        Command::Insert {
            at,
            map,
            legs,
            guest,
            host,
        } => {
            let spec = InsertionSpec::new(at, parse_map(&map)?)?;
            let guest = io.graph(&guest)?;
            let host = io.graph(&host)?;
            let (kind, n, m) = extended_pair(&guest, &host);
            let split = match legs {
                Some(s) => parse_list(&s, "--legs")?,
                None => vec![0; n.order()],
            };
            io.line(&graph_out(kind, insert_ext(&n, &m, &spec, &split)?))?;
        }
        Command::Insertions(two) => {
            let guest = io.graph(&two.left)?;
            let host = io.graph(&two.right)?;
            let (kind, n, m) = extended_pair(&guest, &host);
            let counts = match kind {
                ClassKind::Plain => crate::insertion::enumerate_insertions(n.internal(), m.internal())?,
                ClassKind::Extended => enumerate_insertions_ext(&n, &m)?,
            };
            let x: LinComb = counts
                .into_iter()
                .map(|(c, k)| (c, Rational::from_integer(k.into())))
                .collect();
            io.line(&wire::lincomb_to_json(&x))?;
        }
        Command::Coproduct(One { input }) => return unary_tensor(io, &input, coproduct),
        Command::Coproduct1(One { input }) => return unary_tensor(io, &input, coproduct1),
        Command::Antipode(One { input }) => return unary(io, &input, antipode),
        Command::Antipode1(One { input }) => return unary(io, &input, antipode1),
        Command::Bullet(two) => return binary(io, &two, product_bullet),
        Command::DualBullet(two) => return binary(io, &two, product_dual),
        Command::Bracket(two) => return binary(io, &two, lie_bracket),
        Command::Pair(two) => {
            let f = io.document(&two.left)?.into_tensor()?;
            let x = io.document(&two.right)?.into_tensor()?;
            io.line(&rational_json(&pairing_tensor(&f, &x)?))?;
        }
        Command::Dims { max } => {
            let dims = (0..=max).map(graded_dim).collect::<crate::Result<Vec<_>>>()?;
            io.line(&serde_json::to_string(&dims).expect("numbers serialize"))?;
        }
        Command::Basis { degree, legs } => {
            let classes = match legs {
                None => graded_basis(degree)?,
                Some(l) => graded_basis_ext(degree, l)?,
            };
            for c in classes {
                io.line(&wire::class_to_json(&c))?;
            }
        }
        Command::Verify {
            suite,
            max_degree,
            seed,
        } => {
            let reports = run_suite(suite, max_degree, seed)?;
            for r in &reports {
                io.line(&r.to_json_line())?;
            }
            if reports.iter().any(|r| r.is_violation()) {
                return Ok(EXIT_LAW_FAILURE);
            }
        }
        Command::Duality { max_degree } => {
            let table = duality_diagnostic(max_degree)?;
            for row in &table.rows {
                let ratio = row.ratio().map_or("null".to_string(), |r| rational_json(&r));
                let line = format!(
                    "{{\"n\":{},\"m\":{},\"q\":{},\"bullet\":{},\"delta\":{},\"ratio\":{}}}",
                    row.n.key(),
                    row.m.key(),
                    row.q.key(),
                    rational_json(&row.bullet),
                    rational_json(&row.delta),
                    ratio
                );
                io.line(&line)?;
            }
            if !table.supports_agree() {
                return Ok(EXIT_LAW_FAILURE);
            }
            if !table.coefficients_agree() {
                return Ok(EXIT_DIAGNOSTICS);
            }
        }
    }
    Ok(EXIT_OK)
}

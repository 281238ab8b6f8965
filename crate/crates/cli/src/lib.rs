//! Command-line front end. Every subcommand is a thin wrapper over one
//! library call; parsing, formatting, and exit-code mapping live here so
//! the binary in `main.rs` stays a one-liner and tests can drive `run`
//! directly.
//!
//! Exit codes: 0 success, 1 failure (bad input, bound violation), 2 usage
//! error, 3 exact-solver budget exceeded.

pub mod harness;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use outersq_core::chordal::{self, ChordalError, TriggeringCondition};
use outersq_core::families::{self, FamilyError};
use outersq_core::graph::{is_biconnected, Graph, Vertex};
use outersq_core::io::{self, Format, IoError};
use outersq_core::outerplanar::{analyze, NotOuterplanar};
use outersq_core::power::{
    choosability_bounds, degeneracy, exact_chromatic, exact_clique, greedy_color, square,
    validate_coloring, PowerError, SearchBudget,
};
use outersq_core::reduction::{inductive_ordering_square, ReductionError, StepRule};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Power(#[from] PowerError),
    #[error(transparent)]
    Outerplanarity(#[from] NotOuterplanar),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Chordal(#[from] ChordalError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("unknown family `{0}`, see `outersq gen --help`")]
    UnknownFamily(String),
    #[error("family `{0}` needs a size argument")]
    MissingSize(&'static str),
    #[error("bound table verification failed: {violations} violation(s), {missing} missing witness(es)")]
    TableFailed { violations: usize, missing: usize },
}

impl CliError {
    /// Budget exhaustion gets its own exit code so callers can tell "the
    /// instance is too big" from "the instance is bad".
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Power(PowerError::BudgetExceeded { .. }) => EXIT_BUDGET,
            CliError::Chordal(ChordalError::Power(PowerError::BudgetExceeded { .. })) => {
                EXIT_BUDGET
            }
            _ => EXIT_FAILURE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Dimacs,
}

#[derive(Debug, Parser)]
#[command(name = "outersq", version, about = "Distance-2 coloring of outerplanar graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Graph file format; default infers from the extension (.col is DIMACS)
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,

    /// Search-node budget for the exact solvers
    #[arg(long, global = true)]
    pub budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the square of the graph
    Square { file: PathBuf },

    /// Color the graph and print one `vertex color` line per vertex
    Color {
        file: PathBuf,
        /// Color the square instead of the graph itself
        #[arg(long)]
        square: bool,
        /// Optimal coloring by branch and bound
        #[arg(long, conflicts_with = "greedy")]
        exact: bool,
        /// First-fit along the reverse degeneracy order (the default)
        #[arg(long)]
        greedy: bool,
    },

    /// Square parameters, one tab-separated line: n m delta omega ind chi ch
    Params { file: PathBuf },

    /// Inductive ordering of the square with per-vertex back-degrees
    Order { file: PathBuf },

    /// Reduction trace: which case ordered each vertex, and at what bound
    Classify { file: PathBuf },

    /// Weak dual forest, one rooted tree of bounded faces per block
    Dual { file: PathBuf },

    /// Outer cycle and chords of every block
    Embed { file: PathBuf },

    /// Chordal classification: predicted parameters and separator, if any
    Chordal { file: PathBuf },

    /// Generate a named graph and print it
    Gen {
        /// One of: path, cycle, fan, rigid-ladder, hat-ladder, f4, f5, f6,
        /// g10, random, random-chordal
        family: String,
        /// Size parameter; vertex count except for fan (path length)
        n: Option<usize>,
        /// Seed for the random families
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exact maximum degree for the random families
        #[arg(long)]
        delta: Option<usize>,
    },

    /// Enumerate outerplanar graphs on n vertices, blank-line separated
    Enum {
        n: usize,
        /// Biconnected graphs only (raises the feasible n)
        #[arg(long)]
        biconnected: bool,
        /// Keep only graphs with maximum degree at most this
        #[arg(long)]
        delta_cap: Option<usize>,
    },

    /// Check the per-degree bound table for squares over a graph corpus
    VerifyTable {
        /// Exhaustive sweep limit: all graphs up to this order, biconnected
        /// ones up to two more
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// Random instances per maximum degree
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the full report as JSON on stdout
        #[arg(long)]
        json: bool,
    },
}

/// Parses `argv` and runs the selected subcommand, mapping errors to exit
/// codes. Never panics on bad input; the binary wraps this in one call.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let code = e.exit_code();
            eprintln!("outersq: {e}");
            code
        }
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let budget = cli
        .budget
        .map(SearchBudget::nodes)
        .unwrap_or_default();
    match &cli.command {
        Command::Square { file } => cmd_square(file, cli.format),
        Command::Color {
            file,
            square,
            exact,
            greedy: _,
        } => cmd_color(file, cli.format, *square, *exact, budget),
        Command::Params { file } => cmd_params(file, cli.format, budget),
        Command::Order { file } => cmd_order(file, cli.format),
        Command::Classify { file } => cmd_classify(file, cli.format),
        Command::Dual { file } => cmd_dual(file, cli.format),
        Command::Embed { file } => cmd_embed(file, cli.format),
        Command::Chordal { file } => cmd_chordal(file, cli.format),
        Command::Gen {
            family,
            n,
            seed,
            delta,
        } => cmd_gen(family, *n, *seed, *delta, cli.format),
        Command::Enum {
            n,
            biconnected,
            delta_cap,
        } => cmd_enum(*n, *biconnected, *delta_cap),
        Command::VerifyTable {
            n_max,
            samples,
            seed,
            json,
        } => cmd_verify_table(*n_max, *samples, *seed, *json, budget),
    }
}

fn chosen_format(path: &Path, arg: Option<FormatArg>) -> Format {
    match arg {
        Some(FormatArg::Edgelist) => Format::EdgeList,
        Some(FormatArg::Dimacs) => Format::Dimacs,
        None => io::format_for_path(&path.to_string_lossy()),
    }
}

fn read_graph(path: &Path, arg: Option<FormatArg>) -> Result<(Graph, Format), CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let format = chosen_format(path, arg);
    Ok((io::parse(&text, format)?, format))
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_square(file: &Path, fmt: Option<FormatArg>) -> Result<(), CliError> {
    let (g, format) = read_graph(file, fmt)?;
    print!("{}", io::write(&square(&g), format));
    Ok(())
}

fn cmd_color(
    file: &Path,
    fmt: Option<FormatArg>,
    on_square: bool,
    exact: bool,
    budget: SearchBudget,
) -> Result<(), CliError> {
    let (g, _) = read_graph(file, fmt)?;
    let target = if on_square { square(&g) } else { g };
    let coloring = if exact {
        exact_chromatic(&target, budget)?.1
    } else {
        greedy_color(&target, &degeneracy(&target))
    };
    // Published colorings are always re-validated, whatever produced them.
    validate_coloring(&target, &coloring)?;
    println!("palette\t{}", coloring.palette());
    for (v, c) in coloring.colors.iter().enumerate() {
        println!("{v}\t{c}");
    }
    Ok(())
}

fn cmd_params(file: &Path, fmt: Option<FormatArg>, budget: SearchBudget) -> Result<(), CliError> {
    let (g, _) = read_graph(file, fmt)?;
    let sq = square(&g);
    let (omega, _) = exact_clique(&sq, budget)?;
    let ind = degeneracy(&sq).k;
    let (chi, coloring) = exact_chromatic(&sq, budget)?;
    validate_coloring(&sq, &coloring)?;
    let (lo, hi) = choosability_bounds(&sq, budget)?;
    let ch = if lo == hi {
        lo.to_string()
    } else {
        format!("{lo}..{hi}")
    };
    println!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
        g.n(),
        g.m(),
        g.max_degree(),
        omega,
        ind,
        chi,
        ch
    );
    Ok(())
}

fn cmd_order(file: &Path, fmt: Option<FormatArg>) -> Result<(), CliError> {
    let (g, _) = read_graph(file, fmt)?;
    let red = inductive_ordering_square(&g)?;
    println!("k\t{}", red.ordering.k);
    println!("promised\t{}", red.promised_k);
    println!("order\t{}", join(&red.ordering.order));
    println!("back-degrees\t{}", join(&red.ordering.back_degrees));
    Ok(())
}

fn rule_name(rule: &StepRule) -> String {
    match rule {
        StepRule::LowDegreeScan => "scan".to_string(),
        StepRule::Config(label) => label.to_string(),
    }
}

fn cmd_classify(file: &Path, fmt: Option<FormatArg>) -> Result<(), CliError> {
    let (g, _) = read_graph(file, fmt)?;
    let red = inductive_ordering_square(&g)?;
    println!("k\t{}", red.ordering.k);
    println!("promised\t{}", red.promised_k);
    println!("step\tvertex\trule\tbound\tdist2\tmerged-into");
    for (i, s) in red.trace.iter().enumerate() {
        let merged = s
            .contracted_into
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".to_string());
        println!(
            "{i}\t{}\t{}\t{}\t{}\t{merged}",
            s.vertex,
            rule_name(&s.rule),
            s.promised_k,
            s.dist2_degree
        );
    }
    Ok(())
}

fn cmd_dual(file: &Path, fmt: Option<FormatArg>) -> Result<(), CliError> {
    let (g, _) = read_graph(file, fmt)?;
    let st = analyze(&g)?;
    for (bi, (bv, tree)) in st.cert.blocks.iter().zip(&st.duals).enumerate() {
        println!("block {bi}\tvertices\t{}", join(&bv.vertices));
        let Some(root) = tree.root else {
            println!("\t(no bounded faces)");
            continue;
        };
        let mut stack = vec![(root, 0usize)];
        while let Some((x, depth)) = stack.pop() {
            println!(
                "{}face {}\t{}",
                "  ".repeat(depth + 1),
                tree.faces[x].id,
                join(&tree.faces[x].boundary)
            );
            for &c in tree.children[x].iter().rev() {
                stack.push((c, depth + 1));
            }
        }
        let parents: Vec<String> = (0..tree.len())
            .map(|x| {
                tree.parent[x]
                    .map(|p| tree.faces[p].id.to_string())
                    .unwrap_or_else(|| "-".to_string())
            })
            .collect();
        println!("\tparent-faces\t{}", parents.join(" "));
    }
    Ok(())
}

fn cmd_embed(file: &Path, fmt: Option<FormatArg>) -> Result<(), CliError> {
    let (g, _) = read_graph(file, fmt)?;
    let st = analyze(&g)?;
    for (bi, bv) in st.cert.blocks.iter().enumerate() {
        match &bv.embedding {
            None => println!("block {bi}\ttrivial\t{}", join(&bv.vertices)),
            Some(emb) => {
                let cycle: Vec<Vertex> =
                    emb.outer_cycle.iter().map(|&v| bv.vertices[v]).collect();
                println!("block {bi}\tcycle\t{}", join(&cycle));
                let chords: Vec<String> = emb
                    .chords
                    .iter()
                    .map(|&(a, b)| format!("{}-{}", bv.vertices[a], bv.vertices[b]))
                    .collect();
                println!(
                    "block {bi}\tchords\t{}",
                    if chords.is_empty() {
                        "-".to_string()
                    } else {
                        chords.join(" ")
                    }
                );
            }
        }
    }
    Ok(())
}

fn condition_name(c: TriggeringCondition) -> &'static str {
    match c {
        TriggeringCondition::F4Subgraph => "f4-subgraph",
        TriggeringCondition::F5Subgraph => "f5-subgraph",
        TriggeringCondition::F6Subgraph => "f6-subgraph",
        TriggeringCondition::Base => "base",
    }
}

fn cmd_chordal(file: &Path, fmt: Option<FormatArg>) -> Result<(), CliError> {
    let (g, _) = read_graph(file, fmt)?;
    let c = chordal::classify(&g)?;
    println!("delta\t{}", c.delta);
    println!("omega\t{}", c.predicted_omega);
    println!("ind\t{}", c.predicted_ind);
    println!("chi\t{}", c.predicted_chi);
    println!("condition\t{}", condition_name(c.triggering_condition));
    println!(
        "checked\t{}",
        if g.n() <= chordal::ORACLE_CHECK_LIMIT {
            "exact"
        } else {
            "formula"
        }
    );
    // The separator search is only defined on biconnected graphs in the
    // two middle degree classes; everything else is a terminal case.
    if is_biconnected(&g) && (5..=6).contains(&c.delta) {
        match chordal::find_separator(&g)? {
            Some(sep) => println!("separator\t{}", join(&sep.vertices)),
            None => {
                let sq = square(&g);
                let complete = sq.m() == g.n() * (g.n() - 1) / 2;
                println!(
                    "separator\t{}",
                    if complete {
                        "none (square is complete)"
                    } else {
                        "none (dual has no degree-2 node)"
                    }
                );
            }
        }
    } else {
        println!("separator\tnot applicable");
    }
    Ok(())
}

fn cmd_gen(
    family: &str,
    n: Option<usize>,
    seed: u64,
    delta: Option<usize>,
    fmt: Option<FormatArg>,
) -> Result<(), CliError> {
    let need = |what: &'static str| n.ok_or(CliError::MissingSize(what));
    let g = match family {
        "path" => families::path(need("path")?)?,
        "cycle" => families::cycle(need("cycle")?)?,
        "fan" => families::fan(need("fan")?)?,
        "rigid-ladder" => families::rigid_ladder(need("rigid-ladder")?)?,
        "hat-ladder" => families::hat_rigid_ladder(need("hat-ladder")?)?,
        "f4" => families::f4(),
        "f5" => families::f5(),
        "f6" => families::f6(),
        "g10" => families::g10(),
        "random" => families::random_outerplanar(need("random")?, delta.unwrap_or(4), seed)?,
        "random-chordal" => {
            families::random_chordal_outerplanar(need("random-chordal")?, delta.unwrap_or(4), seed)?
        }
        other => return Err(CliError::UnknownFamily(other.to_string())),
    };
    let format = match fmt {
        Some(FormatArg::Dimacs) => Format::Dimacs,
        _ => Format::EdgeList,
    };
    print!("{}", io::write(&g, format));
    Ok(())
}

fn cmd_enum(n: usize, biconnected: bool, delta_cap: Option<usize>) -> Result<(), CliError> {
    let graphs = if biconnected {
        families::enumerate_biconnected_outerplanar(n, delta_cap)?
    } else {
        families::enumerate_outerplanar(n, delta_cap)?
    };
    for (i, g) in graphs.iter().enumerate() {
        if i > 0 {
            println!();
        }
        print!("{}", io::write(g, Format::EdgeList));
    }
    Ok(())
}

fn cmd_verify_table(
    n_max: usize,
    samples: usize,
    seed: u64,
    json: bool,
    budget: SearchBudget,
) -> Result<(), CliError> {
    let report = harness::verify_table(n_max, samples, seed, budget)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print!("{}", report.render_text());
    }
    if report.ok() {
        Ok(())
    } else {
        for v in report.all_violations() {
            eprintln!(
                "violation: {} {} observed {} claimed {} on {} ({} vertices)",
                v.id, v.parameter, v.observed, v.claimed, v.edges, v.n
            );
        }
        for m in &report.missing_witnesses {
            eprintln!("missing witness: {m}");
        }
        Err(CliError::TableFailed {
            violations: report.all_violations().len(),
            missing: report.missing_witnesses.len(),
        })
    }
}

//! Command-line front end: normal forms, summit data, summit graphs,
//! centralizer generating sets, conjugacy tests, and class sweeps, in either
//! braid-group presentation.
//!
//! Exit codes: 0 success (including a "not conjugate" verdict), 1 usage or
//! parse error, 2 resource cap exceeded, 3 internal error.

use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use garside::{
    build_graph, conjugacy_classes, conjugator_coset, element_to_string, generators_from_graph,
    graph_to_json, parse_element, reduce_generators, summit_representative, to_dot, ArtinMonoid,
    BklMonoid, BuildOptions, ClassOptions, ClassSweep, ConjugacyResult, ConjugatorMethod,
    StructureId,
};

#[derive(Parser)]
#[command(name = "garside", version, about = "Braid conjugacy via Garside structures")]
struct Cli {
    /// Garside structure on B_n.
    #[arg(long, value_enum, default_value_t = StructureArg::Artin)]
    structure: StructureArg,
    /// Number of strands (2..=16).
    #[arg(short = 'n', long = "strands")]
    strands: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StructureArg {
    Artin,
    Bkl,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Enumerate,
    Ascent,
}

impl From<MethodArg> for ConjugatorMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => ConjugatorMethod::Auto,
            MethodArg::Enumerate => ConjugatorMethod::Enumerate,
            MethodArg::Ascent => ConjugatorMethod::Ascent,
        }
    }
}

#[derive(clap::Args)]
struct BuildArgs {
    /// Abort if the summit graph exceeds this many vertices.
    #[arg(long, default_value_t = 100_000)]
    max_vertices: usize,
    /// Worker threads for graph expansion.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// How minimal conjugators are computed.
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
}

impl BuildArgs {
    fn options(&self) -> BuildOptions {
        BuildOptions {
            max_vertices: self.max_vertices,
            threads: self.threads,
            method: self.method.into(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the left-greedy normal form of a word.
    Nf { word: String },
    /// Print summit inf, sup, class size, a summit representative, and a
    /// conjugating witness.
    Summit {
        word: String,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Decide conjugacy; on success print a witness and the conjugator coset.
    Conjugate {
        word_a: String,
        word_b: String,
        /// Print the raw (unreduced) centralizer generators.
        #[arg(long)]
        raw: bool,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Build the minimal summit graph of a word's class.
    Graph {
        word: String,
        /// Emit Graphviz DOT (tree arrows bold).
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// Emit the JSON graph document.
        #[arg(long)]
        json: bool,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Print a generating set of the centralizer, one element per line.
    Centralizer {
        word: String,
        /// Print the raw generators instead of the reduced set.
        #[arg(long, conflicts_with = "reduced")]
        raw: bool,
        /// Print the reduced generators (the default).
        #[arg(long)]
        reduced: bool,
        #[command(flatten)]
        build: BuildArgs,
    },
    /// Enumerate conjugacy classes of all positive words of a length, as CSV.
    Classes {
        /// Word length to sweep.
        #[arg(long)]
        length: usize,
        /// Checkpoint file: progress is saved here and picked up on rerun.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Write the CSV to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        build: BuildArgs,
    },
}

enum CliError {
    Lib(garside::Error),
    Io(std::io::Error),
}

impl From<garside::Error> for CliError {
    fn from(e: garside::Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.exit_code() == 0 { 0 } else { 1 };
            let _ = e.print();
            return code;
        }
    };
    match catch_unwind(AssertUnwindSafe(|| dispatch(cli))) {
        Ok(Ok(())) => 0,
        Ok(Err(CliError::Lib(e @ garside::Error::VertexCapExceeded { .. }))) => {
            eprintln!("error: {e}");
            2
        }
        Ok(Err(CliError::Lib(e))) => {
            eprintln!("error: {e}");
            1
        }
        Ok(Err(CliError::Io(e))) => {
            eprintln!("error: {e}");
            1
        }
        Err(_) => {
            eprintln!("error: internal failure");
            3
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.structure {
        StructureArg::Artin => run(ArtinMonoid::new(cli.strands)?, cli.command),
        StructureArg::Bkl => run(BklMonoid::new(cli.strands)?, cli.command),
    }
}

fn emit(output: Option<&Path>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn run<G: StructureId>(g: G, command: Command) -> Result<(), CliError> {
    match command {
        Command::Nf { word } => {
            let e = parse_element(&g, &word)?;
            println!("{}", element_to_string(&e));
        }
        Command::Summit { word, build } => {
            let e = parse_element(&g, &word)?;
            let p = summit_representative(&e);
            let (graph, _tree) = build_graph(&p, &build.options())?;
            println!("inf: {}", p.summit_inf());
            println!("sup: {}", p.summit_sup());
            println!("class size: {}", graph.vertices().len());
            println!("representative: {}", element_to_string(p.representative()));
            println!("witness: {}", element_to_string(p.witness()));
        }
        Command::Conjugate {
            word_a,
            word_b,
            raw,
            build,
        } => {
            let a = parse_element(&g, &word_a)?;
            let b = parse_element(&g, &word_b)?;
            match conjugator_coset(&a, &b, &build.options())? {
                ConjugacyResult::Conjugate {
                    witness,
                    centralizer,
                } => {
                    println!("conjugate");
                    println!("witness: {}", element_to_string(&witness));
                    let gens = if raw {
                        centralizer
                    } else {
                        reduce_generators(&centralizer)
                    };
                    for z in gens.generators() {
                        println!("centralizer: {}", element_to_string(z));
                    }
                }
                ConjugacyResult::NotConjugate => println!("not conjugate"),
            }
        }
        Command::Graph {
            word,
            dot,
            json,
            output,
            build,
        } => {
            let e = parse_element(&g, &word)?;
            let p = summit_representative(&e);
            let (graph, tree) = build_graph(&p, &build.options())?;
            let content = if dot {
                to_dot(&graph)
            } else if json {
                let gens = generators_from_graph(&p, &graph, &tree);
                graph_to_json(&graph, &gens)
            } else {
                let tree_arrows = graph.arrows().iter().filter(|a| a.in_tree).count();
                let mut s = String::new();
                let _ = writeln!(s, "vertices: {}", graph.vertices().len());
                let _ = writeln!(s, "tree arrows: {tree_arrows}");
                let _ = writeln!(s, "non-tree arrows: {}", graph.arrows().len() - tree_arrows);
                for (i, v) in graph.vertices().iter().enumerate() {
                    let _ = writeln!(s, "vertex {i}: {}", element_to_string(v));
                }
                s
            };
            emit(output.as_deref(), &content)?;
        }
        Command::Centralizer {
            word, raw, build, ..
        } => {
            let e = parse_element(&g, &word)?;
            let p = summit_representative(&e);
            let (graph, tree) = build_graph(&p, &build.options())?;
            let gens = generators_from_graph(&p, &graph, &tree);
            let gens = if raw { gens } else { reduce_generators(&gens) };
            for z in gens.generators() {
                println!("{}", element_to_string(z));
            }
        }
        Command::Classes {
            length,
            resume,
            output,
            build,
        } => {
            // The thread budget drives chunk concurrency; graph builds inside
            // a sweep stay serial.
            let options = ClassOptions {
                threads: build.threads,
                chunk_count: None,
                build: BuildOptions {
                    threads: 1,
                    ..build.options()
                },
            };
            let table = match &resume {
                Some(path) => {
                    let mut sweep = if path.exists() {
                        let saved = std::fs::read_to_string(path)?;
                        ClassSweep::from_checkpoint(g.clone(), &saved, options)?
                    } else {
                        ClassSweep::new(g.clone(), length, options)?
                    };
                    while !sweep.is_done() {
                        sweep.run_next_batch()?;
                        std::fs::write(path, sweep.checkpoint_json())?;
                    }
                    sweep.finish()?
                }
                None => conjugacy_classes(&g, length, &options)?,
            };
            emit(output.as_deref(), &table.to_csv())?;
        }
    }
    Ok(())
}

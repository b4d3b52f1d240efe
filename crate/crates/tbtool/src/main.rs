use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use treebreadth::bipartite::{self, BipartiteAnswer};
use treebreadth::generators::{
    ball_augmentation, betweenness_graph, betweenness_witness, sandwich_graph, sandwich_witness,
    solve_betweenness, solve_sandwich, transfer_decomposition, BetweennessInstance, Direction, GadgetMap,
    SandwichInstance,
};
use treebreadth::oracle::{self, Parameter, ParameterQuery};
use treebreadth::{chordal, planar, Decomposition, Graph};

#[derive(Parser)]
#[command(name = "tbtool", version, about = "Tree-breadth recognition, exact parameters and gadget generation")]
struct Cli {
    /// Worker threads; every command currently runs on one thread.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide tree-breadth one on a bipartite or planar graph.
    Recognize {
        #[command(flatten)]
        input: Input,
        /// Use the exponential oracle on graphs that are neither bipartite nor planar.
        #[arg(long)]
        fallback_oracle: bool,
        /// Limit on the vertex count for the oracle fallback.
        #[arg(long, default_value_t = ParameterQuery::DEFAULT_LIMIT)]
        limit: usize,
        /// Write the decomposition here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute tb, tl, pb or pl exactly on a small graph.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        param: ParamArg,
        #[arg(long, default_value_t = ParameterQuery::DEFAULT_LIMIT)]
        limit: usize,
        /// Also write an optimal decomposition as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a hardness instance and its gadget map.
    Generate {
        #[command(subcommand)]
        kind: Generate,
    },
    /// Check a decomposition against a graph and print its metrics.
    Validate {
        #[command(flatten)]
        input: Input,
        /// Decomposition in JSON.
        #[arg(long)]
        decomposition: PathBuf,
    },
    /// Print the clique-minimal-separator decomposition.
    Atoms {
        #[command(flatten)]
        input: Input,
    },
    /// Rewrite a graph in another format.
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::El)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Generate {
    /// Path-breadth gadget of a betweenness instance.
    Betweenness {
        #[arg(long)]
        n: Option<usize>,
        /// `chainK` for K chained triples, or a file holding an instance.
        #[arg(long)]
        triples: String,
        #[command(flatten)]
        output: Output,
    },
    /// Tree-breadth gadget of a chordal sandwich instance.
    Sandwich {
        /// Two edge lists separated by a `---` line.
        #[arg(long)]
        instance: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// The graph G'_r in which tree-breadth one encodes tree-breadth r.
    Ball {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Input {
    /// Graph file: edge list, or JSON when the file starts with `{`.
    #[arg(long)]
    graph: PathBuf,
}

#[derive(Args)]
struct Output {
    /// Graph destination; the gadget map goes to the same path plus `.map`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::El)]
    format: Format,
    /// Solve the instance by brute force and write the witness decomposition here.
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    El,
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParamArg {
    Tb,
    Tl,
    Pb,
    Pl,
}

impl From<ParamArg> for Parameter {
    fn from(p: ParamArg) -> Self {
        match p {
            ParamArg::Tb => Parameter::TreeBreadth,
            ParamArg::Tl => Parameter::TreeLength,
            ParamArg::Pb => Parameter::PathBreadth,
            ParamArg::Pl => Parameter::PathLength,
        }
    }
}

/// Failure that maps to exit code 2.
struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

type Run = Result<ExitCode, Fail>;

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail(format!("{}: {}", path.display(), e)))
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    fs::write(path, text).map_err(|e| Fail(format!("{}: {}", path.display(), e)))
}

fn load_graph(path: &Path) -> Result<Graph, Fail> {
    let src = read(path)?;
    let g = if src.trim_start().starts_with('{') { Graph::parse_json(&src) } else { Graph::parse_edge_list(&src) };
    g.map_err(|e| Fail(format!("{}: {}", path.display(), e)))
}

fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::El => g.to_edge_list(),
        Format::Dot => g.to_dot(),
        Format::Json => g.to_json() + "\n",
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Fail> {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{}", text);
            Ok(())
        }
    }
}

fn verdict(yes: bool) -> ExitCode {
    ExitCode::from(if yes { 0 } else { 1 })
}

fn recognize(g: &Graph, fallback: bool, limit: usize, out: Option<&Path>) -> Run {
    g.require_connected()?;
    let (class, d) = if g.bipartition().is_some() {
        let d = match bipartite::recognize_bipartite_tb1(g)? {
            BipartiteAnswer::Yes(d) => Some(d),
            BipartiteAnswer::No => None,
        };
        ("bipartite", d)
    } else if planar::is_planar(g) {
        ("planar", planar::recognize_planar_tb1(g)?.decomposition().cloned())
    } else if fallback {
        if g.n() > limit {
            return Err(Fail(format!("graph has {} vertices, above the oracle limit of {}", g.n(), limit)));
        }
        let d = oracle::decomposition_within(g, Parameter::TreeBreadth, 1)?;
        ("oracle", d.map(|d| d.reduce_to_star(g)).transpose()?)
    } else {
        return Err(Fail("graph is neither bipartite nor planar; pass --fallback-oracle to use the exact oracle".into()));
    };
    eprintln!("recognizer: {}", class);
    match d {
        Some(d) => {
            println!("tb<=1: yes");
            emit(out, &(d.to_json() + "\n"))?;
            Ok(verdict(true))
        }
        None => {
            println!("tb<=1: no");
            Ok(verdict(false))
        }
    }
}

fn oracle_cmd(g: &Graph, param: Parameter, limit: usize, out: Option<&Path>) -> Run {
    if limit == 0 {
        return Err(Fail("--limit must be at least 1".into()));
    }
    let (k, d) = oracle::exact_parameter_with_decomposition(g, ParameterQuery::with_limit(param, limit))?;
    println!("{} = {}", param.short_name(), k);
    if let Some(p) = out {
        write(p, &(d.to_json() + "\n"))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn write_instance(g: &Graph, map: &GadgetMap, output: &Output, witness: impl FnOnce() -> Result<Option<Decomposition>, Fail>) -> Run {
    match &output.out {
        Some(p) => {
            write(p, &render(g, output.format))?;
            let mut map_path = p.clone().into_os_string();
            map_path.push(".map");
            write(Path::new(&map_path), &map.to_text())?;
        }
        None => {
            print!("{}", render(g, output.format));
            eprint!("{}", map.to_text());
        }
    }
    eprintln!("{} vertices, {} edges", g.n(), g.m());
    let Some(path) = &output.witness else {
        return Ok(ExitCode::SUCCESS);
    };
    match witness()? {
        Some(d) => {
            write(path, &(d.to_json() + "\n"))?;
            Ok(verdict(true))
        }
        None => {
            eprintln!("instance has no solution; no witness written");
            Ok(verdict(false))
        }
    }
}

fn betweenness_instance(n: Option<usize>, triples: &str) -> Result<BetweennessInstance, Fail> {
    if let Some(m) = triples.strip_prefix("chain") {
        let m: usize = m.parse().map_err(|_| Fail(format!("bad --triples value {:?}", triples)))?;
        let n = n.ok_or_else(|| Fail("--n is required with a chain of triples".into()))?;
        if n < 3 && m > 0 {
            return Err(Fail("a chain needs at least three elements".into()));
        }
        return Ok(BetweennessInstance::chain(n, m));
    }
    let inst = BetweennessInstance::parse(&read(Path::new(triples))?)?;
    if let Some(n) = n {
        if n != inst.n {
            return Err(Fail(format!("--n {} does not match the instance size {}", n, inst.n)));
        }
    }
    Ok(inst)
}

fn generate(kind: &Generate) -> Run {
    match kind {
        Generate::Betweenness { n, triples, output } => {
            let inst = betweenness_instance(*n, triples)?;
            let (g, map) = betweenness_graph(&inst);
            write_instance(&g, &map, output, || match solve_betweenness(&inst)? {
                Some(order) => Ok(Some(betweenness_witness(&inst, &order)?)),
                None => Ok(None),
            })
        }
        Generate::Sandwich { instance, output } => {
            let inst = SandwichInstance::parse(&read(instance)?)?;
            let (g, map) = sandwich_graph(&inst);
            write_instance(&g, &map, output, || match solve_sandwich(&inst)? {
                Some(h) => Ok(Some(sandwich_witness(&inst, &h)?)),
                None => Ok(None),
            })
        }
        Generate::Ball { input, r, output } => {
            let g = load_graph(&input.graph)?;
            let (aug, map) = ball_augmentation(&g, *r)?;
            write_instance(&aug, &map, output, || {
                let d = oracle::decomposition_within(&g, Parameter::TreeBreadth, *r)?;
                Ok(d.map(|d| transfer_decomposition(&g, *r, &d, Direction::Lift)).transpose()?)
            })
        }
    }
}

fn validate(g: &Graph, path: &Path) -> Run {
    let d = Decomposition::from_json(&read(path)?)?;
    if let Err(v) = d.validate(g) {
        println!("{}", json!({ "valid": false, "violation": v.to_string() }));
        return Ok(verdict(false));
    }
    let m = d.evaluate(g)?;
    let report = json!({
        "valid": true,
        "bags": d.len(),
        "breadth": m.breadth,
        "length": m.length,
        "is_star": m.is_star,
        "centers": m.centers,
        "star_centers": m.star_centers,
    });
    println!("{}", report);
    Ok(ExitCode::SUCCESS)
}

fn atoms(g: &Graph) -> Run {
    let a = chordal::atoms(g)?;
    let glue: Vec<_> = a.glue.iter().map(|&(i, j, s)| json!({ "atom": i, "into": j, "separator": s })).collect();
    println!("{}", json!({ "atoms": a.atoms, "separators": a.separators, "glue": glue }));
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Run {
    match &cli.command {
        Command::Recognize { input, fallback_oracle, limit, out } => {
            recognize(&load_graph(&input.graph)?, *fallback_oracle, *limit, out.as_deref())
        }
        Command::Oracle { input, param, limit, out } => {
            oracle_cmd(&load_graph(&input.graph)?, (*param).into(), *limit, out.as_deref())
        }
        Command::Generate { kind } => generate(kind),
        Command::Validate { input, decomposition } => validate(&load_graph(&input.graph)?, decomposition),
        Command::Atoms { input } => atoms(&load_graph(&input.graph)?),
        Command::Convert { input, format, out } => {
            emit(out.as_deref(), &render(&load_graph(&input.graph)?, *format))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Fail(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

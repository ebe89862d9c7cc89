//! `starcut`: solve, reduce, verify and cross-check from the command line.
//!
//! Exit codes: 0 YES or PASS, 1 NO or FAIL, 2 error, 3 inconclusive.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use starcut::cut::is_kind_cut;
use starcut::gen::{gen_connected_graph, gen_random_3dm, gen_random_graph};
use starcut::io;
use starcut::npo::{solve_3dm, solve_vertex_cover, VertexCoverInstance};
use starcut::reductions::{reduce_3dm, reduce_vertex_cover, Reduce3dmOptions, ReducedInstance};
use starcut::roundtrip::{roundtrip_3dm, roundtrip_vc, Report, Verdict};
use starcut::solver::{solve, Oracle, SolveOptions};
use starcut::{CutKind, Triviality};

const YES: u8 = 0;
const NO: u8 = 1;
const INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "starcut",
    version,
    about = "Star structure and substructure connectivity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact connectivity of a graph, bounded by --tmax
    Solve(SolveArgs),
    /// Build the structure gadget of a 3DM instance
    #[command(name = "reduce-3dm")]
    Reduce3dm(Reduce3dmArgs),
    /// Build the substructure gadget of a vertex cover instance
    #[command(name = "reduce-vc")]
    ReduceVc(ReduceVcArgs),
    /// Check a cut certificate against a graph
    Verify(VerifyArgs),
    /// Brute-force reference solvers
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Compare a source decision with the decision on its gadget
    #[command(subcommand)]
    Roundtrip(RoundtripCommand),
    /// Seeded random instances
    #[command(subcommand)]
    Gen(GenCommand),
}

#[derive(Args)]
struct Search {
    /// Count a remainder as trivial only when exactly one vertex is left
    #[arg(long)]
    strict_trivial: bool,
    /// Worker threads for the search
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Wall-clock budget in seconds; exceeding it is reported as inconclusive
    #[arg(long)]
    time_limit: Option<f64>,
    /// Disable the center filter and symmetry pruning
    #[arg(long)]
    no_prune: bool,
}

impl Search {
    fn options(&self) -> Result<SolveOptions> {
        let mut opts = SolveOptions {
            triviality: self.triviality(),
            threads: self.threads.max(1),
            ..SolveOptions::default()
        };
        if let Some(secs) = self.time_limit {
            opts.time_limit = Some(
                Duration::try_from_secs_f64(secs).context("--time-limit must be non-negative")?,
            );
        }
        if self.no_prune {
            opts = opts.unpruned();
        }
        Ok(opts)
    }

    fn triviality(&self) -> Triviality {
        if self.strict_trivial {
            Triviality::ExactlyOne
        } else {
            Triviality::AtMostOne
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long = "M")]
    m: usize,
    /// Substructure connectivity instead of structure connectivity
    #[arg(long)]
    sub: bool,
    #[arg(long)]
    tmax: usize,
    #[command(flatten)]
    search: Search,
}

#[derive(Args)]
struct Reduce3dmArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "M")]
    m: usize,
    #[arg(long)]
    out_prefix: PathBuf,
    /// Accept elements occurring other than two or three times
    #[arg(long)]
    allow_unrestricted: bool,
    /// Accept M = 4
    #[arg(long)]
    allow_small_m: bool,
}

impl Reduce3dmArgs {
    fn options(&self) -> Reduce3dmOptions {
        Reduce3dmOptions {
            allow_small_m: self.allow_small_m,
            allow_unrestricted: self.allow_unrestricted,
        }
    }
}

#[derive(Args)]
struct ReduceVcArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    out_prefix: PathBuf,
    /// Must equal the maximum degree when given
    #[arg(long = "M")]
    m: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    cut: PathBuf,
    #[arg(long)]
    strict_trivial: bool,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exact 3-dimensional matching
    #[command(name = "3dm")]
    ThreeDm {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exact vertex cover of size at most k
    Vc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Connectivity by subset enumeration (small graphs only)
    Kappa {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "M")]
        m: usize,
        #[arg(long)]
        sub: bool,
        #[arg(long)]
        tmax: usize,
        #[arg(long)]
        strict_trivial: bool,
    },
}

#[derive(Subcommand)]
enum RoundtripCommand {
    #[command(name = "3dm")]
    ThreeDm {
        #[command(flatten)]
        reduce: Reduce3dmArgs,
        #[command(flatten)]
        search: Search,
    },
    Vc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out_prefix: PathBuf,
        #[command(flatten)]
        search: Search,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Resample until the graph is connected
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    #[command(name = "3dm")]
    ThreeDm {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        extra: usize,
        /// Rejection-sample an instance without a perfect matching
        #[arg(long)]
        unsolvable: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn load_graph(path: &Path) -> Result<starcut::Graph> {
    io::parse_graph(&read(path)?).with_context(|| path.display().to_string())
}

fn load_3dm(path: &Path) -> Result<starcut::ThreeDmInstance> {
    io::parse_3dm(&read(path)?).with_context(|| path.display().to_string())
}

fn write_gadget(prefix: &Path, red: &ReducedInstance) -> Result<()> {
    write(&with_ext(prefix, "graph"), &io::write_graph(&red.graph))?;
    write(&with_ext(prefix, "roles"), &io::write_roles(&red.roles))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn kind(sub: bool) -> CutKind {
    if sub {
        CutKind::Substructure
    } else {
        CutKind::Structure
    }
}

fn decision_code(d: Option<bool>) -> u8 {
    match d {
        Some(true) => YES,
        Some(false) => NO,
        None => INCONCLUSIVE,
    }
}

fn finish_roundtrip(prefix: &Path, red: &ReducedInstance, rep: &Report) -> Result<u8> {
    write_gadget(prefix, red)?;
    let text = rep.to_text();
    write(&with_ext(prefix, "report"), &text)?;
    if let Some(cut) = &rep.gadget.certificate {
        write(&with_ext(prefix, "cut"), &io::write_cut(cut))?;
    }
    print!("{text}");
    Ok(match rep.verdict() {
        Verdict::Pass => YES,
        Verdict::Fail => NO,
        Verdict::Inconclusive => INCONCLUSIVE,
    })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve(a) => {
            let g = load_graph(&a.graph)?;
            let res = solve(&g, kind(a.sub), a.m, a.tmax, &a.search.options()?)?;
            print!("{}", io::write_result(&res));
            if !res.is_complete() {
                eprintln!("search stopped after t = {} of {}", res.bound, res.t_max);
            }
            Ok(decision_code(res.decision()))
        }
        Command::Reduce3dm(a) => {
            let red = reduce_3dm(&load_3dm(&a.input)?, a.m, a.options())?;
            write_gadget(&a.out_prefix, &red)?;
            println!(
                "gadget {} vertices {} edges M = {} q = {}",
                red.graph.vertex_count(),
                red.graph.edge_count(),
                red.m,
                red.parameter
            );
            Ok(YES)
        }
        Command::ReduceVc(a) => {
            let inst = VertexCoverInstance::new(load_graph(&a.graph)?, a.k)?;
            let red = reduce_vertex_cover(&inst, a.m)?;
            write_gadget(&a.out_prefix, &red)?;
            println!(
                "gadget {} vertices {} edges M = {} k = {}",
                red.graph.vertex_count(),
                red.graph.edge_count(),
                red.m,
                red.parameter
            );
            Ok(YES)
        }
        Command::Verify(a) => {
            let g = load_graph(&a.graph)?;
            let text = read(&a.cut)?;
            let cut = io::parse_cut(&text).with_context(|| a.cut.display().to_string())?;
            let triviality = if a.strict_trivial {
                Triviality::ExactlyOne
            } else {
                Triviality::AtMostOne
            };
            match is_kind_cut(&g, cut.stars(), cut.kind(), cut.m(), triviality) {
                Ok(true) => {
                    println!("valid {} cut with {} elements", cut.kind(), cut.len());
                    Ok(YES)
                }
                Ok(false) => {
                    println!("not a cut: the remainder is connected and non-trivial");
                    Ok(NO)
                }
                Err(e) => {
                    println!("not a cut: {e}");
                    Ok(NO)
                }
            }
        }
        Command::Oracle(OracleCommand::ThreeDm { input }) => match solve_3dm(&load_3dm(&input)?) {
            Some(sol) => {
                let ids: Vec<String> = sol.iter().map(|i| (i + 1).to_string()).collect();
                println!("matching {}", ids.join(" "));
                Ok(YES)
            }
            None => {
                println!("matching none");
                Ok(NO)
            }
        },
        Command::Oracle(OracleCommand::Vc { graph, k }) => {
            let inst = VertexCoverInstance::new(load_graph(&graph)?, k)?;
            match solve_vertex_cover(&inst) {
                Some(c) => {
                    let ids: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
                    println!("cover {}", ids.join(" "));
                    Ok(YES)
                }
                None => {
                    println!("cover none");
                    Ok(NO)
                }
            }
        }
        Command::Oracle(OracleCommand::Kappa {
            graph,
            m,
            sub,
            tmax,
            strict_trivial,
        }) => {
            let g = load_graph(&graph)?;
            let oracle = Oracle::with_triviality(if strict_trivial {
                Triviality::ExactlyOne
            } else {
                Triviality::AtMostOne
            });
            let res = oracle.connectivity(&g, m, kind(sub), tmax)?;
            print!("{}", io::write_result(&res));
            Ok(decision_code(res.decision()))
        }
        Command::Roundtrip(RoundtripCommand::ThreeDm { reduce, search }) => {
            let inst = load_3dm(&reduce.input)?;
            let (red, rep) = roundtrip_3dm(&inst, reduce.m, reduce.options(), &search.options()?)?;
            finish_roundtrip(&reduce.out_prefix, &red, &rep)
        }
        Command::Roundtrip(RoundtripCommand::Vc {
            graph,
            k,
            out_prefix,
            search,
        }) => {
            let inst = VertexCoverInstance::new(load_graph(&graph)?, k)?;
            let (red, rep) = roundtrip_vc(&inst, &search.options()?)?;
            finish_roundtrip(&out_prefix, &red, &rep)
        }
        Command::Gen(GenCommand::Graph {
            n,
            p,
            seed,
            connected,
            out,
        }) => {
            let g = if connected {
                gen_connected_graph(n, p, seed)?
            } else {
                gen_random_graph(n, p, seed)?
            };
            emit(out.as_deref(), &io::write_graph(&g))?;
            Ok(YES)
        }
        Command::Gen(GenCommand::ThreeDm {
            n,
            extra,
            unsolvable,
            seed,
            out,
        }) => {
            let inst = gen_random_3dm(n, extra, !unsolvable, seed)?;
            emit(out.as_deref(), &io::write_3dm(&inst))?;
            Ok(YES)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

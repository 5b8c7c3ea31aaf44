use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use induced_universal::completion::{complete_search, naive_complete_search};
use induced_universal::enumerate::{all_graphs, all_trees, graphs_from_file, Augment, GraphStream};
use induced_universal::heuristic::{hill_climb, make_seed_template, ClimbConfig, TemplateKind};
use induced_universal::record::RunRecord;
use induced_universal::search::{
    all_induced_universal_graphs, order_family, ordering_experiment, GraphFamily, OrderingStrategy,
    StrategyKind,
};
use induced_universal::verify::{parse_matrix_text, verify_universal};
use induced_universal::{Error, Graph};

/// Default directory for result files when `--out` is not given.
const OUT_DIR_VAR: &str = "IUG_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "iug",
    version,
    about = "Search for small induced universal graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List one graph per isomorphism class, graph6, one per line.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Free trees instead of all graphs.
        #[arg(long)]
        trees: bool,
        /// Grow from a graph6 file of order-(N-1) graphs instead of
        /// generating in memory.
        #[arg(long, value_name = "FILE")]
        extend: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Every order-N candidate containing the whole family.
    SearchExact {
        #[arg(long)]
        family: String,
        #[arg(long)]
        order: usize,
        /// graph6 file of order-N candidates (required above order 8).
        #[arg(long, value_name = "FILE")]
        candidates: Option<PathBuf>,
        #[arg(long, default_value = "automorphisms")]
        strategy: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hill climbing from a seed template.
    SearchHeuristic {
        #[arg(long)]
        family: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        template: Template,
        /// Size of the seeded clique or star (default: the family order).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_iter: Option<u64>,
        /// Seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long)]
        max_restarts: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Completion search for universal graphs of the order-K trees.
    TreesComplete {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        k: usize,
        /// Enumerate every completion without symmetry breaking.
        #[arg(long)]
        naive: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solver calls per ordering strategy over repeated seeded trials, CSV.
    ExperimentOrdering {
        #[arg(long)]
        family: String,
        #[arg(long)]
        order: usize,
        #[arg(long, value_name = "FILE")]
        candidates: Option<PathBuf>,
        /// Comma-separated strategy names.
        #[arg(long, default_value = "automorphisms,edges,almost-random,random")]
        strategies: String,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Break sort ties by graph6 string instead of at random.
        #[arg(long)]
        fixed_ties: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a graph with an independent checker; exit 1 if it is not
    /// universal.
    Verify {
        #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
        graph: Option<String>,
        #[arg(long, value_name = "FILE")]
        matrix: Option<PathBuf>,
        #[arg(long)]
        family: String,
        /// Write the report here (JSON when the name ends in .json).
        #[arg(long, value_name = "FILE")]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Template {
    CliqueIndep,
    Star,
}

/// Usage problems exit 2, domain failures exit 1.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        // library errors are all about bad input
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let flags: Vec<String> = std::env::args().skip(2).collect();
    match run(cli.command, flags) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

/// `--out`, else `$IUG_OUT_DIR/<default_name>`, else standard output.
fn resolve_out(out: Option<PathBuf>, default_name: &str) -> Option<PathBuf> {
    out.or_else(|| std::env::var_os(OUT_DIR_VAR).map(|dir| Path::new(&dir).join(default_name)))
}

fn sibling(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

fn write_text(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::io(p, e).into()),
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes())
                .map_err(|e| Failure::Usage(format!("stdout: {e}")))
        }
    }
}

fn graph6_lines<'a>(gs: impl IntoIterator<Item = &'a Graph>) -> String {
    gs.into_iter().map(|g| g.to_graph6() + "\n").collect()
}

/// Writes the record next to the result file; without a file, a one-line
/// summary goes to standard error.
fn finish_record(out: Option<&Path>, record: &RunRecord) -> Outcome {
    match out {
        Some(p) => Ok(record.write(sibling(p, ".json"))?),
        None => {
            let extra: String = record
                .extra
                .iter()
                .map(|(k, v)| format!(", {k} {v}"))
                .collect();
            eprintln!(
                "{}: {} results, {} solver calls{extra}, {:.2}s",
                record.command,
                record.results.len(),
                record.stats.subiso_calls,
                record.wall_seconds
            );
            Ok(())
        }
    }
}

fn candidate_stream(order: usize, file: Option<&Path>) -> Result<GraphStream, Error> {
    match file {
        Some(f) => graphs_from_file(f, order),
        None => all_graphs(order),
    }
}

fn run(command: Command, flags: Vec<String>) -> Outcome {
    let start = Instant::now();
    match command {
        Command::Enumerate {
            order,
            trees,
            extend,
            out,
        } => {
            let out = resolve_out(out, &format!("order{order}.g6"));
            let mut record = RunRecord::new(
                "enumerate",
                flags,
                if trees {
                    format!("trees:{order}")
                } else {
                    format!("all:{order}")
                },
            );
            let count = if trees {
                let ts = all_trees(order)?;
                write_text(out.as_deref(), &graph6_lines(&ts))?;
                ts.len()
            } else if let Some(parents) = extend {
                if order == 0 {
                    return Err(Failure::Usage("--extend needs --order at least 1".into()));
                }
                let mut parent_err = None;
                let stream = graphs_from_file(&parents, order - 1)?.map_while(|r| match r {
                    Ok(g) => Some(g),
                    Err(e) => {
                        parent_err = Some(e);
                        None
                    }
                });
                let count = write_stream(out.as_deref(), Augment::new(stream))?;
                if let Some(e) = parent_err {
                    return Err(e.into());
                }
                count
            } else {
                let gs = all_graphs(order)?.into_vec()?;
                write_text(out.as_deref(), &graph6_lines(&gs))?;
                gs.len()
            };
            record.extra.insert("count".into(), count.into());
            record.wall_seconds = start.elapsed().as_secs_f64();
            finish_record(out.as_deref(), &record)
        }
        Command::SearchExact {
            family,
            order,
            candidates,
            strategy,
            seed,
            jobs,
            out,
        } => {
            let fam = GraphFamily::from_descriptor(&family)?;
            let kind: StrategyKind = strategy.parse()?;
            let fam = order_family(&fam, &OrderingStrategy::new(kind, seed))?;
            let stream = candidate_stream(order, candidates.as_deref())?;
            let (found, stats) = all_induced_universal_graphs(&fam, stream, jobs)?;
            let out = resolve_out(out, "search-exact.g6");
            write_text(out.as_deref(), &graph6_lines(&found))?;
            let mut record = RunRecord::new("search-exact", flags, family);
            record.seeds = vec![seed];
            record.stats = stats;
            record.results = found.iter().map(Graph::to_graph6).collect();
            record.wall_seconds = start.elapsed().as_secs_f64();
            finish_record(out.as_deref(), &record)
        }
        Command::SearchHeuristic {
            family,
            order,
            template,
            k,
            max_iter,
            time_limit,
            max_restarts,
            seed,
            jobs,
            out,
        } => {
            let fam = GraphFamily::from_descriptor(&family)?;
            let k = k.unwrap_or_else(|| fam.k.unwrap_or_else(|| fam.max_order()));
            let kind = match template {
                Template::CliqueIndep => TemplateKind::CliqueIndep(k),
                Template::Star => TemplateKind::Star(k),
            };
            let mut cfg = ClimbConfig::new(make_seed_template(kind, order)?, fam, seed);
            if let Some(m) = max_iter {
                cfg.max_iter = m.max(1);
            }
            cfg.time_limit = time_limit.map(Duration::from_secs_f64);
            cfg.max_restarts = max_restarts;
            cfg.jobs =
                jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            if cfg.time_limit.is_none() && cfg.max_restarts.is_none() {
                return Err(Failure::Usage(
                    "give --time-limit or --max-restarts so the climb can stop".into(),
                ));
            }
            let outcome = hill_climb(&cfg)?;
            let out = resolve_out(out, "search-heuristic.g6");
            let mut record = RunRecord::new("search-heuristic", flags, family);
            record.seeds = vec![seed];
            record.seeds.extend(outcome.winning_seed);
            record.stats = outcome.stats;
            record
                .extra
                .insert("restarts".into(), outcome.restarts.into());
            record.extra.insert("flips".into(), outcome.flips.into());
            record
                .extra
                .insert("cache_hits".into(), outcome.cache_hits.into());
            record.wall_seconds = start.elapsed().as_secs_f64();
            match outcome.graph {
                Some(g) => {
                    record.results = vec![g.to_graph6()];
                    match out.as_deref() {
                        Some(p) => {
                            write_text(Some(p), &graph6_lines([&g]))?;
                            write_text(Some(&sibling(p, ".matrix")), &g.to_matrix_text())?;
                        }
                        None => write_text(None, &(graph6_lines([&g]) + &g.to_matrix_text()))?,
                    }
                    finish_record(out.as_deref(), &record)
                }
                None => {
                    finish_record(out.as_deref(), &record)?;
                    Err(Failure::Domain(format!(
                        "no universal graph found after {} restarts",
                        outcome.restarts
                    )))
                }
            }
        }
        Command::TreesComplete {
            order,
            k,
            naive,
            jobs,
            out,
        } => {
            let result = if naive {
                naive_complete_search(order, k, jobs)?
            } else {
                complete_search(order, k, jobs)?
            };
            let out = resolve_out(out, "trees-complete.g6");
            write_text(out.as_deref(), &graph6_lines(&result.graphs))?;
            let mut record = RunRecord::new("trees-complete", flags, format!("trees:{k}"));
            record.stats = result.stats;
            record.results = result.graphs.iter().map(Graph::to_graph6).collect();
            record
                .extra
                .insert("matrices_tested".into(), result.matrices_tested.into());
            record.wall_seconds = start.elapsed().as_secs_f64();
            finish_record(out.as_deref(), &record)
        }
        Command::ExperimentOrdering {
            family,
            order,
            candidates,
            strategies,
            trials,
            seed,
            fixed_ties,
            jobs,
            out,
        } => {
            let fam = GraphFamily::from_descriptor(&family)?;
            let kinds = strategies
                .split(',')
                .map(|s| s.trim().parse())
                .collect::<Result<Vec<StrategyKind>, _>>()?;
            let cands = candidate_stream(order, candidates.as_deref())?.into_vec()?;
            let table = ordering_experiment(&fam, &cands, &kinds, trials, seed, !fixed_ties, jobs)?;
            let out = resolve_out(out, "experiment-ordering.csv");
            write_text(out.as_deref(), &table.to_csv())?;
            let mut record = RunRecord::new("experiment-ordering", flags, family);
            record.seeds = table.rows.iter().map(|r| r.seed).collect();
            record.seeds.dedup();
            record.stats.subiso_calls = table.rows.iter().map(|r| r.calls).sum();
            record.wall_seconds = start.elapsed().as_secs_f64();
            finish_record(out.as_deref(), &record)
        }
        Command::Verify {
            graph,
            matrix,
            family,
            report,
        } => {
            let g = match (graph, matrix) {
                (Some(text), _) => Graph::from_graph6(&text)?,
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
                    parse_matrix_text(&text)?
                }
                (None, None) => unreachable!("clap requires one of --graph or --matrix"),
            };
            let fam = GraphFamily::from_descriptor(&family)?;
            let cert = verify_universal(&g, &fam);
            match report {
                Some(p) if p.extension().is_some_and(|e| e == "json") => {
                    write_text(Some(&p), &(cert.to_json() + "\n"))?
                }
                Some(p) => write_text(Some(&p), &cert.to_text())?,
                None => write_text(None, &cert.to_text())?,
            }
            if cert.valid {
                Ok(())
            } else {
                Err(Failure::Domain(format!(
                    "not universal: {} of {} members missing",
                    cert.total - cert.contained,
                    cert.total
                )))
            }
        }
    }
}

fn write_stream(out: Option<&Path>, graphs: impl Iterator<Item = Graph>) -> Result<usize, Failure> {
    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(std::fs::File::create(p).map_err(|e| Error::io(p, e))?),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut w = std::io::BufWriter::new(sink);
    let mut count = 0;
    for g in graphs {
        writeln!(w, "{}", g.to_graph6()).map_err(|e| Failure::Usage(format!("write: {e}")))?;
        count += 1;
    }
    w.flush()
        .map_err(|e| Failure::Usage(format!("write: {e}")))?;
    Ok(count)
}

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};

use rvc_cli::{
    rows_to_csv, run_strategy, ExperimentConfig, ExperimentRow, StrategyChoice, CSV_HEADER,
};
use rvc_core::bounds::{c_delta, lll_margin, split_fringe_palette, theorem_bound};
use rvc_core::colorize::partition_interface;
use rvc_core::dominator::build_strong_dominator;
use rvc_core::generate::{caro_chain, classic, random_min_degree};
use rvc_core::io::{coloring_to_string, edge_list_to_string, parse_coloring, parse_edge_list};
use rvc_core::sparsify::sparsify;
use rvc_core::verify::{is_rvc, structural_verify};
use rvc_core::{Error, Graph};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "rvc",
    version,
    about = "Rainbow vertex-connection toolkit: generators, dominating sets, colorings, verification, experiments"
)]
struct Cli {
    /// Worker threads for experiment sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list.
    Gen {
        /// Family: caro | random | classic.
        #[arg(long)]
        family: String,
        /// Comma-separated parameters: caro: "delta,m"; random: "n,delta";
        /// classic: "name[,k...]" (path|cycle|complete|complete_bipartite|star|petersen).
        #[arg(long)]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Remove removable edges while keeping connectivity and minimum degree.
    Sparsify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build the connected strong 2-step dominating set and report it.
    Dominate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        start: usize,
    },
    /// Evaluate the closed-form bounds for given parameters.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Color a graph and report palette size against the bounds.
    Color {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// auto | high | split | tree | maxdeg.
        #[arg(long, default_value = "auto")]
        strategy: String,
        #[arg(long)]
        out_coloring: Option<PathBuf>,
    },
    /// Verify a coloring file against a graph.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        /// exact | structural.
        #[arg(long, default_value = "exact")]
        mode: String,
        /// Minimum degree parameter; required in structural mode.
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, default_value_t = 0)]
        start: usize,
    },
    /// Exact optimum by enumeration (n <= 8).
    Exact {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Batch sweep from a key=value config file, CSV out.
    Experiment {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Override or add a config entry, e.g. --set trials=5.
        #[arg(long = "set")]
        set: Vec<String>,
        /// Shortcut override for base_seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit rows whose coloring failed verification instead of dropping them.
        #[arg(long, default_value_t = false)]
        allow_unverified: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(err) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(classify_error(&err))
        }
    }
}

/// Usage-style failures (bad arguments, unreadable inputs) exit 64;
/// inconclusive verification exits 2; everything else exits 1.
fn classify_error(err: &anyhow::Error) -> u8 {
    if let Some(core) = err.downcast_ref::<Error>() {
        return match core {
            Error::InvalidArgument(_) | Error::Parse { .. } | Error::Disconnected => EXIT_USAGE,
            Error::Inconclusive { .. } => EXIT_INCONCLUSIVE,
            _ => EXIT_VERIFY_FAILED,
        };
    }
    if err.downcast_ref::<std::io::Error>().is_some() {
        return EXIT_USAGE;
    }
    EXIT_USAGE
}

fn read_graph(path: &PathBuf) -> anyhow::Result<Graph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_edge_list(&text)?)
}

fn run(command: Command) -> anyhow::Result<u8> {
    match command {
        Command::Gen {
            family,
            params,
            seed,
            out,
        } => {
            let g = generate(&family, &params, seed)?;
            std::fs::write(&out, edge_list_to_string(&g))
                .with_context(|| format!("writing {}", out.display()))?;
            println!("family,n,m,min_degree,max_degree");
            println!(
                "{family},{},{},{},{}",
                g.n(),
                g.m(),
                g.min_degree(),
                g.max_degree()
            );
            Ok(0)
        }
        Command::Sparsify { input, delta, out } => {
            let g = read_graph(&input)?;
            let report = sparsify(&g, delta)?;
            std::fs::write(&out, edge_list_to_string(&report.result))
                .with_context(|| format!("writing {}", out.display()))?;
            if !report.within_budget {
                eprintln!(
                    "warning: {} edges exceed the budget {:.4}",
                    report.edges_after, report.edge_budget
                );
            }
            println!("n,delta,edges_before,edges_after,edge_budget,within_budget");
            println!(
                "{},{delta},{},{},{:.4},{}",
                report.result.n(),
                report.edges_before,
                report.edges_after,
                report.edge_budget,
                report.within_budget
            );
            Ok(0)
        }
        Command::Dominate {
            input,
            delta,
            start,
        } => {
            let g = read_graph(&input)?;
            let report = build_strong_dominator(&g, delta, start)?;
            println!("n,delta,start,s_size,k1,k2,size_bound,within_bound,strongness,layer_depth");
            println!(
                "{},{delta},{start},{},{},{},{:.4},{},{},{}",
                g.n(),
                report.s.len(),
                report.k1,
                report.k2,
                report.size_bound,
                report.within_size_bound,
                report.strongness,
                report.layers.depth()
            );
            Ok(0)
        }
        Command::Bounds { n, delta } => {
            if n < 2 || delta < 1 || delta >= n {
                bail!(Error::invalid(format!(
                    "bounds need n >= 2 and 1 <= delta < n, got n = {n}, delta = {delta}"
                )));
            }
            let regime = theorem_bound(n, delta);
            let c = c_delta(delta).ok();
            let palette = split_fringe_palette(delta).ok();
            println!(
                "n,delta,regime,theorem_applies,bound_value,c_delta,split_palette,margin_palette7,margin_split"
            );
            println!(
                "{n},{delta},{},{},{:.4},{},{},{:.4},{}",
                regime.tag,
                regime.theorem_applies,
                regime.bound_value,
                c.map(|v| format!("{v:.4}")).unwrap_or_default(),
                palette.map(|p| p.to_string()).unwrap_or_default(),
                lll_margin(delta, 7),
                palette
                    .map(|p| format!("{:.4}", lll_margin(delta, p)))
                    .unwrap_or_default()
            );
            Ok(0)
        }
        Command::Color {
            input,
            delta,
            seed,
            strategy,
            out_coloring,
        } => {
            let g = read_graph(&input)?;
            let choice = StrategyChoice::parse(&strategy)?;
            let report = run_strategy(&g, delta, seed, choice)?;
            if let Some(path) = out_coloring {
                std::fs::write(&path, coloring_to_string(&report.coloring))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            let row = ExperimentRow::from_report("input", g.n(), delta, seed, &report, None, 0);
            println!("{CSV_HEADER}");
            println!("{}", row.to_csv());
            Ok(if report.verified { 0 } else { EXIT_VERIFY_FAILED })
        }
        Command::Verify {
            input,
            coloring,
            mode,
            delta,
            start,
        } => {
            let g = read_graph(&input)?;
            let text = std::fs::read_to_string(&coloring)
                .with_context(|| format!("reading {}", coloring.display()))?;
            let coloring = parse_coloring(&text, g.n())?;
            match mode.as_str() {
                "exact" => {
                    let result = is_rvc(&g, &coloring)?;
                    if result.ok {
                        println!("ok");
                        Ok(0)
                    } else {
                        let (u, v) = result.failing_pair.expect("failing pair on exact failure");
                        println!("not rainbow vertex-connected: pair ({u}, {v})");
                        Ok(EXIT_VERIFY_FAILED)
                    }
                }
                "structural" => {
                    let delta = delta
                        .ok_or_else(|| anyhow!("structural mode requires --delta"))?;
                    let (graph, dominator) =
                        if (delta + 1) * (delta + 1) >= g.n().saturating_sub(1) {
                            let d = build_strong_dominator(&g, delta, start)?;
                            (g, d)
                        } else {
                            let sparse = sparsify(&g, delta)?;
                            let d = build_strong_dominator(&sparse.result, delta, start)?;
                            (sparse.result, d)
                        };
                    let partition = partition_interface(&graph, &dominator.s, delta)?;
                    let result = structural_verify(&graph, &dominator.s, &partition, &coloring);
                    if result.ok {
                        println!("ok");
                        Ok(0)
                    } else {
                        println!(
                            "structural verification failed: {}{}",
                            result.failed_clause.as_deref().unwrap_or("unknown clause"),
                            result
                                .failing_pair
                                .map(|(u, v)| format!(" at pair ({u}, {v})"))
                                .unwrap_or_default()
                        );
                        Ok(EXIT_VERIFY_FAILED)
                    }
                }
                other => bail!(Error::invalid(format!(
                    "unknown verify mode '{other}' (exact|structural)"
                ))),
            }
        }
        Command::Exact { input } => {
            let g = read_graph(&input)?;
            let optimum = rvc_core::verify::exact_rvc(&g)?;
            println!("{optimum}");
            Ok(0)
        }
        Command::Experiment {
            config,
            set,
            seed,
            out,
            allow_unverified,
        } => {
            let mut pairs: Vec<(String, String)> = Vec::new();
            if let Some(path) = &config {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                for (lineno, raw) in text.lines().enumerate() {
                    let line = raw.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let (k, v) = line.split_once('=').ok_or_else(|| {
                        anyhow!("{}:{}: expected 'key = value'", path.display(), lineno + 1)
                    })?;
                    pairs.push((k.trim().to_string(), v.trim().to_string()));
                }
            }
            for entry in &set {
                let (k, v) = entry
                    .split_once('=')
                    .ok_or_else(|| anyhow!("--set expects key=value, got '{entry}'"))?;
                pairs.push((k.trim().to_string(), v.trim().to_string()));
            }
            if let Some(seed) = seed {
                pairs.push(("base_seed".to_string(), seed.to_string()));
            }
            let mut experiment = ExperimentConfig::from_pairs(&pairs)?;
            experiment.allow_unverified |= allow_unverified;
            let rows = rvc_cli::run_experiment(&experiment)?;
            let csv = rows_to_csv(&rows);
            match out {
                Some(path) => std::fs::write(&path, csv)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => print!("{csv}"),
            }
            Ok(0)
        }
    }
}

fn generate(family: &str, params: &str, seed: u64) -> anyhow::Result<Graph> {
    let fields: Vec<&str> = params
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    let ints = |fields: &[&str]| -> anyhow::Result<Vec<usize>> {
        fields
            .iter()
            .map(|f| f.parse::<usize>().with_context(|| format!("bad parameter '{f}'")))
            .collect()
    };
    match family {
        "caro" => {
            let values = ints(&fields)?;
            if values.len() != 2 {
                bail!(Error::invalid("caro expects --params delta,m"));
            }
            Ok(caro_chain(values[0], values[1])?)
        }
        "random" => {
            let values = ints(&fields)?;
            if values.len() != 2 {
                bail!(Error::invalid("random expects --params n,delta"));
            }
            Ok(random_min_degree(values[0], values[1], seed)?)
        }
        "classic" => {
            if fields.is_empty() {
                bail!(Error::invalid("classic expects --params name[,k...]"));
            }
            let values = ints(&fields[1..])?;
            Ok(classic(fields[0], &values)?)
        }
        other => bail!(Error::invalid(format!(
            "unknown family '{other}' (caro|random|classic)"
        ))),
    }
}

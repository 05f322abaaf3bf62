//! Experiment harness: batch sweeps over graph families producing one CSV
//! row per (instance, strategy), comparing achieved palette sizes against
//! the closed-form bounds.

use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use rayon::prelude::*;

use rvc_core::bounds::h_family_lower_bound;
use rvc_core::colorize::{
    auto_color, color_maxdeg_strategy, color_structural_pipeline, color_tree_strategy,
    ColoringReport,
};
use rvc_core::generate::{caro_chain, random_min_degree};
use rvc_core::Graph;

/// Strategy selector as written in configs and on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyChoice {
    Auto,
    High,
    Split,
    Tree,
    MaxDeg,
}

impl StrategyChoice {
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        Ok(match text {
            "auto" => StrategyChoice::Auto,
            "high" => StrategyChoice::High,
            "split" => StrategyChoice::Split,
            "tree" => StrategyChoice::Tree,
            "maxdeg" => StrategyChoice::MaxDeg,
            other => bail!("unknown strategy '{other}' (auto|high|split|tree|maxdeg)"),
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            StrategyChoice::Auto => "auto",
            StrategyChoice::High => "high",
            StrategyChoice::Split => "split",
            StrategyChoice::Tree => "tree",
            StrategyChoice::MaxDeg => "maxdeg",
        }
    }
}

#[derive(Debug, Clone)]
pub enum FamilyGrid {
    Caro { deltas: Vec<usize>, ms: Vec<usize> },
    Random { ns: Vec<usize>, deltas: Vec<usize> },
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub families: Vec<FamilyGrid>,
    pub trials: usize,
    pub base_seed: u64,
    pub strategies: Vec<StrategyChoice>,
    pub allow_unverified: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            families: Vec::new(),
            trials: 1,
            base_seed: 1,
            strategies: vec![StrategyChoice::Auto],
            allow_unverified: false,
        }
    }
}

/// Parses comma-separated integers, each item either a value or an
/// inclusive range `a..b`.
fn parse_int_list(value: &str) -> anyhow::Result<Vec<usize>> {
    let mut out = Vec::new();
    for item in value.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((a, b)) = item.split_once("..") {
            let a: usize = a.trim().parse().context("range start")?;
            let b: usize = b.trim().parse().context("range end")?;
            if b < a {
                bail!("empty range {item}");
            }
            out.extend(a..=b);
        } else {
            out.push(item.parse().with_context(|| format!("bad integer '{item}'"))?);
        }
    }
    Ok(out)
}

impl ExperimentConfig {
    /// Flat `key = value` text. Keys: `families`, `caro.delta`, `caro.m`,
    /// `random.n`, `random.delta`, `trials`, `base_seed`, `strategies`,
    /// `allow_unverified`. Lists are comma separated; integer lists also
    /// accept `a..b` ranges.
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        let mut pairs: Vec<(String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| anyhow!("line {}: expected 'key = value'", lineno + 1))?;
            pairs.push((key.trim().to_string(), value.trim().to_string()));
        }
        Self::from_pairs(&pairs)
    }

    pub fn from_pairs(pairs: &[(String, String)]) -> anyhow::Result<Self> {
        let mut families_seen: Vec<String> = Vec::new();
        let mut caro_deltas = Vec::new();
        let mut caro_ms = Vec::new();
        let mut random_ns = Vec::new();
        let mut random_deltas = Vec::new();
        let mut config = ExperimentConfig::default();

        for (key, value) in pairs {
            match key.as_str() {
                "families" => {
                    families_seen = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(str::to_string)
                        .collect();
                }
                "caro.delta" => caro_deltas = parse_int_list(value)?,
                "caro.m" => caro_ms = parse_int_list(value)?,
                "random.n" => random_ns = parse_int_list(value)?,
                "random.delta" => random_deltas = parse_int_list(value)?,
                "trials" => config.trials = value.parse().context("trials")?,
                "base_seed" => config.base_seed = value.parse().context("base_seed")?,
                "strategies" => {
                    config.strategies = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(StrategyChoice::parse)
                        .collect::<anyhow::Result<_>>()?;
                }
                "allow_unverified" => {
                    config.allow_unverified = value.parse().context("allow_unverified")?
                }
                other => bail!("unknown config key '{other}'"),
            }
        }
        for family in &families_seen {
            match family.as_str() {
                "caro" => {
                    if caro_deltas.is_empty() || caro_ms.is_empty() {
                        bail!("family 'caro' needs caro.delta and caro.m");
                    }
                    config.families.push(FamilyGrid::Caro {
                        deltas: caro_deltas.clone(),
                        ms: caro_ms.clone(),
                    });
                }
                "random" => {
                    if random_ns.is_empty() || random_deltas.is_empty() {
                        bail!("family 'random' needs random.n and random.delta");
                    }
                    config.families.push(FamilyGrid::Random {
                        ns: random_ns.clone(),
                        deltas: random_deltas.clone(),
                    });
                }
                other => bail!("unknown family '{other}' (caro|random)"),
            }
        }
        if config.trials == 0 {
            bail!("trials must be at least 1");
        }
        if config.strategies.is_empty() {
            bail!("strategies must not be empty");
        }
        Ok(config)
    }
}

/// One CSV row. `wall_millis` is the only column excluded from
/// reproducibility comparisons.
#[derive(Debug, Clone)]
pub struct ExperimentRow {
    pub family: String,
    pub n: usize,
    pub delta: usize,
    pub seed: u64,
    pub strategy: String,
    pub regime: String,
    pub s_size: usize,
    pub d1_size: usize,
    pub fringe_palette: usize,
    pub resamples: usize,
    pub escalations: usize,
    pub colors_used: usize,
    pub theorem_bound: f64,
    pub lower_bound: Option<f64>,
    pub bound_met: bool,
    pub verified: bool,
    pub wall_millis: u128,
}

pub const CSV_HEADER: &str = "family,n,delta,seed,strategy,regime,s_size,d1_size,fringe_palette,\
resamples,escalations,colors_used,theorem_bound,lower_bound,bound_met,verified,wall_millis";

impl ExperimentRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{:.4},{},{},{},{}",
            self.family,
            self.n,
            self.delta,
            self.seed,
            self.strategy,
            self.regime,
            self.s_size,
            self.d1_size,
            self.fringe_palette,
            self.resamples,
            self.escalations,
            self.colors_used,
            self.theorem_bound,
            self.lower_bound
                .map(|v| format!("{v:.4}"))
                .unwrap_or_default(),
            self.bound_met,
            self.verified,
            self.wall_millis
        )
    }

    pub fn from_report(
        family: &str,
        n: usize,
        delta: usize,
        seed: u64,
        report: &ColoringReport,
        lower_bound: Option<f64>,
        wall_millis: u128,
    ) -> Self {
        ExperimentRow {
            family: family.to_string(),
            n,
            delta,
            seed,
            strategy: report.strategy.as_str().to_string(),
            regime: report.regime.tag.as_str().to_string(),
            s_size: report.s_size,
            d1_size: report.d1_size,
            fringe_palette: report.fringe_palette,
            resamples: report.resample_count,
            escalations: report.escalations,
            colors_used: report.colors_used,
            theorem_bound: report.bound_value,
            lower_bound,
            bound_met: report.bound_met,
            verified: report.verified,
            wall_millis,
        }
    }
}

pub fn rows_to_csv(rows: &[ExperimentRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    out
}

/// Runs one strategy on one graph, timing it. Returns the coloring report.
pub fn run_strategy(
    g: &Graph,
    delta: usize,
    seed: u64,
    strategy: StrategyChoice,
) -> anyhow::Result<ColoringReport> {
    let report = match strategy {
        StrategyChoice::Auto => auto_color(g, delta, seed)?.best,
        StrategyChoice::High | StrategyChoice::Split => {
            color_structural_pipeline(g, delta, seed, 0)?
        }
        StrategyChoice::Tree => color_tree_strategy(g, delta)?,
        StrategyChoice::MaxDeg => color_maxdeg_strategy(g, delta)?,
    };
    Ok(report)
}

#[derive(Debug, Clone)]
struct Trial {
    family: &'static str,
    n: usize,
    delta: usize,
    m: Option<usize>,
    seed: u64,
    strategy: StrategyChoice,
}

fn expand_trials(config: &ExperimentConfig) -> Vec<Trial> {
    let mut trials = Vec::new();
    for family in &config.families {
        match family {
            FamilyGrid::Caro { deltas, ms } => {
                for &delta in deltas {
                    for &m in ms {
                        for t in 0..config.trials {
                            for &strategy in &config.strategies {
                                trials.push(Trial {
                                    family: "caro",
                                    n: (m + 2) * (delta + 1) + 2,
                                    delta,
                                    m: Some(m),
                                    seed: config.base_seed + t as u64,
                                    strategy,
                                });
                            }
                        }
                    }
                }
            }
            FamilyGrid::Random { ns, deltas } => {
                for &n in ns {
                    for &delta in deltas {
                        for t in 0..config.trials {
                            for &strategy in &config.strategies {
                                trials.push(Trial {
                                    family: "random",
                                    n,
                                    delta,
                                    m: None,
                                    seed: config.base_seed + t as u64,
                                    strategy,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    trials
}

fn run_trial(trial: &Trial, allow_unverified: bool) -> anyhow::Result<Option<ExperimentRow>> {
    let start = Instant::now();
    let (g, lower_bound) = match trial.family {
        "caro" => {
            let g = caro_chain(trial.delta, trial.m.expect("caro trial has m"))?;
            let lb = h_family_lower_bound(g.n(), trial.delta)?;
            (g, Some(lb))
        }
        _ => (random_min_degree(trial.n, trial.delta, trial.seed)?, None),
    };
    let report = run_strategy(&g, trial.delta, trial.seed, trial.strategy)?;
    if !report.verified && !allow_unverified {
        eprintln!(
            "warning: dropping unverified row for {} n={} delta={} seed={} strategy={}",
            trial.family, trial.n, trial.delta, trial.seed, trial.strategy.as_str()
        );
        return Ok(None);
    }
    Ok(Some(ExperimentRow::from_report(
        trial.family,
        g.n(),
        trial.delta,
        trial.seed,
        &report,
        lower_bound,
        start.elapsed().as_millis(),
    )))
}

/// Runs all configured trials. Trials execute in parallel; rows come back in
/// deterministic trial order, so two runs of the same config produce
/// identical CSV output apart from `wall_millis`.
pub fn run_experiment(config: &ExperimentConfig) -> anyhow::Result<Vec<ExperimentRow>> {
    let trials = expand_trials(config);
    let results: Vec<anyhow::Result<Option<ExperimentRow>>> = trials
        .par_iter()
        .map(|trial| {
            run_trial(trial, config.allow_unverified).with_context(|| {
                format!(
                    "trial {} n={} delta={} seed={} strategy={}",
                    trial.family, trial.n, trial.delta, trial.seed, trial.strategy.as_str()
                )
            })
        })
        .collect();
    let mut rows = Vec::with_capacity(results.len());
    for result in results {
        if let Some(row) = result? {
            rows.push(row);
        }
    }
    Ok(rows)
}

/// Drops the trailing `wall_millis` field of every CSV line, for
/// reproducibility comparisons.
pub fn strip_timing(csv: &str) -> String {
    csv.lines()
        .map(|line| match line.rsplit_once(',') {
            Some((rest, _)) => rest.to_string(),
            None => line.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

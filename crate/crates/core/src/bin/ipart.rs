use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use intersecting_partitions::harness::{
    self, render_report, write_output, Cache, Format, RunConfig, Span, SweepKind,
};
use intersecting_partitions::partition::{count_all, count_partitions, enumerate_all, enumerate_partitions};
use intersecting_partitions::search::{build_graph, solve};
use intersecting_partitions::{Limits, Relation, Result};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ipart", version, about = "Exact search for intersecting families of integer partitions")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    #[arg(long, global = true, default_value_t = intersecting_partitions::config::DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    #[arg(long, global = true, default_value_t = intersecting_partitions::config::DEFAULT_NODE_BUDGET)]
    node_budget: u64,
    #[arg(long, global = true, default_value_t = intersecting_partitions::config::DEFAULT_TIME_BUDGET_SECS)]
    time_budget_secs: u64,
    /// Canonical witnesses and no timings in reports.
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set,
          num_args = 0..=1, default_missing_value = "true")]
    deterministic: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value = "json")]
    format: Format,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[arg(long, global = true)]
    fail_fast: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List P(n,k) in canonical order.
    Enumerate { n: usize, k: usize },
    /// p(n,k), or p(n) without k.
    Count { n: usize, k: Option<usize> },
    /// Maximum family for one instance; all lengths when --k is omitted.
    MaxFamily {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, default_value = "multiset")]
        relation: Relation,
        #[arg(long)]
        no_uniqueness: bool,
    },
    /// Sweep a conjecture over a grid.
    Verify {
        which: Which,
        #[command(flatten)]
        grid: Grid,
    },
    /// Run the construction property suites.
    Lemmas {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Cross-check the engine against set-system thresholds.
    EkrCheck {
        #[command(flatten)]
        grid: Grid,
    },
    Cache {
        action: CacheAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Strong,
    Weak,
    TMultiset,
    TProper,
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    Clear,
    Stats,
}

#[derive(Args)]
struct Grid {
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    k_min: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
    #[arg(long)]
    t_min: Option<usize>,
    #[arg(long)]
    t_max: Option<usize>,
    #[arg(long)]
    no_uniqueness: bool,
}

impl Global {
    fn limits(&self) -> Limits {
        Limits {
            max_vertices: self.max_vertices,
            node_budget: self.node_budget,
            time_budget_secs: self.time_budget_secs,
            deterministic: self.deterministic,
        }
    }

    fn config(&self, sweep: SweepKind, grid: Option<&Grid>) -> Result<RunConfig> {
        let mut cfg = RunConfig::default_for(sweep);
        if let Some(g) = grid {
            cfg.n = Span::new(g.n_min.unwrap_or(cfg.n.min), g.n_max.unwrap_or(cfg.n.max))?;
            cfg.k = Span::new(g.k_min.unwrap_or(cfg.k.min), g.k_max.unwrap_or(cfg.k.max))?;
            cfg.t = Span::new(g.t_min.unwrap_or(cfg.t.min), g.t_max.unwrap_or(cfg.t.max))?;
            cfg.uniqueness = !g.no_uniqueness;
        }
        cfg.limits = self.limits();
        cfg.seed = self.seed;
        cfg.fail_fast = self.fail_fast;
        cfg.out = self.out.clone();
        cfg.cache = self.cache.clone();
        Ok(cfg)
    }

    fn emit_json(&self, value: &serde_json::Value) -> Result<()> {
        write_output(&(serde_json::to_string_pretty(value)? + "\n"), self.out.as_deref())
    }
}

fn run(cli: Cli) -> Result<bool> {
    let g = &cli.global;
    let limits = g.limits();
    match cli.command {
        Command::Enumerate { n, k } => {
            let parts = enumerate_partitions(n, k, &limits)?;
            match g.format {
                Format::Json => g.emit_json(&json!(parts))?,
                Format::Csv | Format::Table => {
                    let text: String = parts.iter().map(|p| format!("{p}\n")).collect();
                    write_output(&text, g.out.as_deref())?;
                }
            }
        }
        Command::Count { n, k } => {
            let value = match k {
                Some(k) => count_partitions(n, k)?,
                None => count_all(n)?,
            };
            match g.format {
                Format::Json => g.emit_json(&json!({ "n": n, "k": k, "count": value.to_string() }))?,
                _ => write_output(&format!("{value}\n"), g.out.as_deref())?,
            }
        }
        Command::MaxFamily { n, k, t, relation, no_uniqueness } => {
            let vertices = match k {
                Some(k) => enumerate_partitions(n, k, &limits)?,
                None => enumerate_all(n, &limits)?,
            };
            let graph = build_graph(vertices, relation, t, &limits)?;
            let out = solve(&graph, &limits, !no_uniqueness)?;
            let family: Vec<String> = graph.partitions_of(&out.witness).iter().map(|p| p.to_string()).collect();
            let value = json!({
                "n": n, "k": k, "t": t, "relation": relation,
                "vertices": graph.len(),
                "star_size": out.star_size,
                "max_size": out.max_size,
                "star_is_maximum": out.star_is_maximum,
                "unique": out.unique_maximum,
                "degenerate": out.degenerate,
                "witness": family,
                "nodes_explored": out.nodes_explored,
            });
            match g.format {
                Format::Json => g.emit_json(&value)?,
                _ => {
                    let mut text = format!(
                        "max {} (star {}), unique {:?}\n",
                        out.max_size, out.star_size, out.unique_maximum
                    );
                    for p in &family {
                        text.push_str(p);
                        text.push('\n');
                    }
                    write_output(&text, g.out.as_deref())?;
                }
            }
            return Ok(out.max_size <= out.star_size);
        }
        Command::Verify { which, grid } => {
            let sweep = match which {
                Which::Strong => SweepKind::Strong,
                Which::Weak => SweepKind::Weak,
                Which::TMultiset => SweepKind::TMultiset,
                Which::TProper => SweepKind::TProper,
            };
            let report = harness::run_sweep(&g.config(sweep, Some(&grid))?)?;
            write_output(&render_report(&report, g.format)?, g.out.as_deref())?;
            return Ok(report.summary.refuted == 0 && report.summary.inconclusive == 0);
        }
        Command::Lemmas { trials } => {
            let mut cfg = g.config(SweepKind::Strong, None)?;
            cfg.lemma3_trials = trials;
            let report = harness::run_lemma_suites(&cfg);
            match g.format {
                Format::Json => g.emit_json(&serde_json::to_value(&report)?)?,
                _ => {
                    let mut text = String::new();
                    for c in &report.checks {
                        let mark = if c.ok() { "PASS" } else { "FAIL" };
                        text.push_str(&format!("{mark} {}/{} {}/{}\n", c.suite, c.name, c.passed, c.total));
                    }
                    write_output(&text, g.out.as_deref())?;
                }
            }
            return Ok(report.all_passed());
        }
        Command::EkrCheck { grid } => {
            let report = harness::cross_validate_ekr(&g.config(SweepKind::Ekr, Some(&grid))?)?;
            write_output(&render_report(&report, g.format)?, g.out.as_deref())?;
            return Ok(report.summary.refuted == 0 && report.summary.inconclusive == 0);
        }
        Command::Cache { action } => {
            let path = g.cache.clone().unwrap_or_else(|| PathBuf::from("ipart-cache.jsonl"));
            match action {
                CacheAction::Clear => Cache::clear(&path)?,
                CacheAction::Stats => g.emit_json(&json!(Cache::open(&path)?.stats()))?,
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! Verification sweeps over parameter grids, lemma suites, reports and the
//! on-disk result cache.

mod cache;
mod lemmas;
mod output;
mod sweeps;

pub use cache::{Cache, CacheKey, CacheStats};
pub use lemmas::{random_cover_instance, run_lemma_suites, LemmaCheck, LemmaReport, RANDOM_FAMILY_DISTRIBUTION};
pub use output::{render_report, write_output, Format};
pub use sweeps::{
    cross_validate_ekr, proposition1_consistency, run_sweep, verify_strong_form, verify_t_conjectures,
    verify_weak_form,
};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::intersection::Relation;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

/// Bumped whenever a change could alter any row; cache entries written by
/// other versions are ignored.
pub const ENGINE_VERSION: &str = "1";

/// Inclusive integer range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub min: usize,
    pub max: usize,
}

impl Span {
    pub fn new(min: usize, max: usize) -> Result<Self> {
        if min > max {
            return Err(Error::Precondition(format!("empty range {min}..={max}")));
        }
        Ok(Span { min, max })
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<usize> {
        self.min..=self.max
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepKind {
    Strong,
    Weak,
    TMultiset,
    TProper,
    Ekr,
}

impl SweepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SweepKind::Strong => "strong",
            SweepKind::Weak => "weak",
            SweepKind::TMultiset => "t-multiset",
            SweepKind::TProper => "t-proper",
            SweepKind::Ekr => "ekr",
        }
    }
}

impl FromStr for SweepKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "strong" => Ok(SweepKind::Strong),
            "weak" => Ok(SweepKind::Weak),
            "t-multiset" => Ok(SweepKind::TMultiset),
            "t-proper" => Ok(SweepKind::TProper),
            "ekr" => Ok(SweepKind::Ekr),
            other => Err(format!("unknown sweep {other:?}")),
        }
    }
}

impl fmt::Display for SweepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Everything that determines a sweep's rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub sweep: SweepKind,
    pub n: Span,
    /// Lengths for partition sweeps, member sizes `r` for the set-system sweep.
    /// Unused by the weak form.
    pub k: Span,
    pub t: Span,
    pub limits: Limits,
    pub uniqueness: bool,
    pub fail_fast: bool,
    pub seed: u64,
    pub lemma3_trials: usize,
    pub out: Option<PathBuf>,
    pub cache: Option<PathBuf>,
}

impl RunConfig {
    /// The default desk-scale grid for `sweep`.
    pub fn default_for(sweep: SweepKind) -> Self {
        let (n, k, t) = match sweep {
            SweepKind::Strong => ((2, 22), (2, 22), (1, 1)),
            SweepKind::Weak => ((1, 14), (1, 1), (1, 1)),
            SweepKind::TMultiset | SweepKind::TProper => ((3, 22), (3, 8), (2, 3)),
            SweepKind::Ekr => ((1, 12), (1, 4), (1, 2)),
        };
        RunConfig {
            sweep,
            n: Span { min: n.0, max: n.1 },
            k: Span { min: k.0, max: k.1 },
            t: Span { min: t.0, max: t.1 },
            limits: Limits::default(),
            uniqueness: true,
            fail_fast: false,
            seed: 0,
            lemma3_trials: 1000,
            out: None,
            cache: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, s) in [("n", self.n), ("k", self.k), ("t", self.t)] {
            if s.min > s.max {
                return Err(Error::Precondition(format!("{name} range {}..={} is empty", s.min, s.max)));
            }
        }
        let l = &self.limits;
        if l.max_vertices == 0 || l.node_budget == 0 || l.time_budget_secs == 0 {
            return Err(Error::Precondition("budgets must be positive".into()));
        }
        Ok(())
    }
}

/// The relation column of a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowRelation {
    Multiset,
    Proper,
    SetSystem,
}

impl From<Relation> for RowRelation {
    fn from(r: Relation) -> Self {
        match r {
            Relation::Multiset => RowRelation::Multiset,
            Relation::Proper => RowRelation::Proper,
        }
    }
}

impl RowRelation {
    pub fn as_str(self) -> &'static str {
        match self {
            RowRelation::Multiset => "multiset",
            RowRelation::Proper => "proper",
            RowRelation::SetSystem => "set-system",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    NotComputed,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    /// Everything checked for the row agrees with the expectation.
    Verified,
    /// A family strictly larger than the star exists.
    Counterexample,
    /// A cross-check against a proven statement failed.
    Discrepancy,
    /// The search hit its budget.
    Inconclusive,
}

/// One grid cell of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    /// `None` for the all-lengths sweep.
    pub k: Option<usize>,
    pub t: usize,
    pub relation: RowRelation,
    pub star_size: usize,
    /// Exact maximum, or the best lower bound for inconclusive rows.
    pub max_size: usize,
    pub star_is_maximum: bool,
    pub unique: Verdict,
    pub witness_digest: String,
    /// Seconds; omitted in deterministic mode.
    pub elapsed: Option<f64>,
    pub status: RowStatus,
}

impl SweepRow {
    pub fn same_result(&self, other: &SweepRow) -> bool {
        SweepRow { elapsed: None, ..self.clone() } == SweepRow { elapsed: None, ..other.clone() }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self.status, RowStatus::Counterexample | RowStatus::Discrepancy)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub verified: usize,
    pub refuted: usize,
    pub inconclusive: usize,
}

impl Summary {
    pub fn of(rows: &[SweepRow]) -> Self {
        let mut s = Summary::default();
        for r in rows {
            match r.status {
                RowStatus::Verified => s.verified += 1,
                RowStatus::Counterexample | RowStatus::Discrepancy => s.refuted += 1,
                RowStatus::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: RunConfig,
    pub rows: Vec<SweepRow>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: RunConfig, rows: Vec<SweepRow>) -> Self {
        let summary = Summary::of(&rows);
        Report { config, rows, summary }
    }
}

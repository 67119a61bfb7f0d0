use super::cache::{Cache, CacheKey};
use super::{Report, RowRelation, RowStatus, RunConfig, SweepKind, SweepRow, Verdict};
use crate::error::{Error, Result};
use crate::intersection::Relation;
use crate::partition::{count_all, count_partitions, enumerate_all, enumerate_partitions, Partition};
use crate::search::{self, build_graph, max_family_set_system, set_system, SearchOutcome, SetFamilyInstance};
use crate::star::{in_star, star_ids};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use std::time::Instant;

/// One grid cell: `k = None` means all lengths; `relation = None` means the
/// set-system instance `(n, k, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Cell {
    n: usize,
    k: Option<usize>,
    t: usize,
    relation: RowRelation,
}

fn cells(cfg: &RunConfig) -> Vec<Cell> {
    let mut out = Vec::new();
    match cfg.sweep {
        SweepKind::Strong => {
            for n in cfg.n.iter() {
                for k in cfg.k.iter().filter(|&k| k >= 1 && k <= n) {
                    out.push(Cell { n, k: Some(k), t: 1, relation: RowRelation::Multiset });
                }
            }
        }
        SweepKind::Weak => {
            for n in cfg.n.iter().filter(|&n| n >= 1) {
                out.push(Cell { n, k: None, t: 1, relation: RowRelation::Multiset });
            }
        }
        SweepKind::TMultiset | SweepKind::TProper => {
            let relation = if cfg.sweep == SweepKind::TMultiset {
                RowRelation::Multiset
            } else {
                RowRelation::Proper
            };
            for n in cfg.n.iter() {
                for k in cfg.k.iter().filter(|&k| k >= 1 && k <= n) {
                    for t in cfg.t.iter().filter(|&t| t >= 1 && t < k) {
                        out.push(Cell { n, k: Some(k), t, relation });
                    }
                }
            }
        }
        SweepKind::Ekr => {
            for n in cfg.n.iter().filter(|&n| n >= 1) {
                for r in cfg.k.iter().filter(|&r| r >= 1 && r <= n) {
                    for t in cfg.t.iter().filter(|&t| t >= 1 && t <= r) {
                        out.push(Cell { n, k: Some(r), t, relation: RowRelation::SetSystem });
                    }
                }
            }
        }
    }
    out
}

fn digest(items: impl IntoIterator<Item = String>) -> String {
    let mut h = Sha256::new();
    for item in items {
        h.update(item.as_bytes());
        h.update(b";");
    }
    hex::encode(&h.finalize()[..8])
}

fn relation_of(r: RowRelation) -> Relation {
    match r {
        RowRelation::Proper => Relation::Proper,
        _ => Relation::Multiset,
    }
}

fn inconclusive(cell: Cell, star_size: usize, lower: usize) -> SweepRow {
    SweepRow {
        n: cell.n,
        k: cell.k,
        t: cell.t,
        relation: cell.relation,
        star_size,
        max_size: lower.max(star_size),
        star_is_maximum: false,
        unique: Verdict::Inconclusive,
        witness_digest: String::new(),
        elapsed: None,
        status: RowStatus::Inconclusive,
    }
}

fn verdict(outcome: &SearchOutcome) -> Verdict {
    match outcome.unique_maximum {
        Some(true) => Verdict::Yes,
        Some(false) => Verdict::No,
        None => Verdict::NotComputed,
    }
}

// The (n) vertex meets nothing else, and the all-ones vertex meets exactly
// the other members of P(n)(1).
fn weak_dichotomy(vertices: &[Partition], graph: &search::Graph) -> bool {
    let n = vertices.first().map_or(0, Partition::n);
    if n < 2 {
        return true;
    }
    let single = 0;
    let ones = vertices.len() - 1;
    let single_isolated = graph.neighbors(single).is_empty();
    let ones_nbrs: Vec<usize> = graph.neighbors(ones).iter().collect();
    let expected: Vec<usize> = (0..vertices.len())
        .filter(|&v| v != ones && vertices[v].contains_part(1))
        .collect();
    single_isolated && ones_nbrs == expected
}

fn partition_row(cell: Cell, cfg: &RunConfig) -> Result<SweepRow> {
    let limits = &cfg.limits;
    let relation = relation_of(cell.relation);
    let vertices = match cell.k {
        Some(k) => enumerate_partitions(cell.n, k, limits)?,
        None => enumerate_all(cell.n, limits)?,
    };
    let graph = build_graph(vertices, relation, cell.t, limits)?;
    let star = star_ids(graph.vertices(), relation, cell.t);
    let started = Instant::now();
    let outcome = match search::solve(&graph, limits, cfg.uniqueness) {
        Ok(o) => o,
        Err(Error::Timeout { lower, .. }) => return Ok(inconclusive(cell, star.len(), lower)),
        Err(e) => return Err(e),
    };
    let elapsed = started.elapsed().as_secs_f64();
    let witness = graph.partitions_of(&outcome.witness);
    let unique = verdict(&outcome);

    let mut status = if outcome.max_size > star.len() {
        RowStatus::Counterexample
    } else {
        RowStatus::Verified
    };
    let (n, t) = (cell.n, cell.t);
    let consistent = match (cfg.sweep, cell.k) {
        // small-n classification: the star is maximum for n <= 2k, uniquely
        // unless k is 2 or 3 and n = 2k
        (SweepKind::Strong, Some(k)) if n <= 2 * k && k >= 2 => {
            let expect_unique = !(n == 2 * k && (k == 2 || k == 3));
            outcome.star_is_maximum && (unique == Verdict::NotComputed || (unique == Verdict::Yes) == expect_unique)
        }
        (SweepKind::Weak, None) => weak_dichotomy(graph.vertices(), graph.graph()),
        (SweepKind::TMultiset, Some(k)) if k == t + 1 => outcome.max_size == 1,
        (SweepKind::TMultiset, Some(k)) if n + t <= 2 * k + 1 => outcome.star_is_maximum,
        (SweepKind::TProper, Some(k)) => {
            let has_eligible = !graph.graph().eligible().is_empty();
            if n < t * (t - 1) / 2 + k {
                outcome.max_size == 0
            } else if k == t + 1 {
                outcome.max_size == usize::from(has_eligible)
            } else {
                true
            }
        }
        _ => true,
    };
    if !consistent && status == RowStatus::Verified {
        status = RowStatus::Discrepancy;
    }
    debug_assert!(star.iter().all(|&v| in_star(&graph.vertices()[v], relation, t)));
    Ok(SweepRow {
        n,
        k: cell.k,
        t,
        relation: cell.relation,
        star_size: star.len(),
        max_size: outcome.max_size,
        star_is_maximum: outcome.star_is_maximum,
        unique,
        witness_digest: digest(witness.iter().map(|p| p.to_string())),
        elapsed: (!limits.deterministic).then_some(elapsed),
        status,
    })
}

fn set_system_row(cell: Cell, cfg: &RunConfig) -> Result<SweepRow> {
    let r = cell.k.expect("set-system cells carry r");
    let instance = SetFamilyInstance::new(cell.n, r, cell.t)?;
    let star_size = set_system::binomial(cell.n - cell.t, r - cell.t) as usize;
    let started = Instant::now();
    let outcome = match max_family_set_system(instance, &cfg.limits) {
        Ok(o) => o,
        Err(Error::Timeout { lower, .. }) => return Ok(inconclusive(cell, star_size, lower)),
        Err(e) => return Err(e),
    };
    let elapsed = started.elapsed().as_secs_f64();
    let sets = set_system::r_subsets(cell.n, r);
    let consistent = if instance.at_or_above_threshold() {
        outcome.max_size == star_size
    } else {
        outcome.max_size > star_size || cell.n == r
    };
    Ok(SweepRow {
        n: cell.n,
        k: Some(r),
        t: cell.t,
        relation: RowRelation::SetSystem,
        star_size,
        max_size: outcome.max_size,
        star_is_maximum: outcome.max_size == star_size,
        unique: Verdict::NotComputed,
        witness_digest: digest(outcome.witness.iter().map(|&i| format!("{:?}", sets[i]))),
        elapsed: (!cfg.limits.deterministic).then_some(elapsed),
        status: if consistent { RowStatus::Verified } else { RowStatus::Discrepancy },
    })
}

fn compute(cell: Cell, cfg: &RunConfig) -> Result<SweepRow> {
    match cell.relation {
        RowRelation::SetSystem => set_system_row(cell, cfg),
        _ => partition_row(cell, cfg),
    }
}

fn key(cell: Cell) -> CacheKey {
    CacheKey::new(cell.n, cell.k, cell.t, cell.relation)
}

// A cached row can stand in for a fresh one if it is at least as informative
// as the current configuration asks for.
fn usable(row: &SweepRow, cfg: &RunConfig) -> bool {
    row.status != RowStatus::Inconclusive
        && (!cfg.uniqueness || row.relation == RowRelation::SetSystem || row.unique != Verdict::NotComputed)
}

/// Runs the sweep described by `cfg`. Rows come back in canonical
/// `(n, k, t)` order whatever order they were computed in.
pub fn run_sweep(cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let grid = cells(cfg);
    let mut cache = match &cfg.cache {
        Some(path) => Some(Cache::open(path)?),
        None => None,
    };
    let mut rows: Vec<Option<SweepRow>> = vec![None; grid.len()];
    let mut from_cache = Vec::new();
    if let Some(cache) = &cache {
        for (i, &cell) in grid.iter().enumerate() {
            if let Some(row) = cache.get(&key(cell)).filter(|r| usable(r, cfg)) {
                rows[i] = Some(row.clone());
                from_cache.push(i);
            }
        }
    }
    let todo: Vec<usize> = (0..grid.len()).filter(|&i| rows[i].is_none()).collect();
    if cfg.fail_fast {
        for i in todo {
            let row = compute(grid[i], cfg)?;
            let stop = row.is_refuted();
            rows[i] = Some(row);
            if stop {
                break;
            }
        }
        // a refuted cached row also stops the sweep at that point
        if let Some(first_bad) = rows.iter().position(|r| r.as_ref().is_some_and(SweepRow::is_refuted)) {
            rows.truncate(first_bad + 1);
        }
    } else {
        let computed: Vec<(usize, Result<SweepRow>)> =
            todo.par_iter().map(|&i| (i, compute(grid[i], cfg))).collect();
        for (i, row) in computed {
            rows[i] = Some(row?);
        }
    }

    if let Some(cache) = cache.as_mut() {
        for (i, row) in rows.iter().enumerate() {
            if let Some(row) = row {
                if !from_cache.contains(&i) && row.status != RowStatus::Inconclusive {
                    cache.insert(key(grid[i]), row.clone())?;
                }
            }
        }
        // spot-check served rows against a recomputation
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let sample: Vec<usize> = from_cache
            .choose_multiple(&mut rng, 20.min(from_cache.len()))
            .copied()
            .filter(|&i| rows.get(i).is_some_and(Option::is_some))
            .collect();
        for i in sample {
            let fresh = compute(grid[i], cfg)?;
            let cached = rows[i].as_ref().expect("sampled rows exist");
            if !cached.same_result(&fresh) {
                return Err(Error::CacheMismatch(format!("{:?}", key(grid[i]))));
            }
        }
    }

    let rows: Vec<SweepRow> = rows.into_iter().flatten().collect();
    Ok(Report::new(cfg.clone(), rows))
}

fn with_sweep(cfg: &RunConfig, sweep: SweepKind) -> RunConfig {
    RunConfig { sweep, ..cfg.clone() }
}

/// Maximum intersecting subsets of `P(n,k)` against the star `P(n,k)(1)`.
pub fn verify_strong_form(cfg: &RunConfig) -> Result<Report> {
    run_sweep(&with_sweep(cfg, SweepKind::Strong))
}

/// Maximum intersecting subsets of `P(n)` against `P(n)(1)`.
pub fn verify_weak_form(cfg: &RunConfig) -> Result<Report> {
    run_sweep(&with_sweep(cfg, SweepKind::Weak))
}

/// Both t-relations over the configured grid; multiset rows first.
pub fn verify_t_conjectures(cfg: &RunConfig) -> Result<Report> {
    let multiset = run_sweep(&with_sweep(cfg, SweepKind::TMultiset))?;
    let proper = run_sweep(&with_sweep(cfg, SweepKind::TProper))?;
    let mut rows = multiset.rows;
    rows.extend(proper.rows);
    Ok(Report::new(with_sweep(cfg, SweepKind::TMultiset), rows))
}

/// The clique engine on `r`-subsets of `[n]`, checked against the exact
/// t-intersecting thresholds for set systems.
pub fn cross_validate_ekr(cfg: &RunConfig) -> Result<Report> {
    run_sweep(&with_sweep(cfg, SweepKind::Ekr))
}

/// For every `n` present in both tables with all lengths `2..=n` covered:
/// whether the all-lengths maximum is at most `max(1, sum of per-length
/// maxima)`, as it must be once the `(n)` vertex is set aside.
pub fn proposition1_consistency(strong: &[SweepRow], weak: &[SweepRow]) -> Vec<(usize, bool)> {
    weak.iter()
        .filter(|w| w.n >= 2 && w.status != RowStatus::Inconclusive)
        .filter_map(|w| {
            let per_length: Vec<&SweepRow> = strong
                .iter()
                .filter(|s| s.n == w.n && s.k.is_some_and(|k| k >= 2) && s.status != RowStatus::Inconclusive)
                .collect();
            if per_length.len() + 1 != w.n.max(1) {
                return None;
            }
            let total: usize = per_length.iter().map(|s| s.max_size).sum();
            let star_total: u128 = (2..=w.n).map(|k| count_partitions(w.n - 1, k - 1).unwrap_or(0)).sum();
            let star_ok = count_all(w.n - 1).is_ok_and(|p| p == star_total);
            Some((w.n, w.max_size <= total.max(1) && star_ok))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::Span;

    fn cfg(sweep: SweepKind, n: (usize, usize), k: (usize, usize), t: (usize, usize)) -> RunConfig {
        RunConfig {
            n: Span { min: n.0, max: n.1 },
            k: Span { min: k.0, max: k.1 },
            t: Span { min: t.0, max: t.1 },
            ..RunConfig::default_for(sweep)
        }
    }

    fn row(rows: &[SweepRow], n: usize, k: usize) -> &SweepRow {
        rows.iter().find(|r| r.n == n && r.k == Some(k)).unwrap()
    }

    #[test]
    fn strong_rows() {
        let rep = verify_strong_form(&cfg(SweepKind::Strong, (6, 10), (3, 4), (1, 1))).unwrap();
        let r = row(&rep.rows, 10, 3);
        assert_eq!((r.star_size, r.max_size, r.unique), (4, 4, Verdict::No));
        let r = row(&rep.rows, 7, 3);
        assert_eq!((r.star_size, r.max_size), (3, 3));
        assert!(r.star_is_maximum);
        assert_eq!(row(&rep.rows, 8, 4).unique, Verdict::Yes);
        // four pairwise-meeting partitions of 8 into 3 parts, only two with a 1
        let r = row(&rep.rows, 8, 3);
        assert_eq!((r.star_size, r.max_size, r.status), (3, 4, RowStatus::Counterexample));
    }

    #[test]
    fn weak_rows() {
        let rep = verify_weak_form(&cfg(SweepKind::Weak, (2, 12), (1, 1), (1, 1))).unwrap();
        let by_n = |n| rep.rows.iter().find(|r| r.n == n).unwrap();
        assert_eq!((by_n(5).star_size, by_n(5).max_size, by_n(5).unique), (5, 5, Verdict::Yes));
        assert_eq!((by_n(2).max_size, by_n(2).unique), (1, Verdict::No));
        assert_eq!((by_n(12).star_size, by_n(12).max_size), (56, 56));
        assert!(rep.rows.iter().all(|r| r.status == RowStatus::Verified));
    }

    #[test]
    fn t_rows() {
        let rep = verify_t_conjectures(&cfg(SweepKind::TMultiset, (3, 12), (3, 5), (2, 3))).unwrap();
        let find = |rel, n, k, t| {
            rep.rows
                .iter()
                .find(|r| r.relation == rel && r.n == n && r.k == Some(k) && r.t == t)
                .unwrap()
        };
        let r = find(RowRelation::Multiset, 9, 5, 2);
        assert_eq!((r.star_size, r.max_size), (4, 4));
        for n in 4..=12 {
            assert_eq!(find(RowRelation::Multiset, n, 4, 3).max_size, 1);
        }
        // 4 parts, 3 distinct needed: minimum sum 1+2+3+1 = 7
        assert_eq!(find(RowRelation::Proper, 6, 4, 3).max_size, 0);
        assert_eq!(find(RowRelation::Proper, 6, 4, 3).status, RowStatus::Verified);
    }

    #[test]
    fn ekr_rows() {
        let rep = cross_validate_ekr(&cfg(SweepKind::Ekr, (8, 9), (3, 4), (1, 2))).unwrap();
        let find = |n, r, t| rep.rows.iter().find(|x| x.n == n && x.k == Some(r) && x.t == t).unwrap();
        assert_eq!(find(8, 3, 1).max_size, 21);
        assert_eq!(find(9, 4, 2).max_size, 21);
        assert!(find(8, 4, 2).max_size > 15);
        assert_eq!(rep.summary.refuted, 0);
    }

    #[test]
    fn fail_fast_stops_at_first_counterexample() {
        let c = RunConfig { fail_fast: true, ..cfg(SweepKind::Strong, (6, 12), (3, 3), (1, 1)) };
        let rep = verify_strong_form(&c).unwrap();
        assert_eq!(rep.rows.last().unwrap().n, 8);
        assert_eq!(rep.summary.refuted, 1);
    }

    #[test]
    fn consistency_between_tables() {
        let strong = verify_strong_form(&cfg(SweepKind::Strong, (2, 9), (1, 9), (1, 1))).unwrap();
        let weak = verify_weak_form(&cfg(SweepKind::Weak, (2, 9), (1, 1), (1, 1))).unwrap();
        let checks = proposition1_consistency(&strong.rows, &weak.rows);
        assert_eq!(checks.len(), 8);
        assert!(checks.iter().all(|&(_, ok)| ok));
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(digest(["(1,2)".to_string()]), digest(["(1,2)".to_string()]));
        assert_ne!(digest(["(1,2)".to_string()]), digest(["(1,3)".to_string()]));
        assert_eq!(digest(Vec::<String>::new()).len(), 16);
    }
}

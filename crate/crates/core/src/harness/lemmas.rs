//! Property suites for the constructions, run over fixed grids plus seeded
//! random cover-set instances.

use super::RunConfig;
use crate::constructions::{
    lemma1_injection, lemma2_family, lemma3_cover, proposition_witnesses, CoverCase, ShiftMode,
    DEFAULT_MAX_TUPLES,
};
use crate::error::Error;
use crate::intersection::indexed_part_set;
use crate::partition::{count_partitions, Partition};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

pub const RANDOM_FAMILY_DISTRIBUTION: &str = "t uniform in 1..=3; kernel K of t+d elements, d uniform in 2..=4; \
     each member takes s = t + ceil(d/2) or more elements of K (so any two share at least t) plus uniform noise \
     from outside K up to size r, r uniform in s..=8; 2..=12 members (duplicates dropped); ground set [g], \
     g uniform in max(|K|, r)+1..=30; resampled until the common intersection has fewer than t elements";

/// Aggregated outcome of one named assertion over its grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub suite: String,
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub first_failure: Option<String>,
}

impl LemmaCheck {
    fn new(suite: &str, name: &str) -> Self {
        LemmaCheck { suite: suite.into(), name: name.into(), passed: 0, total: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(context());
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub seed: u64,
    pub trials: usize,
    pub random_family_distribution: String,
    /// How many random instances took each branch of the cover construction.
    pub cover_branches: [usize; 2],
    pub checks: Vec<LemmaCheck>,
    pub passed: usize,
    pub failed: usize,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn check(&self, suite: &str, name: &str) -> Option<&LemmaCheck> {
        self.checks.iter().find(|c| c.suite == suite && c.name == name)
    }
}

/// One random t-intersecting, non-trivial family with its `(t, r)`.
pub fn random_cover_instance(rng: &mut impl Rng) -> (Vec<BTreeSet<usize>>, usize, usize) {
    loop {
        let t: usize = rng.gen_range(1..=3);
        let d: usize = rng.gen_range(2..=4);
        let kernel_size = t + d;
        let s = t + d.div_ceil(2);
        let r = rng.gen_range(s..=8);
        let ground = rng.gen_range(kernel_size.max(r) + 1..=30);
        let order: Vec<usize> = sample(rng, ground, ground).into_iter().map(|i| i + 1).collect();
        let (kernel, noise) = order.split_at(kernel_size);
        let members = rng.gen_range(2..=12);
        let mut family: Vec<BTreeSet<usize>> = Vec::new();
        for _ in 0..members {
            let from_kernel = rng.gen_range(s..=kernel_size.min(r));
            let from_noise = rng.gen_range(0..=(r - from_kernel).min(noise.len()));
            let mut set: BTreeSet<usize> =
                sample(rng, kernel.len(), from_kernel).into_iter().map(|i| kernel[i]).collect();
            set.extend(sample(rng, noise.len(), from_noise).into_iter().map(|i| noise[i]));
            if !family.contains(&set) {
                family.push(set);
            }
        }
        let common = family
            .iter()
            .skip(1)
            .fold(family[0].clone(), |acc, a| acc.intersection(a).copied().collect());
        if common.len() < t {
            return (family, t, r);
        }
    }
}

fn brute_cover_ok(family: &[BTreeSet<usize>], j: &BTreeSet<usize>, t: usize, r: usize) -> (bool, bool) {
    let size_ok = j.len() + 2 * t < 3 * r;
    let meet_ok = family.iter().all(|a| a.intersection(j).count() > t);
    (size_ok, meet_ok)
}

fn lemma1_checks(checks: &mut Vec<LemmaCheck>, cfg: &RunConfig) {
    let mut injective = LemmaCheck::new("lemma1", "injective");
    let mut image = LemmaCheck::new("lemma1", "image_size_equals_p_m_k");
    let mut strict = LemmaCheck::new("lemma1", "witness_outside_image");
    let mut monotone = LemmaCheck::new("lemma1", "count_monotone");
    for n in 4..=20 {
        for m in 3..n {
            for k in 3..=m {
                let ctx = || format!("m={m} n={n} k={k}");
                match lemma1_injection(m, n, k, &cfg.limits) {
                    Ok(rep) => {
                        injective.record(rep.injective, ctx);
                        let p_mk = count_partitions(m, k).unwrap_or(0);
                        image.record(rep.map.len() as u128 == p_mk, ctx);
                        if n >= k + 2 {
                            strict.record(rep.strictness_witness.is_some(), ctx);
                        }
                    }
                    Err(e) => {
                        injective.record(false, || format!("{}: {e}", ctx()));
                    }
                }
                let (pm, pn) = (count_partitions(m, k).unwrap_or(0), count_partitions(n, k).unwrap_or(0));
                let want_strict = n >= k + 2;
                monotone.record(if want_strict { pm < pn } else { pm <= pn }, ctx);
            }
        }
    }
    checks.extend([injective, image, strict, monotone]);
}

fn lemma2_checks(checks: &mut Vec<LemmaCheck>, cfg: &RunConfig) {
    let names = ["disjoint", "cardinality", "sorted_in_p_n_k", "fiber_bound", "inequality"];
    let mut cs: Vec<LemmaCheck> = names.iter().map(|n| LemmaCheck::new("lemma2", n)).collect();
    let mut counting = LemmaCheck::new("lemma2", "inequality_counting_only");
    for k in [3, 4] {
        for c in [1, 2] {
            let base = c * k * k * k;
            for n in base..=base + 8 {
                let ctx = || format!("n={n} k={k} c={c}");
                match lemma2_family(n, k, c, DEFAULT_MAX_TUPLES, &cfg.limits) {
                    Ok(r) => {
                        let flags =
                            [r.disjoint, r.cardinality, r.positive_sum, r.fiber_bound, Some(r.inequality)];
                        for (check, flag) in cs.iter_mut().zip(flags) {
                            check.record(flag == Some(true), ctx);
                        }
                    }
                    Err(e) => cs[0].record(false, || format!("{}: {e}", ctx())),
                }
            }
            let n = base * 10;
            match lemma2_family(n, k, c, 0, &cfg.limits) {
                Ok(r) => counting.record(r.mode == ShiftMode::CountingOnly && r.inequality, || format!("n={n} k={k} c={c}")),
                Err(e) => counting.record(false, || e.to_string()),
            }
        }
    }
    checks.extend(cs);
    checks.push(counting);
}

fn lemma3_checks(checks: &mut Vec<LemmaCheck>, cfg: &RunConfig) -> [usize; 2] {
    let mut size = LemmaCheck::new("lemma3", "cover_size_at_most_3r_2t_1");
    let mut meets = LemmaCheck::new("lemma3", "cover_meets_every_member_in_t_plus_1");
    let mut branches = [0usize; 2];
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for trial in 0..cfg.lemma3_trials {
        let (family, t, r) = random_cover_instance(&mut rng);
        let ctx = || format!("trial {trial}: t={t} r={r} family={family:?}");
        match lemma3_cover(&family, t, r) {
            Ok(rep) => {
                branches[usize::from(rep.case == CoverCase::ThreeSetUnion)] += 1;
                let (s_ok, m_ok) = brute_cover_ok(&family, &rep.j, t, r);
                size.record(s_ok, ctx);
                meets.record(m_ok, ctx);
            }
            Err(e) => {
                let msg = format!("{}: {e}", ctx());
                size.record(false, || msg.clone());
                meets.record(false, || msg);
            }
        }
    }

    // The same construction on encoded partition families: the non-star
    // maximum families of P(8,3) and P(10,3) under the indexed-pair encoding.
    let mut encoded = LemmaCheck::new("lemma3", "partition_encodings");
    let families: [&[&[usize]]; 2] = [
        &[&[1, 2, 5], &[1, 3, 4], &[2, 2, 4], &[2, 3, 3]],
        &[&[1, 2, 7], &[1, 3, 6], &[1, 4, 5], &[2, 3, 5]],
    ];
    for fam in families {
        let sets: Vec<BTreeSet<(usize, usize)>> = fam
            .iter()
            .map(|p| indexed_part_set(&Partition::new(p.to_vec()).expect("valid literal")).0)
            .collect();
        let ok = match lemma3_cover(&sets, 1, 3) {
            Ok(rep) => rep.j.len() <= 6 && sets.iter().all(|a| a.intersection(&rep.j).count() >= 2),
            Err(Error::Construction(_)) | Err(_) => false,
        };
        encoded.record(ok, || format!("{fam:?}"));
    }
    checks.extend([size, meets, encoded]);
    branches
}

fn witness_checks(checks: &mut Vec<LemmaCheck>) {
    let mut w = LemmaCheck::new("propositions", "witnesses_well_formed");
    for k in 2..=12 {
        w.record(proposition_witnesses(2 * k, k, 1).is_ok(), || format!("n={} k={k}", 2 * k));
    }
    for t in 2..=4 {
        for k in t + 1..=12 {
            let n = 2 * k + 1 - t;
            w.record(proposition_witnesses(n, k, t).is_ok(), || format!("n={n} k={k} t={t}"));
        }
    }
    checks.push(w);
}

/// Runs every construction suite. Failures are report content, never errors.
pub fn run_lemma_suites(cfg: &RunConfig) -> LemmaReport {
    let mut checks = Vec::new();
    lemma1_checks(&mut checks, cfg);
    lemma2_checks(&mut checks, cfg);
    let cover_branches = lemma3_checks(&mut checks, cfg);
    witness_checks(&mut checks);
    let failed = checks.iter().filter(|c| !c.ok()).count();
    LemmaReport {
        seed: cfg.seed,
        trials: cfg.lemma3_trials,
        random_family_distribution: RANDOM_FAMILY_DISTRIBUTION.to_string(),
        cover_branches,
        passed: checks.len() - failed,
        failed,
        checks,
    }
}

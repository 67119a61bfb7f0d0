//! The construction suites: the injection P(m,k) -> P(n,k), the shifted
//! family bound, the cover set, and the small-n witnesses.

use intersecting_partitions::constructions::{lemma1_injection, lemma2_family, lemma3_cover, proposition_witnesses};
use intersecting_partitions::harness::{run_lemma_suites, RunConfig, SweepKind};
use intersecting_partitions::Limits;
use std::collections::BTreeSet;

fn main() -> intersecting_partitions::Result<()> {
    let limits = Limits::default();
    let inj = lemma1_injection(5, 8, 3, &limits)?;
    let witness = inj.strictness_witness.as_ref().map(|p| p.to_string());
    println!("P(5,3) -> P(8,3): {} pairs, injective {}, missed {:?}", inj.map.len(), inj.injective, witness);

    let shift = lemma2_family(27, 3, 1, 1_000_000, &limits)?;
    println!(
        "shift family n=27 k=3 c=1: |F| {}, |G| {:?}, max fiber {:?}, all hold {}",
        shift.family_size,
        shift.image_size,
        shift.max_fiber,
        shift.all_hold()
    );

    let family: Vec<BTreeSet<u32>> = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]].iter().map(|s| s.iter().copied().collect()).collect();
    let cover = lemma3_cover(&family, 2, 3)?;
    println!("cover of the 3-subsets of [4], t=2: J = {:?} via {:?}", cover.j, cover.case);

    let w = proposition_witnesses(8, 4, 1)?;
    let shown: Vec<String> = [w.all_twos, w.ones_and_max, w.ones_three_rest].into_iter().flatten().map(|p| p.to_string()).collect();
    println!("n=2k witnesses for (8,4): {}", shown.join(" "));

    let mut cfg = RunConfig::default_for(SweepKind::Strong);
    cfg.lemma3_trials = 200;
    let report = run_lemma_suites(&cfg);
    for c in &report.checks {
        println!("{} {}/{}: {}/{}", if c.ok() { "PASS" } else { "FAIL" }, c.suite, c.name, c.passed, c.total);
    }
    Ok(())
}

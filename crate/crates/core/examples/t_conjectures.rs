//! t-intersecting families under both relations, compared with their stars.

use intersecting_partitions::harness::{verify_t_conjectures, RowStatus, RunConfig, SweepKind};

fn main() -> intersecting_partitions::Result<()> {
    let mut cfg = RunConfig::default_for(SweepKind::TMultiset);
    cfg.n.max = 16;
    let report = verify_t_conjectures(&cfg)?;
    println!(
        "{} rows: {} verified, {} refuted, {} inconclusive",
        report.rows.len(),
        report.summary.verified,
        report.summary.refuted,
        report.summary.inconclusive
    );
    for r in report.rows.iter().filter(|r| r.status != RowStatus::Verified) {
        println!(
            "  n={} k={:?} t={} {}: star {} < max {} ({:?})",
            r.n,
            r.k,
            r.t,
            r.relation.as_str(),
            r.star_size,
            r.max_size,
            r.status
        );
    }
    Ok(())
}

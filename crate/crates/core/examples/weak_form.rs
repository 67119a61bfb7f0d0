//! Intersecting families of all partitions of n, any length.

use intersecting_partitions::harness::{verify_weak_form, RunConfig, SweepKind};
use intersecting_partitions::partition::count_all;
use intersecting_partitions::search::max_family_all_lengths;
use intersecting_partitions::{Limits, Relation};

fn main() -> intersecting_partitions::Result<()> {
    let out = max_family_all_lengths(9, 1, Relation::Multiset, &Limits::default())?;
    println!("P_9: max {} = p(8) = {}", out.max_size, count_all(8)?);

    let report = verify_weak_form(&RunConfig::default_for(SweepKind::Weak))?;
    for r in &report.rows {
        println!("n={:2} star {:3} max {:3} unique {:?} {:?}", r.n, r.star_size, r.max_size, r.unique, r.status);
    }
    Ok(())
}

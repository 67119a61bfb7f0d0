//! A cached strong-form sweep rendered as a table and CSV.

use intersecting_partitions::harness::{render_report, run_sweep, Cache, Format, RunConfig, SweepKind};

fn main() -> intersecting_partitions::Result<()> {
    let path = std::env::temp_dir().join("ipart-example-cache.jsonl");
    Cache::clear(&path)?;

    let mut cfg = RunConfig::default_for(SweepKind::Strong);
    cfg.n.max = 10;
    cfg.k.max = 4;
    cfg.cache = Some(path.clone());
    let report = run_sweep(&cfg)?;
    print!("{}", render_report(&report, Format::Table)?);

    // served from the cache on the second run
    let again = run_sweep(&cfg)?;
    println!("cache: {:?}", Cache::open(&path)?.stats());
    assert_eq!(render_report(&report, Format::Csv)?, render_report(&again, Format::Csv)?);
    Cache::clear(&path)?;
    Ok(())
}

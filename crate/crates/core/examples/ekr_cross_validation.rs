//! Runs the clique engine on r-subsets of [n] and compares with C(n-t, r-t).

use intersecting_partitions::search::set_system::binomial;
use intersecting_partitions::search::{max_family_set_system, SetFamilyInstance};
use intersecting_partitions::Limits;

fn main() -> intersecting_partitions::Result<()> {
    let limits = Limits::default();
    for (n, r, t) in [(6, 3, 1), (8, 3, 1), (9, 4, 2), (10, 4, 1), (7, 4, 2)] {
        let inst = SetFamilyInstance::new(n, r, t)?;
        let out = max_family_set_system(inst, &limits)?;
        println!(
            "n={n:2} r={r} t={t}: max {:3}, C(n-t,r-t) = {:3}, above threshold {}",
            out.max_size,
            binomial(n - t, r - t),
            inst.at_or_above_threshold()
        );
    }
    Ok(())
}

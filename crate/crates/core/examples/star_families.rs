//! Stars for both relations and their sizes.

use intersecting_partitions::intersection::is_family;
use intersecting_partitions::partition::{count_all, count_partitions};
use intersecting_partitions::star::{fixed_set_family, star_all_lengths, star_t, PartSpec};
use intersecting_partitions::{Limits, Relation};

fn main() -> intersecting_partitions::Result<()> {
    let limits = Limits::default();
    let (n, k, t) = (12, 5, 2);

    let star = star_t(n, k, t, &limits)?;
    println!("<t> star of P({n},{k}), t={t}: {} members, p({},{}) = {}", star.len(), n - t, k - t, count_partitions(n - t, k - t)?);
    println!("  t-intersecting: {}", is_family(&star, Relation::Multiset, t));

    let first = PartSpec::first(t)?;
    let proper = fixed_set_family(n, k, &first, &limits)?;
    let shift = first.sum();
    println!(
        "([t]) star of P({n},{k}): {} members, p({},{}) = {}",
        proper.len(),
        n - shift,
        k - t,
        count_partitions(n - shift, k - t)?
    );
    println!("  properly t-intersecting: {}", is_family(&proper, Relation::Proper, t));

    let all = star_all_lengths(n, t, &limits)?;
    println!("P_{n}<{t}>: {} members, p({}) = {}", all.len(), n - t, count_all(n - t)?);
    Ok(())
}

//! The two intersection relations on partitions and their set encodings.

use intersecting_partitions::intersection::{
    common_parts, distinct_common_parts, distinct_parts, indexed_part_set, properly_t_intersects, t_intersects,
};
use intersecting_partitions::Partition;

fn main() -> intersecting_partitions::Result<()> {
    let a = Partition::new(vec![1, 1, 2, 4])?;
    let b = Partition::new(vec![1, 1, 1, 5])?;
    let c = Partition::new(vec![1, 2, 2, 3])?;

    for (x, y) in [(&a, &b), (&a, &c), (&b, &c)] {
        println!(
            "{x} vs {y}: common parts {} (indexed pairs {}), distinct common parts {} (distinct sets {})",
            common_parts(x.parts(), y.parts()),
            indexed_part_set(x).intersection_size(&indexed_part_set(y)),
            distinct_common_parts(x.parts(), y.parts()),
            distinct_parts(x).intersection_size(&distinct_parts(y)),
        );
        for t in 1..=2 {
            println!("  t={t}: multiset {}, proper {}", t_intersects(x, y, t), properly_t_intersects(x, y, t));
        }
    }
    Ok(())
}

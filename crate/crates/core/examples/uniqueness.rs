//! Whether the star is the only maximum family, and an explicit rival.

use intersecting_partitions::partition::enumerate_partitions;
use intersecting_partitions::search::{build_graph, check_uniqueness, max_family, CliqueEngine};
use intersecting_partitions::star::{ids_of, star_ids};
use intersecting_partitions::{Limits, Partition, Relation};

fn main() -> intersecting_partitions::Result<()> {
    let limits = Limits::default();
    for (n, k) in [(10, 3), (12, 4), (14, 5)] {
        let graph = build_graph(enumerate_partitions(n, k, &limits)?, Relation::Multiset, 1, &limits)?;
        let out = max_family(&graph, &limits)?;
        let star = star_ids(graph.vertices(), Relation::Multiset, 1);
        let unique = check_uniqueness(graph.graph(), &star, out.max_size, &limits)?;
        println!("P({n},{k}): star {} = max {}, unique {unique}", star.len(), out.max_size);
    }

    // a second maximum family of P(10,3) that avoids (1,1,8)
    let limits = Limits::default();
    let graph = build_graph(enumerate_partitions(10, 3, &limits)?, Relation::Multiset, 1, &limits)?;
    let forced = ids_of(graph.vertices(), &[Partition::new(vec![2, 3, 5])?]);
    let mut engine = CliqueEngine::new(graph.graph(), &limits);
    if let Some(ids) = engine.clique_containing(&forced, 4, None)? {
        let family: Vec<String> = graph.partitions_of(&ids).iter().map(|p| p.to_string()).collect();
        println!("rival family of P(10,3): {}", family.join(" "));
    }
    Ok(())
}

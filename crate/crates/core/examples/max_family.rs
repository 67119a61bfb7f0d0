//! Exact maximum intersecting families, including the P(8,3) family that
//! beats the star.

use intersecting_partitions::partition::enumerate_partitions;
use intersecting_partitions::search::{build_graph, solve};
use intersecting_partitions::{Limits, Relation};

fn main() -> intersecting_partitions::Result<()> {
    let limits = Limits::default();
    for (n, k) in [(7, 3), (8, 3), (10, 3), (16, 6)] {
        let graph = build_graph(enumerate_partitions(n, k, &limits)?, Relation::Multiset, 1, &limits)?;
        let out = solve(&graph, &limits, true)?;
        let family: Vec<String> = graph.partitions_of(&out.witness).iter().map(|p| p.to_string()).collect();
        println!(
            "P({n},{k}): {} vertices, star {}, max {}, bound {}, unique {:?}, {} nodes",
            graph.len(),
            out.star_size,
            out.max_size,
            out.root_bound,
            out.unique_maximum,
            out.nodes_explored
        );
        if family.len() <= 8 {
            println!("  witness {}", family.join(" "));
        }
    }
    Ok(())
}

//! Maximum t-intersecting families as maximum cliques of intersection graphs.

mod bitset;
mod clique;
mod graph;
pub mod set_system;

pub use bitset::Bitset;
pub use clique::CliqueEngine;
pub use graph::{build_graph, Graph, IntersectionGraph};
pub use set_system::{max_family_set_system, r_subsets, SetFamilyInstance};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::intersection::{is_family, Relation};
use crate::partition::enumerate_all;
use crate::star::star_ids;
use serde::Serialize;
use std::time::{Duration, Instant};

/// Result of an exact maximum-family search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub max_size: usize,
    /// Vertex ids of one maximum family, ascending.
    pub witness: Vec<usize>,
    pub star_size: usize,
    pub star_is_maximum: bool,
    /// `None` until uniqueness has been decided.
    pub unique_maximum: Option<bool>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// Greedy coloring bound over the whole graph.
    pub root_bound: usize,
    /// No vertex is related to itself, so every family is empty.
    pub degenerate: bool,
}

/// Exact clique number of `graph`, seeded with `star` as the incumbent.
pub fn max_clique(graph: &Graph, star: &[usize], limits: &Limits) -> Result<SearchOutcome> {
    let started = Instant::now();
    let mut engine = CliqueEngine::new(graph, limits);
    let mut witness = engine.maximum(star)?;
    if limits.deterministic && !witness.is_empty() {
        witness = engine.lex_smallest(witness.len(), &witness)?;
    }
    debug_assert!(graph.is_clique(&witness));
    let star_size = if graph.is_clique(star) { star.len() } else { 0 };
    Ok(SearchOutcome {
        max_size: witness.len(),
        star_size,
        star_is_maximum: star_size == witness.len() && graph.is_clique(star),
        witness,
        unique_maximum: None,
        nodes_explored: engine.nodes_explored(),
        elapsed: started.elapsed(),
        root_bound: engine.root_bound(),
        degenerate: graph.eligible().is_empty(),
    })
}

/// Maximum family in `graph`, seeded with the canonical star of its relation.
pub fn max_family(graph: &IntersectionGraph, limits: &Limits) -> Result<SearchOutcome> {
    let star = star_ids(graph.vertices(), graph.relation(), graph.t());
    let outcome = max_clique(graph.graph(), &star, limits)?;
    let members = graph.partitions_of(&outcome.witness);
    if !is_family(&members, graph.relation(), graph.t()) {
        return Err(Error::Construction(format!(
            "witness is not {}-intersecting under the {} relation",
            graph.t(),
            graph.relation()
        )));
    }
    Ok(outcome)
}

/// True iff `star` is the only clique of size `max_size`.
///
/// Any other maximum clique contains a vertex outside `star`, so it suffices
/// to ask, for each such vertex, whether a clique of size `max_size` through
/// it exists.
pub fn check_uniqueness(graph: &Graph, star: &[usize], max_size: usize, limits: &Limits) -> Result<bool> {
    if star.len() != max_size || !graph.is_clique(star) {
        return Err(Error::Precondition(format!(
            "star of size {} is not a clique of size {max_size}",
            star.len()
        )));
    }
    let mut engine = CliqueEngine::new(graph, limits);
    let mut outside = graph.eligible().clone();
    for &v in star {
        outside.remove(v);
    }
    for v in outside.iter() {
        if engine.clique_containing(&[v], max_size, None)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs [`max_family`], then decides uniqueness of the star when it is maximum.
pub fn solve(graph: &IntersectionGraph, limits: &Limits, uniqueness: bool) -> Result<SearchOutcome> {
    let started = Instant::now();
    let mut outcome = max_family(graph, limits)?;
    if uniqueness {
        outcome.unique_maximum = Some(if outcome.star_is_maximum {
            let star = star_ids(graph.vertices(), graph.relation(), graph.t());
            check_uniqueness(graph.graph(), &star, outcome.max_size, limits)?
        } else {
            false
        });
    }
    outcome.elapsed = started.elapsed();
    Ok(outcome)
}

/// Maximum t-intersecting family over all partitions of `n`, any length.
pub fn max_family_all_lengths(n: usize, t: usize, relation: Relation, limits: &Limits) -> Result<SearchOutcome> {
    let graph = build_graph(enumerate_all(n, limits)?, relation, t, limits)?;
    max_family(&graph, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{count_partitions, enumerate_partitions, Partition};
    use crate::star::ids_of;

    fn graph(n: usize, k: usize, relation: Relation, t: usize) -> IntersectionGraph {
        let l = Limits::default();
        build_graph(enumerate_partitions(n, k, &l).unwrap(), relation, t, &l).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn p_10_3_has_two_maximum_families() {
        let l = Limits::default();
        let g = graph(10, 3, Relation::Multiset, 1);
        let out = solve(&g, &l, true).unwrap();
        assert_eq!(out.max_size, 4);
        assert!(out.star_is_maximum);
        assert_eq!(out.unique_maximum, Some(false));
        let alt = ids_of(g.vertices(), &[p(&[1, 2, 7]), p(&[1, 3, 6]), p(&[1, 4, 5]), p(&[2, 3, 5])]);
        assert_eq!(alt.len(), 4);
        assert!(g.graph().is_clique(&alt));
        // lexicographically smallest is the star itself
        assert_eq!(out.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn short_lengths_give_complete_graphs() {
        let l = Limits::default();
        for k in 2..7 {
            for n in k..2 * k {
                let out = max_family(&graph(n, k, Relation::Multiset, 1), &l).unwrap();
                assert_eq!(out.max_size as u128, count_partitions(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn two_parts_admit_singletons_only() {
        for n in 2..25 {
            let out = max_family(&graph(n, 2, Relation::Multiset, 1), &Limits::default()).unwrap();
            assert_eq!(out.max_size, 1);
        }
    }

    #[test]
    fn uniqueness_examples() {
        let l = Limits::default();
        let verdict = |n, k| solve(&graph(n, k, Relation::Multiset, 1), &l, true).unwrap().unique_maximum;
        assert_eq!(verdict(8, 4), Some(true));
        assert_eq!(verdict(6, 3), Some(false));
        assert_eq!(verdict(10, 3), Some(false));
    }

    #[test]
    fn all_lengths_examples() {
        let l = Limits::default();
        assert_eq!(max_family_all_lengths(5, 1, Relation::Multiset, &l).unwrap().max_size, 5);
        assert_eq!(max_family_all_lengths(2, 1, Relation::Multiset, &l).unwrap().max_size, 1);
        let three = max_family_all_lengths(3, 1, Relation::Multiset, &l).unwrap();
        assert_eq!(three.max_size, 2);
        let verts = enumerate_all(3, &l).unwrap();
        assert_eq!(ids_of(&verts, &[p(&[1, 2]), p(&[1, 1, 1])]), three.witness);
    }

    #[test]
    fn degenerate_when_t_exceeds_length() {
        let out = max_family(&graph(9, 3, Relation::Multiset, 4), &Limits::default()).unwrap();
        assert_eq!(out.max_size, 0);
        assert!(out.degenerate);
    }

    #[test]
    fn uniqueness_rejects_non_maximum_star() {
        let g = graph(10, 3, Relation::Multiset, 1);
        assert!(check_uniqueness(g.graph(), &[0, 1], 4, &Limits::default()).is_err());
    }

    #[test]
    fn timeout_is_reported_not_swallowed() {
        let l = Limits { node_budget: 0, ..Limits::default() };
        let err = max_family(&graph(20, 5, Relation::Multiset, 1), &l).unwrap_err();
        assert!(matches!(err, Error::Timeout { .. }));
    }
}

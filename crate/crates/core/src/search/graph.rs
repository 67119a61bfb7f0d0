use super::bitset::Bitset;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::intersection::Relation;
use crate::partition::Partition;

/// Undirected graph with bitset adjacency rows and no self-loops.
///
/// A vertex is `eligible` when it may appear in a family at all, i.e. it is
/// related to itself. Cliques are only ever formed from eligible vertices.
#[derive(Debug, Clone)]
pub struct Graph {
    adjacency: Vec<Bitset>,
    eligible: Bitset,
}

impl Graph {
    /// Builds the graph on `0..len` where `u ~ v` iff `related(u, v)`.
    /// `related(v, v)` decides eligibility.
    pub fn from_relation(len: usize, mut related: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adjacency = vec![Bitset::new(len); len];
        let mut eligible = Bitset::new(len);
        for u in 0..len {
            if related(u, u) {
                eligible.insert(u);
            }
            for v in u + 1..len {
                if related(u, v) {
                    adjacency[u].insert(v);
                    adjacency[v].insert(u);
                }
            }
        }
        Graph { adjacency, eligible }
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &Bitset {
        &self.adjacency[v]
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn eligible(&self) -> &Bitset {
        &self.eligible
    }

    pub fn is_eligible(&self, v: usize) -> bool {
        self.eligible.contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].intersection(&self.eligible).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Bitset::count).sum::<usize>() / 2
    }

    /// True if `ids` are distinct eligible vertices, pairwise adjacent.
    pub fn is_clique(&self, ids: &[usize]) -> bool {
        ids.iter().enumerate().all(|(i, &u)| {
            u < self.len()
                && self.is_eligible(u)
                && ids[i + 1..].iter().all(|&v| u != v && self.adjacent(u, v))
        })
    }
}

/// Partitions as vertices, joined when they intersect under `relation` at
/// level `t`. Vertex ids are positions in `vertices`.
#[derive(Debug, Clone)]
pub struct IntersectionGraph {
    vertices: Vec<Partition>,
    graph: Graph,
    relation: Relation,
    t: usize,
}

pub fn build_graph(
    partitions: Vec<Partition>,
    relation: Relation,
    t: usize,
    limits: &Limits,
) -> Result<IntersectionGraph> {
    if partitions.len() > limits.max_vertices {
        return Err(Error::ResourceGuard {
            what: "intersection graph".into(),
            size: partitions.len() as u128,
            limit: limits.max_vertices,
        });
    }
    let graph = Graph::from_relation(partitions.len(), |u, v| {
        relation.holds(&partitions[u], &partitions[v], t)
    });
    Ok(IntersectionGraph { vertices: partitions, graph, relation, t })
}

impl IntersectionGraph {
    pub fn vertices(&self) -> &[Partition] {
        &self.vertices
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn partitions_of(&self, ids: &[usize]) -> Vec<Partition> {
        ids.iter().map(|&i| self.vertices[i].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    fn graph(n: usize, k: usize, relation: Relation, t: usize) -> IntersectionGraph {
        let l = Limits::default();
        build_graph(enumerate_partitions(n, k, &l).unwrap(), relation, t, &l).unwrap()
    }

    #[test]
    fn p_10_3_neighbourhood() {
        let g = graph(10, 3, Relation::Multiset, 1);
        assert_eq!(g.len(), 8);
        let expect: Vec<usize> = (1..8)
            .filter(|&v| g.vertices()[v].contains_part(1) || g.vertices()[v].contains_part(8))
            .collect();
        assert_eq!(g.graph().neighbors(0).iter().collect::<Vec<_>>(), expect);
        assert_eq!(expect, vec![1, 2, 3]);
        for u in 0..8 {
            assert!(!g.graph().adjacent(u, u));
            for v in 0..8 {
                assert_eq!(g.graph().adjacent(u, v), g.graph().adjacent(v, u));
            }
        }
    }

    #[test]
    fn two_part_graphs_are_edgeless() {
        for n in 2..20 {
            assert_eq!(graph(n, 2, Relation::Multiset, 1).graph().edge_count(), 0);
        }
    }

    #[test]
    fn level_zero_is_complete() {
        let g = graph(12, 4, Relation::Proper, 0);
        let m = g.len();
        assert_eq!(g.graph().edge_count(), m * (m - 1) / 2);
    }

    #[test]
    fn eligibility_follows_self_relation() {
        let g = graph(8, 3, Relation::Proper, 2);
        for (v, a) in g.vertices().iter().enumerate() {
            let distinct = crate::intersection::distinct_parts(a).len();
            assert_eq!(g.graph().is_eligible(v), distinct >= 2, "{a}");
        }
    }

    #[test]
    fn guard() {
        let l = Limits { max_vertices: 5, ..Limits::default() };
        let verts = enumerate_partitions(10, 3, &Limits::default()).unwrap();
        assert!(matches!(build_graph(verts, Relation::Multiset, 1, &l), Err(Error::ResourceGuard { .. })));
    }
}

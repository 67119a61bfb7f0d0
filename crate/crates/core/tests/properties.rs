use intersecting_partitions::intersection::{
    common_parts, distinct_common_parts, distinct_parts, indexed_part_set, is_family, properly_t_intersects,
    t_intersects, Relation,
};
use intersecting_partitions::partition::{count_partitions, enumerate_all, enumerate_partitions, Partition};
use intersecting_partitions::search::{build_graph, max_family, CliqueEngine, Graph};
use intersecting_partitions::star::{in_star, star_t};
use intersecting_partitions::Limits;
use proptest::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=6, 1..=6).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

fn small_nk() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=13).prop_flat_map(|n| (Just(n), 1..=n))
}

proptest! {
    #[test]
    fn relations_are_symmetric(a in partition(), b in partition(), t in 0usize..4) {
        prop_assert_eq!(t_intersects(&a, &b, t), t_intersects(&b, &a, t));
        prop_assert_eq!(properly_t_intersects(&a, &b, t), properly_t_intersects(&b, &a, t));
    }

    #[test]
    fn relations_are_monotone_in_t(a in partition(), b in partition(), t in 1usize..5) {
        for rel in [Relation::Multiset, Relation::Proper] {
            if rel.holds(&a, &b, t) {
                prop_assert!(rel.holds(&a, &b, t - 1));
            }
        }
    }

    #[test]
    fn proper_implies_multiset(a in partition(), b in partition(), t in 0usize..5) {
        if properly_t_intersects(&a, &b, t) {
            prop_assert!(t_intersects(&a, &b, t));
        }
        prop_assert!(distinct_common_parts(a.parts(), b.parts()) <= common_parts(a.parts(), b.parts()));
    }

    #[test]
    fn counts_match_set_encodings(a in partition(), b in partition()) {
        prop_assume!(a.n() <= 16 && b.n() <= 16);
        let s = indexed_part_set(&a).intersection_size(&indexed_part_set(&b));
        prop_assert_eq!(common_parts(a.parts(), b.parts()), s);
        let r = distinct_parts(&a).intersection_size(&distinct_parts(&b));
        prop_assert_eq!(distinct_common_parts(a.parts(), b.parts()), r);

        // multiset intersection via multiplicity maps
        let mult = |p: &Partition| p.parts().iter().fold(BTreeMap::new(), |mut m, &x| { *m.entry(x).or_insert(0) += 1; m });
        let (ma, mb) = (mult(&a), mult(&b));
        let direct: usize = ma.iter().map(|(x, c)| (*c).min(*mb.get(x).unwrap_or(&0))).sum();
        prop_assert_eq!(s, direct);
    }

    #[test]
    fn enumeration_is_sorted_and_complete((n, k) in small_nk()) {
        let l = Limits::default();
        let all = enumerate_partitions(n, k, &l).unwrap();
        prop_assert_eq!(all.len() as u128, count_partitions(n, k).unwrap());
        prop_assert!(all.windows(2).all(|w| w[0].parts() < w[1].parts()));
        prop_assert!(all.iter().all(|p| p.n() == n && p.k() == k));
    }

    #[test]
    fn star_sizes_and_bijection((n, k) in small_nk(), t in 1usize..=4) {
        prop_assume!(t <= k);
        let l = Limits::default();
        let star = star_t(n, k, t, &l).unwrap();
        prop_assert_eq!(star.len() as u128, count_partitions(n - t, k - t).unwrap());
        // dropping the leading ones is a bijection onto P(n-t, k-t)
        let stripped: BTreeSet<Vec<usize>> = star.iter().map(|p| p.parts()[t..].to_vec()).collect();
        let target: BTreeSet<Vec<usize>> = if k == t {
            if n == t { [Vec::new()].into() } else { BTreeSet::new() }
        } else {
            enumerate_partitions(n - t, k - t, &l).unwrap().iter().map(|p| p.parts().to_vec()).collect()
        };
        prop_assert_eq!(stripped, target);
        prop_assert!(is_family(&star, Relation::Multiset, t));
    }

    #[test]
    fn t_plus_one_parts_give_singletons(n in 1usize..=14, t in 1usize..=3) {
        prop_assume!(n > t);
        let l = Limits::default();
        let graph = build_graph(enumerate_partitions(n, t + 1, &l).unwrap(), Relation::Multiset, t, &l).unwrap();
        prop_assert_eq!(graph.graph().edge_count(), 0);
        prop_assert_eq!(max_family(&graph, &l).unwrap().max_size, 1);
    }

    #[test]
    fn search_is_sandwiched_and_deterministic((n, k) in small_nk(), t in 1usize..=2, proper in any::<bool>()) {
        let relation = if proper { Relation::Proper } else { Relation::Multiset };
        let l = Limits::default();
        let graph = build_graph(enumerate_partitions(n, k, &l).unwrap(), relation, t, &l).unwrap();
        let out = max_family(&graph, &l).unwrap();
        prop_assert!(out.star_size <= out.max_size);
        prop_assert!(out.max_size <= out.root_bound);
        prop_assert!(graph.graph().is_clique(&out.witness));
        prop_assert!(is_family(&graph.partitions_of(&out.witness), relation, t));
        let star_members = graph.vertices().iter().filter(|a| in_star(a, relation, t)).count();
        prop_assert!(out.star_size == star_members || out.star_size == 0);
        let again = max_family(&graph, &l).unwrap();
        prop_assert_eq!(out.witness, again.witness);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn engine_matches_brute_force(bits in prop::collection::vec(any::<bool>(), 105)) {
        // random graph on 15 vertices from the upper triangle
        let n = 15;
        let mut adj = vec![vec![false; n]; n];
        let mut it = bits.iter();
        for i in 0..n {
            for j in i + 1..n {
                let b = *it.next().unwrap();
                adj[i][j] = b;
                adj[j][i] = b;
            }
        }
        let graph = Graph::from_relation(n, |i, j| i == j || adj[i][j]);
        let brute = (0u32..1 << n)
            .filter(|&m| (0..n).all(|i| (0..n).all(|j| i == j || m >> i & 1 == 0 || m >> j & 1 == 0 || adj[i][j])))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap();
        let mut engine = CliqueEngine::new(&graph, &Limits::default());
        prop_assert_eq!(engine.maximum(&[]).unwrap().len(), brute);
    }
}

#[test]
fn proper_relation_all_lengths_smoke() {
    let l = Limits::default();
    let graph = build_graph(enumerate_all(9, &l).unwrap(), Relation::Proper, 1, &l).unwrap();
    let out = max_family(&graph, &l).unwrap();
    assert!(out.max_size >= out.star_size);
    assert!(is_family(&graph.partitions_of(&out.witness), Relation::Proper, 1));
}

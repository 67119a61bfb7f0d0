use super::graph::Graph;
use super::{max_clique, SearchOutcome};
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::intersection::common_parts;

/// All `r`-subsets of `[n]` with members at least `t` apart in intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetFamilyInstance {
    pub ground_size: usize,
    pub member_size: usize,
    pub t: usize,
}

impl SetFamilyInstance {
    pub fn new(ground_size: usize, member_size: usize, t: usize) -> Result<Self> {
        if !(1 <= t && t <= member_size && member_size <= ground_size) {
            return Err(Error::Precondition(format!(
                "need 1 <= t <= r <= n, got n={ground_size} r={member_size} t={t}"
            )));
        }
        Ok(SetFamilyInstance { ground_size, member_size, t })
    }

    /// `(r - t + 1)(t + 1) <= n`: the full star is a largest family.
    pub fn at_or_above_threshold(&self) -> bool {
        (self.member_size - self.t + 1) * (self.t + 1) <= self.ground_size
    }
}

pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The `r`-subsets of `{1, ..., n}` in lexicographic order.
pub fn r_subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=r).collect();
    loop {
        out.push(cur.clone());
        // rightmost position that can still advance
        let Some(i) = (0..r).rev().find(|&i| cur[i] < n - (r - 1 - i)) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Maximum t-intersecting subfamily of the `r`-subsets of `[n]`, through the
/// same clique engine as partition families. The seed is the star of all
/// sets containing `{1, ..., t}`.
pub fn max_family_set_system(instance: SetFamilyInstance, limits: &Limits) -> Result<SearchOutcome> {
    let SetFamilyInstance { ground_size: n, member_size: r, t } = instance;
    let size = binomial(n, r);
    if size > limits.max_vertices as u128 {
        return Err(Error::ResourceGuard { what: format!("C({n},{r})"), size, limit: limits.max_vertices });
    }
    let sets = r_subsets(n, r);
    let graph = Graph::from_relation(sets.len(), |u, v| common_parts(&sets[u], &sets[v]) >= t);
    let star: Vec<usize> = sets
        .iter()
        .enumerate()
        .filter(|(_, s)| s[..t].iter().copied().eq(1..=t))
        .map(|(i, _)| i)
        .collect();
    max_clique(&graph, &star, limits)
}

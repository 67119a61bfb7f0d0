//! Exact maximum clique search: branch and bound with a greedy sequential
//! coloring bound over bitset adjacency.

use super::bitset::Bitset;
use super::graph::Graph;
use crate::config::Limits;
use crate::error::{Error, Result};
use std::time::Instant;

/// Search state over one graph. The node budget and clock are shared by every
/// query issued through the same engine.
pub struct CliqueEngine<'g> {
    graph: &'g Graph,
    // internal id -> original id; internal order is descending degree, ties
    // broken by original id
    order: Vec<usize>,
    rank: Vec<usize>,
    adj: Vec<Bitset>,
    eligible: Bitset,
    limits: Limits,
    nodes: u64,
    started: Instant,
    root_bound: usize,
}

struct Goal {
    best: Vec<usize>,
    // only cliques larger than this are recorded
    bar: usize,
    // stop as soon as a clique of this size is found
    stop_at: Option<usize>,
}

impl Goal {
    fn best_size(&self) -> usize {
        self.bar
    }
}

enum Flow {
    Continue,
    Stop,
}

impl<'g> CliqueEngine<'g> {
    pub fn new(graph: &'g Graph, limits: &Limits) -> Self {
        let n = graph.len();
        let mut order: Vec<usize> = graph.eligible().iter().collect();
        let degrees: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
        order.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
        let m = order.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            rank[v] = i;
        }
        let adj: Vec<Bitset> = order
            .iter()
            .map(|&v| {
                let mut row = Bitset::new(m);
                for u in graph.neighbors(v).iter() {
                    if rank[u] != usize::MAX {
                        row.insert(rank[u]);
                    }
                }
                row
            })
            .collect();
        let eligible = Bitset::full(m);
        let mut engine = CliqueEngine {
            graph,
            order,
            rank,
            adj,
            eligible,
            limits: *limits,
            nodes: 0,
            started: Instant::now(),
            root_bound: 0,
        };
        engine.root_bound = engine.color_bound(&engine.eligible.clone());
        engine
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn nodes_explored(&self) -> u64 {
        self.nodes
    }

    /// Number of colors used by the greedy coloring of all eligible vertices;
    /// an upper bound on the clique number.
    pub fn root_bound(&self) -> usize {
        self.root_bound
    }

    fn to_internal(&self, ids: &[usize]) -> Option<Vec<usize>> {
        ids.iter()
            .map(|&v| self.rank.get(v).copied().filter(|&r| r != usize::MAX))
            .collect()
    }

    fn to_original(&self, ids: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = ids.iter().map(|&i| self.order[i]).collect();
        out.sort_unstable();
        out
    }

    fn color_bound(&self, cand: &Bitset) -> usize {
        let mut uncolored = cand.clone();
        let mut colors = 0;
        while !uncolored.is_empty() {
            colors += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.subtract(&self.adj[v]);
                uncolored.remove(v);
            }
        }
        colors
    }

    // Vertices of `cand` with their greedy colors, in nondecreasing color order.
    fn color_sort(&self, cand: &Bitset) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(cand.count());
        let mut uncolored = cand.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.subtract(&self.adj[v]);
                uncolored.remove(v);
                out.push((v, color));
            }
        }
        out
    }

    fn tick(&mut self, goal: &Goal) -> Result<()> {
        self.nodes += 1;
        let out_of_time =
            self.nodes.is_multiple_of(1024) && self.started.elapsed() > self.limits.time_budget();
        if self.nodes > self.limits.node_budget || out_of_time {
            return Err(Error::Timeout {
                lower: goal.best_size(),
                upper: self.root_bound,
                nodes: self.nodes,
            });
        }
        Ok(())
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut cand: Bitset, goal: &mut Goal) -> Result<Flow> {
        self.tick(goal)?;
        let colored = self.color_sort(&cand);
        for &(v, color) in colored.iter().rev() {
            if current.len() + color <= goal.best_size() {
                return Ok(Flow::Continue);
            }
            current.push(v);
            let next = cand.intersection(&self.adj[v]);
            if next.is_empty() {
                if current.len() > goal.best_size() {
                    goal.best = current.clone();
                    goal.bar = current.len();
                    if goal.stop_at.is_some_and(|s| goal.best.len() >= s) {
                        return Ok(Flow::Stop);
                    }
                }
            } else if let Flow::Stop = self.expand(current, next, goal)? {
                return Ok(Flow::Stop);
            }
            current.pop();
            cand.remove(v);
        }
        Ok(Flow::Continue)
    }

    /// A maximum clique (original ids, ascending). `seed`, if it is a clique,
    /// is the initial incumbent.
    pub fn maximum(&mut self, seed: &[usize]) -> Result<Vec<usize>> {
        let mut best = match self.to_internal(seed) {
            Some(s) if self.graph.is_clique(seed) => s,
            _ => Vec::new(),
        };
        if best.is_empty() {
            if let Some(v) = self.eligible.first() {
                best.push(v);
            }
        }
        let mut goal = Goal { bar: best.len(), best, stop_at: None };
        let cand = self.eligible.clone();
        if !cand.is_empty() {
            self.expand(&mut Vec::new(), cand, &mut goal)?;
        }
        Ok(self.to_original(&goal.best))
    }

    /// A clique of at least `size` vertices that contains every vertex of
    /// `forced` and otherwise uses only vertices in `allowed` (original ids).
    pub fn clique_containing(
        &mut self,
        forced: &[usize],
        size: usize,
        allowed: Option<&Bitset>,
    ) -> Result<Option<Vec<usize>>> {
        if !self.graph.is_clique(forced) {
            return Ok(None);
        }
        let Some(forced_int) = self.to_internal(forced) else {
            return Ok(None);
        };
        if forced.len() >= size {
            return Ok(Some(self.to_original(&forced_int)));
        }
        let mut cand = self.eligible.clone();
        for &v in &forced_int {
            cand.intersect_with(&self.adj[v]);
        }
        if let Some(allowed) = allowed {
            let mut mask = Bitset::new(self.order.len());
            for (i, &orig) in self.order.iter().enumerate() {
                if orig < allowed.capacity() && allowed.contains(orig) {
                    mask.insert(i);
                }
            }
            cand.intersect_with(&mask);
        }
        if forced.len() + cand.count() < size {
            return Ok(None);
        }
        let mut goal = Goal {
            best: Vec::new(),
            bar: size - 1,
            stop_at: Some(size),
        };
        let mut current = forced_int;
        if cand.is_empty() {
            return Ok(None);
        }
        self.expand(&mut current, cand, &mut goal)?;
        if goal.best.len() >= size {
            Ok(Some(self.to_original(&goal.best)))
        } else {
            Ok(None)
        }
    }

    /// The lexicographically smallest clique of `size` vertices by ascending
    /// original ids. `known` is any clique of that size.
    pub fn lex_smallest(&mut self, size: usize, known: &[usize]) -> Result<Vec<usize>> {
        let mut witness = known.to_vec();
        witness.sort_unstable();
        let n = self.graph.len();
        let mut chosen: Vec<usize> = Vec::with_capacity(size);
        while chosen.len() < size {
            let start = chosen.last().map_or(0, |&v| v + 1);
            let mut accepted = None;
            for u in start..n {
                if !self.graph.is_eligible(u) || !chosen.iter().all(|&c| self.graph.adjacent(c, u)) {
                    continue;
                }
                if witness.get(chosen.len()) == Some(&u) && witness.starts_with(&chosen) {
                    accepted = Some(u);
                    break;
                }
                let mut allowed = Bitset::new(n);
                for w in u + 1..n {
                    allowed.insert(w);
                }
                let mut forced = chosen.clone();
                forced.push(u);
                if let Some(found) = self.clique_containing(&forced, size, Some(&allowed))? {
                    witness = found;
                    accepted = Some(u);
                    break;
                }
            }
            match accepted {
                Some(u) => chosen.push(u),
                None => {
                    return Err(Error::Precondition(format!("no clique of size {size} exists")));
                }
            }
        }
        Ok(chosen)
    }
}

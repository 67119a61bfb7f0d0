//! The family of shifted tuples used to show `p(n,k) > c * p(n,k-1)` once
//! `n >= c * k^3`.
//!
//! For each `i` in `1..=c*k^2` and each `(a_1, ..., a_{k-1})` in `P(n,k-1)`,
//! the tuple `(i, a_1, ..., a_{k-2}, a_{k-1} - i)` is a composition of `n`
//! into `k` positive parts. Sorting it lands in `P(n,k)`, and no sorted
//! partition is hit too often, so `P(n,k)` must be large.

use super::sort_tuple;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::partition::{count_partitions, enumerate_partitions, CountTable, Partition};
use std::collections::{HashMap, HashSet};

pub const DEFAULT_MAX_TUPLES: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftMode {
    /// The family was built and every property checked on it.
    Materialized,
    /// The family was too large; only the final inequality was checked.
    CountingOnly,
}

#[derive(Debug, Clone)]
pub struct ShiftFamilyReport {
    pub n: usize,
    pub k: usize,
    pub c: usize,
    pub mode: ShiftMode,
    /// `|F|`, computed as `c * k^2 * p(n,k-1)`.
    pub family_size: u128,
    pub p_n_k: u128,
    pub p_n_km1: u128,
    /// Number of distinct sorted partitions reached, `|G|`.
    pub image_size: Option<usize>,
    /// Largest number of tuples with first entry `v` that sort to the same
    /// partition, over all reached partitions and values `v`.
    pub max_fiber: Option<usize>,
    pub disjoint: Option<bool>,
    pub cardinality: Option<bool>,
    pub positive_sum: Option<bool>,
    pub fiber_bound: Option<bool>,
    pub inequality: bool,
}

impl ShiftFamilyReport {
    /// All checks that were run passed.
    pub fn all_hold(&self) -> bool {
        [self.disjoint, self.cardinality, self.positive_sum, self.fiber_bound]
            .into_iter()
            .all(|c| c != Some(false))
            && self.inequality
    }
}

pub fn lemma2_family(n: usize, k: usize, c: usize, max_tuples: usize, limits: &Limits) -> Result<ShiftFamilyReport> {
    if k < 3 || c < 1 {
        return Err(Error::Precondition(format!("need k >= 3 and c >= 1, got k={k} c={c}")));
    }
    let k3 = c * k * k * k;
    if n < k3 {
        return Err(Error::Precondition(format!("need n >= c*k^3 = {k3}, got n={n}")));
    }
    let table = CountTable::new(n)?;
    let p_n_k = table.get(n, k);
    let p_n_km1 = table.get(n, k - 1);
    let shifts = c * k * k;
    let family_size = shifts as u128 * p_n_km1;
    let inequality = p_n_k > c as u128 * p_n_km1;

    if family_size > max_tuples as u128 {
        return Ok(ShiftFamilyReport {
            n,
            k,
            c,
            mode: ShiftMode::CountingOnly,
            family_size,
            p_n_k,
            p_n_km1,
            image_size: None,
            max_fiber: None,
            disjoint: None,
            cardinality: None,
            positive_sum: None,
            fiber_bound: None,
            inequality,
        });
    }

    let base = enumerate_partitions(n, k - 1, limits)?;
    let mut seen: HashSet<Vec<usize>> = HashSet::with_capacity(family_size as usize);
    let mut total = 0usize;
    let mut disjoint = true;
    let mut positive_sum = true;
    // (sorted partition, first entry) -> number of tuples
    let mut fibers: HashMap<(Partition, usize), usize> = HashMap::new();
    for i in 1..=shifts {
        for a in &base {
            let parts = a.parts();
            let last = parts[k - 2];
            if last <= i {
                positive_sum = false;
                continue;
            }
            let mut x = Vec::with_capacity(k);
            x.push(i);
            x.extend_from_slice(&parts[..k - 2]);
            x.push(last - i);
            total += 1;
            if x.iter().sum::<usize>() != n || x.contains(&0) {
                positive_sum = false;
            }
            let y = sort_tuple(&x)?;
            if y.n() != n || y.k() != k {
                positive_sum = false;
            }
            *fibers.entry((y, i)).or_insert(0) += 1;
            if !seen.insert(x) {
                disjoint = false;
            }
        }
    }
    let image: HashSet<&Partition> = fibers.keys().map(|(y, _)| y).collect();
    let image_size = image.len();
    let max_fiber = fibers.values().copied().max().unwrap_or(0);
    let cardinality = total as u128 == family_size && seen.len() as u128 == family_size;
    let fiber_bound = max_fiber < k;
    // |F| <= |G| k (k-1) < p(n,k) k^2
    let chain = family_size <= (image_size as u128) * (k * (k - 1)) as u128
        && (image_size as u128) * ((k * (k - 1)) as u128) < p_n_k * (k * k) as u128;
    debug_assert_eq!(count_partitions(n, k)?, p_n_k);
    Ok(ShiftFamilyReport {
        n,
        k,
        c,
        mode: ShiftMode::Materialized,
        family_size,
        p_n_k,
        p_n_km1,
        image_size: Some(image_size),
        max_fiber: Some(max_fiber),
        disjoint: Some(disjoint),
        cardinality: Some(cardinality),
        positive_sum: Some(positive_sum),
        fiber_bound: Some(fiber_bound),
        inequality: inequality && chain,
    })
}

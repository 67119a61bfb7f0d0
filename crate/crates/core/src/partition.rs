//! Integer partitions as nondecreasing tuples, their enumeration in
//! lexicographic order, and the counts `p(n, k)` and `p(n)`.

use crate::config::Limits;
use crate::error::{Error, Result};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition of `n` of length `k`: a nondecreasing tuple of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts` as a partition. The parts must already be sorted.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Precondition("a partition needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::Precondition(format!("parts must be positive: {parts:?}")));
        }
        if !parts.windows(2).all(|w| w[0] <= w[1]) {
            return Err(Error::Precondition(format!("parts must be nondecreasing: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts `parts` first; fails only on zero or empty input.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable();
        Partition::new(parts)
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The partitioned integer.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The number of parts.
    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn contains_part(&self, part: usize) -> bool {
        self.parts.binary_search(&part).is_ok()
    }

    /// Number of entries equal to `part`.
    pub fn multiplicity(&self, part: usize) -> usize {
        let lo = self.parts.partition_point(|&p| p < part);
        let hi = self.parts.partition_point(|&p| p <= part);
        hi - lo
    }

    /// True if the first `t` entries are all 1.
    pub fn starts_with_ones(&self, t: usize) -> bool {
        t <= self.parts.len() && self.parts[..t].iter().all(|&p| p == 1)
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Memoized table of `p(n, k)` for all `0 <= k <= n <= max_n`.
///
/// Entries use checked `u128` arithmetic; [`count_partitions_big`] is the
/// arbitrary-size fallback for values past that width.
#[derive(Debug, Clone)]
pub struct CountTable {
    // rows[n][k] = p(n, k), k in 0..=n
    rows: Vec<Vec<u128>>,
}

impl CountTable {
    pub fn new(max_n: usize) -> Result<Self> {
        let mut rows: Vec<Vec<u128>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![1]);
        for n in 1..=max_n {
            let mut row = vec![0u128; n + 1];
            for k in 1..=n {
                // p(n, k) = p(n-1, k-1) + p(n-k, k)
                let drop_one = rows[n - 1][k - 1];
                let shrink = if k <= n - k { rows[n - k][k] } else { 0 };
                row[k] = drop_one
                    .checked_add(shrink)
                    .ok_or_else(|| Error::Overflow(format!("p({n},{k})")))?;
            }
            rows.push(row);
        }
        Ok(CountTable { rows })
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// `p(n, k)`; zero when `k > n`. Panics if `n` exceeds the table.
    pub fn get(&self, n: usize, k: usize) -> u128 {
        assert!(n <= self.max_n(), "n = {n} beyond table size {}", self.max_n());
        self.rows[n].get(k).copied().unwrap_or(0)
    }

    /// `p(n)`, with `p(0) = 1`.
    pub fn get_all(&self, n: usize) -> Result<u128> {
        if n == 0 {
            return Ok(1);
        }
        self.rows[n][1..]
            .iter()
            .try_fold(0u128, |acc, &v| acc.checked_add(v))
            .ok_or_else(|| Error::Overflow(format!("p({n})")))
    }
}

/// `p(n, k)`, the number of partitions of `n` into exactly `k` parts.
pub fn count_partitions(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    Ok(CountTable::new(n)?.get(n, k))
}

/// `p(n)`, the number of partitions of `n`; `p(0) = 1`.
pub fn count_all(n: usize) -> Result<u128> {
    CountTable::new(n)?.get_all(n)
}

/// Arbitrary-size `p(n, k)`.
pub fn count_partitions_big(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u8);
    }
    // Same recurrence, one row of k-values per n.
    let mut rows: Vec<Vec<BigUint>> = vec![vec![BigUint::from(1u8)]];
    for m in 1..=n {
        let width = m.min(k);
        let mut row = vec![BigUint::from(0u8); width + 1];
        for j in 1..=width {
            let mut v = rows[m - 1].get(j - 1).cloned().unwrap_or_default();
            if let Some(shrink) = rows[m - j].get(j) {
                v += shrink;
            }
            row[j] = v;
        }
        rows.push(row);
    }
    rows[n][k].clone()
}

fn guard(what: impl FnOnce() -> String, size: u128, limits: &Limits) -> Result<()> {
    if size > limits.max_vertices as u128 {
        return Err(Error::ResourceGuard { what: what(), size, limit: limits.max_vertices });
    }
    Ok(())
}

/// All partitions of `n` of length `k` in lexicographic order of the parts
/// tuple. Positions in the returned list are the vertex ids used downstream.
pub fn enumerate_partitions(n: usize, k: usize, limits: &Limits) -> Result<Vec<Partition>> {
    if k == 0 || k > n {
        return Ok(Vec::new());
    }
    let size = count_partitions(n, k)?;
    guard(|| format!("P({n},{k})"), size, limits)?;
    let mut out = Vec::with_capacity(size as usize);
    let mut prefix = Vec::with_capacity(k);
    fill(n, k, 1, &mut prefix, &mut out);
    debug_assert_eq!(out.len() as u128, size);
    Ok(out)
}

// Appends every nondecreasing completion of `prefix` with `len` more parts,
// each at least `min_part`, summing to `rest`.
fn fill(rest: usize, len: usize, min_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if len == 1 {
        if rest >= min_part {
            prefix.push(rest);
            out.push(Partition::from_sorted_unchecked(prefix.clone()));
            prefix.pop();
        }
        return;
    }
    let mut part = min_part;
    while part * len <= rest {
        prefix.push(part);
        fill(rest - part, len - 1, part, prefix, out);
        prefix.pop();
        part += 1;
    }
}

/// All partitions of `n`: `P(n,1)`, then `P(n,2)`, up to `P(n,n)`.
pub fn enumerate_all(n: usize, limits: &Limits) -> Result<Vec<Partition>> {
    let size = count_all(n)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    guard(|| format!("P({n})"), size, limits)?;
    let mut out = Vec::with_capacity(size as usize);
    for k in 1..=n {
        out.extend(enumerate_partitions(n, k, limits)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // Independent oracle: all nondecreasing k-tuples over 1..=n, filtered by sum.
    fn brute(n: usize, k: usize) -> Vec<Vec<usize>> {
        fn rec(n: usize, k: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                if cur.iter().sum::<usize>() == n {
                    out.push(cur.clone());
                }
                return;
            }
            for v in min..=n {
                cur.push(v);
                rec(n, k, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, k, 1, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    #[test]
    fn p_10_3_listing() {
        let got = enumerate_partitions(10, 3, &Limits::default()).unwrap();
        let expect = [
            [1, 1, 8],
            [1, 2, 7],
            [1, 3, 6],
            [1, 4, 5],
            [2, 2, 6],
            [2, 3, 5],
            [2, 4, 4],
            [3, 3, 4],
        ];
        let got: Vec<_> = got.iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(got, expect.iter().map(|a| a.to_vec()).collect::<Vec<_>>());
        assert_eq!(brute(10, 3), got);
    }

    #[test]
    fn singleton_and_empty() {
        for n in 1..12 {
            assert_eq!(enumerate_partitions(n, 1, &Limits::default()).unwrap(), vec![p(&[n])]);
            assert_eq!(count_partitions(n, n).unwrap(), 1);
        }
        assert!(enumerate_partitions(5, 6, &Limits::default()).unwrap().is_empty());
    }

    #[test]
    fn all_lengths() {
        let l = Limits::default();
        assert_eq!(enumerate_all(5, &l).unwrap().len(), 7);
        assert_eq!(enumerate_all(1, &l).unwrap(), vec![p(&[1])]);
        let four = enumerate_all(4, &l).unwrap();
        assert_eq!(four.len(), 5);
        assert_eq!(four[0], p(&[4]));
        assert_eq!(four[4], p(&[1, 1, 1, 1]));
    }

    #[test]
    fn counts() {
        assert_eq!(count_partitions(10, 3).unwrap(), 8);
        assert_eq!(count_partitions(9, 2).unwrap(), 4);
        assert_eq!(count_partitions(0, 0).unwrap(), 1);
        assert_eq!(count_partitions(4, 0).unwrap(), 0);
        assert_eq!(count_all(5).unwrap(), 7);
        assert_eq!(count_all(0).unwrap(), 1);
        assert_eq!(count_all(14).unwrap(), 135);
        assert_eq!(enumerate_all(14, &Limits::default()).unwrap().len(), 135);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for n in 1..=14 {
            for k in 1..=n {
                let got: Vec<_> = enumerate_partitions(n, k, &Limits::default())
                    .unwrap()
                    .into_iter()
                    .map(Partition::into_parts)
                    .collect();
                assert_eq!(got, brute(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn big_counts_agree_and_overflow_is_reported() {
        let table = CountTable::new(60).unwrap();
        for k in 0..=60 {
            assert_eq!(count_partitions_big(60, k), BigUint::from(table.get(60, k)));
        }
        // p(n) exceeds u128 somewhere past n = 1400
        assert!(matches!(count_all(3000), Err(Error::Overflow(_))));
        assert_eq!(count_partitions_big(3000, 2), BigUint::from(1500u32));
        assert_eq!(count_partitions_big(3000, 3), BigUint::from(750_000u32));
    }

    #[test]
    fn guard_rejects_large_enumerations() {
        let limits = Limits { max_vertices: 10, ..Limits::default() };
        let err = enumerate_partitions(20, 4, &limits).unwrap_err();
        assert!(matches!(err, Error::ResourceGuard { size: 64, limit: 10, .. }), "{err:?}");
        assert!(enumerate_all(10, &limits).is_err());
        assert_eq!(enumerate_partitions(10, 3, &limits).unwrap().len(), 8);
    }

    #[test]
    fn constructor_validation() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![0, 1]).is_err());
        assert!(Partition::new(vec![3, 1]).is_err());
        assert_eq!(Partition::from_unsorted(vec![3, 1]).unwrap(), p(&[1, 3]));
        let a = p(&[2, 2, 5, 5, 5, 7]);
        assert_eq!(a.n(), 26);
        assert_eq!(a.k(), 6);
        assert_eq!(a.multiplicity(5), 3);
        assert_eq!(a.multiplicity(4), 0);
        assert_eq!(a.to_string(), "(2,2,5,5,5,7)");
    }
}

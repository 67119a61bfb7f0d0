//! The two intersection relations between partitions and the set encodings
//! that turn them into plain set intersections.

use crate::partition::Partition;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Pairs `(part, occurrence)`: `(v, i)` is present iff `v` occurs at least
/// `i` times. Common parts counted with multiplicity become common pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedPartSet(pub BTreeSet<(usize, usize)>);

/// The set of distinct entries of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinctPartSet(pub BTreeSet<usize>);

impl IndexedPartSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn intersection_size(&self, other: &IndexedPartSet) -> usize {
        self.0.intersection(&other.0).count()
    }
}

impl DistinctPartSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn intersection_size(&self, other: &DistinctPartSet) -> usize {
        self.0.intersection(&other.0).count()
    }
}

pub fn indexed_part_set(a: &Partition) -> IndexedPartSet {
    let mut pairs = BTreeSet::new();
    let parts = a.parts();
    let mut i = 0;
    while i < parts.len() {
        let v = parts[i];
        let mut occ = 0;
        while i < parts.len() && parts[i] == v {
            occ += 1;
            pairs.insert((v, occ));
            i += 1;
        }
    }
    IndexedPartSet(pairs)
}

pub fn distinct_parts(a: &Partition) -> DistinctPartSet {
    DistinctPartSet(a.parts().iter().copied().collect())
}

/// Size of the multiset intersection of two sorted part lists.
pub fn common_parts(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Number of distinct values shared by two sorted part lists.
pub fn distinct_common_parts(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                let v = a[i];
                count += 1;
                while i < a.len() && a[i] == v {
                    i += 1;
                }
                while j < b.len() && b[j] == v {
                    j += 1;
                }
            }
        }
    }
    count
}

/// `a` and `b` share at least `t` parts counted with multiplicity.
pub fn t_intersects(a: &Partition, b: &Partition, t: usize) -> bool {
    t == 0 || common_parts(a.parts(), b.parts()) >= t
}

/// `a` and `b` share at least `t` distinct parts.
pub fn properly_t_intersects(a: &Partition, b: &Partition, t: usize) -> bool {
    t == 0 || distinct_common_parts(a.parts(), b.parts()) >= t
}

/// Which intersection relation a family must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// Common parts counted with multiplicity.
    Multiset,
    /// Distinct common parts.
    Proper,
}

impl Relation {
    pub fn holds(self, a: &Partition, b: &Partition, t: usize) -> bool {
        match self {
            Relation::Multiset => t_intersects(a, b, t),
            Relation::Proper => properly_t_intersects(a, b, t),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Multiset => "multiset",
            Relation::Proper => "proper",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "multiset" => Ok(Relation::Multiset),
            "proper" => Ok(Relation::Proper),
            other => Err(format!("unknown relation {other:?} (expected multiset or proper)")),
        }
    }
}

/// True if every pair of members (each member with itself included) is
/// related at level `t`.
pub fn is_family(family: &[Partition], relation: Relation, t: usize) -> bool {
    family
        .iter()
        .enumerate()
        .all(|(i, a)| family[i..].iter().all(|b| relation.holds(a, b, t)))
}

//! Star families: partitions that contain a fixed pattern of parts.

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::intersection::Relation;
use crate::partition::{enumerate_all, enumerate_partitions, Partition};
use std::collections::BTreeSet;

/// A set `T` of distinct required parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartSpec {
    required: BTreeSet<usize>,
}

impl PartSpec {
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Result<Self> {
        let required: BTreeSet<usize> = parts.into_iter().collect();
        if required.is_empty() {
            return Err(Error::Precondition("part spec must be non-empty".into()));
        }
        if required.contains(&0) {
            return Err(Error::Precondition("required parts must be positive".into()));
        }
        Ok(PartSpec { required })
    }

    /// `{1, ..., t}`.
    pub fn first(t: usize) -> Result<Self> {
        PartSpec::new(1..=t)
    }

    pub fn len(&self) -> usize {
        self.required.len()
    }

    pub fn is_empty(&self) -> bool {
        self.required.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.required.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.required.iter().copied()
    }

    pub fn matches(&self, a: &Partition) -> bool {
        self.required.iter().all(|&v| a.contains_part(v))
    }

    /// Parts of `a` with one copy of each required part removed, or `None`
    /// if `a` does not contain them all.
    pub fn strip(&self, a: &Partition) -> Option<Vec<usize>> {
        let mut rest = a.parts().to_vec();
        for &v in &self.required {
            let pos = rest.binary_search(&v).ok()?;
            rest.remove(pos);
        }
        Some(rest)
    }
}

/// `P(n,k)<t>`: partitions of `n` of length `k` whose first `t` entries are 1.
pub fn star_t(n: usize, k: usize, t: usize, limits: &Limits) -> Result<Vec<Partition>> {
    if t > k {
        return Err(Error::Precondition(format!("t = {t} exceeds k = {k}")));
    }
    Ok(enumerate_partitions(n, k, limits)?
        .into_iter()
        .filter(|a| a.starts_with_ones(t))
        .collect())
}

/// `P(n,k)(T)`: partitions of `n` of length `k` having every element of `T`
/// as a part.
pub fn fixed_set_family(n: usize, k: usize, spec: &PartSpec, limits: &Limits) -> Result<Vec<Partition>> {
    if spec.len() > k {
        return Err(Error::Precondition(format!("|T| = {} exceeds k = {k}", spec.len())));
    }
    Ok(enumerate_partitions(n, k, limits)?
        .into_iter()
        .filter(|a| spec.matches(a))
        .collect())
}

/// `P(n)<t>`: the union of `P(n,i)<t>` over all lengths `i`.
pub fn star_all_lengths(n: usize, t: usize, limits: &Limits) -> Result<Vec<Partition>> {
    if t > n {
        return Err(Error::Precondition(format!("t = {t} exceeds n = {n}")));
    }
    Ok(enumerate_all(n, limits)?
        .into_iter()
        .filter(|a| a.starts_with_ones(t))
        .collect())
}

/// Whether `a` belongs to the canonical star for `relation` at level `t`:
/// `<t>` (leading ones) for the multiset relation, `([t])` for the proper one.
pub fn in_star(a: &Partition, relation: Relation, t: usize) -> bool {
    match relation {
        Relation::Multiset => a.starts_with_ones(t),
        Relation::Proper => (1..=t).all(|v| a.contains_part(v)),
    }
}

/// Vertex ids (positions in `vertices`) of the canonical star, ascending.
pub fn star_ids(vertices: &[Partition], relation: Relation, t: usize) -> Vec<usize> {
    vertices
        .iter()
        .enumerate()
        .filter(|(_, a)| in_star(a, relation, t))
        .map(|(i, _)| i)
        .collect()
}

/// Vertex ids of the members of `family` within `vertices`. Members not
/// present are skipped.
pub fn ids_of(vertices: &[Partition], family: &[Partition]) -> Vec<usize> {
    let mut ids: Vec<usize> = family
        .iter()
        .filter_map(|a| vertices.binary_search_by(|v| cmp_canonical(v, a)).ok())
        .collect();
    ids.sort_unstable();
    ids
}

// Canonical order across mixed lengths: by length, then lexicographic.
fn cmp_canonical(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    a.k().cmp(&b.k()).then_with(|| a.parts().cmp(b.parts()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{count_all, count_partitions};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn star_examples() {
        let l = Limits::default();
        let s = star_t(10, 3, 1, &l).unwrap();
        assert_eq!(s, vec![p(&[1, 1, 8]), p(&[1, 2, 7]), p(&[1, 3, 6]), p(&[1, 4, 5])]);
        assert_eq!(s.len() as u128, count_partitions(9, 2).unwrap());
        assert_eq!(star_t(5, 5, 5, &l).unwrap(), vec![p(&[1; 5])]);
        assert!(star_t(7, 5, 5, &l).unwrap().is_empty());
        assert_eq!(star_t(8, 4, 2, &l).unwrap().len(), 3);
        assert!(star_t(8, 2, 3, &l).is_err());
    }

    #[test]
    fn fixed_set_examples() {
        let l = Limits::default();
        let one = PartSpec::new([1]).unwrap();
        assert_eq!(fixed_set_family(10, 3, &one, &l).unwrap(), star_t(10, 3, 1, &l).unwrap());
        let two_three = PartSpec::new([2, 3]).unwrap();
        assert_eq!(fixed_set_family(10, 3, &two_three, &l).unwrap(), vec![p(&[2, 3, 5])]);
        for n in 1..10 {
            for k in 1..=n {
                let fam = fixed_set_family(n, k, &PartSpec::new([n]).unwrap(), &l).unwrap();
                assert_eq!(fam.len(), usize::from(k == 1));
            }
        }
        assert!(fixed_set_family(10, 1, &two_three, &l).is_err());
        assert!(PartSpec::new([]).is_err());
    }

    #[test]
    fn all_length_examples() {
        let l = Limits::default();
        assert_eq!(star_all_lengths(5, 1, &l).unwrap().len(), 5);
        assert_eq!(star_all_lengths(6, 2, &l).unwrap().len(), 5);
        assert_eq!(star_all_lengths(7, 7, &l).unwrap(), vec![p(&[1; 7])]);
        assert_eq!(star_all_lengths(9, 3, &l).unwrap().len() as u128, count_all(6).unwrap());
        assert!(star_all_lengths(3, 4, &l).is_err());
    }

    #[test]
    fn strip_is_the_size_bijection() {
        let l = Limits::default();
        let spec = PartSpec::new([1, 3]).unwrap();
        let fam = fixed_set_family(14, 5, &spec, &l).unwrap();
        let images: BTreeSet<Vec<usize>> = fam.iter().map(|a| spec.strip(a).unwrap()).collect();
        assert_eq!(images.len(), fam.len());
        let target: BTreeSet<Vec<usize>> = enumerate_partitions(10, 3, &l)
            .unwrap()
            .into_iter()
            .map(Partition::into_parts)
            .collect();
        assert_eq!(images, target);
    }

    #[test]
    fn ids_resolve_against_enumeration() {
        let l = Limits::default();
        let verts = enumerate_partitions(10, 3, &l).unwrap();
        assert_eq!(star_ids(&verts, Relation::Multiset, 1), vec![0, 1, 2, 3]);
        let fam = [p(&[2, 3, 5]), p(&[1, 2, 7])];
        assert_eq!(ids_of(&verts, &fam), vec![1, 5]);
        let all = enumerate_all(5, &l).unwrap();
        assert_eq!(ids_of(&all, &[p(&[1, 1, 1, 1, 1]), p(&[5])]), vec![0, 6]);
    }
}

use crate::error::{Error, Result};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverCase {
    /// The family is (t+1)-intersecting; `J` is its first member.
    TPlus1Intersecting,
    /// `J = A1 ∪ A2 ∪ A3` with `|A1 ∩ A2| = t` and `A1 ∩ A2 ⊄ A3`.
    ThreeSetUnion,
}

/// A set `J` meeting every member of a t-intersecting family in at least
/// `t + 1` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSetReport<E> {
    pub j: BTreeSet<E>,
    pub case: CoverCase,
    /// Indices of `A1, A2, A3` in the input family.
    pub witnesses: Option<[usize; 3]>,
}

fn meet<E: Ord>(a: &BTreeSet<E>, b: &BTreeSet<E>) -> usize {
    a.intersection(b).count()
}

/// Builds the cover set for `family`, where every member has at most `r`
/// elements and every two members share at least `t`.
///
/// Ties are broken by input order: `A1, A2` is the first pair (in
/// lexicographic index order) meeting in exactly `t` elements, and `A3` the
/// first member missing part of `A1 ∩ A2`.
pub fn lemma3_cover<E: Ord + Clone>(family: &[BTreeSet<E>], t: usize, r: usize) -> Result<CoverSetReport<E>> {
    if family.is_empty() {
        return Err(Error::Precondition("family is empty".into()));
    }
    if t == 0 {
        return Err(Error::Precondition("t must be positive".into()));
    }
    if let Some(big) = family.iter().position(|a| a.len() > r) {
        return Err(Error::Precondition(format!("member {big} has more than r = {r} elements")));
    }
    let pairs = || (0..family.len()).flat_map(|i| (i..family.len()).map(move |j| (i, j)));
    if pairs().any(|(i, j)| meet(&family[i], &family[j]) < t) {
        return Err(Error::NotIntersecting(t));
    }

    let (j, case, witnesses) = match pairs().find(|&(i, j)| meet(&family[i], &family[j]) == t) {
        None => (family[0].clone(), CoverCase::TPlus1Intersecting, None),
        Some((i1, i2)) => {
            let core: BTreeSet<E> = family[i1].intersection(&family[i2]).cloned().collect();
            let Some(i3) = family.iter().position(|a| !core.is_subset(a)) else {
                return Err(Error::TriviallyIntersecting(t));
            };
            let j: BTreeSet<E> = family[i1]
                .union(&family[i2])
                .chain(family[i3].iter())
                .cloned()
                .collect();
            (j, CoverCase::ThreeSetUnion, Some([i1, i2, i3]))
        }
    };

    let bound = (3 * r).saturating_sub(2 * t + 1);
    if j.len() > bound {
        return Err(Error::Construction(format!("|J| = {} exceeds 3r - 2t - 1 = {bound}", j.len())));
    }
    if let Some(bad) = family.iter().position(|a| meet(a, &j) < t + 1) {
        return Err(Error::Construction(format!("member {bad} meets J in fewer than {} elements", t + 1)));
    }
    Ok(CoverSetReport { j, case, witnesses })
}

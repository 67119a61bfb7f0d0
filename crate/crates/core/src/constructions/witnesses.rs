use crate::error::{Error, Result};
use crate::intersection::t_intersects;
use crate::partition::Partition;

/// Explicit partitions used in the small-`n` arguments. Each group is present
/// only when `(n, k, t)` makes it well formed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PropositionWitnesses {
    /// `n = 2k`: all twos. The only member of `P(n,k)` without a 1.
    pub all_twos: Option<Partition>,
    /// `n = 2k`: `k - 1` ones and `n - k + 1`. Disjoint from `all_twos`.
    pub ones_and_max: Option<Partition>,
    /// `n = 2k`, `k >= 4`: `k - 2` ones, then `3, n - k - 1`. Contains 1 and
    /// misses `all_twos`.
    pub ones_three_rest: Option<Partition>,
    /// `n = 2k - t + 1`, `k >= t + 1`: `t - 1` ones and `k - t + 1` twos.
    pub short_of_star: Option<Partition>,
    /// `n = 2k - t + 1`, `k >= t + 1`: `k - 1` ones and `k - t + 2`; in the
    /// `<t>` star but not t-intersecting `short_of_star`.
    pub star_blocker: Option<Partition>,
    /// `k = t + 1`, `n >= t + 3`: `t - 1` ones, `2`, `n - t - 1`; a second
    /// maximum singleton family besides the star.
    pub degenerate_alternative: Option<Partition>,
}

fn build(parts: Vec<usize>, n: usize, k: usize) -> Result<Partition> {
    let p = Partition::new(parts.clone())
        .map_err(|_| Error::Construction(format!("{parts:?} is not a partition")))?;
    if p.n() != n || p.k() != k {
        return Err(Error::Construction(format!("{p} is not in P({n},{k})")));
    }
    Ok(p)
}

pub fn proposition_witnesses(n: usize, k: usize, t: usize) -> Result<PropositionWitnesses> {
    let mut w = PropositionWitnesses::default();
    let mut any = false;

    if k >= 2 && n == 2 * k {
        any = true;
        let twos = build(vec![2; k], n, k)?;
        let mut top = vec![1; k - 1];
        top.push(n - k + 1);
        let top = build(top, n, k)?;
        if t_intersects(&twos, &top, 1) {
            return Err(Error::Construction(format!("{twos} intersects {top}")));
        }
        if k >= 4 {
            let mut a3 = vec![1; k - 2];
            a3.extend([3, n - k - 1]);
            let a3 = build(a3, n, k)?;
            if !a3.contains_part(1) || t_intersects(&a3, &twos, 1) {
                return Err(Error::Construction(format!("{a3} does not separate from {twos}")));
            }
            w.ones_three_rest = Some(a3);
        }
        w.all_twos = Some(twos);
        w.ones_and_max = Some(top);
    }

    if t >= 1 && k > t && n + t == 2 * k + 1 {
        any = true;
        let mut a = vec![1; t - 1];
        a.extend(std::iter::repeat_n(2, k - t + 1));
        let a = build(a, n, k)?;
        let mut b = vec![1; k - 1];
        b.push(k - t + 2);
        let b = build(b, n, k)?;
        if !b.starts_with_ones(t) || t_intersects(&a, &b, t) {
            return Err(Error::Construction(format!("{b} does not block {a} at level {t}")));
        }
        w.short_of_star = Some(a);
        w.star_blocker = Some(b);
    }

    if t >= 1 && k == t + 1 && n >= t + 3 {
        any = true;
        let mut d = vec![1; t - 1];
        d.extend([2, n - t - 1]);
        w.degenerate_alternative = Some(build(d, n, k)?);
    }

    if !any {
        return Err(Error::Precondition(format!("no witness construction applies to n={n} k={k} t={t}")));
    }
    Ok(w)
}

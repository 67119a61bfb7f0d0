use crate::config::Limits;
use crate::error::{Error, Result};
use crate::partition::{count_partitions, enumerate_partitions, Partition};
use std::collections::BTreeSet;

/// The map `P(m,k) -> P(n,k)` that adds `n - m` to the largest part, with
/// the facts checked about it.
#[derive(Debug, Clone)]
pub struct InjectionReport {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub map: Vec<(Partition, Partition)>,
    pub injective: bool,
    /// The partition shown to lie outside the image, when the strictness
    /// hypotheses `n > m`, `n >= k + 2`, `k >= 3` hold.
    pub strictness_witness: Option<Partition>,
}

/// Partition of `n` of length `k` whose two largest parts are equal:
/// leading ones, then `1, h, h` with `h = (n-k+2)/2` when `n - k` is even,
/// or `2, h, h` with `h = (n-k+1)/2` when it is odd.
pub fn strictness_witness(n: usize, k: usize) -> Result<Partition> {
    if k < 3 || n < k + 2 {
        return Err(Error::Precondition(format!("need k >= 3 and n >= k + 2, got n={n} k={k}")));
    }
    let mut c = vec![1; k - 3];
    if (n - k).is_multiple_of(2) {
        let h = (n - k + 2) / 2;
        c.extend([1, h, h]);
    } else {
        let h = (n - k).div_ceil(2);
        c.extend([2, h, h]);
    }
    let c = Partition::new(c)?;
    if c.n() != n || c.k() != k {
        return Err(Error::Construction(format!("witness {c} is not in P({n},{k})")));
    }
    Ok(c)
}

pub fn lemma1_injection(m: usize, n: usize, k: usize, limits: &Limits) -> Result<InjectionReport> {
    if !(1 <= k && k <= m && m <= n) {
        return Err(Error::Precondition(format!("need 1 <= k <= m <= n, got m={m} n={n} k={k}")));
    }
    let shift = n - m;
    let map: Vec<(Partition, Partition)> = enumerate_partitions(m, k, limits)?
        .into_iter()
        .map(|a| {
            let mut b = a.parts().to_vec();
            *b.last_mut().expect("k >= 1") += shift;
            (a, Partition::from_sorted_unchecked(b))
        })
        .collect();
    for (a, b) in &map {
        if b.n() != n || b.k() != k || !b.parts().windows(2).all(|w| w[0] <= w[1]) {
            return Err(Error::Construction(format!("{a} maps to {b}, not a member of P({n},{k})")));
        }
    }
    let image: BTreeSet<&Partition> = map.iter().map(|(_, b)| b).collect();
    let injective = image.len() == map.len();
    if !injective {
        return Err(Error::Construction(format!("map P({m},{k}) -> P({n},{k}) is not injective")));
    }
    if image.len() as u128 != count_partitions(m, k)? {
        return Err(Error::Construction("image size differs from p(m,k)".into()));
    }
    let strictness_witness = if n > m && n >= k + 2 && k >= 3 {
        let c = strictness_witness(n, k)?;
        if image.contains(&c) {
            return Err(Error::Construction(format!("{c} is in the image of P({m},{k})")));
        }
        Some(c)
    } else {
        None
    };
    Ok(InjectionReport { m, n, k, map, injective, strictness_witness })
}

//! Partitions, the parity-alternation predicates, conjugation, exhaustive
//! enumeration, and a counting oracle that never touches generating
//! functions.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of partitions a single enumeration may produce.
pub const DEFAULT_ENUMERATION_CAP: u64 = 100_000_000;

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Validates and wraps `parts`. The empty sequence is the partition of 0.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Sorts `parts` into decreasing order first.
    pub fn from_unsorted(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub(crate) fn from_sorted(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(!parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> Option<u64> {
        self.parts.first().copied()
    }

    pub fn smallest(&self) -> Option<u64> {
        self.parts.last().copied()
    }

    pub fn contains_part(&self, v: u64) -> bool {
        self.parts.binary_search_by(|p| v.cmp(p)).is_ok()
    }

    pub fn profile(&self) -> DistinctProfile {
        let mut values = Vec::new();
        let mut multiplicities: Vec<u64> = Vec::new();
        for &p in &self.parts {
            if values.last() == Some(&p) {
                *multiplicities.last_mut().unwrap() += 1;
            } else {
                values.push(p);
                multiplicities.push(1);
            }
        }
        DistinctProfile {
            values,
            multiplicities,
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let strs: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "{}", strs.join("+"))
    }
}

/// Distinct part values (strictly decreasing) with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctProfile {
    pub values: Vec<u64>,
    pub multiplicities: Vec<u64>,
}

impl DistinctProfile {
    pub fn to_partition(&self) -> Partition {
        let parts = self
            .values
            .iter()
            .zip(&self.multiplicities)
            .flat_map(|(&v, &m)| std::iter::repeat_n(v, m as usize))
            .collect();
        Partition::from_sorted(parts)
    }
}

/// Distinct parts alternate in parity.
pub fn is_pa(p: &Partition) -> bool {
    p.profile()
        .values
        .windows(2)
        .all(|w| (w[0] + w[1]) % 2 == 1)
}

/// Every distinct part other than the largest occurs an odd number of times.
pub fn is_postar(p: &Partition) -> bool {
    p.profile()
        .multiplicities
        .iter()
        .skip(1)
        .all(|m| m % 2 == 1)
}

pub fn is_pa_smallest_odd(p: &Partition) -> bool {
    matches!(p.smallest(), Some(s) if s % 2 == 1) && is_pa(p)
}

/// Column lengths of the Young diagram.
pub fn conjugate(p: &Partition) -> Partition {
    let largest = p.largest().unwrap_or(0);
    let mut out = Vec::with_capacity(largest as usize);
    // parts are decreasing, so the number of parts >= j shrinks as j grows
    let mut count = p.len();
    for j in 1..=largest {
        while count > 0 && p.parts[count - 1] < j {
            count -= 1;
        }
        out.push(count as u64);
    }
    Partition::from_sorted(out)
}

/// All PA partitions of `n` with the default cap.
pub fn enumerate_pa(n: u64) -> Result<Vec<Partition>> {
    enumerate_pa_capped(n, DEFAULT_ENUMERATION_CAP)
}

/// All PA partitions of `n`, in lexicographically decreasing order.
///
/// Fails with [`Error::ResourceLimit`] once more than `cap` partitions have
/// been produced.
pub fn enumerate_pa_capped(n: u64, cap: u64) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::Domain("enumerate_pa needs n >= 1".into()));
    }
    let mut out = Vec::new();
    let mut parts = Vec::new();
    pa_rec(n, n, None, &mut parts, &mut out, n, cap)?;
    Ok(out)
}

/// `bound` is the largest admissible value; `parity` the required parity of
/// the next distinct value, or `None` before the first one.
fn pa_rec(
    remaining: u64,
    bound: u64,
    parity: Option<u64>,
    parts: &mut Vec<u64>,
    out: &mut Vec<Partition>,
    n: u64,
    cap: u64,
) -> Result<()> {
    if remaining == 0 {
        if out.len() as u64 >= cap {
            return Err(Error::ResourceLimit { n, cap });
        }
        out.push(Partition::from_sorted(parts.clone()));
        return Ok(());
    }
    let mut v = bound.min(remaining);
    if let Some(par) = parity {
        if v % 2 != par {
            v = v.saturating_sub(1);
        }
    }
    let step = if parity.is_some() { 2 } else { 1 };
    while v >= 1 {
        let base = parts.len();
        let max_mult = remaining / v;
        for m in (1..=max_mult).rev() {
            parts.truncate(base);
            parts.extend(std::iter::repeat_n(v, m as usize));
            pa_rec(
                remaining - m * v,
                v - 1,
                Some((v + 1) % 2),
                parts,
                out,
                n,
                cap,
            )?;
        }
        parts.truncate(base);
        if v < step {
            break;
        }
        v -= step;
    }
    Ok(())
}

/// Every partition of `n`, lexicographically decreasing.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    all_rec(n, n, &mut parts, &mut out);
    out
}

fn all_rec(remaining: u64, bound: u64, parts: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(parts.clone()));
        return;
    }
    for v in (1..=bound.min(remaining)).rev() {
        parts.push(v);
        all_rec(remaining - v, v, parts, out);
        parts.pop();
    }
}

/// `pa(1), ..., pa(n_max)` by dynamic programming over distinct part values.
///
/// `f[s][v]` counts PA partitions of `s` with largest part `v`; it is the sum
/// over multiplicities `m` of the number of PA partitions of `s - m v` whose
/// parts are all below `v` and whose largest part has the other parity. The
/// table `e[t][w]` holds the running sums `f[t][w] + f[t][w-2] + ...`, which
/// answers that question in one lookup.
pub fn count_pa_dp(n_max: usize) -> Vec<BigUint> {
    let mut e: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
    e.push(vec![BigUint::zero()]);
    let one = BigUint::from(1u32);
    // PA partitions of t with largest part <= w and of w's parity
    let lookup = |e: &Vec<Vec<BigUint>>, t: usize, w: usize| -> BigUint {
        if w == 0 || t == 0 {
            return BigUint::zero();
        }
        let w = if w <= t {
            w
        } else if (t % 2) == (w % 2) {
            t
        } else {
            t - 1
        };
        if w == 0 {
            BigUint::zero()
        } else {
            e[t][w].clone()
        }
    };
    let mut counts = Vec::with_capacity(n_max);
    for s in 1..=n_max {
        let mut row = vec![BigUint::zero(); s + 1];
        for v in 1..=s {
            let mut f = BigUint::zero();
            let mut rest = s;
            while rest >= v {
                rest -= v;
                if rest == 0 {
                    f += &one;
                } else {
                    f += lookup(&e, rest, v - 1);
                }
            }
            let below = if v >= 2 {
                row[v - 2].clone()
            } else {
                BigUint::zero()
            };
            row[v] = below + f;
        }
        counts.push(&row[s] + &row[s - 1]);
        e.push(row);
    }
    counts
}

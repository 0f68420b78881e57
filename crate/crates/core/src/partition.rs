//! Integer partitions.
//!
//! Partitions of a fixed weight are always enumerated in reverse-lexicographic
//! order: `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`. This order is relied upon by
//! the basis conversions in [`crate::symfunc`] and by every witness tie-break,
//! so it is part of the public contract.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive integers.
///
/// `Ord` is plain lexicographic order on the parts; enumeration order is the
/// reverse of it (see [`partitions_of`]).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    /// Builds a partition from parts that are already weakly decreasing and
    /// positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let weight = parts.iter().sum();
        Ok(Partition { parts, weight })
    }

    /// Sorts arbitrary positive sizes into a partition. Zeros are dropped.
    pub fn from_sizes<I: IntoIterator<Item = usize>>(sizes: I) -> Self {
        let mut parts: Vec<usize> = sizes.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The i-th part (0-based), with 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.largest();
        let parts = (1..=cols)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect::<Vec<_>>();
        Partition { parts, weight: self.weight }
    }

    /// Dominance order on partitions of equal weight.
    ///
    /// Prefix sums are compared up to `min(ℓ(λ), ℓ(μ))`; past that point the
    /// shorter partition has already reached the full weight, so the comparison
    /// agrees with the usual zero-padded definition.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.weight != other.weight {
            return Err(Error::WeightMismatch { expected: self.weight, found: other.weight });
        }
        let k = self.len().min(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..k {
            a += self.parts[i];
            b += other.parts[i];
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiplicity of each part size: `(size, count)` with sizes decreasing.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((s, c)) if *s == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union (parts of both, re-sorted).
    pub fn union(&self, other: &Partition) -> Partition {
        Partition::from_sizes(self.parts.iter().chain(other.parts.iter()).copied())
    }

    /// Renders with exponents, e.g. `3,2^2`.
    pub fn to_exponent_string(&self) -> String {
        self.multiplicities()
            .into_iter()
            .map(|(s, c)| if c == 1 { s.to_string() } else { format!("{s}^{c}") })
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Renders as a plain comma list, e.g. `3,2,2`. Used as a JSON key.
    pub fn to_plain_string(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// `(3,2^2)` style.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_exponent_string())
    }
}

/// Accepts `4,3,1`, `4,3,1^2`, optional parentheses and whitespace. Parts may
/// be given in any order; they are sorted.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let bad = || Error::Parse(format!("invalid partition `{s}`"));
        let mut sizes = Vec::new();
        for tok in t.split(',') {
            let tok = tok.trim();
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim().parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let base = base.parse::<usize>().map_err(|_| bad())?;
            if base == 0 {
                return Err(bad());
            }
            sizes.extend(std::iter::repeat_n(base, exp));
        }
        Ok(Partition::from_sizes(sizes))
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: prefix.clone(), weight: prefix.iter().sum() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with exactly `k` parts, reverse-lexicographic.
pub fn partitions_with_parts(n: usize, k: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| p.len() == k).collect()
}

/// Number of partitions of `n` by Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> u128 {
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total: i128 = 0;
        for k in 1.. {
            let k = k as i64;
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1] as i128;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                total += sign * p[m - g2] as i128;
            }
        }
        p[m] = total as u128;
    }
    p[n]
}

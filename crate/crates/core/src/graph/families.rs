//! Named graph families with fixed vertex labelings.
//!
//! * path `P_n`: `0 - 1 - ... - (n-1)`.
//! * star `S_n`: centre `0`, leaves `1..n`.
//! * complete `K_n`: all pairs.
//! * spider `S(λ)`: centre `0`; leg `k` occupies a consecutive block, its
//!   first vertex adjacent to the centre and its last vertex a leaf. Legs are
//!   laid out in the partition's (decreasing) order.
//! * windmill `W^d_n`: common vertex `0`; copy `k` of `K_n` uses `0` plus the
//!   block `1 + k(n-1) .. 1 + (k+1)(n-1)`.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Leg lengths of a spider: a partition with at least three parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpiderSpec {
    legs: Partition,
}

impl SpiderSpec {
    pub fn new(legs: Partition) -> Result<Self> {
        if legs.len() < 3 {
            return Err(Error::InvalidGraph(format!("a spider needs at least 3 legs, got {legs}")));
        }
        Ok(SpiderSpec { legs })
    }

    pub fn from_legs<I: IntoIterator<Item = usize>>(legs: I) -> Result<Self> {
        let raw: Vec<usize> = legs.into_iter().collect();
        if raw.contains(&0) {
            return Err(Error::InvalidGraph("spider legs must have positive length".into()));
        }
        SpiderSpec::new(Partition::from_sizes(raw))
    }

    pub fn legs(&self) -> &Partition {
        &self.legs
    }

    /// Number of legs, the degree of the centre.
    pub fn degree(&self) -> usize {
        self.legs.len()
    }

    /// Total vertex count `1 + Σ legs`.
    pub fn n(&self) -> usize {
        1 + self.legs.weight()
    }
}

impl fmt::Display for SpiderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({})", self.legs.to_plain_string())
    }
}

impl FromStr for SpiderSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('S').unwrap_or(t);
        SpiderSpec::new(t.parse()?)
    }
}

pub fn make_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidGraph("a path needs at least one vertex".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn make_star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidGraph("a star needs at least one vertex".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (0, i)))
}

pub fn make_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidGraph("a complete graph needs at least one vertex".into()));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn make_spider(spec: &SpiderSpec) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in spec.legs().parts() {
        edges.push((0, next));
        for k in 1..len {
            edges.push((next + k - 1, next + k));
        }
        next += len;
    }
    Graph::from_edges(spec.n(), edges)
}

/// `d` copies of `K_n` sharing vertex 0; `d(n-1) + 1` vertices.
pub fn make_windmill(d: usize, n: usize) -> Result<Graph> {
    if d == 0 || n == 0 {
        return Err(Error::InvalidGraph("windmill needs d >= 1 and n >= 1".into()));
    }
    let blade = n - 1;
    let total = d * blade + 1;
    let mut edges = Vec::new();
    for k in 0..d {
        let block: Vec<usize> = std::iter::once(0).chain((0..blade).map(|i| 1 + k * blade + i)).collect();
        for a in 0..block.len() {
            for b in a + 1..block.len() {
                edges.push((block[a], block[b]));
            }
        }
    }
    Graph::from_edges(total, edges)
}

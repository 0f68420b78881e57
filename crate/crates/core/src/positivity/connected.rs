use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{partitions_of, Partition};

/// Reusable connected-partition search for one graph.
///
/// A search state is the set of unused vertices plus the multiset of block
/// sizes still to place, and its outcome does not depend on which type was
/// asked for originally. Failed states are therefore shared across queries.
pub struct ConnectedPartitionSearch<'g> {
    g: &'g Graph,
    weight: Vec<u128>,
    failed: HashSet<(u64, u128)>,
}

impl<'g> ConnectedPartitionSearch<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let mut weight = vec![0u128; n + 1];
        let mut w = 1u128;
        for (s, slot) in weight.iter_mut().enumerate().skip(1) {
            *slot = w;
            w = w.saturating_mul((n / s + 1) as u128);
        }
        ConnectedPartitionSearch { g, weight, failed: HashSet::new() }
    }

    pub fn has_type(&mut self, mu: &Partition) -> Result<bool> {
        let n = self.g.n();
        if mu.weight() != n {
            return Err(Error::WeightMismatch { expected: n, found: mu.weight() });
        }
        if n == 0 {
            return Ok(true);
        }
        let mut counts = vec![0u8; n + 1];
        let mut key = 0u128;
        for &p in mu.parts() {
            counts[p] += 1;
            key += self.weight[p];
        }
        Ok(self.solve(self.g.full_mask(), &mut counts, key))
    }

    fn solve(&mut self, unused: u64, counts: &mut [u8], key: u128) -> bool {
        if unused == 0 {
            return true;
        }
        if self.failed.contains(&(unused, key)) || !self.components_tileable(unused, counts) {
            return false;
        }
        let g = self.g;
        let v = unused.trailing_zeros() as usize;
        for size in (1..counts.len()).rev() {
            if counts[size] == 0 {
                continue;
            }
            counts[size] -= 1;
            let key_after = key - self.weight[size];
            let found = for_each_connected_set(g, v, unused, size, &mut |block| {
                self.solve(unused & !block, counts, key_after)
            });
            counts[size] += 1;
            if found {
                return true;
            }
        }
        self.failed.insert((unused, key));
        false
    }

    /// Every component of the unused subgraph must be a sum of remaining sizes.
    fn components_tileable(&self, unused: u64, counts: &[u8]) -> bool {
        let mut sums = 1u128;
        for (size, &c) in counts.iter().enumerate().skip(1) {
            for _ in 0..c {
                sums |= sums << size;
            }
        }
        self.g
            .components_within(unused)
            .into_iter()
            .all(|comp| sums >> comp.count_ones() & 1 == 1)
    }
}

/// Calls `f` on each connected vertex set of `size` containing `v` inside
/// `allowed`, each exactly once, stopping as soon as `f` returns true.
///
/// Boundary vertices are either taken or permanently excluded, lowest first,
/// which is the usual include/exclude scheme that avoids duplicates.
pub(crate) fn for_each_connected_set(
    g: &Graph,
    v: usize,
    allowed: u64,
    size: usize,
    f: &mut dyn FnMut(u64) -> bool,
) -> bool {
    fn grow(g: &Graph, set: u64, excluded: u64, allowed: u64, size: usize, f: &mut dyn FnMut(u64) -> bool) -> bool {
        let have = set.count_ones() as usize;
        if have == size {
            return f(set);
        }
        let open = allowed & !excluded;
        if (g.reach(set, open).count_ones() as usize) < size {
            return false;
        }
        let mut boundary = 0u64;
        for u in crate::graph::bits(set) {
            boundary |= g.neighbor_mask(u);
        }
        boundary &= open & !set;
        if boundary == 0 {
            return false;
        }
        let u = boundary.trailing_zeros();
        grow(g, set | 1 << u, excluded, allowed, size, f) || grow(g, set, excluded | 1 << u, allowed, size, f)
    }
    if allowed & (1 << v) == 0 || size == 0 {
        return false;
    }
    grow(g, 1 << v, 0, allowed, size, f)
}

/// Whether `V` splits into connected blocks with sizes `mu`.
pub fn has_connected_partition(g: &Graph, mu: &Partition) -> Result<bool> {
    ConnectedPartitionSearch::new(g).has_type(mu)
}

/// The first type in enumeration order with no connected partition.
pub fn missing_connected_type(g: &Graph) -> Result<Option<Partition>> {
    let mut search = ConnectedPartitionSearch::new(g);
    for mu in partitions_of(g.n()) {
        if !search.has_type(&mu)? {
            return Ok(Some(mu));
        }
    }
    Ok(None)
}

/// All types with no connected partition, in enumeration order.
pub fn missing_connected_types(g: &Graph) -> Result<Vec<Partition>> {
    let mut search = ConnectedPartitionSearch::new(g);
    let mut out = Vec::new();
    for mu in partitions_of(g.n()) {
        if !search.has_type(&mu)? {
            out.push(mu);
        }
    }
    Ok(out)
}

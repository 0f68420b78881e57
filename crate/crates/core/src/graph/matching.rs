use std::collections::HashSet;

use super::{bits, Graph};

/// Perfect matching test. Forests use greedy leaf matching; other graphs an
/// exhaustive search over the lowest unmatched vertex with failed states
/// memoized. Odd `n` is always `false`.
pub fn has_perfect_matching(g: &Graph) -> bool {
    if g.n() % 2 == 1 {
        return false;
    }
    perfect_within(g, g.full_mask())
}

/// Some single vertex deletion leaves a perfectly matchable graph. Even `n`
/// is always `false`.
pub fn has_almost_perfect_matching(g: &Graph) -> bool {
    if g.n().is_multiple_of(2) {
        return false;
    }
    let full = g.full_mask();
    (0..g.n()).any(|v| perfect_within(g, full & !(1 << v)))
}

fn perfect_within(g: &Graph, mask: u64) -> bool {
    if mask.count_ones() % 2 == 1 {
        return false;
    }
    if g.is_forest() {
        greedy_forest(g, mask)
    } else {
        let mut failed = HashSet::new();
        search(g, mask, &mut failed)
    }
}

/// In a forest a leaf must be matched to its unique neighbour.
fn greedy_forest(g: &Graph, mut mask: u64) -> bool {
    while mask != 0 {
        let mut progressed = false;
        for v in bits(mask) {
            if mask & (1 << v) == 0 {
                continue;
            }
            let nb = g.neighbor_mask(v) & mask;
            match nb.count_ones() {
                0 => return false,
                1 => {
                    mask &= !(1 << v) & !nb;
                    progressed = true;
                }
                _ => {}
            }
        }
        if !progressed {
            // no leaves left in a nonempty forest is impossible
            unreachable!("greedy leaf matching called on a graph with a cycle");
        }
    }
    true
}

fn search(g: &Graph, mask: u64, failed: &mut HashSet<u64>) -> bool {
    if mask == 0 {
        return true;
    }
    if failed.contains(&mask) {
        return false;
    }
    let v = mask.trailing_zeros() as usize;
    let rest = mask & !(1 << v);
    for u in bits(g.neighbor_mask(v) & rest) {
        if search(g, rest & !(1 << u), failed) {
            return true;
        }
    }
    failed.insert(mask);
    false
}

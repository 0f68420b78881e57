use super::{bits, Graph, SpiderSpec};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Components of `G − v` as sorted vertex lists, largest first (ties by lowest
/// vertex).
pub fn cut_vertex_components(g: &Graph, v: usize) -> Result<Vec<Vec<usize>>> {
    g.check_vertex(v)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut comps: Vec<Vec<usize>> = g
        .components_within(g.full_mask() & !(1 << v))
        .into_iter()
        .map(|m| bits(m).collect())
        .collect();
    comps.sort_by(|a: &Vec<usize>, b: &Vec<usize>| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    Ok(comps)
}

/// The spider whose legs are the component sizes of `G − v`.
///
/// Every connected-partition type of `G` is also a type of this spider, so a
/// type missing from the spider is missing from `G`.
pub fn spider_reduction(g: &Graph, v: usize) -> Result<SpiderSpec> {
    let comps = cut_vertex_components(g, v)?;
    if comps.len() < 3 {
        return Err(Error::TooFewComponents { vertex: v, components: comps.len() });
    }
    SpiderSpec::new(Partition::from_sizes(comps.iter().map(Vec::len)))
}

/// Colour-class sizes `(larger, smaller)` of each component's 2-colouring,
/// components ordered by lowest vertex; `None` if some cycle is odd.
pub fn is_bipartite_with_parts(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let mut colour = vec![u8::MAX; g.n()];
    let mut out = Vec::new();
    for comp in g.components_within(g.full_mask()) {
        let start = comp.trailing_zeros() as usize;
        colour[start] = 0;
        let mut stack = vec![start];
        let mut sizes = [0usize; 2];
        while let Some(u) = stack.pop() {
            sizes[colour[u] as usize] += 1;
            for w in g.neighbors(u) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[u];
                    stack.push(w);
                } else if colour[w] == colour[u] {
                    return None;
                }
            }
        }
        out.push((sizes[0].max(sizes[1]), sizes[0].min(sizes[1])));
    }
    Some(out)
}

/// A 2-colouring as a mask of the vertices coloured 1, if one exists.
pub(crate) fn two_colouring(g: &Graph) -> Option<u64> {
    let mut colour = vec![u8::MAX; g.n()];
    let mut ones = 0u64;
    for comp in g.components_within(g.full_mask()) {
        let start = comp.trailing_zeros() as usize;
        colour[start] = 0;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[u];
                    if colour[w] == 1 {
                        ones |= 1 << w;
                    }
                    stack.push(w);
                } else if colour[w] == colour[u] {
                    return None;
                }
            }
        }
    }
    Some(ones)
}

/// True iff some vertex has three pairwise non-adjacent neighbours (an induced
/// `S_4`).
pub fn contains_claw(g: &Graph) -> bool {
    (0..g.n()).any(|v| {
        let nb: Vec<usize> = g.neighbors(v).collect();
        for a in 0..nb.len() {
            for b in a + 1..nb.len() {
                if g.has_edge(nb[a], nb[b]) {
                    continue;
                }
                for c in b + 1..nb.len() {
                    if !g.has_edge(nb[a], nb[c]) && !g.has_edge(nb[b], nb[c]) {
                        return true;
                    }
                }
            }
        }
        false
    })
}

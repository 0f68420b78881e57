use crate::error::{Error, Result};
use crate::graph::{is_bipartite_with_parts, Graph};
use crate::partition::{partitions_of, Partition};

/// Whether `V` splits into independent sets with sizes `mu`.
///
/// One- and two-part types are decided in closed form (edgeless, or a
/// subset-sum over the colour classes of each component). Longer types use a
/// backtracking colour-class assignment, highest-degree vertex first.
pub fn has_stable_partition(g: &Graph, mu: &Partition) -> Result<bool> {
    let n = g.n();
    if mu.weight() != n {
        return Err(Error::WeightMismatch { expected: n, found: mu.weight() });
    }
    match mu.len() {
        0 => return Ok(true),
        1 => return Ok(g.edge_count() == 0),
        2 => return Ok(two_part(g, mu.part(0))),
        _ => {}
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut search = ClassSearch {
        g,
        order,
        target: mu.parts().to_vec(),
        members: vec![0; mu.len()],
        fill: vec![0; mu.len()],
    };
    Ok(search.assign(0))
}

fn two_part(g: &Graph, a: usize) -> bool {
    let Some(classes) = is_bipartite_with_parts(g) else {
        return false;
    };
    let mut sums = 1u128;
    for (x, y) in classes {
        sums = (sums << x) | (sums << y);
    }
    sums >> a & 1 == 1
}

struct ClassSearch<'g> {
    g: &'g Graph,
    order: Vec<usize>,
    target: Vec<usize>,
    members: Vec<u64>,
    fill: Vec<usize>,
}

impl ClassSearch<'_> {
    fn assign(&mut self, idx: usize) -> bool {
        let Some(&v) = self.order.get(idx) else {
            return true;
        };
        let nb = self.g.neighbor_mask(v);
        for j in 0..self.target.len() {
            if self.fill[j] == self.target[j] || self.members[j] & nb != 0 {
                continue;
            }
            // empty classes of equal size are interchangeable
            if self.fill[j] == 0 && (0..j).any(|k| self.fill[k] == 0 && self.target[k] == self.target[j]) {
                continue;
            }
            self.members[j] |= 1 << v;
            self.fill[j] += 1;
            let ok = self.assign(idx + 1);
            self.members[j] &= !(1 << v);
            self.fill[j] -= 1;
            if ok {
                return true;
            }
        }
        false
    }
}

/// The stable types of `G`, one flag per partition in enumeration order.
pub fn stable_types(g: &Graph) -> Result<Vec<(Partition, bool)>> {
    partitions_of(g.n())
        .into_iter()
        .map(|mu| has_stable_partition(g, &mu).map(|ok| (mu, ok)))
        .collect()
}

/// A stable type `λ` that is present together with a type `μ` it dominates
/// that is missing. `λ` is the first present type (in enumeration order) that
/// has such a `μ`, and `μ` the first missing one below it.
pub fn schur_dominance_violation(g: &Graph) -> Result<Option<(Partition, Partition)>> {
    let types = stable_types(g)?;
    for (i, (lambda, present)) in types.iter().enumerate() {
        if !present {
            continue;
        }
        // anything λ dominates comes after it in reverse-lexicographic order
        for (mu, ok) in &types[i + 1..] {
            if !ok && lambda.dominates(mu)? {
                return Ok(Some((lambda.clone(), mu.clone())));
            }
        }
    }
    Ok(None)
}

//! Chromatic symmetric functions.
//!
//! The production route is the edge-subset expansion
//! `X_G = Σ_{S ⊆ E} (−1)^{|S|} p_{λ(S)}`, where `λ(S)` lists the component
//! sizes of the spanning subgraph `(V, S)`. The subset range is split across
//! rayon workers; each accumulates a private tally and the tallies are summed,
//! so the result does not depend on the split.
//!
//! [`csf_coloring_oracle`] counts proper colourings directly and is kept as an
//! independent check for small graphs.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::Partition;
use crate::symfunc::{Basis, Rational, SymFunc};

/// Edge count accepted by [`chromatic_symmetric_function`].
pub const DEFAULT_MAX_EDGES: usize = 26;

/// Vertex bound of the colouring oracle (it visits up to `n^n` colourings).
pub const ORACLE_MAX_VERTICES: usize = 7;

const CHUNK_BITS: u32 = 12;

/// `X_G` in the power-sum basis, with the default edge bound.
pub fn chromatic_symmetric_function(g: &Graph) -> Result<SymFunc> {
    chromatic_symmetric_function_bounded(g, DEFAULT_MAX_EDGES)
}

pub fn chromatic_symmetric_function_bounded(g: &Graph, max_edges: usize) -> Result<SymFunc> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidGraph("the chromatic symmetric function needs n >= 1".into()));
    }
    let edges = g.edges();
    let m = edges.len();
    if m > max_edges || m > 62 {
        return Err(Error::SizeBound(format!("{m} edges exceeds the bound of {max_edges}")));
    }
    let codec = TypeCodec::new(n);
    let total: u64 = 1 << m;
    let chunk: u64 = 1 << CHUNK_BITS.min(m as u32);
    let tally = (0..total / chunk)
        .into_par_iter()
        .fold(HashMap::<u128, i64>::new, |mut acc, c| {
            let mut parent = [0u8; 64];
            let mut size = [0u8; 64];
            for subset in c * chunk..(c + 1) * chunk {
                for v in 0..n {
                    parent[v] = v as u8;
                    size[v] = 1;
                }
                let mut s = subset;
                while s != 0 {
                    let i = s.trailing_zeros() as usize;
                    s &= s - 1;
                    let (a, b) = edges[i];
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        let (big, small) = if size[ra] >= size[rb] { (ra, rb) } else { (rb, ra) };
                        parent[small] = big as u8;
                        size[big] += size[small];
                    }
                }
                let mut key = 0u128;
                for v in 0..n {
                    if parent[v] as usize == v {
                        key += codec.weight[size[v] as usize];
                    }
                }
                let sign = if subset.count_ones() % 2 == 0 { 1 } else { -1 };
                *acc.entry(key).or_insert(0) += sign;
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let mut f = SymFunc::zero(Basis::P, n);
    for (key, c) in tally {
        f.add_term(codec.decode(key), Rational::from_integer(BigInt::from(c)))?;
    }
    Ok(f)
}

fn find(parent: &mut [u8; 64], mut x: usize) -> usize {
    while parent[x] as usize != x {
        let up = parent[parent[x] as usize];
        parent[x] = up;
        x = up as usize;
    }
    x
}

/// Mixed-radix encoding of a component-size multiset: the count of size `s`
/// is at most `n / s`, so digit `s` uses radix `n / s + 1`.
struct TypeCodec {
    n: usize,
    weight: Vec<u128>,
}

impl TypeCodec {
    fn new(n: usize) -> Self {
        let mut weight = vec![0u128; n + 1];
        let mut w = 1u128;
        for (s, slot) in weight.iter_mut().enumerate().skip(1) {
            *slot = w;
            w = w.checked_mul((n / s + 1) as u128).expect("component-type code overflows u128");
        }
        TypeCodec { n, weight }
    }

    fn decode(&self, mut key: u128) -> Partition {
        let mut sizes = Vec::new();
        for s in (1..=self.n).rev() {
            let c = key / self.weight[s];
            key %= self.weight[s];
            sizes.extend(std::iter::repeat_n(s, c as usize));
        }
        Partition::from_sizes(sizes)
    }
}

/// `X_G` in the monomial basis from proper colourings `V → {1..n}`.
///
/// The coefficient of `m_μ` is the number of proper colourings whose colour
/// counts are exactly `(μ₁, μ₂, …, 0, …)`, i.e. the colourings whose count
/// vector is weakly decreasing. Degree-`n` functions are determined by their
/// expansion in `n` variables, so nothing is lost.
pub fn csf_coloring_oracle(g: &Graph) -> Result<SymFunc> {
    let n = g.n();
    if n == 0 || n > ORACLE_MAX_VERTICES {
        return Err(Error::SizeBound(format!("colouring oracle needs 1 <= n <= {ORACLE_MAX_VERTICES}, got {n}")));
    }
    let mut tally: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut colour = vec![0usize; n];
    let mut counts = vec![0usize; n];
    fn assign(
        g: &Graph,
        v: usize,
        colour: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        tally: &mut HashMap<Vec<usize>, u64>,
    ) {
        let n = g.n();
        if v == n {
            if counts.windows(2).all(|w| w[0] >= w[1]) {
                *tally.entry(counts.clone()).or_insert(0) += 1;
            }
            return;
        }
        for c in 0..n {
            if g.neighbors(v).any(|u| u < v && colour[u] == c) {
                continue;
            }
            colour[v] = c;
            counts[c] += 1;
            assign(g, v + 1, colour, counts, tally);
            counts[c] -= 1;
        }
    }
    assign(g, 0, &mut colour, &mut counts, &mut tally);
    let mut f = SymFunc::zero(Basis::M, n);
    for (counts, c) in tally {
        f.add_term(Partition::from_sizes(counts), Rational::from_integer(BigInt::from(c)))?;
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_path, make_spider, make_star};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sf(basis: Basis, terms: &[(&str, i64)]) -> SymFunc {
        let n = p(terms[0].0).weight();
        SymFunc::from_terms(basis, n, terms.iter().map(|(k, c)| (p(k), Rational::from_integer((*c).into()))))
            .unwrap()
    }

    #[test]
    fn power_sum_examples() {
        let k1 = make_complete(1).unwrap();
        assert_eq!(chromatic_symmetric_function(&k1).unwrap(), sf(Basis::P, &[("1", 1)]));
        let p2 = make_path(2).unwrap();
        assert_eq!(chromatic_symmetric_function(&p2).unwrap(), sf(Basis::P, &[("1,1", 1), ("2", -1)]));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(csf_coloring_oracle(&make_path(2).unwrap()).unwrap(), sf(Basis::M, &[("1,1", 2)]));
        assert_eq!(csf_coloring_oracle(&make_complete(3).unwrap()).unwrap(), sf(Basis::M, &[("1,1,1", 6)]));
        let s4 = make_star(4).unwrap();
        let fast = chromatic_symmetric_function(&s4).unwrap().to_basis(Basis::M).unwrap();
        assert_eq!(csf_coloring_oracle(&s4).unwrap(), fast);
        assert!(csf_coloring_oracle(&make_path(8).unwrap()).is_err());
    }

    #[test]
    fn spider_four_one_one_in_e() {
        let g = make_spider(&"4,1,1".parse().unwrap()).unwrap();
        let e = chromatic_symmetric_function(&g).unwrap().to_basis(Basis::E).unwrap();
        assert_eq!(e.coeff(&p("4,3")), Rational::from_integer(17.into()));
        assert_eq!(e.coeff(&p("5,1,1")), Rational::from_integer(4.into()));
        assert_eq!(e.len(), 10);
    }

    #[test]
    fn edge_bound_is_enforced() {
        let k8 = make_complete(8).unwrap();
        assert!(matches!(chromatic_symmetric_function(&k8), Err(Error::SizeBound(_))));
        let k6 = make_complete(6).unwrap();
        assert!(chromatic_symmetric_function_bounded(&k6, 14).is_err());
        assert!(chromatic_symmetric_function_bounded(&k6, 15).is_ok());
    }

    #[test]
    fn type_codec_round_trips() {
        for n in 1..=12 {
            let codec = TypeCodec::new(n);
            for lam in crate::partition::partitions_of(n) {
                let key: u128 = lam.parts().iter().map(|&s| codec.weight[s]).sum();
                assert_eq!(codec.decode(key), lam);
            }
        }
        TypeCodec::new(64);
    }
}

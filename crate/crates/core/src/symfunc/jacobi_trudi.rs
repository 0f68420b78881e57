use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Basis, Rational, SymFunc};
use crate::partition::Partition;

/// `s_λ = det(e_{λᵗᵢ − i + j})` over `1 ≤ i, j ≤ λ₁`, expanded symbolically in
/// the elementary basis with `e₀ = 1` and `e_k = 0` for `k < 0`.
///
/// The determinant is a sum over permutations computed row by row, keyed on
/// the set of columns already used; the sign of a partial permutation is
/// tracked by counting inversions as each column is placed.
pub fn jacobi_trudi_s_in_e(lambda: &Partition) -> SymFunc {
    let n = lambda.weight();
    let conj = lambda.transpose();
    let k = conj.len();
    assert!(k < 64, "Jacobi–Trudi matrix too large");
    // state: used-column mask -> (multiset of e-indices) -> coefficient
    let mut layer: HashMap<u64, BTreeMap<Vec<usize>, BigInt>> = HashMap::new();
    layer.insert(0, BTreeMap::from([(Vec::new(), BigInt::from(1))]));
    for i in 0..k {
        let mut next: HashMap<u64, BTreeMap<Vec<usize>, BigInt>> = HashMap::new();
        for (mask, poly) in &layer {
            for j in 0..k {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let idx = conj.part(i) as i64 - i as i64 + j as i64;
                if idx < 0 {
                    continue;
                }
                let above = (mask >> (j + 1)).count_ones();
                let negate = above % 2 == 1;
                let slot = next.entry(mask | (1 << j)).or_default();
                for (mono, c) in poly {
                    let mut m = mono.clone();
                    if idx > 0 {
                        let pos = m.partition_point(|&x| x > idx as usize);
                        m.insert(pos, idx as usize);
                    }
                    let e = slot.entry(m).or_insert_with(BigInt::zero);
                    if negate {
                        *e -= c;
                    } else {
                        *e += c;
                    }
                }
            }
        }
        for poly in next.values_mut() {
            poly.retain(|_, c| !c.is_zero());
        }
        layer = next;
    }
    let full = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let terms = layer.remove(&full).unwrap_or_default();
    SymFunc::from_terms(
        Basis::E,
        n,
        terms.into_iter().map(|(m, c)| (Partition::from_sizes(m), Rational::from_integer(c))),
    )
    .expect("every Jacobi–Trudi term has weight |λ|")
}

//! Missing connected-partition witnesses for spiders.
//!
//! Every rule here is constructive: given leg lengths it either returns a
//! partition type that the spider provably cannot be cut into connected
//! pieces of, or nothing. A missing type certifies that the spider is not
//! e-positive. [`spider_e_negativity_decision`] chains the rules in a fixed
//! order, and is guaranteed to find a witness whenever the centre degree `d`
//! satisfies `2^(d−1) ≥ n`.
//!
//! Leg indices in parameters are 1-based, legs sorted decreasingly, matching
//! the usual `λ₁ ≥ λ₂ ≥ … ≥ λ_d` notation.

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::SpiderSpec;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatchingClass {
    /// Exactly one odd leg.
    Perfect,
    /// Zero or two odd legs.
    Almost,
    /// Three or more odd legs.
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpiderRule {
    ShortLegs,
    Induction,
    Quotient1,
    Quotient2,
    Quotient3,
    Matching,
}

impl SpiderRule {
    pub fn name(self) -> &'static str {
        match self {
            SpiderRule::ShortLegs => "SHORT_LEGS",
            SpiderRule::Induction => "INDUCTION",
            SpiderRule::Quotient1 => "QUOTIENT_1",
            SpiderRule::Quotient2 => "QUOTIENT_2",
            SpiderRule::Quotient3 => "QUOTIENT_3",
            SpiderRule::Matching => "MATCHING",
        }
    }
}

impl fmt::Display for SpiderRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpiderWitness {
    pub spec: SpiderSpec,
    pub missing_type: Partition,
    pub rule: SpiderRule,
    /// The rule's integer parameters (`m`, `i`, `N`, `a`, `q`, `r`, `d'`, `r'`, `t`, …).
    pub parameters: BTreeMap<&'static str, usize>,
}

impl SpiderWitness {
    fn new(spec: &SpiderSpec, missing: Partition, rule: SpiderRule, params: &[(&'static str, usize)]) -> Self {
        debug_assert_eq!(missing.weight(), spec.n(), "{rule} produced a type of the wrong weight");
        SpiderWitness {
            spec: spec.clone(),
            missing_type: missing,
            rule,
            parameters: params.iter().copied().collect(),
        }
    }
}

impl fmt::Display for SpiderWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{} missing {} by {} [{}]", self.spec, self.missing_type, self.rule, params.join(", "))
    }
}

fn legs(spec: &SpiderSpec) -> &[usize] {
    spec.legs().parts()
}

/// `λ_{i+1} + … + λ_d` for 1-based `i`.
fn tail(spec: &SpiderSpec, i: usize) -> usize {
    legs(spec)[i..].iter().sum()
}

pub fn spider_matching_class(spec: &SpiderSpec) -> MatchingClass {
    match legs(spec).iter().filter(|&&l| l % 2 == 1).count() {
        1 => MatchingClass::Perfect,
        0 | 2 => MatchingClass::Almost,
        _ => MatchingClass::Neither,
    }
}

/// With three or more odd legs the spider has neither a perfect nor an almost
/// perfect matching, so `(2^{n/2})` or `(2^{(n−1)/2}, 1)` is missing.
pub fn matching_witness(spec: &SpiderSpec) -> Option<SpiderWitness> {
    if spider_matching_class(spec) != MatchingClass::Neither {
        return None;
    }
    let n = spec.n();
    let odd = legs(spec).iter().filter(|&&l| l % 2 == 1).count();
    let mut sizes = vec![2; n / 2];
    if n % 2 == 1 {
        sizes.push(1);
    }
    Some(SpiderWitness::new(spec, Partition::from_sizes(sizes), SpiderRule::Matching, &[("odd_legs", odd)]))
}

/// Longest leg `m < ⌊n/2⌋`: a single edge cut only produces types `(n−i, i)`
/// with `i ≤ m`, so `(n−m−1, m+1)` is missing.
pub fn short_legs_witness(spec: &SpiderSpec) -> Option<SpiderWitness> {
    let n = spec.n();
    let m = spec.legs().largest();
    if m >= n / 2 {
        return None;
    }
    Some(SpiderWitness::new(
        spec,
        Partition::from_sizes([n - m - 1, m + 1]),
        SpiderRule::ShortLegs,
        &[("m", m), ("n", n)],
    ))
}

/// Writes one leg as `i + N·a`, where the remaining legs form `λ ⊢ N` with
/// largest part `m`, and requires `max(2m − N + 1, 0) ≤ i < N`. The missing
/// type is `(N^{a+1}, i+1)` when `m ≤ i` and `(N^a, N+i−m, m+1)` when `i < m`.
///
/// For a chosen leg, `i` and `a` are forced (`i = leg mod N`), so the search
/// runs over the distinct leg lengths, longest first.
pub fn induction_witness(spec: &SpiderSpec) -> Option<SpiderWitness> {
    let all = legs(spec);
    let mut tried = Vec::new();
    for (pos, &leg) in all.iter().enumerate() {
        if tried.contains(&leg) {
            continue;
        }
        tried.push(leg);
        let rest: Vec<usize> = all.iter().enumerate().filter(|&(j, _)| j != pos).map(|(_, &l)| l).collect();
        let big_n: usize = rest.iter().sum();
        let m = rest[0];
        let (i, a) = (leg % big_n, leg / big_n);
        let lower = (2 * m + 1).saturating_sub(big_n);
        if i < lower || i >= big_n {
            continue;
        }
        let mut sizes = vec![big_n; a];
        if m <= i {
            sizes.push(big_n);
            sizes.push(i + 1);
        } else {
            sizes.push(big_n + i - m);
            sizes.push(m + 1);
        }
        return Some(SpiderWitness::new(
            spec,
            Partition::from_sizes(sizes),
            SpiderRule::Induction,
            &[("leg", leg), ("i", i), ("N", big_n), ("a", a), ("m", m)],
        ));
    }
    None
}

/// `n = q(λᵢ+1) + r`, `r = q·d' + r'`; the type
/// `(λᵢ+d'+2)^{r'} (λᵢ+d'+1)^{q−r'}` shared by all three quotient rules.
fn quotient_type(spec: &SpiderSpec, i: usize, rule: SpiderRule, extra: &[(&'static str, usize)]) -> SpiderWitness {
    let n = spec.n();
    let li = legs(spec)[i - 1];
    let q = n / (li + 1);
    let r = n % (li + 1);
    assert!(q >= 1 && r < li + 1);
    let d_prime = r / q;
    let r_prime = r % q;
    assert!(r_prime < q && r == q * d_prime + r_prime);
    let mut sizes = vec![li + d_prime + 2; r_prime];
    sizes.extend(std::iter::repeat_n(li + d_prime + 1, q - r_prime));
    let mut params = vec![("i", i), ("lambda_i", li), ("q", q), ("r", r), ("d'", d_prime), ("r'", r_prime)];
    params.extend_from_slice(extra);
    SpiderWitness::new(spec, Partition::from_sizes(sizes), rule, &params)
}

/// `λ₁ ≥ λ₂+…+λ_d`, `λ₂ ≤ λ₃+…+λ_d`, `λ₂ ≥ 2`, and `λ₂ ≥ 3` or `q ≥ 3`.
pub fn quotient_witness_1(spec: &SpiderSpec) -> Option<SpiderWitness> {
    let l = legs(spec);
    if l[0] < tail(spec, 1) || l[1] > tail(spec, 2) || l[1] < 2 {
        return None;
    }
    let q = spec.n() / (l[1] + 1);
    if l[1] == 2 && q < 3 {
        return None;
    }
    Some(quotient_type(spec, 2, SpiderRule::Quotient1, &[]))
}

/// The least `i ≥ 3` (with `i < d`) such that `λᵢ ≤ λ_{i+1}+…+λ_d`, provided
/// every earlier leg strictly exceeds the sum of the legs after it and
/// `λᵢ ≥ 2`.
pub fn quotient_witness_2(spec: &SpiderSpec) -> Option<SpiderWitness> {
    let l = legs(spec);
    let d = l.len();
    let first = (1..d).find(|&j| l[j - 1] <= tail(spec, j))?;
    if first < 3 || l[first - 1] < 2 {
        return None;
    }
    Some(quotient_type(spec, first, SpiderRule::Quotient2, &[]))
}

/// For a chosen `2 ≤ i < d` with `t = λ_{i+1}+…+λ_d > 1` and
/// `q ≥ (λᵢ+1)/(t−1)`.
pub fn quotient_witness_3(spec: &SpiderSpec, i: usize) -> Option<SpiderWitness> {
    let l = legs(spec);
    if i < 2 || i >= l.len() {
        return None;
    }
    let t = tail(spec, i);
    if t <= 1 {
        return None;
    }
    let q = spec.n() / (l[i - 1] + 1);
    if q * (t - 1) < l[i - 1] + 1 {
        return None;
    }
    Some(quotient_type(spec, i, SpiderRule::Quotient3, &[("t", t)]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountHypothesis {
    /// `λ₁ ≥ λ₂+…+λ_d` and `λᵢ > λ_{i+1}+…+λ_d` for `2 ≤ i ≤ d−1`.
    A,
    /// `d ≥ 4`, `λ₁ ≥ λ₂+…+λ_d`, `λᵢ > λ_{i+1}+…+λ_d` for `2 ≤ i ≤ d−2`,
    /// and `λ_{d−1} = λ_d = 1`.
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountVerticesBound {
    pub hypothesis: Option<CountHypothesis>,
    pub n: usize,
    /// `2^(d−1)`.
    pub bound: u128,
    /// `n > 2^(d−1)`; only meaningful when a hypothesis holds.
    pub exceeds: bool,
}

/// Spiders whose legs shrink geometrically have more than `2^(d−1)` vertices.
pub fn count_vertices_bound(spec: &SpiderSpec) -> CountVerticesBound {
    let l = legs(spec);
    let d = l.len();
    let n = spec.n();
    let dominant = l[0] >= tail(spec, 1);
    let strict_until = |last: usize| (2..=last).all(|i| l[i - 1] > tail(spec, i));
    let hypothesis = if dominant && strict_until(d - 1) {
        Some(CountHypothesis::A)
    } else if d >= 4 && dominant && strict_until(d - 2) && l[d - 2] == 1 && l[d - 1] == 1 {
        Some(CountHypothesis::B)
    } else {
        None
    };
    let bound = 1u128.checked_shl(d as u32 - 1).unwrap_or(u128::MAX);
    CountVerticesBound { hypothesis, n, bound, exceeds: (n as u128) > bound }
}

/// `d ≥ log₂ n + 1`, evaluated exactly as `2^(d−1) ≥ n`.
pub fn in_log2_regime(d: usize, n: usize) -> bool {
    d >= 1 && (d > 64 || (1u128 << (d - 1)) >= n as u128)
}

/// Runs the rules in order SHORT_LEGS, QUOTIENT_1, QUOTIENT_2, MATCHING,
/// INDUCTION, QUOTIENT_3 (each index `i`) and returns the first witness.
///
/// # Panics
///
/// If the spider is in the `2^(d−1) ≥ n` regime and no rule fires; the rules
/// jointly cover that regime, so this signals a bug.
pub fn spider_e_negativity_decision(spec: &SpiderSpec) -> Option<SpiderWitness> {
    let found = short_legs_witness(spec)
        .or_else(|| quotient_witness_1(spec))
        .or_else(|| quotient_witness_2(spec))
        .or_else(|| matching_witness(spec))
        .or_else(|| induction_witness(spec))
        .or_else(|| (2..spec.degree()).find_map(|i| quotient_witness_3(spec, i)));
    assert!(
        found.is_some() || !in_log2_regime(spec.degree(), spec.n()),
        "{spec} has d >= log2(n) + 1 but no rule produced a witness"
    );
    found
}

/// Every witness any rule produces for `spec` (all indices for QUOTIENT_3).
pub fn all_witnesses(spec: &SpiderSpec) -> Vec<SpiderWitness> {
    let mut out: Vec<SpiderWitness> = [
        short_legs_witness(spec),
        quotient_witness_1(spec),
        quotient_witness_2(spec),
        matching_witness(spec),
        induction_witness(spec),
    ]
    .into_iter()
    .flatten()
    .collect();
    out.extend((2..spec.degree()).filter_map(|i| quotient_witness_3(spec, i)));
    out
}

use std::fmt;

use serde_json::{json, Value};

use crate::graph::structure::two_colouring;
use crate::graph::{cut_vertex_components, has_almost_perfect_matching, has_perfect_matching, spider_reduction, Graph};
use crate::partition::Partition;
use crate::spider::{in_log2_regime, spider_e_negativity_decision, SpiderWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Criterion {
    /// No perfect (even `n`) or almost perfect (odd `n`) matching.
    Matching,
    /// A cut vertex leaving `d ≥ 3` components, all smaller than `⌊n/2⌋`.
    ShortLegs,
    /// A cut vertex leaving `d ≥ 3` components with `2^(d−1) ≥ n`.
    Log2Bound,
    /// Some rule fires on the spider reduced at a cut vertex.
    SpiderLemmas,
    /// Bipartite with a vertex of degree greater than `⌈n/2⌉`.
    BipartiteDegree,
}

impl Criterion {
    pub const ALL: [Criterion; 5] = [
        Criterion::Matching,
        Criterion::ShortLegs,
        Criterion::Log2Bound,
        Criterion::SpiderLemmas,
        Criterion::BipartiteDegree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Matching => "matching",
            Criterion::ShortLegs => "short-legs",
            Criterion::Log2Bound => "log2-bound",
            Criterion::SpiderLemmas => "spider-lemmas",
            Criterion::BipartiteDegree => "bipartite-degree",
        }
    }

    /// True for criteria certifying non-Schur-positivity (which implies
    /// non-e-positivity); false for those certifying only non-e-positivity.
    pub fn certifies_schur(self) -> bool {
        self == Criterion::BipartiteDegree
    }

    pub fn check(self, g: &Graph) -> Option<Certificate> {
        match self {
            Criterion::Matching => matching_criterion(g),
            Criterion::ShortLegs => short_legs_criterion(g),
            Criterion::Log2Bound => log2_cut_vertex_criterion(g),
            Criterion::SpiderLemmas => spider_lemmas_criterion(g),
            Criterion::BipartiteDegree => bipartite_degree_criterion(g),
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A one-sided non-positivity certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub criterion: Criterion,
    /// The cut vertex or high-degree vertex the criterion used.
    pub vertex: Option<usize>,
    pub missing_connected_type: Option<Partition>,
    /// `(λ present, μ missing)` with `λ` dominating `μ`.
    pub stable_violation: Option<(Partition, Partition)>,
    pub spider_witness: Option<SpiderWitness>,
}

impl Certificate {
    fn missing(criterion: Criterion, vertex: Option<usize>, mu: Partition) -> Self {
        Certificate { criterion, vertex, missing_connected_type: Some(mu), stable_violation: None, spider_witness: None }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "criterion": self.criterion.name(),
            "vertex": self.vertex,
            "missing_connected_type": self.missing_connected_type.as_ref().map(Partition::to_plain_string),
            "stable_violation": self.stable_violation.as_ref().map(|(l, m)| [l.to_plain_string(), m.to_plain_string()]),
            "spider_witness": self.spider_witness.as_ref().map(|w| json!({
                "spider": w.spec.to_string(),
                "rule": w.rule.name(),
                "missing_type": w.missing_type.to_plain_string(),
                "parameters": w.parameters,
            })),
        })
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.criterion)?;
        if let Some(v) = self.vertex {
            write!(f, " at vertex {v}")?;
        }
        if let Some(w) = &self.spider_witness {
            write!(f, ": {w}")
        } else if let Some(mu) = &self.missing_connected_type {
            write!(f, ": missing connected type {mu}")
        } else if let Some((l, m)) = &self.stable_violation {
            write!(f, ": stable type {l} present, {m} missing")
        } else {
            Ok(())
        }
    }
}

/// The components of `G − v` for every vertex that leaves at least three.
fn cut_vertices_with_three_components(g: &Graph) -> impl Iterator<Item = (usize, Vec<usize>)> + '_ {
    (0..g.n()).filter_map(move |v| {
        let comps = cut_vertex_components(g, v).ok()?;
        (comps.len() >= 3).then(|| (v, comps.iter().map(Vec::len).collect()))
    })
}

pub fn matching_criterion(g: &Graph) -> Option<Certificate> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return None;
    }
    let matched = if n.is_multiple_of(2) { has_perfect_matching(g) } else { has_almost_perfect_matching(g) };
    if matched {
        return None;
    }
    let mut sizes = vec![2; n / 2];
    if n % 2 == 1 {
        sizes.push(1);
    }
    Some(Certificate::missing(Criterion::Matching, None, Partition::from_sizes(sizes)))
}

/// Fires at the lowest vertex whose deletion leaves `d ≥ 3` components all
/// smaller than `⌊n/2⌋`; the missing type is `(n−m−1, m+1)` for the largest
/// component size `m`.
pub fn short_legs_criterion(g: &Graph) -> Option<Certificate> {
    let n = g.n();
    cut_vertices_with_three_components(g).find_map(|(v, sizes)| {
        let m = sizes[0];
        (m < n / 2).then(|| Certificate::missing(Criterion::ShortLegs, Some(v), Partition::from_sizes([n - m - 1, m + 1])))
    })
}

fn spider_certificate(criterion: Criterion, g: &Graph, v: usize) -> Option<Certificate> {
    let spec = spider_reduction(g, v).ok()?;
    let w = spider_e_negativity_decision(&spec)?;
    Some(Certificate {
        criterion,
        vertex: Some(v),
        missing_connected_type: Some(w.missing_type.clone()),
        stable_violation: None,
        spider_witness: Some(w),
    })
}

/// Fires at the lowest vertex leaving `d ≥ 3` components with `2^(d−1) ≥ n`;
/// the witness comes from the reduced spider.
pub fn log2_cut_vertex_criterion(g: &Graph) -> Option<Certificate> {
    let n = g.n();
    cut_vertices_with_three_components(g)
        .find(|(_, sizes)| in_log2_regime(sizes.len(), n))
        .and_then(|(v, _)| spider_certificate(Criterion::Log2Bound, g, v))
}

/// Fires at the lowest cut vertex whose reduced spider gets a witness from
/// any spider rule.
pub fn spider_lemmas_criterion(g: &Graph) -> Option<Certificate> {
    cut_vertices_with_three_components(g).find_map(|(v, _)| spider_certificate(Criterion::SpiderLemmas, g, v))
}

/// Fires at the lowest vertex of degree greater than `⌈n/2⌉` in a connected
/// bipartite graph, with violation pair `((m, n−m), (⌈n/2⌉, ⌊n/2⌋))` where
/// `m` is the larger colour class.
pub fn bipartite_degree_criterion(g: &Graph) -> Option<Certificate> {
    let n = g.n();
    if n == 0 || !g.is_connected() {
        return None;
    }
    let v = (0..n).find(|&v| g.degree(v) > n.div_ceil(2))?;
    let ones = two_colouring(g)?.count_ones() as usize;
    let m = ones.max(n - ones);
    Some(Certificate {
        criterion: Criterion::BipartiteDegree,
        vertex: Some(v),
        missing_connected_type: None,
        stable_violation: Some((Partition::from_sizes([m, n - m]), Partition::from_sizes([n.div_ceil(2), n / 2]))),
        spider_witness: None,
    })
}

/// Every criterion that fires, in [`Criterion::ALL`] order.
pub fn fired_criteria(g: &Graph) -> Vec<Certificate> {
    Criterion::ALL.iter().filter_map(|c| c.check(g)).collect()
}

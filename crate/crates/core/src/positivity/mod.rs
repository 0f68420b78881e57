//! Exact e- and Schur-positivity decisions with certificates.
//!
//! The criteria in [`criteria`] are one-sided: each either produces a
//! certificate of non-positivity or stays silent. Final verdicts come from the
//! exact expansions of `X_G`.

pub mod criteria;
mod connected;
mod report;
mod stable;

pub use connected::{has_connected_partition, missing_connected_type, missing_connected_types, ConnectedPartitionSearch};
pub use criteria::{
    bipartite_degree_criterion, fired_criteria, log2_cut_vertex_criterion, matching_criterion, short_legs_criterion,
    spider_lemmas_criterion, Certificate, Criterion,
};
pub use report::{full_report, full_report_bounded, PositivityReport};
pub use stable::{has_stable_partition, schur_dominance_violation, stable_types};

use crate::csf::chromatic_symmetric_function_bounded;
use crate::error::Result;
use crate::graph::Graph;
use crate::partition::Partition;
use crate::symfunc::{Basis, Rational};

/// How an e-positivity verdict was reached.
#[derive(Clone, Debug, PartialEq)]
pub enum EVerdict {
    Positive,
    /// A criterion certificate settled it without expanding `X_G`.
    Certified(Box<Certificate>),
    /// The e-expansion has this negative coefficient.
    NegativeCoefficient(Partition, Rational),
}

impl EVerdict {
    pub fn is_positive(&self) -> bool {
        matches!(self, EVerdict::Positive)
    }
}

/// Cheap e-criteria first, then the exact e-expansion.
pub fn e_positivity(g: &Graph, max_edges: usize) -> Result<EVerdict> {
    for c in Criterion::ALL {
        if let Some(cert) = c.check(g) {
            return Ok(EVerdict::Certified(Box::new(cert)));
        }
    }
    let e = chromatic_symmetric_function_bounded(g, max_edges)?.to_basis(Basis::E)?;
    Ok(match e.negative_witness() {
        Some((l, c)) => EVerdict::NegativeCoefficient(l.clone(), c.clone()),
        None => EVerdict::Positive,
    })
}

/// Schur-positivity from the exact Schur expansion, after the bipartite
/// degree shortcut.
pub fn is_schur_positive(g: &Graph, max_edges: usize) -> Result<bool> {
    if bipartite_degree_criterion(g).is_some() {
        return Ok(false);
    }
    Ok(chromatic_symmetric_function_bounded(g, max_edges)?.to_basis(Basis::S)?.is_nonnegative())
}

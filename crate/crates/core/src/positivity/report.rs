use std::fmt;

use serde_json::{json, Value};

use super::criteria::{fired_criteria, Certificate};
use super::{missing_connected_type, schur_dominance_violation};
use crate::csf::{chromatic_symmetric_function_bounded, DEFAULT_MAX_EDGES};
use crate::error::{Error, Result};
use crate::graph::{to_graph6, Graph};
use crate::partition::Partition;
use crate::symfunc::{Basis, Rational, SymFunc};

#[derive(Clone, Debug, PartialEq)]
pub struct PositivityReport {
    /// graph6 string unless the caller supplied a name.
    pub graph_id: String,
    pub n: usize,
    pub e_positive: bool,
    pub schur_positive: bool,
    /// First negative e-coefficient in enumeration order.
    pub e_witness: Option<(Partition, Rational)>,
    /// First negative Schur coefficient in enumeration order.
    pub s_witness: Option<(Partition, Rational)>,
    pub missing_connected_type: Option<Partition>,
    pub violated_stable_type: Option<(Partition, Partition)>,
    pub criteria_fired: Vec<Certificate>,
}

/// Exact report with the default edge bound.
pub fn full_report(g: &Graph) -> Result<PositivityReport> {
    full_report_bounded(g, DEFAULT_MAX_EDGES)
}

pub fn full_report_bounded(g: &Graph, max_edges: usize) -> Result<PositivityReport> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.edge_count() > max_edges {
        return Err(Error::SizeBound(format!("{} edges exceeds the bound of {max_edges}", g.edge_count())));
    }
    let criteria_fired = fired_criteria(g);
    let x = chromatic_symmetric_function_bounded(g, max_edges)?;
    let e = x.to_basis(Basis::E)?;
    let s = x.to_basis(Basis::S)?;
    let report = PositivityReport {
        graph_id: to_graph6(g),
        n: g.n(),
        e_positive: e.is_nonnegative(),
        schur_positive: s.is_nonnegative(),
        e_witness: first_negative(&e),
        s_witness: first_negative(&s),
        missing_connected_type: missing_connected_type(g)?,
        violated_stable_type: schur_dominance_violation(g)?,
        criteria_fired,
    };
    report.check_consistency();
    Ok(report)
}

fn first_negative(f: &SymFunc) -> Option<(Partition, Rational)> {
    f.negative_witness().map(|(l, c)| (l.clone(), c.clone()))
}

impl PositivityReport {
    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.graph_id = id.into();
        self
    }

    /// The implications that hold for every graph; a failure is a bug.
    fn check_consistency(&self) {
        assert!(!self.e_positive || self.schur_positive, "{}: e-positive but not Schur-positive", self.graph_id);
        assert!(
            self.missing_connected_type.is_none() || !self.e_positive,
            "{}: missing a connected type yet e-positive",
            self.graph_id
        );
        assert!(
            self.violated_stable_type.is_none() || !self.schur_positive,
            "{}: stable dominance violated yet Schur-positive",
            self.graph_id
        );
        for c in &self.criteria_fired {
            let refuted = if c.criterion.certifies_schur() { !self.schur_positive } else { !self.e_positive };
            assert!(refuted, "{}: criterion {} fired on a positive graph", self.graph_id, c.criterion);
        }
    }

    pub fn to_json(&self) -> Value {
        let coeff = |w: &Option<(Partition, Rational)>| {
            w.as_ref().map(|(l, c)| json!({"partition": l.to_plain_string(), "coefficient": c.to_string()}))
        };
        json!({
            "graph": self.graph_id,
            "n": self.n,
            "e_positive": self.e_positive,
            "schur_positive": self.schur_positive,
            "e_witness": coeff(&self.e_witness),
            "s_witness": coeff(&self.s_witness),
            "missing_connected_type": self.missing_connected_type.as_ref().map(Partition::to_plain_string),
            "violated_stable_type": self.violated_stable_type.as_ref().map(|(l, m)| [l.to_plain_string(), m.to_plain_string()]),
            "criteria_fired": self.criteria_fired.iter().map(Certificate::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for PositivityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "graph {} (n = {})", self.graph_id, self.n)?;
        write!(f, "e-positive: {}", yes_no(self.e_positive))?;
        if let Some((l, c)) = &self.e_witness {
            write!(f, " (coefficient {c} on e_{l})")?;
        }
        writeln!(f)?;
        write!(f, "Schur-positive: {}", yes_no(self.schur_positive))?;
        if let Some((l, c)) = &self.s_witness {
            write!(f, " (coefficient {c} on s_{l})")?;
        }
        writeln!(f)?;
        match &self.missing_connected_type {
            Some(mu) => writeln!(f, "missing connected type: {mu}")?,
            None => writeln!(f, "connected partitions of every type")?,
        }
        if let Some((l, m)) = &self.violated_stable_type {
            writeln!(f, "stable type {l} present but dominated type {m} missing")?;
        }
        if self.criteria_fired.is_empty() {
            writeln!(f, "no criterion fired")?;
        }
        for c in &self.criteria_fired {
            writeln!(f, "criterion {c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_path, make_spider, make_star};

    fn spider(legs: &str) -> Graph {
        make_spider(&legs.parse().unwrap()).unwrap()
    }

    #[test]
    fn named_spiders() {
        assert!(full_report(&spider("2,1,1")).unwrap().e_positive);
        assert!(full_report(&spider("6,2,1")).unwrap().e_positive);
        let r = full_report(&spider("1,1,1")).unwrap();
        assert!(!r.e_positive && !r.schur_positive);
        assert_eq!(r.missing_connected_type.unwrap().to_string(), "(2^2)");
        let r = full_report(&spider("4,1,1")).unwrap();
        assert!(!r.e_positive && r.schur_positive);
        assert_eq!(r.e_witness.unwrap().0.to_string(), "(3,2^2)");
        assert!(r.missing_connected_type.is_none() && r.criteria_fired.is_empty());
    }

    #[test]
    fn rejects_disconnected_and_large_inputs() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(full_report(&g), Err(Error::Disconnected)));
        assert!(matches!(full_report_bounded(&make_path(8).unwrap(), 6), Err(Error::SizeBound(_))));
    }

    #[test]
    fn json_shape() {
        let v = full_report(&make_star(5).unwrap()).unwrap().to_json();
        assert_eq!(v["graph"], "Ds_");
        assert_eq!(v["schur_positive"], false);
        assert_eq!(v["violated_stable_type"][1], "3,2");
        let names: Vec<&str> = v["criteria_fired"].as_array().unwrap().iter().map(|c| c["criterion"].as_str().unwrap()).collect();
        assert!(names.contains(&"bipartite-degree") && names.contains(&"matching"));
    }
}

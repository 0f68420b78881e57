//! Stable partitions and the dominance certificate for non-Schur-positivity.

use chromsym::graph::{make_path, make_spider, make_star, Graph};
use chromsym::positivity::{bipartite_degree_criterion, full_report, schur_dominance_violation};

fn show(name: &str, g: &Graph) -> chromsym::Result<()> {
    let report = full_report(g)?;
    let violation = schur_dominance_violation(g)?;
    print!("{name:<10} Schur-positive: {:<5}", report.schur_positive);
    if let Some((l, m)) = violation {
        print!(" stable {l} present, {m} missing");
    }
    if let Some(c) = bipartite_degree_criterion(g) {
        print!(" [{}]", c.criterion);
    }
    println!();
    Ok(())
}

fn main() -> chromsym::Result<()> {
    for n in 4..=9 {
        show(&format!("S_{n}"), &make_star(n)?)?;
    }
    show("P_6", &make_path(6)?)?;
    for legs in ["4,1,1", "2,2,1,1", "3,3,3"] {
        show(&format!("S({legs})"), &make_spider(&legs.parse()?)?)?;
    }
    Ok(())
}

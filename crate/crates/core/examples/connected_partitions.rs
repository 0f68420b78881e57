//! Missing connected-partition types: the certificate that a graph is not
//! e-positive, and how often it explains non-e-positivity among small trees.

use chromsym::csf::chromatic_symmetric_function;
use chromsym::graph::{make_spider, SpiderSpec};
use chromsym::positivity::{missing_connected_type, missing_connected_types};
use chromsym::symfunc::Basis;
use chromsym::treegen::{free_trees, TreeFilter};

fn main() -> chromsym::Result<()> {
    for legs in ["1,1,1", "2,2,1,1", "4,1,1", "6,4,1,1", "8,2,2,1"] {
        let spec: SpiderSpec = legs.parse()?;
        let missing = missing_connected_types(&make_spider(&spec)?)?;
        let shown: Vec<String> = missing.iter().map(ToString::to_string).collect();
        println!("{spec}: missing [{}]", shown.join(", "));
    }

    println!("\n n  trees  not e-positive  explained by a missing type");
    for n in 4..=10 {
        let (mut total, mut negative, mut explained) = (0, 0, 0);
        for code in free_trees(n, TreeFilter::All)? {
            let g = code.to_graph();
            total += 1;
            if !chromatic_symmetric_function(&g)?.to_basis(Basis::E)?.is_nonnegative() {
                negative += 1;
                if missing_connected_type(&g)?.is_some() {
                    explained += 1;
                }
            }
        }
        println!("{n:>2} {total:>6} {negative:>15} {explained:>28}");
    }
    Ok(())
}

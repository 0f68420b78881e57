//! X_G for a spider in every basis, checked against direct colouring counts.
//!
//! cargo run --example chromatic_function -- 4,1,1

use chromsym::csf::{chromatic_symmetric_function, csf_coloring_oracle, ORACLE_MAX_VERTICES};
use chromsym::graph::{make_spider, SpiderSpec};
use chromsym::symfunc::Basis;

fn main() -> chromsym::Result<()> {
    let legs = std::env::args().nth(1).unwrap_or_else(|| "4,1,1".into());
    let spec: SpiderSpec = legs.parse()?;
    let g = make_spider(&spec)?;
    let x = chromatic_symmetric_function(&g)?;
    for basis in [Basis::P, Basis::M, Basis::E, Basis::S] {
        let f = x.to_basis(basis)?;
        println!("{spec} in the {basis} basis ({} terms):", f.len());
        println!("  {f}");
    }
    if g.n() <= ORACLE_MAX_VERTICES {
        let direct = csf_coloring_oracle(&g)?;
        println!("colouring count agrees: {}", direct == x.to_basis(Basis::M)?);
    }
    Ok(())
}

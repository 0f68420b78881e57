//! Scans every tree up to a size for both conjectures.
//!
//! cargo run --release --example conjecture_scan -- 12

use chromsym::scan::{scan, Conjecture, ScanConfig};

fn main() -> chromsym::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(11);
    for (conjecture, n_min) in [(Conjecture::Degree4E, 1), (Conjecture::HalfDegreeSchur, 2)] {
        let mut cfg = ScanConfig::new(conjecture, n_min, n_max);
        cfg.budget_n = Some(n_max.max(conjecture.default_budget()));
        println!("{}\n", scan(&cfg)?);
    }
    Ok(())
}

//! Runs the spider rules over every spider up to a size and tallies which
//! rule settles each one, verifying every witness by search.

use std::collections::BTreeMap;

use chromsym::graph::{make_spider, SpiderSpec};
use chromsym::partition::partitions_of;
use chromsym::positivity::has_connected_partition;
use chromsym::spider::{in_log2_regime, spider_e_negativity_decision};

fn main() -> chromsym::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let mut by_rule: BTreeMap<String, usize> = BTreeMap::new();
    let mut silent = Vec::new();
    for n in 4..=max_n {
        for legs in partitions_of(n - 1).into_iter().filter(|l| l.len() >= 3) {
            let spec = SpiderSpec::new(legs)?;
            match spider_e_negativity_decision(&spec) {
                Some(w) => {
                    let g = make_spider(&spec)?;
                    assert!(!has_connected_partition(&g, &w.missing_type)?, "bad witness {w}");
                    *by_rule.entry(w.rule.to_string()).or_default() += 1;
                }
                None => {
                    assert!(!in_log2_regime(spec.degree(), n));
                    silent.push(spec.to_string());
                }
            }
        }
    }
    println!("spiders with n <= {max_n}, first rule that fires:");
    for (rule, count) in &by_rule {
        println!("  {rule:<11} {count}");
    }
    println!("no rule: {} spiders, e.g. {}", silent.len(), silent.iter().take(8).cloned().collect::<Vec<_>>().join(" "));
    Ok(())
}

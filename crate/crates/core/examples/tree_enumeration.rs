//! Counts free trees by size and by maximum degree.

use chromsym::treegen::{free_trees, TreeFilter};

fn main() -> chromsym::Result<()> {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(16);
    println!(" n  trees  max degree >= 4  with a degree-floor(n/2) vertex");
    for n in 1..=max_n {
        let all = free_trees(n, TreeFilter::All)?.count();
        let big = free_trees(n, TreeFilter::MaxDegreeAtLeast(4))?.count();
        let half = free_trees(n, TreeFilter::HasDegree(n / 2))?.count();
        println!("{n:>2} {all:>6} {big:>16} {half:>31}");
    }
    let first = free_trees(6, TreeFilter::All)?.next().expect("trees exist");
    println!("first tree on 6 vertices: {first}, edges {:?}", first.to_graph().edges());
    Ok(())
}

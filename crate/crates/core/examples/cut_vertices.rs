//! Windmills and other graphs with cut vertices: spider reduction and the
//! criteria it feeds.

use chromsym::graph::{make_windmill, spider_reduction, Graph};
use chromsym::positivity::fired_criteria;

fn main() -> chromsym::Result<()> {
    for d in 3..=5 {
        for k in 2..=4 {
            let g = make_windmill(d, k)?;
            let spider = spider_reduction(&g, 0)?;
            let fired: Vec<String> = fired_criteria(&g).iter().map(ToString::to_string).collect();
            println!("W^{d}_{k}: n = {:>2}, reduces to {spider}; {}", g.n(), fired.join("; "));
        }
    }
    // two triangles and a pendant path hanging off one shared vertex
    let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7)])?;
    println!("bowtie with a tail reduces to {}", spider_reduction(&g, 0)?);
    for c in fired_criteria(&g) {
        println!("  {c}");
    }
    Ok(())
}

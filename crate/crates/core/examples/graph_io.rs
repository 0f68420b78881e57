//! Reads graphs from graph6 strings and edge lists and writes them back.

use chromsym::graph::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use chromsym::positivity::full_report;
use chromsym::treegen::TreeCode;

fn main() -> chromsym::Result<()> {
    let input = std::env::args().nth(1).unwrap_or_else(|| "FhCKG".into());
    let g = parse_graph6(&input)?;
    println!("{input}: {} vertices, edges {:?}", g.n(), g.edges());
    let text = to_edge_list(&g);
    print!("as an edge list:\n{text}");
    let back = parse_edge_list(&text)?;
    println!("round trip graph6: {}", to_graph6(&back));
    if g.is_tree() {
        println!("tree code: {}", TreeCode::from_graph(&g)?);
    }
    if g.is_connected() {
        print!("{}", full_report(&g)?);
    }
    Ok(())
}

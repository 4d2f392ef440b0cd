//! Decompose a unicyclic graph: cycle, threads, L(G), b(G), and a canonical
//! labelling for a chosen vertex set.
//!
//!     cargo run --example analyze_graph

use unicyclic::report::AnalyzeReport;
use unicyclic::{canonical_labelling, decompose_unicyclic, parse_graph};

fn main() -> unicyclic::Result<()> {
    // C6 with a 2-thread at v1 and pendants at v2, v3, v5, as an edge list.
    let text = "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n1 6\n6 7\n2 8\n3 9\n5 10\n";
    let g = parse_graph(text)?;
    let dec = decompose_unicyclic(&g)?;
    print!("{}", AnalyzeReport::new(&dec).to_human());

    let s = [7, 10];
    let lab = canonical_labelling(&dec, &s)?;
    println!(
        "S = {s:?}: v_0 is base index {}, direction {:+}, k = {}, a(S) = {}",
        lab.offset(),
        lab.direction(),
        lab.k,
        lab.a
    );
    Ok(())
}

//! Basis forced vertices: the fast path against the oracle on the figure
//! fixtures, and the per-condition report for a b(G) = 1 candidate.
//!
//!     cargo run --example forced_vertices

use unicyclic::generators::fixtures;
use unicyclic::metric::{basis_forced_fast, basis_forced_oracle, check_cycle_char};
use unicyclic::{all_pairs_distances, decompose_unicyclic};

fn main() -> unicyclic::Result<()> {
    for fx in fixtures()
        .into_iter()
        .filter(|f| f.unicyclic && f.forced.is_some())
    {
        let dec = decompose_unicyclic(&fx.graph)?;
        let fast = basis_forced_fast(&dec);
        let oracle = basis_forced_oracle(&all_pairs_distances(&fx.graph), 16)?;
        println!(
            "{:<6} dim {} forced {:?} ({}) oracle {:?}, {} bases",
            fx.name,
            fast.dim,
            fast.forced,
            fast.method.as_str(),
            oracle.forced,
            oracle.bases.map_or(0, |b| b.len())
        );
    }

    let fx = fixtures()
        .into_iter()
        .find(|f| f.name == "fig2c")
        .expect("fixture exists");
    let dec = decompose_unicyclic(&fx.graph)?;
    let report = check_cycle_char(&dec, 0)?;
    println!("fig2c, v0 as candidate (j = {}):", report.j);
    for c in &report.conditions {
        println!("  ({}) {}", c.label, c.holds);
    }
    println!("  forced: {}", report.verdict());
    Ok(())
}

//! Metric dimension from the structure of the graph, checked against the
//! exhaustive oracle, plus the list of all metric bases.
//!
//!     cargo run --example metric_dimension

use unicyclic::generators::{decorated_cycle, fig2c};
use unicyclic::metric::{
    enumerate_metric_bases_oracle, find_basis_fast, metric_dimension, metric_dimension_oracle,
};
use unicyclic::{all_pairs_distances, decompose_unicyclic};

fn main() -> unicyclic::Result<()> {
    let graphs = [
        ("C7", decorated_cycle(&vec![vec![]; 7])?),
        (
            "C6 + two pendants at v0",
            decorated_cycle(&[vec![1, 1], vec![], vec![], vec![], vec![], vec![]])?,
        ),
        ("fig2c", fig2c()),
    ];
    for (name, g) in &graphs {
        let dec = decompose_unicyclic(g)?;
        let dist = all_pairs_distances(g);
        let dim = metric_dimension(&dec);
        println!(
            "{name}: L = {}, b = {}, dim = {dim} (oracle {}), basis {:?}",
            dec.l_value(),
            dec.b_value(),
            metric_dimension_oracle(&dist, 16)?,
            find_basis_fast(&dec)
        );
        let bases = enumerate_metric_bases_oracle(&dist, 16)?;
        println!("  {} bases, first {:?}", bases.len(), bases[0]);
    }
    Ok(())
}

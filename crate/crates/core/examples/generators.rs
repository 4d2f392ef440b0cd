//! Instance generators: exhaustive enumeration, seeded random graphs, and
//! the named families.
//!
//!     cargo run --example generators

use unicyclic::generators::{
    gen_gn, gen_gtq, gen_random_unicyclic, unicyclic_graphs_with_n, GenBounds, GenSpec,
};

fn main() -> unicyclic::Result<()> {
    for n in 3..=9 {
        println!(
            "unicyclic graphs on {n} vertices: {}",
            unicyclic_graphs_with_n(n).len()
        );
    }

    let bounds = GenBounds {
        max_n: 12,
        branch_prob: 0.3,
        ..GenBounds::default()
    };
    for seed in 0..3 {
        let g = gen_random_unicyclic(&GenSpec::new(5, seed, bounds))?;
        println!("seed {seed}: {}", g.to_json());
    }
    println!("G_3:      {}", gen_gn(3).to_json());
    println!("G_(3,2):  {}", gen_gtq(3, 2).to_json());
    Ok(())
}

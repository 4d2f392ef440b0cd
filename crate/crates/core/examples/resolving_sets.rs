//! Polynomial resolving-set test: a biactive branch-resolving set resolves
//! the graph unless one of the configurations A, B or C occurs.
//!
//!     cargo run --example resolving_sets

use unicyclic::generators::decorated_cycle;
use unicyclic::metric::{find_configuration, is_resolving_set_fast, is_resolving_set_oracle};
use unicyclic::{all_pairs_distances, decompose_unicyclic};

fn main() -> unicyclic::Result<()> {
    // C8 with pendant 8 at v0, a 2-thread 9-10 at v1, pendant 11 at v2 and
    // pendant 12 at v5.
    let mut deco = vec![vec![]; 8];
    deco[0] = vec![1];
    deco[1] = vec![2];
    deco[2] = vec![1];
    deco[5] = vec![1];
    let g = decorated_cycle(&deco)?;
    let dec = decompose_unicyclic(&g)?;
    let dist = all_pairs_distances(&g);

    for s in [
        vec![8, 11],
        vec![8, 10, 11],
        vec![8, 12],
        vec![11, 12],
        vec![0, 4],
    ] {
        let witness = match find_configuration(&dec, &s) {
            Ok(Some(w)) => format!("{:?} (k = {})", w.kind, w.labelling.k),
            Ok(None) => "none".into(),
            Err(e) => format!("n/a: {e}"),
        };
        println!(
            "S = {s:?}: fast {}, oracle {}, configuration {witness}",
            is_resolving_set_fast(&dec, &s),
            is_resolving_set_oracle(&dist, &s)
        );
    }
    Ok(())
}

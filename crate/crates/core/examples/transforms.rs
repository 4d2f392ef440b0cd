//! Surgeries that move basis forced vertices, each with its prediction and
//! the oracle's verdict.
//!
//!     cargo run --example transforms

use unicyclic::generators::{fig1_g, fig1_h1, fig2a, fig2c};
use unicyclic::transforms::{
    attach_pendant_forced_check, cycle_to_pendant, extend_with_path, pendant_to_cycle_check,
    TransformResult,
};

fn show(what: &str, r: &TransformResult) {
    println!(
        "{what:<34} anchor {:>2}  predicted {:<5}  observed {:<5}  {:?}",
        r.anchor,
        r.predicted,
        r.observed.map_or("-".into(), |o| o.to_string()),
        r.verification
    );
}

fn main() -> unicyclic::Result<()> {
    let cap = 16;
    show("extend fig2a by P2", &extend_with_path(&fig2a(), 2, cap)?);
    show("extend fig2c by P1", &extend_with_path(&fig2c(), 1, cap)?);
    show(
        "pendant at v1 of fig1-G",
        &attach_pendant_forced_check(&fig1_g(), 0, cap)?,
    );
    show(
        "pendant at r1 of fig1-H1",
        &attach_pendant_forced_check(&fig1_h1(), 1, cap)?,
    );

    let h = cycle_to_pendant(&fig2c(), 0, cap)?;
    show("pendant at forced cycle vertex", &h);
    let back = pendant_to_cycle_check(&h.graph, h.graph.n() - 1, cap)?;
    show("remove it again", &back);
    show(
        "remove a forced pendant of fig2a",
        &pendant_to_cycle_check(&fig2a(), 6, cap)?,
    );
    Ok(())
}

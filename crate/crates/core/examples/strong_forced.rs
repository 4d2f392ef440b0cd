//! Strong metric dimension and strong basis forced vertices, from the
//! even/odd characterizations and from exact vertex covers.
//!
//!     cargo run --example strong_forced

use unicyclic::generators::{fig3_g, gen_gn, gen_gtq};
use unicyclic::strong::{strong_basis_forced_fast, strong_report_fast, strong_report_oracle};
use unicyclic::{decompose_unicyclic, Graph};

fn show(name: &str, g: &Graph) -> unicyclic::Result<()> {
    let dec = decompose_unicyclic(g)?;
    let fast = strong_report_fast(&dec)?;
    let oracle = strong_report_oracle(g)?;
    println!(
        "{name:<10} n {:>2}  g {:>2}  sdim {:>2}  forced {:?}  (oracle {:?})",
        g.n(),
        dec.girth(),
        fast.dim_s,
        fast.forced_strong,
        oracle.forced_strong
    );
    Ok(())
}

fn main() -> unicyclic::Result<()> {
    show("fig3-G", &fig3_g())?;
    for n in 2..=5 {
        show(&format!("G_{n}"), &gen_gn(n))?;
    }
    for (t, q) in [(2, 2), (3, 2), (4, 3)] {
        let g = gen_gtq(t, q);
        let count = strong_basis_forced_fast(&decompose_unicyclic(&g)?)?.len();
        println!(
            "G_({t},{q})   {count} strong forced, expected {}",
            t - 2 + 2 * q
        );
    }
    Ok(())
}

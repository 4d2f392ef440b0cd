//! Run the fast-versus-oracle harness on a small seeded batch.
//!
//!     cargo run --release --example verify_harness

use unicyclic::verify::{run_verify, VerifyConfig};

fn main() -> unicyclic::Result<()> {
    let cfg = VerifyConfig {
        count: 200,
        max_n: 13,
        seed: 42,
        ..VerifyConfig::default()
    };
    let summary = run_verify(&cfg)?;
    print!("{}", summary.to_human());
    if !summary.ok() {
        std::process::exit(3);
    }
    Ok(())
}

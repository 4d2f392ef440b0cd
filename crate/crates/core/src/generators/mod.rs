//! Fixture graphs, the `G_n` / `G_{t,q}` families, seeded random instances
//! and exhaustive enumeration.

mod enumerate;
mod fixtures;
mod random;

pub use enumerate::{all_unicyclic_graphs, unicyclic_graphs_with_n};
pub use fixtures::{
    fig1_g, fig1_h1, fig1_h1_prime, fig1_h2, fig2a, fig2b, fig2c, fig3_g, fig3_g_prime, fixture,
    fixtures, gen_gn, gen_gtq, Fixture,
};
pub use random::{decorated_cycle, gen_random_unicyclic, GenBounds, GenSpec};

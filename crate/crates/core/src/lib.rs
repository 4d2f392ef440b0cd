//! Metric dimension, metric bases and basis forced vertices of unicyclic
//! graphs, together with their strong counterparts, exact brute-force
//! oracles, graph surgeries and instance generators.
//!
//! ```
//! use unicyclic::metric::{basis_forced_fast, metric_dimension};
//! use unicyclic::{decompose_unicyclic, parse_graph};
//!
//! let g = parse_graph("0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n1 6\n2 7\n3 8\n4 9\n5 10\n")?;
//! let dec = decompose_unicyclic(&g)?;
//! assert_eq!(metric_dimension(&dec), 2);
//! assert_eq!(basis_forced_fast(&dec).forced.into_iter().collect::<Vec<_>>(), [6, 10]);
//! # Ok::<(), unicyclic::Error>(())
//! ```

pub mod error;
pub mod generators;
pub mod graph;
pub mod metric;
pub mod report;
pub mod strong;
pub mod transforms;
pub mod unicyclic;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{all_pairs_distances, parse_graph, DistanceMatrix, Graph};
pub use unicyclic::{
    canonical_labelling, decompose_unicyclic, CanonicalLabelling, Thread, UnicyclicDecomposition,
};

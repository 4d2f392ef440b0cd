//! Resolving sets, metric dimension and basis forced vertices.

mod config;
mod dimension;
mod forced;
mod oracle;
mod pendant_char;

use std::collections::BTreeSet;

use serde::Serialize;

pub use config::{
    check_biactive_branch_resolving, find_configuration, is_branch_resolving,
    is_resolving_set_fast, ConfigurationKind, ConfigurationWitness, OffendingThread,
};
pub use dimension::{find_basis_fast, metric_dimension};
pub use forced::basis_forced_fast;
pub use oracle::{
    basis_forced_oracle, enumerate_metric_bases_oracle, is_resolving_set_oracle,
    metric_dimension_oracle, oracle_cap_from_env, DEFAULT_ORACLE_CAP,
};
pub use pendant_char::{check_cycle_char, check_pendant_char, Condition, PendantCharReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Oracle,
    Characterization,
    Hybrid,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Characterization => "characterization",
            Method::Hybrid => "hybrid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForcedReport {
    pub dim: usize,
    pub forced: BTreeSet<usize>,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bases: Option<Vec<Vec<usize>>>,
}

impl ForcedReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

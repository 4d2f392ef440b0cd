//! Randomized harness comparing every fast path with its oracle.

use std::collections::BTreeMap;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{gen_random_unicyclic, GenBounds, GenSpec};
use crate::graph::{all_pairs_distances, Graph};
use crate::metric::{
    basis_forced_fast, basis_forced_oracle, is_resolving_set_fast, is_resolving_set_oracle,
    metric_dimension, DEFAULT_ORACLE_CAP,
};
use crate::strong::{
    build_srg_definition, build_srg_unicyclic, reduce_to_star_form, strong_basis_forced_fast,
    strong_basis_forced_oracle, MIS_CAP,
};
use crate::unicyclic::{decompose_unicyclic, UnicyclicDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Resolving,
    Dim,
    Forced,
    Srg,
    StrongForced,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Resolving,
        Check::Dim,
        Check::Forced,
        Check::Srg,
        Check::StrongForced,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Check::Resolving => "resolving",
            Check::Dim => "dim",
            Check::Forced => "forced",
            Check::Srg => "srg",
            Check::StrongForced => "strong-forced",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub count: usize,
    pub max_n: usize,
    pub min_girth: usize,
    pub max_girth: usize,
    pub seed: u64,
    /// Worker threads; 0 lets rayon decide.
    pub threads: usize,
    pub checks: Vec<Check>,
    /// Largest `n` handed to the exhaustive metric oracle.
    pub oracle_cap: usize,
    /// Random sets tested per instance by the resolving check.
    pub sets_per_instance: usize,
    /// Directory for reproducer files; none are written when absent.
    pub reproducer_dir: Option<PathBuf>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            count: 100,
            max_n: 14,
            min_girth: 3,
            max_girth: 10,
            seed: 0,
            threads: 0,
            checks: Check::ALL.to_vec(),
            oracle_cap: DEFAULT_ORACLE_CAP,
            sets_per_instance: 200,
            reproducer_dir: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub check: Check,
    pub run: usize,
    pub skipped: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: usize,
    pub check: Check,
    pub detail: String,
    pub graph: String,
    pub reproducer: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub instances: usize,
    pub rows: Vec<CheckRow>,
    pub failures: Vec<Failure>,
}

impl VerifySummary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("summary serializes")
    }

    pub fn to_human(&self) -> String {
        let mut out = format!(
            "{:<14} {:>6} {:>8} {:>7}\n",
            "check", "run", "skipped", "failed"
        );
        for r in &self.rows {
            out += &format!(
                "{:<14} {:>6} {:>8} {:>7}\n",
                r.check.as_str(),
                r.run,
                r.skipped,
                r.failed
            );
        }
        for f in &self.failures {
            out += &format!("FAIL #{} {}: {}\n", f.instance, f.check.as_str(), f.detail);
        }
        out
    }
}

enum Outcome {
    Pass,
    Skip,
    Fail(String),
}

/// The instance graph for index `i`. Generator parameters vary with the
/// instance so that forced-vertex graphs show up in volume.
pub fn verify_instance(cfg: &VerifyConfig, i: usize) -> Result<Graph> {
    let mut rng =
        ChaCha8Rng::seed_from_u64(cfg.seed ^ (i as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let hi = cfg.max_girth.min(cfg.max_n);
    if cfg.min_girth < 3 || cfg.min_girth > hi {
        return Err(Error::BoundsInfeasible(format!(
            "girth range [{}, {}] with max n {}",
            cfg.min_girth, cfg.max_girth, cfg.max_n
        )));
    }
    let girth = rng.gen_range(cfg.min_girth..=hi);
    let bounds = GenBounds {
        max_n: cfg.max_n,
        max_threads_per_vertex: rng.gen_range(1..=3),
        max_thread_len: rng.gen_range(1..=3),
        thread_prob: *[0.3, 0.5, 0.7].choose(&mut rng).expect("nonempty"),
        branch_prob: *[0.0, 0.0, 0.3].choose(&mut rng).expect("nonempty"),
    };
    gen_random_unicyclic(&GenSpec::new(girth, rng.gen(), bounds))
}

fn run_check(
    cfg: &VerifyConfig,
    check: Check,
    g: &Graph,
    dec: &UnicyclicDecomposition,
    i: usize,
) -> Outcome {
    let n = g.n();
    let within = n <= cfg.oracle_cap;
    match check {
        Check::Resolving => {
            let dist = all_pairs_distances(g);
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(i as u64));
            let verts: Vec<usize> = (0..n).collect();
            for _ in 0..cfg.sets_per_instance {
                let size = rng.gen_range(1..=n.min(6));
                let mut s: Vec<usize> = verts.choose_multiple(&mut rng, size).copied().collect();
                s.sort_unstable();
                if is_resolving_set_fast(dec, &s) != is_resolving_set_oracle(&dist, &s) {
                    return Outcome::Fail(format!("resolving verdict differs on S = {s:?}"));
                }
            }
            Outcome::Pass
        }
        Check::Dim | Check::Forced if !within => Outcome::Skip,
        Check::Dim => {
            let oracle =
                basis_forced_oracle(&all_pairs_distances(g), cfg.oracle_cap).expect("within cap");
            let fast = metric_dimension(dec);
            if fast == oracle.dim {
                Outcome::Pass
            } else {
                Outcome::Fail(format!("dim fast {fast} oracle {}", oracle.dim))
            }
        }
        Check::Forced => {
            let oracle =
                basis_forced_oracle(&all_pairs_distances(g), cfg.oracle_cap).expect("within cap");
            let fast = basis_forced_fast(dec);
            if fast.forced == oracle.forced {
                Outcome::Pass
            } else {
                Outcome::Fail(format!(
                    "forced fast {:?} oracle {:?}",
                    fast.forced, oracle.forced
                ))
            }
        }
        Check::Srg => {
            let star = reduce_to_star_form(dec);
            let sdec = decompose_unicyclic(&star.graph).expect("star form is unicyclic");
            match build_srg_unicyclic(&sdec) {
                Ok(srg) if srg == build_srg_definition(&star.graph) => Outcome::Pass,
                Ok(_) => Outcome::Fail("unicyclic SRG differs from the definition".into()),
                Err(e) => Outcome::Fail(format!("unicyclic SRG failed: {e}")),
            }
        }
        Check::StrongForced => {
            if build_srg_definition(g).boundary.len() > MIS_CAP {
                return Outcome::Skip;
            }
            let oracle = strong_basis_forced_oracle(g).expect("boundary within cap");
            match strong_basis_forced_fast(dec) {
                Ok(fast) if fast == oracle => Outcome::Pass,
                Ok(fast) => Outcome::Fail(format!("strong forced fast {fast:?} oracle {oracle:?}")),
                Err(e) => Outcome::Fail(format!("strong fast path failed: {e}")),
            }
        }
    }
}

fn flags(cfg: &VerifyConfig) -> String {
    format!(
        "--count {} --max-n {} --min-girth {} --max-girth {} --seed {}",
        cfg.count, cfg.max_n, cfg.min_girth, cfg.max_girth, cfg.seed
    )
}

fn write_reproducer(cfg: &VerifyConfig, f: &Failure) -> Option<PathBuf> {
    let dir = cfg.reproducer_dir.as_ref()?;
    std::fs::create_dir_all(dir).ok()?;
    let path = dir.join(format!(
        "ubx-repro-{}-{}.json",
        f.check.as_str(),
        f.instance
    ));
    let graph: serde_json::Value = serde_json::from_str(&f.graph).ok()?;
    let body = serde_json::json!({
        "graph": graph,
        "check": f.check,
        "instance": f.instance,
        "detail": f.detail,
        "flags": flags(cfg),
    });
    std::fs::write(&path, body.to_string()).ok()?;
    Some(path)
}

pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifySummary> {
    verify_instance(cfg, 0)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::PreconditionViolated(format!("thread pool: {e}")))?;
    let per_instance: Vec<Vec<(Check, Outcome, String)>> = pool.install(|| {
        (0..cfg.count)
            .into_par_iter()
            .map(|i| {
                let g = verify_instance(cfg, i).expect("bounds checked on instance 0");
                let dec = decompose_unicyclic(&g).expect("generator yields unicyclic graphs");
                cfg.checks
                    .iter()
                    .map(|&c| (c, run_check(cfg, c, &g, &dec, i), g.to_json()))
                    .collect()
            })
            .collect()
    });

    let mut rows: BTreeMap<Check, CheckRow> = cfg
        .checks
        .iter()
        .map(|&check| {
            let row = CheckRow {
                check,
                run: 0,
                skipped: 0,
                failed: 0,
            };
            (check, row)
        })
        .collect();
    let mut failures = Vec::new();
    for (i, outcomes) in per_instance.into_iter().enumerate() {
        for (check, outcome, graph) in outcomes {
            let row = rows.get_mut(&check).expect("row per check");
            match outcome {
                Outcome::Pass => row.run += 1,
                Outcome::Skip => row.skipped += 1,
                Outcome::Fail(detail) => {
                    row.run += 1;
                    row.failed += 1;
                    let mut f = Failure {
                        instance: i,
                        check,
                        detail,
                        graph,
                        reproducer: None,
                    };
                    f.reproducer = write_reproducer(cfg, &f);
                    failures.push(f);
                }
            }
        }
    }
    Ok(VerifySummary {
        instances: cfg.count,
        rows: rows.into_values().collect(),
        failures,
    })
}

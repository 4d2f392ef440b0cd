use std::collections::BTreeSet;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use unicyclic::generators::{fixture, gen_gn, gen_gtq, gen_random_unicyclic, GenBounds, GenSpec};
use unicyclic::metric::{
    basis_forced_fast, basis_forced_oracle, enumerate_metric_bases_oracle, metric_dimension,
    metric_dimension_oracle, oracle_cap_from_env, ForcedReport,
};
use unicyclic::report::{basis_gray, export_dot, export_srg_dot, AnalyzeReport, DotStyle};
use unicyclic::strong::{
    build_srg_definition, reduce_to_star_form, strong_report_fast, strong_report_oracle,
    strong_resolving_graph,
};
use unicyclic::transforms::{
    attach_pendant_forced_check, cycle_to_pendant, extend_with_path, pendant_to_cycle_check,
    TransformResult, Verification,
};
use unicyclic::verify::{run_verify, Check, VerifyConfig};
use unicyclic::{all_pairs_distances, decompose_unicyclic, parse_graph, Error, Graph};

#[derive(Parser)]
#[command(
    name = "ubx",
    version,
    about = "Metric and strong metric bases of unicyclic graphs"
)]
struct Cli {
    /// Tables instead of JSON.
    #[arg(long, global = true)]
    human: bool,
    /// Largest n for exhaustive oracles (default: UBX_ORACLE_CAP or 16).
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Input {
    /// Graph file (JSON or edge list); `-` reads stdin.
    file: PathBuf,
}

#[derive(Args)]
#[group(multiple = false)]
struct Mode {
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    fast: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Cycle, threads, L and b.
    Analyze(Input),
    /// Metric dimension.
    Dim {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        oracle: bool,
    },
    /// Every metric basis, by exhaustive search.
    Bases(Input),
    /// Basis forced vertices.
    Forced {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        mode: Mode,
        /// Emit DOT with forced vertices black and other basis vertices gray.
        #[arg(long)]
        dot: bool,
    },
    /// Strong metric dimension and strong basis forced vertices.
    Strong {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        mode: Mode,
    },
    /// Strong resolving graph.
    Srg {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Build from the definition instead of the unicyclic construction.
        #[arg(long)]
        definition: bool,
    },
    /// Star form used by the strong characterizations.
    Reduce(Input),
    #[command(subcommand)]
    Transform(TransformCmd),
    /// Write a generated graph.
    Gen(GenArgs),
    /// Compare fast paths with oracles on random instances.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum TransformCmd {
    /// Hang a path of length m at a vertex farthest from the forced set.
    Extend {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Attach a pendant to a forced vertex and decide if it is forced.
    Pendant {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: usize,
    },
    /// Attach a pendant to a forced cycle vertex.
    Cycle2pendant {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: usize,
    },
    /// Remove a forced pendant and decide if its cycle neighbour is forced.
    Pendant2cycle {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        vertex: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Random,
    Gn,
    Gtq,
    Fixture,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 6)]
    girth: usize,
    #[arg(long, default_value_t = 14)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    max_threads: usize,
    #[arg(long, default_value_t = 3)]
    max_thread_len: usize,
    #[arg(long, default_value_t = 0.5)]
    thread_prob: f64,
    #[arg(long, default_value_t = 0.0)]
    branch_prob: f64,
    /// `G_n` parameter.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// `G_{t,q}` parameters.
    #[arg(long, default_value_t = 2)]
    t: usize,
    #[arg(long, default_value_t = 2)]
    q: usize,
    /// Fixture name, e.g. fig2a.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 14)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    min_girth: usize,
    #[arg(long, default_value_t = 10)]
    max_girth: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long, default_value_t = 200)]
    sets: usize,
    /// Comma-separated subset of resolving,dim,forced,srg,strong-forced.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
    /// Where reproducer files go.
    #[arg(long, default_value = ".")]
    repro_dir: PathBuf,
}

enum Failure {
    Input(String),
    Disagreement(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(format!("{}: {e}", e.code()))
    }
}

fn read_graph(input: &Input) -> Result<Graph, Failure> {
    let mut text = String::new();
    if input.file.as_os_str() == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(&input.file)
            .map_err(|e| Failure::Input(format!("{}: {e}", input.file.display())))?;
    }
    Ok(parse_graph(&text)?)
}

fn forced_report(g: &Graph, mode: &Mode, cap: usize) -> Result<ForcedReport, Failure> {
    if mode.oracle {
        return Ok(basis_forced_oracle(&all_pairs_distances(g), cap)?);
    }
    match decompose_unicyclic(g) {
        Ok(dec) => Ok(basis_forced_fast(&dec)),
        Err(_) if !mode.fast => Ok(basis_forced_oracle(&all_pairs_distances(g), cap)?),
        Err(e) => Err(e.into()),
    }
}

fn set_str(s: &BTreeSet<usize>) -> String {
    format!("{:?}", s.iter().collect::<Vec<_>>())
}

fn transform_output(r: TransformResult, human: bool) -> Result<String, Failure> {
    let text = if human {
        format!(
            "anchor        {}\npredicted     {}\nobserved      {}\nverification  {:?}\ngraph         {}\n",
            r.anchor,
            r.predicted,
            r.observed.map_or("-".to_string(), |o| o.to_string()),
            r.verification,
            r.graph.to_json()
        )
    } else {
        r.to_json() + "\n"
    };
    if r.verification == Verification::Refuted {
        print!("{text}");
        return Err(Failure::Disagreement(
            "oracle refutes the predicted outcome".into(),
        ));
    }
    Ok(text)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let cap = cli.cap.unwrap_or_else(oracle_cap_from_env);
    let human = cli.human;
    match cli.cmd {
        Cmd::Analyze(input) => {
            let r = AnalyzeReport::new(&decompose_unicyclic(&read_graph(&input)?)?);
            Ok(if human {
                r.to_human()
            } else {
                r.to_json() + "\n"
            })
        }
        Cmd::Dim { input, oracle } => {
            let g = read_graph(&input)?;
            let dim = match decompose_unicyclic(&g) {
                Ok(dec) if !oracle => metric_dimension(&dec),
                _ => metric_dimension_oracle(&all_pairs_distances(&g), cap)?,
            };
            Ok(format!("{dim}\n"))
        }
        Cmd::Bases(input) => {
            let bases =
                enumerate_metric_bases_oracle(&all_pairs_distances(&read_graph(&input)?), cap)?;
            Ok(if human {
                bases.iter().map(|b| format!("{b:?}\n")).collect()
            } else {
                serde_json::json!({ "dim": bases[0].len(), "bases": bases }).to_string() + "\n"
            })
        }
        Cmd::Forced { input, mode, dot } => {
            let g = read_graph(&input)?;
            let r = forced_report(&g, &mode, cap)?;
            if dot {
                let bases = match &r.bases {
                    Some(b) => b.clone(),
                    None if g.n() <= cap => {
                        enumerate_metric_bases_oracle(&all_pairs_distances(&g), cap)?
                    }
                    None => Vec::new(),
                };
                let style = DotStyle {
                    gray: basis_gray(&bases, &r.forced),
                    black: r.forced.clone(),
                };
                return Ok(export_dot(&g, &style));
            }
            Ok(if human {
                format!(
                    "dim     {}\nforced  {}\nmethod  {}\n",
                    r.dim,
                    set_str(&r.forced),
                    r.method.as_str()
                )
            } else {
                r.to_json() + "\n"
            })
        }
        Cmd::Strong { input, mode } => {
            let g = read_graph(&input)?;
            let r = match decompose_unicyclic(&g) {
                Ok(dec) if !mode.oracle => strong_report_fast(&dec)?,
                Err(e) if mode.fast => return Err(e.into()),
                _ => strong_report_oracle(&g)?,
            };
            Ok(if human {
                format!(
                    "alpha          {}\ndim_s          {}\nstrong forced  {}\n",
                    r.alpha,
                    r.dim_s,
                    set_str(&r.forced_strong)
                )
            } else {
                r.to_json() + "\n"
            })
        }
        Cmd::Srg {
            input,
            format,
            definition,
        } => {
            let g = read_graph(&input)?;
            let srg = if definition {
                build_srg_definition(&g)
            } else {
                strong_resolving_graph(&decompose_unicyclic(&g)?)?
            };
            Ok(match format {
                Format::Json => serde_json::to_string(&srg).expect("srg serializes") + "\n",
                Format::Dot => {
                    let forced = match decompose_unicyclic(&g) {
                        Ok(dec) => strong_report_fast(&dec)?.forced_strong,
                        Err(_) => strong_report_oracle(&g)?.forced_strong,
                    };
                    export_srg_dot(&srg, &forced)
                }
            })
        }
        Cmd::Reduce(input) => {
            let star = reduce_to_star_form(&decompose_unicyclic(&read_graph(&input)?)?);
            let graph: serde_json::Value =
                serde_json::from_str(&star.graph.to_json()).expect("graph JSON is valid");
            Ok(serde_json::json!({ "graph": graph, "mapping": star.mapping }).to_string() + "\n")
        }
        Cmd::Transform(t) => {
            let r = match t {
                TransformCmd::Extend { input, m } => {
                    extend_with_path(&read_graph(&input)?, m, cap)?
                }
                TransformCmd::Pendant { input, vertex } => {
                    attach_pendant_forced_check(&read_graph(&input)?, vertex, cap)?
                }
                TransformCmd::Cycle2pendant { input, vertex } => {
                    cycle_to_pendant(&read_graph(&input)?, vertex, cap)?
                }
                TransformCmd::Pendant2cycle { input, vertex } => {
                    pendant_to_cycle_check(&read_graph(&input)?, vertex, cap)?
                }
            };
            transform_output(r, human)
        }
        Cmd::Gen(a) => {
            let g = match a.family {
                Family::Random => {
                    let bounds = GenBounds {
                        max_n: a.max_n,
                        max_threads_per_vertex: a.max_threads,
                        max_thread_len: a.max_thread_len,
                        thread_prob: a.thread_prob,
                        branch_prob: a.branch_prob,
                    };
                    gen_random_unicyclic(&GenSpec::new(a.girth, a.seed, bounds))?
                }
                Family::Gn if a.n >= 2 => gen_gn(a.n),
                Family::Gn => return Err(Failure::Input("--n must be at least 2".into())),
                Family::Gtq if a.t >= 2 && a.q >= 1 => gen_gtq(a.t, a.q),
                Family::Gtq => {
                    return Err(Failure::Input(
                        "--t must be at least 2 and --q at least 1".into(),
                    ))
                }
                Family::Fixture => {
                    let name = a
                        .name
                        .ok_or_else(|| Failure::Input("--name is required for fixtures".into()))?;
                    fixture(&name)
                        .ok_or_else(|| Failure::Input(format!("unknown fixture {name:?}")))?
                        .graph
                }
            };
            let text = g.to_json() + "\n";
            match a.out {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Cmd::Verify(a) => {
            let checks = if a.checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                a.checks
                    .iter()
                    .map(|name| {
                        Check::ALL
                            .into_iter()
                            .find(|c| c.as_str() == name)
                            .ok_or_else(|| Failure::Input(format!("unknown check {name:?}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            let cfg = VerifyConfig {
                count: a.count,
                max_n: a.max_n,
                min_girth: a.min_girth,
                max_girth: a.max_girth,
                seed: a.seed,
                threads: a.threads,
                checks,
                oracle_cap: cap,
                sets_per_instance: a.sets,
                reproducer_dir: Some(a.repro_dir),
            };
            let summary = run_verify(&cfg)?;
            let text = if human {
                summary.to_human()
            } else {
                summary.to_json() + "\n"
            };
            if summary.ok() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Disagreement(format!(
                    "{} disagreement(s)",
                    summary.failures.len()
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Disagreement(msg)) => {
            eprintln!("disagreement: {msg}");
            ExitCode::from(3)
        }
    }
}

use std::collections::BTreeMap;
use std::fs;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use fpclust::bench::{ratio_suite, scale_suite, SCALE_BUDGET, SCALE_DEFAULT_N};
use fpclust::exact::{ratio_of, ExactConfig, DEFAULT_NODE_LIMIT};
use fpclust::exact::{exact_by_assignment, exact_cmv_setcover};
use fpclust::gen::{gen_gadget, gen_random, gen_tight};
use fpclust::io::{
    emit_certificate, emit_partition, format_instance, parse_cubic_graph, parse_instance,
    parse_partition, write_atomic, InstanceMeta, RunReport,
};
use fpclust::{evaluate, greedy_cluster, greedy_cluster_streamed, Error, Objective};

#[derive(Parser)]
#[command(name = "fpclust", version, about = "Cluster fingerprint vectors with missing values")]
struct Cli {
    /// Worker threads for internal parallelism (0 = all cores). Never
    /// changes the output.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Cmv,
    Iecmv,
    Oecmv,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::Cmv => Objective::Cmv,
            ObjectiveArg::Iecmv => Objective::Iecmv,
            ObjectiveArg::Oecmv => Objective::Oecmv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Set cover for cmv, assignment enumeration otherwise.
    Auto,
    Assignment,
    Setcover,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Ratio,
    Scale,
}

#[derive(Subcommand)]
enum Command {
    /// Greedy clustering; prints a run report, writes the partition to -o.
    Greedy {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Objective reported as the run's value.
        #[arg(long, value_enum, default_value = "iecmv")]
        objective: ObjectiveArg,
        /// Stop after this many picks; the rest become singletons.
        #[arg(long)]
        budget: Option<NonZeroUsize>,
    },
    /// Exact optimum for one objective, compared with greedy.
    Exact {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        objective: ObjectiveArg,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
        /// Seconds before the set-cover search gives up.
        #[arg(long)]
        timeout: Option<f64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Validate and score a partition file.
    Eval {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short = 'P', long)]
        partition: PathBuf,
    },
    /// The four-fingerprint instance where greedy is off by a factor 2.
    GenTight {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random planted-center instance.
    GenRandom {
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(short = 'l', long)]
        l: usize,
        #[arg(short = 'p', long)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        centers: usize,
        #[arg(long, default_value_t = 0.1)]
        missing_rate: f64,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Fingerprint instance encoding vertex cover on a cubic graph.
    GenGadget {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the gadget certificate as JSON.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Run a benchmark suite; prints one JSON report per line and a summary.
    Bench {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        /// Largest instance size (ratio: default 7; scale: default 10000).
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::File {
        path: path.display().to_string(),
        source,
    })
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Error> {
    match output {
        Some(path) => write_atomic(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn config(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Greedy {
            input,
            output,
            objective,
            budget,
        } => {
            let inst = parse_instance(&read(&input)?)?;
            let start = Instant::now();
            let (part, trace) = greedy_cluster_streamed(&inst, budget);
            let elapsed = start.elapsed();
            let eval = evaluate(&inst, &part)?;
            let objective = Objective::from(objective);
            if let Some(out) = &output {
                write_atomic(out, &emit_partition(&part, &eval))?;
            }
            let report = RunReport {
                instance: InstanceMeta::from(&inst),
                algorithm: "greedy".into(),
                objective,
                value: eval.value(objective),
                optimum: None,
                ratio: None,
                wall_time_ms: elapsed.as_secs_f64() * 1e3,
                config: config(&[
                    ("input", input.display().to_string()),
                    ("budget", budget.map_or("none".into(), |b| b.to_string())),
                    ("iterations", trace.iterations.to_string()),
                ]),
            };
            print!("{}", report.to_json_line());
        }
        Command::Exact {
            input,
            objective,
            method,
            node_limit,
            timeout,
            output,
        } => {
            let inst = parse_instance(&read(&input)?)?;
            let objective = Objective::from(objective);
            if let Some(t) = timeout {
                if !(t.is_finite() && t >= 0.0) {
                    return Err(Error::InvalidParameter(format!("timeout {t} is not a duration")));
                }
            }
            let cfg = ExactConfig {
                node_limit,
                timeout: timeout.map(Duration::from_secs_f64),
            };
            let start = Instant::now();
            let (name, result) = match (method, objective) {
                (Method::Setcover, Objective::Cmv) | (Method::Auto, Objective::Cmv) => {
                    ("exact-setcover", exact_cmv_setcover(&inst, cfg.timeout)?)
                }
                (Method::Setcover, _) => {
                    return Err(Error::InvalidParameter(
                        "the set-cover oracle only solves cmv".into(),
                    ))
                }
                (Method::Assignment, _) | (Method::Auto, _) => (
                    "exact-assignment",
                    exact_by_assignment(&inst, objective, cfg.node_limit)?,
                ),
            };
            let elapsed = start.elapsed();
            let (greedy, _) = greedy_cluster(&inst);
            let greedy_value = evaluate(&inst, &greedy)?.value(objective);
            if let Some(out) = &output {
                let eval = evaluate(&inst, &result.witness)?;
                write_atomic(out, &emit_partition(&result.witness, &eval))?;
            }
            let report = RunReport {
                instance: InstanceMeta::from(&inst),
                algorithm: name.into(),
                objective,
                value: result.optimum,
                optimum: Some(result.optimum),
                ratio: Some(ratio_of(objective, greedy_value, result.optimum)),
                wall_time_ms: elapsed.as_secs_f64() * 1e3,
                config: config(&[
                    ("input", input.display().to_string()),
                    ("greedy_value", greedy_value.to_string()),
                    ("explored", result.explored.to_string()),
                    ("node_limit", node_limit.to_string()),
                    ("timeout", timeout.map_or("none".into(), |t| t.to_string())),
                ]),
            };
            print!("{}", report.to_json_line());
        }
        Command::Eval { input, partition } => {
            let inst = parse_instance(&read(&input)?)?;
            let (part, _) = parse_partition(&read(&partition)?)?;
            let eval = evaluate(&inst, &part)?;
            print!("{}", emit_partition(&part, &eval));
        }
        Command::GenTight { output } => emit(output.as_deref(), &format_instance(&gen_tight()))?,
        Command::GenRandom {
            n,
            l,
            p,
            centers,
            missing_rate,
            seed,
            output,
        } => {
            let inst = gen_random(n, l, p, centers, missing_rate, seed)?;
            emit(output.as_deref(), &format_instance(&inst))?;
        }
        Command::GenGadget {
            graph,
            output,
            certificate,
        } => {
            let g = parse_cubic_graph(&read(&graph)?)?;
            let (inst, cert) = gen_gadget(&g);
            if let Some(path) = &certificate {
                write_atomic(path, &emit_certificate(&cert))?;
            }
            emit(output.as_deref(), &format_instance(&inst))?;
        }
        Command::Bench {
            suite,
            seeds,
            max_n,
            node_limit,
        } => match suite {
            Suite::Ratio => {
                let cfg = ExactConfig {
                    node_limit,
                    timeout: None,
                };
                let (rows, summary) = ratio_suite(seeds, max_n.unwrap_or(7), &cfg)?;
                for r in &rows {
                    print!("{}", r.to_json_line());
                }
                println!("{}", serde_json::to_string(&summary)?);
                if summary.violations() > 0 {
                    return Err(Error::InvalidParameter(format!(
                        "{} instances exceed the factor-2 bound",
                        summary.violations()
                    )));
                }
            }
            Suite::Scale => {
                let rows = scale_suite(seeds, max_n.unwrap_or(SCALE_DEFAULT_N))?;
                for r in &rows {
                    print!("{}", r.report.to_json_line());
                }
                if let Some(slow) = rows.iter().find(|r| r.elapsed > SCALE_BUDGET) {
                    return Err(Error::InvalidParameter(format!(
                        "greedy took {:.0} ms, over the {} ms budget",
                        slow.elapsed.as_secs_f64() * 1e3,
                        SCALE_BUDGET.as_millis()
                    )));
                }
            }
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            // clap's rendering already starts with "error:".
            eprint!("{}", e.render());
            return ExitCode::from(1);
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers)
        .build()
        .expect("thread pool");
    match pool.install(|| run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_capacity() { 2 } else { 1 })
        }
    }
}

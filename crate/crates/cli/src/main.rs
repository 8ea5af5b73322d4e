use std::fmt::Display;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use log::{debug, info};
use rayon::prelude::*;

use majcolor_core::io::{parse_edge_list, write_edge_list, EdgeListFile};
use majcolor_core::oracle::find_majority_coloring;
use majcolor_core::{
    alpha_majority_k2, balanced_2coloring, balanced_2coloring_pinned, brute_min_colors, generate,
    majority3, majority4, resample_until_valid, Adjacency, Alpha, ColoringReport, Criterion,
    EdgeColoring, Error, Graph, Params, ResampleConfig,
};

#[derive(Parser)]
#[command(
    name = "majcolor",
    version,
    about = "Majority edge-colorings of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Edge-list file (stdin when omitted).
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Where to write the report or generated graph (stdout when omitted).
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[arg(long, global = true)]
    k: Option<usize>,

    /// Fraction P/Q, e.g. 1/3.
    #[arg(long, global = true)]
    alpha: Option<Alpha>,

    #[arg(long, global = true)]
    seed: Option<u64>,

    #[arg(long, global = true)]
    max_rounds: Option<usize>,

    /// Pin vertex for color2-pinned, in file numbering.
    #[arg(long, global = true)]
    pin: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Coloring to check with `verify`: a JSON report, a JSON array, or
    /// whitespace-separated colors in edge order.
    #[arg(long, global = true)]
    coloring: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// 2-coloring with at most ceil(d/2) edges of each color per vertex.
    Color2,
    /// Exact 2-coloring of an Eulerian graph with an odd edge count.
    #[command(name = "color2-pinned")]
    Color2Pinned,
    /// Majority 4-coloring (minimum degree 2).
    Color4,
    /// Majority 3-coloring (minimum degree 4).
    Color3,
    /// 1/k-majority (k+2)-coloring; k from --k or --alpha.
    Alpha,
    /// 1/k-majority (k+1)-coloring by random resampling.
    Random,
    /// Check a given coloring.
    Verify,
    /// Fewest colors of a majority coloring, by exhaustive search (--k caps it).
    Oracle,
    /// Write a graph from a named family.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Time every algorithm over a generated suite.
    Bench {
        /// Number of graphs in the suite.
        #[arg(long, default_value_t = 32)]
        count: usize,
        /// Vertices per graph.
        #[arg(long, default_value_t = 120)]
        vertices: usize,
        /// Minimum degree of the suite graphs.
        #[arg(long, default_value_t = 8)]
        min_degree: usize,
    },
}

#[derive(Subcommand)]
enum Family {
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Petersen,
    RandomRegular {
        n: usize,
        d: usize,
        #[arg(id = "family_seed", value_name = "SEED")]
        seed: u64,
    },
    RandomMindeg {
        n: usize,
        delta: usize,
        #[arg(id = "family_seed", value_name = "SEED")]
        seed: u64,
    },
}

/// Exit code and message.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn infeasible(message: impl Display) -> Self {
        Failure {
            code: 1,
            message: message.to_string(),
        }
    }

    fn io(message: impl Display) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }

    fn core(e: Error, base: usize) -> Self {
        let code = if e.is_parse() { 2 } else { 1 };
        Failure {
            code,
            message: e.offset_vertices(base).to_string(),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

fn read_text(path: Option<&Path>) -> Outcome<String> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::io(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::io(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn load(cli: &Cli) -> Outcome<EdgeListFile> {
    let text = read_text(cli.input.as_deref())?;
    let file = parse_edge_list(&text).map_err(|e| Failure::core(e, 0))?;
    debug!(
        "loaded {} vertices, {} edges",
        file.graph.vertex_count(),
        file.graph.edge_count()
    );
    Ok(file)
}

fn emit(cli: &Cli, text: &str) -> Outcome<()> {
    match &cli.output {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::io(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn emit_report(cli: &Cli, report: &ColoringReport) -> Outcome<()> {
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    emit(cli, &text)?;
    if report.verified {
        Ok(())
    } else {
        Err(Failure::infeasible(format!(
            "coloring fails verification at {} vertex/color pairs",
            report.violations.len()
        )))
    }
}

fn base_params(cli: &Cli) -> Params {
    Params {
        k: cli.k,
        alpha: cli.alpha.map(|a| a.to_string()),
        seed: cli.seed,
        max_rounds: cli.max_rounds,
        pin: cli.pin,
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

/// `k` for the `1/k` target of the `alpha` command: `--k`, or the smallest
/// `k` with `1/k <= P/Q`.
fn alpha_k(cli: &Cli) -> Outcome<usize> {
    match (cli.k, cli.alpha) {
        (Some(k), _) => Ok(k),
        (None, Some(a)) => Ok(a.den().div_ceil(a.num()) as usize),
        (None, None) => Err(Failure::infeasible("alpha needs --k or --alpha")),
    }
}

fn color(cli: &Cli) -> Outcome<()> {
    let file = load(cli)?;
    let g = &file.graph;
    let base = file.base;
    let fail = |e: Error| Failure::core(e, base);

    let (name, result, criterion, millis) = match cli.command {
        Command::Color2 => {
            let (r, ms) = timed(|| balanced_2coloring(g));
            ("color2", r, Criterion::Balanced, ms)
        }
        Command::Color2Pinned => {
            let pin = cli
                .pin
                .ok_or_else(|| Failure::infeasible("color2-pinned needs --pin"))?;
            let pin = file.from_file_id(pin).map_err(|_| {
                Failure::infeasible(format!("pin {pin} is not a vertex of the graph"))
            })?;
            let (r, ms) = timed(|| balanced_2coloring_pinned(g, pin));
            ("color2-pinned", r, Criterion::Pinned { pin }, ms)
        }
        Command::Color4 => {
            let (r, ms) = timed(|| majority4(g));
            ("color4", r, Criterion::Majority, ms)
        }
        Command::Color3 => {
            let (r, ms) = timed(|| majority3(g));
            ("color3", r, Criterion::Majority, ms)
        }
        Command::Alpha => {
            let k = alpha_k(cli)?;
            let target = match cli.alpha {
                Some(a) => a,
                None => Alpha::reciprocal(k).map_err(fail)?,
            };
            let (r, ms) = timed(|| alpha_majority_k2(g, k));
            ("alpha", r, Criterion::from(target), ms)
        }
        Command::Random => {
            let k = cli.k.unwrap_or(2);
            let mut cfg = ResampleConfig::new(g, k, cli.seed.unwrap_or(0));
            if let Some(r) = cli.max_rounds {
                cfg = cfg.with_max_rounds(r);
            }
            let target = Alpha::reciprocal(k).map_err(fail)?;
            let (r, ms) = timed(|| resample_until_valid(g, &cfg));
            if let Ok(out) = &r {
                info!("resampled {} times", out.rounds());
            }
            ("random", r.map(|o| o.coloring), Criterion::from(target), ms)
        }
        _ => unreachable!("not a coloring command"),
    };
    let coloring = result.map_err(fail)?;
    let report = ColoringReport::build(
        name,
        g,
        &coloring,
        criterion,
        base_params(cli),
        base,
        millis,
    )
    .map_err(fail)?;
    emit_report(cli, &report)
}

fn read_coloring(cli: &Cli, g: &Graph) -> Outcome<(EdgeColoring, Option<Criterion>)> {
    let path = cli
        .coloring
        .as_deref()
        .ok_or_else(|| Failure::io("verify needs --coloring"))?;
    let text = read_text(Some(path))?;
    let (colors, palette, criterion) =
        if let Ok(report) = serde_json::from_str::<ColoringReport>(&text) {
            (report.colors, Some(report.k), Some(report.criterion))
        } else if let Ok(colors) = serde_json::from_str::<Vec<u32>>(&text) {
            (colors, None, None)
        } else {
            let colors = text
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Failure::io(format!("cannot parse {}: {e}", path.display())))?;
            (colors, None, None)
        };
    if colors.len() != g.edge_count() {
        return Err(Failure::io(format!(
            "{} colors for {} edges",
            colors.len(),
            g.edge_count()
        )));
    }
    let palette = cli
        .k
        .or(palette)
        .unwrap_or_else(|| colors.iter().copied().max().unwrap_or(1) as usize);
    Ok((EdgeColoring::new(palette, colors), criterion))
}

fn verify(cli: &Cli) -> Outcome<()> {
    let file = load(cli)?;
    let g = &file.graph;
    let base = file.base;
    let (coloring, stored) = read_coloring(cli, g)?;
    let criterion = if let Some(a) = cli.alpha {
        Criterion::from(a)
    } else if let Some(pin) = cli.pin {
        let pin = file.from_file_id(pin).map_err(|e| Failure::core(e, 0))?;
        Criterion::Pinned { pin }
    } else {
        match stored {
            // stored pins are in file numbering
            Some(Criterion::Pinned { pin }) => Criterion::Pinned {
                pin: file.from_file_id(pin).map_err(|e| Failure::core(e, 0))?,
            },
            Some(c) => c,
            None => Criterion::Majority,
        }
    };
    let report = ColoringReport::build(
        "verify",
        g,
        &coloring,
        criterion,
        base_params(cli),
        base,
        0.0,
    )
    .map_err(|e| Failure::core(e, base))?;
    emit_report(cli, &report)
}

fn oracle(cli: &Cli) -> Outcome<()> {
    let file = load(cli)?;
    let g = &file.graph;
    let k_max = cli.k.unwrap_or(6);
    let (found, millis) = timed(|| {
        brute_min_colors(g, k_max).map(|k| find_majority_coloring(g, k).expect("witness exists"))
    });
    let coloring = found.ok_or_else(|| {
        Failure::infeasible(format!("no majority coloring with at most {k_max} colors"))
    })?;
    let report = ColoringReport::build(
        "oracle",
        g,
        &coloring,
        Criterion::Majority,
        base_params(cli),
        file.base,
        millis,
    )
    .map_err(|e| Failure::core(e, file.base))?;
    info!("minimum number of colors: {}", report.k);
    emit_report(cli, &report)
}

fn gen(cli: &Cli, family: &Family) -> Outcome<()> {
    let g = match *family {
        Family::Cycle { n } => generate::cycle(n),
        Family::Complete { n } => generate::complete(n),
        Family::CompleteBipartite { a, b } => generate::complete_bipartite(a, b),
        Family::Petersen => Ok(generate::petersen()),
        Family::RandomRegular { n, d, seed } => generate::random_regular(n, d, seed),
        Family::RandomMindeg { n, delta, seed } => generate::random_mindeg(n, delta, seed),
    }
    .map_err(|e| Failure::core(e, 0))?;
    emit(cli, &write_edge_list(&g))
}

type Kernel = fn(&Graph) -> bool;

const KERNELS: [(&str, Kernel); 5] = [
    ("color2", |g| balanced_2coloring(g).is_ok()),
    ("color4", |g| majority4(g).is_ok()),
    ("color3", |g| majority3(g).is_ok()),
    ("alpha k=3", |g| alpha_majority_k2(g, 3).is_ok()),
    ("random k=2", |g| {
        resample_until_valid(g, &ResampleConfig::new(g, 2, 0)).is_ok()
    }),
];

fn percentile(sorted: &[Duration], q: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let rank = ((q * sorted.len() as f64).ceil() as usize).clamp(1, sorted.len());
    sorted[rank - 1].as_secs_f64() * 1e3
}

fn bench(cli: &Cli, count: usize, vertices: usize, min_degree: usize) -> Outcome<()> {
    let threads = std::env::var("MAJCOLOR_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(Failure::io)?;
    let seed = cli.seed.unwrap_or(0);
    let suite = (0..count as u64)
        .map(|i| generate::random_mindeg(vertices, min_degree, seed.wrapping_add(i)))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::core(e, 0))?;

    let mut rows = Vec::new();
    for (name, kernel) in KERNELS {
        let mut runs: Vec<(Duration, bool)> = pool.install(|| {
            suite
                .par_iter()
                .map(|g| {
                    let start = Instant::now();
                    let ok = kernel(g);
                    (start.elapsed(), ok)
                })
                .collect()
        });
        runs.sort_by_key(|r| r.0);
        let times: Vec<Duration> = runs.iter().map(|r| r.0).collect();
        let failures = runs.iter().filter(|r| !r.1).count();
        rows.push((name, times, failures));
    }

    let text = match cli.format {
        Format::Json => {
            let entries: Vec<serde_json::Value> = rows
                .iter()
                .map(|(name, t, failures)| {
                    serde_json::json!({
                        "algorithm": name,
                        "runs": t.len(),
                        "failures": failures,
                        "p50_ms": percentile(t, 0.5),
                        "p90_ms": percentile(t, 0.9),
                        "p99_ms": percentile(t, 0.99),
                        "max_ms": percentile(t, 1.0),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&serde_json::json!({
                "graphs": count,
                "vertices": vertices,
                "min_degree": min_degree,
                "threads": pool.current_num_threads(),
                "results": entries,
            }))
            .expect("json")
        }
        Format::Text => {
            let mut s = format!(
                "{count} graphs, n = {vertices}, min degree >= {min_degree}, {} threads\n\n",
                pool.current_num_threads()
            );
            s.push_str(&format!(
                "{:<12}{:>10}{:>10}{:>10}{:>10}{:>10}\n",
                "algorithm", "p50 ms", "p90 ms", "p99 ms", "max ms", "failed"
            ));
            for (name, t, failures) in &rows {
                s.push_str(&format!(
                    "{:<12}{:>10.3}{:>10.3}{:>10.3}{:>10.3}{:>10}\n",
                    name,
                    percentile(t, 0.5),
                    percentile(t, 0.9),
                    percentile(t, 0.99),
                    percentile(t, 1.0),
                    failures
                ));
            }
            s
        }
    };
    emit(cli, &text)
}

fn run(cli: &Cli) -> Outcome<()> {
    match &cli.command {
        Command::Verify => verify(cli),
        Command::Oracle => oracle(cli),
        Command::Gen { family } => gen(cli, family),
        Command::Bench {
            count,
            vertices,
            min_degree,
        } => bench(cli, *count, *vertices, *min_degree),
        _ => color(cli),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

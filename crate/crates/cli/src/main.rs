//! Command-line front end: generate seeded instances, compute unicycle
//! diameters, find diameter-optimal tree shortcuts, and time both solvers.
//!
//! Exit codes: 0 on success, 1 on any domain or usage error, 2 when
//! `--verify` finds a mismatch against the brute-force oracle.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;
use unicycle_core as core;
use unicycle_core::{GenSpec, Length, ShortcutOracle, TreeShape, WeightedGraph};

#[derive(Parser)]
#[command(name = "unicycle", version, about = "Unicycle graph diameter and tree augmentation")]
struct Cli {
    /// Worker threads for the augmentation search (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Tree,
    Unicycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Diameter,
    Augment,
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Random,
    Path,
    Star,
    Caterpillar,
    Binary,
}

impl From<ShapeArg> for TreeShape {
    fn from(s: ShapeArg) -> TreeShape {
        match s {
            ShapeArg::Random => TreeShape::Random,
            ShapeArg::Path => TreeShape::Path,
            ShapeArg::Star => TreeShape::Star,
            ShapeArg::Caterpillar => TreeShape::Caterpillar,
            ShapeArg::Binary => TreeShape::Binary,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded instance and write it as a graph file.
    Gen {
        kind: GraphKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Tree skeleton; ignored for unicycle instances.
        #[arg(long, value_enum, default_value = "random")]
        shape: ShapeArg,
        /// Cycle size for unicycle instances.
        #[arg(long, default_value_t = 3)]
        cycle: usize,
        /// Smallest edge length.
        #[arg(long, default_value_t = 1)]
        wmin: Length,
        /// Largest edge length.
        #[arg(long, default_value_t = 100)]
        wmax: Length,
        /// Output file.
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Compute the diameter of a unicycle graph.
    Diameter {
        file: PathBuf,
        /// Cross-check against the all-pairs brute force; exit 2 on mismatch.
        #[arg(long)]
        verify: bool,
    },
    /// Find a shortcut minimizing the augmented tree's diameter.
    Augment {
        file: PathBuf,
        /// Shortcut length oracle: constant:C, scaled:NUM/DEN,
        /// hash:SEED:LO:HI, or matrix:FILE.
        #[arg(long)]
        oracle: String,
        /// Cross-check against the all-shortcuts brute force; exit 2 on
        /// mismatch.
        #[arg(long)]
        verify: bool,
    },
    /// Time a solver on seeded instances; writes CSV to stdout.
    Bench {
        #[arg(long, value_enum)]
        algo: Algo,
        /// Comma-separated instance sizes.
        #[arg(long)]
        sizes: String,
        #[arg(long)]
        seed: u64,
        /// Timed repetitions per size (one warmup run is not reported).
        #[arg(long)]
        reps: usize,
    },
}

enum Failure {
    Domain(String),
    Mismatch(String),
}

impl From<core::Error> for Failure {
    fn from(e: core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    let threads = cli.threads;
    match with_threads(threads, || run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("verification mismatch: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(feature = "parallel")]
fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_threads<T>(_threads: Option<usize>, f: impl FnOnce() -> T) -> T {
    f()
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen {
            kind,
            n,
            seed,
            shape,
            cycle,
            wmin,
            wmax,
            output,
        } => {
            let spec = GenSpec::new(n, seed)
                .shape(shape.into())
                .lengths(wmin, wmax)
                .cycle(cycle);
            let g = match kind {
                GraphKind::Tree => core::random_tree(&spec)?,
                GraphKind::Unicycle => core::random_unicycle(&spec)?,
            };
            std::fs::write(&output, core::write_graph(&g))?;
            Ok(())
        }
        Command::Diameter { file, verify } => {
            let g = load_graph(&file)?;
            let result = core::diameter(&g)?;
            println!("diameter {}", result.value);
            println!("pair {} {}", result.pair.0, result.pair.1);
            if verify {
                verify_diameter(&g, result.value, result.pair)?;
            }
            Ok(())
        }
        Command::Augment {
            file,
            oracle,
            verify,
        } => {
            let t = load_graph(&file)?;
            let oracle = ShortcutOracle::parse(&oracle)?;
            oracle.check_vertex_count(t.vertex_count())?;
            let s = core::solve_doat(&t, &oracle)?;
            println!("shortcut {} {}", s.shortcut.0, s.shortcut.1);
            println!("length {}", s.length);
            println!("diameter {}", s.value);
            if verify {
                verify_augment(&t, &oracle, &s)?;
            }
            Ok(())
        }
        Command::Bench {
            algo,
            sizes,
            seed,
            reps,
        } => bench(algo, &sizes, seed, reps),
    }
}

fn load_graph(path: &PathBuf) -> Result<WeightedGraph, Failure> {
    let text = std::fs::read_to_string(path)?;
    Ok(core::parse_graph(&text)?)
}

fn verify_diameter(g: &WeightedGraph, value: Length, pair: (usize, usize)) -> Result<(), Failure> {
    let (brute_value, _) = core::brute_diameter(g)?;
    if brute_value != value {
        return Err(Failure::Mismatch(format!(
            "diameter {value} but brute force found {brute_value}"
        )));
    }
    let d = core::apsp(g)?;
    let witness = d.get(pair.0, pair.1);
    if witness != value {
        return Err(Failure::Mismatch(format!(
            "witness pair {} {} is at distance {witness}, not {value}",
            pair.0, pair.1
        )));
    }
    Ok(())
}

fn verify_augment(
    t: &WeightedGraph,
    oracle: &ShortcutOracle,
    s: &core::DoatSolution,
) -> Result<(), Failure> {
    let (_, brute_value) = core::brute_doat(t, oracle)?;
    if brute_value != s.value {
        return Err(Failure::Mismatch(format!(
            "augmented diameter {} but brute force found {brute_value}",
            s.value
        )));
    }
    let mut edges: Vec<(usize, usize, Length)> =
        t.edges().iter().map(|e| (e.u, e.v, e.len)).collect();
    edges.push((s.shortcut.0, s.shortcut.1, s.length));
    let augmented = WeightedGraph::new(t.vertex_count(), &edges);
    let (check, _) = core::brute_diameter(&augmented)?;
    if check != s.value {
        return Err(Failure::Mismatch(format!(
            "reported shortcut yields diameter {check}, not {}",
            s.value
        )));
    }
    Ok(())
}

fn bench(algo: Algo, sizes: &str, seed: u64, reps: usize) -> Result<(), Failure> {
    let sizes: Vec<usize> = sizes
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Failure::Domain(format!("bad size `{s}`")))
        })
        .collect::<Result<_, _>>()?;
    println!("algo,n,seed,rep,micros");
    for n in sizes {
        match algo {
            Algo::Diameter => {
                let g = core::random_unicycle(&GenSpec::new(n, seed).cycle((n / 2).max(3)))?;
                let _ = core::diameter(&g)?; // warmup
                for rep in 0..reps {
                    let start = Instant::now();
                    let result = core::diameter(&g)?;
                    let micros = start.elapsed().as_micros();
                    std::hint::black_box(result);
                    println!("diameter,{n},{seed},{rep},{micros}");
                }
            }
            Algo::Augment => {
                let t = core::random_tree(&GenSpec::new(n, seed))?;
                let oracle = ShortcutOracle::hash(seed, 1, 20);
                let _ = core::solve_doat(&t, &oracle)?; // warmup
                for rep in 0..reps {
                    let start = Instant::now();
                    let result = core::solve_doat(&t, &oracle)?;
                    let micros = start.elapsed().as_micros();
                    std::hint::black_box(result);
                    println!("augment,{n},{seed},{rep},{micros}");
                }
            }
        }
    }
    Ok(())
}

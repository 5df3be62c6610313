//! Command-line front end. The binary only forwards to [`run`], which keeps
//! every subcommand testable in-process.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand};

use crate::bench::{bench_dir, BenchConfig};
use crate::bounds::BoundKind;
use crate::complex::normalize_pair;
use crate::error::{Error, Result};
use crate::generators::{generate_k_critical, GenSpec, DEFAULT_COORD_RANGE};
use crate::heatmap::{compute_heatmap, grid_csv};
use crate::io::{read_filtration, write_bifiltration};
use crate::solver::{run as solve, slice_diagram, write_trace_csv, Mode, SolverConfig, Status, Traversal};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_CONVERGED: i32 = 2;
pub const EXIT_ERROR: i32 = 1;

#[derive(Parser, Debug)]
#[command(name = "matchdist", version, about = "Matching distance between bi-filtrations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Approximate the matching distance between two filtration files.
    Dist {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        epsilon: f64,
        /// Relative instead of absolute error.
        #[arg(long)]
        relative: bool,
        /// Upper bound: l (linear), c (constant) or g (global).
        #[arg(long, default_value = "l")]
        bound: BoundKind,
        #[arg(long, default_value_t = 0)]
        dim: usize,
        #[arg(long, default_value = "bfs")]
        traversal: Traversal,
        /// Wall-clock budget in milliseconds; implies priority traversal.
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Write one CSV row per evaluated slice.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write the two diagrams at the best slice into this directory.
        #[arg(long)]
        dump_diagrams: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Zero the elapsed column of the trace.
        #[arg(long)]
        no_timing: bool,
    },
    /// Sample the bottleneck distance on a grid of slices.
    Heatmap {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value_t = 0)]
        dim: usize,
        /// Directory for the per-type and composite CSV files; without it the
        /// composite grid goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Generate a random bi-filtration.
    Gen {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        maximal: usize,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_COORD_RANGE)]
        coord_range: u32,
        /// Critical values per simplex (at most).
        #[arg(long, default_value_t = 1)]
        critical: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the three bounds on all pairs of files in a directory.
    Bench {
        dir: PathBuf,
        #[arg(long)]
        epsilon: f64,
        #[arg(long)]
        relative: bool,
        #[arg(long)]
        same_size_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        dim: usize,
    },
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_ERROR
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Dist {
            a,
            b,
            epsilon,
            relative,
            bound,
            dim,
            traversal,
            budget_ms,
            trace,
            dump_diagrams,
            threads,
            no_timing,
        } => {
            let (f1, f2, _) = normalize_pair(&read_filtration(&a)?, &read_filtration(&b)?);
            let mut cfg = if relative { SolverConfig::relative(epsilon) } else { SolverConfig::absolute(epsilon) };
            cfg = cfg
                .with_bound(bound)
                .with_homology_dim(dim)
                .with_traversal(traversal)
                .with_threads(threads)
                .with_trace(trace.is_some());
            if let Some(ms) = budget_ms {
                cfg = cfg.with_budget(Duration::from_millis(ms));
            }
            let r = solve(&f1, &f2, &cfg)?;
            if let (Some(path), Some(rows)) = (&trace, &r.trace) {
                write_trace_csv(rows, fs::File::create(path)?, !no_timing)?;
            }
            if let (Some(dir), Some(slice)) = (&dump_diagrams, &r.best_slice) {
                fs::create_dir_all(dir)?;
                fs::write(dir.join("diagram_a.txt"), slice_diagram(&f1, slice, dim).to_dump())?;
                fs::write(dir.join("diagram_b.txt"), slice_diagram(&f2, slice, dim).to_dump())?;
            }
            writeln!(stdout, "delta = {}", r.delta)?;
            writeln!(stdout, "rho = {}", r.rho)?;
            writeln!(stdout, "residual_upper = {}", r.residual_upper)?;
            writeln!(stdout, "calls = {}", r.calls)?;
            writeln!(stdout, "deepest_level = {}", r.deepest_level)?;
            if let Some(s) = &r.best_slice {
                writeln!(stdout, "best_slice = {} {} {}", s.kind, s.lambda, s.mu)?;
            }
            writeln!(stdout, "status = {}", r.status)?;
            writeln!(stderr, "time_ms = {:.3}", r.elapsed.as_secs_f64() * 1e3)?;
            let stopped_by_budget = budget_ms.is_some() && r.status == Status::BudgetExhausted;
            Ok(if r.converged() || stopped_by_budget { EXIT_OK } else { EXIT_NOT_CONVERGED })
        }
        Command::Heatmap { a, b, depth, dim, out, threads } => {
            let (f1, f2, _) = normalize_pair(&read_filtration(&a)?, &read_filtration(&b)?);
            let h = compute_heatmap(&f1, &f2, depth, dim, threads)?;
            match out {
                Some(dir) => h.write_csvs(&dir)?,
                None => write!(stdout, "{}", grid_csv(&format!("# type=composite depth={depth}"), &h.composite()))?,
            }
            Ok(EXIT_OK)
        }
        Command::Gen { vertices, maximal, dim, seed, coord_range, critical, out } => {
            let spec = GenSpec { n_vertices: vertices, n_maximal: maximal, max_dim: dim, seed, coord_range };
            let text = write_bifiltration(&generate_k_critical(&spec, critical)?);
            match out {
                Some(path) => fs::write(path, text)?,
                None => write!(stdout, "{text}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Bench { dir, epsilon, relative, same_size_only, out, dim } => {
            if epsilon.is_nan() || epsilon <= 0.0 {
                return Err(Error::InvalidConfig(format!("epsilon must be positive, got {epsilon}")));
            }
            let mode = if relative { Mode::Relative(epsilon) } else { Mode::Absolute(epsilon) };
            let cfg = BenchConfig { homology_dim: dim, same_size_only, ..BenchConfig::new(mode) };
            let report = bench_dir(&dir, &cfg)?;
            match out {
                Some(path) => fs::write(path, report.to_csv())?,
                None => write!(stdout, "{}", report.to_csv())?,
            }
            write!(stdout, "{}", report.summary())?;
            Ok(EXIT_OK)
        }
    }
}

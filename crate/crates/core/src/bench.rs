//! Compares the three bounds on every pair of filtrations in a directory.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::bounds::BoundKind;
use crate::complex::{normalize_pair, BiFiltration};
use crate::error::{Error, Result};
use crate::io::{dataset_files, read_filtration};
use crate::solver::{reduction_rate, run, Mode, SolverConfig, Status};

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub mode: Mode,
    pub homology_dim: usize,
    /// Only compare filtrations with the same number of simplices.
    pub same_size_only: bool,
    pub threads: usize,
}

impl BenchConfig {
    pub fn new(mode: Mode) -> Self {
        BenchConfig { mode, homology_dim: 0, same_size_only: false, threads: 1 }
    }

    fn solver(&self, kind: BoundKind) -> SolverConfig {
        let base = match self.mode {
            Mode::Absolute(e) => SolverConfig::absolute(e),
            Mode::Relative(e) => SolverConfig::relative(e),
        };
        base.with_bound(kind).with_homology_dim(self.homology_dim).with_threads(self.threads)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub file_a: String,
    pub file_b: String,
    pub bound: BoundKind,
    pub calls: u64,
    pub time_ms: f64,
    pub deepest_level: u32,
    pub reduction_rate: f64,
    pub delta: f64,
    pub status: Status,
}

pub const BENCH_HEADER: &str = "file_a,file_b,bound,calls,time_ms,deepest_level,reduction_rate,delta,status";

/// Minimum, mean and maximum of a sample.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Stats {
    pub min: f64,
    pub mean: f64,
    pub max: f64,
}

impl Stats {
    pub fn of(values: &[f64]) -> Option<Stats> {
        if values.is_empty() {
            return None;
        }
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        Some(Stats { min, mean, max })
    }
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    fn rows_for(&self, kind: BoundKind) -> impl Iterator<Item = &BenchRow> {
        self.rows.iter().filter(move |r| r.bound == kind)
    }

    /// Per-pair ratio `num / den` of the given quantity.
    fn ratios(&self, num: BoundKind, den: BoundKind, value: impl Fn(&BenchRow) -> f64) -> Vec<f64> {
        self.rows_for(num).zip(self.rows_for(den)).map(|(a, b)| value(a) / value(b)).collect()
    }

    pub fn call_ratio(&self, num: BoundKind, den: BoundKind) -> Option<Stats> {
        Stats::of(&self.ratios(num, den, |r| r.calls as f64))
    }

    pub fn time_ratio(&self, num: BoundKind, den: BoundKind) -> Option<Stats> {
        Stats::of(&self.ratios(num, den, |r| r.time_ms.max(1e-3)))
    }

    pub fn reduction(&self, kind: BoundKind) -> Option<Stats> {
        Stats::of(&self.rows_for(kind).map(|r| r.reduction_rate).collect::<Vec<_>>())
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("{BENCH_HEADER}\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{:.3},{},{},{},{}",
                r.file_a, r.file_b, r.bound, r.calls, r.time_ms, r.deepest_level, r.reduction_rate, r.delta, r.status
            );
        }
        out
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let pairs = self.rows_for(BoundKind::LocalLinear).count();
        let _ = writeln!(out, "pairs = {pairs}");
        let fmt = |s: Option<Stats>| match s {
            Some(s) => format!("avg {:.4} min {:.4} max {:.4}", s.mean, s.min, s.max),
            None => "n/a".to_string(),
        };
        use BoundKind::*;
        let _ = writeln!(out, "calls G/C: {}", fmt(self.call_ratio(Global, LocalConstant)));
        let _ = writeln!(out, "calls C/L: {}", fmt(self.call_ratio(LocalConstant, LocalLinear)));
        let _ = writeln!(out, "time G/C: {}", fmt(self.time_ratio(Global, LocalConstant)));
        let _ = writeln!(out, "time C/L: {}", fmt(self.time_ratio(LocalConstant, LocalLinear)));
        for kind in BoundKind::ALL {
            let _ = writeln!(out, "reduction {kind}: {}", fmt(self.reduction(kind)));
        }
        out
    }
}

/// Runs all three bounds on one pair and returns rows in G, C, L order.
pub fn bench_pair(
    name_a: &str,
    name_b: &str,
    f1: &BiFiltration,
    f2: &BiFiltration,
    cfg: &BenchConfig,
) -> Result<Vec<BenchRow>> {
    let (f1, f2, _) = normalize_pair(f1, f2);
    BoundKind::ALL
        .iter()
        .map(|&kind| {
            let r = run(&f1, &f2, &cfg.solver(kind))?;
            Ok(BenchRow {
                file_a: name_a.to_string(),
                file_b: name_b.to_string(),
                bound: kind,
                calls: r.calls,
                time_ms: r.elapsed.as_secs_f64() * 1e3,
                deepest_level: r.deepest_level,
                reduction_rate: reduction_rate(&r),
                delta: r.delta,
                status: r.status,
            })
        })
        .collect()
}

fn file_name(p: &Path) -> String {
    p.file_name().map_or_else(|| p.display().to_string(), |n| n.to_string_lossy().into_owned())
}

/// Benchmarks every unordered pair of `.txt` filtrations in `dir`.
pub fn bench_dir(dir: &Path, cfg: &BenchConfig) -> Result<BenchReport> {
    let files: Vec<PathBuf> = dataset_files(dir)?;
    if files.len() < 2 {
        return Err(Error::EmptyDataset(dir.to_path_buf()));
    }
    let filtrations = files.iter().map(|p| read_filtration(p)).collect::<Result<Vec<_>>>()?;
    let mut report = BenchReport::default();
    for i in 0..files.len() {
        for j in i + 1..files.len() {
            if cfg.same_size_only && filtrations[i].len() != filtrations[j].len() {
                continue;
            }
            let rows = bench_pair(&file_name(&files[i]), &file_name(&files[j]), &filtrations[i], &filtrations[j], cfg)?;
            report.rows.extend(rows);
        }
    }
    Ok(report)
}

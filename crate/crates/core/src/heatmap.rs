//! Bottleneck distance sampled on a regular grid of slice parameters.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rayon::prelude::*;

use crate::complex::BiFiltration;
use crate::error::{Error, Result};
use crate::slice::{initial_boxes, SliceType};
use crate::solver::eval;

pub const MAX_DEPTH: u32 = 10;

/// One `2^depth x 2^depth` grid per slice type. `grids[t][i][j]` is the
/// distance at the center of the cell in mu-row `i` and lambda-column `j`,
/// both ascending, for type `SliceType::ALL[t]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Heatmap {
    pub depth: u32,
    pub grids: [Vec<Vec<f64>>; 4],
}

impl Heatmap {
    pub fn side(&self) -> usize {
        1 << self.depth
    }

    pub fn grid(&self, kind: SliceType) -> &[Vec<f64>] {
        let t = SliceType::ALL.iter().position(|&k| k == kind).expect("known type");
        &self.grids[t]
    }

    /// Largest sampled value.
    pub fn max(&self) -> f64 {
        self.grids.iter().flatten().flatten().copied().fold(0.0, f64::max)
    }

    /// Single `2n x 2n` image. Top half: steep slices with lambda increasing
    /// downwards; bottom half: flat slices with lambda decreasing downwards,
    /// so both halves meet at the diagonal direction. Left half: y-slices
    /// with mu decreasing to the right; right half: x-slices with mu
    /// increasing to the right, so both halves meet at the origin.
    pub fn composite(&self) -> Vec<Vec<f64>> {
        let n = self.side();
        (0..2 * n)
            .map(|r| {
                let steep = r < n;
                let li = if steep { r } else { 2 * n - 1 - r };
                (0..2 * n)
                    .map(|c| {
                        let x_side = c >= n;
                        let mi = if x_side { c - n } else { n - 1 - c };
                        let kind = match (steep, x_side) {
                            (true, true) => SliceType::SteepX,
                            (false, true) => SliceType::FlatX,
                            (true, false) => SliceType::SteepY,
                            (false, false) => SliceType::FlatY,
                        };
                        self.grid(kind)[mi][li]
                    })
                    .collect()
            })
            .collect()
    }

    /// Writes `flat_x.csv`, `steep_x.csv`, `flat_y.csv`, `steep_y.csv` and
    /// `composite.csv` into `dir`.
    pub fn write_csvs(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        for (kind, grid) in SliceType::ALL.iter().zip(&self.grids) {
            let text = grid_csv(&format!("# type={kind} depth={}", self.depth), grid);
            fs::write(dir.join(format!("{kind}.csv")), text)?;
        }
        let text = grid_csv(&format!("# type=composite depth={}", self.depth), &self.composite());
        fs::write(dir.join("composite.csv"), text)?;
        Ok(())
    }
}

pub fn grid_csv(header: &str, grid: &[Vec<f64>]) -> String {
    let mut out = format!("{header}\n");
    for row in grid {
        let cells: Vec<String> = row.iter().map(f64::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

/// Samples `d_B` at the centers of the `4^depth` cells of each initial box.
pub fn compute_heatmap(
    f1: &BiFiltration,
    f2: &BiFiltration,
    depth: u32,
    homology_dim: usize,
    threads: usize,
) -> Result<Heatmap> {
    if depth > MAX_DEPTH {
        return Err(Error::DepthTooLarge(depth));
    }
    if !f1.is_normalized() || !f2.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let n = 1usize << depth;
    let boxes = initial_boxes(f1, f2);
    let cell = |b: usize, i: usize, j: usize| {
        let bx = &boxes[b];
        let s = bx.at_fraction((j as f64 + 0.5) / n as f64, (i as f64 + 0.5) / n as f64);
        eval(f1, f2, &s, homology_dim)
    };
    let cells: Vec<(usize, usize, usize)> =
        (0..4).flat_map(|b| (0..n).flat_map(move |i| (0..n).map(move |j| (b, i, j)))).collect();
    let values: Vec<f64> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?;
        pool.install(|| cells.par_iter().map(|&(b, i, j)| cell(b, i, j)).collect())
    } else {
        cells.iter().map(|&(b, i, j)| cell(b, i, j)).collect()
    };
    let grids = std::array::from_fn(|b| {
        (0..n).map(|i| values[(b * n + i) * n..(b * n + i + 1) * n].to_vec()).collect()
    });
    Ok(Heatmap { depth, grids })
}

//! Bottleneck distance between persistence diagrams.
//!
//! The finite parts are compared by an exact search over the candidate
//! values the distance can take: the sup-norm distances between points of
//! the two diagrams and the half-persistences of all points. A threshold is
//! feasible when the points farther than it from the diagonal can all be
//! matched within it. Essential classes are matched by sorted birth.

use crate::error::{Error, Result};
use crate::matching::max_matching;
use crate::persistence::Diagram;

/// Sup-norm distance between two finite points.
#[inline]
pub fn point_cost(p: (f64, f64), q: (f64, f64)) -> f64 {
    (p.0 - q.0).abs().max((p.1 - q.1).abs())
}

/// Cost of matching a finite point to the diagonal.
#[inline]
pub fn diagonal_cost(p: (f64, f64)) -> f64 {
    (p.1 - p.0) / 2.0
}

/// Bottleneck distance; `f64::INFINITY` when the numbers of essential
/// classes differ.
pub fn bottleneck_distance(a: &Diagram, b: &Diagram) -> Result<f64> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    let essential = essential_distance(&a.essential, &b.essential);
    if essential.is_infinite() {
        return Ok(f64::INFINITY);
    }
    Ok(essential.max(finite_distance(&a.finite, &b.finite)))
}

fn essential_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Bottleneck distance between two multisets of finite points.
pub fn finite_distance(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    if a.is_empty() && b.is_empty() {
        return 0.0;
    }
    // Sending everything to the diagonal is always feasible, so no candidate
    // above that cost matters.
    let diag_a: Vec<f64> = a.iter().map(|&p| diagonal_cost(p)).collect();
    let diag_b: Vec<f64> = b.iter().map(|&p| diagonal_cost(p)).collect();
    let all_diag = diag_a.iter().chain(&diag_b).copied().fold(0.0, f64::max);
    if a.is_empty() || b.is_empty() {
        return all_diag;
    }
    let costs: Vec<f64> = a.iter().flat_map(|&p| b.iter().map(move |&q| point_cost(p, q))).collect();
    let mut candidates: Vec<f64> = diag_a.iter().chain(&diag_b).copied().collect();
    candidates.extend(costs.iter().copied().filter(|&c| c < all_diag));
    candidates.sort_unstable_by(f64::total_cmp);
    candidates.dedup();

    let costs = CostMatrix { costs, diag_a, diag_b };
    // Smallest feasible candidate; the last one (all_diag) is feasible.
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if costs.feasible(candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo]
}

struct CostMatrix {
    /// Row-major `|a| x |b|` point costs.
    costs: Vec<f64>,
    diag_a: Vec<f64>,
    diag_b: Vec<f64>,
}

impl CostMatrix {
    /// Is there a matching using only edges of cost at most `t` that leaves
    /// unmatched only points within `t` of the diagonal?
    ///
    /// Such a matching must cover the far points of both diagrams. A matching
    /// covering a given set on each side exists as soon as each set can be
    /// covered on its own, so two one-sided matchings decide it.
    fn feasible(&self, t: f64) -> bool {
        let (n, m) = (self.diag_a.len(), self.diag_b.len());
        let cost = |i: usize, j: usize| self.costs[i * m + j];
        let far_a: Vec<usize> = (0..n).filter(|&i| self.diag_a[i] > t).collect();
        let far_b: Vec<usize> = (0..m).filter(|&j| self.diag_b[j] > t).collect();
        let mut adj: Vec<Vec<usize>> = Vec::with_capacity(far_a.len());
        for &i in &far_a {
            let row: Vec<usize> = (0..m).filter(|&j| cost(i, j) <= t).collect();
            if row.is_empty() {
                return false;
            }
            adj.push(row);
        }
        if max_matching(&adj, m) < far_a.len() {
            return false;
        }
        adj.clear();
        for &j in &far_b {
            let row: Vec<usize> = (0..n).filter(|&i| cost(i, j) <= t).collect();
            if row.is_empty() {
                return false;
            }
            adj.push(row);
        }
        max_matching(&adj, n) == far_b.len()
    }
}

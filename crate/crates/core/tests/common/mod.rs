//! Independent reference implementations and fixtures for integration tests.
#![allow(dead_code)]

use matchdist::generators::{generate, reassign_values, GenSpec};
use matchdist::{BiFiltration, Diagram, Point2, Slice, SliceType};
use rand::Rng;

/// Weighted push computed geometrically: walk along the unit direction of
/// the line from its base point until the point dominates `p`, then scale
/// the arc length by the smaller of the direction's cosine and sine.
pub fn geometric_push(p: Point2, s: &Slice) -> f64 {
    let (base, dir) = match s.kind {
        SliceType::FlatY => ((0.0, s.mu), (1.0, s.lambda)),
        SliceType::SteepY => ((0.0, s.mu), (s.lambda, 1.0)),
        SliceType::FlatX => ((s.mu, 0.0), (1.0, s.lambda)),
        SliceType::SteepX => ((s.mu, 0.0), (s.lambda, 1.0)),
    };
    let norm = (dir.0 * dir.0 + dir.1 * dir.1).sqrt();
    let (cos, sin) = (dir.0 / norm, dir.1 / norm);
    let t = ((p.x - base.0) / cos).max((p.y - base.1) / sin);
    t * cos.min(sin)
}

/// Exhaustive bottleneck distance over all partial matchings between the
/// finite parts and all bijections between the essential parts.
pub fn brute_bottleneck(a: &Diagram, b: &Diagram) -> f64 {
    let ess = if a.essential.len() != b.essential.len() {
        f64::INFINITY
    } else {
        brute_essential(&a.essential, &b.essential, &mut vec![false; b.essential.len()])
    };
    if ess.is_infinite() {
        return ess;
    }
    ess.max(brute_finite(&a.finite, &b.finite, 0, &mut vec![false; b.finite.len()]))
}

fn brute_essential(a: &[f64], b: &[f64], used: &mut Vec<bool>) -> f64 {
    let Some((&x, rest)) = a.split_first() else { return 0.0 };
    let mut best = f64::INFINITY;
    for j in 0..b.len() {
        if !used[j] {
            used[j] = true;
            best = best.min((x - b[j]).abs().max(brute_essential(rest, b, used)));
            used[j] = false;
        }
    }
    best
}

fn diag(p: (f64, f64)) -> f64 {
    (p.1 - p.0) / 2.0
}

fn brute_finite(a: &[(f64, f64)], b: &[(f64, f64)], i: usize, used: &mut Vec<bool>) -> f64 {
    if i == a.len() {
        return b.iter().zip(used.iter()).filter(|(_, &u)| !u).map(|(&q, _)| diag(q)).fold(0.0, f64::max);
    }
    let mut best = diag(a[i]).max(brute_finite(a, b, i + 1, used));
    for j in 0..b.len() {
        if !used[j] {
            used[j] = true;
            let c = (a[i].0 - b[j].0).abs().max((a[i].1 - b[j].1).abs());
            best = best.min(c.max(brute_finite(a, b, i + 1, used)));
            used[j] = false;
        }
    }
    best
}

pub fn random_diagram(rng: &mut impl Rng, max_finite: usize, essential: usize, grid: bool) -> Diagram {
    let coord = |rng: &mut dyn rand::RngCore| {
        if grid {
            rng.random_range(0..8) as f64 / 2.0
        } else {
            rng.random_range(0.0..4.0)
        }
    };
    let n = rng.random_range(0..=max_finite);
    let mut finite = Vec::with_capacity(n);
    while finite.len() < n {
        let (x, y) = (coord(rng), coord(rng));
        if x < y {
            finite.push((x, y));
        } else if y < x {
            finite.push((y, x));
        }
    }
    let essential = (0..essential).map(|_| coord(rng)).collect();
    Diagram::new(0, finite, essential)
}

/// Random slice with `lambda` in `[0, 1]` and `mu` in `[0, mu_max]`.
pub fn random_slice(rng: &mut impl Rng, mu_max: f64) -> Slice {
    let kind = SliceType::ALL[rng.random_range(0..4)];
    Slice::new(rng.random_range(0.0..=1.0), rng.random_range(0.0..=mu_max), kind)
}

/// Two one-critical filtrations on one random complex.
pub fn shared_pair(n: usize, m: usize, d: usize, seed: u64, coord_range: u32) -> (BiFiltration, BiFiltration) {
    let a = generate(&GenSpec::new(n, m, d, seed).with_coord_range(coord_range)).unwrap();
    let b = reassign_values(&a, seed.wrapping_mul(7919).wrapping_add(1), coord_range).unwrap();
    (a, b)
}

/// Largest `d_B` over an `n x n` grid (boundaries included) of every
/// initial box: a lower bound on the matching distance.
pub fn sampled_matching_distance(f1: &BiFiltration, f2: &BiFiltration, n: usize, dim: usize) -> f64 {
    let mut best = 0.0f64;
    for bx in matchdist::initial_boxes(f1, f2) {
        for i in 0..n {
            for j in 0..n {
                let s = bx.at_fraction(i as f64 / (n - 1) as f64, j as f64 / (n - 1) as f64);
                best = best.max(matchdist::eval(f1, f2, &s, dim));
            }
        }
    }
    best
}

pub fn ceil_log2(x: f64) -> u32 {
    if x <= 1.0 {
        0
    } else {
        x.log2().ceil() as u32
    }
}

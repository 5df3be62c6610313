//! Random bi-filtrations.
//!
//! A random complex is the face closure of `M` distinct `D`-simplices drawn
//! uniformly from `N` vertices. Maximal simplices get uniform integer values
//! in `[0, R]^2`; every other simplex, visited from high to low dimension,
//! gets a uniform integer value below the componentwise minimum over its
//! cofaces, which keeps the filtration monotone.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{validate_bifiltration, BiFiltration, Complex, CriticalSet, Point2};
use crate::error::{Error, Result};

pub const DEFAULT_COORD_RANGE: u32 = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub n_vertices: usize,
    pub n_maximal: usize,
    pub max_dim: usize,
    pub seed: u64,
    pub coord_range: u32,
}

impl GenSpec {
    pub fn new(n_vertices: usize, n_maximal: usize, max_dim: usize, seed: u64) -> Self {
        GenSpec { n_vertices, n_maximal, max_dim, seed, coord_range: DEFAULT_COORD_RANGE }
    }

    pub fn with_coord_range(mut self, r: u32) -> Self {
        self.coord_range = r;
        self
    }
}

/// `n choose k`, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays integral at every step.
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i + 1) as u128,
            None => return u128::MAX,
        };
    }
    acc
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draws the maximal simplices, sorted.
fn maximal_simplices(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<u32>>> {
    let k = spec.max_dim + 1;
    let infeasible = |reason: String| Error::InfeasibleSpec { requested: spec.n_maximal, reason };
    if spec.n_maximal == 0 {
        return Err(infeasible("at least one maximal simplex is required".into()));
    }
    if spec.max_dim == 0 {
        return Err(infeasible("maximal simplices must have dimension at least 1".into()));
    }
    let available = binomial(spec.n_vertices, k);
    if (spec.n_maximal as u128) > available {
        return Err(infeasible(format!(
            "only {available} distinct {}-simplices exist on {} vertices",
            spec.max_dim, spec.n_vertices
        )));
    }
    let max_tries = 100 * spec.n_maximal + 10_000;
    let mut seen = HashSet::with_capacity(spec.n_maximal);
    let mut out = Vec::with_capacity(spec.n_maximal);
    let mut tries = 0;
    while out.len() < spec.n_maximal {
        if tries == max_tries {
            return Err(infeasible(format!("gave up after {max_tries} draws")));
        }
        tries += 1;
        let mut s: Vec<u32> = sample(rng, spec.n_vertices, k).into_iter().map(|v| v as u32).collect();
        s.sort_unstable();
        if seen.insert(s.clone()) {
            out.push(s);
        }
    }
    Ok(out)
}

/// The face closure of `maximal`, as a complex.
fn closure(maximal: &[Vec<u32>]) -> Result<Arc<Complex>> {
    let mut all = BTreeSet::new();
    for s in maximal {
        let n = s.len();
        for mask in 1u64..(1u64 << n) {
            let face: Vec<u32> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| s[i]).collect();
            all.insert(face);
        }
    }
    let raw = all.into_iter().map(|s| (s, vec![Point2::new(0.0, 0.0)])).collect();
    Ok(Arc::clone(validate_bifiltration(raw)?.complex()))
}

fn uniform_below(rng: &mut ChaCha8Rng, bound: Point2) -> Point2 {
    let x = rng.random_range(0..=bound.x as u64) as f64;
    let y = rng.random_range(0..=bound.y as u64) as f64;
    Point2::new(x, y)
}

/// Assigns up to `k` critical values per simplex, top dimension first.
fn assign(complex: &Arc<Complex>, rng: &mut ChaCha8Rng, coord_range: u32, k: usize) -> Result<BiFiltration> {
    let n = complex.len();
    let full = Point2::new(coord_range as f64, coord_range as f64);
    let mut ceiling: Vec<Option<Point2>> = vec![None; n];
    let mut critical: Vec<Option<CriticalSet>> = vec![None; n];
    for i in (0..n).rev() {
        let bound = ceiling[i].unwrap_or(full);
        let points: Vec<Point2> = (0..k).map(|_| uniform_below(rng, bound)).collect();
        let set = CriticalSet::new(points).expect("k >= 1");
        let meet = set.points().iter().fold(full, |m, p| m.min(p));
        for &f in complex.facets_of(i) {
            ceiling[f] = Some(ceiling[f].map_or(meet, |c| c.min(&meet)));
        }
        critical[i] = Some(set);
    }
    BiFiltration::on_complex(Arc::clone(complex), critical.into_iter().map(Option::unwrap).collect())
}

/// Random one-critical bi-filtration.
pub fn generate(spec: &GenSpec) -> Result<BiFiltration> {
    generate_k_critical(spec, 1)
}

/// Random bi-filtration with at most `k` critical values per simplex.
pub fn generate_k_critical(spec: &GenSpec, k: usize) -> Result<BiFiltration> {
    if k == 0 {
        return Err(Error::InvalidConfig("k must be at least 1".into()));
    }
    let mut rng = rng_for(spec.seed);
    let maximal = maximal_simplices(spec, &mut rng)?;
    let complex = closure(&maximal)?;
    assign(&complex, &mut rng, spec.coord_range, k)
}

/// Fresh random one-critical values on the complex of `f`. Two filtrations
/// on the same complex have the same number of essential classes, so their
/// matching distance is finite.
pub fn reassign_values(f: &BiFiltration, seed: u64, coord_range: u32) -> Result<BiFiltration> {
    let mut rng = rng_for(seed);
    assign(f.complex(), &mut rng, coord_range, 1)
}

//! Simplicial complexes carrying one-parameter or two-parameter filtrations.
//!
//! Simplices are stored sorted by dimension and then lexicographically by
//! vertex tuple. Every downstream tie-break relies on this order, so the
//! index of a simplex in [`Complex::simplices`] is meaningful.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A non-empty, strictly increasing list of vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    /// Builds a simplex from vertices given in any order.
    pub fn new(mut vertices: Vec<u32>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidSimplex { vertices, reason: "no vertices" });
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSimplex { vertices, reason: "repeated vertex" });
        }
        Ok(Simplex(vertices))
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Codimension-one faces, in the order obtained by dropping vertex 0, 1, ...
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |skip| {
            Simplex(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }
}

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A point of the parameter plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Product order: `self <= other` in both coordinates.
    pub fn le(&self, other: &Point2) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn max(&self, other: &Point2) -> Point2 {
        Point2::new(self.x.max(other.x), self.y.max(other.y))
    }

    pub fn min(&self, other: &Point2) -> Point2 {
        Point2::new(self.x.min(other.x), self.y.min(other.y))
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

/// The critical values of one simplex: an antichain in the product order.
///
/// Points are kept sorted by increasing x (hence decreasing y).
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalSet(Vec<Point2>);

impl CriticalSet {
    /// Reduces `points` to its minimal elements. Returns `None` when empty.
    pub fn new(mut points: Vec<Point2>) -> Option<Self> {
        if points.is_empty() {
            return None;
        }
        points.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
        let mut minimal: Vec<Point2> = Vec::with_capacity(points.len());
        for p in points {
            // Sorted by x then y: p is dominated iff some kept point has y <= p.y,
            // and the last kept point carries the smallest y so far.
            match minimal.last() {
                Some(last) if last.y <= p.y => {}
                _ => minimal.push(p),
            }
        }
        Some(CriticalSet(minimal))
    }

    pub fn single(p: Point2) -> Self {
        CriticalSet(vec![p])
    }

    pub fn points(&self) -> &[Point2] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when the entry region of `self` contains the one of `later`,
    /// i.e. every point of `later` dominates some point of `self`.
    pub fn enters_before(&self, later: &CriticalSet) -> bool {
        later.0.iter().all(|q| self.0.iter().any(|p| p.le(q)))
    }

    fn translate(&self, v: Point2) -> CriticalSet {
        CriticalSet(self.0.iter().map(|p| Point2::new(p.x + v.x, p.y + v.y)).collect())
    }
}

/// A simplicial complex closed under faces, sorted by (dimension, vertex tuple).
#[derive(Debug)]
pub struct Complex {
    simplices: Vec<Simplex>,
    facets: Vec<Vec<usize>>,
    index: HashMap<Simplex, usize>,
    vertex_count: usize,
}

impl Complex {
    /// Builds the complex; `simplices` must already be sorted and duplicate-free.
    fn from_sorted(simplices: Vec<Simplex>) -> Result<Self> {
        let index: HashMap<Simplex, usize> =
            simplices.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut facets = Vec::with_capacity(simplices.len());
        for s in &simplices {
            let mut fs = Vec::with_capacity(s.dim() + 1);
            for face in s.facets() {
                match index.get(&face) {
                    Some(&i) => fs.push(i),
                    None => {
                        return Err(Error::MissingFace {
                            simplex: s.vertices().to_vec(),
                            face: face.vertices().to_vec(),
                        })
                    }
                }
            }
            facets.push(fs);
        }
        let vertex_count = simplices.iter().take_while(|s| s.dim() == 0).count();
        Ok(Complex { simplices, facets, index, vertex_count })
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Indices of the codimension-one faces of simplex `i`.
    pub fn facets_of(&self, i: usize) -> &[usize] {
        &self.facets[i]
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn dim(&self) -> usize {
        self.simplices.last().map_or(0, Simplex::dim)
    }

    /// Range of simplex indices with the given dimension.
    pub fn dim_range(&self, dim: usize) -> std::ops::Range<usize> {
        let start = self.simplices.partition_point(|s| s.dim() < dim);
        let end = self.simplices.partition_point(|s| s.dim() <= dim);
        start..end
    }
}

/// A (possibly multi-critical) bi-filtration.
#[derive(Clone, Debug)]
pub struct BiFiltration {
    complex: Arc<Complex>,
    critical: Vec<CriticalSet>,
    max: Point2,
    min: Point2,
}

impl BiFiltration {
    pub fn complex(&self) -> &Arc<Complex> {
        &self.complex
    }

    pub fn simplices(&self) -> &[Simplex] {
        self.complex.simplices()
    }

    pub fn critical_sets(&self) -> &[CriticalSet] {
        &self.critical
    }

    pub fn critical(&self, i: usize) -> &CriticalSet {
        &self.critical[i]
    }

    /// All critical values of all simplices.
    pub fn critical_points(&self) -> impl Iterator<Item = &Point2> {
        self.critical.iter().flat_map(|c| c.points())
    }

    pub fn len(&self) -> usize {
        self.critical.len()
    }

    pub fn is_empty(&self) -> bool {
        self.critical.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.complex.vertex_count()
    }

    /// Largest x-coordinate over all critical values (X).
    pub fn max_x(&self) -> f64 {
        self.max.x
    }

    /// Largest y-coordinate over all critical values (Y).
    pub fn max_y(&self) -> f64 {
        self.max.y
    }

    /// `max(X, Y)`.
    pub fn c_max(&self) -> f64 {
        self.max.x.max(self.max.y)
    }

    pub fn min_corner(&self) -> Point2 {
        self.min
    }

    pub fn is_one_critical(&self) -> bool {
        self.critical.iter().all(|c| c.len() == 1)
    }

    pub fn max_critical_count(&self) -> usize {
        self.critical.iter().map(CriticalSet::len).max().unwrap_or(0)
    }

    pub fn is_normalized(&self) -> bool {
        self.is_empty() || (self.min.x >= 0.0 && self.min.y >= 0.0)
    }

    /// Simplices paired with their critical sets, in storage order.
    pub fn entries(&self) -> impl Iterator<Item = (&Simplex, &CriticalSet)> {
        self.complex.simplices().iter().zip(&self.critical)
    }

    /// Translates every critical value by `v`.
    pub fn translated(&self, v: Point2) -> BiFiltration {
        let critical: Vec<CriticalSet> = self.critical.iter().map(|c| c.translate(v)).collect();
        BiFiltration {
            complex: Arc::clone(&self.complex),
            max: Point2::new(self.max.x + v.x, self.max.y + v.y),
            min: Point2::new(self.min.x + v.x, self.min.y + v.y),
            critical,
        }
    }

    /// Builds a bi-filtration on an existing complex. Values are checked like
    /// in [`validate_bifiltration`].
    pub fn on_complex(complex: Arc<Complex>, critical: Vec<CriticalSet>) -> Result<Self> {
        assert_eq!(complex.len(), critical.len(), "one critical set per simplex");
        for (s, c) in complex.simplices().iter().zip(&critical) {
            if c.points().iter().any(|p| !p.is_finite()) {
                return Err(Error::NonFiniteCoordinate(s.vertices().to_vec()));
            }
        }
        for (i, s) in complex.simplices().iter().enumerate() {
            for &f in complex.facets_of(i) {
                if !critical[f].enters_before(&critical[i]) {
                    return Err(Error::MonotonicityViolation {
                        face: complex.simplices()[f].vertices().to_vec(),
                        simplex: s.vertices().to_vec(),
                    });
                }
            }
        }
        let (min, max) = extent(&critical);
        Ok(BiFiltration { complex, critical, max, min })
    }
}

fn extent(critical: &[CriticalSet]) -> (Point2, Point2) {
    let mut min = Point2::new(f64::INFINITY, f64::INFINITY);
    let mut max = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in critical.iter().flat_map(|c| c.points()) {
        min = min.min(p);
        max = max.max(p);
    }
    if critical.is_empty() {
        (Point2::new(0.0, 0.0), Point2::new(0.0, 0.0))
    } else {
        (min, max)
    }
}

/// Validates a raw list of simplices with their critical values.
///
/// Vertex order inside a simplex and the order of the list are irrelevant.
/// Dominated or repeated critical values are dropped. Face closure is
/// checked, not repaired.
pub fn validate_bifiltration(raw: Vec<(Vec<u32>, Vec<Point2>)>) -> Result<BiFiltration> {
    let mut entries = Vec::with_capacity(raw.len());
    for (vertices, points) in raw {
        let simplex = Simplex::new(vertices)?;
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFiniteCoordinate(simplex.0));
        }
        let Some(set) = CriticalSet::new(points) else {
            return Err(Error::EmptyCriticalSet(simplex.0));
        };
        entries.push((simplex, set));
    }
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::DuplicateSimplex(w[0].0 .0.clone()));
    }
    let (simplices, critical): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
    let complex = Arc::new(Complex::from_sorted(simplices)?);
    BiFiltration::on_complex(complex, critical)
}

/// Translates `f` so that the smallest x- and y-coordinates become zero.
/// Returns the translation vector.
pub fn normalize_to_positive_quadrant(f: &BiFiltration) -> (BiFiltration, Point2) {
    if f.is_empty() {
        return (f.clone(), Point2::new(0.0, 0.0));
    }
    let v = Point2::new(0.0 - f.min.x, 0.0 - f.min.y);
    (f.translated(v), v)
}

/// Applies one common translation to both filtrations so that the smallest
/// coordinates over the pair become zero. A common shift leaves the matching
/// distance unchanged, separate shifts would not.
pub fn normalize_pair(a: &BiFiltration, b: &BiFiltration) -> (BiFiltration, BiFiltration, Point2) {
    let min = match (a.is_empty(), b.is_empty()) {
        (true, true) => Point2::new(0.0, 0.0),
        (true, false) => b.min,
        (false, true) => a.min,
        (false, false) => a.min.min(&b.min),
    };
    let v = Point2::new(0.0 - min.x, 0.0 - min.y);
    (a.translated(v), b.translated(v), v)
}

/// Lower-star bi-filtration: each simplex enters at the componentwise maximum
/// of its vertex values. `vertex_values[i]` is the value of vertex `i`.
pub fn lower_star(simplices: Vec<Vec<u32>>, vertex_values: &[Point2]) -> Result<BiFiltration> {
    let mut raw = Vec::with_capacity(simplices.len());
    for vertices in simplices {
        let mut value = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &v in &vertices {
            let p = vertex_values.get(v as usize).ok_or(Error::MissingVertexValue(v))?;
            value = value.max(p);
        }
        raw.push((vertices, vec![value]));
    }
    validate_bifiltration(raw)
}

/// A one-parameter filtration on a shared complex.
#[derive(Clone, Debug)]
pub struct MonoFiltration {
    complex: Arc<Complex>,
    values: Vec<f64>,
}

impl MonoFiltration {
    /// Wraps values without checking the face invariant. Callers must
    /// guarantee `value(face) <= value(coface)`.
    pub(crate) fn new_unchecked(complex: Arc<Complex>, values: Vec<f64>) -> Self {
        debug_assert_eq!(complex.len(), values.len());
        MonoFiltration { complex, values }
    }

    pub fn on_complex(complex: Arc<Complex>, values: Vec<f64>) -> Result<Self> {
        assert_eq!(complex.len(), values.len(), "one value per simplex");
        let m = MonoFiltration { complex, values };
        if let Some((face, simplex)) = m.first_violation() {
            return Err(Error::MonotonicityViolation {
                face: m.complex.simplices()[face].vertices().to_vec(),
                simplex: m.complex.simplices()[simplex].vertices().to_vec(),
            });
        }
        Ok(m)
    }

    /// Validates a raw list of simplices with one value each.
    pub fn from_simplices(raw: Vec<(Vec<u32>, f64)>) -> Result<Self> {
        let mut entries = Vec::with_capacity(raw.len());
        for (vertices, value) in raw {
            let s = Simplex::new(vertices)?;
            if !value.is_finite() {
                return Err(Error::NonFiniteCoordinate(s.0));
            }
            entries.push((s, value));
        }
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateSimplex(w[0].0 .0.clone()));
        }
        let (simplices, values): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        let complex = Arc::new(Complex::from_sorted(simplices)?);
        MonoFiltration::on_complex(complex, values)
    }

    pub fn complex(&self) -> &Arc<Complex> {
        &self.complex
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, i: usize) -> f64 {
        self.values[i]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// First (face, coface) index pair with `value(face) > value(coface)`.
    pub fn first_violation(&self) -> Option<(usize, usize)> {
        (0..self.values.len()).find_map(|i| {
            self.complex
                .facets_of(i)
                .iter()
                .find(|&&f| self.values[f] > self.values[i])
                .map(|&f| (f, i))
        })
    }

    pub fn map_values(&self, f: impl Fn(f64) -> f64) -> MonoFiltration {
        MonoFiltration {
            complex: Arc::clone(&self.complex),
            values: self.values.iter().map(|&v| f(v)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    #[test]
    fn single_vertex_extent() {
        let f = validate_bifiltration(vec![(vec![0], vec![p(1.0, 2.0)])]).unwrap();
        assert_eq!((f.max_x(), f.max_y(), f.c_max()), (1.0, 2.0, 2.0));
    }

    #[test]
    fn face_after_coface_is_rejected() {
        let err = validate_bifiltration(vec![
            (vec![0, 1], vec![p(0.0, 0.0)]),
            (vec![0], vec![p(1.0, 0.0)]),
            (vec![1], vec![p(0.0, 0.0)]),
        ])
        .unwrap_err();
        match err {
            Error::MonotonicityViolation { face, simplex } => {
                assert_eq!(face, vec![0]);
                assert_eq!(simplex, vec![0, 1]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn missing_face_is_an_error() {
        let err = validate_bifiltration(vec![
            (vec![0, 1], vec![p(1.0, 1.0)]),
            (vec![0], vec![p(0.0, 0.0)]),
        ])
        .unwrap_err();
        assert!(matches!(err, Error::MissingFace { ref face, .. } if face == &vec![1]));
    }

    #[test]
    fn raw_input_errors() {
        assert!(matches!(
            validate_bifiltration(vec![(vec![0], vec![])]),
            Err(Error::EmptyCriticalSet(_))
        ));
        assert!(matches!(
            validate_bifiltration(vec![(vec![0], vec![p(f64::NAN, 0.0)])]),
            Err(Error::NonFiniteCoordinate(_))
        ));
        assert!(matches!(
            validate_bifiltration(vec![(vec![0], vec![p(0.0, 0.0)]), (vec![0], vec![p(1.0, 0.0)])]),
            Err(Error::DuplicateSimplex(_))
        ));
        assert!(matches!(Simplex::new(vec![1, 1]), Err(Error::InvalidSimplex { .. })));
        assert!(matches!(Simplex::new(vec![]), Err(Error::InvalidSimplex { .. })));
    }

    #[test]
    fn filled_triangle_with_componentwise_max_edges() {
        let verts = [p(1.0, 1.0), p(2.0, 0.0), p(0.0, 3.0)];
        let mut raw: Vec<(Vec<u32>, Vec<Point2>)> =
            (0..3).map(|i| (vec![i], vec![verts[i as usize]])).collect();
        for (a, b) in [(0u32, 1u32), (0, 2), (1, 2)] {
            raw.push((vec![b, a], vec![verts[a as usize].max(&verts[b as usize])]));
        }
        raw.push((vec![2, 0, 1], vec![p(2.0, 3.0)]));
        let f = validate_bifiltration(raw).unwrap();
        // Brute force over every (face, coface) pair, not only facets.
        for (i, s) in f.simplices().iter().enumerate() {
            for (j, t) in f.simplices().iter().enumerate() {
                if t.vertices().iter().all(|v| s.vertices().contains(v)) {
                    assert!(f.critical(j).enters_before(f.critical(i)), "{t} before {s}");
                }
            }
        }
        assert_eq!(f.simplices()[0].vertices(), &[0]);
        assert_eq!(f.simplices()[6].vertices(), &[0, 1, 2]);
    }

    #[test]
    fn critical_set_drops_dominated_and_duplicates() {
        let c = CriticalSet::new(vec![p(1.0, 3.0), p(2.0, 2.0), p(1.0, 3.0), p(3.0, 3.0), p(3.0, 1.0)])
            .unwrap();
        assert_eq!(c.points(), &[p(1.0, 3.0), p(2.0, 2.0), p(3.0, 1.0)]);
        let c = CriticalSet::new(vec![p(2.0, 2.0), p(1.0, 1.0)]).unwrap();
        assert_eq!(c.points(), &[p(1.0, 1.0)]);
    }

    #[test]
    fn k_critical_monotonicity_uses_staircases() {
        // Face enters on the staircase {(0,2),(2,0)}; coface at (1,2) and (2,1)
        // lies inside it, so the pair is valid.
        let ok = validate_bifiltration(vec![
            (vec![0], vec![p(0.0, 2.0), p(2.0, 0.0)]),
            (vec![0, 1], vec![p(1.0, 2.0), p(2.0, 1.0)]),
            (vec![1], vec![p(0.0, 0.0)]),
        ]);
        assert!(ok.is_ok());
        let bad = validate_bifiltration(vec![
            (vec![0], vec![p(0.0, 2.0), p(2.0, 0.0)]),
            (vec![0, 1], vec![p(1.0, 1.0)]),
            (vec![1], vec![p(0.0, 0.0)]),
        ]);
        assert!(matches!(bad, Err(Error::MonotonicityViolation { .. })));
    }

    #[test]
    fn normalization_examples() {
        let f = validate_bifiltration(vec![(vec![0], vec![p(0.0, 0.0)]), (vec![1], vec![p(2.0, 5.0)])])
            .unwrap();
        let (g, v) = normalize_to_positive_quadrant(&f);
        assert_eq!(v, p(0.0, 0.0));
        assert_eq!(g.critical_sets(), f.critical_sets());

        let f = validate_bifiltration(vec![(vec![0], vec![p(-1.0, 5.0)])]).unwrap();
        let (g, v) = normalize_to_positive_quadrant(&f);
        assert_eq!(v, p(1.0, -5.0));
        assert_eq!(g.critical(0).points(), &[p(0.0, 0.0)]);

        let f = validate_bifiltration(vec![(vec![0], vec![p(-2.0, 1.0)]), (vec![1], vec![p(0.0, 3.0)])])
            .unwrap();
        let (g, v) = normalize_to_positive_quadrant(&f);
        assert_eq!(v, p(2.0, -1.0));
        assert_eq!(g.critical(0).points(), &[p(0.0, 0.0)]);
        assert_eq!(g.critical(1).points(), &[p(2.0, 2.0)]);
        assert_eq!((g.max_x(), g.max_y()), (2.0, 2.0));
    }

    #[test]
    fn pair_normalization_uses_common_shift() {
        let a = validate_bifiltration(vec![(vec![0], vec![p(-1.0, 3.0)])]).unwrap();
        let b = validate_bifiltration(vec![(vec![0], vec![p(2.0, 1.0)])]).unwrap();
        let (a2, b2, v) = normalize_pair(&a, &b);
        assert_eq!(v, p(1.0, -1.0));
        assert_eq!(a2.critical(0).points(), &[p(0.0, 2.0)]);
        assert_eq!(b2.critical(0).points(), &[p(3.0, 0.0)]);
    }

    #[test]
    fn lower_star_examples() {
        let f = lower_star(vec![vec![0], vec![1], vec![0, 1]], &[p(1.0, 4.0), p(3.0, 2.0)]).unwrap();
        assert_eq!(f.critical(2).points(), &[p(3.0, 4.0)]);
        assert_eq!(f.critical(0).points(), &[p(1.0, 4.0)]);

        let simplices = vec![
            vec![0],
            vec![1],
            vec![2],
            vec![0, 1],
            vec![0, 2],
            vec![1, 2],
            vec![0, 1, 2],
        ];
        let f = lower_star(simplices, &[p(1.0, 1.0), p(2.0, 0.0), p(0.0, 3.0)]).unwrap();
        assert_eq!(f.critical(6).points(), &[p(2.0, 3.0)]);
        assert_eq!(f.critical(3).points(), &[p(2.0, 1.0)]);
        assert_eq!(f.critical(4).points(), &[p(1.0, 3.0)]);
        assert_eq!(f.critical(5).points(), &[p(2.0, 3.0)]);

        assert!(matches!(
            lower_star(vec![vec![0], vec![3]], &[p(0.0, 0.0)]),
            Err(Error::MissingVertexValue(3))
        ));
    }

    #[test]
    fn mono_filtration_face_invariant() {
        assert!(MonoFiltration::from_simplices(vec![(vec![0], 1.0), (vec![1], 0.0), (vec![0, 1], 0.5)])
            .is_err());
        let m = MonoFiltration::from_simplices(vec![(vec![0], 1.0), (vec![1], 0.0), (vec![0, 1], 1.0)])
            .unwrap();
        assert_eq!(m.values(), &[1.0, 0.0, 1.0]);
        assert_eq!(m.complex().dim_range(1), 2..3);
    }
}

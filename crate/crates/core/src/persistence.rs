//! Persistence diagrams of one-parameter filtrations.
//!
//! Simplices are processed in the total order (value, dimension, index),
//! where the index is the position in the complex (itself sorted by
//! dimension and vertex tuple). Pairs with zero persistence are dropped.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::complex::{Complex, MonoFiltration};
use crate::error::{Error, Result};

/// A persistence diagram in one homology dimension.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Diagram {
    pub dim: usize,
    /// `(birth, death)` with `birth < death`.
    pub finite: Vec<(f64, f64)>,
    /// Births of classes that never die.
    pub essential: Vec<f64>,
}

impl Diagram {
    pub fn new(dim: usize, finite: Vec<(f64, f64)>, essential: Vec<f64>) -> Self {
        debug_assert!(finite.iter().all(|&(b, d)| b < d));
        Diagram { dim, finite, essential }
    }

    pub fn empty(dim: usize) -> Self {
        Diagram { dim, ..Default::default() }
    }

    pub fn len(&self) -> usize {
        self.finite.len() + self.essential.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Canonical ordering of both point lists, for multiset comparison.
    pub fn sorted(mut self) -> Self {
        self.finite.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        self.essential.sort_by(f64::total_cmp);
        self
    }

    /// Text dump: `# dim=<k>` header, then one `birth death` per line,
    /// `inf` for essential classes.
    pub fn to_dump(&self) -> String {
        let mut out = format!("# dim={}\n", self.dim);
        for &(b, d) in &self.finite {
            let _ = writeln!(out, "{b} {d}");
        }
        for &b in &self.essential {
            let _ = writeln!(out, "{b} inf");
        }
        out
    }

    pub fn parse_dump(text: &str) -> Result<Self> {
        let mut dim = None;
        let mut diagram = Diagram::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(rest) = line.strip_prefix('#') {
                if let Some(k) = rest.trim().strip_prefix("dim=") {
                    dim = Some(k.trim().parse().map_err(|_| Error::parse(n + 1, "bad dim header"))?);
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let (Some(b), Some(d), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::parse(n + 1, "expected `birth death`"));
            };
            let b: f64 = b.parse().map_err(|_| Error::parse(n + 1, "bad birth"))?;
            if d == "inf" {
                diagram.essential.push(b);
            } else {
                let d: f64 = d.parse().map_err(|_| Error::parse(n + 1, "bad death"))?;
                if d <= b {
                    return Err(Error::parse(n + 1, "death must exceed birth"));
                }
                diagram.finite.push((b, d));
            }
        }
        diagram.dim = dim.ok_or_else(|| Error::parse(1, "missing `# dim=` header"))?;
        Ok(diagram)
    }
}

fn order_key(m: &MonoFiltration, a: usize, b: usize) -> Ordering {
    let sa = &m.complex().simplices()[a];
    let sb = &m.complex().simplices()[b];
    m.value(a)
        .total_cmp(&m.value(b))
        .then(sa.dim().cmp(&sb.dim()))
        .then(a.cmp(&b))
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
}

/// Dimension-0 diagram by union-find with the elder rule.
///
/// Each component is represented by its oldest vertex. When an edge joins
/// two components, the one whose oldest vertex comes later in the filtration
/// order dies at the edge's value.
pub fn persistence_dim0(m: &MonoFiltration) -> Diagram {
    dim0_from_values(m.complex(), m.values())
}

/// Same as [`persistence_dim0`], reading values from `values`, which must
/// cover at least all vertices and edges.
pub(crate) fn dim0_from_values(complex: &Complex, values: &[f64]) -> Diagram {
    let nv = complex.vertex_count();
    let edges = complex.dim_range(1);
    let mut order: Vec<usize> = edges.collect();
    order.sort_unstable_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));

    let mut uf = DisjointSet::new(nv);
    let mut finite = Vec::new();
    for e in order {
        let facets = complex.facets_of(e);
        // Vertices occupy indices 0..nv, so facet indices are vertex indices.
        let ru = uf.find(facets[0]);
        let rv = uf.find(facets[1]);
        if ru == rv {
            continue;
        }
        // Roots are always the oldest vertex of their component.
        let older_first = values[ru].total_cmp(&values[rv]).then(ru.cmp(&rv)).is_lt();
        let (elder, younger) = if older_first { (ru, rv) } else { (rv, ru) };
        uf.parent[younger] = elder;
        let birth = values[younger];
        let death = values[e];
        if death > birth {
            finite.push((birth, death));
        }
    }
    let essential = (0..nv).filter(|&v| uf.find(v) == v).map(|v| values[v]).collect();
    Diagram { dim: 0, finite, essential }
}

/// Diagram in homology dimension `dim` over the two-element field, by
/// standard column reduction of the boundary matrix.
pub fn persistence_general(m: &MonoFiltration, dim: usize) -> Diagram {
    let complex = m.complex();
    let n = complex.len();
    let mut order: Vec<usize> = (0..n).filter(|&i| complex.simplices()[i].dim() <= dim + 1).collect();
    order.sort_unstable_by(|&a, &b| order_key(m, a, b));
    let mut position = vec![usize::MAX; n];
    for (pos, &s) in order.iter().enumerate() {
        position[s] = pos;
    }

    // Columns indexed by filtration position; rows likewise.
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(order.len());
    let mut pivot_owner: Vec<Option<usize>> = vec![None; order.len()];
    let mut killed = vec![false; order.len()];
    let mut finite = Vec::new();

    for (j, &s) in order.iter().enumerate() {
        let sdim = complex.simplices()[s].dim();
        let mut col: Vec<usize> = if sdim >= dim && sdim > 0 {
            let mut c: Vec<usize> = complex.facets_of(s).iter().map(|&f| position[f]).collect();
            c.sort_unstable();
            c
        } else {
            Vec::new()
        };
        while let Some(&low) = col.last() {
            match pivot_owner[low] {
                Some(k) => col = symmetric_difference(&col, &columns[k]),
                None => break,
            }
        }
        if let Some(&low) = col.last() {
            pivot_owner[low] = Some(j);
            killed[low] = true;
            if sdim == dim + 1 {
                let birth = m.value(order[low]);
                let death = m.value(s);
                if death > birth {
                    finite.push((birth, death));
                }
            }
        }
        columns.push(col);
    }

    let essential = order
        .iter()
        .enumerate()
        .filter(|&(j, &s)| {
            complex.simplices()[s].dim() == dim && columns[j].is_empty() && !killed[j]
        })
        .map(|(_, &s)| m.value(s))
        .collect();
    Diagram { dim, finite, essential }
}

/// Diagram in dimension `dim`, using the union-find path for dimension 0.
pub fn persistence(m: &MonoFiltration, dim: usize) -> Diagram {
    if dim == 0 {
        persistence_dim0(m)
    } else {
        persistence_general(m, dim)
    }
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

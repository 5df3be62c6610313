//! Slice parameterization and weighted restriction onto slices.
//!
//! A slice is a line of positive slope entering the positive quadrant at its
//! origin. It is described by `(lambda, mu)` together with one of four types:
//! `lambda` is the slope (flat) or inverse slope (steep), `mu` is the
//! non-zero coordinate of the origin (on the x-axis for x-slices, on the
//! y-axis for y-slices).

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::complex::{BiFiltration, MonoFiltration, Point2};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SliceType {
    FlatX,
    SteepX,
    FlatY,
    SteepY,
}

impl SliceType {
    pub const ALL: [SliceType; 4] =
        [SliceType::FlatX, SliceType::SteepX, SliceType::FlatY, SliceType::SteepY];

    pub fn is_flat(self) -> bool {
        matches!(self, SliceType::FlatX | SliceType::FlatY)
    }

    pub fn is_x(self) -> bool {
        matches!(self, SliceType::FlatX | SliceType::SteepX)
    }

    pub fn name(self) -> &'static str {
        match self {
            SliceType::FlatX => "flat_x",
            SliceType::SteepX => "steep_x",
            SliceType::FlatY => "flat_y",
            SliceType::SteepY => "steep_y",
        }
    }
}

impl fmt::Display for SliceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SliceType {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SliceType::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown slice type `{s}`"))
    }
}

/// A parameterized slice. `lambda = 0` denotes the horizontal (flat) or
/// vertical (steep) limit line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Slice {
    pub lambda: f64,
    pub mu: f64,
    pub kind: SliceType,
}

impl Slice {
    pub fn new(lambda: f64, mu: f64, kind: SliceType) -> Self {
        debug_assert!((0.0..=1.0).contains(&lambda), "lambda {lambda} outside [0,1]");
        debug_assert!(mu >= 0.0, "mu {mu} negative");
        Slice { lambda, mu, kind }
    }
}

/// Weighted push of `p` onto `slice`.
///
/// Each slice type has one closed form for points above the line and one for
/// points below. Because the line is monotone in both coordinates, the
/// minimal point of the line dominating `p` is reached at the larger of the
/// two parameters, so the branch for the side `p` lies on is the maximum of
/// both forms. On the line they coincide. This also covers `lambda = 0`.
#[inline]
pub fn weighted_push(p: Point2, slice: &Slice) -> f64 {
    let (above, below) = push_branches(p, slice);
    above.max(below)
}

/// The (above, below) closed forms for `p` on `slice`.
#[inline]
pub fn push_branches(p: Point2, slice: &Slice) -> (f64, f64) {
    let Slice { lambda, mu, kind } = *slice;
    match kind {
        SliceType::FlatY => (p.y - mu, lambda * p.x),
        SliceType::SteepY => (lambda * (p.y - mu), p.x),
        SliceType::FlatX => (p.y, lambda * (p.x - mu)),
        SliceType::SteepX => (lambda * p.y, p.x - mu),
    }
}

/// Weighted restriction: every simplex gets the smallest weighted push over
/// its critical values.
pub fn restrict(f: &BiFiltration, slice: &Slice) -> MonoFiltration {
    let values = restrict_values(f, slice, f.len());
    MonoFiltration::new_unchecked(Arc::clone(f.complex()), values)
}

/// Restricted values of the first `count` simplices.
pub(crate) fn restrict_values(f: &BiFiltration, slice: &Slice, count: usize) -> Vec<f64> {
    f.critical_sets()[..count]
        .iter()
        .map(|c| {
            c.points()
                .iter()
                .map(|&p| weighted_push(p, slice))
                .fold(f64::INFINITY, f64::min)
        })
        .collect()
}

/// An axis-parallel rectangle of slice parameters of one type.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParamBox {
    pub lambda_min: f64,
    pub lambda_max: f64,
    pub mu_min: f64,
    pub mu_max: f64,
    pub kind: SliceType,
    pub level: u32,
}

impl ParamBox {
    pub fn new(kind: SliceType, lambda: (f64, f64), mu: (f64, f64), level: u32) -> Self {
        assert!(lambda.0 <= lambda.1 && mu.0 <= mu.1, "inverted box bounds");
        ParamBox {
            lambda_min: lambda.0,
            lambda_max: lambda.1,
            mu_min: mu.0,
            mu_max: mu.1,
            kind,
            level,
        }
    }

    pub fn d_lambda(&self) -> f64 {
        self.lambda_max - self.lambda_min
    }

    pub fn d_mu(&self) -> f64 {
        self.mu_max - self.mu_min
    }

    pub fn center(&self) -> Slice {
        Slice {
            lambda: 0.5 * (self.lambda_min + self.lambda_max),
            mu: 0.5 * (self.mu_min + self.mu_max),
            kind: self.kind,
        }
    }

    pub fn corners(&self) -> [Slice; 4] {
        let at = |lambda, mu| Slice { lambda, mu, kind: self.kind };
        [
            at(self.lambda_min, self.mu_min),
            at(self.lambda_max, self.mu_min),
            at(self.lambda_min, self.mu_max),
            at(self.lambda_max, self.mu_max),
        ]
    }

    /// Slice at fractional position `(s, t)` in `[0,1]^2` of the box.
    pub fn at_fraction(&self, s: f64, t: f64) -> Slice {
        Slice {
            lambda: (self.lambda_min + s * self.d_lambda()).min(self.lambda_max),
            mu: (self.mu_min + t * self.d_mu()).min(self.mu_max),
            kind: self.kind,
        }
    }

    pub fn contains(&self, slice: &Slice) -> bool {
        slice.kind == self.kind
            && (self.lambda_min..=self.lambda_max).contains(&slice.lambda)
            && (self.mu_min..=self.mu_max).contains(&slice.mu)
    }

    /// Splits at the center into four quadrants of the next level, ordered
    /// (low, low), (high, low), (low, high), (high, high) in (lambda, mu).
    pub fn subdivide(&self) -> Result<[ParamBox; 4]> {
        if self.d_lambda() == 0.0 && self.d_mu() == 0.0 {
            return Err(Error::DegenerateBox);
        }
        let c = self.center();
        let level = self.level + 1;
        let lo_l = (self.lambda_min, c.lambda);
        let hi_l = (c.lambda, self.lambda_max);
        let lo_m = (self.mu_min, c.mu);
        let hi_m = (c.mu, self.mu_max);
        Ok([
            ParamBox::new(self.kind, lo_l, lo_m, level),
            ParamBox::new(self.kind, hi_l, lo_m, level),
            ParamBox::new(self.kind, lo_l, hi_m, level),
            ParamBox::new(self.kind, hi_l, hi_m, level),
        ])
    }

    /// Whether the width matches what subdividing a level-0 box `level` times
    /// produces.
    pub fn has_consistent_level(&self) -> bool {
        self.level < 1023 && self.d_lambda() == (-(self.level as f64)).exp2()
    }
}

impl fmt::Display for ParamBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}, {}] x [{}, {}] @{}",
            self.kind, self.lambda_min, self.lambda_max, self.mu_min, self.mu_max, self.level
        )
    }
}

/// The four level-0 boxes covering all relevant slices of a normalized pair,
/// in the order flat-x, steep-x, flat-y, steep-y.
pub fn initial_boxes(f1: &BiFiltration, f2: &BiFiltration) -> [ParamBox; 4] {
    let x = f1.max_x().max(f2.max_x()).max(0.0);
    let y = f1.max_y().max(f2.max_y()).max(0.0);
    SliceType::ALL.map(|kind| {
        let mu_max = if kind.is_x() { x } else { y };
        ParamBox::new(kind, (0.0, 1.0), (0.0, mu_max), 0)
    })
}

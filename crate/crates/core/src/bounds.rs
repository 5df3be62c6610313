//! Upper bounds for the bottleneck distance over all slices of a box.
//!
//! All three bounds have the shape `d_center + v1 + v2`, where `d_center` is
//! the distance at the center slice and `v1`, `v2` bound how far any weighted
//! push of the two filtrations moves inside the box:
//!
//! * local linear: the exact variation, attained at one of the four corners;
//! * local constant: a closed form in the box size, independent of the data;
//! * global: the level-only estimate `C * 2^-level`.
//!
//! The sums are always evaluated as `d_center + (v1 + v2)` and each variation
//! is clamped against the next coarser one, so the chain
//! `linear <= constant <= global` holds in floating point, not only in exact arithmetic.

use std::fmt;
use std::str::FromStr;

use crate::complex::{BiFiltration, Point2};
use crate::error::{Error, Result};
use crate::slice::{weighted_push, ParamBox, SliceType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    Global,
    LocalConstant,
    LocalLinear,
}

impl BoundKind {
    pub const ALL: [BoundKind; 3] = [BoundKind::Global, BoundKind::LocalConstant, BoundKind::LocalLinear];

    pub fn letter(self) -> char {
        match self {
            BoundKind::Global => 'g',
            BoundKind::LocalConstant => 'c',
            BoundKind::LocalLinear => 'l',
        }
    }

    /// Upper bound for `d_B` over `b`. With a `cutoff`, the linear bound may
    /// stop scanning once its partial value exceeds the cutoff and return
    /// that partial value instead.
    pub fn evaluate(
        self,
        f1: &BiFiltration,
        f2: &BiFiltration,
        b: &ParamBox,
        d_center: f64,
        cutoff: Option<f64>,
    ) -> Result<f64> {
        match self {
            BoundKind::Global => bound_g(f1, f2, b, d_center),
            BoundKind::LocalConstant => Ok(bound_c(f1, f2, b, d_center)),
            BoundKind::LocalLinear => Ok(match cutoff {
                Some(t) => bound_l_with_cutoff(f1, f2, b, d_center, t),
                None => bound_l(f1, f2, b, d_center),
            }),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for BoundKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "l" | "L" | "linear" => Ok(BoundKind::LocalLinear),
            "c" | "C" | "constant" => Ok(BoundKind::LocalConstant),
            "g" | "G" | "global" => Ok(BoundKind::Global),
            _ => Err(format!("unknown bound `{s}` (expected l, c or g)")),
        }
    }
}

/// Largest change of the weighted push of `p` between the center slice of
/// `b` and any slice in `b`. The maximum is attained at a corner.
pub fn variation_point(p: Point2, b: &ParamBox) -> f64 {
    let center = weighted_push(p, &b.center());
    b.corners()
        .iter()
        .map(|corner| (weighted_push(p, corner) - center).abs())
        .fold(0.0, f64::max)
}

/// Largest [`variation_point`] over every critical value of `f`. For
/// multi-critical filtrations this bounds the variation of each simplex's
/// minimal push.
pub fn variation_filtration(f: &BiFiltration, b: &ParamBox) -> f64 {
    f.critical_points().map(|&p| variation_point(p, b)).fold(0.0, f64::max)
}

/// Scans critical values, stopping once `stop_above` is exceeded.
fn variation_scan(f: &BiFiltration, b: &ParamBox, stop_above: f64) -> f64 {
    let center = b.center();
    let corners = b.corners();
    let mut acc = 0.0f64;
    for &p in f.critical_points() {
        let c = weighted_push(p, &center);
        for corner in &corners {
            acc = acc.max((weighted_push(p, corner) - c).abs());
        }
        if acc > stop_above {
            break;
        }
    }
    acc
}

fn pair_extent(f1: &BiFiltration, f2: &BiFiltration) -> (f64, f64) {
    (f1.max_x().max(f2.max_x()).max(0.0), f1.max_y().max(f2.max_y()).max(0.0))
}

/// Data-independent bound on [`variation_point`] for any point in
/// `[0, x_max] x [0, y_max]`.
pub fn constant_variation(b: &ParamBox, x_max: f64, y_max: f64) -> f64 {
    let dl = b.d_lambda();
    let dm = b.d_mu();
    let lc = b.center().lambda;
    match b.kind {
        SliceType::FlatY => 0.5 * (dm + x_max * dl),
        SliceType::SteepY => 0.5 * (lc * dm + (y_max - b.mu_min) * dl),
        SliceType::FlatX => 0.5 * (lc * dm + (x_max - b.mu_min) * dl),
        SliceType::SteepX => 0.5 * (dm + y_max * dl),
    }
}

/// Local linear bound: `v(F1,B) + d_center + v(F2,B)`.
pub fn bound_l(f1: &BiFiltration, f2: &BiFiltration, b: &ParamBox, d_center: f64) -> f64 {
    bound_l_with_cutoff(f1, f2, b, d_center, f64::INFINITY)
}

/// Local linear bound that may stop early: once the partial sum exceeds
/// `cutoff` the partial sum is returned. The result is exact whenever it is
/// at most `cutoff`.
pub fn bound_l_with_cutoff(
    f1: &BiFiltration,
    f2: &BiFiltration,
    b: &ParamBox,
    d_center: f64,
    cutoff: f64,
) -> f64 {
    let (x, y) = pair_extent(f1, f2);
    let cap = constant_variation(b, x, y);
    // Any partial sum above cutoff is a valid early answer. The first scan
    // may stop as soon as d_center + v1 alone exceeds it.
    let v1 = variation_scan(f1, b, cutoff - d_center).min(cap);
    let sum = d_center + v1;
    if sum > cutoff {
        return sum;
    }
    let v2 = variation_scan(f2, b, cutoff - d_center - v1).min(cap);
    d_center + (v1 + v2)
}

/// Local constant bound: `2 * vbar(B) + d_center`.
pub fn bound_c(f1: &BiFiltration, f2: &BiFiltration, b: &ParamBox, d_center: f64) -> f64 {
    let (x, y) = pair_extent(f1, f2);
    let v = constant_variation(b, x, y);
    d_center + (v + v)
}

/// Global bound: `d_center + 2 C 2^-level` with `C = max(X, Y)`.
///
/// Only meaningful for boxes produced by [`crate::slice::initial_boxes`] and
/// repeated subdivision; other boxes are rejected.
pub fn bound_g(f1: &BiFiltration, f2: &BiFiltration, b: &ParamBox, d_center: f64) -> Result<f64> {
    if !b.has_consistent_level() {
        return Err(Error::InvalidLevel(b.level));
    }
    let (x, y) = pair_extent(f1, f2);
    let c = x.max(y);
    // Rounded midpoints can make a box's mu-width exceed its nominal width
    // by an ulp; the constant variation is then the honest value.
    let v = (c * b.d_lambda()).max(constant_variation(b, x, y));
    Ok(d_center + (v + v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::validate_bifiltration;

    fn single(p: Point2) -> BiFiltration {
        validate_bifiltration(vec![(vec![0], vec![p])]).unwrap()
    }

    #[test]
    fn degenerate_box_has_no_variation() {
        let b = ParamBox::new(SliceType::FlatX, (0.3, 0.3), (1.0, 1.0), 0);
        assert_eq!(variation_point(Point2::new(2.0, 5.0), &b), 0.0);
        let f = single(Point2::new(2.0, 5.0));
        assert_eq!(variation_filtration(&f, &b), 0.0);
        assert_eq!(bound_l(&f, &f, &b, 0.7), 0.7);
        assert_eq!(bound_c(&f, &f, &b, 0.7), 0.7);
    }

    #[test]
    fn flat_y_point_variation() {
        let b = ParamBox::new(SliceType::FlatY, (0.0, 1.0), (0.0, 0.0), 0);
        assert_eq!(variation_point(Point2::new(2.0, 1.0), &b), 1.0);
    }

    #[test]
    fn constant_bound_formula() {
        let f = validate_bifiltration(vec![
            (vec![0], vec![Point2::new(2.0, 0.0)]),
            (vec![1], vec![Point2::new(0.0, 1.0)]),
        ])
        .unwrap();
        let b = ParamBox::new(SliceType::FlatY, (0.25, 0.75), (0.3, 0.5), 1);
        assert!((bound_c(&f, &f, &b, 0.0) - 1.2).abs() < 1e-15);
    }

    #[test]
    fn global_bound_examples() {
        let f = single(Point2::new(1.0, 0.5));
        let mut b = ParamBox::new(SliceType::FlatY, (0.0, 1.0), (0.0, 0.5), 0);
        for _ in 0..3 {
            b = b.subdivide().unwrap()[0];
        }
        assert_eq!(bound_g(&f, &f, &b, 0.0).unwrap(), 0.25);

        let f = single(Point2::new(2.0, 1.0));
        let b0 = ParamBox::new(SliceType::SteepX, (0.0, 1.0), (0.0, 2.0), 0);
        assert_eq!(bound_g(&f, &f, &b0, 0.5).unwrap(), 4.5);

        let bad = ParamBox::new(SliceType::SteepX, (0.0, 0.5), (0.0, 2.0), 0);
        assert!(matches!(bound_g(&f, &f, &bad, 0.0), Err(Error::InvalidLevel(0))));
    }

    #[test]
    fn identical_filtrations_double_the_variation() {
        let f = validate_bifiltration(vec![
            (vec![0], vec![Point2::new(1.0, 3.0)]),
            (vec![1], vec![Point2::new(2.0, 0.5)]),
            (vec![0, 1], vec![Point2::new(2.0, 3.0)]),
        ])
        .unwrap();
        let b = ParamBox::new(SliceType::SteepY, (0.5, 1.0), (1.5, 3.0), 1);
        let v = variation_filtration(&f, &b);
        assert!(v > 0.0);
        assert_eq!(bound_l(&f, &f, &b, 0.0), 2.0 * v);
    }

    #[test]
    fn cutoff_only_changes_value_above_cutoff() {
        let f = validate_bifiltration(vec![
            (vec![0], vec![Point2::new(1.0, 3.0)]),
            (vec![1], vec![Point2::new(2.0, 0.5)]),
        ])
        .unwrap();
        let b = ParamBox::new(SliceType::FlatX, (0.0, 1.0), (0.0, 2.0), 0);
        let exact = bound_l(&f, &f, &b, 0.1);
        for cutoff in [0.0, 0.1, exact / 2.0, exact, exact * 2.0] {
            let v = bound_l_with_cutoff(&f, &f, &b, 0.1, cutoff);
            if v <= cutoff {
                assert_eq!(v, exact);
            } else {
                assert!(exact > cutoff);
            }
        }
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("l".parse::<BoundKind>().unwrap(), BoundKind::LocalLinear);
        assert_eq!("c".parse::<BoundKind>().unwrap(), BoundKind::LocalConstant);
        assert_eq!("g".parse::<BoundKind>().unwrap(), BoundKind::Global);
        assert!("x".parse::<BoundKind>().is_err());
    }
}

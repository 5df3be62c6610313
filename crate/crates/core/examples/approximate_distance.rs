//! Absolute and relative approximation of the matching distance.

use matchdist::{approximate, normalize_pair, validate_bifiltration, Point2, SolverConfig};

fn main() {
    // Two edges whose endpoints enter at different grades.
    let a = validate_bifiltration(vec![
        (vec![0], vec![Point2::new(0.0, 1.0)]),
        (vec![1], vec![Point2::new(1.0, 0.0)]),
        (vec![0, 1], vec![Point2::new(2.0, 2.0)]),
    ])
    .unwrap();
    let b = validate_bifiltration(vec![
        (vec![0], vec![Point2::new(0.0, 0.0)]),
        (vec![1], vec![Point2::new(3.0, 0.5)]),
        (vec![0, 1], vec![Point2::new(3.0, 4.0)]),
    ])
    .unwrap();
    let (a, b, shift) = normalize_pair(&a, &b);
    println!("shifted by {shift:?}");

    let abs = approximate(&a, &b, &SolverConfig::absolute(0.01)).unwrap();
    println!("absolute: {} <= d_match <= {}  ({} calls)", abs.delta, abs.residual_upper, abs.calls);

    let rel = approximate(&a, &b, &SolverConfig::relative(0.05)).unwrap();
    println!("relative: d_match <= {} <= 1.05 d_match  ({} calls)", rel.delta, rel.calls);
    if let Some(s) = rel.best_slice {
        println!("attained on {} slice lambda={} mu={}", s.kind, s.lambda, s.mu);
    }
}

//! Pushes a few points onto lines of each slice type.
//!
//! Run with `cargo run --example weighted_push`.

use matchdist::{restrict, validate_bifiltration, weighted_push, Point2, Slice, SliceType};

fn main() {
    let points = [Point2::new(2.0, 3.0), Point2::new(4.0, 1.0), Point2::new(0.0, 0.0)];
    for kind in SliceType::ALL {
        let slice = Slice::new(0.5, 1.0, kind);
        let pushed: Vec<String> = points.iter().map(|&p| format!("{:.3}", weighted_push(p, &slice))).collect();
        println!("{kind:>7} lambda=0.5 mu=1: {}", pushed.join("  "));
    }

    // A simplex with two critical values enters at the earlier push.
    let f = validate_bifiltration(vec![(vec![0], vec![Point2::new(1.0, 3.0), Point2::new(3.0, 1.0)])]).unwrap();
    let m = restrict(&f, &Slice::new(0.25, 0.0, SliceType::FlatY));
    println!("two-critical vertex enters at {}", m.value(0));
}

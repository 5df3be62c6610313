//! Compares the global, constant and linear bounds on one pair of random
//! filtrations, first box by box and then as full solver runs.

use matchdist::bounds::{bound_c, bound_g, bound_l};
use matchdist::generators::{generate, GenSpec};
use matchdist::{approximate, eval, initial_boxes, normalize_pair, BoundKind, SolverConfig};

fn main() {
    let a = generate(&GenSpec::new(40, 120, 1, 1)).unwrap();
    let b = generate(&GenSpec::new(40, 120, 1, 2)).unwrap();
    let (a, b, _) = normalize_pair(&a, &b);

    let mut bx = initial_boxes(&a, &b)[0];
    for _ in 0..4 {
        let d = eval(&a, &b, &bx.center(), 0);
        println!(
            "level {} {bx}: d={d} L={:.2} C={:.2} G={:.2}",
            bx.level,
            bound_l(&a, &b, &bx, d),
            bound_c(&a, &b, &bx, d),
            bound_g(&a, &b, &bx, d).unwrap()
        );
        bx = bx.subdivide().unwrap()[3];
    }

    for kind in BoundKind::ALL {
        let r = approximate(&a, &b, &SolverConfig::relative(0.5).with_bound(kind)).unwrap();
        println!("bound {kind}: delta={} calls={} deepest level={}", r.delta, r.calls, r.deepest_level);
    }
}

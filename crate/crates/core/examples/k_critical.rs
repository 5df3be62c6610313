//! Multi-critical filtrations: each simplex may enter at several
//! incomparable grades, and a slice sees the earliest of them.

use matchdist::bounds::variation_filtration;
use matchdist::generators::{generate_k_critical, GenSpec};
use matchdist::{approximate, initial_boxes, normalize_pair, restrict, SolverConfig};

fn main() {
    let spec = GenSpec::new(12, 15, 1, 9).with_coord_range(50);
    let a = generate_k_critical(&spec, 3).unwrap();
    let b = generate_k_critical(&GenSpec { seed: 10, ..spec }, 2).unwrap();
    println!("critical values per simplex: at most {} and {}", a.max_critical_count(), b.max_critical_count());

    let bx = initial_boxes(&a, &b)[2];
    let m = restrict(&a, &bx.center());
    println!("restriction is monotone: {}", m.first_violation().is_none());
    println!("variation over {bx}: {}", variation_filtration(&a, &bx));

    let (a, b, _) = normalize_pair(&a, &b);
    match approximate(&a, &b, &SolverConfig::absolute(0.5)) {
        Ok(r) => println!("matching distance ~ {} ({} calls)", r.delta, r.calls),
        Err(e) => println!("{e}"),
    }
}

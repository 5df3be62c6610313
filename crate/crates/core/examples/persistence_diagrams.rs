//! Persistence diagrams of a one-parameter filtration in dimensions 0 and 1.

use matchdist::{persistence, MonoFiltration};

fn main() {
    // A square whose cycle is filled in later by two triangles.
    let m = MonoFiltration::from_simplices(vec![
        (vec![0], 0.0),
        (vec![1], 0.5),
        (vec![2], 1.0),
        (vec![3], 1.5),
        (vec![0, 1], 2.0),
        (vec![1, 2], 2.0),
        (vec![2, 3], 2.5),
        (vec![0, 3], 3.0),
        (vec![0, 2], 4.0),
        (vec![0, 1, 2], 4.5),
        (vec![0, 2, 3], 5.0),
    ])
    .unwrap();
    for dim in 0..=1 {
        print!("{}", persistence(&m, dim).sorted().to_dump());
    }
}

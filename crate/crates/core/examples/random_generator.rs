//! Generates a random bi-filtration and prints a summary and its first lines.

use matchdist::generators::{generate, GenSpec};
use matchdist::io::write_bifiltration;

fn main() {
    let spec = GenSpec::new(10, 6, 2, 42).with_coord_range(100);
    let f = generate(&spec).unwrap();
    let c = f.complex();
    println!("{} simplices: {} vertices, {} edges, {} triangles", f.len(), c.dim_range(0).len(), c.dim_range(1).len(), c.dim_range(2).len());
    println!("extent: x <= {}, y <= {}", f.max_x(), f.max_y());
    for line in write_bifiltration(&f).lines().take(6) {
        println!("{line}");
    }
}

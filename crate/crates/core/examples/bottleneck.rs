//! Bottleneck distance between two small diagrams.

use matchdist::{bottleneck_distance, Diagram};

fn main() {
    let a = Diagram::new(0, vec![(0.0, 4.0), (1.0, 2.0)], vec![0.0]);
    let b = Diagram::new(0, vec![(0.5, 4.5)], vec![0.25]);
    // (0,4) moves to (0.5,4.5), (1,2) collapses onto the diagonal, and the
    // essential classes differ by 0.25.
    println!("d_B = {}", bottleneck_distance(&a, &b).unwrap());

    let c = Diagram::new(0, vec![], vec![]);
    println!("different number of essential classes: {}", bottleneck_distance(&a, &c).unwrap());
}

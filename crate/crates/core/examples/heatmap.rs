//! Samples the bottleneck distance over all slices and prints the composite
//! grid as coarse ASCII shading.

use matchdist::generators::{generate, GenSpec};
use matchdist::heatmap::compute_heatmap;
use matchdist::normalize_pair;

fn main() {
    let a = generate(&GenSpec::new(20, 40, 1, 3)).unwrap();
    let b = generate(&GenSpec::new(20, 40, 1, 4)).unwrap();
    let (a, b, _) = normalize_pair(&a, &b);
    let h = compute_heatmap(&a, &b, 4, 0, 1).unwrap();
    let max = h.max();
    let shades = [' ', '.', ':', '-', '=', '+', '*', '#', '%', '@'];
    // Top: steep slices, bottom: flat slices; left: y-slices, right: x-slices.
    for row in h.composite() {
        let line: String = row
            .iter()
            .map(|&v| shades[((v / max * 9.0).round() as usize).min(9)])
            .collect();
        println!("|{line}|");
    }
    println!("max sampled distance {max}");
}

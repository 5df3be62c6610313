//! Lower-star bi-filtration from vertex values, read from the text format.

use matchdist::io::parse_filtration;
use matchdist::{approximate, normalize_pair, SolverConfig};

const TRIANGLE: &str = "\
lowerstar
3 7
0 2
1 0
2 1
0
1
2
0 1
0 2
1 2
0 1 2
";

fn main() {
    let f = parse_filtration(TRIANGLE).unwrap();
    for (s, c) in f.entries() {
        println!("{s} enters at {:?}", c.points()[0]);
    }
    // Same complex with the roles of the two parameters swapped.
    let g = parse_filtration(&TRIANGLE.replace("0 2\n1 0\n2 1", "2 0\n0 1\n1 2")).unwrap();
    let (f, g, _) = normalize_pair(&f, &g);
    let r = approximate(&f, &g, &SolverConfig::absolute(0.01)).unwrap();
    println!("{} <= matching distance <= {}", r.delta, r.delta + 0.01);
}

//! Anytime approximation: refine the box with the largest bound first and
//! stop when the time budget runs out.

use std::time::Duration;

use matchdist::generators::{generate, GenSpec};
use matchdist::{budgeted_approximate, normalize_pair};

fn main() {
    let a = generate(&GenSpec::new(100, 400, 1, 7)).unwrap();
    let b = generate(&GenSpec::new(100, 400, 1, 8)).unwrap();
    let (a, b, _) = normalize_pair(&a, &b);

    for ms in [0, 20, 200] {
        let r = budgeted_approximate(&a, &b, 0.01, Duration::from_millis(ms)).unwrap();
        println!(
            "budget {ms:>3} ms: rho={} upper={} guaranteed relative error {:.3} ({} calls, {})",
            r.rho,
            r.residual_upper,
            r.guaranteed_relative_error(),
            r.calls,
            r.status
        );
    }
}

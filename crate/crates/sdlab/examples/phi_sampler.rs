//! The chart-word sampler: composing random subdivision charts pushes a
//! point toward the volume distribution. Exhaustive words reproduce the
//! top-cell comb exactly; Monte Carlo approaches the volume integral.
//!
//! ```bash
//! cargo run --example phi_sampler
//! ```

use num::One;
use sdlab::json::{decimal_string, rational_string};
use sdlab::measures::{
    gamma_integral, integrate_volume, phi_exhaustive, phi_mc_integral, phi_sample,
    standard_barycenter, PolynomialObservable,
};
use sdlab::poly::{rational_to_f64, Rational};
use sdlab::subdivision::embedded_standard_simplex;

fn main() {
    // a few deterministic samples on the segment
    println!("seeded chart-word samples on the segment, depth 1, from the midpoint:");
    for seed in 0..4u64 {
        let p = phi_sample(1, 1, seed, &[sdlab::poly::rat(1, 2)]);
        println!("  seed {seed}: lands at {}", rational_string(&p[0]));
    }

    println!();
    println!("exhaustive chart words equal the top-cell comb pairing, exactly:");
    let e = embedded_standard_simplex(2);
    let x = PolynomialObservable::coordinate(2, 0);
    for d in 1..=3usize {
        let words = phi_exhaustive(2, d, &x, &standard_barycenter(2));
        let comb = gamma_integral(&e, d, 2, &x, 1_000_000).unwrap().value;
        assert_eq!(words, comb);
        println!(
            "  depth {d}: all 6^{d} words average to {}",
            rational_string(&words)
        );
    }

    println!();
    println!("Monte Carlo at depth 12 against the exact volume integrals:");
    let phis = [
        ("x", PolynomialObservable::coordinate(2, 0)),
        (
            "x^2",
            PolynomialObservable::new(2, vec![(vec![2, 0], Rational::one())]).unwrap(),
        ),
    ];
    for (name, phi) in &phis {
        let mc = phi_mc_integral(2, 12, 20_000, phi, 20240803);
        let target = integrate_volume(&e, phi).unwrap();
        let sigmas = (rational_to_f64(&mc.mean) - rational_to_f64(&target)).abs() / mc.stderr;
        println!(
            "  phi = {name:3}: mean {} vs exact {} ({} samples, {:.2} sigma)",
            decimal_string(&mc.mean, 6),
            rational_string(&target),
            mc.samples,
            sigmas
        );
    }
}

//! Weak convergence of the rescaled barycenter combs toward the scaled
//! volume measure, with exact per-depth errors.
//!
//! ```bash
//! cargo run --example gamma_convergence
//! ```

use num::One;
use sdlab::json::{decimal_string, rational_string};
use sdlab::measures::{converge_gamma, PolynomialObservable};
use sdlab::poly::Rational;
use sdlab::subdivision::embedded_standard_simplex;

fn main() {
    let e = embedded_standard_simplex(2);
    let observables = [
        ("1", PolynomialObservable::constant(2, Rational::one())),
        ("x", PolynomialObservable::coordinate(2, 0)),
        (
            "x^2",
            PolynomialObservable::new(2, vec![(vec![2, 0], Rational::one())]).unwrap(),
        ),
    ];

    for p in 0..=2usize {
        for (name, phi) in &observables {
            let rep = converge_gamma(&e, p, 1..=6, phi, 10_000_000).unwrap();
            println!(
                "pairing the p = {p} comb with phi = {name}; limit target {}",
                rational_string(&rep.target)
            );
            println!("   d |          value |          error |   ratio | skeleton mass");
            for row in &rep.rows {
                println!(
                    "   {} | {:>14} | {:>14} | {:>7} | {}",
                    row.d,
                    decimal_string(&row.value, 10),
                    decimal_string(&row.error, 10),
                    row.ratio
                        .as_ref()
                        .map(|r| decimal_string(r, 3))
                        .unwrap_or_else(|| "-".into()),
                    rational_string(&row.skeleton_mass),
                );
            }
            if rep.errors_all_zero() {
                println!("   (the pairing is exact at every depth)");
            }
            println!();
        }
    }
}

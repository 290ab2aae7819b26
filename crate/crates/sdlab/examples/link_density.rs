//! Density of link face counts over deep subdivisions: the polynomial-valued
//! pairing converges coefficient by coefficient, and the top coefficient is
//! pinned by an exact incidence identity.
//!
//! ```bash
//! cargo run --example link_density
//! ```

use num::One;
use sdlab::json::{decimal_string, rational_string};
use sdlab::measures::{fp_delta_report, link_density, PolynomialObservable};
use sdlab::poly::Rational;
use sdlab::subdivision::embedded_standard_simplex;

fn main() {
    let e = embedded_standard_simplex(2);
    let one = PolynomialObservable::constant(2, Rational::one());

    println!("links of vertices in the subdivided triangle (p = 0)");
    println!("coefficient l counts the l-faces of each link, weighted by 1/6^d");
    println!();
    println!("   d |   l = 0 (target 3) |   l = 1 (target 3)");
    for d in 1..=5usize {
        let rep = link_density(&e, 0, d, &one, 10_000_000).unwrap();
        println!(
            "   {d} | {:>18} | {:>18}",
            decimal_string(&rep.coeffs[0], 12),
            decimal_string(&rep.coeffs[1], 12),
        );
    }
    println!();
    println!("the l = 1 column is exact at every depth: each triangle meets");
    println!("its three vertices, so the weighted count is 3 f_2^d / 6^d = 3.");

    println!();
    println!("top-link mass identity on the segment (p = 0):");
    let e1 = embedded_standard_simplex(1);
    let one1 = PolynomialObservable::constant(1, Rational::one());
    let rep = fp_delta_report(&e1, 0, 1..=6, &one1, 10_000_000).unwrap();
    println!(
        "  every vertex of the subdivided segment counts its incident edges;"
    );
    println!(
        "  the weighted total is exactly {} at every depth (the limit value).",
        rational_string(&rep.target)
    );
    for row in &rep.rows {
        assert_eq!(row.value, rep.target);
    }

    println!();
    println!("with a non-constant observable the same pairing converges:");
    let x = PolynomialObservable::coordinate(2, 0);
    println!("   d |  l = 0 coefficient | target");
    for d in 1..=5usize {
        let rep = link_density(&e, 0, d, &x, 10_000_000).unwrap();
        println!(
            "   {d} | {:>18} | {}",
            decimal_string(&rep.coeffs[0], 12),
            rational_string(&rep.targets[0]),
        );
    }
}

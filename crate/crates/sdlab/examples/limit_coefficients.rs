//! Limit coefficients of the rescaled face vector, by two independent
//! methods, with the convergence of the exact ratios.
//!
//! ```bash
//! cargo run --example limit_coefficients
//! ```

use num::BigInt;
use sdlab::complex::standard_simplex;
use sdlab::json::{decimal_string, rational_string};
use sdlab::poly::Rational;
use sdlab::spectral::{eigen_residual, q_partition, q_solve, transfer};

fn main() {
    println!("q[p] = limit of f_p(d-fold subdivision) / (n+1)!^d per top cell");
    println!();
    for n in 0..=6usize {
        let solved = q_solve(n);
        let partitioned = q_partition(n);
        assert_eq!(solved, partitioned, "the two methods agree");
        assert!(eigen_residual(n, &solved).iter().all(num::Zero::is_zero));
        let row: Vec<String> = solved.coeffs().iter().map(rational_string).collect();
        println!("  n = {n}: ({})", row.join(", "));
    }

    println!();
    println!("exact ratio table for the triangle: f_p(Sd^d) / 6^d");
    println!("  d |        p = 0 |        p = 1 |        p = 2");
    let k = standard_simplex(2);
    let f = k.face_vector();
    for d in 1..=8usize {
        let fd = transfer(&f, 2, d).unwrap();
        let scale = Rational::from_integer(BigInt::from(6).pow(d as u32));
        let cells: Vec<String> = (0..=2)
            .map(|p| {
                let ratio = Rational::from_integer(fd.get(p)) / &scale;
                decimal_string(&ratio, 10)
            })
            .collect();
        println!("  {d} | {} | {} | {}", cells[0], cells[1], cells[2]);
    }
    let q = q_solve(2);
    println!(
        "  -> ({}, {}, {})",
        decimal_string(&q.get(0), 10),
        decimal_string(&q.get(1), 10),
        decimal_string(&q.get(2), 10)
    );
}

//! The interior-face-count matrix, computed two independent ways.
//!
//! ```bash
//! cargo run --example lambda_matrix
//! ```

use num::BigInt;
use num::Zero;
use sdlab::spectral::{binomial, binomial_power_matrix, lagrange_identity_check, LambdaMatrix};

fn main() {
    let size = 8;
    let recursive = LambdaMatrix::recursive(size);
    let closed = LambdaMatrix::closed_form(size);
    assert_eq!(recursive, closed);
    println!("lambda(i, j) = interior (j-1)-faces of the subdivided (i-1)-simplex");
    println!("(cone recursion and alternating closed form agree)");
    println!();
    for i in 1..=size {
        let row: Vec<String> = (1..=i).map(|j| recursive.get(i, j).to_string()).collect();
        println!("  row {i:2}: {}", row.join("  "));
    }

    println!();
    println!("column identity: sum_p C(h+1, p) lambda(p, l) = lambda(h+1, l+1)");
    for h in 1..size {
        for l in 1..=h {
            let mut acc = BigInt::zero();
            for p in l..=h {
                acc += binomial(h + 1, p) * recursive.get(p, l);
            }
            assert_eq!(acc, recursive.get(h + 1, l + 1));
        }
    }
    println!("  verified for all l <= h < {size}");

    println!();
    println!("monomials in the falling-factorial basis: T^j = sum_i lambda(j, i) L_i(T)");
    match lagrange_identity_check(10) {
        Ok(()) => println!("  verified exactly for j <= 10"),
        Err(j) => println!("  FAILED at j = {j}"),
    }

    println!();
    println!("powers of the unipotent binomial matrix, two routes:");
    let m = binomial_power_matrix(3, 5);
    println!("  (I + C)^3 entry (4, 2) = C(4, 2) * 3^2 = {}", m[3][1]);
}

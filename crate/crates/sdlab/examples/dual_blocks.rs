//! Dual blocks: their open-cell counts, the partition of the next
//! subdivision, and the density of block counts over deep subdivisions.
//!
//! ```bash
//! cargo run --example dual_blocks
//! ```

use num::{BigInt, One, Zero};
use sdlab::complex::standard_simplex;
use sdlab::json::decimal_string;
use sdlab::measures::{block_density, PolynomialObservable};
use sdlab::poly::Rational;
use sdlab::spectral::transfer;
use sdlab::subdivision::{dual_block_face_vector, embedded_standard_simplex};

fn main() {
    let k = standard_simplex(2);
    println!("dual blocks inside the solid triangle");
    println!("counts[l] = number of chains of length l above the face");
    for face in k.all_faces() {
        let blocks = dual_block_face_vector(face, &k).unwrap();
        let show: Vec<String> = blocks.counts().iter().map(|c| c.to_string()).collect();
        println!("  D({:?}) has counts ({})", face.vertices(), show.join(", "));
    }

    // blocks partition the subdivision: the columns above sum to f(Sd K)
    let mut total = vec![BigInt::zero(); 3];
    for face in k.all_faces() {
        let blocks = dual_block_face_vector(face, &k).unwrap();
        for (l, c) in blocks.counts().iter().enumerate() {
            total[l] += c;
        }
    }
    let expected = transfer(&k.face_vector(), 2, 1).unwrap();
    assert_eq!(total, expected.counts().to_vec());
    let show: Vec<String> = total.iter().map(|c| c.to_string()).collect();
    println!();
    println!(
        "summed over all faces: ({}) = the face vector of the subdivision",
        show.join(", ")
    );

    println!();
    println!("block-count density over deep subdivisions (p = 0, constant observable)");
    let e = embedded_standard_simplex(2);
    let one = PolynomialObservable::constant(2, Rational::one());
    println!("   d |        l = 0 |        l = 1 |        l = 2");
    for d in 1..=4usize {
        let rep = block_density(&e, 0, d, &one, 10_000_000).unwrap();
        println!(
            "   {d} | {:>12} | {:>12} | {:>12}",
            decimal_string(&rep.coeffs[0], 8),
            decimal_string(&rep.coeffs[1], 8),
            decimal_string(&rep.coeffs[2], 8),
        );
    }
    let rep = block_density(&e, 0, 4, &one, 10_000_000).unwrap();
    let targets: Vec<String> = rep.targets.iter().map(|t| decimal_string(t, 8)).collect();
    println!("   -> targets: {}", targets.join(" | "));
}

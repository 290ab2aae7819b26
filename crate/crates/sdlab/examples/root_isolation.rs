//! Exact root isolation of the limit polynomials: simplicity, realness,
//! containment in [-1, 0] and the reflection pairing.
//!
//! ```bash
//! cargo run --example root_isolation
//! ```

use sdlab::poly::rat;
use sdlab::spectral::limit_root_report;

fn main() {
    let width = rat(1, 1_000_000_000_000i64);
    println!("roots of T q_n(T), isolated to width 1e-12");
    println!();
    for n in 1..=8usize {
        let rep = limit_root_report(n, &width).unwrap();
        let roots: Vec<String> = rep
            .isolation
            .approximate_roots()
            .iter()
            .map(|r| format!("{r:+.9}"))
            .collect();
        println!("  n = {n}: {} roots: {}", rep.isolation.len(), roots.join("  "));
        println!(
            "         simple: {}  real: {}  in [-1, 0]: {}  q(-1/2) = 0: {}",
            rep.all_simple, rep.all_real, rep.in_unit_interval, rep.vanishes_at_minus_half
        );
        // reflection pairing r_i + r_{n-i} = -1
        let mids = rep.isolation.approximate_roots();
        let paired = (0..mids.len())
            .all(|i| (mids[i] + mids[mids.len() - 1 - i] + 1.0).abs() < 1e-9);
        println!("         reflection pairing r_i + r_(n-i) = -1: {paired}");
    }
}

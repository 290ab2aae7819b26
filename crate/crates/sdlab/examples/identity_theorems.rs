//! Run the exact identity verifiers over the shipped corpus, positives and
//! negatives alike.
//!
//! ```bash
//! cargo run --example identity_theorems
//! ```

use sdlab::corpus::{corpus_entry, corpus_names};
use sdlab::theorems::{
    asymptotic_dehn_sommerville, chi_at_minus_half, dehn_sommerville, macdonald_symmetry,
    sphere_root_analysis,
};

fn main() {
    println!("{:22} {:>4} {:>10} {:>9} {:>9}", "complex", "dim", "symmetry", "chi=-1/2", "relations");
    for name in corpus_names() {
        let entry = corpus_entry(&name).unwrap();
        let k = &entry.complex;
        let n = k.dim().unwrap();
        let mac = macdonald_symmetry(k);
        let chi = chi_at_minus_half(k);
        let ds = dehn_sommerville(k);
        let chi_cell = if chi.applicable {
            if chi.holds { "yes" } else { "NO" }
        } else {
            "n/a"
        };
        println!(
            "{:22} {:>4} {:>10} {:>9} {:>9}{}",
            name,
            n,
            if mac.holds { "yes" } else { "NO" },
            chi_cell,
            if ds.holds { "yes" } else { "NO" },
            if mac.warnings.is_empty() { "" } else { "   (not a closed pseudo-manifold)" },
        );
    }

    println!();
    println!("limit form of the relations on the limit coefficients:");
    for n in 0..=9usize {
        let rep = asymptotic_dehn_sommerville(n);
        assert!(rep.holds);
    }
    println!("  exact for all n <= 9");

    println!();
    println!("universal values where the face polynomial meets the Euler characteristic:");
    for n in 1..=6usize {
        let rep = sphere_root_analysis(n).unwrap();
        let expect = if n % 2 == 0 { "{-1, -1/2}" } else { "{-1}" };
        println!(
            "  n = {n}: real root set is exactly {expect}: {}",
            if rep.holds { "yes" } else { "NO" }
        );
    }
}

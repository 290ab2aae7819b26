//! Iterated barycentric subdivision, checked against the transfer matrix.
//!
//! ```bash
//! cargo run --example subdivide
//! ```

use sdlab::complex::standard_simplex;
use sdlab::spectral::transfer;
use sdlab::subdivision::{barycentric_subdivision, iterate_subdivision};

fn main() {
    let k = standard_simplex(2);
    println!("subdividing the solid triangle");
    println!("  d | enumerated f vector | transferred f vector");
    for d in 0..=4usize {
        let enumerated = iterate_subdivision(&k, d, 1_000_000).unwrap();
        let fe = enumerated.face_vector();
        let ft = transfer(&k.face_vector(), 2, d).unwrap();
        assert_eq!(fe, ft);
        let show: Vec<String> = fe.counts().iter().map(|c| c.to_string()).collect();
        println!("  {d} | ({})", show.join(", "));
    }

    println!();
    println!("the vertex table of one subdivision step");
    let sd = barycentric_subdivision(&k);
    for v in 0..sd.vertex_count() as u32 {
        println!(
            "  new vertex {v} sits at the barycenter of {:?}",
            sd.parent_face(v)
        );
    }

    println!();
    let flags = sd.complex().facets();
    println!("its {} facets are the maximal chains:", flags.len());
    for facet in flags {
        let chain = sd.chain_for(facet);
        let steps: Vec<String> = chain
            .simplices()
            .iter()
            .map(|s| format!("{:?}", s.vertices()))
            .collect();
        println!("  {}", steps.join(" < "));
    }

    println!();
    println!("resource guard: a deep subdivision of the solid tetrahedron");
    match iterate_subdivision(&standard_simplex(3), 5, 1_000_000) {
        Err(e) => println!("  refused as expected: {e}"),
        Ok(_) => unreachable!("the cap should trip"),
    }
}

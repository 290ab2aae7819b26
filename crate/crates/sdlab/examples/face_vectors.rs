//! Build complexes from facets and read off their face data.
//!
//! ```bash
//! cargo run --example face_vectors
//! ```

use sdlab::complex::{boundary_simplex, cross_polytope_boundary, standard_simplex, suspension};
use sdlab::Simplex;

fn show(name: &str, k: &sdlab::SimplicialComplex) {
    let f = k.face_vector();
    let counts: Vec<String> = f.counts().iter().map(|c| c.to_string()).collect();
    println!(
        "{name:24} dim {}  f = ({})  chi = {}  closed pseudo-manifold: {}",
        k.dim().map(|d| d.to_string()).unwrap_or_else(|| "-".into()),
        counts.join(", "),
        k.euler_characteristic(),
        k.is_closed_pseudomanifold()
    );
}

fn main() {
    println!("standard builders");
    println!("-----------------");
    show("triangle (solid)", &standard_simplex(2));
    show("tetrahedron (solid)", &standard_simplex(3));
    show("circle", &boundary_simplex(1));
    show("2-sphere", &boundary_simplex(2));
    show("octahedron", &cross_polytope_boundary(2));
    show("suspended circle", &suspension(&boundary_simplex(1)));

    println!();
    println!("a complex from explicit facets (two triangles sharing an edge)");
    let k = sdlab::SimplicialComplex::from_facets(vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
    show("butterfly strip", &k);

    println!();
    println!("links inside the 2-sphere");
    let sphere = boundary_simplex(2);
    for verts in [vec![0u32], vec![0, 1]] {
        let s = Simplex::new(verts.clone()).unwrap();
        let lk = sphere.link(&s).unwrap();
        let counts: Vec<String> = lk
            .face_vector()
            .counts()
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!("  link of {verts:?} has f = ({})", counts.join(", "));
    }
    let top = Simplex::new(vec![0, 1, 2]).unwrap();
    println!(
        "  link of the facet [0, 1, 2] is empty: {}",
        sphere.link(&top).unwrap().is_empty_complex()
    );
}

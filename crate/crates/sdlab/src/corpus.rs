//! Named complexes shipped with the tool: simplices and their boundaries,
//! cross polytopes, the seven-vertex torus, a nine-vertex Klein bottle, and
//! non-manifold negatives for the verifiers.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::complex::{
    boundary_simplex, cross_polytope_boundary, standard_simplex, SimplicialComplex, VertexId,
};
use crate::poly::{rat, Rational};
use crate::subdivision::{EmbeddedComplex, Point};

/// A corpus member: the complex plus optional exact coordinates (abstract
/// surfaces ship without an embedding).
pub struct CorpusEntry {
    pub name: String,
    pub complex: SimplicialComplex,
    pub coords: Option<BTreeMap<VertexId, Point>>,
}

impl CorpusEntry {
    pub fn embedded(&self) -> Option<EmbeddedComplex> {
        self.coords
            .as_ref()
            .and_then(|c| EmbeddedComplex::new(self.complex.clone(), c.clone()).ok())
    }
}

pub fn corpus_names() -> Vec<String> {
    let mut names = vec![];
    for n in 1..=3 {
        names.push(format!("delta-{n}"));
    }
    for n in 2..=7 {
        names.push(format!("boundary-delta-{n}"));
    }
    for n in 1..=5 {
        names.push(format!("cross-polytope-{n}"));
    }
    names.extend(
        ["torus-7", "klein-bottle", "disc", "wedge"]
            .iter()
            .map(|s| s.to_string()),
    );
    names
}

/// Looks a corpus member up by name; `None` for unknown names.
pub fn corpus_entry(name: &str) -> Option<CorpusEntry> {
    if let Some(n) = name.strip_prefix("delta-").and_then(|s| s.parse::<usize>().ok()) {
        if (1..=6).contains(&n) {
            return Some(CorpusEntry {
                name: name.to_string(),
                complex: standard_simplex(n),
                coords: Some(simplex_coords(n)),
            });
        }
    }
    if let Some(k) = name
        .strip_prefix("boundary-delta-")
        .and_then(|s| s.parse::<usize>().ok())
    {
        if (1..=8).contains(&k) {
            // the boundary complex inherits the simplex embedding
            return Some(CorpusEntry {
                name: name.to_string(),
                complex: boundary_simplex(k - 1),
                coords: Some(simplex_coords(k)),
            });
        }
    }
    if let Some(n) = name
        .strip_prefix("cross-polytope-")
        .and_then(|s| s.parse::<usize>().ok())
    {
        if (1..=6).contains(&n) {
            return Some(CorpusEntry {
                name: name.to_string(),
                complex: cross_polytope_boundary(n),
                coords: Some(cross_polytope_coords(n)),
            });
        }
    }
    match name {
        "torus-7" => Some(CorpusEntry {
            name: name.into(),
            complex: torus_7(),
            coords: None,
        }),
        "klein-bottle" => Some(CorpusEntry {
            name: name.into(),
            complex: klein_bottle(),
            coords: None,
        }),
        "disc" => {
            // cone over the boundary of the triangle, apex at the centroid
            let complex = SimplicialComplex::from_facets(vec![
                vec![0, 1, 3],
                vec![1, 2, 3],
                vec![0, 2, 3],
            ])
            .unwrap();
            let mut coords = BTreeMap::new();
            coords.insert(0, vec![Rational::zero(), Rational::zero()]);
            coords.insert(1, vec![Rational::one(), Rational::zero()]);
            coords.insert(2, vec![Rational::zero(), Rational::one()]);
            coords.insert(3, vec![rat(1, 3), rat(1, 3)]);
            Some(CorpusEntry {
                name: name.into(),
                complex,
                coords: Some(coords),
            })
        }
        "wedge" => {
            // two triangle boundaries sharing vertex 0
            let complex = SimplicialComplex::from_facets(vec![
                vec![0, 1],
                vec![1, 2],
                vec![0, 2],
                vec![0, 3],
                vec![3, 4],
                vec![0, 4],
            ])
            .unwrap();
            let mut coords = BTreeMap::new();
            coords.insert(0, vec![Rational::zero(), Rational::zero()]);
            coords.insert(1, vec![Rational::one(), Rational::zero()]);
            coords.insert(2, vec![Rational::one(), Rational::one()]);
            coords.insert(3, vec![-Rational::one(), Rational::zero()]);
            coords.insert(4, vec![-Rational::one(), -Rational::one()]);
            Some(CorpusEntry {
                name: name.into(),
                complex,
                coords: Some(coords),
            })
        }
        _ => None,
    }
}

fn simplex_coords(n: usize) -> BTreeMap<VertexId, Point> {
    let m = n.max(1);
    (0..=n as VertexId)
        .map(|v| {
            let mut p = vec![Rational::zero(); m];
            if v > 0 {
                p[v as usize - 1] = Rational::one();
            }
            (v, p)
        })
        .collect()
}

fn cross_polytope_coords(n: usize) -> BTreeMap<VertexId, Point> {
    let m = n + 1;
    (0..2 * (n + 1) as VertexId)
        .map(|v| {
            let mut p = vec![Rational::zero(); m];
            let axis = (v / 2) as usize;
            p[axis] = if v % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            (v, p)
        })
        .collect()
}

/// The seven-vertex torus: facet families `{i, i+1, i+3}` and
/// `{i, i+2, i+3}` modulo 7. Its edge set is the complete graph on seven
/// vertices; face vector (7, 21, 14).
pub fn torus_7() -> SimplicialComplex {
    let mut facets = Vec::with_capacity(14);
    for i in 0u32..7 {
        facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    SimplicialComplex::from_facets(facets).expect("torus facets are valid")
}

/// A nine-vertex Klein bottle: quotient of a 3x3 grid that wraps the
/// horizontal direction directly and the vertical direction through the
/// orientation-reversing identification `i -> -i`.
pub fn klein_bottle() -> SimplicialComplex {
    const M: i64 = 3;
    fn vid(mut i: i64, mut j: i64) -> u32 {
        if j >= M {
            j -= M;
            i = -i;
        }
        let i = i.rem_euclid(M);
        let j = j.rem_euclid(M);
        (j * M + i) as u32
    }
    let mut facets = Vec::with_capacity(18);
    for j in 0..M {
        for i in 0..M {
            let a = vid(i, j);
            let b = vid(i + 1, j);
            let c = vid(i, j + 1);
            let d = vid(i + 1, j + 1);
            facets.push(vec![a, b, d]);
            facets.push(vec![a, d, c]);
        }
    }
    SimplicialComplex::from_facets(facets).expect("klein facets are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn fv(k: &SimplicialComplex) -> Vec<i64> {
        k.face_vector()
            .counts()
            .iter()
            .map(|c| i64::try_from(c.clone()).unwrap())
            .collect()
    }

    /// Every vertex link of a closed surface is a single circle.
    fn links_are_circles(k: &SimplicialComplex) -> bool {
        for v in k.faces(0) {
            let lk = k.link(v).unwrap();
            if lk.dim() != Some(1) || !lk.is_closed_pseudomanifold() {
                return false;
            }
            // connected: edge count equals vertex count and one sweep
            // reaches every vertex
            let verts = lk.vertex_ids();
            let edges = lk.faces(1);
            if edges.len() != verts.len() {
                return false;
            }
            let mut reached = vec![verts[0]];
            let mut frontier = vec![verts[0]];
            while let Some(w) = frontier.pop() {
                for e in edges {
                    if e.vertices().contains(&w) {
                        for &u in e.vertices() {
                            if !reached.contains(&u) {
                                reached.push(u);
                                frontier.push(u);
                            }
                        }
                    }
                }
            }
            if reached.len() != verts.len() {
                return false;
            }
        }
        true
    }

    #[test]
    fn torus_is_a_closed_surface() {
        let t = torus_7();
        assert_eq!(fv(&t), vec![7, 21, 14]);
        assert_eq!(t.euler_characteristic(), BigInt::zero());
        assert!(t.is_closed_pseudomanifold());
        assert!(links_are_circles(&t));
    }

    #[test]
    fn klein_bottle_is_a_closed_surface() {
        let k = klein_bottle();
        assert_eq!(fv(&k), vec![9, 27, 18]);
        assert_eq!(k.euler_characteristic(), BigInt::zero());
        assert!(k.is_closed_pseudomanifold());
        assert!(links_are_circles(&k));
    }

    #[test]
    fn klein_bottle_is_not_orientable() {
        // try to orient all triangles coherently by spreading from the
        // first facet; a closed orientable surface would succeed
        let k = klein_bottle();
        let tris: Vec<Vec<u32>> = k
            .facets()
            .iter()
            .map(|f| f.vertices().to_vec())
            .collect();
        let mut orient: Vec<Option<Vec<u32>>> = vec![None; tris.len()];
        orient[0] = Some(tris[0].clone());
        let mut stack = vec![0usize];
        let mut consistent = true;
        while let Some(i) = stack.pop() {
            let oi = orient[i].clone().unwrap();
            let dir_edges =
                |t: &[u32]| vec![(t[0], t[1]), (t[1], t[2]), (t[2], t[0])];
            for &(u, v) in &dir_edges(&oi) {
                for (j, tj) in tris.iter().enumerate() {
                    if j == i || !tj.contains(&u) || !tj.contains(&v) {
                        continue;
                    }
                    let w = *tj.iter().find(|x| **x != u && **x != v).unwrap();
                    let cand = vec![v, u, w]; // opposite traversal of the shared edge
                    match &orient[j] {
                        None => {
                            orient[j] = Some(cand);
                            stack.push(j);
                        }
                        Some(oj) => {
                            let rots = [
                                oj.clone(),
                                vec![oj[1], oj[2], oj[0]],
                                vec![oj[2], oj[0], oj[1]],
                            ];
                            if !rots.contains(&cand) {
                                consistent = false;
                            }
                        }
                    }
                }
            }
        }
        assert!(!consistent);
    }

    #[test]
    fn corpus_lookup_and_names() {
        for name in corpus_names() {
            let entry = corpus_entry(&name).unwrap_or_else(|| panic!("missing {name}"));
            assert!(!entry.complex.facets().is_empty());
            if let Some(e) = entry.embedded() {
                assert!(e.complex().dim().is_some());
            }
        }
        assert!(corpus_entry("no-such-complex").is_none());
    }

    #[test]
    fn embedded_entries_are_valid() {
        for name in ["delta-2", "boundary-delta-3", "cross-polytope-2", "disc", "wedge"] {
            let entry = corpus_entry(name).unwrap();
            assert!(entry.embedded().is_some(), "{name} should embed");
        }
    }

    #[test]
    fn torus_values() {
        // exact evaluation at -1/2: 7 - 21/2 + 14/4 = 0 = chi
        let t = torus_7();
        let q = t.face_polynomial();
        assert_eq!(q.eval(&rat(-1, 2)), Rational::zero());
    }
}

//! Simplicial complexes given by their facets, with exact face enumeration.
//!
//! A complex is stored as its list of maximal faces; the full face poset is
//! materialized lazily, one dimension at a time, behind a [`OnceLock`] so
//! that a constructed complex can be shared read-only across threads.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};

/// Vertex label. Labels are preserved from input and need not be contiguous.
pub type VertexId = u32;

/// A simplex in canonical form: a non-empty, strictly increasing vertex list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    /// Builds a simplex from an arbitrary vertex list, sorting it into
    /// canonical form. Fails on an empty list or a repeated vertex.
    pub fn new(mut vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex(vertices));
        }
        Ok(Simplex { vertices })
    }

    /// Wraps a list already known to be strictly increasing.
    pub(crate) fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// True when `self` is a face of `other` (as vertex sets).
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.vertices.len() > other.vertices.len() {
            return false;
        }
        // both sorted: subset test by merge
        let mut it = other.vertices.iter();
        self.vertices
            .iter()
            .all(|v| it.by_ref().any(|w| w == v))
    }

    /// True when `self` is a proper face of `other`.
    pub fn is_proper_face_of(&self, other: &Simplex) -> bool {
        self.vertices.len() < other.vertices.len() && self.is_face_of(other)
    }

    /// The codimension-one faces, in the order induced by dropping the
    /// vertex at each position.
    pub fn boundary_faces(&self) -> Vec<Simplex> {
        if self.dim() == 0 {
            return Vec::new();
        }
        (0..self.vertices.len())
            .map(|skip| {
                let verts = self
                    .vertices
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != skip)
                    .map(|(_, v)| *v)
                    .collect();
                Simplex::from_sorted(verts)
            })
            .collect()
    }

    /// Union of two disjoint simplices; `None` when they share a vertex.
    pub fn disjoint_union(&self, other: &Simplex) -> Option<Simplex> {
        let mut merged = Vec::with_capacity(self.vertices.len() + other.vertices.len());
        let (mut i, mut j) = (0, 0);
        while i < self.vertices.len() && j < other.vertices.len() {
            match self.vertices[i].cmp(&other.vertices[j]) {
                std::cmp::Ordering::Less => {
                    merged.push(self.vertices[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    merged.push(other.vertices[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        merged.extend_from_slice(&self.vertices[i..]);
        merged.extend_from_slice(&other.vertices[j..]);
        Some(Simplex { vertices: merged })
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Simplex {
    /// Total order by (dimension, vertex tuple); this is the canonical order
    /// used to assign subdivision vertex ids.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices
            .len()
            .cmp(&other.vertices.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.vertices)
    }
}

/// Face counts `f_p` for `p = 0..=n`, as big integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceVector {
    counts: Vec<BigInt>,
}

impl FaceVector {
    pub fn new(counts: Vec<BigInt>) -> Self {
        FaceVector { counts }
    }

    pub fn from_usize(counts: &[usize]) -> Self {
        FaceVector {
            counts: counts.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn get(&self, p: usize) -> BigInt {
        self.counts.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The face polynomial with coefficient `f_p` at degree `p`.
    pub fn polynomial(&self) -> FacePolynomial {
        FacePolynomial {
            coeffs: self.counts.clone(),
        }
    }

    /// Alternating sum of the face counts.
    pub fn euler_characteristic(&self) -> BigInt {
        let mut chi = BigInt::zero();
        for (p, c) in self.counts.iter().enumerate() {
            if p % 2 == 0 {
                chi += c;
            } else {
                chi -= c;
            }
        }
        chi
    }
}

/// Integer polynomial whose coefficient at degree `p` counts the `p`-faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePolynomial {
    coeffs: Vec<BigInt>,
}

impl FacePolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        FacePolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }
}

/// A finite simplicial complex, generated by its facets.
///
/// Invariants: facets are canonical, deduplicated and mutually non-redundant
/// (no facet is a face of another); the face set is downward closed by
/// construction.
pub struct SimplicialComplex {
    facets: Vec<Simplex>,
    dim: Option<usize>,
    faces: OnceLock<Vec<Vec<Simplex>>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex {
            facets: self.facets.clone(),
            dim: self.dim,
            faces: match self.faces.get() {
                Some(f) => {
                    let lock = OnceLock::new();
                    let _ = lock.set(f.clone());
                    lock
                }
                None => OnceLock::new(),
            },
        }
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("dim", &self.dim)
            .field("facets", &self.facets)
            .finish()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Builds a complex from facet vertex lists. Facets are canonicalized,
    /// deduplicated, and non-maximal entries are dropped.
    pub fn from_facets(facets: Vec<Vec<VertexId>>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyFacetList);
        }
        let mut simplices = facets
            .into_iter()
            .map(Simplex::new)
            .collect::<Result<Vec<_>>>()?;
        simplices.sort();
        simplices.dedup();
        // drop non-maximal entries (absorption)
        let maximal: Vec<Simplex> = simplices
            .iter()
            .filter(|s| {
                !simplices
                    .iter()
                    .any(|t| s.dim() < t.dim() && s.is_face_of(t))
            })
            .cloned()
            .collect();
        Ok(Self::from_maximal(maximal))
    }

    /// Wraps a facet list already known to be canonical, deduplicated and
    /// mutually non-redundant.
    pub(crate) fn from_maximal(mut facets: Vec<Simplex>) -> Self {
        facets.sort();
        debug_assert!(facets.windows(2).all(|w| w[0] != w[1]));
        let dim = facets.iter().map(|s| s.dim()).max();
        SimplicialComplex {
            facets,
            dim,
            faces: OnceLock::new(),
        }
    }

    /// The empty complex (dimension `None`). Legal as a link value.
    pub fn empty() -> Self {
        SimplicialComplex {
            facets: Vec::new(),
            dim: None,
            faces: OnceLock::new(),
        }
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    /// Dimension of the complex; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.dim
    }

    fn materialize(&self) -> &Vec<Vec<Simplex>> {
        self.faces.get_or_init(|| {
            let n = match self.dim {
                Some(n) => n,
                None => return Vec::new(),
            };
            let mut per_dim: Vec<HashSet<Simplex>> = vec![HashSet::new(); n + 1];
            for facet in &self.facets {
                // all non-empty subsets, by mask
                let verts = facet.vertices();
                let k = verts.len();
                for mask in 1u64..(1u64 << k) {
                    let sub: Vec<VertexId> = (0..k)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| verts[i])
                        .collect();
                    let dim = sub.len() - 1;
                    per_dim[dim].insert(Simplex::from_sorted(sub));
                }
            }
            per_dim
                .into_iter()
                .map(|set| {
                    let mut v: Vec<Simplex> = set.into_iter().collect();
                    v.sort();
                    v
                })
                .collect()
        })
    }

    /// All `p`-faces in canonical order. Empty slice when `p` exceeds the
    /// dimension.
    pub fn faces(&self, p: usize) -> &[Simplex] {
        let all = self.materialize();
        all.get(p).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// All faces, ordered by (dimension, vertex tuple).
    pub fn all_faces(&self) -> impl Iterator<Item = &Simplex> {
        self.materialize().iter().flatten()
    }

    pub fn face_count(&self, p: usize) -> usize {
        self.faces(p).len()
    }

    pub fn total_face_count(&self) -> usize {
        self.materialize().iter().map(|v| v.len()).sum()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.faces(s.dim()).binary_search(s).is_ok()
    }

    pub fn face_vector(&self) -> FaceVector {
        let n = match self.dim {
            Some(n) => n,
            None => return FaceVector::new(Vec::new()),
        };
        FaceVector::new(
            (0..=n)
                .map(|p| BigInt::from(self.face_count(p)))
                .collect(),
        )
    }

    pub fn face_polynomial(&self) -> FacePolynomial {
        self.face_vector().polynomial()
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.face_vector().euler_characteristic()
    }

    /// The link of `sigma`: all faces disjoint from `sigma` whose union with
    /// it lies in the complex. May be the empty complex.
    pub fn link(&self, sigma: &Simplex) -> Result<SimplicialComplex> {
        if !self.contains(sigma) {
            return Err(Error::FaceNotInComplex(sigma.vertices().to_vec()));
        }
        let mut link_facets: Vec<Simplex> = Vec::new();
        for facet in &self.facets {
            if sigma.is_proper_face_of(facet) {
                let rest: Vec<VertexId> = facet
                    .vertices()
                    .iter()
                    .filter(|v| !sigma.vertices().contains(v))
                    .copied()
                    .collect();
                link_facets.push(Simplex::from_sorted(rest));
            }
        }
        if link_facets.is_empty() {
            return Ok(SimplicialComplex::empty());
        }
        SimplicialComplex::from_facets(
            link_facets
                .into_iter()
                .map(|s| s.vertices().to_vec())
                .collect(),
        )
    }

    /// True when every facet has top dimension.
    pub fn is_pure(&self) -> bool {
        match self.dim {
            Some(n) => self.facets.iter().all(|f| f.dim() == n),
            None => true,
        }
    }

    /// True for a pure complex in which every codimension-one face lies in
    /// exactly two facets. Non-pure input yields `false`.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        let n = match self.dim {
            Some(n) if n >= 1 => n,
            _ => return false,
        };
        if !self.is_pure() {
            return false;
        }
        let mut ridge_count: HashMap<Simplex, u32> = HashMap::new();
        for facet in &self.facets {
            for ridge in facet.boundary_faces() {
                *ridge_count.entry(ridge).or_insert(0) += 1;
            }
        }
        debug_assert_eq!(ridge_count.len(), self.face_count(n - 1));
        ridge_count.values().all(|&c| c == 2)
    }

    /// Sorted vertex labels of the complex.
    pub fn vertex_ids(&self) -> Vec<VertexId> {
        self.faces(0).iter().map(|s| s.vertices()[0]).collect()
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.facets
            .iter()
            .filter_map(|f| f.vertices().last().copied())
            .max()
    }
}

/// The full simplex on `n + 1` vertices labelled `0..=n`.
pub fn standard_simplex(n: usize) -> SimplicialComplex {
    let verts: Vec<VertexId> = (0..=n as VertexId).collect();
    SimplicialComplex::from_maximal(vec![Simplex::from_sorted(verts)])
}

/// The boundary of the `(n + 1)`-simplex: the standard triangulation of the
/// `n`-sphere on `n + 2` vertices.
pub fn boundary_simplex(n: usize) -> SimplicialComplex {
    let all: Vec<VertexId> = (0..=(n as VertexId + 1)).collect();
    let facets = (0..all.len())
        .map(|skip| {
            all.iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, v)| *v)
                .collect::<Vec<_>>()
        })
        .collect();
    SimplicialComplex::from_facets(facets).expect("boundary facets are valid")
}

/// Boundary of the `(n + 1)`-dimensional cross polytope: the `n`-sphere as
/// the `(n + 1)`-fold join of vertex pairs, on `2(n + 1)` vertices. Vertex
/// `2i` and `2i + 1` form the `i`-th antipodal pair.
pub fn cross_polytope_boundary(n: usize) -> SimplicialComplex {
    let pairs = n + 1;
    let mut facets = Vec::with_capacity(1 << pairs);
    for signs in 0u32..(1 << pairs) {
        let facet: Vec<VertexId> = (0..pairs)
            .map(|i| 2 * i as VertexId + (signs >> i & 1))
            .collect();
        facets.push(facet);
    }
    SimplicialComplex::from_facets(facets).expect("cross polytope facets are valid")
}

/// Join of `K` with two new cone points (labelled past the maximum vertex).
pub fn suspension(k: &SimplicialComplex) -> SimplicialComplex {
    let base = k.max_vertex_id().map(|v| v + 1).unwrap_or(0);
    let (a, b) = (base, base + 1);
    let mut facets = Vec::with_capacity(2 * k.facets().len());
    for facet in k.facets() {
        for apex in [a, b] {
            let mut verts = facet.vertices().to_vec();
            verts.push(apex);
            facets.push(verts);
        }
    }
    SimplicialComplex::from_facets(facets).expect("suspension facets are valid")
}

//! Barycentric subdivision: the chain construction, iterated and streaming
//! deep subdivision, dual blocks, and exact rational geometric realization.
//!
//! Simplices of the subdivision are chains of proper faces of the parent
//! complex. The streaming enumerator never builds a global face table: every
//! simplex of a subdivision is interior to a unique face of the previous
//! level, so the recursion runs over (carrier, interior chain) pairs and the
//! memory stays proportional to the recursion depth.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num::{BigInt, One, Zero};

use crate::complex::{FaceVector, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::poly::Rational;
use crate::spectral::{binomial, factorial, LambdaMatrix};

/// A point with exact rational coordinates.
pub type Point = Vec<Rational>;

/// A strictly increasing chain of proper faces of a parent complex; the
/// chains of a complex are exactly the simplices of its subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    links: Vec<Simplex>,
}

impl Chain {
    pub fn new(links: Vec<Simplex>) -> Result<Self> {
        if links.is_empty() {
            return Err(Error::BadInput("empty chain".into()));
        }
        for w in links.windows(2) {
            if !w[0].is_proper_face_of(&w[1]) {
                return Err(Error::BadInput(format!(
                    "{:?} is not a proper face of {:?}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Chain { links })
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.links
    }

    /// Dimension of the chain as a simplex of the subdivision.
    pub fn dim(&self) -> usize {
        self.links.len() - 1
    }

    pub fn top(&self) -> &Simplex {
        self.links.last().unwrap()
    }
}

/// One barycentric subdivision, with the bijection between parent faces and
/// new vertices. New vertex ids follow the canonical (dimension, tuple)
/// order of the parent faces, so output is reproducible.
pub struct SdComplex {
    parent: SimplicialComplex,
    vertex_faces: Vec<Simplex>,
    complex: SimplicialComplex,
}

impl SdComplex {
    pub fn parent(&self) -> &SimplicialComplex {
        &self.parent
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Number of new vertices; equals the total face count of the parent.
    pub fn vertex_count(&self) -> usize {
        self.vertex_faces.len()
    }

    /// The parent face whose barycenter carries the given new vertex.
    pub fn parent_face(&self, v: VertexId) -> &Simplex {
        &self.vertex_faces[v as usize]
    }

    /// The new vertex sitting at the barycenter of a parent face.
    pub fn vertex_for(&self, face: &Simplex) -> Option<VertexId> {
        self.vertex_faces
            .binary_search(face)
            .ok()
            .map(|i| i as VertexId)
    }

    /// Recovers the parent chain corresponding to a simplex of the result.
    pub fn chain_for(&self, s: &Simplex) -> Chain {
        let mut links: Vec<Simplex> = s
            .vertices()
            .iter()
            .map(|&v| self.parent_face(v).clone())
            .collect();
        links.sort();
        Chain::new(links).expect("subdivision simplices are chains")
    }
}

/// Subdivides once: the facets of the result are the maximal chains of the
/// parent's face poset.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> SdComplex {
    let vertex_faces: Vec<Simplex> = k.all_faces().cloned().collect();
    let index: HashMap<&Simplex, VertexId> = vertex_faces
        .iter()
        .enumerate()
        .map(|(i, s)| (s, i as VertexId))
        .collect();
    let mut facets: Vec<Simplex> = Vec::new();
    for facet in k.facets() {
        let verts = facet.vertices();
        for perm in verts.iter().permutations(verts.len()) {
            let ids: Vec<VertexId> = (1..=perm.len())
                .map(|len| {
                    let mut prefix: Vec<VertexId> = perm[..len].iter().map(|v| **v).collect();
                    prefix.sort_unstable();
                    index[&Simplex::from_sorted(prefix)]
                })
                .collect();
            facets.push(Simplex::new(ids).expect("chain prefixes are distinct"));
        }
    }
    // maximal chains through distinct facets are distinct and mutually
    // non-redundant, so the canonical constructor applies directly
    let complex = SimplicialComplex::from_maximal(facets);
    SdComplex {
        parent: k.clone(),
        vertex_faces,
        complex,
    }
}

/// Estimated number of top cells after `d` subdivisions.
pub fn top_cell_estimate(k: &SimplicialComplex, d: usize) -> BigInt {
    k.facets()
        .iter()
        .map(|f| factorial(f.dim() + 1).pow(d as u32))
        .sum()
}

/// `d`-fold subdivision (identity for `d = 0`), refusing when the estimated
/// top-cell count exceeds `cap`.
pub fn iterate_subdivision(
    k: &SimplicialComplex,
    d: usize,
    cap: u64,
) -> Result<SimplicialComplex> {
    let estimate = top_cell_estimate(k, d);
    if estimate > BigInt::from(cap) {
        return Err(Error::CapExceeded {
            estimate: estimate.to_string(),
            cap,
        });
    }
    let mut current = k.clone();
    for _ in 0..d {
        current = barycentric_subdivision(&current).complex;
    }
    Ok(current)
}

/// A complex together with exact rational coordinates for its vertices.
/// Every facet must be affinely independent.
pub struct EmbeddedComplex {
    complex: SimplicialComplex,
    coords: BTreeMap<VertexId, Point>,
    ambient: usize,
}

impl EmbeddedComplex {
    pub fn new(complex: SimplicialComplex, coords: BTreeMap<VertexId, Point>) -> Result<Self> {
        let ambient = coords
            .values()
            .next()
            .map(|p| p.len())
            .ok_or(Error::EmptyFacetList)?;
        for (v, p) in &coords {
            if p.len() != ambient {
                return Err(Error::AmbientMismatch {
                    expected: ambient,
                    got: p.len(),
                });
            }
            let _ = v;
        }
        for v in complex.vertex_ids() {
            if !coords.contains_key(&v) {
                return Err(Error::MissingCoordinates(v));
            }
        }
        let embedded = EmbeddedComplex {
            complex,
            coords,
            ambient,
        };
        for facet in embedded.complex.facets() {
            if !embedded.is_affinely_independent(facet) {
                return Err(Error::DegenerateFacet(facet.vertices().to_vec()));
            }
        }
        Ok(embedded)
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn coords(&self, v: VertexId) -> &Point {
        &self.coords[&v]
    }

    pub fn coordinate_table(&self) -> &BTreeMap<VertexId, Point> {
        &self.coords
    }

    /// Arithmetic mean of the vertex coordinates.
    pub fn barycenter(&self, s: &Simplex) -> Point {
        mean_points(
            &s.vertices()
                .iter()
                .map(|&v| self.coords[&v].clone())
                .collect::<Vec<_>>(),
        )
    }

    /// Barycenter of a chain: recursive averaging of the member barycenters.
    pub fn chain_barycenter(&self, chain: &Chain) -> Point {
        let pts: Vec<Point> = chain
            .simplices()
            .iter()
            .map(|s| self.barycenter(s))
            .collect();
        mean_points(&pts)
    }

    fn is_affinely_independent(&self, facet: &Simplex) -> bool {
        let verts = facet.vertices();
        let t = verts.len() - 1;
        if t == 0 {
            return true;
        }
        let origin = &self.coords[&verts[0]];
        let mut rows: Vec<Vec<Rational>> = verts[1..]
            .iter()
            .map(|v| {
                self.coords[v]
                    .iter()
                    .zip(origin)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        rank(&mut rows) == t
    }

    /// One embedded subdivision: new vertices land at the barycenters of the
    /// parent faces.
    pub fn subdivide(&self) -> EmbeddedComplex {
        let sd = barycentric_subdivision(&self.complex);
        let coords: BTreeMap<VertexId, Point> = (0..sd.vertex_count())
            .map(|i| {
                (
                    i as VertexId,
                    self.barycenter(sd.parent_face(i as VertexId)),
                )
            })
            .collect();
        EmbeddedComplex {
            complex: sd.complex,
            coords,
            ambient: self.ambient,
        }
    }

    pub fn iterate_subdivide(&self, d: usize, cap: u64) -> Result<EmbeddedComplex> {
        let estimate = top_cell_estimate(&self.complex, d);
        if estimate > BigInt::from(cap) {
            return Err(Error::CapExceeded {
                estimate: estimate.to_string(),
                cap,
            });
        }
        let mut current = self.clone();
        for _ in 0..d {
            current = current.subdivide();
        }
        Ok(current)
    }
}

impl Clone for EmbeddedComplex {
    fn clone(&self) -> Self {
        EmbeddedComplex {
            complex: self.complex.clone(),
            coords: self.coords.clone(),
            ambient: self.ambient,
        }
    }
}

fn mean_points(pts: &[Point]) -> Point {
    let m = pts.len();
    let dim = pts[0].len();
    let denom = Rational::from_integer(BigInt::from(m));
    (0..dim)
        .map(|i| {
            let mut acc = Rational::zero();
            for p in pts {
                acc += &p[i];
            }
            acc / &denom
        })
        .collect()
}

/// Row rank over the rationals by Gaussian elimination.
fn rank(rows: &mut [Vec<Rational>]) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let pivot = (r..nrows).find(|&i| !rows[i][c].is_zero());
        let Some(p) = pivot else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].clone();
        for i in (r + 1)..nrows {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = &rows[i][c] / &inv;
            for j in c..ncols {
                let sub = &factor * &rows[r][j];
                rows[i][j] -= sub;
            }
        }
        r += 1;
    }
    r
}

/// The standard simplex embedded with vertex 0 at the origin and vertex `i`
/// at the `i`-th basis point of n-space.
pub fn embedded_standard_simplex(n: usize) -> EmbeddedComplex {
    let complex = crate::complex::standard_simplex(n);
    let m = n.max(1);
    let coords: BTreeMap<VertexId, Point> = (0..=n as VertexId)
        .map(|v| {
            let mut p = vec![Rational::zero(); m];
            if v > 0 {
                p[v as usize - 1] = Rational::one();
            }
            (v, p)
        })
        .collect();
    EmbeddedComplex::new(complex, coords).expect("standard embedding is valid")
}

/// Open face counts of the block dual to `sigma`: `counts[l]` is the number
/// of chains `sigma < t_1 < ... < t_l` in the complex, with `counts[0] = 1`
/// for the barycenter itself.
pub fn dual_block_face_vector(sigma: &Simplex, k: &SimplicialComplex) -> Result<FaceVector> {
    if !k.contains(sigma) {
        return Err(Error::FaceNotInComplex(sigma.vertices().to_vec()));
    }
    let n = k.dim().expect("nonempty complex");
    let p = sigma.dim();
    let maxl = n - p;
    // proper cofaces of sigma, grouped in ascending dimension order
    let cofaces: Vec<&Simplex> = k
        .all_faces()
        .filter(|t| sigma.is_proper_face_of(t))
        .collect();
    // chains ending at each coface, by length
    let mut ending: HashMap<&Simplex, Vec<BigInt>> = HashMap::new();
    for &t in &cofaces {
        let mut v = vec![BigInt::zero(); maxl + 1];
        if maxl >= 1 {
            v[1] = BigInt::one();
        }
        ending.insert(t, v);
    }
    // ascending dimension order makes every proper-face predecessor ready
    for &t in &cofaces {
        for l in 2..=maxl {
            let mut acc = BigInt::zero();
            for &u in &cofaces {
                if u.dim() < t.dim() && u.is_proper_face_of(t) {
                    acc += &ending[&u][l - 1];
                }
            }
            ending.get_mut(&t).unwrap()[l] = acc;
        }
    }
    let mut counts = vec![BigInt::zero(); maxl + 1];
    counts[0] = BigInt::one();
    for l in 1..=maxl {
        counts[l] = cofaces.iter().map(|t| ending[t][l].clone()).sum();
    }
    Ok(FaceVector::new(counts))
}

/// A face visited by the streaming enumerator.
pub struct StreamedFace<'a> {
    /// Vertex coordinates of the face (`dim + 1` points).
    pub vertices: &'a [Point],
    /// Shifted face counts of the link of this face in the current level:
    /// `link_g[0] = 1` stands for the empty face and `link_g[l + 1]` is the
    /// number of `l`-faces of the link.
    pub link_g: &'a [BigInt],
    /// Dimension of the original-complex face this one is interior to.
    pub carrier_dim: usize,
}

impl StreamedFace<'_> {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn barycenter(&self) -> Point {
        mean_points(self.vertices)
    }

    /// `f_l` of the link, with the empty-face convention `f_{-1} = 1` at
    /// `l = -1`.
    pub fn link_face_count(&self, l: isize) -> BigInt {
        let idx = (l + 1) as usize;
        self.link_g.get(idx).cloned().unwrap_or_else(BigInt::zero)
    }
}

/// Streaming enumeration of the `p`-faces of the `d`-fold subdivision.
///
/// Visits every `p`-simplex exactly once, carrying its exact vertex
/// coordinates and the face counts of its link at depth `d`. Enumeration
/// recurses on (carrier, interior chain) pairs; no global deduplication
/// table is kept. The visit budget counts every face materialized at any
/// level and aborts with an error beyond `cap`.
pub fn stream_faces<F: FnMut(&StreamedFace)>(
    embedded: &EmbeddedComplex,
    d: usize,
    p: usize,
    cap: u64,
    mut visitor: F,
) -> Result<u64> {
    let k = embedded.complex();
    let n = k.dim().ok_or(Error::EmptyFacetList)?;
    if p > n {
        return Ok(0);
    }
    let ctx = StreamContext::new(n, cap);
    let mut visited: u64 = 0;
    for face in k.all_faces() {
        if face.dim() < p {
            continue;
        }
        let verts: Vec<Point> = face
            .vertices()
            .iter()
            .map(|&v| embedded.coords(v).clone())
            .collect();
        let link_g = g_from_face_vector(&k.link(face)?.face_vector());
        let node = StreamNode {
            verts,
            link_g,
            carrier_dim: face.dim(),
        };
        ctx.descend(&node, d, p, &mut visited, &mut visitor)?;
    }
    Ok(visited)
}

struct StreamContext {
    lambda: LambdaMatrix,
    /// `g` of the subdivided boundary sphere on `a` vertices, `a = 0..`.
    sd_boundary_g: Vec<Vec<BigInt>>,
    cap: u64,
}

struct StreamNode {
    verts: Vec<Point>,
    link_g: Vec<BigInt>,
    carrier_dim: usize,
}

impl StreamContext {
    fn new(n: usize, cap: u64) -> Self {
        let lambda = LambdaMatrix::recursive(n + 1);
        let sd_boundary_g = (0..=n + 1)
            .map(|a| {
                if a < 2 {
                    vec![BigInt::one()]
                } else {
                    // f_p of the boundary sphere on a vertices is C(a, p+1)
                    let f: Vec<BigInt> = (0..a - 1).map(|p| binomial(a, p + 1)).collect();
                    let sd = apply_lambda(&lambda, &f);
                    let mut g = vec![BigInt::one()];
                    g.extend(sd);
                    g
                }
            })
            .collect();
        StreamContext {
            lambda,
            sd_boundary_g,
            cap,
        }
    }

    fn descend<F: FnMut(&StreamedFace)>(
        &self,
        node: &StreamNode,
        remaining: usize,
        p: usize,
        visited: &mut u64,
        visitor: &mut F,
    ) -> Result<()> {
        *visited += 1;
        if *visited > self.cap {
            return Err(Error::CapExceeded {
                estimate: format!(">{}", self.cap),
                cap: self.cap,
            });
        }
        if remaining == 0 {
            if node.verts.len() == p + 1 {
                visitor(&StreamedFace {
                    vertices: &node.verts,
                    link_g: &node.link_g,
                    carrier_dim: node.carrier_dim,
                });
            }
            return Ok(());
        }
        // link of an interior chain at the next level: join of the
        // subdivided interval spheres with the subdivided link of the carrier
        let sd_link_g = self.sd_g(&node.link_g);
        let t = node.verts.len() - 1;
        let full: u32 = (1u32 << (t + 1)) - 1;
        // lazily cache barycenters of vertex subsets of the carrier
        let mut bary_cache: Vec<Option<Point>> = vec![None; (full + 1) as usize];
        let mut chain: Vec<u32> = vec![full];
        self.chain_dfs(
            node,
            &sd_link_g,
            &mut chain,
            &mut bary_cache,
            remaining,
            p,
            visited,
            visitor,
        )
    }

    /// Extends the descending mask chain; every state of the stack is one
    /// interior simplex of the next level.
    #[allow(clippy::too_many_arguments)]
    fn chain_dfs<F: FnMut(&StreamedFace)>(
        &self,
        node: &StreamNode,
        sd_link_g: &[BigInt],
        chain: &mut Vec<u32>,
        bary_cache: &mut Vec<Option<Point>>,
        remaining: usize,
        p: usize,
        visited: &mut u64,
        visitor: &mut F,
    ) -> Result<()> {
        let len = chain.len();
        let final_level = remaining == 1;
        if len > p && (!final_level || len == p + 1) {
            let child = self.make_child(node, sd_link_g, chain, bary_cache);
            self.descend(&child, remaining - 1, p, visited, visitor)?;
        }
        if final_level && len > p {
            // longer chains cannot come back down to dimension p
            return Ok(());
        }
        let bottom = *chain.last().unwrap();
        let bits = bottom.count_ones() as usize;
        // a proper descent can add at most bits - 1 further members
        if len + bits - 1 < p + 1 {
            return Ok(());
        }
        // proper non-empty submasks
        let mut sub = (bottom - 1) & bottom;
        while sub != 0 {
            chain.push(sub);
            self.chain_dfs(
                node,
                sd_link_g,
                chain,
                bary_cache,
                remaining,
                p,
                visited,
                visitor,
            )?;
            chain.pop();
            sub = (sub - 1) & bottom;
        }
        Ok(())
    }

    fn make_child(
        &self,
        node: &StreamNode,
        sd_link_g: &[BigInt],
        chain: &[u32],
        bary_cache: &mut Vec<Option<Point>>,
    ) -> StreamNode {
        // chain is descending; the simplex reads it bottom-up
        let mut verts: Vec<Point> = Vec::with_capacity(chain.len());
        for &mask in chain.iter().rev() {
            if bary_cache[mask as usize].is_none() {
                let members: Vec<Point> = (0..node.verts.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| node.verts[i].clone())
                    .collect();
                bary_cache[mask as usize] = Some(mean_points(&members));
            }
            verts.push(bary_cache[mask as usize].clone().unwrap());
        }
        // join the interval spheres with the subdivided carrier link
        let mut g = sd_link_g.to_vec();
        let mut prev_bits = 0usize;
        for &mask in chain.iter().rev() {
            let bits = mask.count_ones() as usize;
            let a = bits - prev_bits;
            prev_bits = bits;
            if a >= 2 {
                g = poly_mul_int(&g, &self.sd_boundary_g[a]);
            }
        }
        StreamNode {
            verts,
            link_g: g,
            carrier_dim: node.carrier_dim,
        }
    }

    /// `g` of the subdivided complex from `g` of the complex.
    fn sd_g(&self, g: &[BigInt]) -> Vec<BigInt> {
        if g.len() <= 1 {
            return vec![BigInt::one()];
        }
        let f: Vec<BigInt> = g[1..].to_vec();
        let sd = apply_lambda(&self.lambda, &f);
        let mut out = vec![BigInt::one()];
        out.extend(sd);
        out
    }
}

fn apply_lambda(lambda: &LambdaMatrix, f: &[BigInt]) -> Vec<BigInt> {
    (0..f.len())
        .map(|q| {
            let mut acc = BigInt::zero();
            for (p, fp) in f.iter().enumerate().skip(q) {
                acc += fp * lambda.get(p + 1, q + 1);
            }
            acc
        })
        .collect()
}

fn poly_mul_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Shifted face counts: `g[0] = 1`, `g[l + 1] = f_l`.
pub fn g_from_face_vector(f: &FaceVector) -> Vec<BigInt> {
    let mut g = vec![BigInt::one()];
    g.extend(f.counts().iter().cloned());
    g
}

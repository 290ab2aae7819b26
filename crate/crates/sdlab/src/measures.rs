//! Canonical measures on an embedded complex and their subdivision limits:
//! the volume measure giving each top cell unit mass, rescaled Dirac combs
//! at barycenters of deep subdivisions, exact integration of polynomial
//! observables, the density harnesses for links and dual blocks, and the
//! chart-word sampler.
//!
//! Everything except the Monte Carlo standard error is exact rational
//! arithmetic end to end.

use std::collections::BTreeMap;

use num::{BigInt, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{rational_to_f64, Rational};
use crate::spectral::{binomial, factorial, q_solve, LambdaMatrix};
use crate::subdivision::{stream_faces, EmbeddedComplex, Point};

/// A finite sum of monomials in the ambient coordinates with rational
/// coefficients; the test functions of every harness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialObservable {
    ambient: usize,
    terms: Vec<(Vec<u32>, Rational)>,
}

impl PolynomialObservable {
    /// Normalizes: exponent vectors are padded to the ambient dimension,
    /// duplicate monomials merged, zero terms dropped, terms sorted.
    pub fn new(ambient: usize, terms: Vec<(Vec<u32>, Rational)>) -> Result<Self> {
        let mut map: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (mut exp, coef) in terms {
            if exp.len() > ambient {
                return Err(Error::AmbientMismatch {
                    expected: ambient,
                    got: exp.len(),
                });
            }
            exp.resize(ambient, 0);
            let entry = map.entry(exp).or_insert_with(Rational::zero);
            *entry += coef;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(PolynomialObservable {
            ambient,
            terms: map.into_iter().collect(),
        })
    }

    pub fn constant(ambient: usize, c: Rational) -> Self {
        Self::new(ambient, vec![(vec![0; ambient], c)]).unwrap()
    }

    /// The coordinate function `x_i`.
    pub fn coordinate(ambient: usize, i: usize) -> Self {
        assert!(i < ambient);
        let mut exp = vec![0; ambient];
        exp[i] = 1;
        Self::new(ambient, vec![(exp, Rational::one())]).unwrap()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn terms(&self) -> &[(Vec<u32>, Rational)] {
        &self.terms
    }

    pub fn eval(&self, pt: &[Rational]) -> Rational {
        assert_eq!(pt.len(), self.ambient);
        let mut acc = Rational::zero();
        for (exp, coef) in &self.terms {
            let mut term = coef.clone();
            for (x, &e) in pt.iter().zip(exp) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }
}

/// Multivariate polynomial in barycentric coordinates, used transiently
/// while pulling an observable back to a simplex.
type BaryPoly = BTreeMap<Vec<u32>, Rational>;

fn bary_mul(a: &BaryPoly, b: &BaryPoly) -> BaryPoly {
    let mut out = BaryPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let entry = out.entry(exp).or_insert_with(Rational::zero);
            *entry += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Integral of a barycentric monomial over the standard `t`-simplex against
/// the normalized volume: `t! * prod(a_i!) / (t + sum a_i)!`.
fn dirichlet_integral(t: usize, exps: &[u32]) -> Rational {
    let total: u32 = exps.iter().sum();
    let mut numer = factorial(t);
    for &a in exps {
        numer *= factorial(a as usize);
    }
    let denom = factorial(t + total as usize);
    Rational::new(numer, denom)
}

/// Exact integral of `phi` against the volume measure that gives every top
/// cell total mass one. The constant observable integrates to the number of
/// top cells.
pub fn integrate_volume(e: &EmbeddedComplex, phi: &PolynomialObservable) -> Result<Rational> {
    if phi.ambient_dim() != e.ambient_dim() {
        return Err(Error::AmbientMismatch {
            expected: e.ambient_dim(),
            got: phi.ambient_dim(),
        });
    }
    let n = e.complex().dim().ok_or(Error::EmptyFacetList)?;
    let mut total = Rational::zero();
    for facet in e.complex().facets() {
        if facet.dim() != n {
            continue;
        }
        let verts: Vec<&Point> = facet.vertices().iter().map(|&v| e.coords(v)).collect();
        let t = verts.len() - 1;
        // linear form of each ambient coordinate in barycentric variables
        let linear: Vec<BaryPoly> = (0..e.ambient_dim())
            .map(|j| {
                let mut poly = BaryPoly::new();
                for (i, v) in verts.iter().enumerate() {
                    if v[j].is_zero() {
                        continue;
                    }
                    let mut exp = vec![0u32; t + 1];
                    exp[i] = 1;
                    poly.insert(exp, v[j].clone());
                }
                poly
            })
            .collect();
        for (exp, coef) in phi.terms() {
            let mut pulled = BaryPoly::new();
            pulled.insert(vec![0; t + 1], Rational::one());
            for (j, &e_j) in exp.iter().enumerate() {
                for _ in 0..e_j {
                    pulled = bary_mul(&pulled, &linear[j]);
                }
            }
            for (mono, c) in &pulled {
                total += coef * c * dirichlet_integral(t, mono);
            }
        }
    }
    Ok(total)
}

/// Weighted Dirac atoms at exact rational points.
#[derive(Clone, Debug)]
pub struct AtomicMeasure {
    pub atoms: Vec<(Point, Rational)>,
    pub total_mass: Rational,
}

impl AtomicMeasure {
    pub fn integrate(&self, phi: &PolynomialObservable) -> Rational {
        let mut acc = Rational::zero();
        for (pt, w) in &self.atoms {
            acc += w * phi.eval(pt);
        }
        acc
    }
}

/// The rescaled barycenter comb at depth `d` and dimension `p`: one atom per
/// `p`-face of the `d`-fold subdivision, each of weight `1/(n+1)!^d`.
pub fn gamma_measure(
    e: &EmbeddedComplex,
    d: usize,
    p: usize,
    cap: u64,
) -> Result<AtomicMeasure> {
    let n = e.complex().dim().ok_or(Error::EmptyFacetList)?;
    let weight = Rational::new(BigInt::one(), factorial(n + 1).pow(d as u32));
    let mut atoms = Vec::new();
    let mut total = Rational::zero();
    stream_faces(e, d, p, cap, |sf| {
        atoms.push((sf.barycenter(), weight.clone()));
        total += &weight;
    })?;
    Ok(AtomicMeasure {
        atoms,
        total_mass: total,
    })
}

/// One streamed pairing of the depth-`d` comb against an observable, with
/// the mass split off by whether an atom sits over the codimension-one
/// skeleton of the original complex.
#[derive(Clone, Debug)]
pub struct GammaIntegral {
    pub value: Rational,
    pub total_mass: Rational,
    pub skeleton_mass: Rational,
}

fn check_ambient(e: &EmbeddedComplex, phi: &PolynomialObservable) -> Result<()> {
    if phi.ambient_dim() != e.ambient_dim() {
        return Err(Error::AmbientMismatch {
            expected: e.ambient_dim(),
            got: phi.ambient_dim(),
        });
    }
    Ok(())
}

pub fn gamma_integral(
    e: &EmbeddedComplex,
    d: usize,
    p: usize,
    phi: &PolynomialObservable,
    cap: u64,
) -> Result<GammaIntegral> {
    check_ambient(e, phi)?;
    let n = e.complex().dim().ok_or(Error::EmptyFacetList)?;
    let weight = Rational::new(BigInt::one(), factorial(n + 1).pow(d as u32));
    let mut value = Rational::zero();
    let mut total = Rational::zero();
    let mut skeleton = Rational::zero();
    stream_faces(e, d, p, cap, |sf| {
        value += &weight * phi.eval(&sf.barycenter());
        total += &weight;
        if sf.carrier_dim < n {
            skeleton += &weight;
        }
    })?;
    Ok(GammaIntegral {
        value,
        total_mass: total,
        skeleton_mass: skeleton,
    })
}

/// Per-depth error table against an exact limit target.
#[derive(Clone, Debug)]
pub struct ConvergenceRow {
    pub d: usize,
    pub value: Rational,
    pub error: Rational,
    /// `error(d) / error(d-1)` when the previous row exists and is nonzero.
    pub ratio: Option<Rational>,
    pub skeleton_mass: Rational,
}

#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub quantity: String,
    pub target: Rational,
    pub rows: Vec<ConvergenceRow>,
}

impl ConvergenceReport {
    pub fn errors_all_zero(&self) -> bool {
        self.rows.iter().all(|r| r.error.is_zero())
    }

    /// Strict decrease of the error over the rows with `d >= from`.
    pub fn errors_strictly_decreasing_from(&self, from: usize) -> bool {
        let errs: Vec<&Rational> = self
            .rows
            .iter()
            .filter(|r| r.d >= from)
            .map(|r| &r.error)
            .collect();
        errs.windows(2).all(|w| w[0] > w[1])
    }

    pub fn error_at(&self, d: usize) -> Option<&Rational> {
        self.rows.iter().find(|r| r.d == d).map(|r| &r.error)
    }
}

/// Pairs the depth-`d` combs against `phi` for `d` in the given range and
/// reports exact errors relative to the weak limit.
pub fn converge_gamma(
    e: &EmbeddedComplex,
    p: usize,
    d_range: std::ops::RangeInclusive<usize>,
    phi: &PolynomialObservable,
    cap: u64,
) -> Result<ConvergenceReport> {
    let n = e.complex().dim().ok_or(Error::EmptyFacetList)?;
    assert!(p <= n);
    let q = q_solve(n);
    let target = q.get(p) * integrate_volume(e, phi)?;
    let mut rows = Vec::new();
    let mut prev_err: Option<Rational> = None;
    for d in d_range {
        let g = gamma_integral(e, d, p, phi, cap)?;
        let error = (&g.value - &target).abs();
        let ratio = prev_err
            .as_ref()
            .filter(|e| !e.is_zero())
            .map(|prev| &error / prev);
        prev_err = Some(error.clone());
        rows.push(ConvergenceRow {
            d,
            value: g.value,
            error,
            ratio,
            skeleton_mass: g.skeleton_mass,
        });
    }
    Ok(ConvergenceReport {
        quantity: format!("gamma(p={p})"),
        target,
        rows,
    })
}

/// Density coefficients at one depth, next to their limit targets.
#[derive(Clone, Debug)]
pub struct DensityReport {
    pub p: usize,
    pub d: usize,
    pub coeffs: Vec<Rational>,
    pub targets: Vec<Rational>,
}

/// Link density: coefficient `l` pairs `phi` against the count of `l`-faces
/// of the link of each streamed `p`-face. The limit target of coefficient
/// `l` is `q[p+l+1] * f_p(Delta_{p+l+1}) * integral(phi)`.
pub fn link_density(
    e: &EmbeddedComplex,
    p: usize,
    d: usize,
    phi: &PolynomialObservable,
    cap: u64,
) -> Result<DensityReport> {
    check_ambient(e, phi)?;
    let n = e.complex().dim().ok_or(Error::EmptyFacetList)?;
    assert!(p < n, "link density needs p < n");
    let weight = Rational::new(BigInt::one(), factorial(n + 1).pow(d as u32));
    let mut coeffs = vec![Rational::zero(); n - p];
    stream_faces(e, d, p, cap, |sf| {
        let v = phi.eval(&sf.barycenter());
        for (l, c) in coeffs.iter_mut().enumerate() {
            let count = sf.link_face_count(l as isize);
            if !count.is_zero() {
                *c += &weight * &v * Rational::from_integer(count);
            }
        }
    })?;
    let vol = integrate_volume(e, phi)?;
    let q = q_solve(n);
    let targets = (0..n - p)
        .map(|l| {
            q.get(p + l + 1) * Rational::from_integer(binomial(p + l + 2, p + 1)) * &vol
        })
        .collect();
    Ok(DensityReport {
        p,
        d,
        coeffs,
        targets,
    })
}

/// Dual-block density: coefficient `l` pairs `phi` against the number of
/// `l`-cells of the block dual to each streamed `p`-face, obtained from the
/// link counts through the interior-face matrix. The limit target of
/// coefficient `l` is `sum_h q[p+h] f_p(Delta_{p+h}) lambda(h, l) * integral(phi)`.
pub fn block_density(
    e: &EmbeddedComplex,
    p: usize,
    d: usize,
    phi: &PolynomialObservable,
    cap: u64,
) -> Result<DensityReport> {
    check_ambient(e, phi)?;
    let n = e.complex().dim().ok_or(Error::EmptyFacetList)?;
    assert!(p <= n);
    let lambda = LambdaMatrix::recursive(n + 1);
    let weight = Rational::new(BigInt::one(), factorial(n + 1).pow(d as u32));
    let width = n - p;
    let mut coeffs = vec![Rational::zero(); width + 1];
    stream_faces(e, d, p, cap, |sf| {
        let v = phi.eval(&sf.barycenter());
        // block cell counts from the link: the l-cells of the dual block are
        // the chains of l cofaces, counted by lambda against the link
        coeffs[0] += &weight * &v;
        for l in 1..=width {
            let mut count = BigInt::zero();
            for h in (l - 1)..width {
                count += lambda.get(h + 1, l) * sf.link_face_count(h as isize);
            }
            if !count.is_zero() {
                coeffs[l] += &weight * &v * Rational::from_integer(count);
            }
        }
    })?;
    let vol = integrate_volume(e, phi)?;
    let q = q_solve(n);
    let targets = (0..=width)
        .map(|l| {
            let mut acc = Rational::zero();
            for h in l..=width {
                acc += q.get(p + h)
                    * Rational::from_integer(binomial(p + h + 1, p + 1))
                    * Rational::from_integer(lambda.get(h, l));
            }
            acc * &vol
        })
        .collect();
    Ok(DensityReport {
        p,
        d,
        coeffs,
        targets,
    })
}

/// Pairing of `phi` against the top link counts of streamed `p`-faces. The
/// mass form of this pairing is exact at every depth: each top cell contains
/// `C(n+1, p+1)` faces of dimension `p`, so the constant observable yields
/// `f_p(Delta_n)` times the top cell count whatever the depth.
pub fn fp_delta_report(
    e: &EmbeddedComplex,
    p: usize,
    d_range: std::ops::RangeInclusive<usize>,
    phi: &PolynomialObservable,
    cap: u64,
) -> Result<ConvergenceReport> {
    check_ambient(e, phi)?;
    let n = e.complex().dim().ok_or(Error::EmptyFacetList)?;
    assert!(p <= n);
    let target = Rational::from_integer(binomial(n + 1, p + 1)) * integrate_volume(e, phi)?;
    let mut rows = Vec::new();
    let mut prev_err: Option<Rational> = None;
    for d in d_range {
        let weight = Rational::new(BigInt::one(), factorial(n + 1).pow(d as u32));
        let mut value = Rational::zero();
        let mut total = Rational::zero();
        let mut skeleton = Rational::zero();
        stream_faces(e, d, p, cap, |sf| {
            let count = sf.link_face_count(n as isize - p as isize - 1);
            value += &weight * phi.eval(&sf.barycenter()) * Rational::from_integer(count);
            total += &weight;
            if sf.carrier_dim < n {
                skeleton += &weight;
            }
        })?;
        let error = (&value - &target).abs();
        let ratio = prev_err
            .as_ref()
            .filter(|e| !e.is_zero())
            .map(|prev| &error / prev);
        prev_err = Some(error.clone());
        rows.push(ConvergenceRow {
            d,
            value,
            error,
            ratio,
            skeleton_mass: skeleton,
        });
    }
    Ok(ConvergenceReport {
        quantity: format!("fp-delta(p={p})"),
        target,
        rows,
    })
}

/// A finite word of chart indices, each indexing one top cell of the
/// subdivided standard simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartWord(pub Vec<usize>);

/// The affine charts onto the top cells of the once-subdivided standard
/// simplex, ordered by the lexicographic order of the defining vertex
/// permutations. Chart vertex `j` is the barycenter of the first `j + 1`
/// vertices of the permutation, so each chart is the order-preserving
/// simplicial isomorphism onto its cell.
pub fn subdivision_charts(n: usize) -> Vec<Vec<Point>> {
    use itertools::Itertools;
    let e = crate::subdivision::embedded_standard_simplex(n);
    let verts: Vec<u32> = (0..=n as u32).collect();
    let mut charts = Vec::new();
    for perm in verts.iter().permutations(verts.len()) {
        let chart: Vec<Point> = (0..=n)
            .map(|j| {
                let mut members: Vec<u32> = perm[..=j].iter().map(|v| **v).collect();
                members.sort_unstable();
                e.barycenter(&crate::complex::Simplex::new(members).unwrap())
            })
            .collect();
        charts.push(chart);
    }
    charts
}

/// Applies the affine chart to a point of the standard simplex given in
/// ambient coordinates: barycentric weights are read off directly from the
/// standard embedding.
pub fn apply_chart(chart: &[Point], x: &[Rational]) -> Point {
    let n = chart.len() - 1;
    let m = chart[0].len();
    let mut mu0 = Rational::one();
    for xi in x.iter().take(n) {
        mu0 -= xi;
    }
    let mut out = vec![Rational::zero(); m];
    for j in 0..m {
        out[j] += &mu0 * &chart[0][j];
        for i in 1..=n {
            out[j] += &x[i - 1] * &chart[i][j];
        }
    }
    out
}

/// The barycenter of the standard simplex in its standard embedding.
pub fn standard_barycenter(n: usize) -> Point {
    let m = n.max(1);
    let mut p = vec![Rational::new(BigInt::one(), BigInt::from(n as i64 + 1)); m];
    if n == 0 {
        p[0] = Rational::zero();
    }
    p
}

/// Draws a uniform chart word of length `d` and pushes `x0` through the
/// composed charts, first-coordinate chart applied last.
pub fn phi_sample(n: usize, d: usize, seed: u64, x0: &[Rational]) -> Point {
    let charts = subdivision_charts(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let word: Vec<usize> = (0..d).map(|_| rng.gen_range(0..charts.len())).collect();
    apply_word(&charts, &ChartWord(word), x0)
}

pub fn apply_word(charts: &[Vec<Point>], word: &ChartWord, x0: &[Rational]) -> Point {
    let mut x: Point = x0.to_vec();
    for &idx in word.0.iter().rev() {
        x = apply_chart(&charts[idx], &x);
    }
    x
}

/// Exact expectation of `phi` over all chart words of length `d` applied to
/// `x0`; with `x0` the barycenter this equals the pairing of `phi` against
/// the depth-`d` top-cell comb.
pub fn phi_exhaustive(
    n: usize,
    d: usize,
    phi: &PolynomialObservable,
    x0: &[Rational],
) -> Rational {
    let charts = subdivision_charts(n);
    let count = charts.len();
    let mut word = vec![0usize; d];
    let mut sum = Rational::zero();
    loop {
        let x = apply_word(&charts, &ChartWord(word.clone()), x0);
        sum += phi.eval(&x);
        // odometer
        let mut i = 0;
        loop {
            if i == d {
                let total = BigInt::from(count).pow(d as u32);
                return sum / Rational::from_integer(total);
            }
            word[i] += 1;
            if word[i] < count {
                break;
            }
            word[i] = 0;
            i += 1;
        }
    }
}

/// Monte Carlo average of `phi` over `samples` chart words; the mean is the
/// exact rational average of the samples, the standard error its floating
/// rendering.
#[derive(Clone, Debug)]
pub struct McIntegral {
    pub mean: Rational,
    pub stderr: f64,
    pub samples: usize,
    pub seed: u64,
}

pub fn phi_mc_integral(
    n: usize,
    d: usize,
    samples: usize,
    phi: &PolynomialObservable,
    seed: u64,
) -> McIntegral {
    assert!(samples >= 1);
    let charts = subdivision_charts(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x0 = standard_barycenter(n);
    let mut sum = Rational::zero();
    let mut sum_sq = Rational::zero();
    for _ in 0..samples {
        let word: Vec<usize> = (0..d).map(|_| rng.gen_range(0..charts.len())).collect();
        let x = apply_word(&charts, &ChartWord(word), &x0);
        let v = phi.eval(&x);
        sum += &v;
        sum_sq += &v * &v;
    }
    let count = Rational::from_integer(BigInt::from(samples));
    let mean = &sum / &count;
    let stderr = if samples > 1 {
        let var = (&sum_sq - &count * &mean * &mean)
            / Rational::from_integer(BigInt::from(samples as i64 - 1));
        (rational_to_f64(&var).max(0.0) / samples as f64).sqrt()
    } else {
        0.0
    };
    McIntegral {
        mean,
        stderr,
        samples,
        seed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, rat_int};
    use crate::subdivision::embedded_standard_simplex;

    const CAP: u64 = 10_000_000;

    fn phi_const(m: usize) -> PolynomialObservable {
        PolynomialObservable::constant(m, Rational::one())
    }

    fn phi_x(m: usize) -> PolynomialObservable {
        PolynomialObservable::coordinate(m, 0)
    }

    fn phi_x2(m: usize) -> PolynomialObservable {
        let mut exp = vec![0; m];
        exp[0] = 2;
        PolynomialObservable::new(m, vec![(exp, Rational::one())]).unwrap()
    }

    #[test]
    fn volume_integrals_on_triangle() {
        let e = embedded_standard_simplex(2);
        assert_eq!(integrate_volume(&e, &phi_const(2)).unwrap(), rat_int(1));
        assert_eq!(integrate_volume(&e, &phi_x(2)).unwrap(), rat(1, 3));
        assert_eq!(integrate_volume(&e, &phi_x2(2)).unwrap(), rat(1, 6));
        let xy = PolynomialObservable::new(2, vec![(vec![1, 1], Rational::one())]).unwrap();
        assert_eq!(integrate_volume(&e, &xy).unwrap(), rat(1, 12));
    }

    #[test]
    fn volume_integral_on_segment() {
        let e = embedded_standard_simplex(1);
        assert_eq!(integrate_volume(&e, &phi_x(1)).unwrap(), rat(1, 2));
        assert_eq!(integrate_volume(&e, &phi_x2(1)).unwrap(), rat(1, 3));
    }

    #[test]
    fn volume_integral_over_many_facets() {
        // unit-mass normalization per facet, exactness of the pullback on a
        // multi-facet symmetric complex
        let entry = crate::corpus::corpus_entry("cross-polytope-2").unwrap();
        let e = entry.embedded().unwrap();
        let one = PolynomialObservable::constant(3, Rational::one());
        assert_eq!(integrate_volume(&e, &one).unwrap(), rat_int(8));
        // odd coordinate functions cancel across antipodal facets
        for i in 0..3 {
            let xi = PolynomialObservable::coordinate(3, i);
            assert_eq!(integrate_volume(&e, &xi).unwrap(), Rational::zero());
        }
    }

    #[test]
    fn volume_integral_on_shifted_edge() {
        // the pullback handles non-standard placements: the edge [2, 4]
        let complex = crate::complex::standard_simplex(1);
        let mut coords = std::collections::BTreeMap::new();
        coords.insert(0u32, vec![rat_int(2)]);
        coords.insert(1u32, vec![rat_int(4)]);
        let e = crate::subdivision::EmbeddedComplex::new(complex, coords).unwrap();
        assert_eq!(integrate_volume(&e, &phi_x(1)).unwrap(), rat_int(3));
        assert_eq!(integrate_volume(&e, &phi_x2(1)).unwrap(), rat(28, 3));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let e = embedded_standard_simplex(2);
        let phi1 = PolynomialObservable::coordinate(1, 0);
        assert!(integrate_volume(&e, &phi1).is_err());
        assert!(gamma_integral(&e, 1, 0, &phi1, CAP).is_err());
        assert!(link_density(&e, 0, 1, &phi1, CAP).is_err());
        assert!(block_density(&e, 0, 1, &phi1, CAP).is_err());
        assert!(fp_delta_report(&e, 0, 1..=2, &phi1, CAP).is_err());
    }

    #[test]
    fn gamma_measure_shapes() {
        // depth 0, top dimension: a single unit atom at the barycenter
        let e = embedded_standard_simplex(2);
        let mu = gamma_measure(&e, 0, 2, CAP).unwrap();
        assert_eq!(mu.atoms.len(), 1);
        assert_eq!(mu.total_mass, rat_int(1));
        assert_eq!(mu.atoms[0].0, vec![rat(1, 3), rat(1, 3)]);
        // depth 1, vertices: seven atoms of weight 1/6
        let mu = gamma_measure(&e, 1, 0, CAP).unwrap();
        assert_eq!(mu.atoms.len(), 7);
        assert_eq!(mu.total_mass, rat(7, 6));
        assert!(mu.atoms.iter().all(|(_, w)| *w == rat(1, 6)));
    }

    #[test]
    fn atomic_integration_on_split_edge() {
        // vertices of the split edge sit at 0, 1/2, 1 with weight 1/2
        let e = embedded_standard_simplex(1);
        let mu = gamma_measure(&e, 1, 0, CAP).unwrap();
        assert_eq!(mu.integrate(&phi_x(1)), rat(3, 4));
        assert_eq!(mu.integrate(&phi_const(1)), rat(3, 2));
    }

    #[test]
    fn gamma_values_match_enumeration_oracle() {
        // frozen from an independent global-enumeration oracle
        let e = embedded_standard_simplex(2);
        let cases = [
            (1usize, 0usize, rat(7, 18)),
            (2, 0, rat(25, 108)),
            (1, 1, rat(2, 3)),
            (2, 1, rat(5, 9)),
            (3, 1, rat(14, 27)),
        ];
        for (d, p, expected) in cases {
            let g = gamma_integral(&e, d, p, &phi_x(2), CAP).unwrap();
            assert_eq!(g.value, expected, "d={d} p={p}");
        }
        // quadratic observable at depth 1, vertices
        let g = gamma_integral(&e, 1, 0, &phi_x2(2), CAP).unwrap();
        assert_eq!(g.value, rat(29, 108));
    }

    #[test]
    fn converge_gamma_triangle_edges() {
        let e = embedded_standard_simplex(2);
        let rep = converge_gamma(&e, 1, 1..=4, &phi_const(2), CAP).unwrap();
        assert_eq!(rep.target, rat(3, 2));
        let errs: Vec<Rational> = rep.rows.iter().map(|r| r.error.clone()).collect();
        assert_eq!(errs, vec![rat(1, 2), rat(1, 6), rat(1, 18), rat(1, 54)]);
        assert!(rep.errors_strictly_decreasing_from(1));
    }

    #[test]
    fn top_dimension_is_exact_for_linear_observables() {
        let e = embedded_standard_simplex(2);
        for phi in [phi_const(2), phi_x(2)] {
            let rep = converge_gamma(&e, 2, 1..=3, &phi, CAP).unwrap();
            assert!(rep.errors_all_zero(), "phi={phi:?}");
        }
    }

    #[test]
    fn skeleton_mass_decreases() {
        let e = embedded_standard_simplex(2);
        let rep = converge_gamma(&e, 0, 1..=4, &phi_const(2), CAP).unwrap();
        let fracs: Vec<Rational> = rep
            .rows
            .iter()
            .map(|r| {
                let g = gamma_integral(&e, r.d, 0, &phi_const(2), CAP).unwrap();
                &r.skeleton_mass / &g.total_mass
            })
            .collect();
        assert!(fracs.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn gamma_on_a_closed_surface() {
        // closed surfaces keep the edge-to-triangle ratio 3/2 under
        // subdivision, so the edge comb pairs the constant observable
        // exactly at every depth, and the vertex comb misses its target by
        // exactly chi / 6^d
        let entry = crate::corpus::corpus_entry("cross-polytope-2").unwrap();
        let e = entry.embedded().unwrap();
        let one = PolynomialObservable::constant(3, Rational::one());
        let edges = converge_gamma(&e, 1, 1..=3, &one, CAP).unwrap();
        assert_eq!(edges.target, rat_int(12));
        assert!(edges.errors_all_zero());
        let verts = converge_gamma(&e, 0, 1..=3, &one, CAP).unwrap();
        assert_eq!(verts.target, rat_int(4));
        for row in &verts.rows {
            let expect = Rational::new(BigInt::from(2), BigInt::from(6).pow(row.d as u32));
            assert_eq!(row.error, expect, "d={}", row.d);
        }
    }

    #[test]
    fn link_density_values_from_oracle() {
        let e = embedded_standard_simplex(2);
        // constant observable: l=0 column is twice the edge count over 6^d,
        // l=1 column is exactly 3 at every depth
        let expect_l0 = [rat_int(4), rat(10, 3), rat(28, 9), rat(82, 27)];
        for (i, d) in (1..=4usize).enumerate() {
            let rep = link_density(&e, 0, d, &phi_const(2), CAP).unwrap();
            assert_eq!(rep.coeffs[0], expect_l0[i], "d={d}");
            assert_eq!(rep.coeffs[1], rat_int(3), "d={d}");
            assert_eq!(rep.targets, vec![rat_int(3), rat_int(3)]);
        }
        // x observable, frozen oracle values
        let rep = link_density(&e, 0, 2, &phi_x(2), CAP).unwrap();
        assert_eq!(rep.coeffs[0], rat(10, 9));
        assert_eq!(rep.coeffs[1], rat_int(1));
    }

    #[test]
    fn block_density_l0_equals_gamma() {
        let e = embedded_standard_simplex(2);
        for p in 0..=2usize {
            for d in 1..=3usize {
                let rep = block_density(&e, p, d, &phi_x(2), CAP).unwrap();
                let g = gamma_integral(&e, d, p, &phi_x(2), CAP).unwrap();
                assert_eq!(rep.coeffs[0], g.value, "p={p} d={d}");
                assert_eq!(rep.targets[0], q_solve(2).get(p) * rat(1, 3));
            }
        }
    }

    #[test]
    fn block_targets_close_to_eigenvector_identity() {
        // summing the constant-observable targets over p recovers
        // (n+1)! q[l] coefficientwise
        let e = embedded_standard_simplex(2);
        let q = q_solve(2);
        let mut by_l = vec![Rational::zero(); 3];
        for p in 0..=2usize {
            let rep = block_density(&e, p, 1, &phi_const(2), CAP).unwrap();
            for (l, t) in rep.targets.iter().enumerate() {
                by_l[l] += t;
            }
        }
        for (l, total) in by_l.iter().enumerate() {
            assert_eq!(total, &(rat_int(6) * q.get(l)), "l={l}");
        }
    }

    #[test]
    fn fp_delta_mass_is_exact() {
        // the mass pairing is exact at every depth: on the segment it is 2,
        // on the triangle 3 (p = 0)
        let e1 = embedded_standard_simplex(1);
        let rep = fp_delta_report(&e1, 0, 1..=5, &phi_const(1), CAP).unwrap();
        assert_eq!(rep.target, rat_int(2));
        assert!(rep.errors_all_zero());
        for row in &rep.rows {
            assert_eq!(row.value, rat_int(2));
        }
        let e2 = embedded_standard_simplex(2);
        let rep = fp_delta_report(&e2, 0, 1..=3, &phi_const(2), CAP).unwrap();
        assert_eq!(rep.target, rat_int(3));
        assert!(rep.errors_all_zero());
        // p = n uses the empty-face convention and reproduces the top comb
        let rep = fp_delta_report(&e2, 2, 1..=3, &phi_const(2), CAP).unwrap();
        assert_eq!(rep.target, rat_int(1));
        assert!(rep.errors_all_zero());
    }

    #[test]
    fn charts_of_split_segment() {
        let charts = subdivision_charts(1);
        assert_eq!(charts.len(), 2);
        // both charts share the midpoint as the image of vertex 1
        assert_eq!(charts[0][1], vec![rat(1, 2)]);
        assert_eq!(charts[1][1], vec![rat(1, 2)]);
        // sampling the midpoint of either cell lands at 1/4 or 3/4
        let x0 = vec![rat(1, 2)];
        let a = apply_chart(&charts[0], &x0);
        let b = apply_chart(&charts[1], &x0);
        let mut got = vec![a[0].clone(), b[0].clone()];
        got.sort();
        assert_eq!(got, vec![rat(1, 4), rat(3, 4)]);
    }

    #[test]
    fn exhaustive_words_match_gamma_top() {
        // frozen from the independent oracle
        let phi = phi_x2(1);
        let x0 = standard_barycenter(1);
        let expect = [rat(5, 16), rat(21, 64), rat(85, 256), rat(341, 1024)];
        for (i, d) in (1..=4usize).enumerate() {
            assert_eq!(phi_exhaustive(1, d, &phi, &x0), expect[i], "d={d}");
        }
        // and against the streamed comb directly
        let e = embedded_standard_simplex(2);
        for d in 1..=3usize {
            let lhs = phi_exhaustive(2, d, &phi_x(2), &standard_barycenter(2));
            let rhs = gamma_integral(&e, d, 2, &phi_x(2), CAP).unwrap().value;
            assert_eq!(lhs, rhs, "d={d}");
        }
    }

    #[test]
    fn constant_observable_has_zero_stderr() {
        let mc = phi_mc_integral(1, 3, 100, &phi_const(1), 42);
        assert_eq!(mc.mean, rat_int(1));
        assert_eq!(mc.stderr, 0.0);
    }

    #[test]
    fn sampler_is_deterministic() {
        let x0 = standard_barycenter(2);
        let a = phi_sample(2, 5, 7, &x0);
        let b = phi_sample(2, 5, 7, &x0);
        assert_eq!(a, b);
        let c = phi_sample(2, 5, 8, &x0);
        assert_ne!(a, c);
    }

    #[test]
    fn mc_lands_near_volume_integral() {
        let mc = phi_mc_integral(2, 8, 2000, &phi_x(2), 12345);
        let target = 1.0 / 3.0;
        let mean = rational_to_f64(&mc.mean);
        assert!((mean - target).abs() < 4.0 * mc.stderr.max(1e-9));
    }

    #[test]
    fn observable_normalization() {
        // duplicate monomials merge, zero terms vanish
        let phi = PolynomialObservable::new(
            2,
            vec![
                (vec![1, 0], rat_int(2)),
                (vec![1], rat_int(-2)),
                (vec![0, 1], rat_int(5)),
            ],
        )
        .unwrap();
        assert_eq!(phi.terms().len(), 1);
        assert_eq!(phi.eval(&[rat_int(3), rat_int(1)]), rat_int(5));
    }
}

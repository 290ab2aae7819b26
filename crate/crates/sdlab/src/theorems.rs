//! Exact verifiers for the face-polynomial identities of closed triangulated
//! manifolds: the reflection symmetry of the shifted face polynomial, its
//! value at -1/2, the alternating face-count relations and their limit form,
//! and the sphere computation pinning down the universal roots.
//!
//! Verifiers run on any complex and report honestly; a pseudo-manifold
//! warning flags inputs that fall outside the hypotheses instead of refusing
//! them, so counterexamples stay explorable.

use num::{BigInt, Zero};

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::poly::{isolate_real_roots, rat, rat_int, Rational, RationalPolynomial};
use crate::spectral::{binomial, q_solve};

/// The shifted face polynomial `T q_K(T) - chi(K) T`; vanishes at 0 and -1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RPolynomial {
    coeffs: Vec<BigInt>,
}

impl RPolynomial {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        let f = k.face_vector();
        let chi = f.euler_characteristic();
        let mut coeffs = vec![BigInt::zero()];
        for (p, c) in f.counts().iter().enumerate() {
            if p == 0 {
                coeffs.push(c - &chi);
            } else {
                coeffs.push(c.clone());
            }
        }
        RPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn to_rational(&self) -> RationalPolynomial {
        RationalPolynomial::from_bigints(&self.coeffs)
    }
}

/// Residual evidence attached to a report: a polynomial that should have
/// been zero, a single rational value, or a vector of per-index defects.
#[derive(Clone, Debug)]
pub enum Residual {
    Polynomial(Vec<Rational>),
    Value(Rational),
    PerIndex(Vec<Rational>),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Polynomial(v) | Residual::PerIndex(v) => v.iter().all(|c| c.is_zero()),
            Residual::Value(v) => v.is_zero(),
        }
    }
}

/// Outcome of one verifier run.
#[derive(Clone, Debug)]
pub struct VerifierReport {
    pub claim: String,
    /// Whether the claim makes sense on this input (e.g. parity conditions).
    pub applicable: bool,
    pub holds: bool,
    pub residual: Residual,
    /// Offending index or value when the claim fails.
    pub witness: Option<String>,
    pub warnings: Vec<String>,
}

fn pseudomanifold_warning(k: &SimplicialComplex) -> Vec<String> {
    if k.is_closed_pseudomanifold() {
        Vec::new()
    } else {
        vec!["input is not a closed pseudo-manifold; the identity is not guaranteed".into()]
    }
}

/// Checks `R_K(-1-T) = (-1)^(n+1) R_K(T)` exactly; the residual is the
/// difference polynomial.
pub fn macdonald_symmetry(k: &SimplicialComplex) -> VerifierReport {
    let n = k.dim().expect("nonempty complex");
    let r = RPolynomial::from_complex(k).to_rational();
    let reflected = r.compose_affine(&rat_int(-1), &rat_int(-1));
    let signed = if n.is_multiple_of(2) { r.neg() } else { r.clone() };
    let residual = reflected.sub(&signed);
    let coeffs: Vec<Rational> = (0..=n + 1).map(|i| residual.coeff(i)).collect();
    let holds = residual.is_zero();
    let witness = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .map(|i| format!("first nonzero residual coefficient at degree {i}"));
    VerifierReport {
        claim: "macdonald".into(),
        applicable: true,
        holds,
        residual: Residual::Polynomial(coeffs),
        witness,
        warnings: pseudomanifold_warning(k),
    }
}

/// Checks `q_K(-1/2) = chi(K)` exactly; only applicable in even dimension.
pub fn chi_at_minus_half(k: &SimplicialComplex) -> VerifierReport {
    let n = k.dim().expect("nonempty complex");
    let applicable = n.is_multiple_of(2);
    if !applicable {
        return VerifierReport {
            claim: "chi-half".into(),
            applicable: false,
            holds: false,
            residual: Residual::Value(Rational::zero()),
            witness: Some(format!("dimension {n} is odd; the claim needs even dimension")),
            warnings: Vec::new(),
        };
    }
    let value = k.face_polynomial().eval(&rat(-1, 2));
    let chi = Rational::from_integer(k.euler_characteristic());
    let residual = &value - &chi;
    VerifierReport {
        claim: "chi-half".into(),
        applicable: true,
        holds: residual.is_zero(),
        residual: Residual::Value(residual.clone()),
        witness: (!residual.is_zero()).then(|| format!("q_K(-1/2) = {value}, chi = {chi}")),
        warnings: pseudomanifold_warning(k),
    }
}

/// Checks the alternating face-count relations
/// `f_p = sum_{i >= p} (-1)^(i+n) C(i+1, p+1) f_i` for every `p`.
pub fn dehn_sommerville(k: &SimplicialComplex) -> VerifierReport {
    let n = k.dim().expect("nonempty complex");
    let f = k.face_vector();
    let mut defects = Vec::with_capacity(n + 1);
    let mut first_fail = None;
    for p in 0..=n {
        let mut rhs = Rational::zero();
        for i in p..=n {
            let term = Rational::from_integer(binomial(i + 1, p + 1) * f.get(i));
            if (i + n).is_multiple_of(2) {
                rhs += term;
            } else {
                rhs -= term;
            }
        }
        let defect = Rational::from_integer(f.get(p)) - rhs;
        if !defect.is_zero() && first_fail.is_none() {
            first_fail = Some(p);
        }
        defects.push(defect);
    }
    VerifierReport {
        claim: "ds".into(),
        applicable: true,
        holds: first_fail.is_none(),
        residual: Residual::PerIndex(defects),
        witness: first_fail.map(|p| format!("first failing relation at p = {p}")),
        warnings: pseudomanifold_warning(k),
    }
}

/// Checks the limit form of the relations on the limit coefficients:
/// `sum_{l >= p} q_l C(l+1, p+1) (-1)^(n+l) = q_p`, exactly.
pub fn asymptotic_dehn_sommerville(n: usize) -> VerifierReport {
    let q = q_solve(n);
    let mut defects = Vec::with_capacity(n + 1);
    let mut first_fail = None;
    for p in 0..=n {
        let mut rhs = Rational::zero();
        for l in p..=n {
            let term = q.get(l) * Rational::from_integer(binomial(l + 1, p + 1));
            if (n + l).is_multiple_of(2) {
                rhs += term;
            } else {
                rhs -= term;
            }
        }
        let defect = q.get(p) - rhs;
        if !defect.is_zero() && first_fail.is_none() {
            first_fail = Some(p);
        }
        defects.push(defect);
    }
    VerifierReport {
        claim: "asymptotic-ds".into(),
        applicable: true,
        holds: first_fail.is_none(),
        residual: Residual::PerIndex(defects),
        witness: first_fail.map(|p| format!("first failing relation at p = {p}")),
        warnings: Vec::new(),
    }
}

/// Face polynomial of the `n`-sphere triangulated as the boundary of the
/// `(n+1)`-simplex: coefficient `C(n+2, p+1)` at degree `p`.
pub fn sphere_face_polynomial(n: usize) -> RationalPolynomial {
    RationalPolynomial::new(
        (0..=n)
            .map(|p| Rational::from_integer(binomial(n + 2, p + 1)))
            .collect(),
    )
}

/// Isolates the real roots of `q_{S^n} - chi(S^n)` and checks that the real
/// root set is exactly {-1} in odd dimension and {-1, -1/2} in even
/// dimension, all roots simple.
pub fn sphere_root_analysis(n: usize) -> Result<VerifierReport> {
    assert!(n >= 1);
    let chi = if n.is_multiple_of(2) { rat_int(2) } else { Rational::zero() };
    let p = sphere_face_polynomial(n).sub(&RationalPolynomial::monomial(chi, 0));
    let width = rat(1, 1_000_000_000_000i64);
    let iso = isolate_real_roots(&p, &width)?;
    let expected: Vec<Rational> = if n.is_multiple_of(2) {
        vec![rat_int(-1), rat(-1, 2)]
    } else {
        vec![rat_int(-1)]
    };
    let mut holds = iso.len() == expected.len();
    for r in &expected {
        if !p.eval(r).is_zero() {
            holds = false;
        }
        if !iso
            .intervals
            .iter()
            .any(|(a, b)| a <= r && r <= b)
        {
            holds = false;
        }
    }
    if !iso.multiplicities.iter().all(|&m| m == 1) {
        holds = false;
    }
    let witness = (!holds).then(|| {
        format!(
            "found {} real roots near {:?}",
            iso.len(),
            iso.approximate_roots()
        )
    });
    Ok(VerifierReport {
        claim: "sphere-roots".into(),
        applicable: true,
        holds,
        residual: Residual::Value(p.eval(&rat_int(-1))),
        witness,
        warnings: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{boundary_simplex, cross_polytope_boundary, standard_simplex};
    use num::One;

    #[test]
    fn macdonald_holds_on_spheres() {
        for n in 1..=4usize {
            let rep = macdonald_symmetry(&boundary_simplex(n));
            assert!(rep.holds, "n={n}");
            assert!(rep.warnings.is_empty());
        }
        assert!(macdonald_symmetry(&cross_polytope_boundary(2)).holds);
    }

    #[test]
    fn macdonald_fails_on_solid_triangle() {
        let rep = macdonald_symmetry(&standard_simplex(2));
        assert!(!rep.holds);
        assert!(!rep.residual.is_zero());
        assert!(!rep.warnings.is_empty());
        // residual computed by hand: R(-1-T) + R(T) = 3T + 3T^2
        match &rep.residual {
            Residual::Polynomial(c) => {
                assert_eq!(c[1], rat_int(3));
                assert_eq!(c[2], rat_int(3));
            }
            _ => panic!("expected polynomial residual"),
        }
    }

    #[test]
    fn chi_half_on_even_spheres() {
        let rep = chi_at_minus_half(&boundary_simplex(2));
        assert!(rep.applicable && rep.holds);
        let rep = chi_at_minus_half(&cross_polytope_boundary(2));
        assert!(rep.holds); // 6 - 6 + 2 = 2
    }

    #[test]
    fn chi_half_inapplicable_in_odd_dimension() {
        let rep = chi_at_minus_half(&boundary_simplex(3));
        assert!(!rep.applicable);
        assert!(rep.witness.is_some());
    }

    #[test]
    fn ds_holds_on_spheres_fails_on_disc() {
        assert!(dehn_sommerville(&boundary_simplex(1)).holds);
        assert!(dehn_sommerville(&boundary_simplex(4)).holds);
        // cone over the boundary of the triangle: a disc; boundary edges
        // break the relations
        let disc =
            SimplicialComplex::from_facets(vec![vec![0, 1, 3], vec![1, 2, 3], vec![0, 2, 3]])
                .unwrap();
        let rep = dehn_sommerville(&disc);
        assert!(!rep.holds);
        assert!(rep.witness.is_some());
    }

    #[test]
    fn asymptotic_ds_small_dimensions() {
        for n in 0..=9usize {
            assert!(asymptotic_dehn_sommerville(n).holds, "n={n}");
        }
    }

    #[test]
    fn sphere_roots_odd_and_even() {
        let rep = sphere_root_analysis(1).unwrap();
        assert!(rep.holds);
        let rep = sphere_root_analysis(2).unwrap();
        assert!(rep.holds);
        let rep = sphere_root_analysis(7).unwrap();
        assert!(rep.holds);
    }

    #[test]
    fn sphere_polynomial_matches_shifted_binomial() {
        // T q_{S^1}(T) = (1+T)^3 - 1 - T^3 = 3T + 3T^2
        let q = sphere_face_polynomial(1);
        assert_eq!(q.coeff(0), rat_int(3));
        assert_eq!(q.coeff(1), rat_int(3));
    }

    #[test]
    fn macdonald_agrees_with_ds_in_dimension_two() {
        // in even dimension the residual vanishes exactly when all the
        // alternating relations hold
        let disc =
            SimplicialComplex::from_facets(vec![vec![0, 1, 3], vec![1, 2, 3], vec![0, 2, 3]])
                .unwrap();
        for k in [
            boundary_simplex(2),
            cross_polytope_boundary(2),
            standard_simplex(2),
            disc,
        ] {
            let m = macdonald_symmetry(&k);
            let d = dehn_sommerville(&k);
            assert_eq!(m.holds, d.holds);
        }
    }

    #[test]
    fn sphere_shifted_polynomial_closed_form() {
        // T q(T) of the boundary sphere on n+2 vertices is
        // (1+T)^(n+2) - 1 - T^(n+2)
        for n in 1..=6usize {
            let f = boundary_simplex(n).face_vector();
            let q = RationalPolynomial::from_bigints(f.counts());
            let tq = q.mul(&RationalPolynomial::monomial(Rational::one(), 1));
            let mut binom_pow = RationalPolynomial::one();
            let one_plus_t = RationalPolynomial::from_integers(&[1, 1]);
            for _ in 0..n + 2 {
                binom_pow = binom_pow.mul(&one_plus_t);
            }
            let expected = binom_pow
                .sub(&RationalPolynomial::one())
                .sub(&RationalPolynomial::monomial(Rational::one(), n + 2));
            assert_eq!(tq, expected, "n={n}");
        }
    }

    #[test]
    fn cross_polytope_shifted_polynomial_closed_form() {
        // for the iterated two-point suspension: R(T) = (2T+1)((2T+1)^n - 1)
        // in even dimension and (2T+1)^(n+1) - 1 in odd dimension
        let base = RationalPolynomial::from_integers(&[1, 2]);
        for n in 1..=5usize {
            let r = RPolynomial::from_complex(&cross_polytope_boundary(n)).to_rational();
            let mut pow = RationalPolynomial::one();
            for _ in 0..n {
                pow = pow.mul(&base);
            }
            let expected = if n % 2 == 0 {
                base.mul(&pow.sub(&RationalPolynomial::one()))
            } else {
                pow.mul(&base).sub(&RationalPolynomial::one())
            };
            assert_eq!(r, expected, "n={n}");
        }
    }

    #[test]
    fn dimension_one_symmetry_is_vacuous() {
        // in dimension one the reflection symmetry holds for every complex
        // by the definition of the Euler characteristic, while the
        // alternating relations pin chi = 0; a wedge of two circles
        // separates the two checks
        let wedge = SimplicialComplex::from_facets(vec![
            vec![0, 1],
            vec![1, 2],
            vec![0, 2],
            vec![0, 3],
            vec![3, 4],
            vec![0, 4],
        ])
        .unwrap();
        assert!(macdonald_symmetry(&wedge).holds);
        assert!(!dehn_sommerville(&wedge).holds);
    }
}

//! Exact univariate polynomials over the rationals, with Sturm sequences and
//! real-root isolation by bisection.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Dense polynomial with exact rational coefficients. The zero polynomial has
/// an empty coefficient vector; otherwise the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl std::fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "poly{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RationalPolynomial {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn monomial(coef: Rational, degree: usize) -> Self {
        if coef.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = coef;
        RationalPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat_int(k as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| self.coeff(k) + other.coeff(k))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| self.coeff(k) - other.coeff(k))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem[k].clone() / &lead;
            if !c.is_zero() {
                quot[k - dd] = c.clone();
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let idx = k - dd + i;
                    rem[idx] -= &c * b;
                }
            }
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
            if rem.len() <= dd {
                break;
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Substitutes `T <- a + b*T`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        // Horner in the substituted variable.
        let mut acc = Self::zero();
        let lin = Self::new(vec![a.clone(), b.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::monomial(c.clone(), 0));
        }
        acc
    }

    /// Divides by the rational content, returning a primitive integer
    /// polynomial with the same sign pattern (positive content only).
    fn primitive_integer_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = num::integer::gcd(g, c.clone());
        }
        // g > 0 since the polynomial is nonzero
        Self::new(
            ints.into_iter()
                .map(|c| Rational::from_integer(c / &g))
                .collect(),
        )
    }

    /// Monic gcd via the Euclidean algorithm with content stripping.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_integer_part();
        let mut b = other.primitive_integer_part();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive_integer_part();
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.coeffs.last().unwrap().clone();
        a.scale(&(Rational::one() / lead))
    }

    /// The product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g)
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None | Some(0) => true,
            _ => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Square-free decomposition (Yun): returns `[(factor, multiplicity)]`
    /// with the factors square-free, pairwise coprime, and the product of
    /// `factor^multiplicity` equal to the input up to a constant.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let d = self.derivative();
        let g = self.gcd(&d);
        let mut b = self.div_exact(&g);
        let mut c = d.div_exact(&g).sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let p = b.gcd(&c);
            if p.degree().unwrap_or(0) > 0 {
                out.push((p.clone(), i));
            }
            b = b.div_exact(&p);
            c = c.div_exact(&p).sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// A bound `M` with all real roots in `(-M, M)` (Cauchy bound).
    pub fn root_bound(&self) -> Rational {
        let d = self.degree().expect("root bound of the zero polynomial");
        let lead = self.coeffs[d].abs();
        let mut max = Rational::zero();
        for c in &self.coeffs[..d] {
            let r = c.abs() / &lead;
            if r > max {
                max = r;
            }
        }
        max + Rational::one()
    }
}

/// Sturm chain of a polynomial, content-stripped at every step to control
/// coefficient growth. The chain is built from the square-free part, so sign
/// variation differences count distinct roots.
pub struct SturmChain {
    chain: Vec<RationalPolynomial>,
}

impl SturmChain {
    pub fn new(p: &RationalPolynomial) -> Self {
        let p0 = p.squarefree_part().primitive_integer_part();
        let p1 = p0.derivative().primitive_integer_part();
        let mut chain = vec![p0, p1];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive_integer_part());
        }
        SturmChain { chain }
    }

    fn variations_at(&self, t: &Rational) -> usize {
        let mut last: Option<bool> = None; // sign: true = positive
        let mut count = 0;
        for p in &self.chain {
            let v = p.eval(t);
            if v.is_zero() {
                continue;
            }
            let s = v.is_positive();
            if let Some(prev) = last {
                if prev != s {
                    count += 1;
                }
            }
            last = Some(s);
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots_in(&self, a: &Rational, b: &Rational) -> usize {
        assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.chain[0].degree().unwrap_or(0) == 0 {
            return 0;
        }
        let m = self.chain[0].root_bound();
        self.count_roots_in(&(-m.clone()), &m)
    }
}

/// Disjoint rational intervals, each containing exactly one distinct real
/// root, with multiplicities.
#[derive(Clone, Debug)]
pub struct RootIsolation {
    pub intervals: Vec<(Rational, Rational)>,
    pub multiplicities: Vec<usize>,
}

impl RootIsolation {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Interval midpoints as f64, sorted ascending.
    pub fn approximate_roots(&self) -> Vec<f64> {
        self.intervals
            .iter()
            .map(|(a, b)| {
                let mid = (a + b) / rat_int(2);
                rational_to_f64(&mid)
            })
            .collect()
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    // num's to_f64 handles large numerators/denominators by scaling
    num::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Isolates all real roots of `p` and refines each isolating interval by
/// bisection to width at most `width`. Roots hit exactly during bisection
/// come back as degenerate intervals `[r, r]`.
pub fn isolate_real_roots(p: &RationalPolynomial, width: &Rational) -> Result<RootIsolation> {
    let d = match p.degree() {
        Some(d) if d > 0 => d,
        _ => {
            return Ok(RootIsolation {
                intervals: Vec::new(),
                multiplicities: Vec::new(),
            })
        }
    };
    let sf = p.squarefree_part();
    let chain = SturmChain::new(&sf);
    let bound = sf.root_bound();
    let mut work = vec![(-bound.clone(), bound.clone())];
    let mut isolated: Vec<(Rational, Rational)> = Vec::new();
    // Interval splitting terminates because the roots are distinct; guard
    // against pathological inputs anyway.
    let mut steps = 0usize;
    let max_steps = 10_000 * (d + 1);
    while let Some((a, b)) = work.pop() {
        steps += 1;
        if steps > max_steps {
            return Err(Error::RefinementBudget);
        }
        let count = chain.count_roots_in(&a, &b);
        if count == 0 {
            continue;
        }
        if count == 1 {
            isolated.push((a, b));
            continue;
        }
        let mid = (&a + &b) / rat_int(2);
        if sf.eval(&mid).is_zero() {
            isolated.push((mid.clone(), mid.clone()));
            // exclude the midpoint from both halves by shrinking with a
            // step smaller than the distance to any other root
            let mut eps = (&b - &a) / rat_int(4);
            loop {
                let lo = &mid - &eps;
                let hi = &mid + &eps;
                if !sf.eval(&lo).is_zero()
                    && !sf.eval(&hi).is_zero()
                    && chain.count_roots_in(&lo, &hi) == 1
                {
                    work.push((a.clone(), lo));
                    work.push((hi, b.clone()));
                    break;
                }
                eps /= rat_int(2);
                steps += 1;
                if steps > max_steps {
                    return Err(Error::RefinementBudget);
                }
            }
        } else {
            work.push((a, mid.clone()));
            work.push((mid, b));
        }
    }
    isolated.sort_by(|x, y| x.0.cmp(&y.0));

    // refine to the requested width
    let mut refined = Vec::with_capacity(isolated.len());
    for (mut a, mut b) in isolated {
        let mut budget = 0usize;
        while &b - &a > *width {
            budget += 1;
            if budget > 4096 {
                return Err(Error::RefinementBudget);
            }
            let mid = (&a + &b) / rat_int(2);
            let vm = sf.eval(&mid);
            if vm.is_zero() {
                a = mid.clone();
                b = mid;
                break;
            }
            let va = sf.eval(&a);
            if va.is_zero() || (va.is_positive() != vm.is_positive()) {
                b = mid;
            } else {
                a = mid;
            }
        }
        refined.push((a, b));
    }

    // multiplicities from the square-free decomposition
    let decomp = p.squarefree_decomposition();
    let mut mults = Vec::with_capacity(refined.len());
    for (a, b) in &refined {
        let mut m = 1usize;
        if decomp.len() > 1 || decomp.first().is_some_and(|(_, k)| *k > 1) {
            for (factor, k) in &decomp {
                let hit = if a == b {
                    factor.eval(a).is_zero()
                } else {
                    SturmChain::new(factor).count_roots_in(a, b) > 0
                };
                if hit {
                    m = *k;
                    break;
                }
            }
        }
        mults.push(m);
    }

    Ok(RootIsolation {
        intervals: refined,
        multiplicities: mults,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_arith() {
        // (T + 1)(T + 2) = T^2 + 3T + 2
        let p = RationalPolynomial::from_integers(&[1, 1]);
        let q = RationalPolynomial::from_integers(&[2, 1]);
        let prod = p.mul(&q);
        assert_eq!(prod, RationalPolynomial::from_integers(&[2, 3, 1]));
        assert_eq!(prod.eval(&rat_int(1)), rat_int(6));
    }

    #[test]
    fn div_rem_roundtrip() {
        let p = RationalPolynomial::from_integers(&[2, 3, 1]);
        let d = RationalPolynomial::from_integers(&[1, 1]);
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, RationalPolynomial::from_integers(&[2, 1]));
    }

    #[test]
    fn compose_affine_flip() {
        // P(T) = T^2 under T <- -1 - T gives (1 + T)^2
        let p = RationalPolynomial::from_integers(&[0, 0, 1]);
        let flipped = p.compose_affine(&rat_int(-1), &rat_int(-1));
        assert_eq!(flipped, RationalPolynomial::from_integers(&[1, 2, 1]));
    }

    #[test]
    fn sturm_counts_quadratic() {
        // T^2 - 2 has two real roots
        let p = RationalPolynomial::from_integers(&[-2, 0, 1]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_real_roots(), 2);
        assert_eq!(chain.count_roots_in(&rat_int(0), &rat_int(2)), 1);
        assert_eq!(chain.count_roots_in(&rat_int(-2), &rat_int(0)), 1);
        // T^2 + 1 has none
        let q = RationalPolynomial::from_integers(&[1, 0, 1]);
        assert_eq!(SturmChain::new(&q).count_real_roots(), 0);
    }

    #[test]
    fn isolate_cubic_with_known_roots() {
        // T(T + 1/2)(T + 1) = T^3 + 3/2 T^2 + 1/2 T
        let p = RationalPolynomial::new(vec![rat_int(0), rat(1, 2), rat(3, 2), rat_int(1)]);
        let iso = isolate_real_roots(&p, &rat(1, 1_000_000)).unwrap();
        assert_eq!(iso.len(), 3);
        let approx = iso.approximate_roots();
        assert!((approx[0] + 1.0).abs() < 1e-6);
        assert!((approx[1] + 0.5).abs() < 1e-6);
        assert!(approx[2].abs() < 1e-6);
        assert!(iso.multiplicities.iter().all(|&m| m == 1));
    }

    #[test]
    fn isolate_with_multiplicity() {
        // (T - 1)^2 (T + 2)
        let p = RationalPolynomial::from_integers(&[1, -2, 1])
            .mul(&RationalPolynomial::from_integers(&[2, 1]));
        let iso = isolate_real_roots(&p, &rat(1, 1024)).unwrap();
        assert_eq!(iso.len(), 2);
        assert_eq!(iso.multiplicities, vec![1, 2]); // sorted: -2 then 1
    }

    #[test]
    fn squarefree_detection() {
        let p = RationalPolynomial::from_integers(&[1, -2, 1]); // (T-1)^2
        assert!(!p.is_squarefree());
        assert!(p.squarefree_part().is_squarefree());
        let q = RationalPolynomial::from_integers(&[-2, 0, 1]);
        assert!(q.is_squarefree());
    }

    #[test]
    fn yun_decomposition() {
        // (T-1)^2 (T+3)^1
        let sq = RationalPolynomial::from_integers(&[1, -2, 1]);
        let lin = RationalPolynomial::from_integers(&[3, 1]);
        let p = sq.mul(&lin);
        let decomp = p.squarefree_decomposition();
        assert_eq!(decomp.len(), 2);
        assert_eq!(decomp[0].1, 1);
        assert_eq!(decomp[1].1, 2);
    }
}

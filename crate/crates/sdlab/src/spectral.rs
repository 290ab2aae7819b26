//! The subdivision transfer matrix, its eigenvector of limit coefficients,
//! and the limit face polynomial with exact root isolation.
//!
//! `lambda(i, j)` counts the interior `(j-1)`-faces of the once-subdivided
//! standard `(i-1)`-simplex. Multiplying a face vector by this matrix on the
//! right gives the face vector after one barycentric subdivision.

use num::{BigInt, One, Zero};

use crate::complex::FaceVector;
use crate::error::{Error, Result};
use crate::poly::{isolate_real_roots, rat, rat_int, Rational, RationalPolynomial, RootIsolation, SturmChain};

/// Lower-triangular matrix of interior face counts, entries `1 <= j <= i <= size`.
///
/// Conventions outside the table: `get(0, 0) = 1` and `get(l, 0) = 0` for
/// `l > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaMatrix {
    size: usize,
    rows: Vec<Vec<BigInt>>, // rows[i-1][j-1], j <= i
}

impl LambdaMatrix {
    /// Builds the matrix from the cone recursion: the interior `(j-1)`-faces
    /// of a subdivided simplex are cones over interior faces on its boundary.
    pub fn recursive(size: usize) -> Self {
        assert!(size >= 1);
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(size);
        for i in 1..=size {
            let mut row = Vec::with_capacity(i);
            for j in 1..=i {
                // sum over p = j-1 .. i-1 of C(i, p) * lambda(p, j-1)
                let mut acc = BigInt::zero();
                for p in (j - 1)..i {
                    let prev = if j == 1 {
                        // lambda(p, 0): 1 if p == 0 else 0
                        if p == 0 {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    } else {
                        rows[p - 1][j - 2].clone()
                    };
                    acc += binomial(i, p) * prev;
                }
                row.push(acc);
            }
            rows.push(row);
        }
        LambdaMatrix { size, rows }
    }

    /// Builds the matrix from the alternating-sum closed form
    /// `sum_p C(j, p) (-1)^(j-p) p^i`.
    pub fn closed_form(size: usize) -> Self {
        assert!(size >= 1);
        let rows = (1..=size)
            .map(|i| (1..=i).map(|j| lambda_closed(i, j)).collect())
            .collect();
        LambdaMatrix { size, rows }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entry lookup with the boundary conventions; zero above the diagonal.
    pub fn get(&self, i: usize, j: usize) -> BigInt {
        if j == 0 {
            return if i == 0 { BigInt::one() } else { BigInt::zero() };
        }
        if i == 0 || j > i {
            return BigInt::zero();
        }
        assert!(i <= self.size, "index {i} out of range for size {}", self.size);
        self.rows[i - 1][j - 1].clone()
    }

    /// One transfer step: `out[q] = sum_p f[p] * lambda(p+1, q+1)`.
    fn apply(&self, f: &[BigInt]) -> Vec<BigInt> {
        let n = f.len();
        (0..n)
            .map(|q| {
                let mut acc = BigInt::zero();
                for (p, fp) in f.iter().enumerate() {
                    if p + 1 > q {
                        acc += fp * self.get(p + 1, q + 1);
                    }
                }
                acc
            })
            .collect()
    }
}

fn lambda_closed(i: usize, j: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for p in 0..=j {
        let term = binomial(j, p) * BigInt::from(p).pow(i as u32);
        if (j - p).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Applies `d` transfer steps to a face vector of an `n`-dimensional complex.
pub fn transfer(f: &FaceVector, n: usize, d: usize) -> Result<FaceVector> {
    if f.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            dim: n,
            got: f.len(),
        });
    }
    let lambda = LambdaMatrix::recursive(n + 1);
    let mut v: Vec<BigInt> = f.counts().to_vec();
    for _ in 0..d {
        v = lambda.apply(&v);
    }
    Ok(FaceVector::new(v))
}

/// Limit coefficients `q[p]`, `p = 0..=n`: exact positive rationals with
/// `q[n] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QVector {
    n: usize,
    q: Vec<Rational>,
}

impl QVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.q
    }

    pub fn get(&self, p: usize) -> Rational {
        self.q[p].clone()
    }

    /// The polynomial with coefficient `q[p]` at degree `p`.
    pub fn polynomial(&self) -> RationalPolynomial {
        RationalPolynomial::new(self.q.clone())
    }
}

/// Solves the triangular eigenvector system by back-substitution from
/// `q[n] = 1` downward. Denominators `(n+1)! - (p+1)!` never vanish.
pub fn q_solve(n: usize) -> QVector {
    let lambda = LambdaMatrix::recursive(n + 1);
    let top = factorial(n + 1);
    let mut q = vec![Rational::zero(); n + 1];
    q[n] = Rational::one();
    for p in (0..n).rev() {
        let mut acc = Rational::zero();
        for j in (p + 2)..=(n + 1) {
            acc += Rational::from_integer(lambda.get(j, p + 1)) * &q[j - 1];
        }
        let denom = &top - factorial(p + 1);
        q[p] = acc / Rational::from_integer(denom);
    }
    QVector { n, q }
}

/// Computes the same coefficients by summing the product formula over all
/// strictly increasing index sequences `p+1 = p_1 < ... < p_j < n+1`. The
/// enumeration is depth-first over extensions of `p_1 = p + 1`.
pub fn q_partition(n: usize) -> QVector {
    let lambda = LambdaMatrix::recursive(n + 1);
    let top = factorial(n + 1);
    let mut q = vec![Rational::zero(); n + 1];
    q[n] = Rational::one();
    for p in 0..n {
        let mut total = Rational::zero();
        // sequence held as a stack; each completed sequence contributes
        // lambda(n+1, p_j) * ... * lambda(p_2, p_1) over the denominators
        let mut seq = vec![p + 1];
        dfs_sequences(n, &lambda, &top, &mut seq, &mut total);
        q[p] = total;
    }
    QVector { n, q }
}

fn dfs_sequences(
    n: usize,
    lambda: &LambdaMatrix,
    top: &BigInt,
    seq: &mut Vec<usize>,
    total: &mut Rational,
) {
    // contribution of the current sequence, closed off by lambda(n+1, p_j)
    let mut numer = lambda.get(n + 1, *seq.last().unwrap());
    let mut denom = BigInt::one();
    for w in seq.windows(2) {
        numer *= lambda.get(w[1], w[0]);
    }
    for &pi in seq.iter() {
        denom *= top - factorial(pi);
    }
    *total += Rational::new(numer, denom);
    // extend by any larger index below n+1
    let last = *seq.last().unwrap();
    for next in (last + 1)..(n + 1) {
        seq.push(next);
        dfs_sequences(n, lambda, top, seq, total);
        seq.pop();
    }
}

/// The limit polynomial `sum_p q[p] T^p`.
pub fn limit_polynomial(n: usize) -> RationalPolynomial {
    q_solve(n).polynomial()
}

/// The `j`-th falling-factorial basis polynomial `T(T-1)...(T-j+1) / j!`.
pub fn lagrange_polynomial(j: usize) -> RationalPolynomial {
    let mut p = RationalPolynomial::one();
    for i in 0..j {
        p = p.mul(&RationalPolynomial::new(vec![rat_int(-(i as i64)), rat_int(1)]));
    }
    p.scale(&Rational::new(BigInt::one(), factorial(j)))
}

/// Checks `T^j = sum_i lambda(j, i) L_i(T)` in the monomial basis for all
/// `j <= jmax`; returns the first failing `j` if any.
pub fn lagrange_identity_check(jmax: usize) -> std::result::Result<(), usize> {
    let lambda = LambdaMatrix::recursive(jmax.max(1));
    for j in 1..=jmax {
        let mut acc = RationalPolynomial::zero();
        for i in 1..=j {
            acc = acc.add(&lagrange_polynomial(i).scale(&Rational::from_integer(lambda.get(j, i))));
        }
        if acc != RationalPolynomial::monomial(Rational::one(), j) {
            return Err(j);
        }
    }
    Ok(())
}

/// Both routes to `(I + C)^r` where `C` is the strictly lower triangular
/// binomial matrix: repeated multiplication and the closed form
/// `C(i, j) r^(i-j)`. Returns the matrix after checking they agree.
pub fn binomial_power_matrix(r: usize, size: usize) -> Vec<Vec<BigInt>> {
    let closed = binomial_power_closed(r, size);
    let iterated = binomial_power_iterative(r, size);
    assert_eq!(closed, iterated, "binomial power routes disagree");
    closed
}

pub fn binomial_power_closed(r: usize, size: usize) -> Vec<Vec<BigInt>> {
    (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| {
                    if i >= j {
                        binomial(i, j) * BigInt::from(r).pow((i - j) as u32)
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn binomial_power_iterative(r: usize, size: usize) -> Vec<Vec<BigInt>> {
    // I + C
    let base: Vec<Vec<BigInt>> = (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| if i >= j { binomial(i, j) } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut acc: Vec<Vec<BigInt>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    for _ in 0..r {
        acc = mat_mul(&acc, &base);
    }
    acc
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = BigInt::zero();
                    for k in 0..n {
                        acc += &a[i][k] * &b[k][j];
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Structural facts about the real roots of `T * q_n(T)`.
#[derive(Clone, Debug)]
pub struct LimitRootReport {
    pub n: usize,
    /// Isolation of the full root set of `T * q_n(T)`.
    pub isolation: RootIsolation,
    /// All roots simple (the polynomial is square-free).
    pub all_simple: bool,
    /// As many real roots as the degree.
    pub all_real: bool,
    /// Every real root lies in `[-1, 0]`.
    pub in_unit_interval: bool,
    /// `q_n(-1/2)` vanishes exactly (expected for even `n`).
    pub vanishes_at_minus_half: bool,
}

/// Isolates the `n + 1` roots of `T * q_n(T)` to width at most `width` and
/// checks simplicity, realness and containment in `[-1, 0]`.
pub fn limit_root_report(n: usize, width: &Rational) -> Result<LimitRootReport> {
    assert!(n >= 1, "root analysis needs n >= 1");
    let q = limit_polynomial(n);
    let tq = q.mul(&RationalPolynomial::monomial(Rational::one(), 1));
    let degree = tq.degree().expect("nonzero polynomial");

    let all_simple = tq.is_squarefree();
    let chain = SturmChain::new(&tq);
    let all_real = chain.count_real_roots() == degree;
    // count within [-1, 0]: both endpoints are exact roots (0 always,
    // -1 by the reflection symmetry), so count the interior after deflating
    // and add the endpoint checks
    let at_zero = tq.eval(&Rational::zero()).is_zero();
    let at_minus_one = tq.eval(&rat_int(-1)).is_zero();
    let interior = chain.count_roots_in(&rat_int(-1), &Rational::zero());
    // (-1, 0] includes the root at 0
    let in_unit_interval =
        at_zero && at_minus_one && interior + 1 == degree && all_real;

    let isolation = isolate_real_roots(&tq, width)?;
    let vanishes_at_minus_half = q.eval(&rat(-1, 2)).is_zero();

    Ok(LimitRootReport {
        n,
        isolation,
        all_simple,
        all_real,
        in_unit_interval,
        vanishes_at_minus_half,
    })
}

/// Exact check that the limit coefficients form the `(n+1)!`-eigenvector of
/// the transposed transfer matrix: returns the residual vector.
pub fn eigen_residual(n: usize, q: &QVector) -> Vec<Rational> {
    let lambda = LambdaMatrix::recursive(n + 1);
    let top = Rational::from_integer(factorial(n + 1));
    (0..=n)
        .map(|p| {
            let mut acc = Rational::zero();
            for h in p..=n {
                acc += Rational::from_integer(lambda.get(h + 1, p + 1)) * q.get(h);
            }
            acc - &top * q.get(p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Signed;

    #[test]
    fn small_lambda_entries() {
        let l = LambdaMatrix::recursive(4);
        assert_eq!(l.get(1, 1), BigInt::from(1));
        assert_eq!(l.get(2, 1), BigInt::from(1)); // interior vertex of a split edge
        assert_eq!(l.get(2, 2), BigInt::from(2)); // its two edges
        assert_eq!(l.get(3, 2), BigInt::from(6)); // interior edges of a split triangle
        assert_eq!(l.get(3, 3), BigInt::from(6));
        assert_eq!(l.get(4, 2), BigInt::from(14));
        assert_eq!(l.get(4, 3), BigInt::from(36));
        assert_eq!(l.get(4, 4), BigInt::from(24));
    }

    #[test]
    fn closed_form_matches_recursion() {
        assert_eq!(LambdaMatrix::recursive(12), LambdaMatrix::closed_form(12));
    }

    #[test]
    fn closed_form_vanishes_above_diagonal() {
        // the alternating sum is zero for j > i
        for i in 1..6usize {
            for j in (i + 1)..8 {
                assert_eq!(lambda_closed(i, j), BigInt::zero(), "i={i} j={j}");
            }
        }
    }

    #[test]
    fn diagonal_is_factorial() {
        let l = LambdaMatrix::recursive(10);
        for i in 1..=10 {
            assert_eq!(l.get(i, i), factorial(i));
            assert_eq!(l.get(i, 1), BigInt::one());
        }
    }

    #[test]
    fn conventions_outside_table() {
        let l = LambdaMatrix::recursive(3);
        assert_eq!(l.get(0, 0), BigInt::one());
        assert_eq!(l.get(2, 0), BigInt::zero());
        assert_eq!(l.get(1, 3), BigInt::zero());
    }

    #[test]
    fn column_cone_identity() {
        // sum_{p=l}^{h} C(h+1, p) lambda(p, l) = lambda(h+1, l+1)
        let l = LambdaMatrix::recursive(9);
        for h in 0..8usize {
            for lo in 1..=h {
                let mut acc = BigInt::zero();
                for p in lo..=h {
                    acc += binomial(h + 1, p) * l.get(p, lo);
                }
                assert_eq!(acc, l.get(h + 1, lo + 1), "h={h} l={lo}");
            }
        }
    }

    #[test]
    fn q_small_cases() {
        assert_eq!(q_solve(0).coeffs(), &[rat_int(1)]);
        assert_eq!(q_solve(1).coeffs(), &[rat_int(1), rat_int(1)]);
        assert_eq!(q_solve(2).coeffs(), &[rat(1, 2), rat(3, 2), rat_int(1)]);
        assert_eq!(
            q_solve(3).coeffs(),
            &[rat(2, 11), rat(13, 11), rat_int(2), rat_int(1)]
        );
    }

    #[test]
    fn q_partition_matches_solve() {
        for n in 0..=7 {
            assert_eq!(q_partition(n), q_solve(n), "n={n}");
        }
    }

    #[test]
    fn q_partition_hand_terms() {
        // n=2, p=1: single sequence (2): lambda(3,2) / (6 - 2) = 3/2
        // n=2, p=0: (1) gives 1/5, (1,2) gives 6/20; total 1/2
        let q = q_partition(2);
        assert_eq!(q.get(1), rat(3, 2));
        assert_eq!(q.get(0), rat(1, 2));
    }

    #[test]
    fn eigen_residual_vanishes() {
        for n in 0..=8 {
            let q = q_solve(n);
            assert!(eigen_residual(n, &q).iter().all(|r| r.is_zero()), "n={n}");
        }
    }

    #[test]
    fn transfer_matches_known_values() {
        let f = FaceVector::from_usize(&[3, 3, 1]);
        let f1 = transfer(&f, 2, 1).unwrap();
        assert_eq!(f1, FaceVector::from_usize(&[7, 12, 6]));
        let f2 = transfer(&f, 2, 2).unwrap();
        assert_eq!(f2, FaceVector::from_usize(&[25, 60, 36]));
        let id = transfer(&f, 2, 0).unwrap();
        assert_eq!(id, f);
    }

    #[test]
    fn transfer_rejects_bad_length() {
        let f = FaceVector::from_usize(&[3, 3]);
        assert!(transfer(&f, 2, 1).is_err());
    }

    #[test]
    fn transfer_ratios_approach_q() {
        // f_p(Sd^d) / 6^d converges to q_p for the triangle
        let f = FaceVector::from_usize(&[3, 3, 1]);
        let q = q_solve(2);
        let mut prev_err = None;
        for d in 1..=8 {
            let fd = transfer(&f, 2, d).unwrap();
            let scale = Rational::from_integer(BigInt::from(6).pow(d as u32));
            let err: Rational = (0..=2)
                .map(|p| (Rational::from_integer(fd.get(p)) / &scale - q.get(p)).abs())
                .sum();
            if let Some(prev) = prev_err {
                assert!(err < prev, "d={d}");
            }
            prev_err = Some(err);
        }
    }

    #[test]
    fn lagrange_expansion() {
        // T^2 = 1*L_1 + 2*L_2 and T^3 = L_1 + 6 L_2 + 6 L_3
        assert!(lagrange_identity_check(8).is_ok());
        let l2 = lagrange_polynomial(2);
        assert_eq!(l2, RationalPolynomial::new(vec![rat_int(0), rat(-1, 2), rat(1, 2)]));
    }

    #[test]
    fn binomial_power_routes_agree() {
        for r in 1..=4 {
            let m = binomial_power_matrix(r, 6);
            // diagonal is 1
            for i in 0..6 {
                assert_eq!(m[i][i], BigInt::one());
            }
        }
        // r=2, i=3, j=1: C(3,1) * 2^2 = 12
        let m = binomial_power_matrix(2, 4);
        assert_eq!(m[2][0], BigInt::from(12));
    }

    #[test]
    fn limit_roots_small() {
        // n=1: T + T^2, roots {-1, 0}
        let rep = limit_root_report(1, &rat(1, 1 << 20)).unwrap();
        assert!(rep.all_simple && rep.all_real && rep.in_unit_interval);
        assert_eq!(rep.isolation.len(), 2);
        // n=2: roots {-1, -1/2, 0} and q(-1/2) = 0
        let rep = limit_root_report(2, &rat(1, 1 << 20)).unwrap();
        assert_eq!(rep.isolation.len(), 3);
        assert!(rep.vanishes_at_minus_half);
        let approx = rep.isolation.approximate_roots();
        assert!((approx[1] + 0.5).abs() < 1e-6);
    }
}

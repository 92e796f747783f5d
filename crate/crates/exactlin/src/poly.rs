//! Univariate polynomials over `Q(i)`, minimal polynomials and square-free parts.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::gauss::GaussRational as G;
use crate::matrix::DenseMatrix;
use crate::rat::{denom_lcm, Rat};
use crate::LinError;

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<G>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<G>) -> Self {
        while coeffs.last().is_some_and(G::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| G::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::new(vec![G::one()])
    }

    /// The monic linear factor `x − r`.
    pub fn linear(r: &G) -> Self {
        Poly::new(vec![-r, G::one()])
    }

    pub fn coeffs(&self) -> &[G] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&G> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(G::is_one)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.inv();
                Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = G::zero();
        Poly::new((0..n).map(|k| self.coeffs.get(k).unwrap_or(&z) + o.coeffs.get(k).unwrap_or(&z)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = G::zero();
        Poly::new((0..n).map(|k| self.coeffs.get(k).unwrap_or(&z) - o.coeffs.get(k).unwrap_or(&z)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![G::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.coeffs[dd].inv();
        let mut r = self.coeffs.clone();
        let mut q = vec![G::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let f = &r[r.len() - 1] * &lead_inv;
            for (j, c) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&f * c);
            }
            q[k] = f;
            r.pop();
            while r.last().is_some_and(G::is_zero) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * &G::from_int(k as i64)).collect())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &G) -> G {
        let mut acc = G::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(M)` by Horner's rule.
    pub fn eval_matrix(&self, m: &DenseMatrix) -> DenseMatrix {
        let n = m.rows();
        let mut acc = DenseMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for k in 0..n {
                acc[(k, k)] += c;
            }
        }
        acc
    }

    /// Substitution `x ↦ i·y`.
    pub fn rotate_by_i(&self) -> Poly {
        let mut pow = G::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pow);
            pow = pow.mul_i();
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let coef = if c.is_one() && k > 0 { String::new() } else { format!("({c})") };
            terms.push(format!("{coef}{var}"));
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monic polynomial of least degree annihilating `m`.
pub fn min_poly(m: &DenseMatrix) -> Result<Poly, LinError> {
    if !m.is_square() {
        return Err(LinError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let nn = n * n;
    let mut powers: Vec<Vec<G>> = vec![DenseMatrix::identity(n).into_flat()];
    let mut current = DenseMatrix::identity(n);
    loop {
        current = current.mul(m);
        let flat = current.as_flat().to_vec();
        // solve Σ c_k M^k = M^d over the previous powers
        let cols = powers.len();
        let mut rows: Vec<Vec<G>> = (0..nn)
            .map(|j| {
                let mut r: Vec<G> = powers.iter().map(|p| p[j].clone()).collect();
                r.push(flat[j].clone());
                r
            })
            .collect();
        let pivots = crate::subspace::rref_rows(&mut rows, cols + 1);
        if !pivots.contains(&cols) {
            let mut c = vec![G::zero(); cols + 1];
            for (row, &p) in rows.iter().zip(&pivots) {
                c[p] = -&row[cols];
            }
            c[cols] = G::one();
            return Ok(Poly::new(c));
        }
        powers.push(flat);
        debug_assert!(powers.len() <= n + 1);
    }
}

/// `p / gcd(p, p′)`, made monic.
pub fn squarefree_part(p: &Poly) -> Poly {
    if p.degree().unwrap_or(0) == 0 {
        return p.monic();
    }
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).0.monic()
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d != n / d {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
        if d > 2_000_000 {
            return None;
        }
    }
    Some(out)
}

/// All rational roots of a polynomial whose coefficients are rational up to a
/// common `Q(i)` factor, found by the rational root test. Returns `None` when
/// the coefficients are not proportional to rational ones or too large to scan.
pub fn rational_roots(p: &Poly) -> Option<Vec<Rat>> {
    let p = p.monic();
    if p.coeffs.iter().any(|c| !c.is_real()) {
        return None;
    }
    let mut coeffs: Vec<Rat> = p.coeffs.iter().map(|c| c.re.clone()).collect();
    let mut roots = Vec::new();
    while coeffs.first().is_some_and(Rat::is_zero) {
        coeffs.remove(0);
        roots.push(Rat::zero());
    }
    if coeffs.len() <= 1 {
        return Some(roots);
    }
    let l = Rat::from(denom_lcm(coeffs.iter()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| c.mul(&l).numer()).collect();
    let num_divs = small_divisors(&ints[0])?;
    let den_divs = small_divisors(ints.last().expect("nonconstant"))?;
    let poly = Poly::new(coeffs.iter().cloned().map(G::from_rat).collect());
    let mut found: Vec<Rat> = Vec::new();
    for a in &num_divs {
        for b in &den_divs {
            for s in [1i64, -1] {
                let cand = Rat::from_big(num_rational::BigRational::new(a * BigInt::from(s), b.clone()));
                if !found.contains(&cand) && poly.eval(&G::from_rat(cand.clone())).is_zero() {
                    found.push(cand);
                }
            }
        }
    }
    roots.extend(found);
    roots.sort();
    Some(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_polynomials() {
        assert_eq!(min_poly(&DenseMatrix::identity(3)).unwrap(), Poly::from_ints(&[-1, 1]));
        let j = DenseMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(min_poly(&j).unwrap(), Poly::from_ints(&[0, 0, 0, 1]));
        assert!(min_poly(&DenseMatrix::zeros(2, 3)).is_err());
        let m = DenseMatrix::from_ints(&[&[2, 1], &[0, 2]]);
        let p = min_poly(&m).unwrap();
        assert!(p.eval_matrix(&m).is_zero());
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn squarefree_example() {
        // (x−1)²(x+2) = x³ − 3x + 2
        let p = Poly::from_ints(&[2, -3, 0, 1]);
        assert_eq!(squarefree_part(&p), Poly::from_ints(&[-2, 1, 1]));
    }

    #[test]
    fn roots_on_the_imaginary_axis() {
        // (x − i)(x + 2i)x = x³ + i x² + 2x
        let p = Poly::new(vec![G::zero(), G::from_int(2), G::i(), G::one()]);
        let roots = rational_roots(&p.rotate_by_i()).unwrap();
        assert_eq!(roots, vec![Rat::from_int(-2), Rat::zero(), Rat::from_int(1)]);
    }
}

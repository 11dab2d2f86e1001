//! Univariate polynomials over the rationals, enough for characteristic
//! polynomials and their square-free parts.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::{ExactMatrix, Rational};
use crate::error::{Error, Result};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Poly::new(c.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn one() -> Self {
        Poly::new(vec![Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(Vec::new());
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut r = self.coeffs.clone();
        let dl = d.coeffs.len();
        if r.len() < dl {
            return (Poly::new(Vec::new()), self.clone());
        }
        let lead = d.coeffs.last().unwrap().clone();
        let mut q = vec![Rational::zero(); r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + dl - 1] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
        }
        (Poly::new(q), Poly::new(r))
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => Poly::new(self.coeffs.iter().map(|c| c / l).collect()),
        }
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Number of distinct complex roots.
    pub fn distinct_root_count(&self) -> usize {
        if self.degree() == 0 {
            return 0;
        }
        let g = self.gcd(&self.derivative());
        self.degree() - g.degree()
    }

    pub fn root_multiplicity(&self, x: &Rational) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Poly::new(vec![-x.clone(), Rational::one()]);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            if !p.eval(x).is_zero() {
                return k;
            }
            p = p.div_rem(&lin).0;
            k += 1;
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})x^{}", c, i)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// det(xI − M), computed division-free (Berkowitz) on the integer
/// numerators and rescaled.
pub fn charpoly(m: &ExactMatrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::Shape(alloc::format!("{}x{} is not square", m.rows(), m.cols())));
    }
    let n = m.rows();
    let num = m.numerators();
    let a = |i: usize, j: usize| &num[i * n + j];
    // q holds det(xI − N_r) for the leading r×r block, highest degree first.
    let mut q: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        // Toeplitz column: 1, −a_rr, −R C, −R A C, ..., −R A^{r−1} C
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-a(r, r).clone());
        let mut v: Vec<BigInt> = (0..r).map(|i| a(i, r).clone()).collect();
        for k in 0..r {
            let rc: BigInt = (0..r).map(|j| a(r, j) * &v[j]).sum();
            t.push(-rc);
            if k + 1 < r {
                v = (0..r).map(|i| (0..r).map(|j| a(i, j) * &v[j]).sum()).collect();
            }
        }
        let mut nq = vec![BigInt::zero(); r + 2];
        for (i, slot) in nq.iter_mut().enumerate() {
            for (j, qj) in q.iter().enumerate() {
                if i >= j {
                    *slot += &t[i - j] * qj;
                }
            }
        }
        q = nq;
    }
    // q_k multiplies x^{n−k}; divide by den^k to undo the scaling.
    let den = m.denominator();
    let mut scale = BigInt::one();
    let mut low_first = vec![Rational::zero(); n + 1];
    for (k, c) in q.into_iter().enumerate() {
        low_first[n - k] = Rational::new(c, scale.clone());
        scale *= den;
    }
    Ok(Poly::new(low_first))
}

//! Dense univariate polynomials over a coefficient ring, the `R[x]` layer
//! of the operator algebra.

use crate::domain::Coeff;
use crate::height::{Height, HeightMode};
use std::fmt;

/// A dense polynomial in `x` with coefficients in `C`, lowest degree first,
/// no trailing zeros.  The zero polynomial has an empty coefficient list and
/// degree -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> UniPoly<C> {
    /// Construct from coefficients (lowest first), stripping trailing zeros.
    pub fn new(coeffs: Vec<C>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly { coeffs: vec![C::one()] }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: C) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        UniPoly::monomial(C::one(), 1)
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; -1 for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// Borrowed coefficient slice (lowest first, trimmed).
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    /// Maximum coefficient height (0 for the zero polynomial).
    pub fn height(&self, mode: HeightMode) -> Height {
        self.coeffs
            .iter()
            .map(|c| c.height(mode))
            .fold(mode.zero(), Height::max)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::new(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by a machine integer.
    pub fn scale_small(&self, k: i64) -> Self {
        UniPoly::new(self.coeffs.iter().map(|a| a.mul_small(k)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// `self^n` by repeated multiplication.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Content: canonical gcd of all coefficients (zero for the zero
    /// polynomial).
    pub fn content(&self) -> C {
        self.coeffs
            .iter()
            .fold(C::zero(), |acc, c| acc.gcd(c))
    }

    /// Divide every coefficient exactly by `d`; `None` if any division
    /// fails.
    pub fn exact_div_scalar(&self, d: &C) -> Option<Self> {
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.exact_div(d)?);
        }
        Some(UniPoly::new(out))
    }

    /// Exact polynomial division; `None` when `d` is zero or does not
    /// divide `self` in `C[x]`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        if self.deg() < d.deg() {
            return None;
        }
        let mut rem = self.clone();
        let mut q = vec![C::zero(); (self.deg() - d.deg()) as usize + 1];
        let dlc = d.lc();
        while !rem.is_zero() && rem.deg() >= d.deg() {
            let k = (rem.deg() - d.deg()) as usize;
            let c = rem.lc().exact_div(&dlc)?;
            rem = rem.sub(&d.shift_up(k).scale(&c));
            q[k] = c;
        }
        if rem.is_zero() {
            Some(UniPoly::new(q))
        } else {
            None
        }
    }

    /// Formal derivative with respect to `x`.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul_small(i as i64 + 1))
                .collect(),
        )
    }

    /// Substitute `x -> x + k` (Horner on the shifted variable).
    pub fn compose_shift(&self, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        // Horner: p(x+k) = (((a_d (x+k) + a_{d-1})(x+k) + ...)
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            // acc = acc*(x+k) + c
            let shifted = acc.shift_up(1).add(&acc.scale_small(k));
            acc = shifted.add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    /// Evaluate at an integer point, staying in the coefficient ring.
    pub fn eval_int(&self, n: i64) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_small(n) + c.clone();
        }
        acc
    }
}

impl<C: Coeff> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::fmt_poly(self, f)
    }
}

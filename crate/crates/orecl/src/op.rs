//! Ore operators: polynomials in the operator variable `D` with
//! coefficients in `R[x]`, multiplied through the commutation rule
//! `D p = sigma(p) D + delta(p)`.

use crate::algebra::Algebra;
use crate::domain::Coeff;
use crate::height::{Height, HeightMode};
use crate::poly::UniPoly;
use std::fmt;

/// An operator `sum_i l_i(x) D^i`; coefficient of `D^i` at index `i`, no
/// trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OreOperator<C: Coeff> {
    pub algebra: Algebra,
    coeffs: Vec<UniPoly<C>>,
}

impl<C: Coeff> OreOperator<C> {
    pub fn new(algebra: Algebra, coeffs: Vec<UniPoly<C>>) -> Self {
        let mut op = OreOperator { algebra, coeffs };
        op.trim();
        op
    }

    pub fn zero(algebra: Algebra) -> Self {
        OreOperator { algebra, coeffs: vec![] }
    }

    pub fn one(algebra: Algebra) -> Self {
        OreOperator { algebra, coeffs: vec![UniPoly::one()] }
    }

    /// The operator `D`.
    pub fn d(algebra: Algebra) -> Self {
        OreOperator { algebra, coeffs: vec![UniPoly::zero(), UniPoly::one()] }
    }

    /// An order-0 operator from a base-ring polynomial.
    pub fn from_poly(algebra: Algebra, p: UniPoly<C>) -> Self {
        OreOperator::new(algebra, vec![p])
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order; -1 for the zero operator.
    pub fn ord(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Maximum coefficient degree in `x`; -1 for the zero operator.
    pub fn deg(&self) -> i64 {
        self.coeffs.iter().map(|c| c.deg()).max().unwrap_or(-1)
    }

    /// Coefficient of `D^i`.
    pub fn coeff(&self, i: usize) -> UniPoly<C> {
        self.coeffs.get(i).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn coeffs(&self) -> &[UniPoly<C>] {
        &self.coeffs
    }

    /// Leading coefficient polynomial; zero for the zero operator.
    pub fn lc(&self) -> UniPoly<C> {
        self.coeffs.last().cloned().unwrap_or_else(UniPoly::zero)
    }

    /// Maximum coefficient height.
    pub fn height(&self, mode: HeightMode) -> Height {
        self.coeffs
            .iter()
            .map(|c| c.height(mode))
            .fold(mode.zero(), Height::max)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.algebra, rhs.algebra, "algebra mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        OreOperator::new(self.algebra, out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        OreOperator {
            algebra: self.algebra,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Left-multiply by a base-ring polynomial.
    pub fn scale_poly(&self, p: &UniPoly<C>) -> Self {
        if p.is_zero() {
            return OreOperator::zero(self.algebra);
        }
        OreOperator::new(
            self.algebra,
            self.coeffs.iter().map(|c| c.mul(p)).collect(),
        )
    }

    /// Left-multiply by a scalar.
    pub fn scale(&self, c: &C) -> Self {
        OreOperator::new(
            self.algebra,
            self.coeffs.iter().map(|a| a.scale(c)).collect(),
        )
    }

    /// Left-multiply by `D`: `D (l D^i) = sigma(l) D^{i+1} + delta(l) D^i`.
    pub fn mul_d(&self) -> Self {
        let a = self.algebra;
        let n = self.coeffs.len();
        let mut out = vec![UniPoly::zero(); n + 1];
        for (i, l) in self.coeffs.iter().enumerate() {
            out[i + 1] = out[i + 1].add(&a.sigma_k(l, 1));
            if !a.delta_is_zero() {
                out[i] = out[i].add(&a.delta(l));
            }
        }
        OreOperator::new(a, out)
    }

    /// Noncommutative product `self * rhs`.
    pub fn op_mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.algebra, rhs.algebra, "algebra mismatch");
        let mut acc = OreOperator::zero(self.algebra);
        // d_pow = D^i * rhs, built up incrementally
        let mut d_pow = rhs.clone();
        for (i, m) in self.coeffs.iter().enumerate() {
            if i > 0 {
                d_pow = d_pow.mul_d();
            }
            if !m.is_zero() {
                acc = acc.add(&d_pow.scale_poly(m));
            }
        }
        acc
    }

    /// `self^n` under the operator product.
    pub fn op_pow(&self, n: u32) -> Self {
        let mut acc = OreOperator::one(self.algebra);
        for _ in 0..n {
            acc = acc.op_mul(self);
        }
        acc
    }

    /// Apply the operator to a base-ring polynomial through the natural
    /// action of `D` (`d/dx`, the shift, or the forward difference).
    pub fn apply_poly(&self, p: &UniPoly<C>) -> UniPoly<C> {
        let a = self.algebra;
        let mut acc = UniPoly::zero();
        let mut dp = p.clone();
        for (i, l) in self.coeffs.iter().enumerate() {
            if i > 0 {
                dp = match a {
                    Algebra::Differential => dp.derivative(),
                    Algebra::Shift => dp.compose_shift(1),
                    Algebra::Difference => dp.compose_shift(1).sub(&dp),
                };
            }
            acc = acc.add(&dp.mul(l));
        }
        acc
    }

    /// Split off the content: returns `(c, L)` with `self = c * L` where
    /// `c` is the canonical gcd of all coefficients adjusted so that the
    /// leading term of `L` is normalized (positive over the integers,
    /// monic over `GF(p)[t]`).
    pub fn content_reduce(&self) -> (C, OreOperator<C>) {
        if self.is_zero() {
            return (C::zero(), self.clone());
        }
        let mut content = C::zero();
        for c in &self.coeffs {
            content = content.gcd(&c.content());
        }
        let reduced = OreOperator::new(
            self.algebra,
            self.coeffs
                .iter()
                .map(|c| c.exact_div_scalar(&content).expect("content divides"))
                .collect(),
        );
        let unit = reduced.lc().lc().normalizing_unit();
        let inv_unit = C::one().exact_div(&unit).expect("unit is invertible");
        (content * inv_unit, reduced.scale(&unit))
    }
}

impl OreOperator<num_bigint::BigInt> {
    /// Divide out the common polynomial factor of all coefficients,
    /// including the integer content, and canonicalize the sign.
    ///
    /// Applying an operator is linear over `R[x]` acting by left
    /// multiplication on the coefficients, so the reduced operator
    /// annihilates exactly the same functions.  Kernel-vector solutions of
    /// ansatz systems are built from matrix minors and often carry a large
    /// such factor; this recovers the minimal-size solution.  Returns
    /// `(factor, reduced)` with `self = factor * reduced` coefficientwise.
    pub fn poly_content_reduce(&self) -> (UniPoly<num_bigint::BigInt>, Self) {
        if self.is_zero() {
            return (UniPoly::zero(), self.clone());
        }
        let g = crate::linalg::zx::poly_gcd(&self.coeffs);
        let stripped = OreOperator::new(
            self.algebra,
            self.coeffs
                .iter()
                .map(|c| c.exact_div(&g).expect("gcd divides"))
                .collect(),
        );
        let (unit, reduced) = stripped.content_reduce();
        (g.scale(&unit), reduced)
    }
}

/// The rising factorial `p^[n] = p sigma(p) ... sigma^{n-1}(p)`; `1` when
/// `n = 0`.
pub fn rising_factorial<C: Coeff>(
    algebra: Algebra,
    p: &UniPoly<C>,
    n: u64,
) -> UniPoly<C> {
    let mut acc = UniPoly::one();
    for k in 0..n {
        acc = acc.mul(&algebra.sigma_k(p, k as i64));
    }
    acc
}

impl<C: Coeff> fmt::Display for OreOperator<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::fmt_op(self, f)
    }
}

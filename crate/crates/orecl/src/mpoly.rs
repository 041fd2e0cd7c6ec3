//! The extended ring `R[x][y_{i,j}]` on which operators act when
//! annihilators of polynomial expressions in several functions are
//! computed.
//!
//! The indeterminate `y_{i,j}` stands for `D^j` applied to the `i`-th
//! function.  `D` acts by `D . y_{i,j} = y_{i,j+1}`, on coefficients
//! through `sigma` and `delta`, and on products through the algebra's
//! product rule `D.(Q R) = alpha (D.Q)(D.R) + beta ((D.Q) R + Q (D.R)) +
//! gamma Q R`.

use crate::algebra::{Algebra, PartialMode};
use crate::domain::Coeff;
use crate::height::{Height, HeightMode};
use crate::poly::UniPoly;
use std::collections::BTreeMap;
use std::fmt;

/// A power product of the `y_{i,j}`: sorted list of `((comp, der), exp)`
/// with positive exponents.  Components are 0-based internally and
/// rendered 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    vars: Vec<((u32, u32), u32)>,
}

impl Monomial {
    /// The empty product.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// The single variable `y_{comp, der}`.
    pub fn var(comp: u32, der: u32) -> Self {
        Monomial { vars: vec![((comp, der), 1)] }
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[((u32, u32), u32)] {
        &self.vars
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut m: BTreeMap<(u32, u32), u32> = self.vars.iter().cloned().collect();
        for &(v, e) in &rhs.vars {
            *m.entry(v).or_insert(0) += e;
        }
        Monomial { vars: m.into_iter().filter(|&(_, e)| e > 0).collect() }
    }

    /// Total degree in the variables of component `comp`.
    pub fn comp_deg(&self, comp: u32) -> u32 {
        self.vars
            .iter()
            .filter(|((c, _), _)| *c == comp)
            .map(|(_, e)| e)
            .sum()
    }

    /// Total degree over all components.
    pub fn total_deg(&self) -> u32 {
        self.vars.iter().map(|(_, e)| e).sum()
    }

    /// Largest derivative index appearing for component `comp`.
    pub fn max_der(&self, comp: u32) -> Option<u32> {
        self.vars
            .iter()
            .filter(|((c, _), _)| *c == comp)
            .map(|((_, d), _)| *d)
            .max()
    }

    /// The variables repeated with multiplicity, e.g. `y^2 z -> [y, y, z]`.
    pub fn flatten(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for &((c, d), e) in &self.vars {
            for _ in 0..e {
                out.push((c, d));
            }
        }
        out
    }

    /// Shift every derivative index up by one (`y_{i,j} -> y_{i,j+1}`).
    pub fn shift_der(&self) -> Self {
        Monomial {
            vars: self.vars.iter().map(|&((c, d), e)| ((c, d + 1), e)).collect(),
        }
    }

    /// Exponent of `y_{comp, der}`.
    pub fn exp_of(&self, comp: u32, der: u32) -> u32 {
        self.vars
            .iter()
            .find(|((c, d), _)| *c == comp && *d == der)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Remove all powers of `y_{comp, der}`.
    pub fn without_var(&self, comp: u32, der: u32) -> Self {
        Monomial {
            vars: self
                .vars
                .iter()
                .filter(|((c, d), _)| !(*c == comp && *d == der))
                .cloned()
                .collect(),
        }
    }

    /// Divide by one power of `y_{comp, der}` (which must be present).
    pub fn div_var(&self, comp: u32, der: u32) -> Self {
        let mut vars = self.vars.clone();
        let k = vars
            .iter()
            .position(|((c, d), _)| *c == comp && *d == der)
            .expect("variable not present");
        if vars[k].1 == 1 {
            vars.remove(k);
        } else {
            vars[k].1 -= 1;
        }
        Monomial { vars }
    }

    fn from_flat(list: &[(u32, u32)]) -> Self {
        let mut m: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        for &v in list {
            *m.entry(v).or_insert(0) += 1;
        }
        Monomial { vars: m.into_iter().collect() }
    }
}

/// A polynomial in the `y_{i,j}` with coefficients in `R[x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly<C: Coeff> {
    terms: BTreeMap<Monomial, UniPoly<C>>,
}

impl<C: Coeff> MPoly<C> {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MPoly::from_poly(UniPoly::one())
    }

    /// A coefficient-ring element viewed as a y-free polynomial.
    pub fn from_poly(p: UniPoly<C>) -> Self {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(Monomial::one(), p);
        }
        MPoly { terms }
    }

    /// The variable `y_{comp, der}`.
    pub fn var(comp: u32, der: u32) -> Self {
        MPoly::term(Monomial::var(comp, der), UniPoly::one())
    }

    /// A single term `p * M`.
    pub fn term(m: Monomial, p: UniPoly<C>) -> Self {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(m, p);
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &UniPoly<C>)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> UniPoly<C> {
        self.terms.get(m).cloned().unwrap_or_else(UniPoly::zero)
    }

    fn insert_add(&mut self, m: Monomial, p: UniPoly<C>) {
        if p.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, p);
            }
            Some(q) => {
                let s = q.add(&p);
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, p) in &rhs.terms {
            out.insert_add(m.clone(), p.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MPoly {
            terms: self.terms.iter().map(|(m, p)| (m.clone(), p.neg())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = MPoly::zero();
        for (m1, p1) in &self.terms {
            for (m2, p2) in &rhs.terms {
                out.insert_add(m1.mul(m2), p1.mul(p2));
            }
        }
        out
    }

    pub fn scale_poly(&self, p: &UniPoly<C>) -> Self {
        if p.is_zero() {
            return MPoly::zero();
        }
        let mut out = MPoly::zero();
        for (m, q) in &self.terms {
            out.insert_add(m.clone(), q.mul(p));
        }
        out
    }

    pub fn scale_small(&self, k: i64) -> Self {
        let mut out = MPoly::zero();
        for (m, q) in &self.terms {
            out.insert_add(m.clone(), q.scale_small(k));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = MPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Apply a map to every coefficient polynomial.
    pub fn map_coeffs(&self, f: impl Fn(&UniPoly<C>) -> UniPoly<C>) -> Self {
        let mut out = MPoly::zero();
        for (m, p) in &self.terms {
            out.insert_add(m.clone(), f(p));
        }
        out
    }

    /// Maximum `x`-degree over all coefficients; -1 if zero.
    pub fn deg_x(&self) -> i64 {
        self.terms.values().map(|p| p.deg()).max().unwrap_or(-1)
    }

    /// Maximum coefficient height.
    pub fn height(&self, mode: HeightMode) -> Height {
        self.terms
            .values()
            .map(|p| p.height(mode))
            .fold(mode.zero(), Height::max)
    }

    /// Per-component total degree, as a maximum over terms.
    pub fn comp_deg(&self, comp: u32) -> u32 {
        self.terms.keys().map(|m| m.comp_deg(comp)).max().unwrap_or(0)
    }

    /// Whether every term has the same per-component degree vector
    /// `degs[i]` for components `0..degs.len()`.
    pub fn is_multihomogeneous(&self, degs: &[u32]) -> bool {
        self.terms.keys().all(|m| {
            (0..degs.len() as u32).all(|i| m.comp_deg(i) == degs[i as usize])
                && m.vars().iter().all(|((c, _), _)| (*c as usize) < degs.len())
        })
    }

    /// Largest derivative index of component `comp` over all terms.
    pub fn max_der(&self, comp: u32) -> Option<u32> {
        self.terms.keys().filter_map(|m| m.max_der(comp)).max()
    }

    /// Apply `D` once.
    ///
    /// In sigma mode (`delta = 0` only) `D` is the ring endomorphism
    /// `p -> sigma(p)`, `y_{i,j} -> y_{i,j+1}`.  In delta mode the action
    /// of `D` on a term `p M` is `sigma(p) (D.M) + delta(p) M`, with `D.M`
    /// expanded through the product rule and `D.1 = 0`.
    pub fn partial(&self, algebra: Algebra, mode: PartialMode) -> Self {
        match mode {
            PartialMode::Sigma => {
                debug_assert!(algebra.delta_is_zero());
                let mut out = MPoly::zero();
                for (m, p) in &self.terms {
                    out.insert_add(m.shift_der(), algebra.sigma_k(p, 1));
                }
                out
            }
            PartialMode::Delta => {
                let mut out = MPoly::zero();
                for (m, p) in &self.terms {
                    let dm = d_monomial::<C>(algebra, &m.flatten());
                    out = out.add(&dm.scale_poly(&algebra.sigma_k(p, 1)));
                    let dp = algebra.delta(p);
                    if !dp.is_zero() {
                        out.insert_add(m.clone(), dp);
                    }
                }
                out
            }
        }
    }

    /// Apply `D` `k` times.
    pub fn partial_k(&self, algebra: Algebra, mode: PartialMode, k: u32) -> Self {
        let mut acc = self.clone();
        for _ in 0..k {
            acc = acc.partial(algebra, mode);
        }
        acc
    }
}

/// `D` applied to a bare power product given as a flattened variable list,
/// through the product rule.  The empty product maps to zero.
fn d_monomial<C: Coeff>(algebra: Algebra, flat: &[(u32, u32)]) -> MPoly<C> {
    match flat {
        [] => MPoly::zero(),
        [(c, d)] => MPoly::var(*c, *d + 1),
        [(c, d), rest @ ..] => {
            let (alpha, beta, gamma) = algebra.product_rule();
            let dv = MPoly::<C>::var(*c, *d + 1);
            let v = MPoly::<C>::var(*c, *d);
            let drest = d_monomial::<C>(algebra, rest);
            let restm = MPoly::<C>::term(Monomial::from_flat(rest), UniPoly::one());
            let mut out = MPoly::zero();
            if alpha != 0 {
                out = out.add(&dv.mul(&drest).scale_small(alpha));
            }
            if beta != 0 {
                out = out.add(&dv.mul(&restm).add(&v.mul(&drest)).scale_small(beta));
            }
            if gamma != 0 {
                out = out.add(&v.mul(&restm).scale_small(gamma));
            }
            out
        }
    }
}

/// All monomials in `y_{i,j}`, `0 <= j < r[i]`, whose component degrees are
/// exactly `d[i]`, in their natural order.  This is the ambient basis for
/// annihilator computations; its size is the product of
/// `binom(d[i] + r[i] - 1, d[i])`.
pub fn enumerate_basis(r: &[u32], d: &[u32]) -> Vec<Monomial> {
    assert_eq!(r.len(), d.len());
    let mut out = vec![Monomial::one()];
    for (i, (&ri, &di)) in r.iter().zip(d.iter()).enumerate() {
        let comp = comp_monomials(i as u32, ri, di);
        let mut next = Vec::with_capacity(out.len() * comp.len());
        for m in &out {
            for c in &comp {
                next.push(m.mul(c));
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Degree-`d` monomials in the `r` variables of one component.
fn comp_monomials(comp: u32, r: u32, d: u32) -> Vec<Monomial> {
    fn rec(comp: u32, j: u32, r: u32, left: u32, cur: &Monomial, out: &mut Vec<Monomial>) {
        if j + 1 == r {
            let mut m = cur.clone();
            for _ in 0..left {
                m = m.mul(&Monomial::var(comp, j));
            }
            out.push(m);
            return;
        }
        for e in 0..=left {
            let mut m = cur.clone();
            for _ in 0..e {
                m = m.mul(&Monomial::var(comp, j));
            }
            rec(comp, j + 1, r, left - e, &m, out);
        }
    }
    assert!(r > 0, "component needs at least one derivative slot");
    let mut out = Vec::new();
    rec(comp, 0, r, d, &Monomial::one(), &mut out);
    out
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::fmt_monomial(self, f)
    }
}

impl<C: Coeff> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::text::fmt_mpoly(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type ZP = UniPoly<BigInt>;
    type ZM = MPoly<BigInt>;

    fn zp(v: &[i64]) -> ZP {
        UniPoly::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn y(c: u32, d: u32) -> ZM {
        MPoly::var(c, d)
    }

    #[test]
    fn ring_operations() {
        let p = y(0, 0).mul(&y(1, 0)).add(&ZM::from_poly(zp(&[0, 1])));
        let q = y(0, 0).sub(&ZM::one());
        let prod = p.mul(&q);
        assert_eq!(prod.sub(&q.mul(&p)), ZM::zero());
        assert_eq!(p.sub(&p), ZM::zero());
        assert_eq!(y(0, 0).pow(3).comp_deg(0), 3);
    }

    #[test]
    fn product_rule_differential() {
        // D.(y10 y20) = y11 y20 + y10 y21
        let p = y(0, 0).mul(&y(1, 0));
        let d = p.partial(Algebra::Differential, PartialMode::Delta);
        let want = y(0, 1).mul(&y(1, 0)).add(&y(0, 0).mul(&y(1, 1)));
        assert_eq!(d, want);
        // coefficient rule: D.(x y10) = x y11 + y10
        let p = y(0, 0).scale_poly(&zp(&[0, 1]));
        let d = p.partial(Algebra::Differential, PartialMode::Delta);
        let want = y(0, 1).scale_poly(&zp(&[0, 1])).add(&y(0, 0));
        assert_eq!(d, want);
    }

    #[test]
    fn product_rule_shift() {
        // sigma mode: ring endomorphism
        let p = y(0, 0).mul(&y(1, 0)).scale_poly(&zp(&[0, 1])).add(&ZM::one());
        let d = p.partial(Algebra::Shift, PartialMode::Sigma);
        let want = y(0, 1).mul(&y(1, 1)).scale_poly(&zp(&[1, 1])).add(&ZM::one());
        assert_eq!(d, want);
        // it is multiplicative
        let a = y(0, 0).add(&ZM::from_poly(zp(&[0, 1])));
        let b = y(1, 0).mul(&y(1, 0));
        let lhs = a.mul(&b).partial(Algebra::Shift, PartialMode::Sigma);
        let rhs = a
            .partial(Algebra::Shift, PartialMode::Sigma)
            .mul(&b.partial(Algebra::Shift, PartialMode::Sigma));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_rule_difference() {
        // D.(y10 y20) = y11 y21 + y11 y20 + y10 y21
        let p = y(0, 0).mul(&y(1, 0));
        let d = p.partial(Algebra::Difference, PartialMode::Delta);
        let want = y(0, 1)
            .mul(&y(1, 1))
            .add(&y(0, 1).mul(&y(1, 0)))
            .add(&y(0, 0).mul(&y(1, 1)));
        assert_eq!(d, want);
        // D.(x y10) = (x+1) y11 + y10
        let p = y(0, 0).scale_poly(&zp(&[0, 1]));
        let d = p.partial(Algebra::Difference, PartialMode::Delta);
        let want = y(0, 1).scale_poly(&zp(&[1, 1])).add(&y(0, 0));
        assert_eq!(d, want);
    }

    #[test]
    fn partial_preserves_multidegree() {
        let p = y(0, 0).pow(2).mul(&y(1, 1)).scale_poly(&zp(&[1, 2]));
        assert!(p.is_multihomogeneous(&[2, 1]));
        for (a, m) in [
            (Algebra::Differential, PartialMode::Delta),
            (Algebra::Shift, PartialMode::Sigma),
            (Algebra::Difference, PartialMode::Delta),
        ] {
            let d = p.partial_k(a, m, 3);
            assert!(d.is_multihomogeneous(&[2, 1]), "multidegree under {a}");
        }
    }

    #[test]
    fn basis_enumeration() {
        // one component, r=2, d=2: y0^2, y0 y1, y1^2
        let b = enumerate_basis(&[2], &[2]);
        assert_eq!(b.len(), 3);
        // two components (r,d) = (2,1) x (3,2): 2 * binom(4,2) = 12
        let b = enumerate_basis(&[2, 3], &[1, 2]);
        assert_eq!(b.len(), 12);
        // all distinct and of the right multidegree
        for m in &b {
            assert_eq!(m.comp_deg(0), 1);
            assert_eq!(m.comp_deg(1), 2);
        }
        let mut c = b.clone();
        c.dedup();
        assert_eq!(c.len(), b.len());
    }

    #[test]
    fn max_der_tracking() {
        let p = y(0, 0).mul(&y(0, 3)).add(&y(1, 1));
        assert_eq!(p.max_der(0), Some(3));
        assert_eq!(p.max_der(1), Some(1));
        assert_eq!(p.max_der(2), None);
    }
}

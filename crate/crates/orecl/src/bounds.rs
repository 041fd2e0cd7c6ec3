//! A-priori size bounds for closure-property outputs.
//!
//! Everything in this module is arithmetic on sizes: orders, degrees, and
//! heights.  No operator data is touched.  The bound evaluators mirror the
//! estimates that come with each ansatz construction in [`crate::closure`]
//! and are used both to predict ansatz dimensions and as checkable upper
//! bounds in the experiment harness.  Orders and degrees are kept as big
//! integers because the annihilator bounds (`m = r^r` for the Wronskian)
//! overflow machine words already for moderate input orders.

use num_bigint::{BigInt, BigUint};
use num_integer::{binomial, Integer};
use num_traits::{One, ToPrimitive};
use std::fmt;

use crate::algebra::Algebra;
use crate::domain::{Coeff, Domain, DomainKind};
use crate::error::{Error, Result};
use crate::height::Height;
use crate::op::OreOperator;

/// Order, degree, and height of one operator, as consumed by the bound
/// formulas.  Degrees of zero polynomials clamp to 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpShape {
    pub ord: u64,
    pub deg: u64,
    pub height: Height,
}

impl OpShape {
    pub fn new(ord: u64, deg: u64, height: Height) -> OpShape {
        OpShape { ord, deg, height }
    }

    /// Measures a concrete operator under the domain's height mode.
    pub fn measure<C: Coeff>(op: &OreOperator<C>, domain: &Domain) -> OpShape {
        OpShape {
            ord: op.ord().max(0) as u64,
            deg: op.deg().max(0) as u64,
            height: op.height(domain.mode),
        }
    }
}

/// An a-priori bound on order, degree, and height of a constructed operator.
/// `height` is `None` for the order-degree curves, which do not come with a
/// height estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct SizeBound {
    pub order: BigUint,
    pub degree: BigUint,
    pub height: Option<Height>,
}

impl fmt::Display for SizeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ord <= {}, deg <= {}", self.order, self.degree)?;
        if let Some(h) = self.height {
            write!(f, ", height <= {h}")?;
        }
        Ok(())
    }
}

fn big_u64(n: u64) -> BigUint {
    BigUint::from(n)
}

fn big_to_f64(n: &BigUint) -> f64 {
    match n.to_f64() {
        Some(v) if v.is_finite() => v,
        _ => f64::INFINITY,
    }
}

/// Height of a big nonnegative integer as a ring constant.
fn big_height(domain: &Domain, n: &BigUint) -> Height {
    domain.big_height(&BigInt::from(n.clone()))
}

/// `h * k` for a big scale factor.
fn scale_big(h: Height, k: &BigUint) -> Height {
    match k.to_i64() {
        Some(v) => h.scale(v),
        None => Height::Real(h.value() * big_to_f64(k)),
    }
}

/// `c^{(n)}(d, h)` where the iteration count may exceed machine range.  For
/// astronomically large `n` the closed forms are evaluated in floating point.
fn c_iter_big(algebra: Algebra, domain: &Domain, n: &BigUint, d: u64, h: Height) -> Height {
    if let Some(k) = n.to_u64() {
        if k <= i64::MAX as u64 {
            return algebra.c_iter(domain, k, d, h);
        }
    }
    let nf = big_to_f64(n);
    match algebra {
        Algebra::Differential => Height::Real(
            h.value() + nf * (domain.int_height(1).value() + domain.int_height(d as i64).value()),
        ),
        Algebra::Difference => Height::Real(
            h.value()
                + nf * (d as f64 * domain.int_height(2).value() + domain.int_height(1).value()),
        ),
        Algebra::Shift => match domain.kind {
            DomainKind::Int => Height::Real(d as f64 * (nf + 2.0).ln() + h.value()),
            // the shift orbit of a constant is periodic mod p, so the
            // maximum over one period equals the maximum over all of them
            DomainKind::Gf { p } => algebra.c_iter(domain, p as u64 + 2, d, h),
        },
    }
}

/// Degree and height bound for the nullspace vector of an `n x m` matrix
/// (`n < m`) over `R[x]` whose entries have degree at most `d` and height at
/// most `h`: each coordinate is (up to sign) an `n x n` minor, so its degree
/// is at most `n d` and its height at most `h(n!) + (n-1) h(d) + n h`.
pub fn bound_kernel_vector(domain: &Domain, n: u64, d: u64, h: Height) -> (u64, Height) {
    let height = domain.factorial_height(&big_u64(n))
        + domain.int_height(d as i64).scale(n.saturating_sub(1) as i64)
        + h.scale(n as i64);
    (n * d, height)
}

/// Size of a product `M L` of operators: orders and degrees add, and
/// `h(ML) <= h(ord M) + h(min(deg M, deg L)) + h(M) + c^(ord M)(deg L, h(L))`.
pub fn bound_op_mul(domain: &Domain, algebra: Algebra, m: &OpShape, l: &OpShape) -> SizeBound {
    let height = domain.int_height(m.ord as i64)
        + domain.int_height(m.deg.min(l.deg) as i64)
        + m.height
        + algebra.c_iter(domain, m.ord, l.deg, l.height);
    SizeBound {
        order: big_u64(m.ord + l.ord),
        degree: big_u64(m.deg + l.deg),
        height: Some(height),
    }
}

/// Degree and height of the shifted factorial
/// `p^[n] = p sigma(p) ... sigma^(n-1)(p)` for `deg(p) <= d`, `h(p) <= h`:
/// the degree is at most `n d` and the height at most
/// `(n-1) h(d) + n c^(n-1)(d, h)`.
pub fn bound_rising_factorial(
    domain: &Domain,
    algebra: Algebra,
    n: u64,
    d: u64,
    h: Height,
) -> (u64, Height) {
    if n == 0 {
        return (0, domain.int_height(1));
    }
    let height = domain.int_height(d as i64).scale(n as i64 - 1)
        + algebra.c_iter(domain, n - 1, d, h).scale(n as i64);
    (n * d, height)
}

/// Bound for a common left multiple of order `r = sum_k ord(L_k)`.  With
/// `N = n(r+1) - r` (the ansatz dimension), `d = max deg` and `h = max
/// height`, the multiple satisfies `deg <= N d` and
/// `h <= h(r) + h((N-1)!) + (N-1) h(d) + N c^(r)(d, h)`.
pub fn bound_lclm(domain: &Domain, algebra: Algebra, shapes: &[OpShape]) -> Result<SizeBound> {
    if shapes.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = shapes.len() as u64;
    let r: u64 = shapes.iter().map(|s| s.ord).sum();
    let d: u64 = shapes.iter().map(|s| s.deg).max().unwrap();
    let h = shapes
        .iter()
        .map(|s| s.height)
        .fold(Height::ZERO, Height::max);
    let nn = n * (r + 1) - r;
    let height = domain.int_height(r as i64)
        + domain.factorial_height(&big_u64(nn - 1))
        + domain.int_height(d as i64).scale(nn as i64 - 1)
        + algebra.c_iter(domain, r, d, h).scale(nn as i64);
    Ok(SizeBound {
        order: big_u64(r),
        degree: big_u64(nn * d),
        height: Some(height),
    })
}

/// The ansatz order `m = prod_i binom(D_i + r_i - 1, D_i)` for an
/// annihilator of a polynomial of multidegree `(D_i)` in components of
/// orders `(r_i)`.  This is the number of monomials `prod_j y_{i,j}^{e_j}`
/// of exact component degrees `(D_i)` with derivative orders below `(r_i)`.
pub fn annihilator_order(orders: &[u64], multideg: &[u64]) -> Result<BigUint> {
    if orders.is_empty() || orders.len() != multideg.len() {
        return Err(Error::Mismatch(format!(
            "{} component orders for {} multidegree entries",
            orders.len(),
            multideg.len()
        )));
    }
    let mut m = BigUint::one();
    for (&r, &d) in orders.iter().zip(multideg) {
        if r == 0 && d > 0 {
            return Err(Error::OrdPrecondition(
                "component operators must have positive order".into(),
            ));
        }
        if d > 0 {
            m *= binomial(big_u64(d + r - 1), big_u64(d));
        }
    }
    Ok(m)
}

/// Bound for an annihilator of a homogeneous polynomial expression `P` of
/// multidegree `multideg` in the components, with `deg(P) <= deg_p` in `x`
/// and `h(P) <= height_p`.  With `m` the ansatz order the annihilator
/// satisfies `deg <= m deg(P) + m^2 sum_i D_i d_i` and
/// `h <= h(m!) + m c^(m)(deg P, h(P)) + (m-1) h(deg P + m sum_i D_i d_i)
///  + m^2 sum_i (h(4) D_i + h(D_i+1) + D_i h(r_i+m) + h(d_i) + c^(m)(d_i, h_i))`.
pub fn bound_annihilator(
    domain: &Domain,
    algebra: Algebra,
    comps: &[OpShape],
    multideg: &[u64],
    deg_p: u64,
    height_p: Height,
) -> Result<SizeBound> {
    let orders: Vec<u64> = comps.iter().map(|s| s.ord).collect();
    let m = annihilator_order(&orders, multideg)?;
    let m2 = &m * &m;
    let sum_dd: u64 = comps
        .iter()
        .zip(multideg)
        .map(|(s, &di)| di * s.deg)
        .sum();
    let degree = &m * big_u64(deg_p) + &m2 * big_u64(sum_dd);

    let inner_deg = big_u64(deg_p) + &m * big_u64(sum_dd);
    let mut comp_sum = Height::ZERO;
    for (s, &di) in comps.iter().zip(multideg) {
        comp_sum = comp_sum
            + domain.int_height(4).scale(di as i64)
            + domain.int_height(di as i64 + 1)
            + scale_big(big_height(domain, &(&m + big_u64(s.ord))), &big_u64(di))
            + domain.int_height(s.deg as i64)
            + c_iter_big(algebra, domain, &m, s.deg, s.height);
    }
    let height = domain.factorial_height(&m)
        + scale_big(c_iter_big(algebra, domain, &m, deg_p, height_p), &m)
        + scale_big(big_height(domain, &inner_deg), &(&m - 1u32))
        + scale_big(comp_sum, &m2);
    Ok(SizeBound {
        order: m,
        degree,
        height: Some(height),
    })
}

/// Bound for an annihilator of the product `f_1 f_2` of solutions of two
/// operators: with `m = r_1 r_2`, `d = max deg`, `h = max height`, the
/// product is annihilated by `M` with `deg(M) <= 2 d m^2` and
/// `h(M) <= h(m!) + (m-1) h(2 m d) + m h(1)
///  + 2 m^2 (2 h(4) + 3 h(m) + h(d) + c^(m)(d, h))`.
pub fn bound_sym_product(
    domain: &Domain,
    algebra: Algebra,
    s1: &OpShape,
    s2: &OpShape,
) -> Result<SizeBound> {
    if s1.ord == 0 || s2.ord == 0 {
        return Err(Error::OrdPrecondition(
            "component operators must have positive order".into(),
        ));
    }
    let d = s1.deg.max(s2.deg);
    let h = s1.height.max(s2.height);
    let m = big_u64(s1.ord) * big_u64(s2.ord);
    let m2 = &m * &m;
    let inner = domain.int_height(4).scale(2)
        + scale_big(big_height(domain, &m), &big_u64(3))
        + domain.int_height(d as i64)
        + c_iter_big(algebra, domain, &m, d, h);
    let height = domain.factorial_height(&m)
        + scale_big(big_height(domain, &(&m * big_u64(2 * d))), &(&m - 1u32))
        + scale_big(domain.int_height(1), &m)
        + scale_big(inner, &(2u32 * &m2));
    Ok(SizeBound {
        order: m,
        degree: 2u32 * m2 * d,
        height: Some(height),
    })
}

/// Bound for an annihilator of the power `f^k` of a solution of one
/// operator of order `r`: with `m = binom(k+r, k)` the power is annihilated
/// by `M` with `deg(M) <= k d m^2` and
/// `h(M) <= h(m!) + m h(1) + (m-1) h(m k d)
///  + m^2 (k h(4) + h(k+1) + k h(r+m) + h(d) + c^(m)(d, h))`.
///
/// The binomial `binom(k+r, k)` here is one shift above the general ansatz
/// order `binom(k+r-1, k)` of [`bound_annihilator`] applied to `y^k`; both
/// are valid bounds and the sharper one is obtained from
/// [`bound_annihilator`] directly.
pub fn bound_sym_power(
    domain: &Domain,
    algebra: Algebra,
    s: &OpShape,
    k: u64,
) -> Result<SizeBound> {
    if s.ord == 0 {
        return Err(Error::OrdPrecondition(
            "component operators must have positive order".into(),
        ));
    }
    let (r, d, h) = (s.ord, s.deg, s.height);
    let m = binomial(big_u64(k + r), big_u64(k));
    let m2 = &m * &m;
    let inner = domain.int_height(4).scale(k as i64)
        + domain.int_height(k as i64 + 1)
        + scale_big(big_height(domain, &(&m + big_u64(r))), &big_u64(k))
        + domain.int_height(d as i64)
        + c_iter_big(algebra, domain, &m, d, h);
    let height = domain.factorial_height(&m)
        + scale_big(domain.int_height(1), &m)
        + scale_big(big_height(domain, &(&m * big_u64(k * d))), &(&m - 1u32))
        + scale_big(inner, &m2);
    Ok(SizeBound {
        order: m,
        degree: big_u64(k * d) * m2,
        height: Some(height),
    })
}

/// Bound for an annihilator of `A . f` where `f` solves `L` and
/// `ord(A) < ord(L) = r`:
/// `deg(M) <= r deg(A) + r^2 deg(L)` and
/// `h(M) <= h(r!) + r c^(r)(deg A, h(A)) + (r-1) h(deg A + r deg L)
///  + r^2 (4 h(2) + h(r) + h(deg L) + c^(r)(deg L, h(L)))`.
pub fn bound_associate(
    domain: &Domain,
    algebra: Algebra,
    l: &OpShape,
    a: &OpShape,
) -> Result<SizeBound> {
    if a.ord >= l.ord {
        return Err(Error::OrdPrecondition(format!(
            "ord(A) = {} must be below ord(L) = {}",
            a.ord, l.ord
        )));
    }
    let r = l.ord;
    let inner = domain.int_height(2).scale(4)
        + domain.int_height(r as i64)
        + domain.int_height(l.deg as i64)
        + algebra.c_iter(domain, r, l.deg, l.height);
    let height = domain.factorial_height(&big_u64(r))
        + algebra.c_iter(domain, r, a.deg, a.height).scale(r as i64)
        + domain
            .int_height((a.deg + r * l.deg) as i64)
            .scale(r as i64 - 1)
        + scale_big(inner, &(big_u64(r) * big_u64(r)));
    Ok(SizeBound {
        order: big_u64(r),
        degree: big_u64(r) * big_u64(a.deg) + big_u64(r) * big_u64(r) * big_u64(l.deg),
        height: Some(height),
    })
}

/// Bound for an annihilator of the Wronskian of solutions of `r` operators
/// of order `r`, degree at most `d`, height at most `h`: with `m = r^r`,
/// `deg(M) <= m^2 r^2 d` and
/// `h(M) <= h(m!) + m h(1) + (m-1) h(m r^2 d)
///  + m^2 r ((r+1)(h(4) + h(r)) + h(d) + c^(m)(d, h))`.
pub fn bound_wronskian(
    domain: &Domain,
    algebra: Algebra,
    r: u64,
    d: u64,
    h: Height,
) -> Result<SizeBound> {
    if r == 0 {
        return Err(Error::OrdPrecondition(
            "component operators must have positive order".into(),
        ));
    }
    let exp = u32::try_from(r)
        .map_err(|_| Error::Unsupported(format!("wronskian order {r} too large")))?;
    let m = big_u64(r).pow(exp);
    let m2 = &m * &m;
    let inner = scale_big(
        domain.int_height(4) + domain.int_height(r as i64),
        &big_u64(r + 1),
    ) + domain.int_height(d as i64)
        + c_iter_big(algebra, domain, &m, d, h);
    let height = domain.factorial_height(&m)
        + scale_big(domain.int_height(1), &m)
        + scale_big(
            big_height(domain, &(&m * big_u64(r * r * d))),
            &(&m - 1u32),
        )
        + scale_big(inner, &(&m2 * big_u64(r)));
    Ok(SizeBound {
        order: m,
        degree: m2 * big_u64(r * r * d),
        height: Some(height),
    })
}

/// Order-degree curve for common left multiples: the least degree `d` such
/// that a common left multiple of order `r` and degree `d` is guaranteed,
/// `d = ceil(((r+1) sum d_k - sum r_k d_k) / (r + 1 - sum r_k))`.
/// `shapes` lists `(ord, deg)` per operator; requires `r >= sum r_k`.
pub fn curve_lclm(shapes: &[(u64, u64)], r: u64) -> Result<u64> {
    if shapes.is_empty() {
        return Err(Error::EmptyInput);
    }
    let sr: u64 = shapes.iter().map(|s| s.0).sum();
    let sd: u64 = shapes.iter().map(|s| s.1).sum();
    let srd: u64 = shapes.iter().map(|s| s.0 * s.1).sum();
    if r < sr {
        return Err(Error::OrderTooSmall);
    }
    let num = (r as u128 + 1) * sd as u128 - srd as u128;
    let den = (r - sr) as u128 + 1;
    Ok(num.div_ceil(den) as u64)
}

/// Ansatz dimensions for a common left multiple of order `r` and degree `d`:
/// `(variables, equations)`.  A nontrivial solution is guaranteed whenever
/// `variables > equations`.
pub fn clm_counts(shapes: &[(u64, u64)], r: u64, d: u64) -> (u64, u64) {
    let n = shapes.len() as u64;
    let vars = shapes
        .iter()
        .map(|&(rk, dk)| (r + 1).saturating_sub(rk) * (d + 1).saturating_sub(dk))
        .sum();
    let eqs = n.saturating_sub(1) * (r + 1) * (d + 1);
    (vars, eqs)
}

/// Order-degree curve for annihilators of polynomial expressions: the least
/// degree `d` such that an annihilator of order `r` and degree `d` is
/// guaranteed, `d = ceil(m (r sum_i D_i d_i + deg P) / (r + 1 - m))` with
/// `m` the ansatz order.  `comps` lists `(ord, deg)` per component;
/// requires `r >= m`.
pub fn curve_poly(comps: &[(u64, u64)], multideg: &[u64], deg_p: u64, r: u64) -> Result<u64> {
    let orders: Vec<u64> = comps.iter().map(|s| s.0).collect();
    let m = annihilator_order(&orders, multideg)?;
    if big_u64(r) < m {
        return Err(Error::OrderTooSmall);
    }
    let sum_dd: u64 = comps.iter().zip(multideg).map(|(s, &di)| di * s.1).sum();
    let num = &m * (big_u64(r) * big_u64(sum_dd) + big_u64(deg_p));
    let den = big_u64(r) + BigUint::one() - &m;
    let d = Integer::div_ceil(&num, &den);
    d.to_u64()
        .ok_or_else(|| Error::Unsupported("curve degree exceeds machine range".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_shape(s: u64) -> OpShape {
        OpShape::new(s, s, Height::Real(s as f64))
    }

    #[test]
    fn lclm_bound_integer_shift() {
        // two operators of order, degree, height s in the shift algebra over
        // the integers; for s = 2 the height bound evaluates to
        // ln 5 + ln 121 + 5 ln 3 + 6 (2 ln 6 + 2) = 45.3994...
        let dom = Domain::int();
        let b = bound_lclm(&dom, Algebra::Shift, &[int_shape(2), int_shape(2)]).unwrap();
        assert_eq!(b.order, BigUint::from(4u32));
        assert_eq!(b.degree, BigUint::from(12u32));
        let h = b.height.unwrap().value();
        assert!((h - 45.39940353210805).abs() < 1e-9, "h = {h}");
    }

    #[test]
    fn lclm_bound_gf_degrees() {
        // over GF(p)[t] with the pure-degree height the bound is exact
        // integer arithmetic: (2s+2)s for degree and height alike
        let dom = Domain::gf(1091).unwrap();
        for s in [2u64, 4, 8, 16, 32] {
            let sh = OpShape::new(s, s, Height::Exact(s as i64));
            let b = bound_lclm(&dom, Algebra::Shift, &[sh, sh]).unwrap();
            assert_eq!(b.degree, BigUint::from((2 * s + 2) * s));
            assert_eq!(b.height.unwrap(), Height::Exact(((2 * s + 2) * s) as i64));
        }
    }

    #[test]
    fn lclm_curve_values() {
        let shapes = [(5u64, 5u64); 3];
        assert!(matches!(curve_lclm(&shapes, 14), Err(Error::OrderTooSmall)));
        for (r, d) in [(15, 165), (16, 90), (18, 53), (20, 40), (24, 30)] {
            assert_eq!(curve_lclm(&shapes, r).unwrap(), d);
        }
        // the curve is monotone non-increasing in the order
        let mut prev = u64::MAX;
        for r in 15..80 {
            let d = curve_lclm(&shapes, r).unwrap();
            assert!(d <= prev);
            prev = d;
        }
    }

    #[test]
    fn clm_count_dichotomy() {
        // for two operators of shape (2,2), the curve at r = 4 gives d = 12,
        // and the counting argument flips exactly there
        let shapes = [(2u64, 2u64); 2];
        assert_eq!(curve_lclm(&shapes, 4).unwrap(), 12);
        let (v, e) = clm_counts(&shapes, 4, 12);
        assert!(v > e);
        let (v, e) = clm_counts(&shapes, 4, 11);
        assert!(v <= e);
    }

    #[test]
    fn sym_product_degree_table() {
        // degree bound 2 d m^2 with m = s^2: 64, 486, 2048, 6250 for s = 2..5
        let dom = Domain::int();
        for (s, expect) in [(2u64, 64u64), (3, 486), (4, 2048), (5, 6250)] {
            let b =
                bound_sym_product(&dom, Algebra::Differential, &int_shape(s), &int_shape(s))
                    .unwrap();
            assert_eq!(b.order, BigUint::from(s * s));
            assert_eq!(b.degree, BigUint::from(expect));
            assert!(b.height.unwrap().value() > 0.0);
        }
    }

    #[test]
    fn sym_power_order_variants() {
        // the convenience bound uses binom(k+r, k); the general ansatz order
        // for y^k is binom(k+r-1, k)
        let dom = Domain::int();
        let s = OpShape::new(2, 3, Height::Real(1.0));
        let b = bound_sym_power(&dom, Algebra::Differential, &s, 3).unwrap();
        assert_eq!(b.order, BigUint::from(10u32));
        let g = bound_annihilator(&dom, Algebra::Differential, &[s], &[3], 0, Height::ZERO)
            .unwrap();
        assert_eq!(g.order, BigUint::from(4u32));
    }

    #[test]
    fn associate_requires_lower_order() {
        let dom = Domain::int();
        let l = OpShape::new(3, 2, Height::Real(1.0));
        let a = OpShape::new(3, 1, Height::Real(1.0));
        assert!(bound_associate(&dom, Algebra::Differential, &l, &a).is_err());
        let a = OpShape::new(2, 1, Height::Real(1.0));
        let b = bound_associate(&dom, Algebra::Differential, &l, &a).unwrap();
        assert_eq!(b.order, BigUint::from(3u32));
        assert_eq!(b.degree, BigUint::from(3 + 9 * 2u32));
    }

    #[test]
    fn wronskian_and_poly_curve() {
        let dom = Domain::int();
        let b = bound_wronskian(&dom, Algebra::Shift, 3, 3, Height::Real(3.0)).unwrap();
        assert_eq!(b.order, BigUint::from(27u32));
        assert_eq!(b.degree, BigUint::from(27u32 * 27 * 9 * 3));

        // curve for the same Wronskian: multidegree (1,1,1) over three
        // order-3 components gives m = 27 and degree 6561 at order 27
        let comps = [(3u64, 3u64); 3];
        let md = [1u64, 1, 1];
        assert!(matches!(
            curve_poly(&comps, &md, 0, 26),
            Err(Error::OrderTooSmall)
        ));
        assert_eq!(curve_poly(&comps, &md, 0, 27).unwrap(), 6561);
        let mut prev = u64::MAX;
        for r in 27..120 {
            let d = curve_poly(&comps, &md, 0, r).unwrap();
            assert!(d <= prev);
            prev = d;
        }
    }

    #[test]
    fn kernel_vector_bound_values() {
        let dom = Domain::int();
        let (d, h) = bound_kernel_vector(&dom, 2, 3, Height::Real(1.0));
        assert_eq!(d, 6);
        // h(2!) + h(3) + 2 = ln 3 + ln 4 + 2
        assert!((h.value() - (3f64.ln() + 4f64.ln() + 2.0)).abs() < 1e-12);
    }

    #[test]
    fn rising_factorial_bound() {
        let dom = Domain::int();
        // shift algebra: (n-1) h(d) + n (d h(n) + h)
        let (d, h) = bound_rising_factorial(&dom, Algebra::Shift, 3, 2, Height::Real(1.0));
        assert_eq!(d, 6);
        let expect = 2.0 * 3f64.ln() + 3.0 * (2.0 * 4f64.ln() + 1.0);
        assert!((h.value() - expect).abs() < 1e-12, "h = {}", h.value());
    }
}

//! Exact solution streams and numerical-free verification.
//!
//! The constructions in [`crate::closure`] come with proofs, but every
//! computed operator can also be checked against actual solutions: unroll
//! random exact solutions of the component operators (sequences for the
//! shift and difference algebras, truncated power series for the
//! differential algebra), evaluate the polynomial expression on them, apply
//! the candidate operator, and test for zero.  All arithmetic is exact —
//! rationals over the integers, residues after evaluating `t` at a random
//! point over `GF(p)[t]` — so a passing check is a proof of the identity at
//! the sampled points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use crate::algebra::Algebra;
use crate::closure::OreSystem;
use crate::domain::{Coeff, Domain, DomainKind};
use crate::error::{Error, Result};
use crate::gf::{self, GfPoly};
use crate::mpoly::MPoly;
use crate::op::OreOperator;
use crate::poly::UniPoly;

/// Number of check points used by the convenience wrappers.
pub const DEFAULT_CHECK_POINTS: usize = 50;

/// How far the window/center searches look before giving up.
const MAX_SEARCH: i64 = 2000;

// ---------------------------------------------------------------------------
// Stream scalars

/// Evaluation context for a stream: the coefficient domain and, for
/// `GF(p)[t]`, the sample point for `t`.
#[derive(Debug, Clone, Copy)]
pub struct StreamCtx {
    pub kind: DomainKind,
    pub tau: i64,
}

impl StreamCtx {
    /// Fresh context; over `GF(p)[t]` the variable `t` is evaluated at a
    /// random residue.
    pub fn new<R: Rng>(domain: &Domain, rng: &mut R) -> Self {
        let tau = match domain.modulus() {
            Some(p) => rng.gen_range(0..p),
            None => 0,
        };
        StreamCtx {
            kind: domain.kind,
            tau,
        }
    }

    fn p(&self) -> i64 {
        match self.kind {
            DomainKind::Gf { p } => p,
            DomainKind::Int => panic!("integer context has no modulus"),
        }
    }
}

/// Coefficient rings whose solutions can be unrolled in an exact field.
pub trait StreamScalar: Coeff {
    /// The field of stream values.
    type F: Clone + PartialEq + std::fmt::Debug;

    /// Image of a ring element in the stream field.
    fn embed(&self, ctx: &StreamCtx) -> Self::F;
    fn f_from_i64(n: i64, ctx: &StreamCtx) -> Self::F;
    fn f_add(a: &Self::F, b: &Self::F, ctx: &StreamCtx) -> Self::F;
    fn f_sub(a: &Self::F, b: &Self::F, ctx: &StreamCtx) -> Self::F;
    fn f_mul(a: &Self::F, b: &Self::F, ctx: &StreamCtx) -> Self::F;
    /// Exact division; the divisor must be nonzero.
    fn f_div(a: &Self::F, b: &Self::F, ctx: &StreamCtx) -> Self::F;
    fn f_is_zero(a: &Self::F) -> bool;
    /// A small random nonzero value, used for initial conditions.
    fn f_random<R: Rng>(rng: &mut R, ctx: &StreamCtx) -> Self::F;
}

impl StreamScalar for BigInt {
    type F = BigRational;

    fn embed(&self, _ctx: &StreamCtx) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn f_from_i64(n: i64, _ctx: &StreamCtx) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn f_add(a: &BigRational, b: &BigRational, _ctx: &StreamCtx) -> BigRational {
        a + b
    }

    fn f_sub(a: &BigRational, b: &BigRational, _ctx: &StreamCtx) -> BigRational {
        a - b
    }

    fn f_mul(a: &BigRational, b: &BigRational, _ctx: &StreamCtx) -> BigRational {
        a * b
    }

    fn f_div(a: &BigRational, b: &BigRational, _ctx: &StreamCtx) -> BigRational {
        a / b
    }

    fn f_is_zero(a: &BigRational) -> bool {
        a.is_zero()
    }

    fn f_random<R: Rng>(rng: &mut R, _ctx: &StreamCtx) -> BigRational {
        let mut v = 0i64;
        while v == 0 {
            v = rng.gen_range(-9..=9);
        }
        BigRational::from_integer(v.into())
    }
}

impl StreamScalar for GfPoly {
    /// Residues modulo `p`, canonical in `0..p`.
    type F = i64;

    fn embed(&self, ctx: &StreamCtx) -> i64 {
        let p = ctx.p();
        ((self.eval(ctx.tau) % p) + p) % p
    }

    fn f_from_i64(n: i64, ctx: &StreamCtx) -> i64 {
        let p = ctx.p();
        ((n % p) + p) % p
    }

    fn f_add(a: &i64, b: &i64, ctx: &StreamCtx) -> i64 {
        (a + b) % ctx.p()
    }

    fn f_sub(a: &i64, b: &i64, ctx: &StreamCtx) -> i64 {
        let p = ctx.p();
        ((a - b) % p + p) % p
    }

    fn f_mul(a: &i64, b: &i64, ctx: &StreamCtx) -> i64 {
        // moduli stay below 2^31, so the product fits in i64
        (a * b) % ctx.p()
    }

    fn f_div(a: &i64, b: &i64, ctx: &StreamCtx) -> i64 {
        let p = ctx.p();
        (a * gf::inv_mod(*b, p)) % p
    }

    fn f_is_zero(a: &i64) -> bool {
        *a == 0
    }

    fn f_random<R: Rng>(rng: &mut R, ctx: &StreamCtx) -> i64 {
        let hi = ctx.p().min(10);
        rng.gen_range(1..hi.max(2))
    }
}

/// Evaluates a coefficient polynomial at the integer point `n` inside the
/// stream field.
fn eval_in_field<S: StreamScalar>(poly: &UniPoly<S>, n: i64, ctx: &StreamCtx) -> S::F {
    let x = S::f_from_i64(n, ctx);
    let mut acc = S::f_from_i64(0, ctx);
    for c in poly.coeffs().iter().rev() {
        acc = S::f_add(&S::f_mul(&acc, &x, ctx), &c.embed(ctx), ctx);
    }
    acc
}

/// Falling factorial `m (m-1) ... (m-i+1)` in the stream field.
fn falling<S: StreamScalar>(m: i64, i: i64, ctx: &StreamCtx) -> S::F {
    let mut acc = S::f_from_i64(1, ctx);
    for t in 0..i {
        acc = S::f_mul(&acc, &S::f_from_i64(m - t, ctx), ctx);
    }
    acc
}

// ---------------------------------------------------------------------------
// Recurrence unrolling (shift and difference algebras)

/// Rewrites a shift- or difference-algebra operator as a plain recurrence
/// `sum_t q_t(x) S^t` on the shift `S`.  In the shift algebra this is the
/// operator itself; in the difference algebra, each power of the forward
/// difference is expanded as `(S - 1)^k`.
pub fn shift_recurrence<C: Coeff>(op: &OreOperator<C>) -> OreOperator<C> {
    match op.algebra {
        Algebra::Shift => op.clone(),
        Algebra::Difference => {
            let step = OreOperator::d(Algebra::Shift).sub(&OreOperator::one(Algebra::Shift));
            let mut acc = OreOperator::zero(Algebra::Shift);
            let mut pow = OreOperator::one(Algebra::Shift);
            for k in 0..=op.ord().max(0) as usize {
                if k > 0 {
                    pow = pow.op_mul(&step);
                }
                let c = op.coeff(k);
                if !c.is_zero() {
                    acc = acc.add(&pow.scale_poly(&c));
                }
            }
            acc
        }
        Algebra::Differential => unreachable!("no sequence recurrence for differential operators"),
    }
}

/// Searches an offset `a >= 0` such that none of the polynomials vanishes
/// at any of `a, a+1, ..., a+len-1` (in the stream field).
fn find_window<S: StreamScalar>(lcs: &[UniPoly<S>], ctx: &StreamCtx, len: usize) -> Result<i64> {
    'outer: for a in 0..=MAX_SEARCH {
        for n in a..a + len as i64 {
            if lcs.iter().any(|q| S::f_is_zero(&eval_in_field(q, n, ctx))) {
                continue 'outer;
            }
        }
        return Ok(a);
    }
    Err(Error::NoRegularWindow)
}

/// Unrolls a solution of the recurrence `rec` (shift form) over the window
/// `offset..offset+len`, with random initial values.  The leading
/// coefficient must not vanish on the window.
fn unroll_sequence<S: StreamScalar, R: Rng>(
    rec: &OreOperator<S>,
    ctx: &StreamCtx,
    rng: &mut R,
    offset: i64,
    len: usize,
) -> Vec<S::F> {
    let r = rec.ord().max(0) as usize;
    let mut values: Vec<S::F> = (0..r.min(len)).map(|_| S::f_random(rng, ctx)).collect();
    while values.len() < len {
        let n = offset + (values.len() - r) as i64;
        let mut acc = S::f_from_i64(0, ctx);
        for k in 0..r {
            let c = eval_in_field(&rec.coeff(k), n, ctx);
            let m = values.len() - r + k;
            acc = S::f_add(&acc, &S::f_mul(&c, &values[m], ctx), ctx);
        }
        let lead = eval_in_field(&rec.coeff(r), n, ctx);
        debug_assert!(!S::f_is_zero(&lead));
        let next = S::f_div(&acc, &lead, ctx);
        values.push(S::f_sub(&S::f_from_i64(0, ctx), &next, ctx));
    }
    values
}

/// Applies the algebra generator to a sequence window: a plain index shift
/// for the shift algebra, the forward difference for the difference
/// algebra.  The result is one entry shorter.
fn step_sequence<S: StreamScalar>(
    algebra: Algebra,
    values: &[S::F],
    ctx: &StreamCtx,
) -> Vec<S::F> {
    match algebra {
        Algebra::Shift => values[1..].to_vec(),
        Algebra::Difference => values
            .windows(2)
            .map(|w| S::f_sub(&w[1], &w[0], ctx))
            .collect(),
        Algebra::Differential => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// Power-series unrolling (differential algebra)

/// A truncated power series: all coefficients below `c.len()` are known
/// exactly.
#[derive(Debug, Clone)]
struct Series<S: StreamScalar> {
    c: Vec<S::F>,
}

impl<S: StreamScalar> Series<S> {
    fn valid(&self) -> usize {
        self.c.len()
    }

    fn add(&self, rhs: &Self, ctx: &StreamCtx) -> Self {
        let n = self.valid().min(rhs.valid());
        Series {
            c: (0..n)
                .map(|i| S::f_add(&self.c[i], &rhs.c[i], ctx))
                .collect(),
        }
    }

    fn mul(&self, rhs: &Self, ctx: &StreamCtx) -> Self {
        let n = self.valid().min(rhs.valid());
        let mut c = vec![S::f_from_i64(0, ctx); n];
        for (i, a) in self.c.iter().enumerate().take(n) {
            if S::f_is_zero(a) {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate().take(n - i) {
                c[i + j] = S::f_add(&c[i + j], &S::f_mul(a, b, ctx), ctx);
            }
        }
        Series { c }
    }

    /// Multiplication by an exact polynomial keeps the valid length.
    fn scale_poly(&self, q: &UniPoly<S>, ctx: &StreamCtx) -> Self {
        let n = self.valid();
        let mut c = vec![S::f_from_i64(0, ctx); n];
        for (s, qc) in q.coeffs().iter().enumerate() {
            let qv = qc.embed(ctx);
            if S::f_is_zero(&qv) {
                continue;
            }
            for i in 0..n.saturating_sub(s) {
                c[i + s] = S::f_add(&c[i + s], &S::f_mul(&qv, &self.c[i], ctx), ctx);
            }
        }
        Series { c }
    }

    fn derivative(&self, ctx: &StreamCtx) -> Self {
        Series {
            c: (1..self.valid())
                .map(|i| S::f_mul(&S::f_from_i64(i as i64, ctx), &self.c[i], ctx))
                .collect(),
        }
    }
}

/// Searches an expansion point `a` (tried in the order `0, 1, -1, 2, ...`)
/// at which none of the polynomials vanishes.
fn find_center<S: StreamScalar>(lcs: &[UniPoly<S>], ctx: &StreamCtx) -> Result<i64> {
    for step in 0..=MAX_SEARCH {
        for a in [step, -step] {
            if lcs.iter().all(|q| !S::f_is_zero(&eval_in_field(q, a, ctx))) {
                return Ok(a);
            }
        }
    }
    Err(Error::NoRegularWindow)
}

/// Substitutes `x -> x + a` in all coefficients, moving the expansion point
/// to the origin.
fn recenter<C: Coeff>(op: &OreOperator<C>, a: i64) -> OreOperator<C> {
    OreOperator::new(
        op.algebra,
        op.coeffs().iter().map(|c| c.compose_shift(a)).collect(),
    )
}

/// Unrolls a random power-series solution of a differential operator whose
/// leading coefficient does not vanish at the origin.
fn unroll_series<S: StreamScalar, R: Rng>(
    op: &OreOperator<S>,
    ctx: &StreamCtx,
    rng: &mut R,
    len: usize,
) -> Result<Series<S>> {
    let r = op.ord().max(0);
    let mut c: Vec<S::F> = (0..(r as usize).min(len))
        .map(|_| S::f_random(rng, ctx))
        .collect();
    while c.len() < len {
        let nu = c.len() as i64 - r;
        let mut acc = S::f_from_i64(0, ctx);
        for i in 0..=r {
            for (s, coeff) in op.coeff(i as usize).coeffs().iter().enumerate() {
                let s = s as i64;
                if i == r && s == 0 {
                    continue;
                }
                let m = nu - s + i;
                if m < 0 || m >= c.len() as i64 {
                    continue;
                }
                let term = S::f_mul(
                    &coeff.embed(ctx),
                    &S::f_mul(&falling::<S>(m, i, ctx), &c[m as usize], ctx),
                    ctx,
                );
                acc = S::f_add(&acc, &term, ctx);
            }
        }
        // coefficient of the new term: lc(0) * (nu+r)(nu+r-1)...(nu+1)
        let lead = S::f_mul(
            &op.lc().coeff(0).embed(ctx),
            &falling::<S>(nu + r, r, ctx),
            ctx,
        );
        if S::f_is_zero(&lead) {
            // only possible over small-characteristic fields
            return Err(Error::NoRegularWindow);
        }
        c.push(S::f_div(&S::f_sub(&S::f_from_i64(0, ctx), &acc, ctx), &lead, ctx));
    }
    Ok(Series { c })
}

// ---------------------------------------------------------------------------
// Verification

fn max_ders<C: Coeff>(sys: &OreSystem<C>, expr: &MPoly<C>) -> Vec<u32> {
    (0..sys.len() as u32)
        .map(|i| expr.max_der(i).map_or(0, |d| d))
        .collect()
}

/// Checks, on `points` sampled positions of random exact solutions, that
/// `certificate * (l . expr)` vanishes.  Returns `Ok(false)` on the first
/// nonzero value; positions where the certificate itself vanishes are
/// skipped (the identity says nothing there), and if every position is
/// skipped the check fails with [`Error::NoRegularWindow`].
pub fn verify_annihilator<S: StreamScalar>(
    sys: &OreSystem<S>,
    l: &OreOperator<S>,
    certificate: &UniPoly<S>,
    expr: &MPoly<S>,
    domain: &Domain,
    seed: u64,
    points: usize,
) -> Result<bool> {
    use rand::SeedableRng;
    if l.algebra != sys.algebra() {
        return Err(Error::Mismatch(
            "candidate operator lives in a different algebra".into(),
        ));
    }
    if l.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5eed_5eed_5eed);
    let ctx = StreamCtx::new(domain, &mut rng);
    match sys.algebra() {
        Algebra::Shift | Algebra::Difference => {
            verify_on_sequences(sys, l, certificate, expr, &ctx, &mut rng, points)
        }
        Algebra::Differential => {
            verify_on_series(sys, l, certificate, expr, &ctx, &mut rng, points)
        }
    }
}

fn verify_on_sequences<S: StreamScalar, R: Rng>(
    sys: &OreSystem<S>,
    l: &OreOperator<S>,
    certificate: &UniPoly<S>,
    expr: &MPoly<S>,
    ctx: &StreamCtx,
    rng: &mut R,
    points: usize,
) -> Result<bool> {
    let algebra = sys.algebra();
    let recs: Vec<OreOperator<S>> = sys.ops().iter().map(shift_recurrence).collect();
    let lrec = shift_recurrence(l);
    let rl = lrec.ord().max(0) as usize;
    let ders = max_ders(sys, expr);
    let maxj = ders.iter().copied().max().unwrap_or(0) as usize;
    let len = points + rl + maxj;

    let lcs: Vec<UniPoly<S>> = recs.iter().map(|r| r.lc()).collect();
    let offset = find_window(&lcs, ctx, len)?;
    // derived streams y_{k,j}: stream k, then j applications of the generator
    let derived: Vec<Vec<Vec<S::F>>> = recs
        .iter()
        .zip(&ders)
        .map(|(rec, &dj)| {
            let mut layers = vec![unroll_sequence(rec, ctx, rng, offset, len)];
            for _ in 0..dj {
                layers.push(step_sequence::<S>(algebra, layers.last().unwrap(), ctx));
            }
            layers
        })
        .collect();

    // values of the expression at offset+m for m < points + rl
    let glen = points + rl;
    let g: Vec<S::F> = (0..glen)
        .map(|m| {
            let n = offset + m as i64;
            let mut total = S::f_from_i64(0, ctx);
            for (mono, poly) in expr.terms() {
                let mut val = eval_in_field(poly, n, ctx);
                for &((k, j), e) in mono.vars() {
                    let s = &derived[k as usize][j as usize][m];
                    for _ in 0..e {
                        val = S::f_mul(&val, s, ctx);
                    }
                }
                total = S::f_add(&total, &val, ctx);
            }
            total
        })
        .collect();

    let mut checked = 0usize;
    for m in 0..points {
        let n = offset + m as i64;
        if S::f_is_zero(&eval_in_field(certificate, n, ctx)) {
            continue;
        }
        checked += 1;
        let mut val = S::f_from_i64(0, ctx);
        for t in 0..=rl {
            let c = eval_in_field(&lrec.coeff(t), n, ctx);
            val = S::f_add(&val, &S::f_mul(&c, &g[m + t], ctx), ctx);
        }
        if !S::f_is_zero(&val) {
            return Ok(false);
        }
    }
    if checked == 0 {
        return Err(Error::NoRegularWindow);
    }
    Ok(true)
}

fn verify_on_series<S: StreamScalar, R: Rng>(
    sys: &OreSystem<S>,
    l: &OreOperator<S>,
    certificate: &UniPoly<S>,
    expr: &MPoly<S>,
    ctx: &StreamCtx,
    rng: &mut R,
    points: usize,
) -> Result<bool> {
    let rl = l.ord().max(0) as usize;
    let ders = max_ders(sys, expr);
    let maxj = ders.iter().copied().max().unwrap_or(0) as usize;
    let nwork = points + rl + maxj;

    let lcs: Vec<UniPoly<S>> = sys.ops().iter().map(|op| op.lc()).collect();
    let center = find_center(&lcs, ctx)?;
    let derived: Vec<Vec<Series<S>>> = sys
        .ops()
        .iter()
        .zip(&ders)
        .map(|(op, &dj)| {
            let base = unroll_series(&recenter(op, center), ctx, rng, nwork)?;
            let mut layers = vec![base];
            for _ in 0..dj {
                layers.push(layers.last().unwrap().derivative(ctx));
            }
            Ok(layers)
        })
        .collect::<Result<_>>()?;

    let mut g = Series::<S> {
        c: vec![S::f_from_i64(0, ctx); points + rl],
    };
    for (mono, poly) in expr.terms() {
        let mut term = Series::<S> {
            c: vec![S::f_from_i64(1, ctx); 1],
        };
        term.c.resize(points + rl + maxj, S::f_from_i64(0, ctx));
        for &((k, j), e) in mono.vars() {
            for _ in 0..e {
                term = term.mul(&derived[k as usize][j as usize], ctx);
            }
        }
        g = g.add(&term.scale_poly(&poly.compose_shift(center), ctx), ctx);
    }

    let lc_at = recenter(l, center);
    let mut applied = Series::<S> {
        c: vec![S::f_from_i64(0, ctx); points],
    };
    let mut dg = g;
    for i in 0..=rl {
        if i > 0 {
            dg = dg.derivative(ctx);
        }
        let c = lc_at.coeff(i);
        if !c.is_zero() {
            applied = applied.add(&dg.scale_poly(&c, ctx), ctx);
        }
    }
    let res = applied.scale_poly(&certificate.compose_shift(center), ctx);
    if res.valid() < points {
        return Err(Error::NoRegularWindow);
    }
    Ok(res.c[..points].iter().all(S::f_is_zero))
}

/// Checks that `l` is a common multiple: every component solution must be
/// annihilated (certificate-free).
pub fn verify_multiple<S: StreamScalar>(
    sys: &OreSystem<S>,
    l: &OreOperator<S>,
    domain: &Domain,
    seed: u64,
    points: usize,
) -> Result<bool> {
    for k in 0..sys.len() as u32 {
        let expr = MPoly::var(k, 0);
        if !verify_annihilator(sys, l, &UniPoly::one(), &expr, domain, seed ^ k as u64, points)? {
            return Ok(false);
        }
    }
    Ok(true)
}

//! Closure-property constructions.
//!
//! Given operators `L_1, ..., L_n` annihilating functions `f_1, ..., f_n`,
//! this module computes operators annihilating sums (common left multiples),
//! products, powers, Wronskians, and general polynomial expressions in the
//! `f_i` and their derivatives/shifts.  Every construction follows the same
//! pattern: set up a linear ansatz whose dimensions come from
//! [`crate::bounds`], extract a nullspace vector with
//! [`crate::linalg::nullspace_vector`], and read off the operator.  The
//! polynomial constructions work in the extended ring of [`crate::mpoly`],
//! rewriting excess derivatives `y_{i,j}` (`j >= ord(L_i)`) via the defining
//! relations of the `L_i`; since the relations have the leading coefficients
//! `lc(L_i)` in front, the computed operators annihilate up to a polynomial
//! certificate multiplier which is returned alongside.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::algebra::Algebra;
use crate::bounds;
use crate::domain::Coeff;
use crate::error::{Error, Result};
use crate::linalg::nullspace_vector;
use crate::mpoly::{MPoly, Monomial};
use crate::op::{rising_factorial, OreOperator};
use crate::poly::UniPoly;

/// Ansatz orders beyond this are rejected as unsupported: the elimination
/// behind an annihilator of order `m` works on an `m x (m+1)` polynomial
/// matrix, which is far out of reach long before this limit.
const MAX_ANSATZ_ORDER: u64 = 5000;

// ---------------------------------------------------------------------------
// Defining systems

/// A validated system of operators `L_1, ..., L_n` over one algebra: the
/// `i`-th component variable block `y_{i,j}` of the extended ring represents
/// the derivatives/shifts of a solution `f_i` of `L_i`.  All operators must
/// be nonzero and of positive order.
#[derive(Debug, Clone, PartialEq)]
pub struct OreSystem<C: Coeff> {
    algebra: Algebra,
    ops: Vec<OreOperator<C>>,
}

impl<C: Coeff> OreSystem<C> {
    pub fn new(ops: Vec<OreOperator<C>>) -> Result<Self> {
        let algebra = match ops.first() {
            Some(op) => op.algebra,
            None => return Err(Error::EmptyInput),
        };
        for op in &ops {
            if op.algebra != algebra {
                return Err(Error::Mismatch(
                    "all operators must live in the same algebra".into(),
                ));
            }
            if op.is_zero() {
                return Err(Error::ZeroInput);
            }
            if op.ord() < 1 {
                return Err(Error::OrdPrecondition(
                    "component operators must have positive order".into(),
                ));
            }
        }
        Ok(OreSystem { algebra, ops })
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn ops(&self) -> &[OreOperator<C>] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Component orders `(r_1, ..., r_n)`.
    pub fn orders(&self) -> Vec<u64> {
        self.ops.iter().map(|l| l.ord() as u64).collect()
    }

    /// `(order, degree)` pairs, as consumed by the curve evaluators.
    pub fn curve_shapes(&self) -> Vec<(u64, u64)> {
        self.ops
            .iter()
            .map(|l| (l.ord() as u64, l.deg().max(0) as u64))
            .collect()
    }

    /// Checks that every `y`-variable of `p` refers to a component of this
    /// system.
    fn validate_components(&self, p: &MPoly<C>) -> Result<()> {
        let n = self.ops.len();
        for (mono, _) in p.terms() {
            for &((c, _), _) in mono.vars() {
                if c as usize >= n {
                    return Err(Error::Mismatch(format!(
                        "expression uses component y[{}] but only {} operators were given",
                        c + 1,
                        n
                    )));
                }
            }
        }
        Ok(())
    }

    /// `partial^k . L_i` for `k = 0, ..., count-1`, per component.
    fn derivative_tables(&self, count: u64) -> Vec<Vec<OreOperator<C>>> {
        self.ops
            .iter()
            .map(|l| {
                let mut ups = Vec::with_capacity(count as usize);
                if count > 0 {
                    ups.push(l.clone());
                    for _ in 1..count {
                        let next = ups.last().unwrap().mul_d();
                        ups.push(next);
                    }
                }
                ups
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Common left multiples

/// Result of a common-left-multiple computation.
#[derive(Debug, Clone, PartialEq)]
pub struct LclmResult<C: Coeff> {
    /// The common left multiple, normalized and with scalar content removed.
    pub lclm: OreOperator<C>,
    /// Scalar content of the raw nullspace solution: `raw = content * lclm`.
    pub content: C,
    /// Cofactors `M_k` with `M_k L_k = content * lclm` for every `k`.
    pub multipliers: Vec<OreOperator<C>>,
    /// The ansatz order used (the actual order of `lclm` may be lower).
    pub ansatz_order: u64,
}

impl<C: Coeff> LclmResult<C> {
    /// The raw multiple before content removal.
    pub fn raw(&self) -> OreOperator<C> {
        self.lclm.scale(&self.content)
    }
}

fn lclm_trivial<C: Coeff>(sys: &OreSystem<C>) -> LclmResult<C> {
    let l = &sys.ops()[0];
    let (content, lclm) = l.content_reduce();
    LclmResult {
        lclm,
        content,
        multipliers: vec![OreOperator::one(sys.algebra())],
        ansatz_order: l.ord() as u64,
    }
}

/// The linear system behind the common-left-multiple ansatz
/// `M_1 L_1 = ... = M_n L_n` at ansatz order `r`: one row per pair
/// `(1, k')` and partial-power `j <= r`, one column per unknown operator
/// coefficient of the `M_k` (block `k` has `r - ord(L_k) + 1` columns).
/// Returns the rows and the per-block column counts.
pub(crate) fn lclm_system<C: Coeff>(
    sys: &OreSystem<C>,
    r: u64,
) -> (Vec<Vec<UniPoly<C>>>, Vec<usize>) {
    let n = sys.len();
    let orders = sys.orders();
    debug_assert!(orders.iter().all(|&rk| rk <= r));

    // partial^i L_k for i = 0..r-r_k; block k contributes r - r_k + 1 columns
    let tables: Vec<Vec<OreOperator<C>>> = sys
        .ops()
        .iter()
        .zip(&orders)
        .map(|(l, &rk)| {
            let mut t = vec![l.clone()];
            for _ in 0..r - rk {
                t.push(t.last().unwrap().mul_d());
            }
            t
        })
        .collect();
    let block_cols: Vec<usize> = orders.iter().map(|&rk| (r - rk + 1) as usize).collect();
    let total_cols: usize = block_cols.iter().sum();

    // rows: for each pair (1, k') and each partial-power j, the coefficient
    // of partial^j in M_1 L_1 - M_k' L_k'
    let mut rows: Vec<Vec<UniPoly<C>>> = Vec::with_capacity((n - 1) * (r as usize + 1));
    for kp in 1..n {
        for j in 0..=r as usize {
            let mut row = vec![UniPoly::zero(); total_cols];
            let mut col = 0usize;
            for (k, table) in tables.iter().enumerate() {
                for entry in table {
                    if k == 0 {
                        row[col] = entry.coeff(j);
                    } else if k == kp {
                        row[col] = entry.coeff(j).neg();
                    }
                    col += 1;
                }
            }
            rows.push(row);
        }
    }
    (rows, block_cols)
}

/// Common left multiple from the polynomial ansatz at a fixed ansatz order
/// `r`.  Fails with [`Error::TrivialKernel`] when no nonzero solution
/// exists at this order.
fn lclm_at_order<C: Coeff>(sys: &OreSystem<C>, r: u64) -> Result<LclmResult<C>> {
    let n = sys.len();
    if n == 1 {
        return Ok(lclm_trivial(sys));
    }
    let (rows, block_cols) = lclm_system(sys, r);
    let v = nullspace_vector(&rows)?;
    let mut multipliers = Vec::with_capacity(n);
    let mut offset = 0usize;
    for cols in &block_cols {
        multipliers.push(OreOperator::new(
            sys.algebra(),
            v[offset..offset + cols].to_vec(),
        ));
        offset += cols;
    }
    let raw = multipliers[0].op_mul(&sys.ops()[0]);
    debug_assert!(!raw.is_zero());
    debug_assert!(multipliers
        .iter()
        .zip(sys.ops())
        .all(|(m, l)| m.op_mul(l) == raw));
    let (content, lclm) = raw.content_reduce();
    Ok(LclmResult {
        lclm,
        content,
        multipliers,
        ansatz_order: r,
    })
}

/// Common left multiple at the full ansatz order `r = sum ord(L_k)`, where
/// a nonzero solution always exists.  The result's degree and height obey
/// [`bounds::bound_lclm`].
pub fn lclm<C: Coeff>(sys: &OreSystem<C>) -> Result<LclmResult<C>> {
    lclm_at_order(sys, sys.orders().iter().sum())
}

/// Least-order common left multiple: searches ansatz orders upward from
/// `max ord(L_k)` and returns the first order admitting a nonzero solution.
pub fn lclm_minimal<C: Coeff>(sys: &OreSystem<C>) -> Result<LclmResult<C>> {
    if sys.len() == 1 {
        return Ok(lclm_trivial(sys));
    }
    let orders = sys.orders();
    let lo = *orders.iter().max().unwrap();
    let hi = orders.iter().sum();
    for r in lo..=hi {
        match lclm_at_order(sys, r) {
            Err(Error::TrivialKernel) => continue,
            other => return other,
        }
    }
    Err(Error::TrivialKernel)
}

/// Result of a common-left-multiple computation at a prescribed
/// (order, degree) point of the feasibility region.
#[derive(Debug, Clone, PartialEq)]
pub struct ClmAtResult<C: Coeff> {
    /// The common left multiple, `ord <= r`, `deg <= d`, content-reduced.
    pub clm: OreOperator<C>,
    /// Scalar content of the raw solution.
    pub content: C,
    /// Cofactors `M_k` with `M_k L_k = content * clm`.
    pub multipliers: Vec<OreOperator<C>>,
    /// Number of ansatz variables `sum_k (r - r_k + 1)(d - d_k + 1)`.
    pub vars: u64,
    /// Number of ansatz equations `(n - 1)(r + 1)(d + 1)`.
    pub eqs: u64,
}

/// Common left multiple of order at most `r` and degree at most `d` from a
/// scalar ansatz: the cofactor coefficients are undetermined ring constants
/// rather than polynomials.  The request is refused with
/// [`Error::InfeasibleSize`] unless the counting argument guarantees a
/// nonzero solution (more variables than equations), which holds exactly on
/// and above the order-degree curve of [`bounds::curve_lclm`].
pub fn clm_at<C: Coeff>(sys: &OreSystem<C>, r: u64, d: u64) -> Result<ClmAtResult<C>> {
    let shapes = sys.curve_shapes();
    let (vars, eqs) = bounds::clm_counts(&shapes, r, d);
    if vars == 0 || vars <= eqs {
        return Err(Error::InfeasibleSize);
    }
    let n = sys.len();
    let orders = sys.orders();
    let degs: Vec<u64> = shapes.iter().map(|s| s.1).collect();

    let tables: Vec<Vec<OreOperator<C>>> = sys
        .ops()
        .iter()
        .zip(&orders)
        .map(|(l, &rk)| {
            let mut t = vec![l.clone()];
            for _ in 0..r - rk {
                t.push(t.last().unwrap().mul_d());
            }
            t
        })
        .collect();

    // column layout: (k, i <= r - r_k, j <= d - d_k)
    struct Col {
        block: usize,
        dpow: usize,
        xpow: usize,
    }
    let mut cols: Vec<Col> = Vec::with_capacity(vars as usize);
    for k in 0..n {
        for i in 0..=(r - orders[k]) as usize {
            for j in 0..=(d - degs[k]) as usize {
                cols.push(Col { block: k, dpow: i, xpow: j });
            }
        }
    }
    debug_assert_eq!(cols.len() as u64, vars);

    // row (k', a, b): coefficient of x^b partial^a in M_1 L_1 - M_k' L_k'
    let mut rows: Vec<Vec<UniPoly<C>>> = Vec::with_capacity(eqs as usize);
    for kp in 1..n {
        for a in 0..=r as usize {
            for b in 0..=d as usize {
                let row = cols
                    .iter()
                    .map(|col| {
                        let sign = if col.block == 0 {
                            1i64
                        } else if col.block == kp {
                            -1
                        } else {
                            return UniPoly::zero();
                        };
                        if b < col.xpow {
                            return UniPoly::zero();
                        }
                        let c = tables[col.block][col.dpow].coeff(a).coeff(b - col.xpow);
                        UniPoly::constant(c.mul_small(sign))
                    })
                    .collect();
                rows.push(row);
            }
        }
    }
    debug_assert_eq!(rows.len() as u64, eqs);

    let v = nullspace_vector(&rows)?;
    debug_assert!(v.iter().all(|p| p.deg() <= 0));

    let mut multipliers = Vec::with_capacity(n);
    for k in 0..n {
        let mut coeffs = vec![UniPoly::zero(); (r - orders[k]) as usize + 1];
        for (col, val) in cols.iter().zip(&v) {
            if col.block == k && !val.is_zero() {
                coeffs[col.dpow] =
                    coeffs[col.dpow].add(&UniPoly::constant(val.coeff(0)).shift_up(col.xpow));
            }
        }
        multipliers.push(OreOperator::new(sys.algebra(), coeffs));
    }
    let raw = multipliers[0].op_mul(&sys.ops()[0]);
    debug_assert!(!raw.is_zero());
    debug_assert!(multipliers
        .iter()
        .zip(sys.ops())
        .all(|(m, l)| m.op_mul(l) == raw));
    let (content, clm) = raw.content_reduce();
    Ok(ClmAtResult {
        clm,
        content,
        multipliers,
        vars,
        eqs,
    })
}

// ---------------------------------------------------------------------------
// Rewriting in the extended ring

/// `-sum_{c < ord} coeff_c(dl) y_{comp, c}`: the tail of the defining
/// relation `lc(dl) y_{comp, ord} = -sum_{c < ord} coeff_c(dl) y_{comp, c}`
/// obtained from `dl = partial^k . L_comp`.
fn relation_tail<C: Coeff>(dl: &OreOperator<C>, comp: u32) -> MPoly<C> {
    let mut w = MPoly::zero();
    for c in 0..dl.ord() as u32 {
        let coeff = dl.coeff(c as usize);
        if !coeff.is_zero() {
            w = w.add(&MPoly::term(Monomial::var(comp, c), coeff.neg()));
        }
    }
    w
}

/// Result of a normal-form computation: `multiplier * P` is congruent to
/// `v` modulo the defining ideal, and `v` has all derivative orders below
/// the component orders.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalForm<C: Coeff> {
    pub v: MPoly<C>,
    /// `prod_i (lc(L_i)^{D_i})^{[levels]}` where `D_i` is the degree of the
    /// input in component `i`.
    pub multiplier: UniPoly<C>,
}

/// One pass of the level-by-level reduction: eliminates the variables
/// `y_{i, r_i + level - 1}` for `level = levels, ..., 1`.  `dfix[i]` is the
/// (fixed) component degree of the original polynomial, which bounds every
/// exponent of a top variable throughout.
fn nf_core<C: Coeff>(
    sys: &OreSystem<C>,
    tables: &[Vec<OreOperator<C>>],
    p: &MPoly<C>,
    levels: u32,
    dfix: &[u32],
) -> MPoly<C> {
    let n = sys.len();
    let orders = sys.orders();
    let mut cur = p.clone();
    for level in (1..=levels).rev() {
        // at this level the top variable of component i is y_{i, r_i+level-1},
        // with relation obtained from partial^(level-1) . L_i
        let tops: Vec<u32> = orders.iter().map(|&rk| rk as u32 + level - 1).collect();
        let leads: Vec<UniPoly<C>> = (0..n).map(|i| tables[i][level as usize - 1].lc()).collect();
        let tails: Vec<MPoly<C>> = (0..n)
            .map(|i| relation_tail(&tables[i][level as usize - 1], i as u32))
            .collect();
        // powers of the leading coefficients up to the fixed component degree
        let lead_pows: Vec<Vec<UniPoly<C>>> = (0..n)
            .map(|i| {
                let mut pows = vec![UniPoly::one()];
                for _ in 0..dfix[i] {
                    pows.push(pows.last().unwrap().mul(&leads[i]));
                }
                pows
            })
            .collect();

        let mut next = MPoly::zero();
        for (mono, coeff) in cur.terms() {
            let mut rest = mono.clone();
            let mut scalar = coeff.clone();
            let mut ypart = MPoly::one();
            for i in 0..n {
                let e = mono.exp_of(i as u32, tops[i]);
                debug_assert!(e <= dfix[i]);
                rest = rest.without_var(i as u32, tops[i]);
                scalar = scalar.mul(&lead_pows[i][(dfix[i] - e) as usize]);
                if e > 0 {
                    ypart = ypart.mul(&tails[i].pow(e));
                }
            }
            next = next.add(&MPoly::term(rest, scalar).mul(&ypart));
        }
        cur = next;
        debug_assert!((0..n as u32)
            .all(|i| cur.max_der(i).map_or(true, |d| d < orders[i as usize] as u32 + level - 1)));
    }
    cur
}

/// Normal form of `p` modulo the defining relations, reducing `levels`
/// derivative layers: requires `max_der_i(p) < ord(L_i) + levels` and
/// returns `v` with `max_der_i(v) < ord(L_i)` together with the leading
/// coefficient multiplier, so that `multiplier * p = v` modulo the ideal.
pub fn normal_form<C: Coeff>(
    sys: &OreSystem<C>,
    p: &MPoly<C>,
    levels: u32,
) -> Result<NormalForm<C>> {
    sys.validate_components(p)?;
    let orders = sys.orders();
    let n = sys.len();
    for i in 0..n as u32 {
        if let Some(d) = p.max_der(i) {
            if d as u64 >= orders[i as usize] + levels as u64 {
                return Err(Error::OrdPrecondition(format!(
                    "derivative order {} of component y[{}] needs more than {} reduction levels",
                    d,
                    i + 1,
                    levels
                )));
            }
        }
    }
    let dfix: Vec<u32> = (0..n as u32).map(|i| p.comp_deg(i)).collect();
    let tables = sys.derivative_tables(levels as u64);
    let v = nf_core(sys, &tables, p, levels, &dfix);
    let mut multiplier = UniPoly::one();
    for (l, &di) in sys.ops().iter().zip(&dfix) {
        multiplier = multiplier.mul(&rising_factorial(
            sys.algebra(),
            &l.lc().pow(di),
            levels as u64,
        ));
    }
    Ok(NormalForm { v, multiplier })
}

/// Full reduction modulo the defining ideal, allowing denominators: any
/// occurrence of `y_{i,j}` with `j >= ord(L_i)` is rewritten through the
/// relation of `partial^(j - ord(L_i)) . L_i` after multiplying the whole
/// polynomial by the relation's leading coefficient.  The result contains
/// no excess variables, and it is zero if and only if the input represents
/// zero in the module localized at the (shifted) leading coefficients.
pub fn reduce_by_ideal<C: Coeff>(sys: &OreSystem<C>, p: &MPoly<C>) -> Result<MPoly<C>> {
    sys.validate_components(p)?;
    let orders = sys.orders();
    let mut tables: Vec<Vec<OreOperator<C>>> =
        sys.ops().iter().map(|l| vec![l.clone()]).collect();
    let mut tails: HashMap<(u32, u32), MPoly<C>> = HashMap::new();
    let mut cur = p.clone();
    loop {
        // highest excess derivative, preferring larger derivative order
        let mut excess: Option<(u32, u32)> = None;
        for (mono, _) in cur.terms() {
            for &((c, j), _) in mono.vars() {
                if j as u64 >= orders[c as usize] && excess.map_or(true, |(_, bj)| j > bj) {
                    excess = Some((c, j));
                }
            }
        }
        let Some((i, j)) = excess else {
            return Ok(cur);
        };
        let k = j - orders[i as usize] as u32;
        while tables[i as usize].len() <= k as usize {
            let next = tables[i as usize].last().unwrap().mul_d();
            tables[i as usize].push(next);
        }
        let dl = &tables[i as usize][k as usize];
        let lead = dl.lc();
        let tail = tails
            .entry((i, k))
            .or_insert_with(|| relation_tail(dl, i))
            .clone();
        // split cur = a * y_{i,j} + b and replace with a * tail + lead * b
        let mut a = MPoly::zero();
        let mut b = MPoly::zero();
        for (mono, coeff) in cur.terms() {
            if mono.exp_of(i, j) > 0 {
                a = a.add(&MPoly::term(mono.div_var(i, j), coeff.clone()));
            } else {
                b = b.add(&MPoly::term(mono.clone(), coeff.clone()));
            }
        }
        cur = a.mul(&tail).add(&b.scale_poly(&lead));
    }
}

/// Module action of an operator on an extended-ring element:
/// `L . P = sum_k coeff_k(L) (partial^k . P)` under the algebra's default
/// action mode.
pub fn apply_operator<C: Coeff>(l: &OreOperator<C>, p: &MPoly<C>) -> MPoly<C> {
    let mode = l.algebra.default_partial_mode();
    let mut acc = MPoly::zero();
    let mut dp = p.clone();
    for k in 0..=l.ord().max(0) as usize {
        if k > 0 {
            dp = dp.partial(l.algebra, mode);
        }
        let c = l.coeff(k);
        if !c.is_zero() {
            acc = acc.add(&dp.scale_poly(&c));
        }
    }
    acc
}

/// Checks that `certificate * (L . P)` reduces to zero modulo the defining
/// ideal (with denominators): the defining property of the annihilators
/// computed here.
pub fn check_annihilates<C: Coeff>(
    sys: &OreSystem<C>,
    l: &OreOperator<C>,
    certificate: &UniPoly<C>,
    p: &MPoly<C>,
) -> Result<bool> {
    let applied = apply_operator(l, p).scale_poly(certificate);
    Ok(reduce_by_ideal(sys, &applied)?.is_zero())
}

// ---------------------------------------------------------------------------
// Annihilators of polynomial expressions

/// Result of an annihilator computation.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnihilatorResult<C: Coeff> {
    /// The annihilating operator, content-reduced.
    pub op: OreOperator<C>,
    /// Scalar content of the raw nullspace solution.
    pub content: C,
    /// Certificate polynomial `q`: `q * (op . P)` lies in the defining
    /// ideal.  A product of shifted leading coefficients of the `L_i`.
    pub certificate: UniPoly<C>,
    /// The ansatz order `m`; `ord(op) <= m`.
    pub order_bound: u64,
}

struct ExprData {
    multideg: Vec<u32>,
    m: u64,
}

fn validate_expression<C: Coeff>(sys: &OreSystem<C>, p: &MPoly<C>) -> Result<ExprData> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    sys.validate_components(p)?;
    let n = sys.len();
    let orders = sys.orders();
    let multideg: Vec<u32> = (0..n as u32).map(|i| p.comp_deg(i)).collect();
    if !p.is_multihomogeneous(&multideg) {
        return Err(Error::Mismatch(
            "expression must be homogeneous in each component; \
             split it into homogeneous parts first"
                .into(),
        ));
    }
    for i in 0..n as u32 {
        if let Some(d) = p.max_der(i) {
            if d as u64 >= orders[i as usize] {
                return Err(Error::OrdPrecondition(format!(
                    "expression uses y[{},{}] but ord(L_{}) is only {}",
                    i + 1,
                    d,
                    i + 1,
                    orders[i as usize]
                )));
            }
        }
    }
    let md64: Vec<u64> = multideg.iter().map(|&d| d as u64).collect();
    let m_big: BigUint = bounds::annihilator_order(&orders, &md64)?;
    let m = m_big
        .to_u64()
        .filter(|&m| m <= MAX_ANSATZ_ORDER)
        .ok_or_else(|| {
            Error::Unsupported(format!("ansatz order {m_big} exceeds the supported range"))
        })?;
    Ok(ExprData { multideg, m })
}

/// The reduced images `V_k` of `partial^k . P` for `k = 0..=count`, shaped
/// so that all of them share the common certificate
/// `prod_i (lc(L_i)^{D_i})^{[count]}`.
fn reduced_derivatives<C: Coeff>(
    sys: &OreSystem<C>,
    p: &MPoly<C>,
    multideg: &[u32],
    count: u64,
) -> Vec<MPoly<C>> {
    let algebra = sys.algebra();
    let mode = algebra.default_partial_mode();
    let tables = sys.derivative_tables(count);
    let mut out = Vec::with_capacity(count as usize + 1);
    let mut dp = p.clone();
    for k in 0..=count {
        if k > 0 {
            dp = dp.partial(algebra, mode);
        }
        // pre-multiplier prod_i (sigma^k(lc_i)^{D_i})^{[count-k]}: combined
        // with the k levels of reduction this yields the common certificate
        let mut pre = UniPoly::one();
        for (l, &di) in sys.ops().iter().zip(multideg) {
            let shifted_lc = algebra.sigma_k(&l.lc(), k as i64);
            pre = pre.mul(&rising_factorial(algebra, &shifted_lc.pow(di), count - k));
        }
        let pk = dp.scale_poly(&pre);
        out.push(nf_core(sys, &tables, &pk, k as u32, multideg));
    }
    out
}

pub(crate) fn certificate_poly<C: Coeff>(
    sys: &OreSystem<C>,
    multideg: &[u32],
    count: u64,
) -> UniPoly<C> {
    let mut cert = UniPoly::one();
    for (l, &di) in sys.ops().iter().zip(multideg) {
        cert = cert.mul(&rising_factorial(sys.algebra(), &l.lc().pow(di), count));
    }
    cert
}

/// Annihilator of a polynomial expression `P` in the solutions of the
/// system: returns `L` of order at most `m = prod_i binom(D_i + r_i - 1,
/// D_i)` together with a certificate `q` such that `q L . P` lies in the
/// defining ideal.  `P` must be nonzero, homogeneous in each component
/// block, and use only derivative orders below the component orders.  The
/// sizes of `L` obey [`bounds::bound_annihilator`].
pub fn annihilator<C: Coeff>(sys: &OreSystem<C>, p: &MPoly<C>) -> Result<AnnihilatorResult<C>> {
    let (rows, m, multideg) = annihilator_rows(sys, p)?;
    let coeffs = nullspace_vector(&rows)?;
    let raw = OreOperator::new(sys.algebra(), coeffs);
    let (content, op) = raw.content_reduce();
    Ok(AnnihilatorResult {
        op,
        content,
        certificate: certificate_poly(sys, &multideg, m),
        order_bound: m,
    })
}

/// The linear system behind [`annihilator`]: one row per monomial in the
/// union of supports of the reduced derivatives, one column per `k` in
/// `0..=m`.  Returns the rows, the ansatz order `m`, and the component
/// multidegree of the expression.
pub(crate) fn annihilator_rows<C: Coeff>(
    sys: &OreSystem<C>,
    p: &MPoly<C>,
) -> Result<(Vec<Vec<UniPoly<C>>>, u64, Vec<u32>)> {
    let data = validate_expression(sys, p)?;
    let m = data.m;
    let vs = reduced_derivatives(sys, p, &data.multideg, m);

    let mut support: BTreeSet<Monomial> = BTreeSet::new();
    for v in &vs {
        for (mono, _) in v.terms() {
            support.insert(mono.clone());
        }
    }
    assert!(
        support.len() as u64 <= m,
        "reduced support exceeds the monomial count"
    );
    let rows: Vec<Vec<UniPoly<C>>> = support
        .iter()
        .map(|mono| vs.iter().map(|v| v.coeff(mono)).collect())
        .collect();
    Ok((rows, m, data.multideg))
}

/// Result of an annihilator computation at a prescribed (order, degree)
/// point.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnihilatorAtResult<C: Coeff> {
    /// The annihilating operator, `ord <= r`, `deg <= d`, content-reduced.
    pub op: OreOperator<C>,
    /// Scalar content of the raw solution.
    pub content: C,
    /// Certificate polynomial, as in [`AnnihilatorResult`].
    pub certificate: UniPoly<C>,
    /// Number of ansatz variables `(r + 1)(d + 1)`.
    pub vars: u64,
    /// Number of ansatz equations actually posed.
    pub eqs: u64,
}

/// Annihilator of order at most `r` and degree at most `d` from a scalar
/// ansatz `L = sum_{k,j} l_{k,j} x^j partial^k`.  Requires `r >= m` (the
/// ansatz order of [`annihilator`]); refused with
/// [`Error::InfeasibleSize`] unless there are more variables than
/// equations, which is guaranteed on and above the order-degree curve of
/// [`bounds::curve_poly`].
pub fn annihilator_at<C: Coeff>(
    sys: &OreSystem<C>,
    p: &MPoly<C>,
    r: u64,
    d: u64,
) -> Result<AnnihilatorAtResult<C>> {
    let data = validate_expression(sys, p)?;
    if r < data.m {
        return Err(Error::OrderTooSmall);
    }
    let vs = reduced_derivatives(sys, p, &data.multideg, r);

    let mut support: BTreeSet<Monomial> = BTreeSet::new();
    let mut vdeg = 0i64;
    for v in &vs {
        vdeg = vdeg.max(v.deg_x());
        for (mono, _) in v.terms() {
            support.insert(mono.clone());
        }
    }
    let dmax = d + vdeg.max(0) as u64;
    let vars = (r + 1) * (d + 1);
    let eqs = support.len() as u64 * (dmax + 1);
    if vars <= eqs {
        return Err(Error::InfeasibleSize);
    }

    // row (monomial, b): coefficient of x^b; column (k, j): l_{k,j}
    let mut rows: Vec<Vec<UniPoly<C>>> = Vec::with_capacity(eqs as usize);
    for mono in &support {
        let polys: Vec<UniPoly<C>> = vs.iter().map(|v| v.coeff(mono)).collect();
        for b in 0..=dmax as usize {
            let mut row = Vec::with_capacity(vars as usize);
            for pk in &polys {
                for j in 0..=d as usize {
                    row.push(if b >= j {
                        UniPoly::constant(pk.coeff(b - j))
                    } else {
                        UniPoly::zero()
                    });
                }
            }
            rows.push(row);
        }
    }
    let v = nullspace_vector(&rows)?;
    debug_assert!(v.iter().all(|p| p.deg() <= 0));
    let coeffs: Vec<UniPoly<C>> = (0..=r as usize)
        .map(|k| {
            let mut c = UniPoly::zero();
            for j in 0..=d as usize {
                let val = &v[k * (d as usize + 1) + j];
                if !val.is_zero() {
                    c = c.add(&UniPoly::constant(val.coeff(0)).shift_up(j));
                }
            }
            c
        })
        .collect();
    let raw = OreOperator::new(sys.algebra(), coeffs);
    let (content, op) = raw.content_reduce();
    Ok(AnnihilatorAtResult {
        op,
        content,
        certificate: certificate_poly(sys, &data.multideg, r),
        vars,
        eqs,
    })
}

// ---------------------------------------------------------------------------
// Inhomogeneous expressions and plain polynomials

/// Annihilator of a plain polynomial `q(x)`: `(D - 1)^(deg q + 1)` in the
/// shift algebra (where `D - 1` is the forward difference) and
/// `D^(deg q + 1)` in the differential and difference algebras.  For `q =
/// 0` the result is `1`.
pub fn poly_annihilator<C: Coeff>(algebra: Algebra, q: &UniPoly<C>) -> OreOperator<C> {
    let n = (q.deg() + 1).max(0) as u32;
    match algebra {
        Algebra::Shift => {
            let step = OreOperator::d(algebra).sub(&OreOperator::one(algebra));
            step.op_pow(n)
        }
        Algebra::Differential | Algebra::Difference => OreOperator::d(algebra).op_pow(n),
    }
}

/// Annihilator of an arbitrary (not necessarily homogeneous) polynomial
/// expression: the expression is split into its multihomogeneous parts,
/// each part is annihilated separately ([`annihilator`], or
/// [`poly_annihilator`] for the part free of `y`-variables), and the
/// results are combined with [`lclm`].  The returned operator annihilates
/// the expression modulo denominators at shifted leading coefficients.
pub fn annihilator_inhomogeneous<C: Coeff>(
    sys: &OreSystem<C>,
    p: &MPoly<C>,
) -> Result<OreOperator<C>> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    sys.validate_components(p)?;
    let n = sys.len() as u32;

    let mut groups: BTreeMap<Vec<u32>, MPoly<C>> = BTreeMap::new();
    for (mono, coeff) in p.terms() {
        let key: Vec<u32> = (0..n).map(|i| mono.comp_deg(i)).collect();
        let entry = groups.entry(key).or_insert_with(MPoly::zero);
        *entry = entry.add(&MPoly::term(mono.clone(), coeff.clone()));
    }

    let mut parts: Vec<OreOperator<C>> = Vec::new();
    for (key, group) in &groups {
        let op = if key.iter().all(|&d| d == 0) {
            poly_annihilator(sys.algebra(), &group.coeff(&Monomial::one()))
        } else {
            annihilator(sys, group)?.op
        };
        if op.ord() >= 1 && !parts.contains(&op) {
            parts.push(op);
        }
    }
    match parts.len() {
        0 => Ok(OreOperator::one(sys.algebra())),
        1 => Ok(parts.pop().unwrap()),
        _ => Ok(lclm(&OreSystem::new(parts)?)?.lclm),
    }
}

// ---------------------------------------------------------------------------
// Expression builders and convenience wrappers

/// `y_{1,0} y_{2,0} ... y_{n,0}`: the product of the component solutions.
pub fn product_expr<C: Coeff>(n: u32) -> MPoly<C> {
    let mut p = MPoly::one();
    for i in 0..n {
        p = p.mul(&MPoly::var(i, 0));
    }
    p
}

/// `y_{1,0}^k`: the `k`-th power of a single component solution.
pub fn power_expr<C: Coeff>(k: u32) -> MPoly<C> {
    MPoly::var(0, 0).pow(k)
}

/// `A . y_{comp,0} = sum_c coeff_c(A) y_{comp,c}`.
pub fn associate_expr<C: Coeff>(a: &OreOperator<C>, comp: u32) -> MPoly<C> {
    let mut p = MPoly::zero();
    for c in 0..=a.ord().max(0) as u32 {
        let coeff = a.coeff(c as usize);
        if !coeff.is_zero() {
            p = p.add(&MPoly::term(Monomial::var(comp, c), coeff));
        }
    }
    p
}

fn det_expr<C: Coeff>(mat: &[Vec<MPoly<C>>]) -> MPoly<C> {
    let n = mat.len();
    if n == 0 {
        return MPoly::one();
    }
    if n == 1 {
        return mat[0][0].clone();
    }
    // cofactor expansion along the first row
    let mut det = MPoly::zero();
    for (col, entry) in mat[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<MPoly<C>>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let cof = entry.mul(&det_expr(&minor));
        det = if col % 2 == 0 { det.add(&cof) } else { det.sub(&cof) };
    }
    det
}

/// The Wronskian-style determinant `det(y_{i, a})` with rows indexed by the
/// derivative order `a = 0..n-1` and columns by the component `i`.
pub fn wronskian_expr<C: Coeff>(n: u32) -> MPoly<C> {
    let mat: Vec<Vec<MPoly<C>>> = (0..n)
        .map(|a| (0..n).map(|i| MPoly::var(i, a)).collect())
        .collect();
    det_expr(&mat)
}

/// Annihilator of the product `f_1 ... f_n` of the component solutions.
pub fn sym_product<C: Coeff>(sys: &OreSystem<C>) -> Result<AnnihilatorResult<C>> {
    annihilator(sys, &product_expr(sys.len() as u32))
}

/// Annihilator of the power `f^k` of a solution of `l`.
pub fn sym_power<C: Coeff>(l: &OreOperator<C>, k: u32) -> Result<AnnihilatorResult<C>> {
    let sys = OreSystem::new(vec![l.clone()])?;
    annihilator(&sys, &power_expr(k))
}

/// Annihilator of `A . f` for a solution `f` of `l`; requires
/// `ord(A) < ord(l)`.
pub fn associate<C: Coeff>(
    l: &OreOperator<C>,
    a: &OreOperator<C>,
) -> Result<AnnihilatorResult<C>> {
    if a.algebra != l.algebra {
        return Err(Error::Mismatch(
            "operator and associate must live in the same algebra".into(),
        ));
    }
    if a.ord() >= l.ord() {
        return Err(Error::OrdPrecondition(format!(
            "ord(A) = {} must be below ord(L) = {}",
            a.ord().max(0),
            l.ord().max(0)
        )));
    }
    let sys = OreSystem::new(vec![l.clone()])?;
    annihilator(&sys, &associate_expr(a, 0))
}

/// Annihilator of the Wronskian of solutions of the `n` system operators;
/// requires every component order to be at least `n`.
pub fn wronskian<C: Coeff>(sys: &OreSystem<C>) -> Result<AnnihilatorResult<C>> {
    let n = sys.len() as u64;
    if let Some(&bad) = sys.orders().iter().find(|&&r| r < n) {
        return Err(Error::OrdPrecondition(format!(
            "wronskian of {n} functions needs component orders >= {n}, got {bad}"
        )));
    }
    annihilator(sys, &wronskian_expr(sys.len() as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::DomainKind;
    use crate::text::{parse_mpoly, parse_op, parse_poly};
    use num_bigint::BigInt;

    fn iop(s: &str, algebra: Algebra) -> OreOperator<BigInt> {
        parse_op(s, algebra, DomainKind::Int).unwrap()
    }

    fn isys(specs: &[&str], algebra: Algebra) -> OreSystem<BigInt> {
        OreSystem::new(specs.iter().map(|s| iop(s, algebra)).collect()).unwrap()
    }

    fn imp(s: &str) -> MPoly<BigInt> {
        parse_mpoly(s, DomainKind::Int).unwrap()
    }

    #[test]
    fn lclm_of_first_order_differential_operators() {
        // solutions e^x and e^(2x): the minimal common multiple annihilates
        // both, i.e. equals (Dx - 2)(Dx - 1) up to content
        let sys = isys(&["Dx - 1", "Dx - 2"], Algebra::Differential);
        let res = lclm_minimal(&sys).unwrap();
        assert_eq!(res.lclm, iop("Dx^2 - 3*Dx + 2", Algebra::Differential));
        for (m, l) in res.multipliers.iter().zip(sys.ops()) {
            assert_eq!(m.op_mul(l), res.raw());
        }
    }

    #[test]
    fn lclm_of_identical_operators() {
        let sys = isys(&["2*Sn^2 - 4*n*Sn + 2", "2*Sn^2 - 4*n*Sn + 2"], Algebra::Shift);
        let res = lclm_minimal(&sys).unwrap();
        assert_eq!(res.lclm, iop("Sn^2 - 2*n*Sn + 1", Algebra::Shift));
        assert_eq!(res.lclm.ord(), 2);
    }

    #[test]
    fn lclm_full_ansatz_sizes() {
        // two operators of order 1: full ansatz order 2, degree bound
        // (2*3-2)*d = 4d
        let sys = isys(&["Sn - (n + 1)", "Sn - 1"], Algebra::Shift);
        let res = lclm(&sys).unwrap();
        assert!(res.lclm.ord() <= 2);
        assert!(res.lclm.deg() <= 4);
        for (m, l) in res.multipliers.iter().zip(sys.ops()) {
            assert_eq!(m.op_mul(l), res.raw());
        }
        // annihilates both n! and 1, which are independent, so order is 2
        assert_eq!(res.lclm.ord(), 2);
    }

    #[test]
    fn clm_at_respects_the_counting_dichotomy() {
        let sys = isys(
            &["Sn^2 + n^2*Sn + 1", "Sn^2 + (n^2 + n)*Sn + n"],
            Algebra::Shift,
        );
        // curve at r = 4 gives d = 12
        assert_eq!(bounds::curve_lclm(&sys.curve_shapes(), 4).unwrap(), 12);
        assert!(matches!(clm_at(&sys, 4, 11), Err(Error::InfeasibleSize)));
        let res = clm_at(&sys, 4, 12).unwrap();
        assert!(res.vars > res.eqs);
        assert!(res.clm.ord() <= 4 && res.clm.deg() <= 12);
        for (m, l) in res.multipliers.iter().zip(sys.ops()) {
            assert_eq!(m.op_mul(l), res.clm.scale(&res.content));
        }
        // above the curve pole, higher order buys lower degree
        let res = clm_at(&sys, 5, 8).unwrap();
        assert!(res.clm.ord() <= 5 && res.clm.deg() <= 8);
    }

    #[test]
    fn normal_form_single_level() {
        // Dx - 1 (solution e^x): y[1,1] reduces to y[1,0]
        let sys = isys(&["Dx - 1"], Algebra::Differential);
        let nf = normal_form(&sys, &imp("y[1,1]"), 1).unwrap();
        assert_eq!(nf.v, imp("y[1,0]"));
        assert!(nf.multiplier.is_one());

        // non-monic: x*Dx - 1 gives x*y[1,1] = y[1,0], multiplier x
        let sys = isys(&["x*Dx - 1"], Algebra::Differential);
        let nf = normal_form(&sys, &imp("y[1,1]"), 1).unwrap();
        assert_eq!(nf.v, imp("y[1,0]"));
        assert_eq!(nf.multiplier, parse_poly::<BigInt>("x", DomainKind::Int).unwrap());
        // invariant: multiplier * p - v reduces to zero
        let diff = imp("y[1,1]").scale_poly(&nf.multiplier).sub(&nf.v);
        assert!(reduce_by_ideal(&sys, &diff).unwrap().is_zero());
    }

    #[test]
    fn normal_form_quadratic_shift() {
        // Sn - (n+1) annihilates n!: y[1,1]^2 = (n+1)^2 y[1,0]^2
        let sys = isys(&["Sn - (n + 1)"], Algebra::Shift);
        let nf = normal_form(&sys, &imp("y[1,1]^2"), 1).unwrap();
        assert_eq!(nf.v, imp("(n^2 + 2*n + 1)*y[1,0]^2"));
        let diff = imp("y[1,1]^2").scale_poly(&nf.multiplier).sub(&nf.v);
        assert!(reduce_by_ideal(&sys, &diff).unwrap().is_zero());
    }

    #[test]
    fn normal_form_two_levels() {
        // second-order component, reduce a second-shift square
        let sys = isys(&["Sn^2 - n*Sn - 1", "Sn - 2"], Algebra::Shift);
        let p = imp("y[1,3]*y[2,1] + y[1,0]*y[2,0]");
        let nf = normal_form(&sys, &p, 2).unwrap();
        assert!(nf.v.max_der(0).unwrap() < 2);
        assert!(nf.v.max_der(1).unwrap() < 1);
        let diff = p.scale_poly(&nf.multiplier).sub(&nf.v);
        assert!(reduce_by_ideal(&sys, &diff).unwrap().is_zero());
    }

    #[test]
    fn reduce_detects_ideal_members() {
        let sys = isys(&["Dx^2 - x"], Algebra::Differential);
        // the relation itself reduces to zero
        assert!(reduce_by_ideal(&sys, &imp("y[1,2] - x*y[1,0]"))
            .unwrap()
            .is_zero());
        // and so does its derivative: y[1,3] = y[1,0] + x*y[1,1]
        assert!(reduce_by_ideal(&sys, &imp("y[1,3] - x*y[1,1] - y[1,0]"))
            .unwrap()
            .is_zero());
        // but not a non-member
        assert!(!reduce_by_ideal(&sys, &imp("y[1,1] - y[1,0]"))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn symmetric_product_differential() {
        // e^x * e^(2x) = e^(3x)
        let sys = isys(&["Dx - 1", "Dx - 2"], Algebra::Differential);
        let res = sym_product(&sys).unwrap();
        assert_eq!(res.op, iop("Dx - 3", Algebra::Differential));
        assert_eq!(res.order_bound, 1);
        assert!(res.certificate.is_one());
        assert!(check_annihilates(&sys, &res.op, &res.certificate, &product_expr(2)).unwrap());
    }

    #[test]
    fn symmetric_product_shift() {
        // 2^n * 3^n = 6^n
        let sys = isys(&["Sn - 2", "Sn - 3"], Algebra::Shift);
        let res = sym_product(&sys).unwrap();
        assert_eq!(res.op, iop("Sn - 6", Algebra::Shift));
    }

    #[test]
    fn symmetric_power_differential() {
        // (e^x)^2 = e^(2x)
        let l = iop("Dx - 1", Algebra::Differential);
        let res = sym_power(&l, 2).unwrap();
        assert_eq!(res.op, iop("Dx - 2", Algebra::Differential));

        // square of a second-order component: m = binom(2+1, 2) = 3
        let l = iop("Dx^2 - x", Algebra::Differential);
        let res = sym_power(&l, 2).unwrap();
        assert_eq!(res.order_bound, 3);
        assert!(res.op.ord() <= 3 && res.op.ord() >= 1);
        let sys = OreSystem::new(vec![l]).unwrap();
        assert!(check_annihilates(&sys, &res.op, &res.certificate, &power_expr(2)).unwrap());
    }

    #[test]
    fn associate_of_airy_derivative() {
        // f'' = x f; annihilator of f' has order 2 again
        let l = iop("Dx^2 - x", Algebra::Differential);
        let a = iop("Dx", Algebra::Differential);
        let res = associate(&l, &a).unwrap();
        assert_eq!(res.order_bound, 2);
        assert!(res.op.ord() <= 2);
        let sys = OreSystem::new(vec![l]).unwrap();
        assert!(
            check_annihilates(&sys, &res.op, &res.certificate, &associate_expr(&a, 0)).unwrap()
        );
        // order precondition
        assert!(matches!(
            associate(&a, &a),
            Err(Error::OrdPrecondition(_))
        ));
    }

    #[test]
    fn wronskian_of_two_components() {
        let sys = isys(&["Sn^2 - n*Sn - 1", "Sn^2 - 2"], Algebra::Shift);
        let expr: MPoly<BigInt> = wronskian_expr(2);
        assert_eq!(expr, imp("y[1,0]*y[2,1] - y[1,1]*y[2,0]"));
        let res = wronskian(&sys).unwrap();
        assert_eq!(res.order_bound, 4);
        assert!(res.op.ord() >= 1 && res.op.ord() <= 4);
        assert!(check_annihilates(&sys, &res.op, &res.certificate, &expr).unwrap());
        // order-1 components cannot form a 2x2 wronskian
        let small = isys(&["Sn - 1", "Sn - 2"], Algebra::Shift);
        assert!(matches!(wronskian(&small), Err(Error::OrdPrecondition(_))));
    }

    #[test]
    fn annihilator_rejects_bad_expressions() {
        let sys = isys(&["Dx - 1"], Algebra::Differential);
        assert!(matches!(
            annihilator(&sys, &MPoly::zero()),
            Err(Error::ZeroInput)
        ));
        assert!(matches!(
            annihilator(&sys, &imp("y[1,0]^2 + y[1,0]")),
            Err(Error::Mismatch(_))
        ));
        assert!(matches!(
            annihilator(&sys, &imp("y[1,1]")),
            Err(Error::OrdPrecondition(_))
        ));
        assert!(matches!(
            annihilator(&sys, &imp("y[2,0]")),
            Err(Error::Mismatch(_))
        ));
    }

    #[test]
    fn annihilator_at_small_case() {
        let sys = isys(&["Dx - 1", "Dx - 2"], Algebra::Differential);
        let p = product_expr(2);
        assert!(matches!(
            annihilator_at(&sys, &p, 0, 5),
            Err(Error::OrderTooSmall)
        ));
        let res = annihilator_at(&sys, &p, 1, 0).unwrap();
        assert_eq!(res.op, iop("Dx - 3", Algebra::Differential));
        assert!(res.vars > res.eqs);
    }

    #[test]
    fn inhomogeneous_expression() {
        // e^x + x: annihilated by the lclm of (Dx - 1) and Dx^2
        let sys = isys(&["Dx - 1"], Algebra::Differential);
        let p = imp("y[1,0] + x");
        let l = annihilator_inhomogeneous(&sys, &p).unwrap();
        // e^x, 1, x are linearly independent, so the order is exactly 3
        assert_eq!(l.ord(), 3);
        // the y-part is annihilated: q L . y[1,0] reduces to zero
        assert!(check_annihilates(&sys, &l, &UniPoly::one(), &imp("y[1,0]")).unwrap());
        // the polynomial part is annihilated: L . x = 0 identically
        let applied = apply_operator(&l, &imp("x"));
        assert!(applied.is_zero());
    }

    #[test]
    fn poly_annihilator_matches_algebra() {
        let q = parse_poly::<BigInt>("n^2 + 1", DomainKind::Int).unwrap();
        let l = poly_annihilator(Algebra::Shift, &q);
        assert_eq!(l, iop("Sn^3 - 3*Sn^2 + 3*Sn - 1", Algebra::Shift));
        let applied = apply_operator(&l, &MPoly::from_poly(q.clone()));
        assert!(applied.is_zero());
        let l = poly_annihilator(Algebra::Differential, &q);
        assert_eq!(l, iop("Dx^3", Algebra::Differential));
        let l = poly_annihilator(Algebra::Difference, &q);
        let applied = apply_operator(&l, &MPoly::from_poly(q));
        assert!(applied.is_zero());
    }

    #[test]
    fn gf_lclm() {
        use crate::gf::GfPoly;
        let kind = DomainKind::Gf { p: 1091 };
        let l1: OreOperator<GfPoly> = parse_op("Sn - t", Algebra::Shift, kind).unwrap();
        let l2: OreOperator<GfPoly> = parse_op("Sn - 1", Algebra::Shift, kind).unwrap();
        let sys = OreSystem::new(vec![l1, l2]).unwrap();
        let res = lclm_minimal(&sys).unwrap();
        assert_eq!(res.lclm.ord(), 2);
        for (m, l) in res.multipliers.iter().zip(sys.ops()) {
            assert_eq!(m.op_mul(l), res.raw());
        }
    }
}

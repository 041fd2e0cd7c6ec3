//! Exact linear algebra over `R[x]`: fraction-free elimination and kernel
//! vectors whose sizes obey Cramer-type bounds, plus fast modular kernels
//! used by the experiment drivers.

use crate::domain::Coeff;
use crate::error::{Error, Result};
use crate::poly::UniPoly;

/// Outcome of fraction-free Gauss-Jordan elimination.
struct Reduced<C: Coeff> {
    u: Vec<Vec<UniPoly<C>>>,
    /// `(row, col)` of each pivot, in elimination order.
    pivots: Vec<(usize, usize)>,
    /// The last pivot (`1` if the matrix is zero); after full reduction
    /// every pivot row carries this value in its pivot column.
    last: UniPoly<C>,
}

/// One-step fraction-free Gauss-Jordan (Bareiss) reduction.  All entries
/// stay in `R[x]`; every division is exact.  Pivots are chosen of minimal
/// degree, then minimal coefficient weight, then by position, which keeps
/// the reduction deterministic and the entries small.
fn ffgj<C: Coeff>(rows: &[Vec<UniPoly<C>>]) -> Reduced<C> {
    let nrows = rows.len();
    let ncols = rows[0].len();
    let mut u = rows.to_vec();
    let mut prev = UniPoly::<C>::one();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row_used = vec![false; nrows];
    let mut col_used = vec![false; ncols];
    loop {
        let mut best: Option<(i64, u64, usize, usize)> = None;
        for r in 0..nrows {
            if row_used[r] {
                continue;
            }
            for c in 0..ncols {
                if col_used[c] || u[r][c].is_zero() {
                    continue;
                }
                let w = u[r][c]
                    .coeffs()
                    .iter()
                    .map(|a| a.pivot_weight())
                    .max()
                    .unwrap_or(0);
                let key = (u[r][c].deg(), w, r, c);
                if best.map_or(true, |b| key < b) {
                    best = Some(key);
                }
            }
        }
        let Some((_, _, pr, pc)) = best else { break };
        let p = u[pr][pc].clone();
        for r in 0..nrows {
            if r == pr {
                continue;
            }
            let f = u[r][pc].clone();
            for c in 0..ncols {
                let num = p.mul(&u[r][c]).sub(&f.mul(&u[pr][c]));
                u[r][c] = num
                    .exact_div(&prev)
                    .expect("fraction-free update divides exactly");
            }
        }
        prev = p;
        row_used[pr] = true;
        col_used[pc] = true;
        pivots.push((pr, pc));
    }
    Reduced { u, pivots, last: prev }
}

/// Divide out the common content of a vector of polynomials and normalize
/// the leading coefficient of its first nonzero entry.
pub fn normalize_vector<C: Coeff>(v: &mut [UniPoly<C>]) {
    let mut content = C::zero();
    for p in v.iter() {
        content = content.gcd(&p.content());
    }
    if content.is_zero() {
        return;
    }
    for p in v.iter_mut() {
        *p = p.exact_div_scalar(&content).expect("content divides");
    }
    let unit = v
        .iter()
        .find(|p| !p.is_zero())
        .map(|p| p.lc().normalizing_unit())
        .unwrap_or_else(C::one);
    for p in v.iter_mut() {
        *p = p.scale(&unit);
    }
}

/// One vector in the right kernel of the matrix (`A v = 0`), computed by
/// fraction-free elimination.  The entries are minors of `A` up to a common
/// factor, so their degree and height obey the Cramer bounds; the result is
/// content-reduced and sign-normalized.  The support is contained in the
/// pivot columns plus the first free column.
///
/// Errors: [`Error::EmptyInput`] for a matrix without rows,
/// [`Error::TrivialKernel`] when the matrix has full column rank.
pub fn nullspace_vector<C: Coeff>(rows: &[Vec<UniPoly<C>>]) -> Result<Vec<UniPoly<C>>> {
    if rows.is_empty() || rows[0].is_empty() {
        return Err(Error::EmptyInput);
    }
    let ncols = rows[0].len();
    assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
    let red = ffgj(rows);
    if red.pivots.len() == ncols {
        return Err(Error::TrivialKernel);
    }
    let pivot_cols: Vec<bool> = {
        let mut m = vec![false; ncols];
        for &(_, c) in &red.pivots {
            m[c] = true;
        }
        m
    };
    let free = (0..ncols).find(|&c| !pivot_cols[c]).unwrap();
    let mut v = vec![UniPoly::zero(); ncols];
    v[free] = red.last.clone();
    for &(r, c) in &red.pivots {
        v[c] = red.u[r][free].neg();
    }
    normalize_vector(&mut v);
    debug_assert!(rows.iter().all(|row| {
        let mut s = UniPoly::<C>::zero();
        for (a, b) in row.iter().zip(v.iter()) {
            s = s.add(&a.mul(b));
        }
        s.is_zero()
    }));
    Ok(v)
}

/// Rank of the matrix over the fraction field of `R[x]`.
pub fn rank<C: Coeff>(rows: &[Vec<UniPoly<C>>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    ffgj(rows).pivots.len()
}

/// Arithmetic and kernels over `GF(p)` for word-sized primes `p < 2^31`,
/// used by the modular experiment drivers (evaluation-interpolation and
/// Chinese remaindering).
pub mod modp {
    /// `a * b mod p`; safe because `p < 2^31`.
    #[inline]
    pub fn mulp(a: u64, b: u64, p: u64) -> u64 {
        a * b % p
    }

    pub fn powp(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulp(acc, a, p);
            }
            a = mulp(a, a, p);
            e >>= 1;
        }
        acc
    }

    /// Inverse of `a` modulo the prime `p`.
    pub fn invp(a: u64, p: u64) -> u64 {
        debug_assert!(a % p != 0, "inverse of zero");
        powp(a, p - 2, p)
    }

    /// Inverses of `1..=n` modulo `p` (index 0 unused); requires `n < p`.
    pub fn inv_table(n: usize, p: u64) -> Vec<u64> {
        assert!((n as u64) < p);
        let mut inv = vec![0u64; n + 1];
        if n >= 1 {
            inv[1] = 1;
        }
        for i in 2..=n {
            inv[i] = mulp(p - p / i as u64, inv[(p % i as u64) as usize], p);
        }
        inv
    }

    /// Evaluate a polynomial (lowest coefficient first) at `x` mod `p`.
    pub fn eval(coeffs: &[u64], x: u64, p: u64) -> u64 {
        let mut acc = 0u64;
        for &c in coeffs.iter().rev() {
            acc = (mulp(acc, x, p) + c) % p;
        }
        acc
    }

    /// Row echelon reduction in place.  Returns the pivot columns (in
    /// order) and the number of row swaps performed.
    fn echelon(rows: &mut [Vec<u64>], p: u64) -> (Vec<usize>, usize) {
        let nrows = rows.len();
        let ncols = if nrows == 0 { 0 } else { rows[0].len() };
        let mut pivot_cols = Vec::new();
        let mut swaps = 0usize;
        let mut r = 0usize;
        for c in 0..ncols {
            if r == nrows {
                break;
            }
            let Some(pr) = (r..nrows).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            if pr != r {
                rows.swap(pr, r);
                swaps += 1;
            }
            let inv = invp(rows[r][c], p);
            for i in r + 1..nrows {
                if rows[i][c] == 0 {
                    continue;
                }
                let f = mulp(rows[i][c], inv, p);
                for j in c..ncols {
                    let sub = mulp(f, rows[r][j], p);
                    rows[i][j] = (rows[i][j] + p - sub) % p;
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        (pivot_cols, swaps)
    }

    fn back_substitute(
        rows: &[Vec<u64>],
        pivot_cols: &[usize],
        free: usize,
        p: u64,
    ) -> Vec<u64> {
        let ncols = rows[0].len();
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (k, &c) in pivot_cols.iter().enumerate().rev() {
            let mut s = 0u64;
            for j in c + 1..ncols {
                if rows[k][j] != 0 && v[j] != 0 {
                    s = (s + mulp(rows[k][j], v[j], p)) % p;
                }
            }
            v[c] = mulp(p - s % p, invp(rows[k][c], p), p) % p;
        }
        v
    }

    /// One kernel vector of the matrix over `GF(p)`, normalized so that its
    /// first free coordinate is 1; `None` when the matrix has full column
    /// rank.  Consumes the matrix.
    pub fn kernel_vector(rows: &mut [Vec<u64>], p: u64) -> Option<Vec<u64>> {
        if rows.is_empty() || rows[0].is_empty() {
            return None;
        }
        let ncols = rows[0].len();
        let (pivot_cols, _) = echelon(rows, p);
        if pivot_cols.len() == ncols {
            return None;
        }
        let free = (0..ncols).find(|c| !pivot_cols.contains(c)).unwrap();
        Some(back_substitute(rows, &pivot_cols, free, p))
    }

    /// For an `n x (n+1)` matrix `A`, the canonical kernel vector of signed
    /// maximal minors, `w_j = (-1)^j det(A with column j removed)`.  This
    /// is a fixed polynomial function of the entries (independent of
    /// pivoting choices), which makes it interpolatable across evaluation
    /// points; the zero vector is returned when the rank is below `n`.
    /// Consumes the matrix.
    pub fn kernel_minor_vector(rows: &mut [Vec<u64>], p: u64) -> Vec<u64> {
        let n = rows.len();
        assert!(rows[0].len() == n + 1, "matrix must be n x (n+1)");
        let (pivot_cols, swaps) = echelon(rows, p);
        if pivot_cols.len() < n {
            return vec![0; n + 1];
        }
        let free = (0..n + 1).find(|c| !pivot_cols.contains(c)).unwrap();
        let v = back_substitute(rows, &pivot_cols, free, p);
        // w = (-1)^(free + swaps) * (product of pivots) * v
        let mut det = 1u64;
        for (k, &c) in pivot_cols.iter().enumerate() {
            det = mulp(det, rows[k][c], p);
        }
        if (free + swaps) % 2 == 1 {
            det = (p - det) % p;
        }
        v.into_iter().map(|x| mulp(x, det, p)).collect()
    }

    /// Forward differences at 0: returns `delta^k f(0)` for `k` up to
    /// `vals.len() - 1`, where `vals[i] = f(i)`.
    pub fn forward_differences(vals: &[u64], p: u64) -> Vec<u64> {
        let n = vals.len();
        let mut d = vals.to_vec();
        let mut out = Vec::with_capacity(n);
        out.push(d[0]);
        for k in 1..n {
            for i in 0..n - k {
                d[i] = (d[i + 1] + p - d[i]) % p;
            }
            out.push(d[0]);
        }
        out
    }

    /// Degree read off a forward-difference table: the top nonzero
    /// difference.  Exact when the table is longer than the degree and the
    /// degree is below `p`.
    pub fn degree_from_diffs(diffs: &[u64]) -> i64 {
        diffs
            .iter()
            .rposition(|&d| d != 0)
            .map(|k| k as i64)
            .unwrap_or(-1)
    }

    /// Convert Newton forward-difference coefficients (at nodes `0,1,..`)
    /// to monomial coefficients:
    /// `f(x) = sum_k diffs[k]/k! * x (x-1) ... (x-k+1)`.
    pub fn newton_to_monomial(diffs: &[u64], p: u64) -> Vec<u64> {
        let n = diffs.len();
        if n == 0 {
            return vec![];
        }
        let mut acc = vec![0u64; n];
        // falling-factorial basis polynomial, extended one step per k
        let mut basis = vec![0u64; n];
        basis[0] = 1;
        let mut inv_fact = 1u64;
        let inv = inv_table(n.max(1), p);
        for k in 0..n {
            if k > 0 {
                inv_fact = mulp(inv_fact, inv[k], p);
                // basis *= (x - (k-1))
                let shift = (p - (k as u64 - 1) % p) % p;
                for i in (0..n).rev() {
                    let hi = if i > 0 { basis[i - 1] } else { 0 };
                    basis[i] = (hi + mulp(basis[i], shift, p)) % p;
                }
            }
            if diffs[k] == 0 {
                continue;
            }
            let c = mulp(diffs[k], inv_fact, p);
            for i in 0..=k {
                acc[i] = (acc[i] + mulp(c, basis[i], p)) % p;
            }
        }
        while acc.last() == Some(&0) {
            acc.pop();
        }
        acc
    }
}

/// Polynomial gcd over `Z[x]`, computed from modular images.
///
/// Kernel vectors of polynomial ansatz systems are made of matrix minors
/// and often share a large common polynomial factor; dividing it out
/// recovers the minimal solution.  The gcd is found by reducing modulo
/// 31-bit primes, taking gcds over `GF(q)`, lifting by CRT, and certifying
/// the stabilized candidate by exact division, so the result is correct
/// unconditionally.
pub mod zx {
    use super::modp;
    use crate::gf::Primes;
    use crate::poly::UniPoly;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{Signed, ToPrimitive, Zero};

    /// Hard cap on the number of primes; reaching it means the inputs were
    /// far larger than anything the crate produces, and the fallback
    /// (integer content only) is still a correct common divisor.
    const MAX_PRIMES: usize = 512;

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    /// Remainder of `a` modulo `b` over `GF(q)`; `b` must be nonzero.
    fn rem_mod(mut a: Vec<u64>, b: &[u64], q: u64) -> Vec<u64> {
        let lb = *b.last().expect("nonzero divisor");
        let lb_inv = modp::invp(lb, q);
        while a.len() >= b.len() {
            let f = modp::mulp(*a.last().unwrap(), lb_inv, q);
            let shift = a.len() - b.len();
            if f != 0 {
                for (i, &bc) in b.iter().enumerate() {
                    let s = modp::mulp(f, bc, q);
                    a[shift + i] = (a[shift + i] + q - s) % q;
                }
            }
            a.pop();
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        a
    }

    /// Monic gcd of two polynomials over `GF(q)` (empty vector for zero).
    fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, q: u64) -> Vec<u64> {
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem_mod(a, &b, q);
            a = b;
            b = r;
        }
        if let Some(&lc) = a.last() {
            let inv = modp::invp(lc, q);
            for c in a.iter_mut() {
                *c = modp::mulp(*c, inv, q);
            }
        }
        a
    }

    fn reduce(p: &UniPoly<BigInt>, qb: &BigInt) -> Vec<u64> {
        let mut v: Vec<u64> = p
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(qb).to_u64().expect("residue fits"))
            .collect();
        trim(&mut v);
        v
    }

    /// The gcd of a family of integer polynomials, with positive leading
    /// coefficient and including the common integer content.  The gcd of
    /// an all-zero family is zero.
    pub fn poly_gcd(polys: &[UniPoly<BigInt>]) -> UniPoly<BigInt> {
        let nz: Vec<&UniPoly<BigInt>> = polys.iter().filter(|p| !p.is_zero()).collect();
        if nz.is_empty() {
            return UniPoly::zero();
        }
        let mut ic = BigInt::zero();
        let mut gl = BigInt::zero();
        for p in &nz {
            ic = ic.gcd(&p.content());
            gl = gl.gcd(&p.lc());
        }
        let min_deg = nz.iter().map(|p| p.deg()).min().unwrap();
        if min_deg == 0 {
            return UniPoly::constant(ic);
        }

        let mut primes = Primes::new();
        // accumulated CRT lift of the gcd scaled to leading coefficient gl
        let mut acc: Vec<BigInt> = Vec::new();
        let mut modulus = BigInt::zero();
        let mut cur_deg = i64::MAX;
        let mut prev: Option<UniPoly<BigInt>> = None;
        for _ in 0..MAX_PRIMES {
            let q = primes.next().expect("prime stream");
            let qb = BigInt::from(q);
            // a prime dividing gl shrinks the image of the scaled gcd
            if gl.mod_floor(&qb).is_zero() {
                continue;
            }
            let imgs: Vec<Vec<u64>> = nz.iter().map(|p| reduce(p, &qb)).collect();
            let mut gq = imgs[0].clone();
            for im in &imgs[1..] {
                if gq.len() <= 1 {
                    break;
                }
                gq = gcd_mod(gq, im.clone(), q);
            }
            if gq.len() <= 1 {
                // coprime images certify a constant gcd
                return UniPoly::constant(ic);
            }
            let e = (gq.len() - 1) as i64;
            if e > cur_deg {
                continue; // unlucky prime
            }
            let glq = gl.mod_floor(&qb).to_u64().expect("residue fits");
            for c in gq.iter_mut() {
                *c = modp::mulp(*c, glq, q);
            }
            if e < cur_deg {
                // best degree so far: restart the lift from this prime
                cur_deg = e;
                acc = gq.iter().map(|&c| BigInt::from(c)).collect();
                modulus = qb;
                prev = None;
            } else {
                let minv = modp::invp(modulus.mod_floor(&qb).to_u64().expect("residue fits"), q);
                for (cur, &res) in acc.iter_mut().zip(&gq) {
                    let c = cur.mod_floor(&qb).to_u64().expect("residue fits");
                    let t = modp::mulp((q + res - c) % q, minv, q);
                    *cur += &modulus * t;
                }
                modulus *= &qb;
            }
            let half: BigInt = &modulus >> 1;
            let lifted: Vec<BigInt> = acc
                .iter()
                .map(|x| if *x > half { x - &modulus } else { x.clone() })
                .collect();
            let mut cand = UniPoly::new(lifted);
            let cc = cand.content();
            cand = cand
                .exact_div_scalar(&cc)
                .expect("content divides its polynomial");
            if cand.lc().is_negative() {
                cand = cand.scale_small(-1);
            }
            if prev.as_ref() == Some(&cand)
                && nz.iter().all(|p| p.exact_div(&cand).is_some())
            {
                return cand.scale(&ic);
            }
            prev = Some(cand);
        }
        UniPoly::constant(ic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn zp(v: &[i64]) -> UniPoly<BigInt> {
        UniPoly::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn zrow(v: &[i64]) -> Vec<UniPoly<BigInt>> {
        v.iter().map(|&x| zp(&[x])).collect()
    }

    fn apply(rows: &[Vec<UniPoly<BigInt>>], v: &[UniPoly<BigInt>]) -> Vec<UniPoly<BigInt>> {
        rows.iter()
            .map(|row| {
                let mut s = UniPoly::zero();
                for (a, b) in row.iter().zip(v.iter()) {
                    s = s.add(&a.mul(b));
                }
                s
            })
            .collect()
    }

    #[test]
    fn constant_kernel() {
        let rows = vec![zrow(&[1, 2, 3]), zrow(&[4, 5, 6])];
        let v = nullspace_vector(&rows).unwrap();
        assert!(apply(&rows, &v).iter().all(|p| p.is_zero()));
        assert_eq!(v, vec![zp(&[1]), zp(&[-2]), zp(&[1])]);
    }

    #[test]
    fn full_rank_is_trivial() {
        let rows = vec![zrow(&[1, 0, 0]), zrow(&[0, 1, 0]), zrow(&[0, 0, 2])];
        assert!(matches!(
            nullspace_vector(&rows),
            Err(Error::TrivialKernel)
        ));
        assert_eq!(rank(&rows), 3);
    }

    #[test]
    fn polynomial_kernel() {
        // rows constructed orthogonal to v = (x, -(x+1), 1); the kernel is
        // 1-dimensional, so the minor vector is v times a common
        // polynomial factor g (only scalar content is divided out)
        let v_expect = [zp(&[0, 1]), zp(&[1, 1]).neg(), zp(&[1])];
        let mk_row = |a: UniPoly<BigInt>, b: UniPoly<BigInt>| {
            let c = a.mul(&v_expect[0]).add(&b.mul(&v_expect[1])).neg();
            vec![a, b, c]
        };
        let rows = vec![mk_row(zp(&[1, 1]), zp(&[0, 1])), mk_row(zp(&[3]), zp(&[1, 0, 1]))];
        let v = nullspace_vector(&rows).unwrap();
        assert!(apply(&rows, &v).iter().all(|p| p.is_zero()));
        let g = v[2].clone(); // v_expect[2] = 1
        assert!(!g.is_zero());
        for (got, want) in v.iter().zip(v_expect.iter()) {
            assert_eq!(*got, want.mul(&g));
        }
        // Cramer degree bound: n rows of degree <= d give deg <= (n+1) d
        let d = rows.iter().flatten().map(|p| p.deg()).max().unwrap();
        assert!(v.iter().all(|p| p.deg() <= 3 * d));
    }

    #[test]
    fn normalization_properties() {
        let rows = vec![zrow(&[2, 4, 6])];
        let v = nullspace_vector(&rows).unwrap();
        // content-free and first nonzero entry positive
        let mut content = BigInt::from(0);
        for p in &v {
            content = Coeff::gcd(&content, &p.content());
        }
        assert_eq!(content, BigInt::from(1));
        let first = v.iter().find(|p| !p.is_zero()).unwrap();
        assert!(first.lc() > BigInt::from(0));
    }

    mod modp_tests {
        use super::super::modp::*;

        const P: u64 = 97;

        #[test]
        fn inverse_tables() {
            let inv = inv_table(50, P);
            for a in 1..=50u64 {
                assert_eq!(mulp(a, inv[a as usize], P), 1);
                assert_eq!(invp(a, P), inv[a as usize]);
            }
        }

        fn det3(m: &[[u64; 3]; 3], p: u64) -> u64 {
            let pos = mulp(m[0][0], mulp(m[1][1], m[2][2], p), p)
                + mulp(m[0][1], mulp(m[1][2], m[2][0], p), p)
                + mulp(m[0][2], mulp(m[1][0], m[2][1], p), p);
            let neg = mulp(m[0][2], mulp(m[1][1], m[2][0], p), p)
                + mulp(m[0][0], mulp(m[1][2], m[2][1], p), p)
                + mulp(m[0][1], mulp(m[1][0], m[2][2], p), p);
            (pos % p + p - neg % p) % p
        }

        #[test]
        fn minor_vector_matches_determinants() {
            // deterministic pseudo-random 3x4 matrices
            let mut state = 12345u64;
            let mut rng = || {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (state >> 33) % P
            };
            for _ in 0..20 {
                let a: Vec<Vec<u64>> = (0..3).map(|_| (0..4).map(|_| rng()).collect()).collect();
                let mut work = a.clone();
                let w = kernel_minor_vector(&mut work, P);
                for j in 0..4 {
                    let mut sub = [[0u64; 3]; 3];
                    for r in 0..3 {
                        let mut cc = 0;
                        for c in 0..4 {
                            if c != j {
                                sub[r][cc] = a[r][c];
                                cc += 1;
                            }
                        }
                    }
                    let mut want = det3(&sub, P);
                    if j % 2 == 1 {
                        want = (P - want) % P;
                    }
                    assert_eq!(w[j], want, "minor {j}");
                }
                // and A w = 0
                for r in 0..3 {
                    let mut s = 0u64;
                    for c in 0..4 {
                        s = (s + mulp(a[r][c], w[c], P)) % P;
                    }
                    assert_eq!(s, 0);
                }
            }
        }

        #[test]
        fn kernel_vector_annihilates() {
            let a = vec![
                vec![1, 2, 3, 4, 5],
                vec![2, 4, 6, 8, 10],
                vec![1, 0, 1, 0, 1],
            ];
            let mut work = a.clone();
            let v = kernel_vector(&mut work, P).unwrap();
            assert!(v.iter().any(|&x| x != 0));
            for r in 0..3 {
                let mut s = 0u64;
                for c in 0..5 {
                    s = (s + mulp(a[r][c], v[c], P)) % P;
                }
                assert_eq!(s, 0);
            }
            // full column rank has no kernel
            let mut id = vec![vec![1, 0], vec![0, 1], vec![5, 7]];
            assert!(kernel_vector(&mut id, P).is_none());
        }

        #[test]
        fn newton_interpolation() {
            let p = 101u64;
            let coeffs = vec![3, 0, 5, 7]; // 7x^3+5x^2+3
            let vals: Vec<u64> = (0..8).map(|x| eval(&coeffs, x, p)).collect();
            let diffs = forward_differences(&vals, p);
            assert_eq!(degree_from_diffs(&diffs), 3);
            assert_eq!(newton_to_monomial(&diffs, p), coeffs);
            // constant and zero cases
            let vals = vec![4, 4, 4];
            let d = forward_differences(&vals, p);
            assert_eq!(degree_from_diffs(&d), 0);
            assert_eq!(newton_to_monomial(&d, p), vec![4]);
            let z = forward_differences(&[0, 0], p);
            assert_eq!(degree_from_diffs(&z), -1);
            assert!(newton_to_monomial(&z, p).is_empty());
        }
    }

    #[test]
    fn zx_gcd_recovers_common_factor() {
        // gcd of 6(x+1)(x-2) and 4(x+1)(x+3) is 2(x+1)
        let p1 = zp(&[-2, -1, 1]).scale(&BigInt::from(6));
        let p2 = zp(&[3, 4, 1]).scale(&BigInt::from(4));
        assert_eq!(zx::poly_gcd(&[p1, p2]), zp(&[2, 2]));
        // coprime polynomials leave only the integer content
        let q1 = zp(&[1, 1]).scale(&BigInt::from(3));
        let q2 = zp(&[2, 1]).scale(&BigInt::from(6));
        assert_eq!(zx::poly_gcd(&[q1, q2]), zp(&[3]));
        // sign is normalized to a positive leading coefficient
        let n1 = zp(&[-1, -1]);
        let n2 = zp(&[-2, -3, -1]);
        assert_eq!(zx::poly_gcd(&[n1, n2]), zp(&[1, 1]));
        assert!(zx::poly_gcd(&[UniPoly::<BigInt>::zero()]).is_zero());
    }

    #[test]
    fn zx_gcd_large_coefficients() {
        // common factor with coefficients far beyond one prime
        let big = BigInt::from(1u64 << 40) * BigInt::from(1u64 << 40);
        let g = UniPoly::new(vec![big.clone() + 1, BigInt::from(3), big]);
        let c1 = g.mul(&zp(&[1, 0, 7]));
        let c2 = g.mul(&zp(&[5, 2]));
        let c3 = g.mul(&zp(&[-3, 1, 1, 1]));
        let got = zx::poly_gcd(&[c1.clone(), c2.clone(), c3.clone()]);
        assert_eq!(got, g);
        assert_eq!(c1.exact_div(&got), Some(zp(&[1, 0, 7])));
    }
}

//! Dense univariate polynomials over a prime field `GF(p)`, used as the
//! coefficient ring `GF(p)[t]`.
//!
//! The modulus is carried per element and must fit in 31 bits so that all
//! products fit in `i64` without overflow.  Elements created by the generic
//! `Zero`/`One` constructors carry the placeholder modulus `0` ("integer
//! literal, not yet reduced"); any arithmetic with an element of a concrete
//! modulus reduces them on the fly.

use crate::error::{Error, Result};
use crate::height::{Height, HeightMode};
use num_traits::{One, Zero};
use std::fmt;

/// Largest allowed modulus (exclusive): products of two canonical residues
/// must fit in `i64`.
pub const MAX_MODULUS: i64 = 1 << 31;

/// Check that `p` is usable as a modulus (primality is the caller's
/// responsibility; the CLI validates with a trial-division test).
pub fn check_modulus(p: i64) -> Result<()> {
    if p < 2 || p >= MAX_MODULUS {
        return Err(Error::Config(format!(
            "modulus {p} out of range (need 2 <= p < 2^31)"
        )));
    }
    Ok(())
}

/// Deterministic trial-division primality test for moduli up to 2^31.
pub fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3i64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[inline]
fn modp(v: i64, p: i64) -> i64 {
    v.rem_euclid(p)
}

/// Modular exponentiation.
pub fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1 % p;
    b = modp(b, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Modular inverse of a nonzero residue (Fermat; `p` must be prime).
pub fn inv_mod(a: i64, p: i64) -> i64 {
    debug_assert!(modp(a, p) != 0, "inverse of zero mod {p}");
    pow_mod(a, p - 2, p)
}

/// An element of `GF(p)[t]`: dense coefficients `c[k]` of `t^k`, canonical
/// in `[0, p)`, with no trailing zeros.  `p == 0` marks an unreduced small
/// integer constant (only produced by `zero()`/`one()` and their images
/// under ring operations in generic code).
#[derive(Debug, Clone)]
pub struct GfPoly {
    p: i64,
    c: Vec<i64>,
}

impl GfPoly {
    /// Construct from raw coefficients (any integers), reducing mod `p` and
    /// stripping trailing zeros.
    pub fn new(p: i64, coeffs: &[i64]) -> GfPoly {
        assert!((2..MAX_MODULUS).contains(&p), "bad modulus {p}");
        let mut c: Vec<i64> = coeffs.iter().map(|&v| modp(v, p)).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        GfPoly { p, c }
    }

    /// The constant `v mod p`.
    pub fn constant(p: i64, v: i64) -> GfPoly {
        GfPoly::new(p, &[v])
    }

    /// The monomial `t`.
    pub fn t(p: i64) -> GfPoly {
        GfPoly::new(p, &[0, 1])
    }

    /// An integer literal with no modulus attached yet (reduced on first
    /// contact with an element of a concrete modulus).
    pub fn literal(v: i64) -> GfPoly {
        GfPoly { p: 0, c: vec![v] }.trim()
    }

    /// The modulus, or 0 for an unreduced literal.
    pub fn modulus(&self) -> i64 {
        self.p
    }

    /// Degree in `t`; -1 for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    /// Coefficient of `t^k` (canonical residue), 0 beyond the degree.
    pub fn coeff(&self, k: usize) -> i64 {
        self.c.get(k).copied().unwrap_or(0)
    }

    /// Leading coefficient; 0 for the zero polynomial.
    pub fn lc(&self) -> i64 {
        self.c.last().copied().unwrap_or(0)
    }

    /// Resolve the modulus for a binary operation, reducing literal
    /// operands if needed.
    fn unified(&self, other: &GfPoly) -> (GfPoly, GfPoly, i64) {
        let p = match (self.p, other.p) {
            (0, 0) => 0,
            (0, q) | (q, 0) => q,
            (a, b) => {
                assert_eq!(a, b, "mixed moduli {a} and {b}");
                a
            }
        };
        let fix = |g: &GfPoly| -> GfPoly {
            if g.p == p || p == 0 {
                g.clone()
            } else {
                GfPoly::new(p, &g.c)
            }
        };
        (fix(self), fix(other), p)
    }

    fn trim(mut self) -> GfPoly {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
        self
    }

    /// Evaluate at `t = tau` (as a residue mod p).
    pub fn eval(&self, tau: i64) -> i64 {
        assert!(self.p != 0 || self.c.len() <= 1, "literal with a degree");
        if self.p == 0 {
            return self.c.first().copied().unwrap_or(0);
        }
        let tau = modp(tau, self.p);
        let mut acc = 0i64;
        for &a in self.c.iter().rev() {
            acc = (acc * tau + a) % self.p;
        }
        acc
    }

    /// Exact polynomial division; `None` if `d` is zero or does not divide.
    pub fn exact_div_poly(&self, d: &GfPoly) -> Option<GfPoly> {
        let (a, b, p) = self.unified(d);
        if b.is_zero() {
            return None;
        }
        if a.is_zero() {
            return Some(a);
        }
        if p == 0 {
            // two integer literals
            let x = a.c[0];
            let y = b.c[0];
            if y != 0 && x % y == 0 {
                return Some(GfPoly { p: 0, c: vec![x / y] }.trim());
            }
            return None;
        }
        if a.deg() < b.deg() {
            return None;
        }
        let inv_lead = inv_mod(b.lc(), p);
        let mut rem = a.c.clone();
        let mut quot = vec![0i64; (a.deg() - b.deg() + 1) as usize];
        for k in (0..quot.len()).rev() {
            let top = rem[k + b.c.len() - 1];
            if top == 0 {
                continue;
            }
            let q = top * inv_lead % p;
            quot[k] = q;
            for (i, &bc) in b.c.iter().enumerate() {
                rem[k + i] = modp(rem[k + i] - q * bc, p);
            }
        }
        if rem.iter().any(|&v| v != 0) {
            return None;
        }
        Some(GfPoly { p, c: quot }.trim())
    }

    /// Monic gcd (Euclid); gcd(0,0) = 0.
    pub fn gcd_poly(&self, other: &GfPoly) -> GfPoly {
        let (mut a, mut b, p) = self.unified(other);
        if p == 0 {
            // two integer literals: any nonzero literal is a unit up to sign
            let nonzero = !a.is_zero() || !b.is_zero();
            return GfPoly { p: 0, c: if nonzero { vec![1] } else { vec![] } };
        }
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    fn rem(&self, d: &GfPoly) -> GfPoly {
        let p = self.p;
        debug_assert!(p != 0 && !d.is_zero());
        if self.deg() < d.deg() {
            return self.clone();
        }
        let inv_lead = inv_mod(d.lc(), p);
        let mut rem = self.c.clone();
        for k in (0..=(self.deg() - d.deg()) as usize).rev() {
            let top = rem[k + d.c.len() - 1];
            if top == 0 {
                continue;
            }
            let q = top * inv_lead % p;
            for (i, &bc) in d.c.iter().enumerate() {
                rem[k + i] = modp(rem[k + i] - q * bc, p);
            }
        }
        GfPoly { p, c: rem }.trim()
    }

    /// Scale so the leading coefficient becomes 1 (zero stays zero).
    pub fn make_monic(&self) -> GfPoly {
        if self.is_zero() || self.p == 0 {
            return self.clone().trim();
        }
        let inv = inv_mod(self.lc(), self.p);
        GfPoly {
            p: self.p,
            c: self.c.iter().map(|&v| v * inv % self.p).collect(),
        }
    }

    /// The constant polynomial holding the inverse of this (nonzero
    /// constant) element.
    pub fn inverse_constant(&self) -> Result<GfPoly> {
        if self.p == 0 {
            let v = self.c.first().copied().unwrap_or(0);
            return match v {
                1 => Ok(self.clone()),
                -1 => Ok(self.clone()),
                _ => Err(Error::Mismatch("inverse of non-unit literal".into())),
            };
        }
        if self.deg() != 0 {
            return Err(Error::Mismatch("inverse of a non-constant".into()));
        }
        Ok(GfPoly::constant(self.p, inv_mod(self.c[0], self.p)))
    }

    /// Height under the degree-based modes.
    pub fn height(&self, mode: HeightMode) -> Height {
        match mode {
            HeightMode::DegOnly => Height::Exact(self.deg().max(0)),
            HeightMode::OnePlusDeg => {
                if self.is_zero() {
                    Height::Exact(0)
                } else {
                    Height::Exact(1 + self.deg())
                }
            }
            HeightMode::LogAbs => {
                panic!("log-abs height is only defined over the integers")
            }
        }
    }
}

impl PartialEq for GfPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.unified(other);
        a.c == b.c
    }
}
impl Eq for GfPoly {}

impl Zero for GfPoly {
    fn zero() -> Self {
        GfPoly { p: 0, c: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl One for GfPoly {
    fn one() -> Self {
        GfPoly { p: 0, c: vec![1] }
    }
}

impl std::ops::Add for GfPoly {
    type Output = GfPoly;
    fn add(self, rhs: GfPoly) -> GfPoly {
        let (a, b, p) = self.unified(&rhs);
        let n = a.c.len().max(b.c.len());
        let mut c = vec![0i64; n];
        for i in 0..n {
            let v = a.c.get(i).unwrap_or(&0) + b.c.get(i).unwrap_or(&0);
            c[i] = if p == 0 { v } else { modp(v, p) };
        }
        GfPoly { p, c }.trim()
    }
}

impl std::ops::Sub for GfPoly {
    type Output = GfPoly;
    fn sub(self, rhs: GfPoly) -> GfPoly {
        self + (-rhs)
    }
}

impl std::ops::Neg for GfPoly {
    type Output = GfPoly;
    fn neg(mut self) -> GfPoly {
        let p = self.p;
        for v in &mut self.c {
            *v = if p == 0 { -*v } else { modp(-*v, p) };
        }
        self
    }
}

impl std::ops::Mul for GfPoly {
    type Output = GfPoly;
    fn mul(self, rhs: GfPoly) -> GfPoly {
        let (a, b, p) = self.unified(&rhs);
        if a.is_zero() || b.is_zero() {
            return GfPoly { p, c: vec![] };
        }
        let mut c = vec![0i64; a.c.len() + b.c.len() - 1];
        for (i, &x) in a.c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.c.iter().enumerate() {
                let v = c[i + j] + x * y;
                c[i + j] = if p == 0 { v } else { v % p };
            }
        }
        GfPoly { p, c }.trim()
    }
}

impl fmt::Display for GfPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &v) in self.c.iter().enumerate().rev() {
            if v == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{v}")?,
                1 => {
                    if v == 1 {
                        f.write_str("t")?
                    } else {
                        write!(f, "{v}*t")?
                    }
                }
                _ => {
                    if v == 1 {
                        write!(f, "t^{k}")?
                    } else {
                        write!(f, "{v}*t^{k}")?
                    }
                }
            }
        }
        Ok(())
    }
}

/// Descending stream of odd primes starting at `2^31 - 1`, used by the
/// modular reconstruction engines.
pub struct Primes {
    next: i64,
}

impl Primes {
    pub fn new() -> Primes {
        Primes {
            next: (1i64 << 31) - 1,
        }
    }
}

impl Default for Primes {
    fn default() -> Self {
        Primes::new()
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while !is_prime(self.next) {
            self.next -= 2;
        }
        let p = self.next;
        self.next -= 2;
        Some(p as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_normalization() {
        let p = 7;
        let a = GfPoly::new(p, &[1, 2, 3]); // 3t^2+2t+1
        let b = GfPoly::new(p, &[6, 5]); // 5t+6
        let s = a.clone() + b.clone();
        assert_eq!(s, GfPoly::new(p, &[0, 0, 3]));
        let prod = a.clone() * b.clone();
        // (3t^2+2t+1)(5t+6) = 15t^3 + 28t^2 + 17t + 6 = t^3 + 3t + 6 mod 7
        assert_eq!(prod, GfPoly::new(p, &[6, 3, 0, 1]));
        assert_eq!(prod.exact_div_poly(&b).unwrap(), a);
        assert_eq!(prod.exact_div_poly(&GfPoly::new(p, &[1, 1])), None);
    }

    #[test]
    fn literals_unify_with_concrete_moduli() {
        let one = GfPoly::one();
        let a = GfPoly::new(5, &[3]);
        assert_eq!(one.clone() * a.clone(), a);
        assert_eq!((-one) + a.clone(), GfPoly::new(5, &[2]));
        assert!(GfPoly::zero().is_zero());
    }

    #[test]
    fn gcd_is_monic() {
        let p = 1091;
        let a = GfPoly::new(p, &[0, 2]); // 2t
        let b = GfPoly::new(p, &[0, 0, 4]); // 4t^2
        assert_eq!(a.gcd_poly(&b), GfPoly::t(p));
        let z = GfPoly::zero();
        assert_eq!(z.gcd_poly(&a), GfPoly::t(p));
    }

    #[test]
    fn heights_match_mode() {
        let p = 1091;
        let a = GfPoly::new(p, &[1, 0, 1]); // t^2+1
        assert_eq!(a.height(HeightMode::DegOnly), Height::Exact(2));
        assert_eq!(a.height(HeightMode::OnePlusDeg), Height::Exact(3));
        assert_eq!(GfPoly::zero().height(HeightMode::DegOnly), Height::Exact(0));
        assert_eq!(GfPoly::zero().height(HeightMode::OnePlusDeg), Height::Exact(0));
        let c = GfPoly::constant(p, 5);
        assert_eq!(c.height(HeightMode::DegOnly), Height::Exact(0));
    }

    #[test]
    fn modular_inverse() {
        assert_eq!(pow_mod(2, 10, 1091), 1024 % 1091);
        for a in 1..50 {
            let i = inv_mod(a, 1091);
            assert_eq!(a * i % 1091, 1);
        }
        assert!(is_prime(1091));
        assert!(is_prime(1048573));
        assert!(!is_prime(1092));
    }
}

//! Coefficient domains: the ring `R` of operator coefficients.
//!
//! Two domains are supported: the integers (arbitrary precision) with the
//! logarithmic height, and `GF(p)[t]` with a degree-based height.  All
//! operator and polynomial code is generic over the scalar type through the
//! [`Coeff`] trait; [`Domain`] is the runtime descriptor used where heights
//! of integer constants (as ring elements) are needed, e.g. in the bound
//! evaluators.

use crate::error::{Error, Result};
use crate::gf::{check_modulus, GfPoly};
use crate::height::{Height, HeightMode};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Which coefficient ring is in use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    /// Arbitrary-precision integers.
    Int,
    /// `GF(p)[t]` for a word-sized prime `p`.
    Gf { p: i64 },
}

/// A coefficient domain together with its height mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub kind: DomainKind,
    pub mode: HeightMode,
}

impl Domain {
    /// The integers with `h(a) = log(1+|a|)`.
    pub fn int() -> Domain {
        Domain { kind: DomainKind::Int, mode: HeightMode::LogAbs }
    }

    /// `GF(p)[t]` with the pure-degree height `h(a) = deg_t(a)`, `h(0)=0`.
    pub fn gf(p: i64) -> Result<Domain> {
        check_modulus(p)?;
        Ok(Domain { kind: DomainKind::Gf { p }, mode: HeightMode::DegOnly })
    }

    pub fn is_int(&self) -> bool {
        self.kind == DomainKind::Int
    }

    /// The prime modulus, if the domain is `GF(p)[t]`.
    pub fn modulus(&self) -> Option<i64> {
        match self.kind {
            DomainKind::Int => None,
            DomainKind::Gf { p } => Some(p),
        }
    }

    /// Change the height mode, validating that it fits the ring.
    pub fn with_mode(self, mode: HeightMode) -> Result<Domain> {
        match (self.kind, mode) {
            (DomainKind::Int, HeightMode::LogAbs) => Ok(Domain { mode, ..self }),
            (DomainKind::Int, _) => Err(Error::Config(
                "degree heights are only defined over GF(p)[t]".into(),
            )),
            (DomainKind::Gf { .. }, HeightMode::LogAbs) => Err(Error::Config(
                "log-abs height is only defined over the integers".into(),
            )),
            (DomainKind::Gf { .. }, _) => Ok(Domain { mode, ..self }),
        }
    }

    /// Height of the integer `n` viewed as an element of the ring
    /// (n is reduced mod p over `GF(p)[t]`).  Negative arguments take their
    /// absolute value; degree-like arguments of value `-1` (empty degree)
    /// clamp to 0.
    pub fn int_height(&self, n: i64) -> Height {
        let n = n.abs().max(0);
        match self.kind {
            DomainKind::Int => Height::Real((1.0 + n as f64).ln()),
            DomainKind::Gf { p } => constant_height(n % p != 0, self.mode),
        }
    }

    /// Height of a big integer constant as a ring element.
    pub fn big_height(&self, n: &BigInt) -> Height {
        match self.kind {
            DomainKind::Int => Height::Real(ln1p_abs(n)),
            DomainKind::Gf { p } => {
                let nz = !(n % BigInt::from(p)).is_zero();
                constant_height(nz, self.mode)
            }
        }
    }

    /// Height of `n!` as a ring element.
    ///
    /// Over the integers this is `log(1 + n!)`: computed from the exact
    /// big-integer factorial for moderate `n`, by compensated summation of
    /// `log k` for larger `n`, and by the Stirling series beyond that (all
    /// three agree well below the height comparison tolerance on their
    /// boundaries).  Over `GF(p)[t]`, `n!` reduces to a constant, which is
    /// zero iff `n >= p`.
    pub fn factorial_height(&self, n: &BigUint) -> Height {
        match self.kind {
            DomainKind::Int => {
                let nv = n.to_u64().unwrap_or(u64::MAX);
                if nv <= 5000 {
                    let mut f = BigUint::one();
                    for k in 2..=nv {
                        f *= k;
                    }
                    Height::Real(ln1p_abs(&BigInt::from(f)))
                } else if nv <= 1_000_000 {
                    // Kahan summation of sum_{k=2..n} ln k
                    let (mut s, mut c) = (0.0f64, 0.0f64);
                    for k in 2..=nv {
                        let y = (k as f64).ln() - c;
                        let t = s + y;
                        c = (t - s) - y;
                        s = t;
                    }
                    Height::Real(s)
                } else {
                    // Stirling series for ln Gamma(n+1)
                    let x = match n.to_f64() {
                        Some(v) if v.is_finite() => v,
                        _ => return Height::Real(f64::INFINITY),
                    };
                    let s = (x + 0.5) * x.ln() - x
                        + 0.5 * (2.0 * std::f64::consts::PI).ln()
                        + 1.0 / (12.0 * x)
                        - 1.0 / (360.0 * x * x * x);
                    Height::Real(s)
                }
            }
            DomainKind::Gf { p } => {
                let nz = *n < BigUint::from(p as u64);
                constant_height(nz, self.mode)
            }
        }
    }
}

fn constant_height(nonzero: bool, mode: HeightMode) -> Height {
    match mode {
        HeightMode::LogAbs => unreachable!("GF domain with log-abs mode"),
        HeightMode::DegOnly => Height::Exact(0),
        HeightMode::OnePlusDeg => Height::Exact(if nonzero { 1 } else { 0 }),
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DomainKind::Int => f.write_str("int"),
            DomainKind::Gf { p } => write!(f, "gfp:t:{p}"),
        }
    }
}

/// `log(1 + |n|)` for an arbitrary-precision integer, accurate to a few ulps
/// even when `n` exceeds the double range.
pub fn ln1p_abs(n: &BigInt) -> f64 {
    let mag = n.magnitude();
    if mag.is_zero() {
        return 0.0;
    }
    if let Some(v) = mag.to_f64() {
        if v.is_finite() {
            return v.ln_1p();
        }
    }
    // |n| >= 2^1024: log(1+|n|) and log|n| agree to ~2^-1024
    let bits = mag.bits();
    let top: BigUint = mag >> (bits - 64);
    let t = top.to_u64().unwrap() as f64;
    t.ln() + (bits - 64) as f64 * std::f64::consts::LN_2
}

/// Scalar trait for coefficient-ring elements.  Implemented by [`BigInt`]
/// (the integers) and [`GfPoly`] (`GF(p)[t]`).
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Exact division; `None` when `other` is zero or does not divide.
    fn exact_div(&self, other: &Self) -> Option<Self>;

    /// Canonically normalized gcd (nonnegative over the integers, monic
    /// over `GF(p)[t]`); `gcd(0,0) = 0`.
    fn gcd(&self, other: &Self) -> Self;

    /// Multiply by a machine integer.
    fn mul_small(&self, k: i64) -> Self;

    /// Embed an integer constant into the ring.
    fn from_int(n: &BigInt, kind: DomainKind) -> Self;

    /// Height of the element under the given mode.
    fn height(&self, mode: HeightMode) -> Height;

    /// A unit `u` such that `u * self` is canonically normalized (positive
    /// leading sign over the integers, monic over `GF(p)[t]`); `1` for zero.
    fn normalizing_unit(&self) -> Self;

    /// Cheap monotone stand-in for the height, used to pick small pivots
    /// during elimination (bit length over the integers, `t`-degree over
    /// `GF(p)[t]`).
    fn pivot_weight(&self) -> u64;
}

impl Coeff for BigInt {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }

    fn mul_small(&self, k: i64) -> Self {
        self * k
    }

    fn from_int(n: &BigInt, _kind: DomainKind) -> Self {
        n.clone()
    }

    fn height(&self, mode: HeightMode) -> Height {
        match mode {
            HeightMode::LogAbs => Height::Real(ln1p_abs(self)),
            _ => panic!("degree heights are only defined over GF(p)[t]"),
        }
    }

    fn normalizing_unit(&self) -> Self {
        if self.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }

    fn pivot_weight(&self) -> u64 {
        self.magnitude().bits()
    }
}

impl Coeff for GfPoly {
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.exact_div_poly(other)
    }

    fn gcd(&self, other: &Self) -> Self {
        self.gcd_poly(other)
    }

    fn mul_small(&self, k: i64) -> Self {
        self.clone() * GfPoly::literal(k)
    }

    fn from_int(n: &BigInt, kind: DomainKind) -> Self {
        match kind {
            DomainKind::Gf { p } => {
                let r = (n % BigInt::from(p)).to_i64().unwrap();
                GfPoly::constant(p, r)
            }
            DomainKind::Int => panic!("GfPoly constant requested for the integer domain"),
        }
    }

    fn height(&self, mode: HeightMode) -> Height {
        GfPoly::height(self, mode)
    }

    fn normalizing_unit(&self) -> Self {
        if self.is_zero() || self.modulus() == 0 {
            return GfPoly::one();
        }
        GfPoly::constant(self.modulus(), crate::gf::inv_mod(self.lc(), self.modulus()))
    }

    fn pivot_weight(&self) -> u64 {
        self.deg().max(0) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_mode_validation() {
        assert!(Domain::int().with_mode(HeightMode::DegOnly).is_err());
        let gf = Domain::gf(1091).unwrap();
        assert!(gf.with_mode(HeightMode::OnePlusDeg).is_ok());
        assert!(gf.with_mode(HeightMode::LogAbs).is_err());
        assert!(Domain::gf(1).is_err());
    }

    #[test]
    fn integer_heights() {
        let d = Domain::int();
        assert_eq!(d.int_height(0), Height::Real(0.0));
        let h2 = d.int_height(-2);
        assert!((h2.value() - 3f64.ln()).abs() < 1e-12);
        // factorial: log(1+5!) = log 121
        let h = d.factorial_height(&BigUint::from(5u32));
        assert!((h.value() - 121f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn factorial_height_boundaries_agree() {
        let d = Domain::int();
        // exact big-int value vs log-sum at n = 5000
        let exact = {
            let mut f = BigUint::one();
            for k in 2..=5000u64 {
                f *= k;
            }
            ln1p_abs(&BigInt::from(f))
        };
        let summed = {
            let (mut s, mut c) = (0.0f64, 0.0f64);
            for k in 2..=5000u64 {
                let y = (k as f64).ln() - c;
                let t = s + y;
                c = (t - s) - y;
                s = t;
            }
            s
        };
        assert!((exact - summed).abs() < 1e-9);
        let h = d.factorial_height(&BigUint::from(5000u32));
        assert!((h.value() - exact).abs() < 1e-9);
    }

    #[test]
    fn gf_constant_heights() {
        let d = Domain::gf(1091).unwrap();
        assert_eq!(d.int_height(7), Height::Exact(0));
        assert_eq!(d.factorial_height(&BigUint::from(33u32)), Height::Exact(0));
        let d1 = d.with_mode(HeightMode::OnePlusDeg).unwrap();
        assert_eq!(d1.int_height(7), Height::Exact(1));
        assert_eq!(d1.int_height(1091), Height::Exact(0));
        assert_eq!(d1.factorial_height(&BigUint::from(2000u32)), Height::Exact(0));
    }

    #[test]
    fn huge_ln() {
        let big = BigInt::from(2u8).pow(5000u32);
        let v = ln1p_abs(&big);
        assert!((v - 5000.0 * std::f64::consts::LN_2).abs() < 1e-6);
    }
}

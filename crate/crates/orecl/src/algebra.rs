//! The three supported operator algebras and their expansion-cost
//! functions.
//!
//! An algebra is `R[x][D]` with the commutation rule `D p = sigma(p) D +
//! delta(p)`.  The presets are:
//!
//! * differential: `sigma = id`, `delta = d/dx`, written `Dx`;
//! * shift: `sigma : x -> x+1`, `delta = 0`, written `Sn`;
//! * difference: `sigma : x -> x+1`, `delta = sigma - id`, written `Dn`.

use crate::domain::{Coeff, Domain};
use crate::error::{Error, Result};
use crate::height::Height;
use crate::poly::UniPoly;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

/// Which commutation rule the operator variable obeys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Algebra {
    Differential,
    Shift,
    Difference,
}

/// How the operator variable acts on the extended ring used by annihilator
/// computations: through `sigma` (so `D . 1 = 1`) or through `delta`
/// (so `D . 1 = 0`).  The sigma form is only meaningful when `delta = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PartialMode {
    Sigma,
    Delta,
}

impl Algebra {
    pub const ALL: [Algebra; 3] = [Algebra::Differential, Algebra::Shift, Algebra::Difference];

    /// Display name of the operator variable.
    pub fn dvar(&self) -> &'static str {
        match self {
            Algebra::Differential => "Dx",
            Algebra::Shift => "Sn",
            Algebra::Difference => "Dn",
        }
    }

    /// Whether `sigma` is the identity.
    pub fn sigma_is_identity(&self) -> bool {
        matches!(self, Algebra::Differential)
    }

    /// Whether `delta` is zero.
    pub fn delta_is_zero(&self) -> bool {
        matches!(self, Algebra::Shift)
    }

    /// Apply `sigma^k` to a polynomial.
    pub fn sigma_k<C: Coeff>(&self, p: &UniPoly<C>, k: i64) -> UniPoly<C> {
        match self {
            Algebra::Differential => p.clone(),
            Algebra::Shift | Algebra::Difference => p.compose_shift(k),
        }
    }

    /// Apply `delta` to a polynomial.
    pub fn delta<C: Coeff>(&self, p: &UniPoly<C>) -> UniPoly<C> {
        match self {
            Algebra::Differential => p.derivative(),
            Algebra::Shift => UniPoly::zero(),
            Algebra::Difference => p.compose_shift(1).sub(p),
        }
    }

    /// The default action mode for annihilator computations: the shift
    /// algebra acts through `sigma`, the others through `delta`.
    pub fn default_partial_mode(&self) -> PartialMode {
        match self {
            Algebra::Shift => PartialMode::Sigma,
            _ => PartialMode::Delta,
        }
    }

    /// Validate a requested action mode against this algebra.
    pub fn check_partial_mode(&self, mode: PartialMode) -> Result<()> {
        if mode == PartialMode::Sigma && !self.delta_is_zero() {
            return Err(Error::Config(
                "this option is only available when delta = 0".into(),
            ));
        }
        Ok(())
    }

    /// Product-rule coefficients `(alpha, beta, gamma)` for the action on a
    /// product: `D.(Q R) = alpha (D.Q)(D.R) + beta ((D.Q) R + Q (D.R)) +
    /// gamma Q R`.
    pub fn product_rule(&self) -> (i64, i64, i64) {
        match self {
            Algebra::Differential => (0, 1, 0),
            Algebra::Shift => (1, 0, 0),
            Algebra::Difference => (1, 1, 0),
        }
    }

    /// One expansion step: a height bound for `D p` in terms of the degree
    /// `d` and height `h` of `p`.
    pub fn c(&self, domain: &Domain, d: u64, h: Height) -> Height {
        self.c_iter(domain, 1, d, h)
    }

    /// The `n`-fold iterate of the expansion cost, as a closed form.
    ///
    /// Each single step is affine in the height with slope one, so the
    /// differential and difference iterates unroll exactly:
    ///
    /// * differential: `h + n (h(1) + h(d))`;
    /// * difference:   `h + n (d h(2) + h(1))`.
    ///
    /// For the shift algebra, `delta = 0` gives `D^n p = p(x+n) D^n`
    /// directly, so the iterate collapses to `d h(n+1) + h`; over a finite
    /// field the constants `h(k)` are not monotone in `k`, so we take the
    /// running maximum of `h(k)` over `2 <= k <= n+1` instead.
    pub fn c_iter(&self, domain: &Domain, n: u64, d: u64, h: Height) -> Height {
        if n == 0 {
            return h;
        }
        let ih = |k: i64| domain.int_height(k);
        match self {
            Algebra::Differential => h + (ih(1) + ih(d as i64)).scale(n as i64),
            Algebra::Difference => h + (ih(2).scale(d as i64) + ih(1)).scale(n as i64),
            Algebra::Shift => {
                let hmax = if domain.is_int() {
                    // log-height of integers grows with k
                    ih(n as i64 + 1)
                } else {
                    // constants repeat modulo p, so scanning one period
                    // suffices
                    let p = domain.modulus().unwrap_or(i64::MAX);
                    let hi = (n as i64 + 1).min(2 + p);
                    let mut m = Height::ZERO;
                    let mut k = 2;
                    while k <= hi {
                        m = m.max(ih(k));
                        k += 1;
                    }
                    m
                };
                hmax.scale(d as i64) + h
            }
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Algebra::Differential => "diff",
            Algebra::Shift => "shift",
            Algebra::Difference => "difference",
        };
        f.write_str(s)
    }
}

impl FromStr for Algebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diff" | "differential" => Ok(Algebra::Differential),
            "shift" => Ok(Algebra::Shift),
            "difference" => Ok(Algebra::Difference),
            other => Err(Error::Parse(format!("unknown algebra `{other}`"))),
        }
    }
}

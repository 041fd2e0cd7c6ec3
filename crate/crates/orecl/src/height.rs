//! Height measures on coefficient rings.
//!
//! The height of a ring element is a nonnegative size measure: the natural
//! logarithm `log(1 + |a|)` over the integers, and a degree-based measure
//! over `GF(p)[t]`.  Degree-based heights are integers and are kept exact;
//! the logarithmic height is a double and is compared at a small tolerance.

use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;

/// Comparison tolerance for real-valued (logarithmic) heights.
pub const HEIGHT_TOL: f64 = 1e-9;

/// Which height function the coefficient domain uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HeightMode {
    /// `h(a) = log(1 + |a|)` over the integers.
    LogAbs,
    /// `h(0) = 0`, `h(a) = 1 + deg_t(a)` for nonzero `a` in `GF(p)[t]`.
    OnePlusDeg,
    /// `h(0) = 0`, `h(a) = deg_t(a)` for nonzero `a` in `GF(p)[t]`.
    DegOnly,
}

impl HeightMode {
    /// The height of the zero element (always zero, in the representation
    /// native to the mode).
    pub fn zero(self) -> Height {
        match self {
            HeightMode::LogAbs => Height::Real(0.0),
            _ => Height::Exact(0),
        }
    }
}

impl fmt::Display for HeightMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HeightMode::LogAbs => "log-abs",
            HeightMode::OnePlusDeg => "one-plus-deg",
            HeightMode::DegOnly => "deg-only",
        };
        f.write_str(s)
    }
}

/// A height value: exact integer for degree-based modes, double for the
/// logarithmic mode.  Mixing the two in arithmetic promotes to `Real`.
#[derive(Debug, Clone, Copy, Serialize)]
pub enum Height {
    Exact(i64),
    Real(f64),
}

impl Height {
    pub const ZERO: Height = Height::Exact(0);

    /// Numeric value as a double.
    pub fn value(self) -> f64 {
        match self {
            Height::Exact(n) => n as f64,
            Height::Real(x) => x,
        }
    }

    /// `self <= other` up to [`HEIGHT_TOL`] when reals are involved.
    pub fn le(self, other: Height) -> bool {
        match (self, other) {
            (Height::Exact(a), Height::Exact(b)) => a <= b,
            (a, b) => a.value() <= b.value() + HEIGHT_TOL,
        }
    }

    /// Equality up to [`HEIGHT_TOL`] when reals are involved.
    pub fn approx_eq(self, other: Height) -> bool {
        match (self, other) {
            (Height::Exact(a), Height::Exact(b)) => a == b,
            (a, b) => (a.value() - b.value()).abs() <= HEIGHT_TOL,
        }
    }

    /// Pointwise maximum.
    pub fn max(self, other: Height) -> Height {
        match (self, other) {
            (Height::Exact(a), Height::Exact(b)) => Height::Exact(a.max(b)),
            (a, b) => Height::Real(a.value().max(b.value())),
        }
    }

    /// Scale by a nonnegative integer factor.
    pub fn scale(self, k: i64) -> Height {
        debug_assert!(k >= 0);
        match self {
            Height::Exact(n) => match n.checked_mul(k) {
                Some(m) => Height::Exact(m),
                None => Height::Real(n as f64 * k as f64),
            },
            Height::Real(x) => Height::Real(x * k as f64),
        }
    }
}

impl std::ops::Add for Height {
    type Output = Height;
    fn add(self, rhs: Height) -> Height {
        match (self, rhs) {
            (Height::Exact(a), Height::Exact(b)) => match a.checked_add(b) {
                Some(s) => Height::Exact(s),
                None => Height::Real(a as f64 + b as f64),
            },
            (a, b) => Height::Real(a.value() + b.value()),
        }
    }
}

impl std::iter::Sum for Height {
    fn sum<I: Iterator<Item = Height>>(iter: I) -> Height {
        iter.fold(Height::ZERO, |a, b| a + b)
    }
}

impl PartialEq for Height {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Height::Exact(a), Height::Exact(b)) => a == b,
            (a, b) => a.value() == b.value(),
        }
    }
}

impl PartialOrd for Height {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Height::Exact(a), Height::Exact(b)) => a.partial_cmp(b),
            (a, b) => a.value().partial_cmp(&b.value()),
        }
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::Exact(n) => write!(f, "{n}"),
            Height::Real(x) => write!(f, "{x:.4}"),
        }
    }
}

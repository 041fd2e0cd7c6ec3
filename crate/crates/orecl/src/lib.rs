//! Exact closure-property computations for Ore operator algebras.
//!
//! The crate computes least common left multiples and annihilators of
//! polynomial expressions in D-finite / P-recursive functions over the
//! differential, shift and difference algebras, together with a-priori
//! bounds on the order, degree and height of the results.  Coefficients
//! are exact: arbitrary-precision integers or `GF(p)[t]`.

pub mod algebra;
pub mod bounds;
pub mod closure;
pub mod sample;
pub mod stream;
pub mod domain;
pub mod error;
pub mod experiments;
pub mod gf;
pub mod height;
pub mod linalg;
pub mod mpoly;
pub mod op;
pub mod poly;
pub mod text;

pub use algebra::{Algebra, PartialMode};
pub use bounds::{OpShape, SizeBound};
pub use closure::{
    annihilator, annihilator_at, annihilator_inhomogeneous, apply_operator, associate,
    associate_expr, check_annihilates, clm_at, lclm, lclm_minimal, normal_form,
    poly_annihilator, power_expr, product_expr, reduce_by_ideal, sym_power, sym_product,
    wronskian, wronskian_expr, AnnihilatorAtResult, AnnihilatorResult, ClmAtResult, LclmResult,
    NormalForm, OreSystem,
};
pub use stream::{shift_recurrence, verify_annihilator, verify_multiple, StreamScalar};
pub use domain::{Coeff, Domain, DomainKind};
pub use error::{Error, Result};
pub use experiments::{
    run_experiment, ExpConfig, ExperimentReport, Row, CSV_HEADER, DEFAULT_SEED,
};
pub use gf::GfPoly;
pub use height::{Height, HeightMode};
pub use mpoly::{MPoly, Monomial};
pub use op::OreOperator;
pub use poly::UniPoly;

use num_bigint::BigInt;

/// Integer-coefficient polynomial.
pub type IntPoly = UniPoly<BigInt>;
/// Integer-coefficient operator.
pub type IntOperator = OreOperator<BigInt>;
/// `GF(p)[t]`-coefficient polynomial.
pub type GfUniPoly = UniPoly<GfPoly>;
/// `GF(p)[t]`-coefficient operator.
pub type GfOperator = OreOperator<GfPoly>;

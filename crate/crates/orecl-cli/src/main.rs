//! Command-line front end for the `orecl` library.
//!
//! Operators are written in the text grammar of the library, e.g.
//! `(x+1)*Sn^2 - 3*Sn + x` in the shift algebra or `Dx^2 - x` in the
//! differential algebra; `D` is accepted for the Ore variable in any
//! algebra.  An operator argument of the form `@path` is read from the
//! named file instead (JSON operator files are detected by a leading `{`).

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use orecl::closure::{associate_expr, power_expr, product_expr, wronskian_expr};
use orecl::stream::DEFAULT_CHECK_POINTS;
use orecl::text::{op_to_json, parse_mpoly, parse_op, TextScalar};
use orecl::{
    bounds, clm_at, verify_annihilator, verify_multiple, Algebra, AnnihilatorResult, Coeff,
    Domain, DomainKind, Error, ExpConfig, GfPoly, Height, HeightMode, MPoly, OpShape,
    OreOperator, OreSystem, Result, StreamScalar, UniPoly,
};
use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "orecl",
    version,
    about = "Exact closure properties of Ore operators: lclm, symmetric \
             products and powers, associates, Wronskians, and the size \
             bounds and experiments that go with them"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Least common left multiple of two or more operators
    Lclm(ClosureArgs),
    /// Annihilator of the product of one solution of each operator
    Symprod(ClosureArgs),
    /// Annihilator of the k-th power of a solution of one operator
    Sympow(SympowArgs),
    /// Annihilator of `A . f` for a solution `f` of `L`
    Associate(AssociateArgs),
    /// Annihilator of the Wronskian determinant of the solutions
    Wronskian(ClosureArgs),
    /// Annihilator of a polynomial expression `P(y[i,j])` in the solutions
    Annihilate(AnnihilateArgs),
    /// Evaluate a-priori size bounds and order-degree curves without solving
    Bounds(BoundsArgs),
    /// Reproduce the randomized experiments and emit their tables
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraOpt {
    Shift,
    Diff,
    Difference,
}

impl From<AlgebraOpt> for Algebra {
    fn from(a: AlgebraOpt) -> Algebra {
        match a {
            AlgebraOpt::Shift => Algebra::Shift,
            AlgebraOpt::Diff => Algebra::Differential,
            AlgebraOpt::Difference => Algebra::Difference,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum HeightModeOpt {
    LogAbs,
    DegOnly,
    OnePlusDeg,
}

impl From<HeightModeOpt> for HeightMode {
    fn from(m: HeightModeOpt) -> HeightMode {
        match m {
            HeightModeOpt::LogAbs => HeightMode::LogAbs,
            HeightModeOpt::DegOnly => HeightMode::DegOnly,
            HeightModeOpt::OnePlusDeg => HeightMode::OnePlusDeg,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Csv,
    Json,
}

/// Options shared by every subcommand that works on concrete operators.
#[derive(Args)]
struct Common {
    /// Ore algebra preset
    #[arg(long, value_enum, default_value_t = AlgebraOpt::Shift)]
    algebra: AlgebraOpt,

    /// Coefficient domain: `int` or `gfp:t:<p>` (e.g. `gfp:t:1091`)
    #[arg(long, default_value = "int")]
    domain: String,

    /// Height mode override; defaults to `log-abs` over the integers and
    /// `deg-only` over GF(p)[t]
    #[arg(long, value_enum)]
    height_mode: Option<HeightModeOpt>,

    /// Output format (text prints the operator in the input grammar)
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    out: OutFormat,

    /// Seed for the random solution streams used by --verify
    #[arg(long, default_value_t = orecl::DEFAULT_SEED)]
    seed: u64,

    /// Check the result against exact random solution streams (50 terms)
    #[arg(long)]
    verify: bool,
}

impl Common {
    fn domain(&self) -> Result<Domain> {
        let mut d = parse_domain(&self.domain)?;
        if let Some(m) = self.height_mode {
            d = d.with_mode(m.into())?;
        }
        Ok(d)
    }
}

#[derive(Args)]
struct ClosureArgs {
    #[command(flatten)]
    common: Common,

    /// lclm: search downward for the least order; annihilators: strip the
    /// common polynomial factor of the coefficients (integers only)
    #[arg(long)]
    minimize: bool,

    /// Solve at a prescribed order instead of the default ansatz order
    /// (lclm only; pairs with --degree)
    #[arg(long)]
    order: Option<u64>,

    /// Degree cap for --order; defaults to the order-degree curve value
    #[arg(long)]
    degree: Option<u64>,

    /// Input operators (text grammar, or `@file`)
    #[arg(required = true, num_args = 1..)]
    ops: Vec<String>,
}

#[derive(Args)]
struct SympowArgs {
    #[command(flatten)]
    common: Common,

    /// Strip the common polynomial factor of the coefficients (integers
    /// only)
    #[arg(long)]
    minimize: bool,

    /// The exponent k
    #[arg(short = 'k', long, default_value_t = 2)]
    power: u32,

    /// Input operator (text grammar, or `@file`)
    op: String,
}

#[derive(Args)]
struct AssociateArgs {
    #[command(flatten)]
    common: Common,

    /// Strip the common polynomial factor of the coefficients (integers
    /// only)
    #[arg(long)]
    minimize: bool,

    /// The annihilator L of the solution f
    l: String,

    /// The operator A applied to f; requires ord(A) < ord(L)
    a: String,
}

#[derive(Args)]
struct AnnihilateArgs {
    #[command(flatten)]
    common: Common,

    /// Strip the common polynomial factor of the coefficients (integers
    /// only)
    #[arg(long)]
    minimize: bool,

    /// The expression, e.g. `y[1,0]*y[2,1] - x*y[2,0]^2`
    #[arg(long)]
    expr: String,

    /// Input operators (text grammar, or `@file`)
    #[arg(required = true, num_args = 1..)]
    ops: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundKind {
    Lclm,
    Symprod,
    Sympow,
    Associate,
    Annihilator,
    Wronskian,
}

#[derive(Args)]
struct BoundsArgs {
    /// Ore algebra preset
    #[arg(long, value_enum, default_value_t = AlgebraOpt::Shift)]
    algebra: AlgebraOpt,

    /// Coefficient domain: `int` or `gfp:t:<p>`
    #[arg(long, default_value = "int")]
    domain: String,

    /// Height mode override
    #[arg(long, value_enum)]
    height_mode: Option<HeightModeOpt>,

    /// Which construction to bound
    #[arg(long, value_enum, default_value_t = BoundKind::Lclm)]
    kind: BoundKind,

    /// Component order (one value for all components, or one per component)
    #[arg(long, required = true, num_args = 1..)]
    order: Vec<u64>,

    /// Component degree (one value for all components, or one per component)
    #[arg(long, required = true, num_args = 1..)]
    degree: Vec<u64>,

    /// Component height; defaults to log(1+degree) over the integers and to
    /// the degree over GF(p)[t]
    #[arg(long, num_args = 0..)]
    height: Vec<f64>,

    /// Number of components when orders/degrees are given once
    #[arg(long, short = 'n', default_value_t = 2)]
    count: usize,

    /// Degree of each component in the expression (annihilator kind)
    #[arg(long, num_args = 0..)]
    multideg: Vec<u64>,

    /// Degree of the expression polynomial (annihilator kind)
    #[arg(long, default_value_t = 0)]
    expr_degree: u64,

    /// Exponent for the sympow kind
    #[arg(short = 'k', long, default_value_t = 2)]
    power: u64,

    /// Evaluate the order-degree curve at this order instead of the
    /// a-priori bound
    #[arg(long)]
    curve_r: Option<u64>,

    /// Output format
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    out: OutFormat,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Experiment id (1-4)
    id: u32,

    /// Coefficient domain; experiment 1 defaults to both tables, 2 to
    /// `gfp:t:1091`, 3 to `int`, 4 ignores it
    #[arg(long)]
    domain: Option<String>,

    /// Base seed; reports are byte-identical for equal seeds
    #[arg(long, default_value_t = orecl::DEFAULT_SEED)]
    seed: u64,

    /// Trials per parameter point (0 = per-experiment default)
    #[arg(long, default_value_t = 0)]
    trials: u32,

    /// Include the large parameter points (minutes instead of seconds)
    #[arg(long)]
    heavy: bool,

    /// Output format
    #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
    out: OutFormat,

    /// Include the wall-clock column (breaks byte-for-byte reproducibility)
    #[arg(long)]
    timing: bool,
}

fn parse_domain(s: &str) -> Result<Domain> {
    if s == "int" {
        return Ok(Domain::int());
    }
    let p = s
        .strip_prefix("gfp:t:")
        .or_else(|| s.strip_prefix("gf:"))
        .ok_or_else(|| Error::Config(format!("unknown domain `{s}`; use `int` or `gfp:t:<p>`")))?;
    let p: i64 = p
        .parse()
        .map_err(|_| Error::Config(format!("bad modulus in domain `{s}`")))?;
    Domain::gf(p)
}

/// Read an operator argument: inline text, or `@path` for a file whose
/// contents are either the text grammar or the JSON operator format.
fn read_op<C: TextScalar>(arg: &str, algebra: Algebra, kind: DomainKind) -> Result<OreOperator<C>> {
    let text = match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read `{path}`: {e}")))?,
        None => arg.to_string(),
    };
    let text = text.trim().to_string();
    if text.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| Error::Parse(format!("bad JSON operator: {e}")))?;
        let op = orecl::text::op_from_json::<C>(&v, kind)?;
        if op.algebra != algebra {
            return Err(Error::Mismatch(format!(
                "operator file uses algebra `{}`, command asked for `{}`",
                op.algebra, algebra
            )));
        }
        return Ok(op);
    }
    parse_op(&text, algebra, kind)
}

/// What a closure subcommand reports: the operator plus its provenance.
/// `content` is the full factor removed from the raw ansatz solution, so
/// `raw = content * op` coefficient-wise.
struct Outcome<C: Coeff> {
    op: OreOperator<C>,
    content: UniPoly<C>,
    certificate: Option<UniPoly<C>>,
    order_bound: u64,
    verified: Option<bool>,
}

impl<C: Coeff> Outcome<C> {
    fn from_annihilator(r: AnnihilatorResult<C>) -> Self {
        Outcome {
            op: r.op,
            content: UniPoly::constant(r.content),
            certificate: Some(r.certificate),
            order_bound: r.order_bound,
            verified: None,
        }
    }
}

/// The scalar-type-specific pieces of the CLI: parsing and printing come
/// from the library traits, content stripping only exists over the
/// integers.
trait CliScalar: TextScalar + StreamScalar {
    /// Divide the common polynomial factor out of the coefficients; the
    /// certificate stays valid because the factor divides every term of
    /// the annihilation identity.
    fn strip_poly_content(o: &mut Outcome<Self>) -> Result<()>;
}

impl CliScalar for BigInt {
    fn strip_poly_content(o: &mut Outcome<BigInt>) -> Result<()> {
        let (g, reduced) = o.op.poly_content_reduce();
        o.content = o.content.mul(&g);
        o.op = reduced;
        Ok(())
    }
}

impl CliScalar for GfPoly {
    fn strip_poly_content(_: &mut Outcome<GfPoly>) -> Result<()> {
        Err(Error::Unsupported(
            "--minimize is only implemented over the integers".into(),
        ))
    }
}

fn render_outcome<C: Coeff>(out: OutFormat, o: &Outcome<C>, domain: &Domain) -> String {
    match out {
        OutFormat::Text => {
            let mut meta = format!(
                "# ord {}, deg {}, height {}",
                o.op.ord().max(0),
                o.op.deg().max(0),
                o.op.height(domain.mode)
            );
            if let Some(v) = o.verified {
                let _ = write!(meta, ", verified {v}");
            }
            eprintln!("{meta}");
            format!("{}\n", o.op)
        }
        OutFormat::Json => {
            let mut v = serde_json::json!({
                "op": op_to_json(&o.op),
                "order": o.op.ord().max(0),
                "degree": o.op.deg().max(0),
                "height": o.op.height(domain.mode).value(),
                "order_bound": o.order_bound,
                "content": o.content.to_string(),
            });
            if let Some(c) = &o.certificate {
                v["certificate"] = serde_json::Value::String(c.to_string());
            }
            if let Some(ver) = o.verified {
                v["verified"] = serde_json::Value::Bool(ver);
            }
            format!("{}\n", serde_json::to_string_pretty(&v).expect("plain data"))
        }
        OutFormat::Csv => {
            // one line per coefficient, low order first
            let mut s = String::from("power, coefficient\n");
            for (i, c) in o.op.coeffs().iter().enumerate() {
                let _ = writeln!(s, "{i}, {c}");
            }
            s
        }
    }
}

fn parse_ops<C: TextScalar>(
    specs: &[String],
    algebra: Algebra,
    kind: DomainKind,
) -> Result<OreSystem<C>> {
    let ops: Vec<OreOperator<C>> = specs
        .iter()
        .map(|s| read_op(s, algebra, kind))
        .collect::<Result<_>>()?;
    OreSystem::new(ops)
}

fn run_lclm<C: CliScalar>(args: &ClosureArgs, domain: &Domain) -> Result<String> {
    let sys = parse_ops::<C>(&args.ops, args.common.algebra.into(), domain.kind)?;
    let mut o = if let Some(r) = args.order {
        let d = match args.degree {
            Some(d) => d,
            None => bounds::curve_lclm(&sys.curve_shapes(), r)?,
        };
        let res = clm_at(&sys, r, d)?;
        Outcome {
            op: res.clm,
            content: UniPoly::constant(res.content),
            certificate: None,
            order_bound: r,
            verified: None,
        }
    } else {
        let res = if args.minimize {
            orecl::lclm_minimal(&sys)?
        } else {
            orecl::lclm(&sys)?
        };
        Outcome {
            op: res.lclm,
            content: UniPoly::constant(res.content),
            certificate: None,
            order_bound: res.ansatz_order,
            verified: None,
        }
    };
    if args.common.verify {
        o.verified = Some(verify_multiple(
            &sys,
            &o.op,
            domain,
            args.common.seed,
            DEFAULT_CHECK_POINTS,
        )?);
    }
    Ok(render_outcome(args.common.out, &o, domain))
}

/// Shared tail of the annihilator-style subcommands: optional content
/// stripping, optional stream verification, print.
fn finish_annihilator<C: CliScalar>(
    common: &Common,
    minimize: bool,
    sys: &OreSystem<C>,
    expr: &MPoly<C>,
    mut o: Outcome<C>,
    domain: &Domain,
) -> Result<String> {
    if minimize {
        C::strip_poly_content(&mut o)?;
    }
    if common.verify {
        let cert = o.certificate.clone().unwrap_or_else(UniPoly::one);
        o.verified = Some(verify_annihilator(
            sys,
            &o.op,
            &cert,
            expr,
            domain,
            common.seed,
            DEFAULT_CHECK_POINTS,
        )?);
    }
    Ok(render_outcome(common.out, &o, domain))
}

fn reject_order_flags(args: &ClosureArgs) -> Result<()> {
    if args.order.is_some() || args.degree.is_some() {
        return Err(Error::Config(
            "--order/--degree are only meaningful for lclm".into(),
        ));
    }
    Ok(())
}

fn run_symprod<C: CliScalar>(args: &ClosureArgs, domain: &Domain) -> Result<String> {
    reject_order_flags(args)?;
    let sys = parse_ops::<C>(&args.ops, args.common.algebra.into(), domain.kind)?;
    let expr = product_expr(sys.len() as u32);
    let res = orecl::sym_product(&sys)?;
    let o = Outcome::from_annihilator(res);
    finish_annihilator(&args.common, args.minimize, &sys, &expr, o, domain)
}

fn run_sympow<C: CliScalar>(args: &SympowArgs, domain: &Domain) -> Result<String> {
    let l: OreOperator<C> = read_op(&args.op, args.common.algebra.into(), domain.kind)?;
    let sys = OreSystem::new(vec![l.clone()])?;
    let expr = power_expr(args.power);
    let res = orecl::sym_power(&l, args.power)?;
    let o = Outcome::from_annihilator(res);
    finish_annihilator(&args.common, args.minimize, &sys, &expr, o, domain)
}

fn run_associate<C: CliScalar>(args: &AssociateArgs, domain: &Domain) -> Result<String> {
    let algebra: Algebra = args.common.algebra.into();
    let l: OreOperator<C> = read_op(&args.l, algebra, domain.kind)?;
    let a: OreOperator<C> = read_op(&args.a, algebra, domain.kind)?;
    let sys = OreSystem::new(vec![l.clone()])?;
    let expr = associate_expr(&a, 0);
    let res = orecl::associate(&l, &a)?;
    let o = Outcome::from_annihilator(res);
    finish_annihilator(&args.common, args.minimize, &sys, &expr, o, domain)
}

fn run_wronskian<C: CliScalar>(args: &ClosureArgs, domain: &Domain) -> Result<String> {
    reject_order_flags(args)?;
    let sys = parse_ops::<C>(&args.ops, args.common.algebra.into(), domain.kind)?;
    let expr = wronskian_expr(sys.len() as u32);
    let res = orecl::wronskian(&sys)?;
    let o = Outcome::from_annihilator(res);
    finish_annihilator(&args.common, args.minimize, &sys, &expr, o, domain)
}

fn run_annihilate<C: CliScalar>(args: &AnnihilateArgs, domain: &Domain) -> Result<String> {
    let sys = parse_ops::<C>(&args.ops, args.common.algebra.into(), domain.kind)?;
    let expr: MPoly<C> = parse_mpoly(&args.expr, domain.kind)?;
    let res = orecl::annihilator(&sys, &expr)?;
    let o = Outcome::from_annihilator(res);
    finish_annihilator(&args.common, args.minimize, &sys, &expr, o, domain)
}

/// Expand a per-component option: one value is broadcast to `count`
/// components, otherwise the list is taken as given.
fn broadcast<T: Copy>(vals: &[T], count: usize, what: &str) -> Result<Vec<T>> {
    match vals.len() {
        1 => Ok(vec![vals[0]; count]),
        n if n == count => Ok(vals.to_vec()),
        n => Err(Error::Config(format!(
            "{what}: got {n} values for {count} components"
        ))),
    }
}

fn run_bounds(args: &BoundsArgs) -> Result<String> {
    let mut domain = parse_domain(&args.domain)?;
    if let Some(m) = args.height_mode {
        domain = domain.with_mode(m.into())?;
    }
    let algebra: Algebra = args.algebra.into();
    let count = if args.order.len() > 1 {
        args.order.len()
    } else if args.degree.len() > 1 {
        args.degree.len()
    } else {
        args.count
    };
    let orders = broadcast(&args.order, count, "--order")?;
    let degrees = broadcast(&args.degree, count, "--degree")?;
    let heights: Vec<Height> = if args.height.is_empty() {
        degrees
            .iter()
            .map(|&d| match domain.kind {
                DomainKind::Int => Height::Real((1.0 + d as f64).ln()),
                DomainKind::Gf { .. } => Height::Exact(d as i64),
            })
            .collect()
    } else {
        broadcast(&args.height, count, "--height")?
            .into_iter()
            .map(|h| match domain.kind {
                DomainKind::Int => Height::Real(h),
                DomainKind::Gf { .. } => Height::Exact(h.round() as i64),
            })
            .collect()
    };
    let shapes: Vec<OpShape> = orders
        .iter()
        .zip(&degrees)
        .zip(&heights)
        .map(|((&r, &d), &h)| OpShape::new(r, d, h))
        .collect();
    let multideg = if args.multideg.is_empty() {
        vec![1u64; count]
    } else {
        broadcast(&args.multideg, count, "--multideg")?
    };

    // order-degree curve evaluation replaces the bound when requested
    if let Some(r) = args.curve_r {
        let pairs: Vec<(u64, u64)> =
            orders.iter().copied().zip(degrees.iter().copied()).collect();
        let d = match args.kind {
            BoundKind::Lclm => bounds::curve_lclm(&pairs, r)?,
            BoundKind::Wronskian => bounds::curve_poly(&pairs, &vec![1; count], 0, r)?,
            _ => bounds::curve_poly(&pairs, &multideg, args.expr_degree, r)?,
        };
        return Ok(match args.out {
            OutFormat::Json => format!("{}\n", serde_json::json!({ "r": r, "d": d })),
            _ => format!("{r}, {d}\n"),
        });
    }

    let two_shapes = |kind: &str| -> Result<(&OpShape, &OpShape)> {
        if shapes.len() == 2 {
            Ok((&shapes[0], &shapes[1]))
        } else {
            Err(Error::Config(format!(
                "--kind {kind} takes exactly two components"
            )))
        }
    };
    let bound = match args.kind {
        BoundKind::Lclm => bounds::bound_lclm(&domain, algebra, &shapes)?,
        BoundKind::Symprod => {
            let (a, b) = two_shapes("symprod")?;
            bounds::bound_sym_product(&domain, algebra, a, b)?
        }
        BoundKind::Sympow => bounds::bound_sym_power(&domain, algebra, &shapes[0], args.power)?,
        BoundKind::Associate => {
            let (l, a) = two_shapes("associate")?;
            bounds::bound_associate(&domain, algebra, l, a)?
        }
        BoundKind::Annihilator => bounds::bound_annihilator(
            &domain,
            algebra,
            &shapes,
            &multideg,
            args.expr_degree,
            domain.mode.zero(),
        )?,
        BoundKind::Wronskian => {
            let r = *orders.iter().max().expect("nonempty");
            let d = *degrees.iter().max().expect("nonempty");
            let h = heights.iter().fold(domain.mode.zero(), |acc, &x| acc.max(x));
            bounds::bound_wronskian(&domain, algebra, r, d, h)?
        }
    };
    Ok(match args.out {
        OutFormat::Json => {
            let v = serde_json::json!({
                "order": bound.order.to_string(),
                "degree": bound.degree.to_string(),
                "height": bound.height.map(|h| h.value()),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("plain data"))
        }
        _ => format!("{bound}\n"),
    })
}

fn run_exp(args: &ExperimentArgs) -> Result<String> {
    let cfg = ExpConfig {
        seed: args.seed,
        trials: args.trials,
        heavy: args.heavy,
        ..ExpConfig::default()
    };
    let domains: Vec<Domain> = match (&args.domain, args.id) {
        (Some(d), _) => vec![parse_domain(d)?],
        (None, 1) => vec![Domain::int(), Domain::gf(1091)?],
        (None, 2) => vec![Domain::gf(1091)?],
        _ => vec![Domain::int()],
    };
    let mut rows = Vec::new();
    for d in &domains {
        rows.extend(orecl::run_experiment(args.id, d, &cfg)?.rows);
    }
    let report = orecl::ExperimentReport { rows };
    Ok(match args.out {
        OutFormat::Json => report.to_json(),
        _ => report.to_csv(args.timing),
    })
}

fn dispatch(cli: &Cli) -> Result<String> {
    match &cli.cmd {
        Cmd::Lclm(a) => {
            let d = a.common.domain()?;
            match d.kind {
                DomainKind::Int => run_lclm::<BigInt>(a, &d),
                DomainKind::Gf { .. } => run_lclm::<GfPoly>(a, &d),
            }
        }
        Cmd::Symprod(a) => {
            let d = a.common.domain()?;
            match d.kind {
                DomainKind::Int => run_symprod::<BigInt>(a, &d),
                DomainKind::Gf { .. } => run_symprod::<GfPoly>(a, &d),
            }
        }
        Cmd::Sympow(a) => {
            let d = a.common.domain()?;
            match d.kind {
                DomainKind::Int => run_sympow::<BigInt>(a, &d),
                DomainKind::Gf { .. } => run_sympow::<GfPoly>(a, &d),
            }
        }
        Cmd::Associate(a) => {
            let d = a.common.domain()?;
            match d.kind {
                DomainKind::Int => run_associate::<BigInt>(a, &d),
                DomainKind::Gf { .. } => run_associate::<GfPoly>(a, &d),
            }
        }
        Cmd::Wronskian(a) => {
            let d = a.common.domain()?;
            match d.kind {
                DomainKind::Int => run_wronskian::<BigInt>(a, &d),
                DomainKind::Gf { .. } => run_wronskian::<GfPoly>(a, &d),
            }
        }
        Cmd::Annihilate(a) => {
            let d = a.common.domain()?;
            match d.kind {
                DomainKind::Int => run_annihilate::<BigInt>(a, &d),
                DomainKind::Gf { .. } => run_annihilate::<GfPoly>(a, &d),
            }
        }
        Cmd::Bounds(a) => run_bounds(a),
        Cmd::Experiment(a) => run_exp(a),
    }
}

/// Write to stdout, swallowing a closed-pipe error (`orecl ... | head`).
fn emit(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes());
    let _ = out.flush();
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(s) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

//! Inequalities as checkable predicates with recorded slack.

use alloc::vec::Vec;
use core::hash::Hasher;

use fnv::FnvHasher;
use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::quantities::{Path, Quantity, SkewContext};
use crate::spectral::{DensityOperator, HsOperator, SkewParams, PARAM_TOL};

/// Slack allowance: `max(abs, rel * max(|lhs|, |rhs|))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
}

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance {
        rel: 1e-9,
        abs: 1e-12,
    };

    pub const fn absolute(abs: f64) -> Self {
        Self { rel: 0.0, abs }
    }

    pub fn allowance(&self, lhs: f64, rhs: f64) -> f64 {
        (self.rel * lhs.abs().max(rhs.abs())).max(self.abs)
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Every relation the suite knows how to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `(x^a + y^a)|x^b - y^b| <= |x - y|`
    Lemma1Product,
    /// `4ab(x - y)^2 <= (x^2a - y^2a)(x^2b - y^2b)`
    Lemma1Quadratic,
    /// `(x^(a+b) - x^a y^b)^2 <= (x^2a - y^2a)(x^2b - y^2b)`
    Lemma2,
    /// `U(A) U(B) >= 4ab |Corr(A, B)|^2`
    Theorem1,
    /// `U(A) U(B) >= |Corr(A, B)|^2 / 4`
    Theorem2,
    /// `W(A) W(B) >= 4ab |Corr(A, B)|^2`
    Corollary1,
    /// `W(A) W(B) >= |Corr(A, B)|^2 / 4`
    Corollary2,
    /// `W(A) W(B) >= U(A) U(B)`
    CorollaryDominatesTheorem,
    INonnegative,
    UAboveI,
    VarAboveU,
    KAboveI,
    LAboveJ,
    WAboveU,
    /// Allowed path deviation against the observed one.
    PathAgreement(Quantity),
}

impl Relation {
    pub fn name(&self) -> &'static str {
        match self {
            Relation::Lemma1Product => "lemma1_product",
            Relation::Lemma1Quadratic => "lemma1_quadratic",
            Relation::Lemma2 => "lemma2",
            Relation::Theorem1 => "theorem1",
            Relation::Theorem2 => "theorem2",
            Relation::Corollary1 => "corollary1",
            Relation::Corollary2 => "corollary2",
            Relation::CorollaryDominatesTheorem => "corollary_lhs_above_theorem_lhs",
            Relation::INonnegative => "I_nonnegative",
            Relation::UAboveI => "U_above_I",
            Relation::VarAboveU => "Var_above_U",
            Relation::KAboveI => "K_above_I",
            Relation::LAboveJ => "L_above_J",
            Relation::WAboveU => "W_above_U",
            Relation::PathAgreement(q) => match q {
                Quantity::Covariance => "path_agreement_Cov",
                Quantity::Variance => "path_agreement_Var",
                Quantity::Correlation => "path_agreement_Corr",
                Quantity::CPair => "path_agreement_C_pair",
                Quantity::CSelf => "path_agreement_C",
                Quantity::I => "path_agreement_I",
                Quantity::J => "path_agreement_J",
                Quantity::K => "path_agreement_K",
                Quantity::L => "path_agreement_L",
                Quantity::U => "path_agreement_U",
                Quantity::W => "path_agreement_W",
            },
        }
    }
}

/// One evaluated inequality `lhs >= rhs`.
///
/// `holds` is exactly `slack >= -tol` on the stored values, and is false
/// whenever either side is not finite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CheckResult {
    pub relation: Relation,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
    pub tol: f64,
    pub inputs_digest: u64,
}

impl CheckResult {
    pub fn new(
        relation: Relation,
        lhs: f64,
        rhs: f64,
        tolerance: Tolerance,
        inputs_digest: u64,
    ) -> Self {
        let slack = lhs - rhs;
        let tol = tolerance.allowance(lhs, rhs);
        let holds = lhs.is_finite() && rhs.is_finite() && slack >= -tol;
        Self {
            relation,
            lhs,
            rhs,
            slack,
            holds,
            tol,
            inputs_digest,
        }
    }

    pub fn name(&self) -> &'static str {
        self.relation.name()
    }
}

/// FNV-1a fingerprint over the bit patterns of the inputs.
#[derive(Default)]
pub struct InputDigest(FnvHasher);

impl InputDigest {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn scalar(mut self, x: f64) -> Self {
        self.0.write_u64(x.to_bits());
        self
    }

    pub fn params(self, p: SkewParams) -> Self {
        self.scalar(p.alpha()).scalar(p.beta())
    }

    pub fn matrix(mut self, m: &crate::matrix::CMatrix) -> Self {
        self.0.write_usize(m.dim());
        for z in m.as_slice() {
            self.0.write_u64(z.re.to_bits());
            self.0.write_u64(z.im.to_bits());
        }
        self
    }

    pub fn finish(&self) -> u64 {
        self.0.finish()
    }
}

fn digest_state(
    rho: &DensityOperator,
    a: &HsOperator,
    b: Option<&HsOperator>,
    p: SkewParams,
) -> u64 {
    let mut d = InputDigest::new().matrix(rho.matrix()).matrix(a.matrix());
    if let Some(b) = b {
        d = d.matrix(b.matrix());
    }
    d.params(p).finish()
}

/// `0 <= beta <= min(alpha, 1 - alpha)`.
pub fn in_theorem1_domain(p: SkewParams) -> bool {
    p.beta() <= p.alpha().min(1.0 - p.alpha()) + PARAM_TOL
}

/// `0 <= beta <= min(4 alpha, 1 - alpha)`.
pub fn in_theorem2_domain(p: SkewParams) -> bool {
    p.beta() <= (4.0 * p.alpha()).min(1.0 - p.alpha()) + PARAM_TOL
}

fn scalar_inputs(x: f64, y: f64) -> Result<()> {
    if !(x.is_finite() && y.is_finite() && x >= 0.0 && y >= 0.0) {
        return Err(Error::InvalidScalar { x, y });
    }
    Ok(())
}

fn lemma_domain(ok: bool, p: SkewParams) -> Result<()> {
    if !ok {
        return Err(Error::ParamsOutsideLemmaDomain {
            alpha: p.alpha(),
            beta: p.beta(),
        });
    }
    Ok(())
}

fn theorem_domain(ok: bool, p: SkewParams) -> Result<()> {
    if !ok {
        return Err(Error::ParamsOutsideTheoremDomain {
            alpha: p.alpha(),
            beta: p.beta(),
        });
    }
    Ok(())
}

/// `|x - y| >= (x^alpha + y^alpha) |x^beta - y^beta|`, for `beta <= min(alpha, 1 - alpha)`.
pub fn check_lemma1_product(x: f64, y: f64, p: SkewParams, tol: Tolerance) -> Result<CheckResult> {
    scalar_inputs(x, y)?;
    lemma_domain(in_theorem1_domain(p), p)?;
    let (a, b) = (p.alpha(), p.beta());
    let lhs = (x - y).abs();
    let rhs = (x.powf(a) + y.powf(a)) * (x.powf(b) - y.powf(b)).abs();
    let digest = InputDigest::new().scalar(x).scalar(y).params(p).finish();
    Ok(CheckResult::new(
        Relation::Lemma1Product,
        lhs,
        rhs,
        tol,
        digest,
    ))
}

/// `(x^2alpha - y^2alpha)(x^2beta - y^2beta) >= 4 alpha beta (x - y)^2`.
pub fn check_lemma1_quadratic(
    x: f64,
    y: f64,
    p: SkewParams,
    tol: Tolerance,
) -> Result<CheckResult> {
    scalar_inputs(x, y)?;
    lemma_domain(in_theorem1_domain(p), p)?;
    let (a, b) = (p.alpha(), p.beta());
    let lhs = (x.powf(2.0 * a) - y.powf(2.0 * a)) * (x.powf(2.0 * b) - y.powf(2.0 * b));
    let rhs = 4.0 * a * b * (x - y) * (x - y);
    let digest = InputDigest::new().scalar(x).scalar(y).params(p).finish();
    Ok(CheckResult::new(
        Relation::Lemma1Quadratic,
        lhs,
        rhs,
        tol,
        digest,
    ))
}

/// `(x^2alpha - y^2alpha)(x^2beta - y^2beta) >= (x^(alpha+beta) - x^alpha y^beta)^2`,
/// for `beta <= min(4 alpha, 1 - alpha)`.
pub fn check_lemma2(x: f64, y: f64, p: SkewParams, tol: Tolerance) -> Result<CheckResult> {
    scalar_inputs(x, y)?;
    lemma_domain(in_theorem2_domain(p), p)?;
    let (a, b) = (p.alpha(), p.beta());
    let lhs = (x.powf(2.0 * a) - y.powf(2.0 * a)) * (x.powf(2.0 * b) - y.powf(2.0 * b));
    let cross = x.powf(a + b) - x.powf(a) * y.powf(b);
    let rhs = cross * cross;
    let digest = InputDigest::new().scalar(x).scalar(y).params(p).finish();
    Ok(CheckResult::new(Relation::Lemma2, lhs, rhs, tol, digest))
}

/// The quantities of an operator pair that the uncertainty relations need.
#[derive(Clone, Copy, Debug)]
pub struct PairEvaluation {
    pub params: SkewParams,
    pub u_a: f64,
    pub u_b: f64,
    pub w_a: f64,
    pub w_b: f64,
    pub corr: Complex64,
    pub digest: u64,
}

impl PairEvaluation {
    pub fn compute(ctx: &SkewContext<'_>, a: &HsOperator, b: &HsOperator) -> Result<Self> {
        let path = Path::TraceFormula;
        Ok(Self {
            params: ctx.params(),
            u_a: ctx.u_quantity(a, path)?.real(),
            u_b: ctx.u_quantity(b, path)?.real(),
            w_a: ctx.w_quantity(a, path)?.real(),
            w_b: ctx.w_quantity(b, path)?.real(),
            corr: ctx.correlation(a, b, path)?.value,
            digest: digest_state(ctx.rho(), a, Some(b), ctx.params()),
        })
    }

    pub fn u_product(&self) -> f64 {
        self.u_a * self.u_b
    }

    pub fn w_product(&self) -> f64 {
        self.w_a * self.w_b
    }

    /// `4 alpha beta |Corr|^2`
    pub fn weighted_bound(&self) -> f64 {
        4.0 * self.params.alpha() * self.params.beta() * self.corr.norm_sqr()
    }

    /// `|Corr|^2 / 4`
    pub fn quarter_bound(&self) -> f64 {
        0.25 * self.corr.norm_sqr()
    }

    pub fn theorem1(&self, tol: Tolerance) -> Result<CheckResult> {
        theorem_domain(in_theorem1_domain(self.params), self.params)?;
        Ok(CheckResult::new(
            Relation::Theorem1,
            self.u_product(),
            self.weighted_bound(),
            tol,
            self.digest,
        ))
    }

    pub fn theorem2(&self, tol: Tolerance) -> Result<CheckResult> {
        theorem_domain(in_theorem2_domain(self.params), self.params)?;
        Ok(CheckResult::new(
            Relation::Theorem2,
            self.u_product(),
            self.quarter_bound(),
            tol,
            self.digest,
        ))
    }

    pub fn corollary1(&self, tol: Tolerance) -> Result<CorollaryCheck> {
        theorem_domain(in_theorem1_domain(self.params), self.params)?;
        Ok(CorollaryCheck {
            bound: CheckResult::new(
                Relation::Corollary1,
                self.w_product(),
                self.weighted_bound(),
                tol,
                self.digest,
            ),
            dominance: self.dominance(tol),
        })
    }

    pub fn corollary2(&self, tol: Tolerance) -> Result<CorollaryCheck> {
        theorem_domain(in_theorem2_domain(self.params), self.params)?;
        Ok(CorollaryCheck {
            bound: CheckResult::new(
                Relation::Corollary2,
                self.w_product(),
                self.quarter_bound(),
                tol,
                self.digest,
            ),
            dominance: self.dominance(tol),
        })
    }

    fn dominance(&self, tol: Tolerance) -> CheckResult {
        CheckResult::new(
            Relation::CorollaryDominatesTheorem,
            self.w_product(),
            self.u_product(),
            tol,
            self.digest,
        )
    }
}

/// A corollary bound together with `W(A) W(B) >= U(A) U(B)`.
#[derive(Clone, Copy, Debug)]
pub struct CorollaryCheck {
    pub bound: CheckResult,
    pub dominance: CheckResult,
}

pub fn check_theorem1(
    rho: &DensityOperator,
    a: &HsOperator,
    b: &HsOperator,
    p: SkewParams,
    tol: Tolerance,
) -> Result<CheckResult> {
    theorem_domain(in_theorem1_domain(p), p)?;
    PairEvaluation::compute(&SkewContext::new(rho, p)?, a, b)?.theorem1(tol)
}

pub fn check_theorem2(
    rho: &DensityOperator,
    a: &HsOperator,
    b: &HsOperator,
    p: SkewParams,
    tol: Tolerance,
) -> Result<CheckResult> {
    theorem_domain(in_theorem2_domain(p), p)?;
    PairEvaluation::compute(&SkewContext::new(rho, p)?, a, b)?.theorem2(tol)
}

pub fn check_corollary1(
    rho: &DensityOperator,
    a: &HsOperator,
    b: &HsOperator,
    p: SkewParams,
    tol: Tolerance,
) -> Result<CorollaryCheck> {
    theorem_domain(in_theorem1_domain(p), p)?;
    PairEvaluation::compute(&SkewContext::new(rho, p)?, a, b)?.corollary1(tol)
}

pub fn check_corollary2(
    rho: &DensityOperator,
    a: &HsOperator,
    b: &HsOperator,
    p: SkewParams,
    tol: Tolerance,
) -> Result<CorollaryCheck> {
    theorem_domain(in_theorem2_domain(p), p)?;
    PairEvaluation::compute(&SkewContext::new(rho, p)?, a, b)?.corollary2(tol)
}

/// Single-operator ordering relations: `I >= 0`, `U >= I`, `Var >= U`,
/// `K >= I`, `L >= J`, `W >= U`.
///
/// `I >= 0` is checked on the value before clamping.
pub fn ordering_checks(
    ctx: &SkewContext<'_>,
    a: &HsOperator,
    tol: Tolerance,
) -> Result<Vec<CheckResult>> {
    let path = Path::TraceFormula;
    let i = ctx.mgwyd_i(a, path)?;
    let j = ctx.companion_j(a, path)?.real();
    let var = ctx.variance(a, path)?.real();
    let u = ctx.u_quantity(a, path)?.real();
    let k = ctx.mwgwyd_k(a, path)?.real();
    let l = ctx.companion_l(a, path)?.real();
    let w = ctx.w_quantity(a, path)?.real();
    let digest = digest_state(ctx.rho(), a, None, ctx.params());
    let check = |r, lhs, rhs| CheckResult::new(r, lhs, rhs, tol, digest);
    Ok(alloc::vec![
        check(Relation::INonnegative, i.raw_real(), 0.0),
        check(Relation::UAboveI, u, i.real()),
        check(Relation::VarAboveU, var, u),
        check(Relation::KAboveI, k, i.real()),
        check(Relation::LAboveJ, l, j),
        check(Relation::WAboveU, w, u),
    ])
}

/// Path agreement for `quantity`, recorded as `allowed >= observed` deviation.
///
/// A disagreement beyond [`crate::quantities::PATH_REL_TOL`] is returned as a
/// failing check rather than an error.
pub fn path_agreement_check(
    ctx: &SkewContext<'_>,
    quantity: Quantity,
    a: &HsOperator,
    b: Option<&HsOperator>,
) -> Result<CheckResult> {
    let digest = digest_state(ctx.rho(), a, b, ctx.params());
    let relation = Relation::PathAgreement(quantity);
    match ctx.cross_check(quantity, a, b) {
        Ok(cc) => Ok(CheckResult::new(
            relation,
            cc.allowed,
            cc.deviation,
            Tolerance::absolute(0.0),
            digest,
        )),
        Err(Error::NumericalInconsistency { first, second, .. }) => Ok(CheckResult::new(
            relation,
            0.0,
            (first - second).abs(),
            Tolerance::absolute(0.0),
            digest,
        )),
        Err(e) => Err(e),
    }
}

/// Which lower bound is stronger for the same `|Corr|^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundComparison {
    /// `4 alpha beta > 1/4`
    Theorem1Tighter,
    /// `4 alpha beta < 1/4`
    Theorem2Tighter,
    Equal,
    /// `(alpha, beta)` does not satisfy both hypotheses.
    DomainsDisjoint,
}

/// Compares the coefficients `4 alpha beta` and `1/4` where both bounds apply.
pub fn compare_bounds(p: SkewParams) -> BoundComparison {
    if !(in_theorem1_domain(p) && in_theorem2_domain(p)) {
        return BoundComparison::DomainsDisjoint;
    }
    let weighted = 4.0 * p.alpha() * p.beta();
    let diff = weighted - 0.25;
    if diff.abs() <= 1e-12 {
        BoundComparison::Equal
    } else if diff > 0.0 {
        BoundComparison::Theorem1Tighter
    } else {
        BoundComparison::Theorem2Tighter
    }
}

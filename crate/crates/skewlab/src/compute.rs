//! Every quantity for user-supplied matrices, as a JSON object.

use serde::Serialize;
use skewlab_core::inequality::PairEvaluation;
use skewlab_core::{
    in_theorem1_domain, in_theorem2_domain, validate_density, CMatrix, CheckResult, Complex64,
    HsOperator, Path, Quantity, SkewContext, SkewParams, Tolerance,
};

use crate::AppResult;

#[derive(Debug, Serialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexValue {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

/// Single-operator quantities.
#[derive(Debug, Serialize)]
#[allow(non_snake_case)]
pub struct OperatorQuantities {
    pub Var: f64,
    pub C: f64,
    pub I: f64,
    pub J: f64,
    pub K: f64,
    pub L: f64,
    pub U: f64,
    pub W: f64,
}

#[derive(Debug, Serialize)]
pub struct TheoremOutcome {
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
}

impl From<CheckResult> for TheoremOutcome {
    fn from(c: CheckResult) -> Self {
        Self {
            lhs: c.lhs,
            rhs: c.rhs,
            slack: c.slack,
            holds: c.holds,
        }
    }
}

#[derive(Debug, Serialize)]
#[allow(non_snake_case)]
pub struct PairQuantities {
    pub Cov: ComplexValue,
    pub Corr: ComplexValue,
    pub C: ComplexValue,
    /// `null` when `(alpha, beta)` is outside the hypothesis.
    pub theorem1: Option<TheoremOutcome>,
    pub theorem2: Option<TheoremOutcome>,
}

#[derive(Debug, Serialize)]
pub struct ComputeOutput {
    pub dim: usize,
    pub alpha: f64,
    pub beta: f64,
    pub a: OperatorQuantities,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<OperatorQuantities>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairQuantities>,
}

impl ComputeOutput {
    /// False only when an applicable theorem check failed.
    pub fn theorems_hold(&self) -> bool {
        self.pair.as_ref().is_none_or(|p| {
            [&p.theorem1, &p.theorem2]
                .into_iter()
                .flatten()
                .all(|t| t.holds)
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain numeric struct") + "\n"
    }
}

fn single(ctx: &SkewContext<'_>, a: &HsOperator) -> AppResult<OperatorQuantities> {
    let get = |q| {
        ctx.evaluate(q, a, None, Path::TraceFormula)
            .map(|r| r.real())
    };
    Ok(OperatorQuantities {
        Var: get(Quantity::Variance)?,
        C: get(Quantity::CSelf)?,
        I: get(Quantity::I)?,
        J: get(Quantity::J)?,
        K: get(Quantity::K)?,
        L: get(Quantity::L)?,
        U: get(Quantity::U)?,
        W: get(Quantity::W)?,
    })
}

pub fn compute(
    state: &CMatrix,
    op_a: &CMatrix,
    op_b: Option<&CMatrix>,
    alpha: f64,
    beta: f64,
) -> AppResult<ComputeOutput> {
    let rho = validate_density(state)?;
    let params = SkewParams::new(alpha, beta)?;
    let ctx = SkewContext::new(&rho, params)?;
    let a = HsOperator::new(op_a.clone())?;
    let b = op_b.map(|m| HsOperator::new(m.clone())).transpose()?;
    let qa = single(&ctx, &a)?;
    let (qb, pair) = match &b {
        None => (None, None),
        Some(b) => {
            let path = Path::TraceFormula;
            let ev = PairEvaluation::compute(&ctx, &a, b)?;
            let tol = Tolerance::DEFAULT;
            let pair = PairQuantities {
                Cov: ctx.covariance(&a, b, path)?.value.into(),
                Corr: ctx.correlation(&a, b, path)?.value.into(),
                C: ctx.c_quantity(&a, b, path)?.value.into(),
                theorem1: in_theorem1_domain(params)
                    .then(|| ev.theorem1(tol))
                    .transpose()?
                    .map(Into::into),
                theorem2: in_theorem2_domain(params)
                    .then(|| ev.theorem2(tol))
                    .transpose()?
                    .map(Into::into),
            };
            (Some(single(&ctx, b)?), Some(pair))
        }
    };
    Ok(ComputeOutput {
        dim: rho.dim(),
        alpha: params.alpha(),
        beta: params.beta(),
        a: qa,
        b: qb,
        pair,
    })
}

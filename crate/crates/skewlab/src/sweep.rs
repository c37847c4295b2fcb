//! Family sweeps and `(alpha, beta)` grids written as CSV.

use std::fmt::Write as _;

use rayon::prelude::*;
use skewlab_core::inequality::PairEvaluation;
use skewlab_core::{
    fixed_operators, in_theorem1_domain, in_theorem2_domain, Family, FamilyParam, SkewContext,
    SkewParams,
};

use crate::{AppError, AppResult};

pub const HEADER: &str = "family,param,alpha,beta,lhs14,rhs14,gap14,lhs17,rhs17,gap17";

/// One CSV row. `None` fields are written empty.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub family: Family,
    pub param: f64,
    pub alpha: f64,
    pub beta: f64,
    pub lhs14: Option<f64>,
    pub rhs14: Option<f64>,
    pub gap14: Option<f64>,
    pub lhs17: Option<f64>,
    pub rhs17: Option<f64>,
    pub gap17: Option<f64>,
}

impl SweepRow {
    fn empty(family: Family, param: f64, alpha: f64, beta: f64) -> Self {
        Self {
            family,
            param,
            alpha,
            beta,
            lhs14: None,
            rhs14: None,
            gap14: None,
            lhs17: None,
            rhs17: None,
            gap17: None,
        }
    }
}

/// 17 significant digits, '.' separator, independent of locale.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

fn field(out: &mut String, x: Option<f64>) {
    out.push(',');
    if let Some(x) = x {
        out.push_str(&format_number(x));
    }
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for r in rows {
        let _ = write!(
            out,
            "{},{},{},{}",
            r.family.name(),
            format_number(r.param),
            format_number(r.alpha),
            format_number(r.beta)
        );
        for x in [r.lhs14, r.rhs14, r.gap14, r.lhs17, r.rhs17, r.gap17] {
            field(&mut out, x);
        }
        out.push('\n');
    }
    out
}

/// Evaluates both theorem gaps at one point with the fixed operator pair.
pub fn evaluate_point(family: Family, param: f64, alpha: f64, beta: f64) -> AppResult<SweepRow> {
    let mut row = SweepRow::empty(family, param, alpha, beta);
    let Ok(p) = SkewParams::new(alpha, beta) else {
        return Ok(row);
    };
    let rho = FamilyParam::new(family, param)?.state()?;
    let (a, b) = fixed_operators();
    let ctx = SkewContext::new(&rho, p)?;
    let ev = PairEvaluation::compute(&ctx, &a, &b)?;
    let lhs = ev.u_product();
    row.lhs14 = Some(lhs);
    row.lhs17 = Some(lhs);
    if in_theorem1_domain(p) {
        let rhs = ev.weighted_bound();
        row.rhs14 = Some(rhs);
        row.gap14 = Some(lhs - rhs);
    }
    if in_theorem2_domain(p) {
        let rhs = ev.quarter_bound();
        row.rhs17 = Some(rhs);
        row.gap17 = Some(lhs - rhs);
    }
    Ok(row)
}

fn linspace(start: f64, end: f64, steps: usize) -> Vec<f64> {
    if steps == 1 {
        return vec![start];
    }
    (0..steps)
        .map(|k| {
            if k + 1 == steps {
                end
            } else {
                start + (end - start) * k as f64 / (steps - 1) as f64
            }
        })
        .collect()
}

fn check_unit(name: &str, x: f64) -> AppResult<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(AppError::Usage(format!("{name} = {x} outside [0, 1]")));
    }
    Ok(())
}

/// Rows for `steps` family parameters from `start` to `end` at fixed exponents.
pub fn sweep(
    family: Family,
    start: f64,
    end: f64,
    steps: usize,
    alpha: f64,
    beta: f64,
) -> AppResult<Vec<SweepRow>> {
    check_unit("start", start)?;
    check_unit("end", end)?;
    if steps == 0 {
        return Err(AppError::Usage("steps must be at least 1".into()));
    }
    if start > end {
        return Err(AppError::Usage(format!("start {start} exceeds end {end}")));
    }
    SkewParams::new(alpha, beta)?;
    linspace(start, end, steps)
        .into_par_iter()
        .map(|x| evaluate_point(family, x, alpha, beta))
        .collect()
}

/// Rows over a rectangular `alpha x beta` grid on `[0, 1]^2`. Cells off the
/// simplex keep their coordinates with every value field empty.
pub fn grid(
    family: Family,
    param: f64,
    alpha_steps: usize,
    beta_steps: usize,
) -> AppResult<Vec<SweepRow>> {
    check_unit("param", param)?;
    if alpha_steps < 2 || beta_steps < 2 {
        return Err(AppError::Usage(
            "grid needs at least 2 steps per axis".into(),
        ));
    }
    let cells: Vec<(f64, f64)> = linspace(0.0, 1.0, alpha_steps)
        .into_iter()
        .flat_map(|a| {
            linspace(0.0, 1.0, beta_steps)
                .into_iter()
                .map(move |b| (a, b))
        })
        .collect();
    cells
        .into_par_iter()
        .map(|(a, b)| evaluate_point(family, param, a, b))
        .collect()
}

/// Mean of `gap14` and `gap17` over the rows where each is defined.
pub fn mean_gaps(rows: &[SweepRow]) -> (Option<f64>, Option<f64>) {
    let mean = |f: fn(&SweepRow) -> Option<f64>| {
        let vals: Vec<f64> = rows.iter().filter_map(f).collect();
        (!vals.is_empty()).then(|| vals.iter().sum::<f64>() / vals.len() as f64)
    };
    (mean(|r| r.gap14), mean(|r| r.gap17))
}

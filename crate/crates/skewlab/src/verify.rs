//! Randomized verification of every relation over seeded samples.

use rayon::prelude::*;
use skewlab_core::inequality::{
    check_lemma1_product, check_lemma1_quadratic, check_lemma2, ordering_checks,
    path_agreement_check, PairEvaluation,
};
use skewlab_core::states::{
    random_density_with, random_operator_with, random_params, random_scalars,
    random_theorem1_params, random_theorem2_params, sample_rng,
};
use skewlab_core::{CheckResult, Quantity, SkewContext, SkewParams, Tolerance};

use crate::report::{CheckRecord, Report};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub dims: Vec<usize>,
    pub samples: u64,
    pub seed: u64,
    pub tol: Tolerance,
    pub include_lemmas: bool,
}

/// Stream index of sample `i` at dimension `d`; distinct for every pair.
fn stream(d: usize, i: u64) -> u64 {
    ((d as u64) << 40) | i
}

struct Sample {
    dim: usize,
    index: u64,
    records: Vec<CheckRecord>,
}

impl Sample {
    fn push(&mut self, c: &CheckResult, p: SkewParams) {
        self.records.push(CheckRecord::from_check(
            c,
            self.index,
            self.dim,
            p.alpha(),
            p.beta(),
        ));
    }

    fn push_result(&mut self, relation: &str, p: SkewParams, r: skewlab_core::Result<CheckResult>) {
        match r {
            Ok(c) => self.push(&c, p),
            Err(e) => self.fail(relation, p, e),
        }
    }

    fn fail(&mut self, relation: &str, p: SkewParams, e: impl ToString) {
        self.records.push(CheckRecord::failed(
            relation,
            self.index,
            self.dim,
            p.alpha(),
            p.beta(),
            e.to_string(),
        ));
    }
}

fn run_sample(cfg: &VerifyConfig, dim: usize, index: u64) -> Vec<CheckRecord> {
    let mut rng = sample_rng(cfg.seed, stream(dim, index));
    let mut out = Sample {
        dim,
        index,
        records: Vec::new(),
    };
    let rank = 1 + (index as usize % dim);
    let draws = random_density_with(dim, rank, &mut rng).and_then(|rho| {
        let a = random_operator_with(dim, &mut rng)?;
        let b = random_operator_with(dim, &mut rng)?;
        Ok((rho, a, b))
    });
    let general = random_params(&mut rng);
    let p1 = random_theorem1_params(&mut rng);
    let p2 = random_theorem2_params(&mut rng);
    let (rho, a, b) = match draws {
        Ok(t) => t,
        Err(e) => {
            out.fail("sample", general, e);
            return out.records;
        }
    };

    match SkewContext::new(&rho, general) {
        Ok(ctx) => {
            match ordering_checks(&ctx, &a, cfg.tol) {
                Ok(checks) => checks.iter().for_each(|c| out.push(c, general)),
                Err(e) => out.fail("ordering", general, e),
            }
            for q in Quantity::ALL {
                let r = path_agreement_check(&ctx, q, &a, Some(&b));
                let name = skewlab_core::Relation::PathAgreement(q).name();
                out.push_result(name, general, r);
            }
        }
        Err(e) => out.fail("ordering", general, e),
    }

    let pair = |p: SkewParams| {
        SkewContext::new(&rho, p).and_then(|ctx| PairEvaluation::compute(&ctx, &a, &b))
    };
    match pair(p1) {
        Ok(ev) => {
            out.push_result("theorem1", p1, ev.theorem1(cfg.tol));
            match ev.corollary1(cfg.tol) {
                Ok(c) => {
                    out.push(&c.bound, p1);
                    out.push(&c.dominance, p1);
                }
                Err(e) => out.fail("corollary1", p1, e),
            }
        }
        Err(e) => out.fail("theorem1", p1, e),
    }
    match pair(p2) {
        Ok(ev) => {
            out.push_result("theorem2", p2, ev.theorem2(cfg.tol));
            match ev.corollary2(cfg.tol) {
                Ok(c) => {
                    out.push(&c.bound, p2);
                    out.push(&c.dominance, p2);
                }
                Err(e) => out.fail("corollary2", p2, e),
            }
        }
        Err(e) => out.fail("theorem2", p2, e),
    }

    if cfg.include_lemmas {
        let (x, y) = random_scalars(&mut rng);
        let q1 = random_theorem1_params(&mut rng);
        let q2 = random_theorem2_params(&mut rng);
        out.push_result(
            "lemma1_product",
            q1,
            check_lemma1_product(x, y, q1, cfg.tol),
        );
        out.push_result(
            "lemma1_quadratic",
            q1,
            check_lemma1_quadratic(x, y, q1, cfg.tol),
        );
        out.push_result("lemma2", q2, check_lemma2(x, y, q2, cfg.tol));
    }
    out.records
}

/// Runs every sample, in parallel on the current rayon pool. Records are
/// ordered by dimension (as given) and then by sample index.
pub fn run(cfg: &VerifyConfig) -> Report {
    let jobs: Vec<(usize, u64)> = cfg
        .dims
        .iter()
        .flat_map(|&d| (0..cfg.samples).map(move |i| (d, i)))
        .collect();
    let checks = jobs
        .par_iter()
        .map(|&(d, i)| run_sample(cfg, d, i))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Report::new(checks, cfg.seed)
}

//! Skew-information quantities and their correlation companions.
//!
//! Every quantity can be evaluated two ways:
//!
//! - [`Path::TraceFormula`]: traces of products of `rho^t`, `A`, `A^dagger`
//!   and their (anti)commutators in the computational basis. This is the
//!   production default.
//! - [`Path::SpectralSum`]: explicit double sums over the eigenvalues
//!   `lambda_m` of `rho` and the matrix elements `a_mn = <psi_m|A_0|psi_n>` in
//!   its eigenbasis. This is used as the oracle.
//!
//! [`SkewContext::cross_check`] evaluates both and fails with
//! [`Error::NumericalInconsistency`] when they disagree.
//!
//! `J`, `K` and `L` are always evaluated on the centered operator
//! `A_0 = A - Tr(rho A) I`. `I` is evaluated on `A` as given; it is invariant
//! under centering anyway.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::matrix::{anticommutator, commutator, trace_chain, CMatrix};
use crate::spectral::{center, eigen_power, matrix_power, DensityOperator, HsOperator, SkewParams};

/// Relative agreement required between two evaluations of the same quantity.
pub const PATH_REL_TOL: f64 = 1e-9;
/// Absolute floor (per unit operator norm squared) for path agreement.
pub const PATH_ABS_TOL: f64 = 1e-12;
/// Round-off floor (per unit operator norm squared) below which a nonnegative
/// quantity is clamped to zero instead of rejected.
pub const NEGATIVE_TOL: f64 = 1e-10;
/// Relative agreement between the two expressions for `U`.
pub const U_REL_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Path {
    TraceFormula,
    SpectralSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Covariance,
    Variance,
    Correlation,
    CPair,
    CSelf,
    /// MGWYD skew information.
    I,
    /// Anticommutator companion of `I`.
    J,
    /// MWGWYD skew information.
    K,
    /// Anticommutator companion of `K`.
    L,
    U,
    W,
}

impl Quantity {
    pub const ALL: [Quantity; 11] = [
        Quantity::Covariance,
        Quantity::Variance,
        Quantity::Correlation,
        Quantity::CPair,
        Quantity::CSelf,
        Quantity::I,
        Quantity::J,
        Quantity::K,
        Quantity::L,
        Quantity::U,
        Quantity::W,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Quantity::Covariance => "Cov",
            Quantity::Variance => "Var",
            Quantity::Correlation => "Corr",
            Quantity::CPair => "C_pair",
            Quantity::CSelf => "C",
            Quantity::I => "I",
            Quantity::J => "J",
            Quantity::K => "K",
            Quantity::L => "L",
            Quantity::U => "U",
            Quantity::W => "W",
        }
    }

    /// Whether the quantity takes two operators.
    pub fn is_pair(&self) -> bool {
        matches!(
            self,
            Quantity::Covariance | Quantity::Correlation | Quantity::CPair
        )
    }

    /// Quantities that are real and nonnegative for every input.
    pub fn is_nonnegative(&self) -> bool {
        !self.is_pair()
    }
}

/// One evaluated quantity.
///
/// `value` is the raw complex result. For real quantities `imag_residual`
/// holds `|Im value|`, a round-off diagnostic; for the genuinely complex
/// pair quantities it is zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuantityResult {
    pub quantity: Quantity,
    pub value: Complex64,
    pub path: Path,
    pub imag_residual: f64,
}

impl QuantityResult {
    fn new(quantity: Quantity, value: Complex64, path: Path) -> Self {
        let imag_residual = if quantity.is_pair() {
            0.0
        } else {
            value.im.abs()
        };
        Self {
            quantity,
            value,
            path,
            imag_residual,
        }
    }

    /// The reported real value; nonnegative quantities are clamped at zero.
    pub fn real(&self) -> f64 {
        if self.quantity.is_nonnegative() {
            self.value.re.max(0.0)
        } else {
            self.value.re
        }
    }

    /// The real part before clamping.
    pub fn raw_real(&self) -> f64 {
        self.value.re
    }
}

/// Both evaluations of one quantity.
#[derive(Clone, Copy, Debug)]
pub struct CrossCheck {
    pub trace: QuantityResult,
    pub spectral: QuantityResult,
    /// `|trace - spectral|` on the complex values.
    pub deviation: f64,
    /// Largest deviation the pair was allowed.
    pub allowed: f64,
}

/// Allowed deviation between two numbers that should be equal.
#[inline]
pub(crate) fn agreement_tol(x: f64, y: f64, rel: f64, abs: f64) -> f64 {
    (rel * x.abs().max(y.abs())).max(abs)
}

fn agree(what: &'static str, x: f64, y: f64, rel: f64, abs: f64) -> Result<()> {
    if (x - y).abs() > agreement_tol(x, y, rel, abs) {
        return Err(Error::NumericalInconsistency {
            what,
            first: x,
            second: y,
        });
    }
    Ok(())
}

fn agree_complex(what: &'static str, x: Complex64, y: Complex64, rel: f64, abs: f64) -> Result<()> {
    let tol = (rel * x.norm().max(y.norm())).max(abs);
    if (x - y).norm() > tol {
        return Err(Error::NumericalInconsistency {
            what,
            first: (x - y).norm(),
            second: tol,
        });
    }
    Ok(())
}

/// `max(1, ||A||_F^2)`, the scale against which round-off floors are measured.
fn norm_scale(a: &HsOperator) -> f64 {
    let n = a.matrix().frobenius_norm();
    (n * n).max(1.0)
}

fn pair_scale(a: &HsOperator, b: &HsOperator) -> f64 {
    (a.matrix().frobenius_norm() * b.matrix().frobenius_norm()).max(1.0)
}

/// Cached powers of `rho` for one exponent pair.
struct Powers {
    alpha: CMatrix,
    beta: CMatrix,
    gamma: CMatrix,
    alpha_plus_beta: CMatrix,
    one_minus_alpha: CMatrix,
    one_minus_beta: CMatrix,
    /// `(rho^alpha + rho^beta) / 2`
    mean: CMatrix,
}

/// Exponent weights `lambda^t` on the spectrum, for the spectral sums.
struct Weights {
    lam: Vec<f64>,
    alpha: Vec<f64>,
    beta: Vec<f64>,
    gamma: Vec<f64>,
    alpha_plus_beta: Vec<f64>,
    one_minus_alpha: Vec<f64>,
    one_minus_beta: Vec<f64>,
    mean: Vec<f64>,
}

impl Weights {
    fn new(lam: &[f64], p: SkewParams) -> Self {
        let pow = |t: f64| lam.iter().map(|&l| eigen_power(l, t)).collect::<Vec<_>>();
        let alpha = pow(p.alpha());
        let beta = pow(p.beta());
        let mean = alpha
            .iter()
            .zip(&beta)
            .map(|(a, b)| 0.5 * (a + b))
            .collect();
        Self {
            lam: lam.to_vec(),
            gamma: pow(p.gamma()),
            alpha_plus_beta: pow(p.alpha() + p.beta()),
            one_minus_alpha: pow(1.0 - p.alpha()),
            one_minus_beta: pow(1.0 - p.beta()),
            alpha,
            beta,
            mean,
        }
    }
}

/// A density operator paired with one exponent choice; evaluates every quantity.
pub struct SkewContext<'a> {
    rho: &'a DensityOperator,
    params: SkewParams,
    powers: Powers,
    weights: Weights,
}

impl<'a> SkewContext<'a> {
    pub fn new(rho: &'a DensityOperator, params: SkewParams) -> Result<Self> {
        let (a, b) = (params.alpha(), params.beta());
        let alpha = matrix_power(rho, a)?;
        let beta = matrix_power(rho, b)?;
        let mean = (&alpha + &beta).scale_real(0.5);
        let powers = Powers {
            gamma: matrix_power(rho, params.gamma())?,
            alpha_plus_beta: matrix_power(rho, (a + b).min(1.0))?,
            one_minus_alpha: matrix_power(rho, 1.0 - a)?,
            one_minus_beta: matrix_power(rho, 1.0 - b)?,
            alpha,
            beta,
            mean,
        };
        Ok(Self {
            rho,
            params,
            powers,
            weights: Weights::new(rho.eigenvalues(), params),
        })
    }

    pub fn rho(&self) -> &DensityOperator {
        self.rho
    }

    pub fn params(&self) -> SkewParams {
        self.params
    }

    /// Dispatches on `quantity`; `b` is required for the pair quantities and ignored otherwise.
    pub fn evaluate(
        &self,
        quantity: Quantity,
        a: &HsOperator,
        b: Option<&HsOperator>,
        path: Path,
    ) -> Result<QuantityResult> {
        let second = || b.ok_or(Error::MissingOperator(quantity.name()));
        match quantity {
            Quantity::Covariance => self.covariance(a, second()?, path),
            Quantity::Variance => self.variance(a, path),
            Quantity::Correlation => self.correlation(a, second()?, path),
            Quantity::CPair => self.c_quantity(a, second()?, path),
            Quantity::CSelf => self.c_self(a, path),
            Quantity::I => self.mgwyd_i(a, path),
            Quantity::J => self.companion_j(a, path),
            Quantity::K => self.mwgwyd_k(a, path),
            Quantity::L => self.companion_l(a, path),
            Quantity::U => self.u_quantity(a, path),
            Quantity::W => self.w_quantity(a, path),
        }
    }

    /// Evaluates `quantity` on both paths and requires agreement within
    /// [`PATH_REL_TOL`] relative, [`PATH_ABS_TOL`] absolute.
    pub fn cross_check(
        &self,
        quantity: Quantity,
        a: &HsOperator,
        b: Option<&HsOperator>,
    ) -> Result<CrossCheck> {
        let trace = self.evaluate(quantity, a, b, Path::TraceFormula)?;
        let spectral = self.evaluate(quantity, a, b, Path::SpectralSum)?;
        let scale = match b {
            Some(b) if quantity.is_pair() => pair_scale(a, b),
            _ => norm_scale(a),
        };
        let deviation = (trace.value - spectral.value).norm();
        let allowed = (PATH_REL_TOL * trace.value.norm().max(spectral.value.norm()))
            .max(PATH_ABS_TOL * scale);
        if deviation > allowed {
            return Err(Error::NumericalInconsistency {
                what: quantity.name(),
                first: trace.value.re,
                second: spectral.value.re,
            });
        }
        Ok(CrossCheck {
            trace,
            spectral,
            deviation,
            allowed,
        })
    }

    fn check_dims(&self, a: &HsOperator) -> Result<()> {
        a.ensure_dim(self.rho)
    }

    /// Matrix elements of `x` in the eigenbasis of `rho`.
    fn rotated(&self, x: &HsOperator) -> Result<CMatrix> {
        self.rho.to_eigenbasis(x.matrix())
    }

    fn finish_nonnegative(
        &self,
        quantity: Quantity,
        value: Complex64,
        path: Path,
        scale: f64,
    ) -> Result<QuantityResult> {
        if value.re < -NEGATIVE_TOL * scale {
            return Err(Error::NegativeValue {
                quantity: quantity.name(),
                value: value.re,
            });
        }
        Ok(QuantityResult::new(quantity, value, path))
    }

    /// Covariance `Cov(A, B)`; complex in general.
    pub fn covariance(&self, a: &HsOperator, b: &HsOperator, path: Path) -> Result<QuantityResult> {
        self.check_dims(a)?;
        self.check_dims(b)?;
        let value = match path {
            Path::TraceFormula => self.covariance_trace(a, b),
            Path::SpectralSum => {
                let a0 = self.rotated(&center(self.rho, a)?)?;
                let b0 = self.rotated(&center(self.rho, b)?)?;
                self.covariance_spectral(&a0, &b0)
            }
        };
        Ok(QuantityResult::new(Quantity::Covariance, value, path))
    }

    fn covariance_trace(&self, a: &HsOperator, b: &HsOperator) -> Complex64 {
        let p = &self.powers;
        let rho = self.rho.matrix();
        let (am, bm) = (a.matrix(), b.matrix());
        let (ad, bd) = (am.adjoint(), bm.adjoint());
        let direct =
            trace_chain(&[rho, &ad, bm]) + trace_chain(&[&p.alpha_plus_beta, am, &p.gamma, &bd]);
        let means = rho.trace_of_product(bm) * rho.trace_of_product(&ad)
            + rho.trace_of_product(am) * rho.trace_of_product(&bd);
        (direct - means) * 0.5
    }

    fn covariance_spectral(&self, a: &CMatrix, b: &CMatrix) -> Complex64 {
        let w = &self.weights;
        let n = a.dim();
        let mut acc = Complex64::new(0.0, 0.0);
        for m in 0..n {
            for k in 0..n {
                acc += (a[(k, m)].conj() * b[(k, m)] * w.gamma[m]
                    + a[(m, k)] * b[(m, k)].conj() * w.gamma[k])
                    * w.alpha_plus_beta[m];
            }
        }
        acc * 0.5
    }

    /// `Var(A) = Cov(A, A)`, real and nonnegative.
    pub fn variance(&self, a: &HsOperator, path: Path) -> Result<QuantityResult> {
        let cov = self.covariance(a, a, path)?;
        self.finish_nonnegative(Quantity::Variance, cov.value, path, norm_scale(a))
    }

    /// Correlation `Corr(A, B)`; complex in general, equal to `I(A)` at `B = A`.
    pub fn correlation(
        &self,
        a: &HsOperator,
        b: &HsOperator,
        path: Path,
    ) -> Result<QuantityResult> {
        self.check_dims(a)?;
        self.check_dims(b)?;
        let value = match path {
            Path::TraceFormula => self.correlation_trace(a, b),
            Path::SpectralSum => {
                let a0 = self.rotated(&center(self.rho, a)?)?;
                let b0 = self.rotated(&center(self.rho, b)?)?;
                let expanded = self.correlation_spectral_expanded(&a0, &b0);
                let factored = self.correlation_spectral_factored(&a0, &b0);
                agree_complex(
                    "Corr spectral forms",
                    expanded,
                    factored,
                    PATH_REL_TOL,
                    PATH_ABS_TOL * pair_scale(a, b),
                )?;
                factored
            }
        };
        Ok(QuantityResult::new(Quantity::Correlation, value, path))
    }

    fn correlation_trace(&self, a: &HsOperator, b: &HsOperator) -> Complex64 {
        let p = &self.powers;
        let rho = self.rho.matrix();
        let (am, bm) = (a.matrix(), b.matrix());
        let (ad, bd) = (am.adjoint(), bm.adjoint());
        let sum = trace_chain(&[rho, &ad, bm])
            + trace_chain(&[&p.alpha_plus_beta, am, &p.gamma, &bd])
            - trace_chain(&[&p.one_minus_beta, &ad, &p.beta, bm])
            - trace_chain(&[&p.alpha, am, &p.one_minus_alpha, &bd]);
        sum * 0.5
    }

    fn correlation_spectral_expanded(&self, a: &CMatrix, b: &CMatrix) -> Complex64 {
        let w = &self.weights;
        let n = a.dim();
        let mut acc = Complex64::new(0.0, 0.0);
        for m in 0..n {
            for k in 0..n {
                let first = w.lam[m] - w.one_minus_beta[m] * w.beta[k];
                let second = w.alpha_plus_beta[m] * w.gamma[k] - w.alpha[m] * w.one_minus_alpha[k];
                acc += a[(k, m)].conj() * b[(k, m)] * first + a[(m, k)] * b[(m, k)].conj() * second;
            }
        }
        acc * 0.5
    }

    fn correlation_spectral_factored(&self, a: &CMatrix, b: &CMatrix) -> Complex64 {
        let w = &self.weights;
        let n = a.dim();
        let mut acc = Complex64::new(0.0, 0.0);
        for m in 0..n {
            for k in 0..n {
                let coeff = w.alpha[m] * (w.beta[m] - w.beta[k]);
                if coeff == 0.0 {
                    continue;
                }
                acc += (a[(k, m)].conj() * b[(k, m)] * w.gamma[m]
                    + a[(m, k)] * b[(m, k)].conj() * w.gamma[k])
                    * coeff;
            }
        }
        acc * 0.5
    }

    /// `C(A, B)` on the operators as given (no centering).
    pub fn c_quantity(&self, a: &HsOperator, b: &HsOperator, path: Path) -> Result<QuantityResult> {
        self.check_dims(a)?;
        self.check_dims(b)?;
        let value = match path {
            Path::TraceFormula => self.c_trace(a, b),
            Path::SpectralSum => {
                let ar = self.rotated(a)?;
                let br = self.rotated(b)?;
                self.c_spectral(&ar, &br)
            }
        };
        Ok(QuantityResult::new(Quantity::CPair, value, path))
    }

    fn c_trace(&self, a: &HsOperator, b: &HsOperator) -> Complex64 {
        let p = &self.powers;
        let (am, bm) = (a.matrix(), b.matrix());
        let (ad, bd) = (am.adjoint(), bm.adjoint());
        (trace_chain(&[&p.one_minus_beta, &ad, &p.beta, bm])
            + trace_chain(&[&p.alpha, am, &p.one_minus_alpha, &bd]))
            * 0.5
    }

    fn c_spectral(&self, a: &CMatrix, b: &CMatrix) -> Complex64 {
        let w = &self.weights;
        let n = a.dim();
        let mut acc = Complex64::new(0.0, 0.0);
        for m in 0..n {
            for k in 0..n {
                acc += a[(k, m)].conj() * b[(k, m)] * (w.one_minus_beta[m] * w.beta[k])
                    + a[(m, k)] * b[(m, k)].conj() * (w.alpha[m] * w.one_minus_alpha[k]);
            }
        }
        acc * 0.5
    }

    /// `C(A) = C(A, A)`, real and nonnegative.
    pub fn c_self(&self, a: &HsOperator, path: Path) -> Result<QuantityResult> {
        let c = self.c_quantity(a, a, path)?;
        self.finish_nonnegative(Quantity::CSelf, c.value, path, norm_scale(a))
    }

    /// MGWYD skew information `-1/2 Tr([rho^alpha, A^dagger][rho^beta, A] rho^(1-alpha-beta))`.
    ///
    /// The spectral path evaluates three equivalent double sums and requires
    /// them to agree.
    pub fn mgwyd_i(&self, a: &HsOperator, path: Path) -> Result<QuantityResult> {
        self.check_dims(a)?;
        let scale = norm_scale(a);
        let value = match path {
            Path::TraceFormula => {
                let p = &self.powers;
                let am = a.matrix();
                let left = commutator(&p.alpha, &am.adjoint())?;
                let right = commutator(&p.beta, am)?;
                trace_chain(&[&left, &right, &p.gamma]) * -0.5
            }
            Path::SpectralSum => {
                let a0 = self.rotated(&center(self.rho, a)?)?;
                let forms = self.i_spectral_forms(&a0);
                agree(
                    "I spectral forms 1/2",
                    forms[0],
                    forms[1],
                    PATH_REL_TOL,
                    PATH_ABS_TOL * scale,
                )?;
                agree(
                    "I spectral forms 1/3",
                    forms[0],
                    forms[2],
                    PATH_REL_TOL,
                    PATH_ABS_TOL * scale,
                )?;
                Complex64::new(forms[1], 0.0)
            }
        };
        self.finish_nonnegative(Quantity::I, value, path, scale)
    }

    fn i_spectral_forms(&self, a: &CMatrix) -> [f64; 3] {
        let w = &self.weights;
        let n = a.dim();
        let (mut first, mut second, mut third) = (0.0, 0.0, 0.0);
        for m in 0..n {
            for k in 0..n {
                let amk = a[(m, k)].norm_sqr();
                let akm = a[(k, m)].norm_sqr();
                let da = w.alpha[m] - w.alpha[k];
                let db = w.beta[m] - w.beta[k];
                first += w.alpha[m] * db * (w.gamma[m] * akm + w.gamma[k] * amk);
                second += da * db * w.gamma[k] * amk;
                if m < k {
                    third += da * db * (w.gamma[m] * akm + w.gamma[k] * amk);
                }
            }
        }
        [0.5 * first, 0.5 * second, 0.5 * third]
    }

    /// `J(A) = 1/2 Tr({rho^alpha, A_0^dagger}{rho^beta, A_0} rho^(1-alpha-beta))`.
    pub fn companion_j(&self, a: &HsOperator, path: Path) -> Result<QuantityResult> {
        self.check_dims(a)?;
        let scale = norm_scale(a);
        let a0 = center(self.rho, a)?;
        let value = match path {
            Path::TraceFormula => {
                let p = &self.powers;
                let am = a0.matrix();
                let left = anticommutator(&p.alpha, &am.adjoint())?;
                let right = anticommutator(&p.beta, am)?;
                trace_chain(&[&left, &right, &p.gamma]) * 0.5
            }
            Path::SpectralSum => {
                let ar = self.rotated(&a0)?;
                let [expanded, symmetric] = self.j_spectral_forms(&ar);
                agree(
                    "J spectral forms",
                    expanded,
                    symmetric,
                    PATH_REL_TOL,
                    PATH_ABS_TOL * scale,
                )?;
                Complex64::new(symmetric, 0.0)
            }
        };
        self.finish_nonnegative(Quantity::J, value, path, scale)
    }

    fn j_spectral_forms(&self, a: &CMatrix) -> [f64; 2] {
        let w = &self.weights;
        let n = a.dim();
        let (mut first, mut second) = (0.0, 0.0);
        for m in 0..n {
            for k in 0..n {
                let amk = a[(m, k)].norm_sqr();
                let akm = a[(k, m)].norm_sqr();
                first +=
                    w.alpha[m] * (w.beta[m] + w.beta[k]) * (w.gamma[m] * akm + w.gamma[k] * amk);
                second += (w.alpha[m] + w.alpha[k]) * (w.beta[m] + w.beta[k]) * w.gamma[k] * amk;
            }
        }
        [0.5 * first, 0.5 * second]
    }

    /// MWGWYD skew information, built from the mean `(rho^alpha + rho^beta) / 2`.
    ///
    /// The trace path also verifies the split
    /// `K = -1/8 [Tr([rho^a, A_0^dagger][rho^a, A_0] rho^g) + Tr([rho^b, A_0^dagger][rho^b, A_0] rho^g)] + I/2`.
    pub fn mwgwyd_k(&self, a: &HsOperator, path: Path) -> Result<QuantityResult> {
        self.check_dims(a)?;
        let scale = norm_scale(a);
        let a0 = center(self.rho, a)?;
        let value = match path {
            Path::TraceFormula => {
                let k = self.k_trace(&a0)?;
                let split = self.k_split(&a0)?;
                agree(
                    "K decomposition",
                    k.re,
                    split,
                    PATH_REL_TOL,
                    PATH_ABS_TOL * scale,
                )?;
                k
            }
            Path::SpectralSum => {
                let ar = self.rotated(&a0)?;
                Complex64::new(self.mean_spectral(&ar, -1.0), 0.0)
            }
        };
        self.finish_nonnegative(Quantity::K, value, path, scale)
    }

    fn k_trace(&self, a0: &HsOperator) -> Result<Complex64> {
        let p = &self.powers;
        let am = a0.matrix();
        let left = commutator(&p.mean, &am.adjoint())?;
        let right = commutator(&p.mean, am)?;
        Ok(trace_chain(&[&left, &right, &p.gamma]) * -0.5)
    }

    /// Right-hand side of the `K` split.
    fn k_split(&self, a0: &HsOperator) -> Result<f64> {
        let p = &self.powers;
        let am = a0.matrix();
        let ad = am.adjoint();
        let same = |x: &CMatrix| -> Result<Complex64> {
            let left = commutator(x, &ad)?;
            let right = commutator(x, am)?;
            Ok(trace_chain(&[&left, &right, &p.gamma]))
        };
        let i = self.mgwyd_i(a0, Path::TraceFormula)?.raw_real();
        Ok(-0.125 * (same(&p.alpha)? + same(&p.beta)?).re + 0.5 * i)
    }

    /// `1/2 sum_mn (mu_m + sign mu_n)^2 lambda_n^gamma |a_mn|^2` with `mu` the mean weights.
    fn mean_spectral(&self, a: &CMatrix, sign: f64) -> f64 {
        let w = &self.weights;
        let n = a.dim();
        let mut acc = 0.0;
        for m in 0..n {
            for k in 0..n {
                let d = w.mean[m] + sign * w.mean[k];
                acc += d * d * w.gamma[k] * a[(m, k)].norm_sqr();
            }
        }
        0.5 * acc
    }

    /// `L(A) = 1/2 Tr({M, A_0^dagger}{M, A_0} rho^(1-alpha-beta))`, `M = (rho^alpha + rho^beta) / 2`.
    pub fn companion_l(&self, a: &HsOperator, path: Path) -> Result<QuantityResult> {
        self.check_dims(a)?;
        let scale = norm_scale(a);
        let a0 = center(self.rho, a)?;
        let value = match path {
            Path::TraceFormula => {
                let p = &self.powers;
                let am = a0.matrix();
                let left = anticommutator(&p.mean, &am.adjoint())?;
                let right = anticommutator(&p.mean, am)?;
                trace_chain(&[&left, &right, &p.gamma]) * 0.5
            }
            Path::SpectralSum => {
                let ar = self.rotated(&a0)?;
                Complex64::new(self.mean_spectral(&ar, 1.0), 0.0)
            }
        };
        self.finish_nonnegative(Quantity::L, value, path, scale)
    }

    /// `U(A) = sqrt(I J)`, cross-checked against `sqrt(Var^2 - (Var - I)^2)`.
    pub fn u_quantity(&self, a: &HsOperator, path: Path) -> Result<QuantityResult> {
        let scale = norm_scale(a);
        let i = self.mgwyd_i(a, path)?.real();
        let j = self.companion_j(a, path)?.real();
        let var = self.variance(a, path)?.real();
        let product = i * j;
        let difference = var * var - (var - i) * (var - i);
        agree(
            "U expressions",
            product,
            difference,
            U_REL_TOL,
            PATH_ABS_TOL * scale * scale,
        )?;
        Ok(QuantityResult::new(
            Quantity::U,
            Complex64::new(product.max(0.0).sqrt(), 0.0),
            path,
        ))
    }

    /// `W(A) = sqrt(K L)`.
    pub fn w_quantity(&self, a: &HsOperator, path: Path) -> Result<QuantityResult> {
        let k = self.mwgwyd_k(a, path)?.real();
        let l = self.companion_l(a, path)?.real();
        Ok(QuantityResult::new(
            Quantity::W,
            Complex64::new((k * l).sqrt(), 0.0),
            path,
        ))
    }
}

macro_rules! single_operator_entry {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        pub fn $name(rho: &DensityOperator, a: &HsOperator, params: SkewParams) -> Result<QuantityResult> {
            SkewContext::new(rho, params)?.$name(a, Path::TraceFormula)
        }
    };
}

macro_rules! pair_operator_entry {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        pub fn $name(
            rho: &DensityOperator,
            a: &HsOperator,
            b: &HsOperator,
            params: SkewParams,
        ) -> Result<QuantityResult> {
            SkewContext::new(rho, params)?.$name(a, b, Path::TraceFormula)
        }
    };
}

pair_operator_entry!(covariance);
pair_operator_entry!(correlation);
pair_operator_entry!(c_quantity);
single_operator_entry!(variance);
single_operator_entry!(c_self);
single_operator_entry!(
    /// MGWYD skew information, trace-formula path.
    mgwyd_i
);
single_operator_entry!(companion_j);
single_operator_entry!(
    /// MWGWYD skew information, trace-formula path.
    mwgwyd_k
);
single_operator_entry!(companion_l);
single_operator_entry!(u_quantity);
single_operator_entry!(w_quantity);

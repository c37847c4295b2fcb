//! Validated density operators, fractional powers and operator centering.

use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::eigen::hermitian_eigen;
use crate::error::{Error, Result};
use crate::matrix::CMatrix;

/// Entrywise tolerance on `rho - rho^dagger` for accepted input.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Eigenvalues in `[-EIGEN_CLAMP_TOL, 0)` are clamped to zero; below is an error.
pub const EIGEN_CLAMP_TOL: f64 = 1e-10;
/// Allowed deviation of the input trace from one.
pub const TRACE_TOL: f64 = 1e-10;
/// Slack when checking `alpha, beta >= 0` and `alpha + beta <= 1` on decimal input.
pub const PARAM_TOL: f64 = 1e-12;

/// `lambda^t` with `0^0 = 1`, so `rho^0` is the identity on the full space.
#[inline]
pub fn eigen_power(lambda: f64, t: f64) -> f64 {
    if t == 0.0 {
        1.0
    } else if lambda <= 0.0 {
        0.0
    } else {
        lambda.powf(t)
    }
}

/// Exponent pair `(alpha, beta)` with `alpha, beta >= 0` and `alpha + beta <= 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SkewParams {
    alpha: f64,
    beta: f64,
}

impl SkewParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let ok = alpha.is_finite()
            && beta.is_finite()
            && alpha >= -PARAM_TOL
            && beta >= -PARAM_TOL
            && alpha + beta <= 1.0 + PARAM_TOL;
        if !ok {
            return Err(Error::InvalidParams { alpha, beta });
        }
        Ok(Self {
            alpha: alpha.clamp(0.0, 1.0),
            beta: beta.clamp(0.0, 1.0),
        })
    }

    #[inline]
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    #[inline]
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `1 - alpha - beta`, floored at zero.
    #[inline]
    pub fn gamma(&self) -> f64 {
        (1.0 - self.alpha - self.beta).max(0.0)
    }

    /// The pair with the two exponents exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
        }
    }
}

/// A density operator with its spectral decomposition.
///
/// The stored matrix is the symmetrized input divided by its trace; the
/// spectrum is clamped to be nonnegative and renormalized to sum to one.
#[derive(Clone, Debug)]
pub struct DensityOperator {
    matrix: CMatrix,
    eigenvalues: Vec<f64>,
    eigenvectors: CMatrix,
}

impl DensityOperator {
    #[inline]
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    #[inline]
    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    /// Eigenvalues in descending order.
    #[inline]
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary whose columns are the eigenvectors, in the order of `eigenvalues()`.
    #[inline]
    pub fn eigenvectors(&self) -> &CMatrix {
        &self.eigenvectors
    }

    /// `sum_m f(lambda_m) |psi_m><psi_m|`.
    pub fn spectral_function(&self, f: impl Fn(f64) -> f64) -> CMatrix {
        let n = self.dim();
        let weights: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let v = &self.eigenvectors;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for (m, &w) in weights.iter().enumerate() {
                    if w != 0.0 {
                        acc += v[(i, m)] * v[(j, m)].conj() * w;
                    }
                }
                out[(i, j)] = acc;
                out[(j, i)] = acc.conj();
            }
            out[(i, i)].im = 0.0;
        }
        out
    }

    /// `V^dagger X V`: matrix elements `<psi_m|X|psi_n>` in the eigenbasis.
    pub fn to_eigenbasis(&self, x: &CMatrix) -> Result<CMatrix> {
        self.matrix.ensure_same_dim(x)?;
        let v = &self.eigenvectors;
        Ok(&(&v.adjoint() * x) * v)
    }

    /// `V X V^dagger`, the inverse of [`DensityOperator::to_eigenbasis`].
    pub fn from_eigenbasis(&self, x: &CMatrix) -> Result<CMatrix> {
        self.matrix.ensure_same_dim(x)?;
        let v = &self.eigenvectors;
        Ok(&(v * x) * &v.adjoint())
    }

    /// `Tr(rho X)`.
    pub fn expectation(&self, x: &CMatrix) -> Complex64 {
        self.matrix.trace_of_product(x)
    }
}

/// Checks that `raw` is a density matrix and caches its spectral data.
pub fn validate_density(raw: &CMatrix) -> Result<DensityOperator> {
    let d = raw.dim();
    if d < 2 {
        return Err(Error::DimensionTooSmall(d));
    }
    if !raw.is_finite() {
        return Err(Error::NonFinite);
    }
    let defect = raw.hermitian_defect();
    if defect > HERMITIAN_TOL {
        return Err(Error::NotHermitian(defect));
    }
    let sym = raw.hermitian_part();
    let trace = sym.trace().re;
    if (trace - 1.0).abs() > TRACE_TOL {
        return Err(Error::BadTrace(trace));
    }

    let eig = hermitian_eigen(&sym);
    let min = eig.values.iter().copied().fold(f64::INFINITY, f64::min);
    if min < -EIGEN_CLAMP_TOL {
        return Err(Error::NotPositive(min));
    }
    let mut eigenvalues: Vec<f64> = eig.values.iter().map(|&l| l.max(0.0)).collect();
    let total: f64 = eigenvalues.iter().sum();
    for l in &mut eigenvalues {
        *l /= total;
    }

    Ok(DensityOperator {
        matrix: sym.scale_real(1.0 / trace),
        eigenvalues,
        eigenvectors: eig.vectors,
    })
}

/// `rho^t` for `t` in `[0, 1]`, with `rho^0 = I`.
pub fn matrix_power(rho: &DensityOperator, t: f64) -> Result<CMatrix> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidExponent(t));
    }
    Ok(rho.spectral_function(|l| eigen_power(l, t)))
}

/// An arbitrary square operator; no Hermiticity is assumed.
#[derive(Clone, Debug, PartialEq)]
pub struct HsOperator {
    matrix: CMatrix,
}

impl HsOperator {
    pub fn new(matrix: CMatrix) -> Result<Self> {
        if !matrix.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Self { matrix })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    #[inline]
    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.adjoint(),
        }
    }

    /// `A + c I`.
    pub fn shifted(&self, c: Complex64) -> Self {
        Self {
            matrix: self.matrix.add_identity(c),
        }
    }

    pub(crate) fn ensure_dim(&self, rho: &DensityOperator) -> Result<()> {
        if self.dim() != rho.dim() {
            return Err(Error::DimensionMismatch {
                expected: rho.dim(),
                found: self.dim(),
            });
        }
        Ok(())
    }
}

/// `A_0 = A - Tr(rho A) I`.
pub fn center(rho: &DensityOperator, a: &HsOperator) -> Result<HsOperator> {
    a.ensure_dim(rho)?;
    Ok(a.shifted(-rho.expectation(a.matrix())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sigma_x() -> HsOperator {
        HsOperator::new(
            CMatrix::from_rows(&[vec![c(0., 0.), c(1., 0.)], vec![c(1., 0.), c(0., 0.)]]).unwrap(),
        )
        .unwrap()
    }

    fn ket0() -> DensityOperator {
        validate_density(&CMatrix::from_real_diagonal(&[1.0, 0.0])).unwrap()
    }

    #[test]
    fn maximally_mixed_qubit_is_valid() {
        let rho = validate_density(&CMatrix::from_real_diagonal(&[0.5, 0.5])).unwrap();
        assert_eq!(rho.eigenvalues(), &[0.5, 0.5]);
    }

    #[test]
    fn wrong_trace_is_rejected() {
        let err = validate_density(&CMatrix::from_real_diagonal(&[0.9, 0.0])).unwrap_err();
        assert!(matches!(err, Error::BadTrace(t) if (t - 0.9).abs() < 1e-15));
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            validate_density(&CMatrix::from_real_diagonal(&[1.0])),
            Err(Error::DimensionTooSmall(1))
        ));
        assert!(matches!(
            validate_density(&CMatrix::from_real_diagonal(&[1.2, -0.2])),
            Err(Error::NotPositive(_))
        ));
        let skew =
            CMatrix::from_rows(&[vec![c(0.5, 0.), c(0.1, 0.)], vec![c(0.0, 0.), c(0.5, 0.)]])
                .unwrap();
        assert!(matches!(
            validate_density(&skew),
            Err(Error::NotHermitian(_))
        ));
        let nan = CMatrix::from_real_diagonal(&[f64::NAN, 0.5]);
        assert!(matches!(validate_density(&nan), Err(Error::NonFinite)));
    }

    #[test]
    fn tiny_negative_eigenvalue_is_clamped() {
        let rho = validate_density(&CMatrix::from_real_diagonal(&[1.0 + 5e-11, -5e-11])).unwrap();
        assert_eq!(rho.eigenvalues()[1], 0.0);
        assert!((rho.eigenvalues().iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn square_root_of_diagonal_state() {
        let rho = validate_density(&CMatrix::from_real_diagonal(&[0.25, 0.75])).unwrap();
        let half = matrix_power(&rho, 0.5).unwrap();
        let expected = CMatrix::from_real_diagonal(&[0.5, 0.75f64.sqrt()]);
        assert!(half.max_abs_diff(&expected) < 1e-15);
        assert!(matrix_power(&rho, 1.0).unwrap().max_abs_diff(rho.matrix()) < 1e-15);
    }

    #[test]
    fn zeroth_power_of_pure_state_is_identity() {
        let p0 = matrix_power(&ket0(), 0.0).unwrap();
        assert_eq!(p0.max_abs_diff(&CMatrix::identity(2)), 0.0);
        // positive powers of a projector are the projector itself
        let p = matrix_power(&ket0(), 0.25).unwrap();
        assert!(p.max_abs_diff(ket0().matrix()) < 1e-15);
    }

    #[test]
    fn exponent_outside_unit_interval_is_rejected() {
        assert!(matches!(
            matrix_power(&ket0(), 1.5),
            Err(Error::InvalidExponent(_))
        ));
        assert!(matrix_power(&ket0(), -0.1).is_err());
    }

    #[test]
    fn centering_examples() {
        let rho = ket0();
        let id = HsOperator::new(CMatrix::identity(2)).unwrap();
        assert_eq!(center(&rho, &id).unwrap().matrix().frobenius_norm(), 0.0);
        let sx = sigma_x();
        assert_eq!(center(&rho, &sx).unwrap(), sx);
        let big = HsOperator::new(CMatrix::identity(3)).unwrap();
        assert!(matches!(
            center(&rho, &big),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn params_domain() {
        assert!(SkewParams::new(0.5, 0.5).is_ok());
        assert!(SkewParams::new(0.7, 0.3).is_ok());
        assert!(SkewParams::new(0.0, 0.0).is_ok());
        assert!(SkewParams::new(0.6, 0.5).is_err());
        assert!(SkewParams::new(-0.1, 0.5).is_err());
        assert!(SkewParams::new(f64::NAN, 0.5).is_err());
        let p = SkewParams::new(0.55, 0.4).unwrap();
        assert!((p.gamma() - 0.05).abs() < 1e-15);
        assert_eq!(p.swapped().alpha(), 0.4);
    }
}

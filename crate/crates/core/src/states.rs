//! Two-qubit state families, fixed test operators and seeded random draws.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::spectral::{validate_density, DensityOperator, HsOperator, SkewParams};

fn check_unit(x: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::ParamOutOfRange(x));
    }
    Ok(())
}

/// Werner state with singlet weight set by `p`; `p = 3/4` is maximally mixed.
pub fn werner_matrix(p: f64) -> Result<CMatrix> {
    check_unit(p)?;
    let mut m = CMatrix::zeros(4);
    m[(0, 0)] = Complex64::new(p / 3.0, 0.0);
    m[(3, 3)] = Complex64::new(p / 3.0, 0.0);
    let diag = Complex64::new((3.0 - 2.0 * p) / 6.0, 0.0);
    let off = Complex64::new((4.0 * p - 3.0) / 6.0, 0.0);
    m[(1, 1)] = diag;
    m[(2, 2)] = diag;
    m[(1, 2)] = off;
    m[(2, 1)] = off;
    Ok(m)
}

pub fn werner(p: f64) -> Result<DensityOperator> {
    validate_density(&werner_matrix(p)?)
}

/// Isotropic state with fidelity `f` to the Bell state `(|00> + |11>)/sqrt 2`.
pub fn isotropic_matrix(f: f64) -> Result<CMatrix> {
    check_unit(f)?;
    let mut m = CMatrix::zeros(4);
    let corner = Complex64::new((2.0 * f + 1.0) / 6.0, 0.0);
    let anti = Complex64::new((4.0 * f - 1.0) / 6.0, 0.0);
    let mid = Complex64::new((1.0 - f) / 3.0, 0.0);
    m[(0, 0)] = corner;
    m[(3, 3)] = corner;
    m[(0, 3)] = anti;
    m[(3, 0)] = anti;
    m[(1, 1)] = mid;
    m[(2, 2)] = mid;
    Ok(m)
}

pub fn isotropic(f: f64) -> Result<DensityOperator> {
    validate_density(&isotropic_matrix(f)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Werner,
    Isotropic,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Werner => "werner",
            Family::Isotropic => "isotropic",
        }
    }

    pub fn state(&self, param: f64) -> Result<DensityOperator> {
        match self {
            Family::Werner => werner(param),
            Family::Isotropic => isotropic(param),
        }
    }

    /// Largest parameter for which the state is separable.
    pub fn separability_threshold(&self) -> f64 {
        match self {
            Family::Werner => 1.0 / 3.0,
            Family::Isotropic => 0.5,
        }
    }
}

/// A family member, validated on construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyParam {
    family: Family,
    value: f64,
}

impl FamilyParam {
    pub fn new(family: Family, value: f64) -> Result<Self> {
        check_unit(value)?;
        Ok(Self { family, value })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn is_separable(&self) -> bool {
        self.value <= self.family.separability_threshold()
    }

    pub fn state(&self) -> Result<DensityOperator> {
        self.family.state(self.value)
    }
}

/// The fixed non-Hermitian pair `(A, B)` used with the two families.
pub fn fixed_operators() -> (HsOperator, HsOperator) {
    let o = Complex64::new(0.0, 0.0);
    let l = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    let a = CMatrix::from_rows(&[
        vec![o, l, o, -i],
        vec![l, o, i, o],
        vec![l, o, l, o],
        vec![o, -l, o, l],
    ])
    .expect("literal is square");
    let b = CMatrix::from_rows(&[
        vec![l, o, l, o],
        vec![o, l, o, -l],
        vec![o, l, o, -i],
        vec![l, o, i, o],
    ])
    .expect("literal is square");
    (
        HsOperator::new(a).expect("finite literal"),
        HsOperator::new(b).expect("finite literal"),
    )
}

/// Independent stream `index` of the generator seeded by `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Vec<Complex64> {
    (0..rows * cols).map(|_| gaussian_complex(rng)).collect()
}

/// `G G^dagger / Tr(G G^dagger)` for a `dim x rank` complex Gaussian `G`.
pub fn random_density_with<R: Rng + ?Sized>(
    dim: usize,
    rank: usize,
    rng: &mut R,
) -> Result<DensityOperator> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall(dim));
    }
    if rank == 0 || rank > dim {
        return Err(Error::BadRank { rank, dim });
    }
    let g = gaussian_matrix(dim, rank, rng);
    let mut m = CMatrix::zeros(dim);
    for r in 0..dim {
        for c in r..dim {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..rank {
                acc += g[r * rank + k] * g[c * rank + k].conj();
            }
            m[(r, c)] = acc;
            m[(c, r)] = acc.conj();
        }
        m[(r, r)].im = 0.0;
    }
    let tr = m.trace().re;
    validate_density(&m.scale_real(1.0 / tr))
}

pub fn random_density(dim: usize, rank: usize, seed: u64) -> Result<DensityOperator> {
    random_density_with(dim, rank, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Complex Gaussian matrix scaled to unit Frobenius norm.
pub fn random_operator_with<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<HsOperator> {
    if dim < 2 {
        return Err(Error::DimensionTooSmall(dim));
    }
    let m = CMatrix::from_row_major(dim, gaussian_matrix(dim, dim, rng))?;
    let norm = m.frobenius_norm();
    HsOperator::new(m.scale_real(1.0 / norm))
}

pub fn random_operator(dim: usize, seed: u64) -> Result<HsOperator> {
    random_operator_with(dim, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Uniform on `alpha, beta >= 0, alpha + beta <= 1`.
pub fn random_params<R: Rng + ?Sized>(rng: &mut R) -> SkewParams {
    let (mut a, mut b): (f64, f64) = (rng.random(), rng.random());
    if a + b > 1.0 {
        a = 1.0 - a;
        b = 1.0 - b;
    }
    SkewParams::new(a, b).expect("point of the simplex")
}

/// Uniform on `0 <= beta <= min(alpha, 1 - alpha)`.
pub fn random_theorem1_params<R: Rng + ?Sized>(rng: &mut R) -> SkewParams {
    loop {
        let a: f64 = rng.random();
        let b: f64 = rng.random::<f64>() * 0.5;
        if b <= a.min(1.0 - a) {
            return SkewParams::new(a, b).expect("inside the simplex");
        }
    }
}

/// Uniform on `0 <= beta <= min(4 alpha, 1 - alpha)`.
pub fn random_theorem2_params<R: Rng + ?Sized>(rng: &mut R) -> SkewParams {
    loop {
        let a: f64 = rng.random();
        let b: f64 = rng.random::<f64>() * 0.8;
        if b <= (4.0 * a).min(1.0 - a) {
            return SkewParams::new(a, b).expect("inside the simplex");
        }
    }
}

/// A pair `(x, y)` drawn uniformly from the unit square.
pub fn random_scalars<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    (rng.random(), rng.random())
}

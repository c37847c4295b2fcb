#![allow(dead_code)]

//! Reference implementations written straight from the commutator
//! definitions. States are assembled from a chosen spectrum and a random
//! unitary, so fractional powers here never touch the library eigensolver.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use skewlab_core::{validate_density, CMatrix, Complex64, DensityOperator, HsOperator};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn sigma_x() -> CMatrix {
    CMatrix::from_rows(&[
        vec![c(0.0, 0.0), c(1.0, 0.0)],
        vec![c(1.0, 0.0), c(0.0, 0.0)],
    ])
    .unwrap()
}

pub fn op(m: CMatrix) -> HsOperator {
    HsOperator::new(m).unwrap()
}

pub fn comm(x: &CMatrix, y: &CMatrix) -> CMatrix {
    &(x * y) - &(y * x)
}

pub fn acomm(x: &CMatrix, y: &CMatrix) -> CMatrix {
    &(x * y) + &(y * x)
}

fn tr(x: &CMatrix) -> Complex64 {
    x.trace()
}

/// A density matrix with known spectrum `lam` and eigenvectors `u`.
pub struct KnownState {
    pub lam: Vec<f64>,
    pub u: CMatrix,
    pub rho: CMatrix,
}

fn gaussian(rng: &mut ChaCha8Rng) -> Complex64 {
    c(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Gram-Schmidt on a complex Gaussian matrix.
fn random_unitary(d: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::new();
    while cols.len() < d {
        let mut v: Vec<Complex64> = (0..d).map(|_| gaussian(rng)).collect();
        for q in &cols {
            let proj: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, y) in v.iter_mut().zip(q) {
                *x -= proj * y;
            }
        }
        let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if n > 1e-6 {
            cols.push(v.into_iter().map(|z| z / n).collect());
        }
    }
    let mut u = CMatrix::zeros(d);
    for (j, col) in cols.iter().enumerate() {
        for (i, z) in col.iter().enumerate() {
            u[(i, j)] = *z;
        }
    }
    u
}

impl KnownState {
    pub fn new(lam: Vec<f64>, u: CMatrix) -> Self {
        let rho = &(&u * &CMatrix::from_real_diagonal(&lam)) * &u.adjoint();
        Self { lam, u, rho }
    }

    /// Full-rank state with every eigenvalue at least `floor / d`.
    pub fn random(d: usize, seed: u64, floor: f64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let raw: Vec<f64> = (0..d).map(|_| rng.random::<f64>() + floor).collect();
        let s: f64 = raw.iter().sum();
        let lam = raw.iter().map(|x| x / s).collect();
        Self::new(lam, random_unitary(d, &mut rng))
    }

    pub fn density(&self) -> DensityOperator {
        validate_density(&self.rho.hermitian_part()).unwrap()
    }

    pub fn power(&self, t: f64) -> CMatrix {
        let w: Vec<f64> = self
            .lam
            .iter()
            .map(|&l| {
                if t == 0.0 {
                    1.0
                } else if l <= 0.0 {
                    0.0
                } else {
                    l.powf(t)
                }
            })
            .collect();
        &(&self.u * &CMatrix::from_real_diagonal(&w)) * &self.u.adjoint()
    }

    pub fn mean(&self, x: &CMatrix) -> Complex64 {
        tr(&(&self.rho * x))
    }

    pub fn centered(&self, a: &CMatrix) -> CMatrix {
        a.add_identity(-self.mean(a))
    }

    /// `-1/2 Tr([rho^a, A^dag][rho^b, A] rho^(1-a-b))`
    pub fn i_def(&self, a: &CMatrix, al: f64, be: f64) -> f64 {
        let g = self.power((1.0 - al - be).max(0.0));
        let x = comm(&self.power(al), &a.adjoint());
        let y = comm(&self.power(be), a);
        -0.5 * tr(&(&(&x * &y) * &g)).re
    }

    /// `1/2 Tr({rho^a, A0^dag}{rho^b, A0} rho^(1-a-b))`
    pub fn j_def(&self, a: &CMatrix, al: f64, be: f64) -> f64 {
        let a0 = self.centered(a);
        let g = self.power((1.0 - al - be).max(0.0));
        let x = acomm(&self.power(al), &a0.adjoint());
        let y = acomm(&self.power(be), &a0);
        0.5 * tr(&(&(&x * &y) * &g)).re
    }

    fn mean_power(&self, al: f64, be: f64) -> CMatrix {
        (&self.power(al) + &self.power(be)).scale_real(0.5)
    }

    pub fn k_def(&self, a: &CMatrix, al: f64, be: f64) -> f64 {
        let a0 = self.centered(a);
        let m = self.mean_power(al, be);
        let g = self.power((1.0 - al - be).max(0.0));
        -0.5 * tr(&(&(&comm(&m, &a0.adjoint()) * &comm(&m, &a0)) * &g)).re
    }

    pub fn l_def(&self, a: &CMatrix, al: f64, be: f64) -> f64 {
        let a0 = self.centered(a);
        let m = self.mean_power(al, be);
        let g = self.power((1.0 - al - be).max(0.0));
        0.5 * tr(&(&(&acomm(&m, &a0.adjoint()) * &acomm(&m, &a0)) * &g)).re
    }

    pub fn cov_def(&self, a: &CMatrix, b: &CMatrix, al: f64, be: f64) -> Complex64 {
        let r = &self.rho;
        let t1 = tr(&(&(r * &a.adjoint()) * b));
        let t2 = tr(
            &(&(&(&self.power(al + be) * a) * &self.power((1.0 - al - be).max(0.0)))
                * &b.adjoint()),
        );
        let t3 = self.mean(b) * self.mean(&a.adjoint());
        let t4 = self.mean(a) * self.mean(&b.adjoint());
        (t1 + t2 - t3 - t4) * 0.5
    }

    pub fn c_def(&self, a: &CMatrix, b: &CMatrix, al: f64, be: f64) -> Complex64 {
        let t1 = tr(&(&(&(&self.power(1.0 - be) * &a.adjoint()) * &self.power(be)) * b));
        let t2 = tr(&(&(&(&self.power(al) * a) * &self.power(1.0 - al)) * &b.adjoint()));
        (t1 + t2) * 0.5
    }

    pub fn corr_def(&self, a: &CMatrix, b: &CMatrix, al: f64, be: f64) -> Complex64 {
        let r = &self.rho;
        let t1 = tr(&(&(r * &a.adjoint()) * b));
        let t2 = tr(
            &(&(&(&self.power(al + be) * a) * &self.power((1.0 - al - be).max(0.0)))
                * &b.adjoint()),
        );
        (t1 + t2) * 0.5 - self.c_def(a, b, al, be)
    }

    pub fn u_def(&self, a: &CMatrix, al: f64, be: f64) -> f64 {
        let var = self.cov_def(a, a, al, be).re;
        let i = self.i_def(a, al, be);
        (var * var - (var - i) * (var - i)).max(0.0).sqrt()
    }

    pub fn w_def(&self, a: &CMatrix, al: f64, be: f64) -> f64 {
        (self.k_def(a, al, be) * self.l_def(a, al, be))
            .max(0.0)
            .sqrt()
    }

    /// `-1/2 Tr([rho^(1/2), A]^2)` for Hermitian `A`.
    pub fn wigner_yanase(&self, a: &CMatrix) -> f64 {
        let x = comm(&self.power(0.5), a);
        -0.5 * tr(&(&x * &x)).re
    }

    /// `-1/2 Tr([rho^a, A][rho^(1-a), A])` for Hermitian `A`.
    pub fn wyd(&self, a: &CMatrix, al: f64) -> f64 {
        let x = comm(&self.power(al), a);
        let y = comm(&self.power(1.0 - al), a);
        -0.5 * tr(&(&x * &y)).re
    }

    /// `-1/2 Tr([M, A0^dag][M, A0])` with `M = (rho^a + rho^(1-a)) / 2`.
    pub fn weighted_wyd(&self, a: &CMatrix, al: f64) -> f64 {
        let a0 = self.centered(a);
        let m = self.mean_power(al, 1.0 - al);
        -0.5 * tr(&(&comm(&m, &a0.adjoint()) * &comm(&m, &a0))).re
    }
}

/// Complex Gaussian operator with unit Frobenius norm.
pub fn random_matrix(d: usize, seed: u64) -> CMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let data = (0..d * d).map(|_| gaussian(&mut rng)).collect();
    let m = CMatrix::from_row_major(d, data).unwrap();
    m.scale_real(1.0 / m.frobenius_norm())
}

pub fn random_hermitian(d: usize, seed: u64) -> CMatrix {
    random_matrix(d, seed).hermitian_part()
}

pub fn close(x: f64, y: f64, rel: f64, abs: f64) -> bool {
    (x - y).abs() <= (rel * x.abs().max(y.abs())).max(abs)
}

pub fn close_c(x: Complex64, y: Complex64, rel: f64, abs: f64) -> bool {
    (x - y).norm() <= (rel * x.norm().max(y.norm())).max(abs)
}

//! Cyclic Jacobi eigensolver for dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies the real symmetric Jacobi rotation that zeroes it.
//! Convergence is quadratic, and accuracy is near machine precision for the
//! small dimensions used here (d <= 64).

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_complex::Complex64;
#[allow(unused_imports)]
use num_traits::Float;

use crate::matrix::CMatrix;

const MAX_SWEEPS: usize = 100;

/// Eigenpairs of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    /// Eigenvalues in descending order.
    pub values: Vec<f64>,
    /// Unitary matrix whose column `m` is the eigenvector for `values[m]`.
    pub vectors: CMatrix,
}

/// Diagonalizes `m`, which must be Hermitian (only the upper triangle and the
/// real part of the diagonal are trusted).
///
/// Eigenvalues come back in descending order. Each eigenvector's first
/// non-negligible component is rotated to be real and nonnegative, so the
/// output is a deterministic function of the input.
pub fn hermitian_eigen(m: &CMatrix) -> HermitianEigen {
    let n = m.dim();
    let mut a = m.hermitian_part();
    let mut v = CMatrix::identity(n);
    let scale = a.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(&a);
        if off == 0.0 || off <= f64::EPSILON * 1e-3 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(j, j)]
            .re
            .partial_cmp(&a[(i, i)].re)
            .unwrap_or(Ordering::Equal)
    });

    let values: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vectors = CMatrix::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        let pivot = (0..n)
            .map(|r| v[(r, src)])
            .find(|z| z.norm() > 1e-12)
            .unwrap_or(Complex64::new(1.0, 0.0));
        let phase = pivot.conj() / pivot.norm();
        for r in 0..n {
            vectors[(r, col)] = v[(r, src)] * phase;
        }
    }

    HermitianEigen { values, vectors }
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let n = a.dim();
    // e^{-i phi} where a_pq = r e^{i phi}
    let unphase = apq.conj() / r;
    let theta = (a[(q, q)].re - a[(p, p)].re) / (2.0 * r);
    let t = if theta >= 0.0 {
        1.0 / (theta + (theta * theta + 1.0).sqrt())
    } else {
        -1.0 / (-theta + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] acting on (p, q).
    let jqp = unphase * (-s);
    let jqq = unphase * c;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c + akq * jqp;
        a[(k, q)] = akp * s + akq * jqq;

        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c + vkq * jqp;
        v[(k, q)] = vkp * s + vkq * jqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c + aqk * jqp.conj();
        a[(q, k)] = apk * s + aqk * jqq.conj();
    }

    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn reconstruct(e: &HermitianEigen) -> CMatrix {
        let d = CMatrix::from_real_diagonal(&e.values);
        &(&e.vectors * &d) * &e.vectors.adjoint()
    }

    fn sample_hermitian() -> CMatrix {
        let c = Complex64::new;
        CMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, -1.0), c(0.0, 0.5)],
            vec![c(1.0, 1.0), c(-1.0, 0.0), c(0.3, 0.0)],
            vec![c(0.0, -0.5), c(0.3, 0.0), c(0.5, 0.0)],
        ])
        .unwrap()
    }

    #[test]
    fn reconstructs_input_and_is_unitary() {
        let m = sample_hermitian();
        let e = hermitian_eigen(&m);
        assert!(reconstruct(&e).max_abs_diff(&m) < 1e-13);
        let gram = &e.vectors.adjoint() * &e.vectors;
        assert!(gram.max_abs_diff(&CMatrix::identity(3)) < 1e-13);
        assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn trace_is_preserved() {
        let m = sample_hermitian();
        let e = hermitian_eigen(&m);
        let sum: f64 = e.values.iter().sum();
        assert!((sum - 1.5).abs() < 1e-13);
    }

    #[test]
    fn phase_convention_is_real_nonnegative() {
        let e = hermitian_eigen(&sample_hermitian());
        for col in 0..3 {
            let first = (0..3)
                .map(|r| e.vectors[(r, col)])
                .find(|z| z.norm() > 1e-12)
                .unwrap();
            assert!(first.im.abs() < 1e-15 && first.re > 0.0);
        }
    }

    #[test]
    fn two_by_two_block() {
        // [[a, b], [b, a]] has eigenvalues a + b, a - b.
        let c = Complex64::new;
        let m = CMatrix::from_rows(&[
            vec![c(0.3, 0.0), c(0.2, 0.0)],
            vec![c(0.2, 0.0), c(0.3, 0.0)],
        ])
        .unwrap();
        let e = hermitian_eigen(&m);
        assert!((e.values[0] - 0.5).abs() < 1e-15);
        assert!((e.values[1] - 0.1).abs() < 1e-15);
    }

    #[test]
    fn diagonal_input_is_untouched() {
        let m = CMatrix::from_real_diagonal(&[0.1, 0.7, 0.2]);
        let e = hermitian_eigen(&m);
        assert_eq!(e.values, vec![0.7, 0.2, 0.1]);
    }
}

//! Named matrices shared by the group definitions, irreps and gate library.

use crate::linalg::Matrix;
use crate::scalar::{c, re, root_of_unity, Cx, Real};

pub fn w3<T: Real>(k: i64) -> Cx<T> {
    root_of_unity(3, k)
}

/// (1 + i) / 2
pub fn eta<T: Real>() -> Cx<T> {
    c(0.5, 0.5)
}

pub fn pauli_x<T: Real>() -> Matrix<T> {
    Matrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]])
}

pub fn hadamard<T: Real>() -> Matrix<T> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Matrix::from_real(&[&[s, s], &[s, -s]])
}

pub fn su2_j<T: Real>() -> Matrix<T> {
    Matrix::from_real(&[&[0.0, 1.0], &[-1.0, 0.0]])
}

pub fn su2_k<T: Real>() -> Matrix<T> {
    Matrix::diag(&[c(0.0, 1.0), c(0.0, -1.0)])
}

pub fn su2_u<T: Real>() -> Matrix<T> {
    let e = eta::<T>();
    Matrix::from_rows(vec![vec![-e, -e], vec![e.conj(), -e.conj()]])
}

pub fn su2_t<T: Real>() -> Matrix<T> {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    Matrix::from_rows(vec![vec![c(s, 0.0), c(0.0, -s)], vec![c(0.0, -s), c(s, 0.0)]])
}

/// Cyclic shift with chi|0> = |2>, chi|1> = |0>, chi|2> = |1>.
pub fn chi<T: Real>() -> Matrix<T> {
    Matrix::from_real(&[&[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0], &[1.0, 0.0, 0.0]])
}

/// Four-level analogue of `chi`: row 0 is e_1, row 3 is e_0.
pub fn chi4<T: Real>() -> Matrix<T> {
    Matrix::from_fn(4, 4, |i, j| if j == (i + 1) % 4 { re(1.0) } else { re(0.0) })
}

/// Qutrit Fourier matrix, entries w^(jk) / sqrt 3.
pub fn h3<T: Real>() -> Matrix<T> {
    dft(3)
}

pub fn dft<T: Real>(m: usize) -> Matrix<T> {
    let s = T::of(1.0 / (m as f64).sqrt());
    Matrix::from_fn(m, m, |j, k| root_of_unity::<T>(m, (j * k) as i64) * s)
}

/// Diag(1, w9, w9^8)
pub fn t3<T: Real>() -> Matrix<T> {
    Matrix::diag(&[re(1.0), root_of_unity(9, 1), root_of_unity(9, 8)])
}

/// Diag(1, w, w^2) = T3^3
pub fn s3<T: Real>() -> Matrix<T> {
    Matrix::diag(&[re(1.0), w3(1), w3(2)])
}

/// Swap of levels a and b of a qutrit.
pub fn x_levels<T: Real>(a: usize, b: usize) -> Matrix<T> {
    let mut p = [0usize, 1, 2];
    p.swap(a, b);
    Matrix::permutation(&p)
}

/// Qutrit reflection with -1 on level a.
pub fn z_level<T: Real>(a: usize) -> Matrix<T> {
    let mut d = [re(1.0), re(1.0), re(1.0)];
    d[a] = re(-1.0);
    Matrix::diag(&d)
}

pub fn x12<T: Real>() -> Matrix<T> {
    x_levels(1, 2)
}

pub fn dg<T: Real>(d: &[Cx<T>]) -> Matrix<T> {
    Matrix::diag(d)
}

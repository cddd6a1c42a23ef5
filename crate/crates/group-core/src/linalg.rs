//! Small dense complex matrices.

use crate::scalar::{Cx, Real};
use num_complex::Complex;
use num_traits::{One, Zero};
use std::ops::{Index, IndexMut, Mul};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Cx<T>>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Complex::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cx<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Cx<T>>>) -> Self {
        let r = rows.len();
        let cdim = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == cdim), "ragged rows");
        Matrix { rows: r, cols: cdim, data: rows.into_iter().flatten().collect() }
    }

    /// Build from real entries.
    pub fn from_real(rows: &[&[f64]]) -> Self {
        Self::from_fn(rows.len(), rows[0].len(), |i, j| Complex::new(T::of(rows[i][j]), T::zero()))
    }

    pub fn diag(d: &[Cx<T>]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = *x;
        }
        m
    }

    pub fn scalar(x: Cx<T>) -> Self {
        Self::diag(&[x])
    }

    /// Permutation matrix sending basis vector `j` to `p[j]`.
    pub fn permutation(p: &[usize]) -> Self {
        let mut m = Self::zeros(p.len(), p.len());
        for (j, &i) in p.iter().enumerate() {
            m[(i, j)] = Complex::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Cx<T>] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Cx<T>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Cx<T>> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[Cx<T>]) {
        for (i, x) in v.iter().enumerate() {
            self[(i, j)] = *x;
        }
    }

    pub fn diagonal(&self) -> Vec<Cx<T>> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        self.map(|x| x.conj())
    }

    pub fn map(&self, f: impl Fn(Cx<T>) -> Cx<T>) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| f(x)).collect() }
    }

    pub fn scale(&self, s: Cx<T>) -> Self {
        self.map(|x| x * s)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| *a + *b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(Complex::new(-T::one(), T::zero())))
    }

    pub fn matmul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let orow = o.row(k);
                let dst = &mut out.data[i * o.cols..(i + 1) * o.cols];
                for (d, b) in dst.iter_mut().zip(orow) {
                    *d += a * *b;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Cx<T>]) -> Vec<Cx<T>> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Complex::zero(), |s, (a, b)| s + *a * *b))
            .collect()
    }

    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            self[(i / o.rows, j / o.cols)] * o[(i % o.rows, j % o.cols)]
        })
    }

    pub fn direct_sum(blocks: &[Self]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let cdim: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(r, cdim);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(r0 + i, c0 + j)] = b[(i, j)];
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut r = Self::identity(self.rows);
        for _ in 0..n {
            r = r.matmul(self);
        }
        r
    }

    pub fn trace(&self) -> Cx<T> {
        self.diagonal().into_iter().fold(Complex::zero(), |s, x| s + x)
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, x| m.max(x.norm()))
    }

    pub fn max_diff(&self, o: &Self) -> T {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        self.data.iter().zip(&o.data).fold(T::zero(), |m, (a, b)| m.max((*a - *b).norm()))
    }

    pub fn approx_eq(&self, o: &Self, tol: T) -> bool {
        self.rows == o.rows && self.cols == o.cols && self.max_diff(o) <= tol
    }

    /// max |U U^dagger - I|
    pub fn unitarity_residual(&self) -> T {
        self.matmul(&self.adjoint()).max_diff(&Self::identity(self.rows))
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.is_square() && self.unitarity_residual() <= tol
    }

    pub fn is_diagonal(&self, tol: T) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].norm() <= tol))
    }

    pub fn is_identity(&self, tol: T) -> bool {
        self.is_square() && self.max_diff(&Self::identity(self.rows)) <= tol
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])])
    }

    pub fn set_block(&mut self, rows: &[usize], cols: &[usize], b: &Self) {
        for (i, &r) in rows.iter().enumerate() {
            for (j, &cc) in cols.iter().enumerate() {
                self[(r, cc)] = b[(i, j)];
            }
        }
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).max_by(|&x, &y| {
                a[(x, col)].norm().partial_cmp(&a[(y, col)].norm()).unwrap()
            })?;
            if a[(piv, col)].norm() <= T::epsilon() {
                return None;
            }
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                    inv.data.swap(piv * n + j, col * n + j);
                }
            }
            let p = a[(col, col)].inv();
            for j in 0..n {
                a[(col, j)] *= p;
                inv[(col, j)] *= p;
            }
            for i in 0..n {
                if i == col {
                    continue;
                }
                let f = a[(i, col)];
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let (x, y) = (a[(col, j)], inv[(col, j)]);
                    a[(i, j)] -= f * x;
                    inv[(i, j)] -= f * y;
                }
            }
        }
        Some(inv)
    }

    pub fn cast<U: Real>(&self) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| Complex::new(U::of(x.re.to_f64().unwrap()), U::of(x.im.to_f64().unwrap())))
                .collect(),
        }
    }

    /// Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.
    /// Returns ascending eigenvalues and the unitary whose columns are eigenvectors.
    pub fn hermitian_eigen(&self) -> (Vec<T>, Self) {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut v = Self::identity(n);
        let tiny = T::epsilon() * T::of(1e-2);
        for _sweep in 0..100 {
            let mut off = T::zero();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        off += a[(i, j)].norm_sqr();
                    }
                }
            }
            if off.sqrt() <= tiny * (T::one() + a.max_abs()) {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[(p, q)];
                    if apq.norm() <= tiny {
                        continue;
                    }
                    // Unitary rotation zeroing a[p][q].
                    let app = a[(p, p)].re;
                    let aqq = a[(q, q)].re;
                    let r = apq.norm();
                    let ph = apq / Complex::new(r, T::zero());
                    let theta = T::of(0.5) * (T::of(2.0) * r).atan2(aqq - app);
                    let (s, cth) = theta.sin_cos();
                    // columns p,q of rotation: [c, -s*ph^*; s*ph, c] variants
                    let cp = Complex::new(cth, T::zero());
                    let sp = ph * Complex::new(s, T::zero());
                    for k in 0..n {
                        let akp = a[(k, p)];
                        let akq = a[(k, q)];
                        a[(k, p)] = akp * cp - akq * sp.conj();
                        a[(k, q)] = akp * sp + akq * cp;
                    }
                    for k in 0..n {
                        let apk = a[(p, k)];
                        let aqk = a[(q, k)];
                        a[(p, k)] = cp * apk - sp * aqk;
                        a[(q, k)] = sp.conj() * apk + cp * aqk;
                    }
                    for k in 0..n {
                        let vkp = v[(k, p)];
                        let vkq = v[(k, q)];
                        v[(k, p)] = vkp * cp - vkq * sp.conj();
                        v[(k, q)] = vkp * sp + vkq * cp;
                    }
                }
            }
        }
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&x, &y| a[(x, x)].re.partial_cmp(&a[(y, y)].re).unwrap());
        let vals = idx.iter().map(|&i| a[(i, i)].re).collect();
        let all: Vec<usize> = (0..n).collect();
        (vals, v.select(&all, &idx))
    }

    /// Singular values, descending.
    pub fn singular_values(&self) -> Vec<T> {
        let (ev, _) = self.adjoint().matmul(self).hermitian_eigen();
        let mut s: Vec<T> = ev.into_iter().map(|x| x.max(T::zero()).sqrt()).collect();
        s.reverse();
        s
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = Cx<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Cx<T> {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cx<T> {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Real> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, o: &Matrix<T>) -> Matrix<T> {
        self.matmul(o)
    }
}

impl<T: Real> Mul for Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, o: Matrix<T>) -> Matrix<T> {
        self.matmul(&o)
    }
}

use num_complex::Complex;
use num_traits::{Float, FloatConst, NumAssign};
use std::fmt::{Debug, Display};

/// Real scalar the numeric core is generic over. Implemented for `f32` and `f64`.
pub trait Real:
    Float + FloatConst + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    fn of(x: f64) -> Self;

    /// Loosest tolerance for matching group matrices at this precision.
    fn match_tol() -> Self {
        Self::of(1e-6).max(Self::epsilon().sqrt())
    }
}

impl Real for f32 {
    fn of(x: f64) -> Self {
        x as f32
    }
}

impl Real for f64 {
    fn of(x: f64) -> Self {
        x
    }
}

pub type Cx<T> = Complex<T>;

pub fn c<T: Real>(re: f64, im: f64) -> Cx<T> {
    Complex::new(T::of(re), T::of(im))
}

pub fn re<T: Real>(x: f64) -> Cx<T> {
    Complex::new(T::of(x), T::zero())
}

/// exp(2 pi i k / n)
pub fn root_of_unity<T: Real>(n: usize, k: i64) -> Cx<T> {
    let m = k.rem_euclid(n as i64) as f64;
    let th = 2.0 * std::f64::consts::PI * m / n as f64;
    c(th.cos(), th.sin())
}

pub fn cis<T: Real>(theta: f64) -> Cx<T> {
    c(theta.cos(), theta.sin())
}

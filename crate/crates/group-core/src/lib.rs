//! Finite subgroups of SU(2) and SU(3) used by the Fourier transform chains,
//! with a small dense complex linear-algebra layer generic over `f32`/`f64`.

pub mod consts;
pub mod group;
pub mod linalg;
pub mod scalar;

pub use group::{Group, GroupElement, GroupError, GroupId, Slot};
pub use linalg::Matrix;
pub use scalar::{Cx, Real};

pub type C64 = num_complex::Complex<f64>;
pub type Mat = Matrix<f64>;
pub type Group64 = Group<f64>;
pub type Mat32 = Matrix<f32>;
pub type Group32 = Group<f32>;

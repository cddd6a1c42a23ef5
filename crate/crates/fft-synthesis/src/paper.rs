//! Twiddle and kickback operators written out by hand for the steps into BT,
//! D27 and D54, in the register-state basis of the subgroup.

use group_core::consts::{su2_u, w3};
use group_core::scalar::re;
use group_core::{Mat, Matrix, C64};

pub(crate) struct Printed {
    pub twiddle: Vec<Mat>,
    pub kickback: Vec<Vec<C64>>,
}

fn powers(t: &Mat, phi: &[C64], m: usize) -> Printed {
    Printed {
        twiddle: (0..m).map(|x| t.pow(x)).collect(),
        kickback: (0..m).map(|x| phi.iter().map(|p| p.powi(x as i32)).collect()).collect(),
    }
}

/// Z3xZ3 register (q, p): chi^-(p x) on q, phase w^-(p q x).
pub(crate) fn d27() -> Printed {
    let st = |q: usize, p: usize| 3 * q + p;
    let mut twiddle = Vec::new();
    let mut kickback = Vec::new();
    for x in 0..3 {
        let mut t = Matrix::zeros(9, 9);
        let mut phi = vec![re(1.0); 9];
        for q in 0..3 {
            for p in 0..3 {
                t[(st((q + p * x) % 3, p), st(q, p))] = re(1.0);
                phi[st(q, p)] = w3(-((p * q * x) as i64));
            }
        }
        twiddle.push(t);
        kickback.push(phi);
    }
    Printed { twiddle, kickback }
}

/// D27 register (r, q, p): X12 on q, and X12 on r when p = 0.
pub(crate) fn d54() -> Printed {
    let st = |r: usize, q: usize, p: usize| 9 * r + 3 * q + p;
    let x12 = |v: usize| [0, 2, 1][v];
    let mut t = Matrix::zeros(27, 27);
    let mut phi = vec![re(1.0); 27];
    for r in 0..3 {
        for q in 0..3 {
            for p in 0..3 {
                let r2 = if p == 0 { x12(r) } else { r };
                t[(st(r2, x12(q), p), st(r, q, p))] = re(1.0);
                let k = 9 * p + 3 * r + q;
                let neg = k == 2 || (6..9).contains(&k) || k >= 18;
                phi[st(r, q, p)] = re(if neg { -1.0 } else { 1.0 });
            }
        }
    }
    powers(&t, &phi, 2)
}

/// Where the three one-dimensional conjugate irreps of Q8 sit in the Q8
/// register, and which way their phases turn.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BtPlacement {
    /// States s0 -> s1 -> s2 -> s0 under the twiddle; phases 1, w, w^2.
    pub cycle: [usize; 3],
    pub conjugate_phases: bool,
}

pub const BT_PLACEMENT: BtPlacement = BtPlacement { cycle: [2, 6, 4], conjugate_phases: true };

/// Q8 register (c, b, a): the cycle on the a = 0 sector and u on b when a = 1.
pub(crate) fn bt(p: BtPlacement) -> Printed {
    let u = su2_u::<f64>();
    let mut t = Matrix::zeros(8, 8);
    t[(0, 0)] = re(1.0);
    for k in 0..3 {
        t[(p.cycle[(k + 1) % 3], p.cycle[k])] = re(1.0);
    }
    for c in 0..2 {
        for b in 0..2 {
            for b2 in 0..2 {
                t[(4 * c + 2 * b2 + 1, 4 * c + 2 * b + 1)] = u[(b2, b)];
            }
        }
    }
    let mut phi = vec![re(1.0); 8];
    for (k, &s) in p.cycle.iter().enumerate() {
        phi[s] = w3(if p.conjugate_phases { -(k as i64) } else { k as i64 });
    }
    powers(&t, &phi, 3)
}

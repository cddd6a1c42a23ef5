//! Irrep generator images for every group.

use group_core::consts::*;
use group_core::scalar::{c, re, Cx};
use group_core::{GroupId, Matrix, Real};

type M<T> = Matrix<T>;

fn s<T: Real>(x: Cx<T>) -> M<T> {
    Matrix::scalar(x)
}

fn one<T: Real>() -> M<T> {
    s(re(1.0))
}

fn neg<T: Real>(m: M<T>) -> M<T> {
    m.scale(re(-1.0))
}

fn eye<T: Real>(n: usize) -> M<T> {
    Matrix::identity(n)
}

fn d2<T: Real>(a: Cx<T>, b: Cx<T>) -> M<T> {
    dg(&[a, b])
}

/// (label, images of the normal-form generators in slot order)
pub fn generator_images<T: Real>(g: GroupId) -> Vec<(String, Vec<M<T>>)> {
    let w = w3::<T>;
    let lab = |p: &str, k: usize| format!("{p}{k}");
    match g {
        GroupId::Z2 => vec![(lab("zeta", 1), vec![one()]), (lab("zeta", 2), vec![s(re(-1.0))])],
        GroupId::Z4 => [(1.0, c(1.0, 0.0)), (1.0, c(-1.0, 0.0)), (-1.0, c(0.0, 1.0)), (-1.0, c(0.0, -1.0))]
            .into_iter()
            .enumerate()
            .map(|(i, (m1, k))| (lab("zeta", i + 1), vec![s(re(m1)), s(k)]))
            .collect(),
        GroupId::Q8 => {
            let mut v: Vec<(String, Vec<M<T>>)> = [(1.0, 1.0), (-1.0, 1.0), (1.0, -1.0), (-1.0, -1.0)]
                .into_iter()
                .enumerate()
                .map(|(i, (jj, kk))| (lab("xi", i + 1), vec![one(), s(re(jj)), s(re(kk))]))
                .collect();
            v.push((lab("xi", 5), vec![neg(eye(2)), su2_j(), su2_k()]));
            v
        }
        GroupId::BT => {
            let mut v: Vec<(String, Vec<M<T>>)> = (0..3)
                .map(|k| (lab("rho", k + 1), vec![one(), one(), one(), s(w(k as i64))]))
                .collect();
            for k in 0..3 {
                v.push((lab("rho", k + 4), vec![neg(eye(2)), su2_j(), su2_k(), su2_u::<T>().scale(w(k as i64))]));
            }
            v.push((lab("rho", 7), rho7()));
            v
        }
        GroupId::BO => {
            let m0: M<T> = Matrix::from_real(&[&[0.0, 0.0, 1.0], &[0.0, 1.0, 0.0], &[-1.0, 0.0, 0.0]]);
            let r7 = rho7::<T>();
            let with = |last: M<T>| {
                let mut x = r7.clone();
                x.push(last);
                x
            };
            vec![
                (lab("rhobar", 1), vec![one(); 5]),
                (lab("rhobar", 2), vec![one(), one(), one(), one(), s(re(-1.0))]),
                (lab("rhobar", 3), vec![eye(2), eye(2), eye(2), d2(w(2), w(1)), pauli_x()]),
                (lab("rhobar", 4), vec![neg(eye(2)), su2_j(), su2_k(), su2_u(), su2_t()]),
                (lab("rhobar", 5), vec![neg(eye(2)), su2_j(), su2_k(), su2_u(), neg(su2_t())]),
                (lab("rhobar", 6), with(neg(m0.clone()))),
                (lab("rhobar", 7), with(m0)),
                (lab("rhobar", 8), rhobar8()),
            ]
        }
        GroupId::Z3xZ3 => (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .map(|(a, b)| (lab("chi", 3 * a + b + 1), vec![s(w(a as i64)), s(w(b as i64))]))
            .collect(),
        GroupId::D27 => {
            let mut v: Vec<(String, Vec<M<T>>)> = (0..3)
                .flat_map(|e| (0..3).map(move |cc| (e, cc)))
                .map(|(e, cc)| (lab("xi", 1 + 3 * e + cc), vec![one(), s(w(cc as i64)), s(w(e as i64))]))
                .collect();
            v.push((lab("xi", 10), vec![eye::<T>(3).scale(w(1)), s3(), chi()]));
            v.push((lab("xi", 11), vec![eye::<T>(3).scale(w(2)), s3::<T>().conj(), chi()]));
            v
        }
        GroupId::D54 => {
            let dw = || d2::<T>(w(1), w(2));
            let mut v = vec![
                (lab("rhobar", 1), vec![one(); 4]),
                (lab("rhobar", 2), vec![one(), one(), one(), s(re(-1.0))]),
                (lab("rhobar", 3), vec![eye(2), dw(), eye(2), pauli_x()]),
                (lab("rhobar", 4), vec![eye(2), eye(2), dw(), pauli_x()]),
                (lab("rhobar", 5), vec![eye(2), dw(), dw(), pauli_x()]),
                (lab("rhobar", 6), vec![eye(2), dw(), d2(w(2), w(1)), pauli_x()]),
            ];
            let x12m = x12::<T>();
            for (k, sign) in [(7, -1.0), (8, -1.0), (9, 1.0), (10, 1.0)] {
                let conjugate = k % 2 == 0;
                let (om, cc) = if conjugate { (w(2), s3::<T>().conj()) } else { (w(1), s3()) };
                v.push((lab("rhobar", k), vec![eye::<T>(3).scale(om), cc, chi(), x12m.scale(re(sign))]));
            }
            v
        }
        GroupId::S36x3 => {
            let sig = |v: M<T>, o: M<T>, cc: M<T>, e: M<T>| vec![o, cc, e, v.matmul(&v), v];
            let mut out: Vec<(String, Vec<M<T>>)> = [c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)]
                .into_iter()
                .enumerate()
                .map(|(i, x)| (lab("rho", i + 1), sig(s(x), one(), one(), one())))
                .collect();
            let coeffs = [c(0.0, -1.0), c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0)];
            for (j, &x) in coeffs.iter().enumerate() {
                out.push((lab("rho", 5 + j), sig(h3::<T>().scale(x), eye::<T>(3).scale(w(1)), s3(), chi())));
            }
            for (j, &x) in coeffs.iter().enumerate() {
                let v = h3::<T>().conj().scale(x);
                out.push((lab("rho", 9 + j), sig(v, eye::<T>(3).scale(w(2)), s3::<T>().conj(), chi())));
            }
            out.push((
                lab("rho", 13),
                sig(chi4(), eye(4), dg(&[re(1.0), w(1), re(1.0), w(2)]), dg(&[w(1), re(1.0), w(2), re(1.0)])),
            ));
            out.push((
                lab("rho", 14),
                sig(chi4(), eye(4), dg(&[w(1), w(1), w(2), w(2)]), dg(&[w(1), w(2), w(2), w(1)])),
            ));
            out
        }
    }
}

fn rho7<T: Real>() -> Vec<M<T>> {
    vec![
        Matrix::identity(3),
        dg(&[re(-1.0), re(-1.0), re(1.0)]),
        dg(&[re(1.0), re(-1.0), re(-1.0)]),
        chi(),
    ]
}

fn rhobar8<T: Real>() -> Vec<M<T>> {
    let i = c::<T>(0.0, 1.0);
    let z = re::<T>(0.0);
    let e = eta::<T>();
    let w = w3::<T>(1);
    let j = Matrix::from_rows(vec![
        vec![z, -i, z, z],
        vec![-i, z, z, z],
        vec![z, z, -i, z],
        vec![z, z, z, i],
    ]);
    let k = Matrix::from_rows(vec![
        vec![i, z, z, z],
        vec![z, -i, z, z],
        vec![z, z, z, -i],
        vec![z, z, -i, z],
    ]);
    let u = Matrix::from_rows(vec![
        vec![-e * w, e * w, z, z],
        vec![-e.conj() * w, -e.conj() * w, z, z],
        vec![z, z, -e.conj(), e],
        vec![z, z, -e.conj(), -e],
    ])
    .scale(w)
    .transpose();
    let t = Matrix::from_real(&[
        &[0.0, 0.0, 0.0, -1.0],
        &[0.0, 0.0, 1.0, 0.0],
        &[1.0, 0.0, 0.0, 0.0],
        &[0.0, 1.0, 0.0, 0.0],
    ]);
    vec![Matrix::identity(4).scale(re(-1.0)), j, k, u, t]
}

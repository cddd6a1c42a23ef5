//! Twiddle and kickback operators derived from the subgroup transform and the
//! irrep tables alone.

use crate::SynthesisError;
use group_core::scalar::{re, root_of_unity};
use group_core::{Group64, Mat, Matrix, C64};
use rep_theory::{dft_matrix, embedding, RepTable64};
use simulator_verifier::discover_blocks;

/// A with A r2(h) = r1(h) A for all h, scaled to be unitary.
fn intertwiner(r1: &[Mat], r2: &[Mat]) -> Option<Mat> {
    let d = r1[0].rows();
    for a in 0..d {
        for b in 0..d {
            let mut acc = Matrix::zeros(d, d);
            for (x, y) in r1.iter().zip(r2) {
                // r1 E_ab r2^dag
                let blk = Matrix::from_fn(d, d, |i, j| x[(i, a)] * y[(j, b)].conj());
                acc = acc.add(&blk);
            }
            if acc.max_abs() > 1e-6 {
                let n = acc.adjoint().matmul(&acc)[(0, 0)].re.sqrt();
                return Some(acc.scale(re(1.0 / n)));
            }
        }
    }
    None
}

/// Operators in the element basis of the subgroup: `twiddle[x]` for the
/// transversal power x, and the kickback diagonal for x = 1.
pub(crate) struct Derived {
    pub twiddle: Vec<Mat>,
    pub kickback: Vec<C64>,
}

pub(crate) fn derive(sub: &RepTable64, g: &Group64, fh: &Mat, tol: f64) -> Result<Derived, SynthesisError> {
    let nh = sub.order();
    let emb = embedding(&sub.group, g)?;
    let mut back = vec![usize::MAX; g.order()];
    for (h, &x) in emb.iter().enumerate() {
        back[x] = h;
    }
    let t = g.transversal_generator()?.index();
    let ti = g.inv_idx(t);
    let m = g.id.slots()[g.id.transversal_slot()?].bound as usize;
    let conj: Vec<usize> = emb.iter().map(|&h| back[g.mul_idx(g.mul_idx(ti, h), t)]).collect();
    let conj_inv: Vec<usize> = emb.iter().map(|&h| back[g.mul_idx(g.mul_idx(t, h), ti)]).collect();
    let mut tm = 0;
    for _ in 0..m {
        tm = g.mul_idx(tm, t);
    }
    let tm = back[tm];
    if conj.iter().chain(&conj_inv).any(|&x| x == usize::MAX) || tm == usize::MAX {
        return Err(SynthesisError::Layout(format!("{} is not normal in {}", sub.id(), g.id)));
    }

    let fo = dft_matrix(sub);
    let disc = discover_blocks(fh, sub, tol);
    if !disc.problems.is_empty() {
        return Err(SynthesisError::Subgroup(disc.problems.join("; ")));
    }
    let offs = sub.row_offsets();
    let cols: Vec<usize> = (0..nh).collect();
    let cert: Vec<Mat> = (0..sub.irreps.len())
        .map(|r| {
            let d = sub.irreps[r].dim;
            let orows: Vec<usize> = (offs[r]..offs[r] + d * d).collect();
            fh.select(&disc.rows[r], &cols).matmul(&fo.select(&orows, &cols).adjoint())
        })
        .collect();
    let rotated = |r: usize| -> Option<usize> {
        let ch: Vec<C64> = conj_inv.iter().map(|&h| sub.chars[r][h]).collect();
        sub.match_character(&ch, 1e-9)
    };

    let mut twiddle = vec![Matrix::identity(nh); m];
    let mut kickback = vec![re(1.0); nh];
    let mut done = vec![false; sub.irreps.len()];
    let place = |tw: &mut Vec<Mat>, r: usize, x: usize, op: &Mat| {
        let d = sub.irreps[r].dim;
        let w = &cert[r];
        let full = w.matmul(&Matrix::identity(d).kron(&op.transpose())).matmul(&w.adjoint());
        tw[x].set_block(&disc.rows[r], &disc.rows[r], &full);
    };
    for r in 0..sub.irreps.len() {
        if done[r] {
            continue;
        }
        let mut orbit = vec![r];
        loop {
            let next = rotated(*orbit.last().unwrap())
                .ok_or_else(|| SynthesisError::NoIntertwiner(sub.irreps[r].label.clone()))?;
            if next == r {
                break;
            }
            orbit.push(next);
        }
        for &o in &orbit {
            done[o] = true;
        }
        let reps = |o: usize| &sub.mats[o];
        let twisted = |o: usize| conj.iter().map(|&h| sub.mats[o][h].clone()).collect::<Vec<_>>();
        let no_int = || SynthesisError::NoIntertwiner(sub.irreps[r].label.clone());
        if orbit.len() == 1 {
            let a = intertwiner(reps(r), &twisted(r)).ok_or_else(no_int)?;
            let ratio = a.pow(m).matmul(&reps(r)[tm].adjoint())[(0, 0)];
            let a = a.scale(C64::new(1.0, 0.0) / ratio.powf(1.0 / m as f64));
            for x in 0..m {
                place(&mut twiddle, r, x, &a.pow(x));
            }
        } else if orbit.len() == m {
            let mut links = Vec::new();
            for y in 0..m - 1 {
                links.push(intertwiner(reps(orbit[y]), &twisted(orbit[y + 1])).ok_or_else(no_int)?);
            }
            let mut prod = Matrix::identity(sub.irreps[r].dim);
            for l in &links {
                prod = prod.matmul(l);
            }
            links.push(prod.adjoint().matmul(&reps(orbit[0])[tm]));
            for (y, &o) in orbit.iter().enumerate() {
                for x in 0..m {
                    let mut op = Matrix::identity(sub.irreps[o].dim);
                    for z in 0..x {
                        op = op.matmul(&links[(y + z) % m]);
                    }
                    place(&mut twiddle, o, x, &op);
                }
                for &s in &disc.rows[o] {
                    kickback[s] = root_of_unity(m, y as i64);
                }
            }
        } else {
            return Err(SynthesisError::Layout(format!("orbit of length {} in a step of index {m}", orbit.len())));
        }
    }
    Ok(Derived { twiddle, kickback })
}

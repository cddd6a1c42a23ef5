//! Irreducible representations, characters, the Fourier oracle and
//! conjugate-orbit classification for the groups in `group-core`.

mod assignment;
mod tables;

pub use assignment::{reference_assignment, IrrepBasisAssignment};
pub use tables::generator_images;

use group_core::scalar::{re, Cx};
use group_core::{Group, GroupElement, GroupError, GroupId, Matrix, Real};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RepError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("conjugate of {0} matches no irrep")]
    NoMatch(String),
    #[error("unknown irrep label `{0}`")]
    UnknownIrrep(String),
}

#[derive(Clone, Debug)]
pub struct Irrep<T> {
    pub group: GroupId,
    pub label: String,
    pub dim: usize,
    /// One image per normal-form generator, in slot order.
    pub images: Vec<Matrix<T>>,
}

impl<T: Real> Irrep<T> {
    /// Ordered product of generator-image powers for the element's exponents.
    pub fn matrix(&self, g: &GroupElement) -> Result<Matrix<T>, RepError> {
        if g.group != self.group {
            return Err(GroupError::GroupMismatch(self.group, g.group).into());
        }
        Ok(g.exps
            .iter()
            .zip(&self.images)
            .fold(Matrix::identity(self.dim), |m, (&e, img)| m.matmul(&img.pow(e as usize))))
    }
}

/// Every irrep of a group with its matrices evaluated on all elements.
#[derive(Clone, Debug)]
pub struct RepTable<T> {
    pub group: Group<T>,
    pub irreps: Vec<Irrep<T>>,
    /// `mats[r][g]` is irrep `r` at element index `g`.
    pub mats: Vec<Vec<Matrix<T>>>,
    /// `chars[r][g]`
    pub chars: Vec<Vec<Cx<T>>>,
}

impl<T: Real> RepTable<T> {
    pub fn new(id: GroupId) -> Result<Self, RepError> {
        let group = Group::new(id)?;
        let irreps: Vec<Irrep<T>> = generator_images::<T>(id)
            .into_iter()
            .map(|(label, images)| Irrep { group: id, dim: images[0].rows(), label, images })
            .collect();
        let elems = group.elements();
        let mats: Vec<Vec<Matrix<T>>> = irreps
            .iter()
            .map(|r| elems.iter().map(|g| r.matrix(g)).collect::<Result<_, _>>())
            .collect::<Result<_, _>>()?;
        let chars = mats.iter().map(|v| v.iter().map(|m| m.trace()).collect()).collect();
        Ok(RepTable { group, irreps, mats, chars })
    }

    pub fn id(&self) -> GroupId {
        self.group.id
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn labels(&self) -> Vec<&str> {
        self.irreps.iter().map(|r| r.label.as_str()).collect()
    }

    pub fn index_of(&self, label: &str) -> Result<usize, RepError> {
        self.irreps
            .iter()
            .position(|r| r.label == label)
            .ok_or_else(|| RepError::UnknownIrrep(label.to_string()))
    }

    pub fn character(&self, irrep: usize, g: &GroupElement) -> Result<Cx<T>, RepError> {
        Ok(self.irreps[irrep].matrix(g)?.trace())
    }

    /// First oracle row of each irrep block.
    pub fn row_offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.irreps.len());
        let mut acc = 0;
        for r in &self.irreps {
            off.push(acc);
            acc += r.dim * r.dim;
        }
        off
    }

    /// Irrep whose character matches `ch` (given on every element).
    pub fn match_character(&self, ch: &[Cx<T>], tol: T) -> Option<usize> {
        self.chars
            .iter()
            .position(|c| c.iter().zip(ch).all(|(a, b)| (*a - *b).norm() <= tol))
    }

    /// Multiplicity of each irrep in a class function (inner product with characters).
    pub fn decompose(&self, ch: &[Cx<T>]) -> Vec<Cx<T>> {
        let n = T::of(self.order() as f64);
        self.chars
            .iter()
            .map(|c| c.iter().zip(ch).fold(re::<T>(0.0), |s, (a, b)| s + a.conj() * *b) / n)
            .collect()
    }
}

/// Fourier oracle: rows (irrep in table order, i, j row-major), columns elements;
/// entry sqrt(d/|G|) rho(g)_ij.
pub fn dft_matrix<T: Real>(t: &RepTable<T>) -> Matrix<T> {
    let n = t.order();
    let mut f = Matrix::zeros(n, n);
    let mut row = 0;
    for (r, irr) in t.irreps.iter().enumerate() {
        let d = irr.dim;
        let s = T::of((d as f64 / n as f64).sqrt());
        for i in 0..d {
            for j in 0..d {
                for g in 0..n {
                    f[(row, g)] = t.mats[r][g][(i, j)] * s;
                }
                row += 1;
            }
        }
    }
    f
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Left: |h> -> |g h>. Right: |h> -> |h g^-1>.
pub fn regular_rep_perm<T: Real>(group: &Group<T>, g: usize, side: Side) -> Vec<usize> {
    let gi = group.inv_idx(g);
    (0..group.order())
        .map(|h| match side {
            Side::Left => group.mul_idx(g, h),
            Side::Right => group.mul_idx(h, gi),
        })
        .collect()
}

pub fn regular_rep<T: Real>(group: &Group<T>, g: &GroupElement, side: Side) -> Result<Matrix<T>, RepError> {
    if g.group != group.id {
        return Err(GroupError::GroupMismatch(group.id, g.group).into());
    }
    Ok(Matrix::permutation(&regular_rep_perm(group, g.index(), side)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugateClassification {
    pub subgroup: GroupId,
    pub group: GroupId,
    /// Irrep indices (in the subgroup table) fixed by the transversal.
    pub extendable: Vec<usize>,
    /// Orbits in the order phi, phi^t, phi^(t^2), ...
    pub orbits: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

impl ConjugateClassification {
    pub fn extendable_labels(&self) -> Vec<&str> {
        self.extendable.iter().map(|&i| self.labels[i].as_str()).collect()
    }

    pub fn orbit_labels(&self) -> Vec<Vec<&str>> {
        self.orbits.iter().map(|o| o.iter().map(|&i| self.labels[i].as_str()).collect()).collect()
    }
}

/// Subgroup element index for every element of `g` lying in the embedded subgroup.
pub fn embedding<T: Real>(sub: &Group<T>, g: &Group<T>) -> Result<Vec<usize>, RepError> {
    sub.elements().iter().map(|h| Ok(g.embed(h)?.index())).collect()
}

/// Action of the transversal generator t on subgroup irreps, phi^t(h) = phi(t^-1 h t).
pub fn classify_conjugates<T: Real>(sub: &RepTable<T>, g: &Group<T>) -> Result<ConjugateClassification, RepError> {
    let t = g.transversal_generator()?.index();
    let ti = g.inv_idx(t);
    let emb = embedding(&sub.group, g)?;
    let back = |x: usize| emb.iter().position(|&e| e == x).expect("normal subgroup");
    // conj[h] = index of t^-1 h t in the subgroup
    let conj: Vec<usize> = emb.iter().map(|&h| back(g.mul_idx(g.mul_idx(ti, h), t))).collect();
    let tol = T::match_tol();
    let image = |r: usize| -> Result<usize, RepError> {
        let ch: Vec<Cx<T>> = conj.iter().map(|&h| sub.chars[r][h]).collect();
        sub.match_character(&ch, tol).ok_or_else(|| RepError::NoMatch(sub.irreps[r].label.clone()))
    };
    let mut seen = vec![false; sub.irreps.len()];
    let mut extendable = Vec::new();
    let mut orbits = Vec::new();
    for r in 0..sub.irreps.len() {
        if seen[r] {
            continue;
        }
        let mut orb = vec![r];
        seen[r] = true;
        let mut x = image(r)?;
        while x != r {
            orb.push(x);
            seen[x] = true;
            x = image(x)?;
        }
        if orb.len() == 1 {
            extendable.push(r);
        } else {
            orbits.push(orb);
        }
    }
    Ok(ConjugateClassification {
        subgroup: sub.id(),
        group: g.id,
        extendable,
        orbits,
        labels: sub.irreps.iter().map(|r| r.label.clone()).collect(),
    })
}

pub type RepTable64 = RepTable<f64>;
pub type RepTable32 = RepTable<f32>;

use crate::consts::*;
use crate::linalg::Matrix;
use crate::scalar::Real;
use itertools::Itertools;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("elements belong to different groups ({0} vs {1})")]
    GroupMismatch(GroupId, GroupId),
    #[error("exponent tuple {exps:?} is not a normal form of {group}")]
    BadExponents { group: GroupId, exps: Vec<u8> },
    #[error("{0} has no predecessor in its chain")]
    NoPredecessor(GroupId),
    #[error("matrix product did not match any element of {0}")]
    NotClosed(GroupId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    Z2,
    Z4,
    Q8,
    BT,
    BO,
    Z3xZ3,
    D27,
    D54,
    S36x3,
}

/// One generator position of the normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    /// Register letter used for this slot (a..e or p..t).
    pub letter: char,
    /// Generator label in the normal form.
    pub generator: &'static str,
    pub bound: u8,
}

const SU2_SLOTS: [Slot; 5] = [
    Slot { letter: 'a', generator: "-1", bound: 2 },
    Slot { letter: 'b', generator: "j", bound: 2 },
    Slot { letter: 'c', generator: "k", bound: 2 },
    Slot { letter: 'd', generator: "u", bound: 3 },
    Slot { letter: 'e', generator: "t", bound: 2 },
];

const SU3_SLOTS: [Slot; 5] = [
    Slot { letter: 'p', generator: "w", bound: 3 },
    Slot { letter: 'q', generator: "C", bound: 3 },
    Slot { letter: 'r', generator: "E", bound: 3 },
    Slot { letter: 's', generator: "V2", bound: 2 },
    Slot { letter: 't', generator: "V", bound: 2 },
];

impl GroupId {
    pub const ALL: [GroupId; 9] = [
        GroupId::Z2,
        GroupId::Z4,
        GroupId::Q8,
        GroupId::BT,
        GroupId::BO,
        GroupId::Z3xZ3,
        GroupId::D27,
        GroupId::D54,
        GroupId::S36x3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupId::Z2 => "Z2",
            GroupId::Z4 => "Z4",
            GroupId::Q8 => "Q8",
            GroupId::BT => "BT",
            GroupId::BO => "BO",
            GroupId::Z3xZ3 => "Z3xZ3",
            GroupId::D27 => "D27",
            GroupId::D54 => "D54",
            GroupId::S36x3 => "S36x3",
        }
    }

    /// Lower-case command-line spelling.
    pub fn cli_name(self) -> &'static str {
        match self {
            GroupId::Z2 => "z2",
            GroupId::Z4 => "z4",
            GroupId::Q8 => "q8",
            GroupId::BT => "bt",
            GroupId::BO => "bo",
            GroupId::Z3xZ3 => "z3z3",
            GroupId::D27 => "d27",
            GroupId::D54 => "d54",
            GroupId::S36x3 => "s36x3",
        }
    }

    pub fn is_su2(self) -> bool {
        matches!(self, GroupId::Z2 | GroupId::Z4 | GroupId::Q8 | GroupId::BT | GroupId::BO)
    }

    pub fn order(self) -> usize {
        self.slots().iter().map(|s| s.bound as usize).product()
    }

    /// Normal-form slots in exponent order.
    pub fn slots(self) -> Vec<Slot> {
        let pick = |idx: &[usize], table: &[Slot; 5]| idx.iter().map(|&i| table[i]).collect();
        match self {
            GroupId::Z2 => pick(&[0], &SU2_SLOTS),
            GroupId::Z4 => pick(&[0, 2], &SU2_SLOTS),
            GroupId::Q8 => pick(&[0, 1, 2], &SU2_SLOTS),
            GroupId::BT => pick(&[0, 1, 2, 3], &SU2_SLOTS),
            GroupId::BO => pick(&[0, 1, 2, 3, 4], &SU2_SLOTS),
            GroupId::Z3xZ3 => pick(&[0, 1], &SU3_SLOTS),
            GroupId::D27 => pick(&[0, 1, 2], &SU3_SLOTS),
            GroupId::D54 => pick(&[0, 1, 2, 3], &SU3_SLOTS),
            GroupId::S36x3 => pick(&[0, 1, 2, 3, 4], &SU3_SLOTS),
        }
    }

    pub fn predecessor(self) -> Option<GroupId> {
        match self {
            GroupId::Z4 => Some(GroupId::Z2),
            GroupId::Q8 => Some(GroupId::Z4),
            GroupId::BT => Some(GroupId::Q8),
            GroupId::BO => Some(GroupId::BT),
            GroupId::D27 => Some(GroupId::Z3xZ3),
            GroupId::D54 => Some(GroupId::D27),
            GroupId::S36x3 => Some(GroupId::D54),
            GroupId::Z2 | GroupId::Z3xZ3 => None,
        }
    }

    /// Chain from the base group up to and including `self`.
    pub fn chain(self) -> Vec<GroupId> {
        let mut v = vec![self];
        while let Some(p) = v.last().unwrap().predecessor() {
            v.push(p);
        }
        v.reverse();
        v
    }

    /// Index of the slot that is new relative to the predecessor.
    pub fn transversal_slot(self) -> Result<usize, GroupError> {
        let sub = self.predecessor().ok_or(GroupError::NoPredecessor(self))?;
        let sl = sub.slots();
        Ok(self
            .slots()
            .iter()
            .position(|s| !sl.iter().any(|x| x.letter == s.letter))
            .expect("chain adds one slot"))
    }

    /// Register wires, most significant first: the slots in reverse order.
    pub fn register_slots(self) -> Vec<Slot> {
        let mut v = self.slots();
        v.reverse();
        v
    }

    /// Basis-state index of an element in the mixed register.
    pub fn register_state(self, exps: &[u8]) -> usize {
        let slots = self.slots();
        (0..slots.len())
            .rev()
            .fold(0, |acc, i| acc * slots[i].bound as usize + exps[i] as usize)
    }

    /// Register digits (by slot letter) of a basis-state index.
    pub fn register_digits(self, mut state: usize) -> Vec<(char, u8)> {
        let mut out = Vec::new();
        for s in self.slots() {
            out.push((s.letter, (state % s.bound as usize) as u8));
            state /= s.bound as usize;
        }
        out.reverse();
        out
    }

    /// Faithful matrix of each normal-form generator.
    pub fn generator_matrices<T: Real>(self) -> Vec<Matrix<T>> {
        let su2 = |s: &Slot| match s.generator {
            "-1" => Matrix::<T>::identity(2).scale(crate::scalar::re(-1.0)),
            "j" => su2_j(),
            "k" => su2_k(),
            "u" => su2_u(),
            "t" => su2_t(),
            _ => unreachable!(),
        };
        let v = h3::<T>().scale(crate::scalar::c(0.0, -1.0));
        let su3 = |s: &Slot| match s.generator {
            "w" => Matrix::<T>::identity(3).scale(w3(1)),
            "C" => s3(),
            "E" => chi(),
            "V2" => v.pow(2),
            "V" => v.clone(),
            _ => unreachable!(),
        };
        self.slots().iter().map(|s| if self.is_su2() { su2(s) } else { su3(s) }).collect()
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupId {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let l = s.to_ascii_lowercase();
        GroupId::ALL
            .into_iter()
            .find(|g| g.cli_name() == l || g.name().to_ascii_lowercase() == l)
            .or(match l.as_str() {
                "s108" | "sigma36x3" => Some(GroupId::S36x3),
                "z3xz3" => Some(GroupId::Z3xZ3),
                _ => None,
            })
            .ok_or_else(|| GroupError::UnknownGroup(s.to_string()))
    }
}

/// An element in normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub group: GroupId,
    pub exps: Vec<u8>,
}

impl GroupElement {
    pub fn new(group: GroupId, exps: Vec<u8>) -> Result<Self, GroupError> {
        let slots = group.slots();
        if exps.len() != slots.len() || exps.iter().zip(&slots).any(|(e, s)| *e >= s.bound) {
            return Err(GroupError::BadExponents { group, exps });
        }
        Ok(GroupElement { group, exps })
    }

    pub fn identity(group: GroupId) -> Self {
        GroupElement { group, exps: vec![0; group.slots().len()] }
    }

    /// Position in lexicographic enumeration order.
    pub fn index(&self) -> usize {
        self.group
            .slots()
            .iter()
            .zip(&self.exps)
            .fold(0, |acc, (s, &e)| acc * s.bound as usize + e as usize)
    }

    pub fn from_index(group: GroupId, mut idx: usize) -> Self {
        let slots = group.slots();
        let mut exps = vec![0u8; slots.len()];
        for (i, s) in slots.iter().enumerate().rev() {
            exps[i] = (idx % s.bound as usize) as u8;
            idx /= s.bound as usize;
        }
        GroupElement { group, exps }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slots = self.group.slots();
        let parts: Vec<String> = slots
            .iter()
            .zip(&self.exps)
            .filter(|(_, &e)| e > 0)
            .map(|(s, &e)| {
                let g = if s.generator == "-1" { "(-1)" } else { s.generator };
                if e == 1 { g.to_string() } else { format!("{g}^{e}") }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Enumerated finite group with its faithful matrices and Cayley table.
#[derive(Clone, Debug)]
pub struct Group<T> {
    pub id: GroupId,
    pub matrices: Vec<Matrix<T>>,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

impl<T: Real> Group<T> {
    pub fn new(id: GroupId) -> Result<Self, GroupError> {
        let gens = id.generator_matrices::<T>();
        let slots = id.slots();
        let dim = gens[0].rows();
        let matrices: Vec<Matrix<T>> = slots
            .iter()
            .map(|s| 0..s.bound as usize)
            .multi_cartesian_product()
            .map(|exps| {
                exps.iter()
                    .zip(&gens)
                    .fold(Matrix::identity(dim), |m, (&e, g)| m.matmul(&g.pow(e)))
            })
            .collect();
        let n = matrices.len();
        let tol = T::match_tol();
        let find = |m: &Matrix<T>| {
            let mut best = (0, T::infinity());
            for (k, x) in matrices.iter().enumerate() {
                let d = x.max_diff(m);
                if d < best.1 {
                    best = (k, d);
                }
            }
            if best.1 < tol { Some(best.0) } else { None }
        };
        let mut table = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = find(&matrices[i].matmul(&matrices[j])).ok_or(GroupError::NotClosed(id))?;
            }
        }
        let e = GroupElement::identity(id).index();
        let inverses = (0..n).map(|i| (0..n).find(|&j| table[i][j] == e).unwrap()).collect();
        Ok(Group { id, matrices, table, inverses })
    }

    pub fn order(&self) -> usize {
        self.matrices.len()
    }

    pub fn element(&self, i: usize) -> GroupElement {
        GroupElement::from_index(self.id, i)
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv_idx(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    fn check(&self, g: &GroupElement) -> Result<usize, GroupError> {
        if g.group != self.id {
            return Err(GroupError::GroupMismatch(self.id, g.group));
        }
        GroupElement::new(g.group, g.exps.clone()).map(|x| x.index())
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement, GroupError> {
        if a.group != b.group {
            return Err(GroupError::GroupMismatch(a.group, b.group));
        }
        Ok(self.element(self.mul_idx(self.check(a)?, self.check(b)?)))
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement, GroupError> {
        Ok(self.element(self.inv_idx(self.check(a)?)))
    }

    /// t h t^-1
    pub fn conjugate(&self, t: &GroupElement, h: &GroupElement) -> Result<GroupElement, GroupError> {
        let ti = self.inverse(t)?;
        self.multiply(&self.multiply(t, h)?, &ti)
    }

    pub fn power(&self, a: &GroupElement, n: usize) -> Result<GroupElement, GroupError> {
        let mut r = GroupElement::identity(self.id);
        for _ in 0..n {
            r = self.multiply(&r, a)?;
        }
        Ok(r)
    }

    pub fn matrix(&self, g: &GroupElement) -> Result<&Matrix<T>, GroupError> {
        Ok(&self.matrices[self.check(g)?])
    }

    /// Index of the element whose matrix matches `m`.
    pub fn find_matrix(&self, m: &Matrix<T>) -> Option<usize> {
        let tol = T::match_tol();
        self.matrices.iter().position(|x| x.max_diff(m) < tol)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let e = GroupElement::identity(self.id).index();
        let mut x = a;
        let mut k = 1;
        while x != e {
            x = self.mul_idx(x, a);
            k += 1;
        }
        k
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut cls: Vec<usize> =
                (0..n).map(|g| self.mul_idx(self.mul_idx(g, a), self.inv_idx(g))).collect();
            cls.sort_unstable();
            cls.dedup();
            for &x in &cls {
                seen[x] = true;
            }
            out.push(cls);
        }
        out
    }

    /// Embedding of a predecessor element into this group (missing slots are zero).
    pub fn embed(&self, h: &GroupElement) -> Result<GroupElement, GroupError> {
        let slots = self.id.slots();
        let hs = h.group.slots();
        let mut exps = vec![0u8; slots.len()];
        for (s, &e) in hs.iter().zip(&h.exps) {
            let i = slots
                .iter()
                .position(|x| x.letter == s.letter)
                .ok_or(GroupError::GroupMismatch(self.id, h.group))?;
            exps[i] = e;
        }
        GroupElement::new(self.id, exps)
    }

    /// Transversal generator of the step from the predecessor.
    pub fn transversal_generator(&self) -> Result<GroupElement, GroupError> {
        let k = self.id.transversal_slot()?;
        let mut exps = vec![0u8; self.id.slots().len()];
        exps[k] = 1;
        GroupElement::new(self.id, exps)
    }

    /// Right-coset transversal {1, t, ..., t^(m-1)}.
    pub fn transversal(&self) -> Result<Vec<GroupElement>, GroupError> {
        let t = self.transversal_generator()?;
        let m = self.id.slots()[self.id.transversal_slot()?].bound as usize;
        (0..m).map(|x| self.power(&t, x)).collect()
    }
}

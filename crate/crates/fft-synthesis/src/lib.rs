//! Fast Fourier transform circuits over Z2 < Z4 < Q8 < BT < BO and
//! Z3xZ3 < D27 < D54 < S36x3.
//!
//! Each step extends the subgroup transform by a transversal wire:
//! relabel cosets, run the subgroup FFT, apply the twiddle T controlled by the
//! transversal value, the DFT on the transversal wire, then the kickback
//! phases Phi controlled by the transversal value.

mod decompose;
mod generic;
mod paper;

pub use decompose::{decompose, diagonal_gates, gate_on, permutation_gates};
pub use paper::{BtPlacement, BT_PLACEMENT};

use circuit_ir::{transpile, Arch, Circuit, CircuitError, Gate, GateKind};
use group_core::scalar::re;
use group_core::{Group64, GroupElement, GroupError, GroupId, Mat, Matrix, C64};
use rep_theory::{classify_conjugates, ConjugateClassification, RepError, RepTable64};
use simulator_verifier::{digits_of, extract_group_operator, index_of, verify_circuit, DEFAULT_TOLERANCE};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SynthesisError {
    #[error("operator is not unitary: {0}")]
    OperatorNotUnitary(String),
    #[error("layout mismatch: {0}")]
    Layout(String),
    #[error("subgroup transform is not block diagonal: {0}")]
    Subgroup(String),
    #[error("no intertwiner for {0}")]
    NoIntertwiner(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorSource {
    /// Written out by hand from the irrep tables.
    Printed,
    /// Solved from intertwiners of the subgroup irreps.
    Derived,
}

/// Operators of one chain step. Matrices act on the subgroup register in its
/// basis-state order; index x is the transversal value.
#[derive(Clone, Debug)]
pub struct ExtensionStep {
    pub subgroup: GroupId,
    pub group: GroupId,
    pub m: usize,
    pub classification: ConjugateClassification,
    pub twiddle: Vec<Mat>,
    pub kickback: Vec<Vec<C64>>,
    /// Basis permutations after the subgroup transform (identity on both chains).
    pub p: Vec<usize>,
    pub c: Vec<usize>,
    /// Group register permutation taking |g> to |x>|h> for g = h t^x.
    pub relabel: Vec<usize>,
    pub source: OperatorSource,
}

/// Register bookkeeping between a group and its predecessor.
struct Split {
    dims: Vec<usize>,
    sub_dims: Vec<usize>,
    /// Group wire of each subgroup wire.
    wire_of: Vec<usize>,
    transversal: usize,
}

impl Split {
    fn new(g: GroupId) -> Result<Self, SynthesisError> {
        let sub = g.predecessor().ok_or(GroupError::NoPredecessor(g))?;
        let slots = g.register_slots();
        let dims = slots.iter().map(|s| s.bound as usize).collect();
        let sub_slots = sub.register_slots();
        let sub_dims = sub_slots.iter().map(|s| s.bound as usize).collect();
        let wire_of = sub_slots.iter().map(|s| slots.iter().position(|x| x.letter == s.letter).unwrap()).collect();
        let letter = g.slots()[g.transversal_slot()?].letter;
        let transversal = slots.iter().position(|s| s.letter == letter).unwrap();
        Ok(Split { dims, sub_dims, wire_of, transversal })
    }

    fn join(&self, x: usize, h: usize) -> usize {
        let hd = digits_of(&self.sub_dims, h);
        let mut d = vec![0; self.dims.len()];
        d[self.transversal] = x;
        for (k, &w) in self.wire_of.iter().enumerate() {
            d[w] = hd[k];
        }
        index_of(&self.dims, &d)
    }

    fn split(&self, s: usize) -> (usize, usize) {
        let d = digits_of(&self.dims, s);
        let hd: Vec<usize> = self.wire_of.iter().map(|&w| d[w]).collect();
        (d[self.transversal], index_of(&self.sub_dims, &hd))
    }

    fn size(&self) -> usize {
        self.dims.iter().product()
    }
}

impl ExtensionStep {
    /// T = sum_x |x><x| (x) twiddle[x] on the group register.
    pub fn twiddle_operator(&self) -> Result<Mat, SynthesisError> {
        let sp = Split::new(self.group)?;
        let n = sp.size();
        let mut t = Matrix::zeros(n, n);
        for s in 0..n {
            let (x, h) = sp.split(s);
            for h2 in 0..sp.sub_dims.iter().product() {
                t[(sp.join(x, h2), s)] = self.twiddle[x][(h2, h)];
            }
        }
        Ok(t)
    }

    /// Diagonal of Phi = sum_x |x><x| (x) kickback[x] on the group register.
    pub fn kickback_operator(&self) -> Result<Vec<C64>, SynthesisError> {
        let sp = Split::new(self.group)?;
        Ok((0..sp.size()).map(|s| {
            let (x, h) = sp.split(s);
            self.kickback[x][h]
        })
        .collect())
    }

    fn check(&self) -> Result<(), SynthesisError> {
        for (x, t) in self.twiddle.iter().enumerate() {
            if !t.is_unitary(1e-9) {
                return Err(SynthesisError::OperatorNotUnitary(format!("{} twiddle, x = {x}", self.group)));
            }
        }
        for (x, k) in self.kickback.iter().enumerate() {
            if k.iter().any(|z| (z.norm() - 1.0).abs() > 1e-9) {
                return Err(SynthesisError::OperatorNotUnitary(format!("{} kickback, x = {x}", self.group)));
            }
        }
        Ok(())
    }
}

/// FFT of a chain's base group: H on Z2, H3 (x) H3 on Z3xZ3.
pub fn base_fft(group: GroupId) -> Result<Circuit, SynthesisError> {
    let mut c = Circuit::new(group, Arch::Mixed);
    match group {
        GroupId::Z2 => c.push(Gate::new(GateKind::H, &[0])),
        GroupId::Z3xZ3 => {
            c.push(Gate::new(GateKind::H3, &[0]));
            c.push(Gate::new(GateKind::H3, &[1]));
        }
        _ => return Err(SynthesisError::Layout(format!("{group} is not a chain base"))),
    }
    Ok(c)
}

fn coset_relabel(g: &Group64) -> Result<Vec<usize>, SynthesisError> {
    let sp = Split::new(g.id)?;
    let sub = g.id.predecessor().unwrap();
    let subgroup = Group64::new(sub)?;
    let mut back = vec![None; g.order()];
    for h in subgroup.elements() {
        let e = g.embed(&h)?.index();
        back[e] = Some(h);
    }
    let t = g.transversal_generator()?.index();
    let m = sp.dims[sp.transversal];
    let mut tinv_pow = vec![0usize];
    for x in 1..m {
        tinv_pow.push(g.mul_idx(tinv_pow[x - 1], g.inv_idx(t)));
    }
    let mut relabel = vec![0; g.order()];
    for e in 0..g.order() {
        let el = g.element(e);
        let (x, h) = (0..m)
            .find_map(|x| back[g.mul_idx(e, tinv_pow[x])].as_ref().map(|h| (x, h)))
            .ok_or_else(|| SynthesisError::Layout(format!("{el:?} lies in no coset")))?;
        relabel[g.id.register_state(&el.exps)] = sp.join(x, sub.register_state(&h.exps));
    }
    Ok(relabel)
}

/// Element-basis operator on the subgroup register moved to its state basis.
fn to_states(sub: GroupId, m: &Mat) -> Mat {
    let n = sub.order();
    let st: Vec<usize> = (0..n).map(|i| sub.register_state(&GroupElement::from_index(sub, i).exps)).collect();
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out[(st[i], st[j])] = m[(i, j)];
        }
    }
    out
}

/// Step operators built on a given subgroup FFT; `bt` only affects the step into BT.
pub fn step_operators_from(group: GroupId, sub_fft: &Circuit, bt: BtPlacement) -> Result<ExtensionStep, SynthesisError> {
    let sub = group.predecessor().ok_or(GroupError::NoPredecessor(group))?;
    if sub_fft.group() != sub || sub_fft.arch() != Arch::Mixed {
        return Err(SynthesisError::Layout(format!("expected a mixed {sub} circuit")));
    }
    let table = RepTable64::new(sub)?;
    let g = Group64::new(group)?;
    let classification = classify_conjugates(&table, &g)?;
    let m = group.slots()[group.transversal_slot()?].bound as usize;
    let printed = match group {
        GroupId::BT => Some(paper::bt(bt)),
        GroupId::D27 => Some(paper::d27()),
        GroupId::D54 => Some(paper::d54()),
        _ => None,
    };
    let (twiddle, kickback, source) = match printed {
        Some(p) => (p.twiddle, p.kickback, OperatorSource::Printed),
        None => {
            let fh = extract_group_operator::<f64>(sub_fft)?.operator;
            let d = generic::derive(&table, &g, &fh, DEFAULT_TOLERANCE)?;
            let twiddle = d.twiddle.iter().map(|t| to_states(sub, t)).collect();
            let n = sub.order();
            let mut phi = vec![re(1.0); n];
            for i in 0..n {
                phi[sub.register_state(&GroupElement::from_index(sub, i).exps)] = d.kickback[i];
            }
            let kickback = (0..m).map(|x| phi.iter().map(|p| p.powi(x as i32)).collect()).collect();
            (twiddle, kickback, OperatorSource::Derived)
        }
    };
    let n = sub.order();
    let step = ExtensionStep {
        subgroup: sub,
        group,
        m,
        classification,
        twiddle,
        kickback,
        p: (0..n).collect(),
        c: (0..n).collect(),
        relabel: coset_relabel(&g)?,
        source,
    };
    step.check()?;
    Ok(step)
}

/// Operators for the step from the predecessor of `group` into `group`.
pub fn step_operators(group: GroupId) -> Result<ExtensionStep, SynthesisError> {
    let sub = group.predecessor().ok_or(GroupError::NoPredecessor(group))?;
    step_operators_from(group, &synthesize(sub, Arch::Mixed)?, BT_PLACEMENT)
}

/// Group FFT from the subgroup FFT and the step operators.
pub fn extend_fft(sub_fft: &Circuit, step: &ExtensionStep) -> Result<Circuit, SynthesisError> {
    if sub_fft.group() != step.subgroup || sub_fft.arch() != Arch::Mixed || !sub_fft.ancillas().is_empty() {
        return Err(SynthesisError::Layout(format!("expected a mixed {} circuit without ancillae", step.subgroup)));
    }
    let sp = Split::new(step.group)?;
    let mut c = Circuit::new(step.group, Arch::Mixed);
    c.extend(permutation_gates(&sp.dims, &step.relabel));
    for g in &sub_fft.gates {
        let mut g = g.clone();
        g.targets.iter_mut().for_each(|w| *w = sp.wire_of[*w]);
        g.controls.iter_mut().for_each(|k| k.wire = sp.wire_of[k.wire]);
        c.push(g);
    }
    let n_sub = step.subgroup.order();
    let perm = |p: &[usize]| -> Result<Vec<Gate>, SynthesisError> {
        let mut full = vec![0; sp.size()];
        for s in 0..sp.size() {
            let (x, h) = sp.split(s);
            full[s] = sp.join(x, p[h]);
        }
        Ok(if p.iter().enumerate().all(|(i, &j)| i == j) || p.len() != n_sub { Vec::new() } else { permutation_gates(&sp.dims, &full) })
    };
    c.extend(perm(&step.p)?);
    c.extend(perm(&step.c)?);
    c.extend(decompose(&sp.dims, &step.twiddle_operator()?));
    let dft = if step.m == 2 { GateKind::H } else { GateKind::H3 };
    c.push(Gate::new(dft, &[sp.transversal]));
    c.extend(diagonal_gates(&sp.dims, &step.kickback_operator()?));
    c.validate()?;
    Ok(c)
}

/// Mixed FFT with the given BT placement.
pub fn synthesize_placed(group: GroupId, bt: BtPlacement) -> Result<Circuit, SynthesisError> {
    let chain = group.chain();
    let mut c = base_fft(chain[0])?;
    for &g in &chain[1..] {
        let step = step_operators_from(g, &c, bt)?;
        c = extend_fft(&c, &step)?;
    }
    Ok(c)
}

/// FFT circuit for `group`; the qubit version is the transpiled mixed one.
pub fn synthesize(group: GroupId, arch: Arch) -> Result<Circuit, SynthesisError> {
    let mixed = synthesize_placed(group, BT_PLACEMENT)?;
    Ok(match arch {
        Arch::Mixed => mixed,
        Arch::Qubit => transpile(&mixed)?,
    })
}

/// Every placement of the BT kickback phases and twiddle cycle, with whether
/// the resulting BT circuit verifies.
pub fn bt_placements() -> Result<Vec<(BtPlacement, bool)>, SynthesisError> {
    let table = RepTable64::new(GroupId::BT)?;
    let states = [2, 4, 6];
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            if a == b {
                continue;
            }
            let cycle = [states[a], states[b], states[3 - a - b]];
            for conjugate_phases in [false, true] {
                let p = BtPlacement { cycle, conjugate_phases };
                let c = synthesize_placed(GroupId::BT, p)?;
                let ok = verify_circuit(&c, &table, DEFAULT_TOLERANCE)?.pass;
                out.push((p, ok));
            }
        }
    }
    Ok(out)
}

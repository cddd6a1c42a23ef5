//! Qutrit-to-qubit lowering. A qutrit becomes a (high, low) qubit pair holding
//! 2*high + low; the pair value 3 is never populated.

use crate::{Arch, Circuit, CircuitError, Control, Gate, GateKind};
use group_core::scalar::re;
use group_core::{Mat, Matrix, C64};
use std::collections::BTreeSet;

const EPS: f64 = 1e-12;

/// 3x3 qutrit matrix as a 4x4 qubit-pair matrix acting trivially on |11>.
pub fn embed_qutrit_matrix(m: &Mat) -> Mat {
    Matrix::direct_sum(&[m.clone(), Matrix::identity(1)])
}

#[derive(Clone, Copy)]
enum Mapped {
    Qubit(usize),
    Pair(usize, usize),
}

struct Lowering {
    map: Vec<Mapped>,
    n_wires: usize,
    busy: Vec<bool>,
    pool: Vec<usize>,
}

fn is_one(z: C64) -> bool {
    (z - re::<f64>(1.0)).norm() < EPS
}

impl Lowering {
    fn controls(&self, cs: &[Control]) -> Vec<Control> {
        let mut out = Vec::new();
        for c in cs {
            match self.map[c.wire] {
                Mapped::Qubit(q) => out.push(Control { wire: q, value: c.value }),
                Mapped::Pair(hi, lo) => match c.value {
                    0 => {
                        out.push(Control { wire: hi, value: 0 });
                        out.push(Control { wire: lo, value: 0 });
                    }
                    1 => out.push(Control { wire: lo, value: 1 }),
                    _ => out.push(Control { wire: hi, value: 1 }),
                },
            }
        }
        out
    }

    fn alloc(&mut self) -> usize {
        if let Some(i) = self.busy.iter().position(|b| !b) {
            self.busy[i] = true;
            return self.pool[i];
        }
        let w = self.n_wires;
        self.n_wires += 1;
        self.pool.push(w);
        self.busy.push(true);
        w
    }

    fn free(&mut self, w: usize) {
        let i = self.pool.iter().position(|&p| p == w).expect("pooled ancilla");
        self.busy[i] = false;
    }

    /// Gates for a qutrit operation on (hi, lo), without outer controls, and
    /// the global phase they leave out.
    fn qutrit_ops(&self, g: &Gate, hi: usize, lo: usize) -> Result<(Vec<Gate>, C64), CircuitError> {
        use GateKind::*;
        let cx = |c: usize, t: usize| Gate::new(X, &[t]).ctrl(c, 1);
        let one = re::<f64>(1.0);
        let ops = match g.kind {
            Chi => vec![cx(lo, hi), cx(hi, lo), Gate::new(X, &[hi])],
            ChiDg => vec![Gate::new(X, &[hi]), cx(hi, lo), cx(lo, hi)],
            X12 => vec![Gate::new(Swap, &[hi, lo])],
            X01 => vec![Gate::new(X, &[lo]).ctrl(hi, 0)],
            X02 => vec![Gate::new(X, &[hi]).ctrl(lo, 0)],
            Z1 => vec![Gate::new(Z, &[lo]).ctrl(hi, 0)],
            Z2 => vec![Gate::new(Z, &[hi]).ctrl(lo, 0)],
            _ => {
                let m = g.matrix::<f64>(&[3])?;
                if m.is_diagonal(EPS) {
                    return Ok(diagonal_ops(&m, hi, lo));
                }
                if g.controls.is_empty() {
                    let mut u = Gate::unitary(&[hi, lo], embed_qutrit_matrix(&m));
                    if matches!(g.kind, H3 | H3dg) {
                        u.kind = Unitary;
                    }
                    return Ok((vec![u], one));
                }
                return Ok((two_level_ops(&m, hi, lo), one));
            }
        };
        Ok((ops, one))
    }

    fn lower_gate(&mut self, g: &Gate) -> Result<Vec<Gate>, CircuitError> {
        let outer = self.controls(&g.controls);
        let qutrit_targets = g.targets.iter().any(|&t| matches!(self.map[t], Mapped::Pair(..)));
        let (ops, phase) = if !qutrit_targets {
            let targets: Vec<usize> = g.targets.iter().map(|&t| self.qubit(t)).collect();
            (vec![Gate { kind: g.kind, targets, controls: Vec::new(), params: g.params.clone() }], re(1.0))
        } else if let [t] = g.targets[..] {
            let Mapped::Pair(hi, lo) = self.map[t] else { unreachable!() };
            self.qutrit_ops(g, hi, lo)?
        } else if g.kind == GateKind::Swap {
            let (Mapped::Pair(h1, l1), Mapped::Pair(h2, l2)) = (self.map[g.targets[0]], self.map[g.targets[1]]) else {
                return Err(CircuitError::UnsupportedGate("SWAP of a qutrit with a qubit".into()));
            };
            (vec![Gate::new(GateKind::Swap, &[h1, h2]), Gate::new(GateKind::Swap, &[l1, l2])], re(1.0))
        } else if g.controls.is_empty() {
            (vec![self.embed_multi(g)?], re(1.0))
        } else {
            return Err(CircuitError::UnsupportedGate(format!("controlled {} over several qutrits", g.kind)));
        };
        let mut out: Vec<Gate> = ops.into_iter().map(|op| op.with_controls(&outer)).collect();
        if !is_one(phase) && !outer.is_empty() {
            let c0 = outer[0];
            let mut d = [re(1.0), re(1.0)];
            d[c0.value] = phase;
            out.push(Gate::unitary(&[c0.wire], Matrix::diag(&d)).with_controls(&outer[1..]));
        }
        Ok(out)
    }

    fn qubit(&self, w: usize) -> usize {
        match self.map[w] {
            Mapped::Qubit(q) => q,
            Mapped::Pair(..) => unreachable!(),
        }
    }

    /// Uncontrolled unitary over several wires, qutrits embedded.
    fn embed_multi(&self, g: &Gate) -> Result<Gate, CircuitError> {
        let dims: Vec<usize> = g.targets.iter().map(|&t| if matches!(self.map[t], Mapped::Pair(..)) { 3 } else { 2 }).collect();
        let m = g.matrix::<f64>(&dims)?;
        let mut qubits = Vec::new();
        for &t in &g.targets {
            match self.map[t] {
                Mapped::Qubit(q) => qubits.push(q),
                Mapped::Pair(h, l) => qubits.extend([h, l]),
            }
        }
        // digit tuple (in `dims`) -> qubit index
        let n = 1usize << qubits.len();
        let mut valid = vec![None; n];
        let total: usize = dims.iter().product();
        let to_qubits = |mut s: usize| {
            let mut bits = Vec::new();
            for &d in dims.iter().rev() {
                let v = s % d;
                s /= d;
                if d == 3 {
                    bits.push(v % 2);
                    bits.push(v / 2);
                } else {
                    bits.push(v);
                }
            }
            bits.iter().rev().fold(0, |a, &b| 2 * a + b)
        };
        for s in 0..total {
            valid[to_qubits(s)] = Some(s);
        }
        let big = Matrix::from_fn(n, n, |i, j| match (valid[i], valid[j]) {
            (Some(a), Some(b)) => m[(a, b)],
            (None, None) if i == j => re(1.0),
            _ => re(0.0),
        });
        Ok(Gate::unitary(&qubits, big))
    }
}

/// Diag(d0, d1, d2) = d0 * (phase d1/d0 on low) (phase d2/d0 on high).
fn diagonal_ops(m: &Mat, hi: usize, lo: usize) -> (Vec<Gate>, C64) {
    let d = m.diagonal();
    let mut ops = Vec::new();
    for (w, x) in [(lo, d[1] / d[0]), (hi, d[2] / d[0])] {
        if !is_one(x) {
            ops.push(phase_gate(w, x));
        }
    }
    (ops, d[0])
}

fn phase_gate(w: usize, x: C64) -> Gate {
    if (x - re::<f64>(-1.0)).norm() < EPS {
        return Gate::new(GateKind::Z, &[w]);
    }
    Gate::unitary(&[w], Matrix::diag(&[re(1.0), x]))
}

/// Two-level factorization U = D R_k ... R_1 (time order R_1 first) of a qutrit
/// unitary, with each factor as a singly-targeted qubit gate.
fn two_level_ops(m: &Mat, hi: usize, lo: usize) -> Vec<Gate> {
    let mut v = m.clone();
    let mut rots: Vec<(usize, usize, Mat)> = Vec::new();
    for j in 0..3 {
        for i in j + 1..3 {
            let (a, b) = (v[(j, j)], v[(i, j)]);
            if b.norm() < EPS {
                continue;
            }
            let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
            let r = Matrix::from_rows(vec![vec![a.conj() / n, b.conj() / n], vec![-b / n, a / n]]);
            let mut full = Matrix::identity(3);
            full.set_block(&[j, i], &[j, i], &r);
            v = full.matmul(&v);
            rots.push((j, i, r));
        }
    }
    // U = R_1^dag ... R_k^dag D, so D acts first; D keeps its level-0 phase.
    let d = v.diagonal();
    let mut ops = Vec::new();
    if !(is_one(d[0]) && is_one(d[1])) {
        ops.push(Gate::unitary(&[lo], Matrix::diag(&[d[0], d[1]])).ctrl(hi, 0));
    }
    if !is_one(d[2]) {
        ops.push(Gate::unitary(&[hi], Matrix::diag(&[re(1.0), d[2]])).ctrl(lo, 0));
    }
    for (j, i, r) in rots.into_iter().rev() {
        ops.extend(level_pair_ops(j, i, &r.adjoint(), hi, lo));
    }
    ops
}

fn level_pair_ops(j: usize, i: usize, r: &Mat, hi: usize, lo: usize) -> Vec<Gate> {
    match (j, i) {
        (0, 1) => vec![Gate::unitary(&[lo], r.clone()).ctrl(hi, 0)],
        (0, 2) => vec![Gate::unitary(&[hi], r.clone()).ctrl(lo, 0)],
        _ => {
            // CNOT(lo -> hi) sends 1 -> 3 and keeps 2, so levels (2, 1) sit on
            // lo = (0, 1) with hi = 1.
            let x = group_core::consts::pauli_x::<f64>();
            let cx = Gate::new(GateKind::X, &[hi]).ctrl(lo, 1);
            vec![cx.clone(), Gate::unitary(&[lo], x.matmul(r).matmul(&x)).ctrl(hi, 1), cx]
        }
    }
}

/// Controls beyond which a qubit gate is broken up with AND ancillae.
fn native_controls(k: GateKind) -> usize {
    match k {
        GateKind::X | GateKind::Z => 2,
        _ => 1,
    }
}

fn needs_lowering(g: &Gate) -> bool {
    g.controls.len() > native_controls(g.kind)
}

/// Product-of-controls pattern: gates on one qutrit target controlled by the
/// same qutrit wires at nonzero values, whose operation depends only on the
/// product of the control values mod 3.
struct ProductRun {
    len: usize,
    target: usize,
    wires: Vec<usize>,
    common: Vec<Control>,
    ops: [Option<Gate>; 2],
}

fn product_run(gates: &[Gate], dims: &[usize]) -> Option<ProductRun> {
    let g0 = gates.first()?;
    if g0.targets.len() != 1 || dims[g0.targets[0]] != 3 {
        return None;
    }
    let split = |g: &Gate| {
        let (p, o): (Vec<Control>, Vec<Control>) =
            g.controls.iter().partition(|c| dims[c.wire] == 3 && c.value != 0);
        let mut p = p;
        p.sort();
        let mut o = o;
        o.sort();
        (p, o)
    };
    let (p0, common) = split(g0);
    if p0.len() < 2 || p0.len() > 3 {
        return None;
    }
    let wires: Vec<usize> = p0.iter().map(|c| c.wire).collect();
    let bare = |g: &Gate| Gate { controls: Vec::new(), ..g.clone() };
    let mut ops: [Option<Gate>; 2] = [None, None];
    let mut seen = BTreeSet::new();
    let mut len = 0;
    for g in gates {
        if g.targets != g0.targets {
            break;
        }
        let (p, o) = split(g);
        if o != common || p.iter().map(|c| c.wire).collect::<Vec<_>>() != wires {
            break;
        }
        let vals: Vec<usize> = p.iter().map(|c| c.value).collect();
        let class = vals.iter().filter(|&&v| v == 2).count() % 2;
        match &ops[class] {
            Some(op) if *op != bare(g) => break,
            Some(_) => {}
            None => ops[class] = Some(bare(g)),
        }
        if !seen.insert(vals) {
            break;
        }
        len += 1;
    }
    let full = 1usize << (wires.len() - 1);
    let count = |cl: usize| seen.iter().filter(|v| v.iter().filter(|&&x| x == 2).count() % 2 == cl).count();
    for cl in 0..2 {
        let k = count(cl);
        if !(k == 0 && ops[cl].is_none() || k == full) {
            return None;
        }
    }
    if len < 2 {
        return None;
    }
    Some(ProductRun { len, target: g0.targets[0], wires, common, ops })
}

impl Lowering {
    /// Predicates [prod = 1 mod 3] and [prod = 2 mod 3] into two ancillae,
    /// then singly-controlled operations.
    fn product_block(&mut self, run: ProductRun) -> Result<Vec<Gate>, CircuitError> {
        use GateKind::X;
        let pairs: Vec<(usize, usize)> = run
            .wires
            .iter()
            .map(|&w| match self.map[w] {
                Mapped::Pair(h, l) => (h, l),
                Mapped::Qubit(_) => unreachable!(),
            })
            .collect();
        let mut pre = Vec::new();
        // low <- low xor high: nonzero flag; last high <- parity of highs
        for &(h, l) in &pairs {
            pre.push(Gate::new(X, &[l]).ctrl(h, 1));
        }
        let (hl, _) = pairs[pairs.len() - 1];
        for &(h, _) in &pairs[..pairs.len() - 1] {
            pre.push(Gate::new(X, &[hl]).ctrl(h, 1));
        }
        let a1 = self.alloc();
        let a2 = self.alloc();
        let mut ands = Vec::new();
        if let [(_, l0), (_, l1), (_, l2)] = pairs[..] {
            let s = self.alloc();
            let t = Gate::new(X, &[s]).ctrl(l0, 1).ctrl(l1, 1);
            ands.push(t.clone());
            ands.push(Gate::new(X, &[a1]).ctrl(s, 1).ctrl(l2, 1));
            ands.push(t);
            self.free(s);
        } else {
            ands.push(Gate::new(X, &[a1]).ctrl(pairs[0].1, 1).ctrl(pairs[1].1, 1));
        }
        ands.push(Gate::new(X, &[a2]).ctrl(a1, 1).ctrl(hl, 1));
        ands.push(Gate::new(X, &[a1]).ctrl(a2, 1));
        let mut out: Vec<Gate> = pre.iter().chain(&ands).cloned().collect();
        let common = self.controls(&run.common);
        for (op, anc) in run.ops.iter().zip([a1, a2]) {
            let Some(op) = op else { continue };
            let Mapped::Pair(hi, lo) = self.map[run.target] else { unreachable!() };
            let (ops, phase) = self.qutrit_ops(op, hi, lo)?;
            let ctl: Vec<Control> = std::iter::once(Control { wire: anc, value: 1 }).chain(common.iter().copied()).collect();
            let mut body: Vec<Gate> = ops.into_iter().map(|g| g.with_controls(&ctl)).collect();
            if !is_one(phase) {
                body.push(Gate::unitary(&[anc], Matrix::diag(&[re(1.0), phase])).with_controls(&common));
            }
            out.extend(self.lower_controls(body));
        }
        out.extend(ands.iter().rev().cloned());
        out.extend(pre.iter().rev().cloned());
        self.free(a1);
        self.free(a2);
        Ok(out)
    }

    /// Break up controls with Toffoli AND ladders, sharing one ladder across
    /// consecutive gates with common controls.
    fn lower_controls(&mut self, gates: Vec<Gate>) -> Vec<Gate> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < gates.len() {
            let g = &gates[i];
            if !needs_lowering(g) {
                out.push(g.clone());
                i += 1;
                continue;
            }
            let mut shared: BTreeSet<Control> = g.controls.iter().copied().collect();
            let touches = |g: &Gate, s: &BTreeSet<Control>| g.targets.iter().any(|t| s.iter().any(|c| c.wire == *t));
            let mut j = i + 1;
            while j < gates.len() {
                let next: BTreeSet<Control> =
                    shared.intersection(&gates[j].controls.iter().copied().collect()).copied().collect();
                if next.len() < 2 || touches(&gates[j], &next) {
                    break;
                }
                shared = next;
                j += 1;
            }
            let mut chosen: Vec<Control> = shared.into_iter().collect();
            if j == i + 1 {
                chosen.truncate(g.controls.len() - native_controls(g.kind) + 1);
            }
            let (a, ladder, temps) = self.and_ladder(&chosen);
            out.extend(ladder.iter().cloned());
            let body: Vec<Gate> = gates[i..j]
                .iter()
                .map(|g| {
                    let mut h = g.clone();
                    h.controls.retain(|c| !chosen.contains(c));
                    h.controls.insert(0, Control { wire: a, value: 1 });
                    h
                })
                .collect();
            let lowered = self.lower_controls(body);
            out.extend(lowered);
            out.extend(ladder.into_iter().rev());
            for t in temps {
                self.free(t);
            }
            i = j;
        }
        out
    }

    fn and_ladder(&mut self, cs: &[Control]) -> (usize, Vec<Gate>, Vec<usize>) {
        let mut gates = Vec::new();
        let mut temps = Vec::new();
        let mut acc = cs[0];
        for c in &cs[1..] {
            let a = self.alloc();
            gates.push(Gate::new(GateKind::X, &[a]).with_controls(&[acc, *c]));
            temps.push(a);
            acc = Control { wire: a, value: 1 };
        }
        (acc.wire, gates, temps)
    }
}

/// Gates over qubits, with qutrit wire i replaced by a (high, low) pair.
#[derive(Clone, Debug)]
pub struct Lowered {
    /// Qubit wires holding each input wire, in input order.
    pub wires: Vec<Vec<usize>>,
    /// Total qubits, scratch ancillae last.
    pub n_qubits: usize,
    pub gates: Vec<Gate>,
}

/// Lower gates over wires of the given dimensions. Qubits and pairs are laid
/// out in wire order; scratch ancillae follow.
pub fn lower_gates(dims: &[usize], gates: &[Gate]) -> Result<Lowered, CircuitError> {
    let mut map = Vec::with_capacity(dims.len());
    let mut next = 0;
    for &d in dims {
        map.push(if d == 3 {
            next += 2;
            Mapped::Pair(next - 2, next - 1)
        } else {
            next += 1;
            Mapped::Qubit(next - 1)
        });
    }
    let mut lw = Lowering { map, n_wires: next, busy: Vec::new(), pool: Vec::new() };
    let mut i = 0;
    let mut out = Vec::new();
    let mut pending = Vec::new();
    while i < gates.len() {
        if let Some(run) = product_run(&gates[i..], dims) {
            i += run.len;
            out.extend(lw.lower_controls(std::mem::take(&mut pending)));
            out.extend(lw.product_block(run)?);
            continue;
        }
        pending.extend(lw.lower_gate(&gates[i])?);
        i += 1;
    }
    out.extend(lw.lower_controls(pending));
    let wires = lw
        .map
        .iter()
        .map(|m| match *m {
            Mapped::Qubit(q) => vec![q],
            Mapped::Pair(h, l) => vec![h, l],
        })
        .collect();
    Ok(Lowered { wires, n_qubits: lw.n_wires, gates: out })
}

/// Lower a mixed circuit onto qubits. Gates already on qubits pass through.
pub fn transpile(c: &Circuit) -> Result<Circuit, CircuitError> {
    if c.arch() == Arch::Qubit {
        c.validate()?;
        return Ok(c.clone());
    }
    let low = lower_gates(&c.dims(), &c.gates)?;
    let mut out = Circuit::new(c.group(), Arch::Qubit);
    while out.wires.len() < low.n_qubits {
        out.add_ancilla();
    }
    out.gates = low.gates;
    out.validate()?;
    Ok(out)
}

//! Gate sequences for unitaries on a small mixed-radix register.
//!
//! The support graph of the matrix splits it into commuting pieces: a
//! monomial part (permutation followed by phases), families of single-wire
//! unitaries multiplexed by the other wires, and a Givens fallback for the
//! rest.

use circuit_ir::{Control, Gate, GateKind};
use group_core::scalar::re;
use group_core::{Mat, Matrix, C64};
use simulator_verifier::digits_of;
use std::collections::BTreeMap;

const ZERO: f64 = 1e-10;
const SAME: f64 = 1e-10;

const QUBIT_KINDS: [GateKind; 8] =
    [GateKind::X, GateKind::Z, GateKind::S, GateKind::Sdg, GateKind::T, GateKind::Tdg, GateKind::H, GateKind::Y];
const QUTRIT_KINDS: [GateKind; 14] = [
    GateKind::Chi,
    GateKind::ChiDg,
    GateKind::X01,
    GateKind::X02,
    GateKind::X12,
    GateKind::Z0,
    GateKind::Z1,
    GateKind::Z2,
    GateKind::T3,
    GateKind::T3dg,
    GateKind::S3,
    GateKind::S3dg,
    GateKind::H3,
    GateKind::H3dg,
];

/// Gate applying `m` to one wire, named when it matches the catalogue.
pub fn gate_on(w: usize, m: &Mat) -> Gate {
    let dim = m.rows();
    let kinds: &[GateKind] = if dim == 2 { &QUBIT_KINDS } else { &QUTRIT_KINDS };
    for &k in kinds {
        let g = Gate::new(k, &[w]);
        if g.matrix::<f64>(&[dim]).map(|x| x.approx_eq(m, 1e-12)).unwrap_or(false) {
            return g;
        }
    }
    if dim == 2 && m.is_diagonal(1e-14) && (m[(0, 0)] - re(1.0)).norm() < 1e-14 {
        return Gate::phase(w, m[(1, 1)].arg());
    }
    Gate::unitary(&[w], m.clone())
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

fn digit(dims: &[usize], s: usize, w: usize) -> usize {
    (s / strides(dims)[w]) % dims[w]
}

fn with_digit(dims: &[usize], s: usize, w: usize, v: usize) -> usize {
    let st = strides(dims)[w];
    s - digit(dims, s, w) * st + v * st
}

/// Unitaries on wire `w`, keyed by the register state with that wire zeroed.
/// Missing contexts act as the identity.
struct Family {
    wire: usize,
    ops: BTreeMap<usize, Mat>,
}

impl Family {
    fn new(wire: usize) -> Self {
        Family { wire, ops: BTreeMap::new() }
    }

    fn op(&self, ctx: usize, dim: usize) -> Mat {
        self.ops.get(&ctx).cloned().unwrap_or_else(|| Matrix::identity(dim))
    }

    /// Wires the operation depends on.
    fn depends_on(&self, dims: &[usize]) -> Vec<usize> {
        let d = dims[self.wire];
        let mut out = Vec::new();
        for v in 0..dims.len() {
            if v == self.wire {
                continue;
            }
            let dep = self.ops.iter().any(|(&ctx, m)| {
                (0..dims[v]).any(|val| {
                    let other = with_digit(dims, ctx, v, val);
                    other != ctx && !self.op(other, d).approx_eq(m, SAME)
                })
            });
            if dep {
                out.push(v);
            }
        }
        out
    }

    /// One operator per assignment of the dependent wires, identities dropped.
    fn branches(&self, dims: &[usize]) -> (Vec<usize>, Vec<(Vec<usize>, Mat)>) {
        let deps = self.depends_on(dims);
        let mut seen = BTreeMap::new();
        for (&ctx, m) in &self.ops {
            let key: Vec<usize> = deps.iter().map(|&v| digit(dims, ctx, v)).collect();
            seen.entry(key).or_insert_with(|| m.clone());
        }
        let branches = seen.into_iter().filter(|(_, m)| !m.is_identity(SAME)).collect();
        (deps, branches)
    }

    fn plain_gates(&self, dims: &[usize]) -> Vec<Gate> {
        let (deps, branches) = self.branches(dims);
        branches
            .into_iter()
            .map(|(vals, m)| {
                let mut g = gate_on(self.wire, &m);
                for (&v, &x) in deps.iter().zip(&vals) {
                    g = g.ctrl(v, x);
                }
                g
            })
            .collect()
    }

    /// Gates for the family, going through a joint eigenbasis when the
    /// branches commute and that is cheaper.
    fn gates(&self, dims: &[usize]) -> Vec<Gate> {
        let plain = self.plain_gates(dims);
        let (deps, branches) = self.branches(dims);
        if branches.len() < 2 || branches.iter().all(|(_, m)| is_monomial(m)) {
            return plain;
        }
        let Some(q) = joint_eigenbasis(&branches.iter().map(|(_, m)| m.clone()).collect::<Vec<_>>()) else {
            return plain;
        };
        let n: usize = dims.iter().product();
        let w = self.wire;
        let mut diag = vec![re(1.0); n];
        let lookup: BTreeMap<Vec<usize>, Vec<C64>> =
            branches.iter().map(|(k, m)| (k.clone(), q.adjoint().matmul(m).matmul(&q).diagonal())).collect();
        for (s, x) in diag.iter_mut().enumerate() {
            let key: Vec<usize> = deps.iter().map(|&v| digit(dims, s, v)).collect();
            if let Some(l) = lookup.get(&key) {
                *x = l[digit(dims, s, w)];
            }
        }
        let mut out = vec![gate_on(w, &q.adjoint())];
        out.extend(diagonal_gates(dims, &diag));
        out.push(gate_on(w, &q));
        if cost(&out) < cost(&plain) {
            out
        } else {
            plain
        }
    }
}

fn is_monomial(m: &Mat) -> bool {
    (0..m.cols()).all(|j| (0..m.rows()).filter(|&i| m[(i, j)].norm() > ZERO).count() == 1)
}

/// Rough weight: multi-controlled gates are what the qubit lowering pays for.
fn cost(gates: &[Gate]) -> usize {
    gates
        .iter()
        .map(|g| {
            let k = g.controls.len();
            let base = if k == 0 { 1 } else { 4 << k };
            if diagonal_gate(g) {
                base
            } else {
                2 * base
            }
        })
        .sum()
}

fn diagonal_gate(g: &Gate) -> bool {
    use GateKind::*;
    match &g.params {
        circuit_ir::Params::Matrix(m) => m.is_diagonal(1e-14),
        circuit_ir::Params::Theta(_) => true,
        circuit_ir::Params::None => matches!(g.kind, Z | S | Sdg | T | Tdg | Z0 | Z1 | Z2 | T3 | T3dg | S3 | S3dg),
    }
}

fn joint_eigenbasis(ms: &[Mat]) -> Option<Mat> {
    for a in ms {
        for b in ms {
            if !a.matmul(b).approx_eq(&b.matmul(a), 1e-9) {
                return None;
            }
        }
    }
    let d = ms[0].rows();
    let mut h = Matrix::zeros(d, d);
    for (k, m) in ms.iter().enumerate() {
        let a = C64::new(1.0, 0.0) / C64::new((k as f64 + 2.0).sqrt(), 1.0);
        h = h.add(&m.scale(a)).add(&m.adjoint().scale(a.conj()));
    }
    let (_, q) = h.hermitian_eigen();
    ms.iter().all(|m| q.adjoint().matmul(m).matmul(&q).is_diagonal(1e-9)).then_some(q)
}

/// Phases on every register state, up to a global phase.
pub fn diagonal_gates(dims: &[usize], d: &[C64]) -> Vec<Gate> {
    let n = d.len();
    let mut d = d.to_vec();
    let mut active: Vec<usize> = (0..dims.len()).collect();
    let mut out = Vec::new();
    while !active.is_empty() {
        let mut best: Option<(usize, Vec<Gate>)> = None;
        for &w in &active {
            let mut fam = Family::new(w);
            for s in 0..n {
                if digit(dims, s, w) != 0 {
                    continue;
                }
                let r: Vec<C64> = (0..dims[w]).map(|l| d[with_digit(dims, s, w, l)] / d[s]).collect();
                let m = Matrix::diag(&r);
                if !m.is_identity(SAME) {
                    fam.ops.insert(s, m);
                }
            }
            let gs = fam.plain_gates(dims);
            if best.as_ref().map_or(true, |(_, b)| cost(&gs) < cost(b)) {
                best = Some((w, gs));
            }
        }
        let (w, gs) = best.unwrap();
        out.extend(gs);
        for s in 0..n {
            d[s] = d[with_digit(dims, s, w, 0)];
        }
        active.retain(|&x| x != w);
    }
    out
}

/// Gates realizing the basis permutation s -> pi[s].
pub fn permutation_gates(dims: &[usize], pi: &[usize]) -> Vec<Gate> {
    if pi.iter().enumerate().all(|(s, &t)| s == t) {
        return Vec::new();
    }
    let moved: Vec<usize> =
        (0..dims.len()).filter(|&w| (0..pi.len()).any(|s| digit(dims, s, w) != digit(dims, pi[s], w))).collect();
    if moved.len() == 1 {
        return single_wire_permutation(dims, moved[0], pi);
    }
    let mut best: Option<Vec<Gate>> = affine_permutation(dims, &moved, pi);
    let states: Vec<usize> = (0..pi.len()).filter(|&s| pi[s] != s).collect();
    let sector = (0..dims.len())
        .find(|w| !moved.contains(w) && states.iter().any(|&s| digit(dims, s, *w) != digit(dims, states[0], *w)));
    if let Some(w) = sector {
        let mut gs = Vec::new();
        for v in 0..dims[w] {
            let part: Vec<usize> = (0..pi.len()).map(|s| if digit(dims, s, w) == v { pi[s] } else { s }).collect();
            gs.extend(permutation_gates(dims, &part));
        }
        if best.as_ref().map_or(true, |b| cost(&gs) < cost(b)) {
            best = Some(gs);
        }
    }
    for &w in &moved {
        let (l1, mid, l3) = clos_split(dims, w, pi);
        let mut gs = single_wire_permutation(dims, w, &l1);
        gs.extend(permutation_gates(dims, &mid));
        gs.extend(single_wire_permutation(dims, w, &l3));
        if best.as_ref().map_or(true, |b| cost(&gs) < cost(b)) {
            best = Some(gs);
        }
    }
    best.unwrap()
}

/// pi as an affine map over GF(2) on the moved qubit wires, controlled by the
/// wires that are constant over the moved states.
fn affine_permutation(dims: &[usize], moved: &[usize], pi: &[usize]) -> Option<Vec<Gate>> {
    if moved.iter().any(|&w| dims[w] != 2) {
        return None;
    }
    let states: Vec<usize> = (0..pi.len()).filter(|&s| pi[s] != s).collect();
    let controls: Vec<Control> = (0..dims.len())
        .filter(|w| !moved.contains(w))
        .filter(|&w| states.iter().all(|&s| digit(dims, s, w) == digit(dims, states[0], w)))
        .map(|w| Control { wire: w, value: digit(dims, states[0], w) })
        .collect();
    let k = moved.len();
    let bits = |s: usize| moved.iter().enumerate().fold(0usize, |acc, (i, &w)| acc | digit(dims, s, w) << i);
    let mut f: Vec<Option<usize>> = vec![None; 1 << k];
    for s in 0..pi.len() {
        if controls.iter().any(|c| digit(dims, s, c.wire) != c.value) {
            continue;
        }
        let (a, b) = (bits(s), bits(pi[s]));
        let rest_same = (0..dims.len()).all(|w| moved.contains(&w) || digit(dims, s, w) == digit(dims, pi[s], w));
        if !rest_same || f[a].is_some_and(|x| x != b) {
            return None;
        }
        f[a] = Some(b);
    }
    let f: Vec<usize> = f.into_iter().collect::<Option<_>>()?;
    let offset = f[0];
    let mut cols: Vec<usize> = (0..k).map(|i| f[1 << i] ^ offset).collect();
    for v in 0..1usize << k {
        let lin = (0..k).filter(|i| v >> i & 1 == 1).fold(0, |acc, i| acc ^ cols[i]);
        if lin ^ offset != f[v] {
            return None;
        }
    }
    // rows[t] = bit mask over sources: output bit t = parity(v & rows[t])
    let mut rows: Vec<usize> = (0..k).map(|t| (0..k).filter(|&i| cols[i] >> t & 1 == 1).fold(0, |a, i| a | 1 << i)).collect();
    cols.clear();
    let mut ops: Vec<(usize, usize)> = Vec::new();
    for j in 0..k {
        if rows[j] >> j & 1 == 0 {
            let i = (j + 1..k).find(|&i| rows[i] >> j & 1 == 1)?;
            rows[j] ^= rows[i];
            ops.push((j, i));
        }
        for i in 0..k {
            if i != j && rows[i] >> j & 1 == 1 {
                rows[i] ^= rows[j];
                ops.push((i, j));
            }
        }
    }
    let mut gates: Vec<Gate> = ops
        .into_iter()
        .rev()
        .map(|(t, src)| Gate::new(GateKind::X, &[moved[t]]).ctrl(moved[src], 1).with_controls(&controls))
        .collect();
    for (i, &w) in moved.iter().enumerate() {
        if offset >> i & 1 == 1 {
            gates.push(Gate::new(GateKind::X, &[w]).with_controls(&controls));
        }
    }
    Some(gates)
}

fn single_wire_permutation(dims: &[usize], w: usize, pi: &[usize]) -> Vec<Gate> {
    let d = dims[w];
    let mut fam = Family::new(w);
    for (s, &t) in pi.iter().enumerate() {
        if s != t {
            let ctx = with_digit(dims, s, w, 0);
            fam.ops.entry(ctx).or_insert_with(|| Matrix::zeros(d, d));
        }
    }
    for (s, &t) in pi.iter().enumerate() {
        let ctx = with_digit(dims, s, w, 0);
        if let Some(m) = fam.ops.get_mut(&ctx) {
            m[(digit(dims, t, w), digit(dims, s, w))] = re(1.0);
        }
    }
    fam.plain_gates(dims)
}

/// pi = l3 . mid . l1 where l1 and l3 only change wire `w` and mid keeps it.
fn clos_split(dims: &[usize], w: usize, pi: &[usize]) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let n = pi.len();
    let d = dims[w];
    let ctx = |s: usize| with_digit(dims, s, w, 0);
    // bipartite multigraph on contexts, one edge per state
    let mut color = vec![usize::MAX; n];
    for col in 0..d {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for s in (0..n).filter(|&s| color[s] == usize::MAX) {
            adj.entry(ctx(s)).or_default().push(s);
        }
        for v in adj.values_mut() {
            v.sort_by_key(|&s| {
                let a = digit(dims, s, w) != col;
                let b = digit(dims, pi[s], w) != col;
                (a as u8 + b as u8, s)
            });
        }
        let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
        let lefts: Vec<usize> = adj.keys().copied().collect();
        for &l in &lefts {
            let mut seen = BTreeMap::new();
            let ok = augment(l, &adj, pi, &ctx, &mut owner, &mut seen);
            assert!(ok, "regular bipartite multigraph has a perfect matching");
        }
        for &s in owner.values() {
            color[s] = col;
        }
    }
    let mut l1 = vec![0; n];
    let mut mid = vec![0; n];
    let mut l3 = vec![0; n];
    for s in 0..n {
        let a = with_digit(dims, s, w, color[s]);
        let b = with_digit(dims, pi[s], w, color[s]);
        l1[s] = a;
        mid[a] = b;
        l3[b] = pi[s];
    }
    (l1, mid, l3)
}

fn augment(
    l: usize,
    adj: &BTreeMap<usize, Vec<usize>>,
    pi: &[usize],
    ctx: &dyn Fn(usize) -> usize,
    owner: &mut BTreeMap<usize, usize>,
    seen: &mut BTreeMap<usize, ()>,
) -> bool {
    for &s in &adj[&l] {
        let r = ctx(pi[s]);
        if seen.insert(r, ()).is_some() {
            continue;
        }
        let free = match owner.get(&r) {
            None => true,
            Some(&prev) => augment(ctx(prev), adj, pi, ctx, owner, seen),
        };
        if free {
            owner.insert(r, s);
            return true;
        }
    }
    false
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    p[x] = r;
    r
}

/// Gates for a unitary on the whole register, up to a global phase.
pub fn decompose(dims: &[usize], u: &Mat) -> Vec<Gate> {
    let n = u.rows();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..n {
            if i != j && u[(i, j)].norm() > ZERO {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for s in 0..n {
        let r = find(&mut parent, s);
        comps.entry(r).or_default().push(s);
    }
    let mut pi: Vec<usize> = (0..n).collect();
    let mut phases = vec![re(1.0); n];
    let mut families: BTreeMap<usize, Family> = BTreeMap::new();
    let mut rest = Vec::new();
    for comp in comps.into_values() {
        let monomial = comp.iter().all(|&j| comp.iter().filter(|&&i| u[(i, j)].norm() > ZERO).count() == 1);
        if monomial {
            for &j in &comp {
                let i = *comp.iter().find(|&&i| u[(i, j)].norm() > ZERO).unwrap();
                pi[j] = i;
                phases[i] = u[(i, j)];
            }
            continue;
        }
        let varying: Vec<usize> =
            (0..dims.len()).filter(|&w| comp.iter().any(|&s| digit(dims, s, w) != digit(dims, comp[0], w))).collect();
        if let [w] = varying[..] {
            let fam = families.entry(w).or_insert_with(|| Family::new(w));
            let ctx = with_digit(dims, comp[0], w, 0);
            let m = fam.ops.entry(ctx).or_insert_with(|| Matrix::identity(dims[w]));
            for &i in &comp {
                for &j in &comp {
                    m[(digit(dims, i, w), digit(dims, j, w))] = u[(i, j)];
                }
            }
        } else {
            rest.push(comp);
        }
    }
    let mut out = permutation_gates(dims, &pi);
    out.extend(diagonal_gates(dims, &phases));
    for fam in families.values() {
        out.extend(fam.gates(dims));
    }
    for comp in rest {
        out.extend(givens_gates(dims, &comp, &u.select(&comp, &comp)));
    }
    out
}

fn differing(dims: &[usize], a: usize, b: usize) -> Vec<usize> {
    (0..dims.len()).filter(|&w| digit(dims, a, w) != digit(dims, b, w)).collect()
}

/// Level swap between two states that differ on one wire, controlled on the
/// rest of the register.
fn two_level(dims: &[usize], a: usize, b: usize, g: &Mat) -> Gate {
    let w = differing(dims, a, b)[0];
    let d = dims[w];
    let (la, lb) = (digit(dims, a, w), digit(dims, b, w));
    let mut m = Matrix::identity(d);
    m[(la, la)] = g[(0, 0)];
    m[(la, lb)] = g[(0, 1)];
    m[(lb, la)] = g[(1, 0)];
    m[(lb, lb)] = g[(1, 1)];
    let da = digits_of(dims, a);
    let mut gate = gate_on(w, &m);
    for (v, &x) in da.iter().enumerate() {
        if v != w {
            gate = gate.ctrl(v, x);
        }
    }
    gate
}

/// Two-level unitary on states a, b anywhere in the register: b is carried
/// next to a by fully controlled level swaps first.
fn two_level_far(dims: &[usize], a: usize, b: usize, g: &Mat) -> Vec<Gate> {
    let swap = Matrix::<f64>::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]);
    let mut path = vec![a];
    let mut cur = a;
    for w in differing(dims, a, b) {
        cur = with_digit(dims, cur, w, digit(dims, b, w));
        path.push(cur);
    }
    let mut moves = Vec::new();
    for k in (1..path.len() - 1).rev() {
        moves.push(two_level(dims, path[k], path[k + 1], &swap));
    }
    let mut out = moves.clone();
    out.push(two_level(dims, a, path[1], g));
    out.extend(moves.into_iter().rev());
    out
}

fn givens_gates(dims: &[usize], comp: &[usize], v: &Mat) -> Vec<Gate> {
    // order the states so neighbours differ on as few wires as possible
    let k = comp.len();
    let mut order = vec![0usize];
    let mut used = vec![false; k];
    used[0] = true;
    while order.len() < k {
        let last = comp[*order.last().unwrap()];
        let next = (0..k).filter(|&i| !used[i]).min_by_key(|&i| (differing(dims, last, comp[i]).len(), i)).unwrap();
        used[next] = true;
        order.push(next);
    }
    let states: Vec<usize> = order.iter().map(|&i| comp[i]).collect();
    let mut m = v.select(&order, &order);
    let mut rots: Vec<(usize, Mat)> = Vec::new();
    for j in 0..k {
        for i in (j + 1..k).rev() {
            let (a, b) = (m[(i - 1, j)], m[(i, j)]);
            if b.norm() < 1e-14 {
                continue;
            }
            let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
            let g = Matrix::from_rows(vec![vec![a.conj() / r, b.conj() / r], vec![-b / r, a / r]]);
            let rows = [i - 1, i];
            let all: Vec<usize> = (0..k).collect();
            let blk = g.matmul(&m.select(&rows, &all));
            m.set_block(&rows, &all, &blk);
            rots.push((i - 1, g));
        }
    }
    // v = g_1^dag ... g_r^dag D
    let n: usize = dims.iter().product();
    let mut phases = vec![re(1.0); n];
    for (i, &s) in states.iter().enumerate() {
        phases[s] = m[(i, i)];
    }
    let mut out = diagonal_gates(dims, &phases);
    for (i, g) in rots.into_iter().rev() {
        let (a, b) = (states[i], states[i + 1]);
        if differing(dims, a, b).len() == 1 {
            out.push(two_level(dims, a, b, &g.adjoint()));
        } else {
            out.extend(two_level_far(dims, a, b, &g.adjoint()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use circuit_ir::{Arch, Circuit};
    use group_core::GroupId;
    use simulator_verifier::State;

    fn operator(dims: &[usize], gates: &[Gate]) -> Mat {
        let n: usize = dims.iter().product();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let mut s = State::<f64>::basis(dims, &digits_of(dims, j));
            for g in gates {
                s.apply_gate(g).unwrap();
            }
            m.set_col(j, &s.amps);
        }
        m
    }

    fn same_up_to_phase(a: &Mat, b: &Mat) -> bool {
        simulator_verifier::phase_distance(a, b) < 1e-9
    }

    #[test]
    fn toffoli_permutation() {
        let dims = [2, 2, 2];
        let pi: Vec<usize> = (0..8).map(|s| if s >> 1 == 3 { s ^ 1 } else { s }).collect();
        let gs = permutation_gates(&dims, &pi);
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].kind, GateKind::X);
        assert_eq!(gs[0].controls.len(), 2);
        assert!(operator(&dims, &gs).approx_eq(&Matrix::permutation(&pi), 1e-12));
    }

    #[test]
    fn linear_cycle_is_two_cnots() {
        // qutrit x, qubits c b a: (c, b) -> (c ^ b, c) where x = 1 and a = 0
        let dims = [3, 2, 2, 2];
        let pi: Vec<usize> = (0..24)
            .map(|s| {
                let (x, c, b, a) = (s / 8, s >> 2 & 1, s >> 1 & 1, s & 1);
                if x == 1 && a == 0 {
                    8 + ((c ^ b) << 2) + (c << 1)
                } else {
                    s
                }
            })
            .collect();
        let gs = permutation_gates(&dims, &pi);
        assert_eq!(gs.len(), 2);
        assert!(gs.iter().all(|g| g.kind == GateKind::X && g.controls.len() == 3));
        assert!(operator(&dims, &gs).approx_eq(&Matrix::permutation(&pi), 1e-12));
    }

    #[test]
    fn cyclic_shift_of_the_register() {
        let dims = [3, 2, 3];
        let pi: Vec<usize> = (0..18).map(|s| (s + 1) % 18).collect();
        let gs = permutation_gates(&dims, &pi);
        assert!(operator(&dims, &gs).approx_eq(&Matrix::permutation(&pi), 1e-12));
    }

    #[test]
    fn product_phase_is_controlled_diagonals() {
        let dims = [3, 3, 3];
        let d: Vec<C64> = (0..27)
            .map(|s| {
                let x = digits_of(&dims, s);
                group_core::consts::w3(-((x[0] * x[1] * x[2]) as i64))
            })
            .collect();
        let gs = diagonal_gates(&dims, &d);
        assert_eq!(gs.len(), 4);
        assert!(gs.iter().all(|g| g.controls.len() == 2));
        assert!(same_up_to_phase(&operator(&dims, &gs), &Matrix::diag(&d)));
    }

    #[test]
    fn separable_diagonal_needs_no_controls() {
        let dims = [2, 3];
        let d: Vec<C64> = (0..6).map(|s| group_core::scalar::cis(0.3 * (s / 3) as f64 + 0.7 * (s % 3) as f64)).collect();
        let gs = diagonal_gates(&dims, &d);
        assert!(gs.iter().all(|g| g.controls.is_empty()));
        assert!(same_up_to_phase(&operator(&dims, &gs), &Matrix::diag(&d)));
    }

    #[test]
    fn dense_block_falls_back_to_givens() {
        let dims = [2, 3, 2];
        let n = 12;
        let h = Matrix::<f64>::from_fn(4, 4, |i, j| C64::new(((i * 3 + j) as f64).sin(), ((i + 2 * j) as f64).cos()));
        let (_, q) = h.add(&h.adjoint()).hermitian_eigen();
        let states = [1, 4, 6, 11];
        let mut u = Matrix::identity(n);
        u.set_block(&states, &states, &q);
        let gs = decompose(&dims, &u);
        assert!(same_up_to_phase(&operator(&dims, &gs), &u));
    }

    #[test]
    fn circuit_validates() {
        let mut c = Circuit::new(GroupId::BT, Arch::Mixed);
        let dims = c.dims();
        let pi: Vec<usize> = (0..24).map(|s| (s * 5) % 24).collect();
        c.extend(permutation_gates(&dims, &pi));
        c.validate().unwrap();
    }
}

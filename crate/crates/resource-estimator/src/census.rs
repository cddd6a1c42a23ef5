use crate::tables::{C3NOT_T, RZ_T_PER_BIT, TOFFOLI_T};
use crate::Symbolic;
use circuit_ir::{Circuit, Gate, GateKind, Params};
use group_core::Mat;
use serde::Serialize;
use std::f64::consts::{FRAC_PI_4, PI};
use std::ops::Add;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GateCounts {
    pub toffoli: u64,
    pub c3not: u64,
    pub cnot: u64,
    pub rz: u64,
    pub t: u64,
    pub s: u64,
    pub h: u64,
    pub swap: u64,
    #[serde(rename = "generic-2q")]
    pub generic_2q: u64,
    /// Paulis and other gates with no T cost.
    pub other: u64,
    /// Gates acting on qutrit wires (mixed circuits only).
    pub qutrit: u64,
}

impl Add for GateCounts {
    type Output = GateCounts;
    fn add(self, o: GateCounts) -> GateCounts {
        GateCounts {
            toffoli: self.toffoli + o.toffoli,
            c3not: self.c3not + o.c3not,
            cnot: self.cnot + o.cnot,
            rz: self.rz + o.rz,
            t: self.t + o.t,
            s: self.s + o.s,
            h: self.h + o.h,
            swap: self.swap + o.swap,
            generic_2q: self.generic_2q + o.generic_2q,
            other: self.other + o.other,
            qutrit: self.qutrit + o.qutrit,
        }
    }
}

impl GateCounts {
    /// Rz count with each generic two-qubit gate taken as 14 rotations.
    pub fn rz_equivalents(&self) -> u64 {
        self.rz + 14 * self.generic_2q
    }

    pub fn t_count(&self) -> Symbolic {
        Symbolic {
            a: TOFFOLI_T * self.toffoli as f64 + C3NOT_T * self.c3not as f64 + self.t as f64,
            b: RZ_T_PER_BIT * self.rz_equivalents() as f64,
        }
    }

    fn consumes_t(&self) -> bool {
        self.toffoli + self.c3not + self.t + self.rz + self.generic_2q > 0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResourceReport {
    pub counts: GateCounts,
    pub ancilla: usize,
    /// Largest number of T-consuming gates in one ASAP layer.
    pub t_width: usize,
    pub t: Symbolic,
    /// False when the circuit still holds qutrit gates.
    pub fault_tolerant: bool,
}

impl ResourceReport {
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "counts": self.counts,
            "ancilla": self.ancilla,
            "t_width": self.t_width,
            "a": self.t.a,
            "b": self.t.b,
            "fault_tolerant": self.fault_tolerant,
        })
        .to_string()
    }
}

enum Angle {
    Clifford,
    T,
    Rotation,
}

fn classify(theta: f64) -> Angle {
    let x = theta / FRAC_PI_4;
    let r = x.round();
    if (x - r).abs() > 1e-9 {
        Angle::Rotation
    } else if (r as i64).rem_euclid(2) == 1 {
        Angle::T
    } else {
        Angle::Clifford
    }
}

fn add_angle(c: &mut GateCounts, theta: f64) {
    match classify(theta) {
        Angle::Clifford => {}
        Angle::T => c.t += 1,
        Angle::Rotation => c.rz += 1,
    }
}

/// U = e^(i alpha) Rz(beta) Ry(gamma) Rz(delta).
fn zyz(u: &Mat) -> (f64, f64, f64, f64) {
    let det = u[(0, 0)] * u[(1, 1)] - u[(0, 1)] * u[(1, 0)];
    let alpha = det.arg() / 2.0;
    let ph = group_core::scalar::cis::<f64>(-alpha);
    let (v00, v10, v11) = (u[(0, 0)] * ph, u[(1, 0)] * ph, u[(1, 1)] * ph);
    let gamma = 2.0 * v10.norm().atan2(v00.norm());
    let sum = if v11.norm() > 1e-12 { 2.0 * v11.arg() } else { 0.0 };
    let diff = if v10.norm() > 1e-12 { 2.0 * v10.arg() } else { 0.0 };
    (alpha, (sum + diff) / 2.0, gamma, (sum - diff) / 2.0)
}

fn single_qubit(c: &mut GateCounts, u: &Mat) {
    if u.is_diagonal(1e-12) {
        add_angle(c, (u[(1, 1)] / u[(0, 0)]).arg());
        return;
    }
    let (_, b, g, d) = zyz(u);
    for th in [b, g, d] {
        add_angle(c, th);
    }
}

/// Controlled 2x2 unitary with a single control.
fn controlled_single(c: &mut GateCounts, u: &Mat) {
    if u.is_diagonal(1e-12) {
        // phases f(ctrl, target) on |10>, |11>; Walsh terms of diag(1, 1, u0, u1)
        let (f2, f3) = (u[(0, 0)].arg(), u[(1, 1)].arg());
        let zc = -(f2 + f3) / 4.0;
        let zt = (f2 - f3) / 4.0;
        let zz = (f3 - f2) / 4.0;
        for th in [zc, zt, zz] {
            add_angle(c, 2.0 * th);
        }
        let x = 2.0 * zz / PI;
        if (x - x.round()).abs() > 1e-9 {
            c.cnot += if (2.0 * x - (2.0 * x).round()).abs() < 1e-9 { 1 } else { 2 };
        }
        return;
    }
    let (a, b, g, d) = zyz(u);
    for th in [a, b, g / 2.0, g / 2.0, (d + b) / 2.0, (d - b) / 2.0] {
        add_angle(c, th);
    }
    c.cnot += 2;
}

fn gate_matrix(g: &Gate) -> Option<Mat> {
    match &g.params {
        Params::Matrix(m) => Some(m.clone()),
        _ => g.matrix::<f64>(&[2]).ok(),
    }
}

fn gate_counts(g: &Gate, dims: &[usize]) -> GateCounts {
    use GateKind::*;
    let mut c = GateCounts::default();
    if g.wires().any(|w| dims[w] != 2) {
        c.qutrit += 1;
        return c;
    }
    let k = g.controls.len();
    match (g.kind, k) {
        (X | Y | Z, 0) => c.other += 1,
        (X | Y | Z, 1) => c.cnot += 1,
        (X | Y | Z, 2) => c.toffoli += 1,
        (X | Y | Z, 3) => c.c3not += 1,
        (H, 0) => c.h += 1,
        (S | Sdg, 0) => c.s += 1,
        (T | Tdg, 0) => c.t += 1,
        (Rz, 0) => match g.params {
            Params::Theta(t) => add_angle(&mut c, t),
            _ => c.rz += 1,
        },
        (Swap, 0) => c.swap += 1,
        (Swap, 1) => {
            c.toffoli += 1;
            c.cnot += 2;
        }
        (Unitary, 0) if g.targets.len() == 2 => c.generic_2q += 1,
        (_, 0) if g.targets.len() == 1 => single_qubit(&mut c, &gate_matrix(g).unwrap()),
        (_, 1) if g.targets.len() == 1 => controlled_single(&mut c, &gate_matrix(g).unwrap()),
        _ => c.other += 1,
    }
    c
}

pub fn census(circuit: &Circuit) -> ResourceReport {
    let dims = circuit.dims();
    let mut counts = GateCounts::default();
    let mut free = vec![0usize; dims.len()];
    let mut layers: Vec<usize> = Vec::new();
    for g in &circuit.gates {
        let gc = gate_counts(g, &dims);
        counts = counts + gc;
        let layer = g.wires().map(|w| free[w]).max().unwrap_or(0);
        g.wires().for_each(|w| free[w] = layer + 1);
        if gc.consumes_t() {
            if layers.len() <= layer {
                layers.resize(layer + 1, 0);
            }
            layers[layer] += 1;
        }
    }
    ResourceReport {
        counts,
        ancilla: circuit.ancilla_count(),
        t_width: layers.into_iter().max().unwrap_or(0),
        t: counts.t_count(),
        fault_tolerant: counts.qutrit == 0,
    }
}

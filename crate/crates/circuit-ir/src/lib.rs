//! Mixed qubit/qutrit circuits: gates, register layouts, JSON and the
//! qutrit-to-qubit transpiler.

mod gate;
pub mod json;
mod transpile;

pub use gate::{Control, Gate, GateKind, Params};
pub use transpile::{embed_qutrit_matrix, lower_gates, transpile, Lowered};

use group_core::{GroupElement, GroupId};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CircuitError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("wire mismatch: {0}")]
    WireMismatch(String),
    #[error("unsupported gate: {0}")]
    UnsupportedGate(String),
    #[error("gate {0} is missing its parameter")]
    MissingParam(String),
    #[error("invalid gate: {0}")]
    InvalidGate(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Arch {
    Mixed,
    Qubit,
}

impl Arch {
    pub fn name(self) -> &'static str {
        match self {
            Arch::Mixed => "mixed",
            Arch::Qubit => "qubit",
        }
    }
}

impl fmt::Display for Arch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Arch {
    type Err = CircuitError;
    fn from_str(s: &str) -> Result<Self, CircuitError> {
        match s {
            "mixed" => Ok(Arch::Mixed),
            "qubit" => Ok(Arch::Qubit),
            _ => Err(CircuitError::Parse(format!("unknown arch `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WireRole {
    GroupRegister,
    Transversal,
    AncillaClean,
}

impl WireRole {
    pub fn name(self) -> &'static str {
        match self {
            WireRole::GroupRegister => "group-register",
            WireRole::Transversal => "transversal",
            WireRole::AncillaClean => "ancilla-clean",
        }
    }
}

impl FromStr for WireRole {
    type Err = CircuitError;
    fn from_str(s: &str) -> Result<Self, CircuitError> {
        match s {
            "group-register" => Ok(WireRole::GroupRegister),
            "transversal" => Ok(WireRole::Transversal),
            "ancilla-clean" => Ok(WireRole::AncillaClean),
            _ => Err(CircuitError::Parse(format!("unknown wire role `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Wire {
    pub id: usize,
    pub dim: usize,
    pub role: WireRole,
}

/// Wires carrying one normal-form exponent. A qutrit exponent on the qubit
/// architecture uses two wires (high, low) with value 2*high + low.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotWires {
    pub letter: char,
    pub bound: usize,
    pub wires: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegisterLayout {
    pub group: GroupId,
    pub arch: Arch,
    /// Register order: last normal-form slot first.
    pub slots: Vec<SlotWires>,
}

impl RegisterLayout {
    pub fn new(group: GroupId, arch: Arch) -> Self {
        let mut next = 0;
        let slots = group
            .register_slots()
            .into_iter()
            .map(|s| {
                let bound = s.bound as usize;
                let n = if arch == Arch::Qubit && bound == 3 { 2 } else { 1 };
                let wires = (next..next + n).collect();
                next += n;
                SlotWires { letter: s.letter, bound, wires }
            })
            .collect();
        RegisterLayout { group, arch, slots }
    }

    pub fn n_wires(&self) -> usize {
        self.slots.iter().map(|s| s.wires.len()).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.slots
            .iter()
            .flat_map(|s| {
                let d = if s.wires.len() == 1 { s.bound } else { 2 };
                std::iter::repeat(d).take(s.wires.len())
            })
            .collect()
    }

    /// Wire values encoding an element (register wires only).
    pub fn encode(&self, g: &GroupElement) -> Vec<usize> {
        let n = g.exps.len();
        let mut vals = vec![0; self.n_wires()];
        for (k, s) in self.slots.iter().enumerate() {
            let e = g.exps[n - 1 - k] as usize;
            match s.wires.as_slice() {
                [w] => vals[*w] = e,
                [hi, lo] => {
                    vals[*hi] = e / 2;
                    vals[*lo] = e % 2;
                }
                _ => unreachable!(),
            }
        }
        vals
    }

    /// Pairs (high, low) standing for qutrits on the qubit architecture.
    pub fn qutrit_pairs(&self) -> Vec<(usize, usize)> {
        self.slots
            .iter()
            .filter_map(|s| match s.wires.as_slice() {
                [hi, lo] => Some((*hi, *lo)),
                _ => None,
            })
            .collect()
    }

    fn roles(&self) -> Vec<WireRole> {
        let tr = self.group.transversal_slot().ok().map(|i| self.group.slots()[i].letter);
        self.slots
            .iter()
            .flat_map(|s| {
                let r = if Some(s.letter) == tr { WireRole::Transversal } else { WireRole::GroupRegister };
                std::iter::repeat(r).take(s.wires.len())
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Circuit {
    pub wires: Vec<Wire>,
    pub gates: Vec<Gate>,
    pub layout: RegisterLayout,
}

impl Circuit {
    /// Empty circuit over the group register.
    pub fn new(group: GroupId, arch: Arch) -> Self {
        let layout = RegisterLayout::new(group, arch);
        let wires = layout
            .dims()
            .into_iter()
            .zip(layout.roles())
            .enumerate()
            .map(|(id, (dim, role))| Wire { id, dim, role })
            .collect();
        Circuit { wires, gates: Vec::new(), layout }
    }

    pub fn group(&self) -> GroupId {
        self.layout.group
    }

    pub fn arch(&self) -> Arch {
        self.layout.arch
    }

    pub fn dims(&self) -> Vec<usize> {
        self.wires.iter().map(|w| w.dim).collect()
    }

    pub fn add_ancilla(&mut self) -> usize {
        let id = self.wires.len();
        self.wires.push(Wire { id, dim: 2, role: WireRole::AncillaClean });
        id
    }

    pub fn ancillas(&self) -> Vec<usize> {
        self.wires.iter().filter(|w| w.role == WireRole::AncillaClean).map(|w| w.id).collect()
    }

    pub fn ancilla_count(&self) -> usize {
        self.ancillas().len()
    }

    pub fn push(&mut self, g: Gate) {
        self.gates.push(g);
    }

    pub fn extend(&mut self, gs: impl IntoIterator<Item = Gate>) {
        self.gates.extend(gs);
    }

    pub fn validate(&self) -> Result<(), CircuitError> {
        for (i, w) in self.wires.iter().enumerate() {
            if w.id != i || !(w.dim == 2 || w.dim == 3) {
                return Err(CircuitError::WireMismatch(format!("wire {i} malformed")));
            }
        }
        let dims = self.layout.dims();
        if self.wires.len() < dims.len() || self.wires.iter().zip(&dims).any(|(w, &d)| w.dim != d) {
            return Err(CircuitError::WireMismatch("register wires do not match the group layout".into()));
        }
        for g in &self.gates {
            self.validate_gate(g)?;
        }
        Ok(())
    }

    fn validate_gate(&self, g: &Gate) -> Result<(), CircuitError> {
        let n = self.wires.len();
        let mut seen = vec![false; n];
        for w in g.wires() {
            if w >= n {
                return Err(CircuitError::WireMismatch(format!("{} uses undeclared wire {w}", g.kind)));
            }
            if seen[w] {
                return Err(CircuitError::InvalidGate(format!("{} repeats wire {w}", g.kind)));
            }
            seen[w] = true;
        }
        for c in &g.controls {
            if c.value >= self.wires[c.wire].dim {
                return Err(CircuitError::InvalidGate(format!("control value {} on wire {}", c.value, c.wire)));
            }
        }
        let dims: Vec<usize> = g.targets.iter().map(|&t| self.wires[t].dim).collect();
        let m = g.matrix::<f64>(&dims)?;
        if !m.is_unitary(1e-11) {
            return Err(CircuitError::InvalidGate(format!("{} is not unitary", g.kind)));
        }
        Ok(())
    }

    pub fn compose(&self, other: &Circuit) -> Result<Circuit, CircuitError> {
        if self.wires != other.wires || self.layout != other.layout {
            return Err(CircuitError::WireMismatch("circuits act on different wires".into()));
        }
        let mut c = self.clone();
        c.gates.extend(other.gates.iter().cloned());
        Ok(c)
    }

    pub fn inverse(&self) -> Circuit {
        let mut c = self.clone();
        c.gates = self.gates.iter().rev().map(Gate::inverse).collect();
        c
    }
}

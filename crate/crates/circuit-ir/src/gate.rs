use crate::CircuitError;
use group_core::consts::*;
use group_core::scalar::{c, cis, re, Real};
use group_core::{Mat, Matrix};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    T,
    Tdg,
    Rz,
    /// Generic single-qubit unitary.
    U,
    X01,
    X02,
    X12,
    Z0,
    Z1,
    Z2,
    H3,
    H3dg,
    /// 1 (+) H3 on a qubit pair.
    H3p,
    H3pdg,
    Chi,
    ChiDg,
    T3,
    T3dg,
    S3,
    S3dg,
    Swap,
    /// Generic unitary over the listed target wires.
    Unitary,
}

const NAMES: [(GateKind, &str); 28] = [
    (GateKind::X, "X"),
    (GateKind::Y, "Y"),
    (GateKind::Z, "Z"),
    (GateKind::H, "H"),
    (GateKind::S, "S"),
    (GateKind::Sdg, "Sdg"),
    (GateKind::T, "T"),
    (GateKind::Tdg, "Tdg"),
    (GateKind::Rz, "Rz"),
    (GateKind::U, "U"),
    (GateKind::X01, "X01"),
    (GateKind::X02, "X02"),
    (GateKind::X12, "X12"),
    (GateKind::Z0, "Z0"),
    (GateKind::Z1, "Z1"),
    (GateKind::Z2, "Z2"),
    (GateKind::H3, "H3"),
    (GateKind::H3dg, "H3dg"),
    (GateKind::H3p, "H3p"),
    (GateKind::H3pdg, "H3pdg"),
    (GateKind::Chi, "chi"),
    (GateKind::ChiDg, "chidg"),
    (GateKind::T3, "T3"),
    (GateKind::T3dg, "T3dg"),
    (GateKind::S3, "S3"),
    (GateKind::S3dg, "S3dg"),
    (GateKind::Swap, "SWAP"),
    (GateKind::Unitary, "unitary"),
];

impl GateKind {
    pub fn name(self) -> &'static str {
        NAMES.iter().find(|(k, _)| *k == self).unwrap().1
    }

    /// Wire dimensions the kind expects, or `None` when set by its matrix.
    pub fn target_dims(self) -> Option<&'static [usize]> {
        use GateKind::*;
        match self {
            X | Y | Z | H | S | Sdg | T | Tdg | Rz | U => Some(&[2]),
            X01 | X02 | X12 | Z0 | Z1 | Z2 | H3 | H3dg | Chi | ChiDg | T3 | T3dg | S3 | S3dg => Some(&[3]),
            H3p | H3pdg => Some(&[2, 2]),
            Swap | Unitary => None,
        }
    }

    fn inverse(self) -> Self {
        use GateKind::*;
        match self {
            S => Sdg,
            Sdg => S,
            T => Tdg,
            Tdg => T,
            H3 => H3dg,
            H3dg => H3,
            H3p => H3pdg,
            H3pdg => H3p,
            Chi => ChiDg,
            ChiDg => Chi,
            T3 => T3dg,
            T3dg => T3,
            S3 => S3dg,
            S3dg => S3,
            k => k,
        }
    }

    /// Permutation of target levels, for gates that are permutations.
    pub fn level_permutation(self) -> Option<Vec<usize>> {
        use GateKind::*;
        Some(match self {
            X => vec![1, 0],
            X01 => vec![1, 0, 2],
            X02 => vec![2, 1, 0],
            X12 => vec![0, 2, 1],
            // chi: |0> -> |2>, |1> -> |0>, |2> -> |1>
            Chi => vec![2, 0, 1],
            ChiDg => vec![1, 2, 0],
            _ => return None,
        })
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateKind {
    type Err = CircuitError;
    fn from_str(s: &str) -> Result<Self, CircuitError> {
        NAMES
            .iter()
            .find(|(_, n)| *n == s)
            .map(|(k, _)| *k)
            .ok_or_else(|| CircuitError::UnsupportedGate(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Control {
    pub wire: usize,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Params {
    None,
    Theta(f64),
    Matrix(Mat),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    pub targets: Vec<usize>,
    pub controls: Vec<Control>,
    pub params: Params,
}

impl Gate {
    pub fn new(kind: GateKind, targets: &[usize]) -> Self {
        Gate { kind, targets: targets.to_vec(), controls: Vec::new(), params: Params::None }
    }

    pub fn rz(target: usize, theta: f64) -> Self {
        Gate { kind: GateKind::Rz, targets: vec![target], controls: Vec::new(), params: Params::Theta(theta) }
    }

    pub fn unitary(targets: &[usize], m: Mat) -> Self {
        let kind = if targets.len() == 1 && m.rows() == 2 { GateKind::U } else { GateKind::Unitary };
        Gate { kind, targets: targets.to_vec(), controls: Vec::new(), params: Params::Matrix(m) }
    }

    /// Diagonal phase gate Diag(1, e^(i theta)) on a qubit.
    pub fn phase(target: usize, theta: f64) -> Self {
        Self::unitary(&[target], Matrix::diag(&[re(1.0), cis(theta)]))
    }

    pub fn ctrl(mut self, wire: usize, value: usize) -> Self {
        self.controls.push(Control { wire, value });
        self
    }

    pub fn with_controls(mut self, cs: &[Control]) -> Self {
        self.controls.extend_from_slice(cs);
        self
    }

    pub fn wires(&self) -> impl Iterator<Item = usize> + '_ {
        self.targets.iter().copied().chain(self.controls.iter().map(|c| c.wire))
    }

    pub fn inverse(&self) -> Gate {
        let params = match &self.params {
            Params::None => Params::None,
            Params::Theta(t) => Params::Theta(-t),
            Params::Matrix(m) => Params::Matrix(m.adjoint()),
        };
        Gate { kind: self.kind.inverse(), targets: self.targets.clone(), controls: self.controls.clone(), params }
    }

    /// Matrix on the target wires (first target most significant). Controls are
    /// applied by the simulator.
    pub fn matrix<R: Real>(&self, dims: &[usize]) -> Result<Matrix<R>, CircuitError> {
        use GateKind::*;
        let bad = || CircuitError::DimensionMismatch(format!("{} on wires of dims {:?}", self.kind, dims));
        if dims.len() != self.targets.len() {
            return Err(bad());
        }
        if let Some(want) = self.kind.target_dims() {
            if want != dims {
                return Err(bad());
            }
        }
        let need_matrix = || match &self.params {
            Params::Matrix(m) => Ok(m.cast::<R>()),
            _ => Err(CircuitError::MissingParam(self.kind.name().to_string())),
        };
        let m: Matrix<R> = match self.kind {
            X => pauli_x(),
            Y => Matrix::from_rows(vec![vec![re(0.0), c(0.0, -1.0)], vec![c(0.0, 1.0), re(0.0)]]),
            Z => Matrix::diag(&[re(1.0), re(-1.0)]),
            H => hadamard(),
            S => Matrix::diag(&[re(1.0), c(0.0, 1.0)]),
            Sdg => Matrix::diag(&[re(1.0), c(0.0, -1.0)]),
            T => Matrix::diag(&[re(1.0), cis(std::f64::consts::FRAC_PI_4)]),
            Tdg => Matrix::diag(&[re(1.0), cis(-std::f64::consts::FRAC_PI_4)]),
            Rz => {
                let Params::Theta(t) = self.params else {
                    return Err(CircuitError::MissingParam("Rz".into()));
                };
                Matrix::diag(&[cis(-t / 2.0), cis(t / 2.0)])
            }
            U | Unitary => {
                let m = need_matrix()?;
                if m.rows() != dims.iter().product::<usize>() || !m.is_square() {
                    return Err(bad());
                }
                m
            }
            X01 | X02 | X12 | Chi | ChiDg => Matrix::permutation(&self.kind.level_permutation().unwrap()),
            Z0 => z_level(0),
            Z1 => z_level(1),
            Z2 => z_level(2),
            H3 => h3(),
            H3dg => h3::<R>().adjoint(),
            H3p => Matrix::direct_sum(&[Matrix::identity(1), h3()]),
            H3pdg => Matrix::direct_sum(&[Matrix::identity(1), h3::<R>().adjoint()]),
            T3 => t3(),
            T3dg => t3::<R>().adjoint(),
            S3 => s3(),
            S3dg => s3::<R>().adjoint(),
            Swap => {
                if dims.len() != 2 || dims[0] != dims[1] {
                    return Err(bad());
                }
                let d = dims[0];
                let p: Vec<usize> = (0..d * d).map(|i| (i % d) * d + i / d).collect();
                Matrix::permutation(&p)
            }
        };
        Ok(m)
    }
}

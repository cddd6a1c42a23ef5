//! Statevector simulation of mixed-radix circuits and the representation
//! theoretic check that an operator is a Fourier transform over a group.

mod state;
mod verify;

pub use state::{digits_of, index_of, SparseState, State};
pub use verify::{compare_to_oracle, discover_blocks, verify_circuit, verify_fft, BlockDiscovery, VerificationReport};

use circuit_ir::{Arch, Circuit, CircuitError};
use group_core::scalar::re;
use group_core::{GroupElement, Matrix, Real};
use rayon::prelude::*;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Operator of a circuit on the encoded group register, ancillae starting and
/// ending in |0>.
#[derive(Clone, Debug)]
pub struct Extraction<T> {
    /// Rows and columns indexed by group element.
    pub operator: Matrix<T>,
    /// Largest amplitude norm left on nonzero ancilla values.
    pub ancilla_leakage: T,
    /// Largest amplitude norm on |11> qubit pairs.
    pub forbidden_leakage: T,
}

pub fn extract_group_operator<T: Real>(c: &Circuit) -> Result<Extraction<T>, CircuitError> {
    c.validate()?;
    let group = c.group();
    let n = group.order();
    let dims = c.dims();
    let nreg = c.layout.n_wires();
    let pairs = if c.arch() == Arch::Qubit { c.layout.qutrit_pairs() } else { Vec::new() };
    let full = |g: usize| {
        let mut v = c.layout.encode(&GroupElement::from_index(group, g));
        v.resize(dims.len(), 0);
        v
    };
    let rows: Vec<usize> = (0..n).map(|h| index_of(&dims, &full(h))).collect();
    let cols: Vec<Result<(Vec<group_core::Cx<T>>, T, T), CircuitError>> = (0..n)
        .into_par_iter()
        .map(|g| {
            let mut s = SparseState::<T>::basis(&dims, &full(g));
            s.apply(c)?;
            let col: Vec<_> = rows.iter().map(|r| s.amps.get(r).copied().unwrap_or(re(0.0))).collect();
            let (mut anc, mut forb) = (T::zero(), T::zero());
            for (&idx, a) in &s.amps {
                let d = digits_of(&dims, idx);
                if pairs.iter().any(|&(h, l)| d[h] == 1 && d[l] == 1) {
                    forb += a.norm_sqr();
                } else if d[nreg..].iter().any(|&x| x != 0) {
                    anc += a.norm_sqr();
                }
            }
            Ok((col, anc.sqrt(), forb.sqrt()))
        })
        .collect();
    let mut op = Matrix::zeros(n, n);
    let (mut anc, mut forb) = (T::zero(), T::zero());
    for (g, r) in cols.into_iter().enumerate() {
        let (col, a, f) = r?;
        op.set_col(g, &col);
        anc = anc.max(a);
        forb = forb.max(f);
    }
    Ok(Extraction { operator: op, ancilla_leakage: anc, forbidden_leakage: forb })
}

/// Max entrywise distance between `a * phase` and `b` for the best global phase.
pub fn phase_distance<T: Real>(a: &Matrix<T>, b: &Matrix<T>) -> T {
    let ip = a.adjoint().matmul(b).trace();
    let ph = if ip.norm() > T::zero() { ip / ip.norm() } else { re(1.0) };
    a.scale(ph).max_diff(b)
}

/// Tolerance from NAQFT_TOLERANCE, else the given default.
pub fn tolerance_from_env(default: f64) -> f64 {
    std::env::var("NAQFT_TOLERANCE").ok().and_then(|s| s.parse().ok()).unwrap_or(default)
}

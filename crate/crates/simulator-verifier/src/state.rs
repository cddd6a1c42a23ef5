use circuit_ir::{Circuit, CircuitError, Gate};
use group_core::scalar::re;
use group_core::{Cx, Matrix, Real};
use std::collections::HashMap;

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * dims[i + 1];
    }
    s
}

/// Target-digit offsets in the order of the gate matrix (first target most
/// significant).
fn target_offsets(targets: &[usize], dims: &[usize], st: &[usize]) -> Vec<usize> {
    let mut offs = vec![0usize];
    for &t in targets {
        offs = offs.iter().flat_map(|&o| (0..dims[t]).map(move |v| o + v * st[t])).collect();
    }
    offs
}

fn gate_parts<T: Real>(g: &Gate, dims: &[usize]) -> Result<Matrix<T>, CircuitError> {
    let n = dims.len();
    for w in g.wires() {
        if w >= n {
            return Err(CircuitError::WireMismatch(format!("wire {w} outside a {n}-wire state")));
        }
    }
    let td: Vec<usize> = g.targets.iter().map(|&t| dims[t]).collect();
    g.matrix::<T>(&td)
}

/// Dense mixed-radix state vector, first wire most significant.
#[derive(Clone, Debug, PartialEq)]
pub struct State<T> {
    pub dims: Vec<usize>,
    pub amps: Vec<Cx<T>>,
}

impl<T: Real> State<T> {
    pub fn basis(dims: &[usize], values: &[usize]) -> Self {
        let mut amps = vec![re(0.0); dims.iter().product()];
        amps[index_of(dims, values)] = re(1.0);
        State { dims: dims.to_vec(), amps }
    }

    pub fn from_amps(dims: &[usize], amps: Vec<Cx<T>>) -> Self {
        assert_eq!(amps.len(), dims.iter().product::<usize>());
        State { dims: dims.to_vec(), amps }
    }

    pub fn norm(&self) -> T {
        self.amps.iter().map(|a| a.norm_sqr()).fold(T::zero(), |s, x| s + x).sqrt()
    }

    pub fn amplitude(&self, values: &[usize]) -> Cx<T> {
        self.amps[index_of(&self.dims, values)]
    }

    pub fn apply_gate(&mut self, g: &Gate) -> Result<(), CircuitError> {
        let m = gate_parts::<T>(g, &self.dims)?;
        let st = strides(&self.dims);
        let offs = target_offsets(&g.targets, &self.dims, &st);
        let mut base0 = 0;
        for c in &g.controls {
            base0 += c.value * st[c.wire];
        }
        let free: Vec<usize> = (0..self.dims.len()).filter(|w| !g.wires().any(|x| x == *w)).collect();
        let mut digits = vec![0usize; free.len()];
        let mut buf = vec![re::<T>(0.0); offs.len()];
        let mut base = base0;
        loop {
            for (k, &o) in offs.iter().enumerate() {
                buf[k] = self.amps[base + o];
            }
            for (i, &o) in offs.iter().enumerate() {
                let row = m.row(i);
                self.amps[base + o] = row.iter().zip(&buf).fold(re(0.0), |s, (a, b)| s + *a * *b);
            }
            // advance the free-wire counter
            let mut k = free.len();
            loop {
                if k == 0 {
                    return Ok(());
                }
                k -= 1;
                let w = free[k];
                digits[k] += 1;
                base += st[w];
                if digits[k] < self.dims[w] {
                    break;
                }
                base -= digits[k] * st[w];
                digits[k] = 0;
            }
        }
    }

    pub fn apply(&mut self, c: &Circuit) -> Result<(), CircuitError> {
        if c.dims() != self.dims {
            return Err(CircuitError::WireMismatch("state and circuit wires differ".into()));
        }
        for g in &c.gates {
            self.apply_gate(g)?;
        }
        Ok(())
    }
}

pub fn index_of(dims: &[usize], values: &[usize]) -> usize {
    dims.iter().zip(values).fold(0, |acc, (&d, &v)| acc * d + v)
}

pub fn digits_of(dims: &[usize], mut idx: usize) -> Vec<usize> {
    let mut v = vec![0; dims.len()];
    for i in (0..dims.len()).rev() {
        v[i] = idx % dims[i];
        idx /= dims[i];
    }
    v
}

/// Map-backed state for wide registers whose support stays small.
#[derive(Clone, Debug)]
pub struct SparseState<T> {
    pub dims: Vec<usize>,
    pub amps: HashMap<usize, Cx<T>>,
}

impl<T: Real> SparseState<T> {
    pub fn basis(dims: &[usize], values: &[usize]) -> Self {
        let mut amps = HashMap::new();
        amps.insert(index_of(dims, values), re(1.0));
        SparseState { dims: dims.to_vec(), amps }
    }

    pub fn apply_gate(&mut self, g: &Gate) -> Result<(), CircuitError> {
        let m = gate_parts::<T>(g, &self.dims)?;
        let st = strides(&self.dims);
        let offs = target_offsets(&g.targets, &self.dims, &st);
        let digit = |idx: usize, w: usize| (idx / st[w]) % self.dims[w];
        let mut groups: HashMap<usize, Vec<Cx<T>>> = HashMap::new();
        let mut keep = HashMap::with_capacity(self.amps.len());
        for (&idx, &a) in &self.amps {
            if g.controls.iter().any(|c| digit(idx, c.wire) != c.value) {
                keep.insert(idx, a);
                continue;
            }
            let local = g.targets.iter().fold(0, |acc, &t| acc * self.dims[t] + digit(idx, t));
            let base = idx - offs[local];
            groups.entry(base).or_insert_with(|| vec![re(0.0); offs.len()])[local] = a;
        }
        let tiny = T::epsilon() * T::epsilon();
        for (base, v) in groups {
            for (i, &o) in offs.iter().enumerate() {
                let x = m.row(i).iter().zip(&v).fold(re::<T>(0.0), |s, (a, b)| s + *a * *b);
                if x.norm_sqr() > tiny {
                    keep.insert(base + o, x);
                }
            }
        }
        self.amps = keep;
        Ok(())
    }

    pub fn apply(&mut self, c: &Circuit) -> Result<(), CircuitError> {
        if c.dims() != self.dims {
            return Err(CircuitError::WireMismatch("state and circuit wires differ".into()));
        }
        for g in &c.gates {
            self.apply_gate(g)?;
        }
        Ok(())
    }

    pub fn to_dense(&self) -> State<T> {
        let mut amps = vec![re(0.0); self.dims.iter().product()];
        for (&i, &a) in &self.amps {
            amps[i] = a;
        }
        State { dims: self.dims.clone(), amps }
    }
}

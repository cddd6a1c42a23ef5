use crate::extract_group_operator;
use circuit_ir::json::fmt_g17;
use circuit_ir::{Circuit, CircuitError};
use group_core::scalar::re;
use group_core::{Cx, GroupElement, GroupId, Matrix, Real};
use rep_theory::{dft_matrix, reference_assignment, regular_rep_perm, RepTable, Side};
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub group: GroupId,
    pub arch: String,
    pub pass: bool,
    pub tolerance: f64,
    pub unitarity_residual: f64,
    pub off_block_residual: f64,
    pub character_residual: f64,
    pub intertwiner_residual: f64,
    pub ancilla_leakage: f64,
    pub forbidden_leakage: f64,
    /// (irrep label, condition number of its intertwiner)
    pub condition_numbers: Vec<(String, f64)>,
    /// Rows found for each irrep, in table order.
    pub block_sizes: Vec<usize>,
    /// Register basis states per irrep, as found.
    pub blocks: Vec<(String, Vec<usize>)>,
    pub assignment_mismatches: Vec<String>,
    pub failures: Vec<String>,
}

impl VerificationReport {
    fn finish(&mut self) {
        let t = self.tolerance;
        let checks = [
            ("unitarity", self.unitarity_residual),
            ("off-block", self.off_block_residual),
            ("character", self.character_residual),
            ("intertwiner", self.intertwiner_residual),
            ("ancilla leakage", self.ancilla_leakage),
            ("forbidden leakage", self.forbidden_leakage),
        ];
        for (name, v) in checks {
            if !(v < t) {
                self.failures.push(format!("{name} residual {v:e} exceeds {t:e}"));
            }
        }
        self.pass = self.failures.is_empty();
    }

    pub fn to_json(&self) -> String {
        let mut s = String::new();
        let strs = |v: &[String]| v.iter().map(|x| serde_json::to_string(x).unwrap()).collect::<Vec<_>>().join(",");
        let _ = write!(
            s,
            "{{\"group\":\"{}\",\"arch\":\"{}\",\"pass\":{},\"tolerance\":{},",
            self.group.name(),
            self.arch,
            self.pass,
            fmt_g17(self.tolerance)
        );
        for (k, v) in [
            ("unitarity_residual", self.unitarity_residual),
            ("off_block_residual", self.off_block_residual),
            ("character_residual", self.character_residual),
            ("intertwiner_residual", self.intertwiner_residual),
            ("ancilla_leakage", self.ancilla_leakage),
            ("forbidden_leakage", self.forbidden_leakage),
        ] {
            let _ = write!(s, "\"{k}\":{},", fmt_g17(v));
        }
        let conds: Vec<String> =
            self.condition_numbers.iter().map(|(l, c)| format!("[\"{l}\",{}]", fmt_g17(*c))).collect();
        let sizes: Vec<String> = self.block_sizes.iter().map(|x| x.to_string()).collect();
        let blocks: Vec<String> = self
            .blocks
            .iter()
            .map(|(l, v)| {
                let st: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("[\"{l}\",[{}]]", st.join(","))
            })
            .collect();
        let _ = write!(
            s,
            "\"condition_numbers\":[{}],\"block_sizes\":[{}],\"blocks\":[{}],\"assignment_mismatches\":[{}],\"failures\":[{}]}}",
            conds.join(","),
            sizes.join(","),
            blocks.join(","),
            strs(&self.assignment_mismatches),
            strs(&self.failures)
        );
        s.push('\n');
        s
    }
}

fn f<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let n = p[y];
        p[y] = r;
        y = n;
    }
    r
}

/// Operators B(g) = F L(g) F^dag for every element.
fn conjugated_regular<T: Real>(fm: &Matrix<T>, t: &RepTable<T>) -> Vec<Matrix<T>> {
    let n = t.order();
    let fd = fm.adjoint();
    (0..n)
        .map(|g| {
            let perm = regular_rep_perm(&t.group, g, Side::Left);
            Matrix::from_fn(n, n, |i, h| fm[(i, perm[h])]).matmul(&fd)
        })
        .collect()
}

/// Rows of F grouped by irrep, found from the support of F L(g) F^dag.
#[derive(Clone, Debug)]
pub struct BlockDiscovery {
    /// Rows per irrep in table order (empty when the irrep was not found).
    pub rows: Vec<Vec<usize>>,
    pub problems: Vec<String>,
}

fn discover<T: Real>(bs: &[Matrix<T>], t: &RepTable<T>, tol: T) -> BlockDiscovery {
    let n = t.order();
    let detect = tol.sqrt();
    let mut parent: Vec<usize> = (0..n).collect();
    for b in bs {
        for i in 0..n {
            for j in 0..n {
                if i != j && b[(i, j)].norm() > detect {
                    let (a, c) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = c;
                }
            }
        }
    }
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut root_of = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if root_of[r] == usize::MAX {
            root_of[r] = comps.len();
            comps.push(Vec::new());
        }
        comps[root_of[r]].push(i);
    }
    let mut rows = vec![Vec::new(); t.irreps.len()];
    let mut problems = Vec::new();
    let half = T::of(0.5);
    for comp in comps {
        let ch: Vec<Cx<T>> = bs.iter().map(|b| comp.iter().fold(re(0.0), |s, &i| s + b[(i, i)])).collect();
        let mult = t.decompose(&ch);
        let present: Vec<usize> = (0..mult.len()).filter(|&r| mult[r].norm() > half).collect();
        match present[..] {
            [r] => rows[r].extend(comp),
            _ => problems.push(format!("rows {:?} are not isotypic", &comp[..comp.len().min(6)])),
        }
    }
    for (r, v) in rows.iter_mut().enumerate() {
        v.sort_unstable();
        let d = t.irreps[r].dim;
        if v.len() != d * d {
            problems.push(format!("{} has {} rows, expected {}", t.irreps[r].label, v.len(), d * d));
        }
    }
    BlockDiscovery { rows, problems }
}

pub fn discover_blocks<T: Real>(fm: &Matrix<T>, t: &RepTable<T>, tol: T) -> BlockDiscovery {
    discover(&conjugated_regular(fm, t), t, tol)
}

/// Gram-Schmidt basis of the column space, keeping `rank` vectors.
fn column_basis<T: Real>(m: &Matrix<T>, rank: usize) -> Vec<Vec<Cx<T>>> {
    let mut cols: Vec<Vec<Cx<T>>> = (0..m.cols()).map(|j| m.col(j)).collect();
    let norm = |v: &[Cx<T>]| v.iter().map(|x| x.norm_sqr()).fold(T::zero(), |a, b| a + b).sqrt();
    let mut basis: Vec<Vec<Cx<T>>> = Vec::new();
    while basis.len() < rank {
        for c in cols.iter_mut() {
            for b in &basis {
                let ip = b.iter().zip(c.iter()).fold(re::<T>(0.0), |s, (x, y)| s + x.conj() * *y);
                for (ci, bi) in c.iter_mut().zip(b) {
                    *ci -= ip * *bi;
                }
            }
        }
        let (k, nk) = cols
            .iter()
            .enumerate()
            .map(|(k, c)| (k, norm(c)))
            .fold((0, T::zero()), |a, b| if b.1 > a.1 { b } else { a });
        if nk <= T::epsilon() {
            break;
        }
        let v: Vec<Cx<T>> = cols[k].iter().map(|x| *x / nk).collect();
        basis.push(v);
    }
    basis
}

/// Intertwiner W with W B(g) W^dag = rho(g) (x) 1 from the matrix-unit
/// projectors P_a0 = d/|G| sum_g conj(rho(g)_a0) B(g).
fn intertwiner<T: Real>(brho: &[Matrix<T>], t: &RepTable<T>, r: usize) -> Option<Matrix<T>> {
    let d = t.irreps[r].dim;
    let n = t.order();
    let dd = d * d;
    let scale = T::of(d as f64 / n as f64);
    let proj = |a: usize| {
        let mut p = Matrix::zeros(dd, dd);
        for (g, b) in brho.iter().enumerate() {
            p = p.add(&b.scale(t.mats[r][g][(a, 0)].conj()));
        }
        p.scale(re::<T>(1.0) * scale)
    };
    let p00 = proj(0);
    let vs = column_basis(&p00, d);
    if vs.len() != d {
        return None;
    }
    let ps: Vec<Matrix<T>> = (0..d).map(|a| if a == 0 { p00.clone() } else { proj(a) }).collect();
    let mut wd = Matrix::zeros(dd, dd);
    for (a, pa) in ps.iter().enumerate() {
        for (k, v) in vs.iter().enumerate() {
            wd.set_col(a * d + k, &pa.apply(v));
        }
    }
    Some(wd.adjoint())
}

fn structure_report<T: Real>(fm: &Matrix<T>, t: &RepTable<T>, tol: T, arch: &str) -> (VerificationReport, BlockDiscovery) {
    let n = t.order();
    let id = t.id();
    let mut rep = VerificationReport {
        group: id,
        arch: arch.to_string(),
        pass: false,
        tolerance: f(tol),
        unitarity_residual: f(fm.unitarity_residual()),
        off_block_residual: f64::INFINITY,
        character_residual: f64::INFINITY,
        intertwiner_residual: f64::INFINITY,
        ancilla_leakage: 0.0,
        forbidden_leakage: 0.0,
        condition_numbers: Vec::new(),
        block_sizes: Vec::new(),
        blocks: Vec::new(),
        assignment_mismatches: Vec::new(),
        failures: Vec::new(),
    };
    if fm.rows() != n || fm.cols() != n {
        rep.failures.push(format!("operator is {}x{}, group order {n}", fm.rows(), fm.cols()));
        return (rep, BlockDiscovery { rows: Vec::new(), problems: Vec::new() });
    }
    // L(g1 g2) = L(g1) L(g2) for the regular representation in use
    let perms: Vec<Vec<usize>> = (0..n).map(|g| regular_rep_perm(&t.group, g, Side::Left)).collect();
    for a in 0..n {
        for b in 0..n {
            let ab = t.group.mul_idx(a, b);
            if (0..n).any(|h| perms[ab][h] != perms[a][perms[b][h]]) {
                rep.failures.push("regular representation is not a homomorphism".into());
                return (rep, BlockDiscovery { rows: Vec::new(), problems: Vec::new() });
            }
        }
    }
    let bs = conjugated_regular(fm, t);
    let disc = discover(&bs, t, tol);
    rep.failures.extend(disc.problems.iter().cloned());
    rep.block_sizes = disc.rows.iter().map(|v| v.len()).collect();
    let mut label = vec![usize::MAX; n];
    for (r, v) in disc.rows.iter().enumerate() {
        for &i in v {
            label[i] = r;
        }
    }
    let mut off = T::zero();
    for b in &bs {
        for i in 0..n {
            for j in 0..n {
                if label[i] != label[j] || label[i] == usize::MAX && i != j {
                    off = off.max(b[(i, j)].norm());
                }
            }
        }
    }
    rep.off_block_residual = f(off);
    let to_state = |h: usize| id.register_state(&GroupElement::from_index(id, h).exps);
    rep.blocks = disc
        .rows
        .iter()
        .zip(&t.irreps)
        .map(|(v, irr)| {
            let mut s: Vec<usize> = v.iter().map(|&h| to_state(h)).collect();
            s.sort_unstable();
            (irr.label.clone(), s)
        })
        .collect();
    if let Some(ra) = reference_assignment(id) {
        for ((label, found), (l2, listed)) in rep.blocks.iter().zip(&ra.blocks) {
            debug_assert_eq!(label, l2);
            if found != listed {
                let show = |v: &[usize]| {
                    v.iter().map(|&s| format!("|{}>", rep_theory::IrrepBasisAssignment::digits(id, s))).collect::<Vec<_>>().join(" ")
                };
                rep.assignment_mismatches.push(format!("{label}: listed {} found {}", show(listed), show(found)));
            }
        }
    }
    if !disc.problems.is_empty() {
        return (rep, disc);
    }
    let mut chr = T::zero();
    let mut itw = T::zero();
    for (r, rows) in disc.rows.iter().enumerate() {
        let d = t.irreps[r].dim;
        let brho: Vec<Matrix<T>> = bs.iter().map(|b| b.select(rows, rows)).collect();
        for (g, b) in brho.iter().enumerate() {
            let want = t.chars[r][g] * T::of(d as f64);
            chr = chr.max((b.trace() - want).norm());
        }
        match intertwiner(&brho, t, r) {
            Some(w) => {
                let wd = w.adjoint();
                let eye = Matrix::<T>::identity(d);
                for (g, b) in brho.iter().enumerate() {
                    let lhs = w.matmul(b).matmul(&wd);
                    itw = itw.max(lhs.max_diff(&t.mats[r][g].kron(&eye)));
                }
                itw = itw.max(w.unitarity_residual());
                let sv = w.singular_values();
                let (mx, mn) = sv.iter().fold((T::zero(), T::infinity()), |(a, b), &s| (a.max(s), b.min(s)));
                rep.condition_numbers.push((t.irreps[r].label.clone(), f(mx / mn)));
            }
            None => {
                itw = T::infinity();
                rep.failures.push(format!("no intertwiner for {}", t.irreps[r].label));
            }
        }
    }
    rep.character_residual = f(chr);
    rep.intertwiner_residual = f(itw);
    (rep, disc)
}

/// Check that F block-diagonalizes the left regular representation into the
/// irreps of the group, each appearing d times.
pub fn verify_fft<T: Real>(fm: &Matrix<T>, t: &RepTable<T>, tol: T) -> VerificationReport {
    let (mut rep, _) = structure_report(fm, t, tol, "operator");
    rep.finish();
    rep
}

pub fn verify_circuit<T: Real>(c: &Circuit, t: &RepTable<T>, tol: T) -> Result<VerificationReport, CircuitError> {
    let ex = extract_group_operator::<T>(c)?;
    let (mut rep, _) = structure_report(&ex.operator, t, tol, c.arch().name());
    rep.ancilla_leakage = f(ex.ancilla_leakage);
    rep.forbidden_leakage = f(ex.forbidden_leakage);
    rep.finish();
    Ok(rep)
}

/// Distance to the oracle after the best unitary on each irrep block (which
/// also absorbs a global phase). Infinite when F's blocks cannot be found.
pub fn compare_to_oracle<T: Real>(fm: &Matrix<T>, t: &RepTable<T>, tol: T) -> T {
    let disc = discover_blocks(fm, t, tol);
    if !disc.problems.is_empty() {
        return T::infinity();
    }
    let fo = dft_matrix(t);
    let offs = t.row_offsets();
    let cols: Vec<usize> = (0..t.order()).collect();
    let mut worst = T::zero();
    for (r, rows) in disc.rows.iter().enumerate() {
        let d = t.irreps[r].dim;
        let orows: Vec<usize> = (offs[r]..offs[r] + d * d).collect();
        let fs = fm.select(rows, &cols);
        let os = fo.select(&orows, &cols);
        let m = os.matmul(&fs.adjoint());
        // polar factor of m
        let (vals, vecs) = m.adjoint().matmul(&m).hermitian_eigen();
        let floor = T::epsilon() * T::epsilon();
        let inv = Matrix::diag(&vals.iter().map(|&l| re::<T>(1.0) / l.max(floor).sqrt()).collect::<Vec<_>>());
        let w = m.matmul(&vecs).matmul(&inv).matmul(&vecs.adjoint());
        worst = worst.max(w.matmul(&fs).max_diff(&os));
    }
    worst
}

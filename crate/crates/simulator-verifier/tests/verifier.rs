use circuit_ir::{Arch, Circuit, Gate, GateKind};
use group_core::scalar::c;
use group_core::{GroupId, Matrix};
use proptest::prelude::*;
use rep_theory::{dft_matrix, RepTable, RepTable64};
use simulator_verifier::{compare_to_oracle, extract_group_operator, verify_fft, SparseState, State};

fn table(id: GroupId) -> RepTable64 {
    RepTable::new(id).unwrap()
}

#[test]
fn oracle_passes_for_every_group() {
    for id in GroupId::ALL {
        let t = table(id);
        let f = dft_matrix(&t);
        let r = verify_fft(&f, &t, 1e-9);
        assert!(r.pass, "{id}: {:?}", r.failures);
        let sizes: Vec<usize> = t.irreps.iter().map(|x| x.dim * x.dim).collect();
        assert_eq!(r.block_sizes, sizes);
        assert!(compare_to_oracle(&f, &t, 1e-9) < 1e-12);
    }
}

#[test]
fn identity_is_not_a_fourier_transform() {
    let t = table(GroupId::Q8);
    let r = verify_fft(&Matrix::identity(8), &t, 1e-9);
    assert!(!r.pass);
    assert!(r.off_block_residual > 0.5 || !r.failures.is_empty());
}

#[test]
fn oracle_comparison_absorbs_in_block_changes_only() {
    let t = table(GroupId::Q8);
    let f = dft_matrix(&t);
    let offs = t.row_offsets();
    let x5 = t.index_of("xi5").unwrap();
    let swap = |a: usize, b: usize| {
        let mut p: Vec<usize> = (0..8).collect();
        p.swap(a, b);
        Matrix::<f64>::permutation(&p).matmul(&f)
    };
    let inside = swap(offs[x5], offs[x5] + 2);
    assert!(compare_to_oracle(&inside, &t, 1e-9) < 1e-9);
    assert!(verify_fft(&inside, &t, 1e-9).pass);
    // reordering whole rows is still a Fourier transform
    let reordered = swap(0, offs[x5]);
    assert!(compare_to_oracle(&reordered, &t, 1e-9) < 1e-9);
    // mixing rows of different irreps is not
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut mix = Matrix::<f64>::identity(8);
    let (a, b) = (0, offs[x5]);
    mix[(a, a)] = c(h, 0.0);
    mix[(a, b)] = c(h, 0.0);
    mix[(b, a)] = c(-h, 0.0);
    mix[(b, b)] = c(h, 0.0);
    let across = mix.matmul(&f);
    let r = compare_to_oracle(&across, &t, 1e-9);
    assert!(r > 0.1, "{r}");
    assert!(!verify_fft(&across, &t, 1e-9).pass);
    let phased = f.scale(c(0.6, 0.8));
    assert!(compare_to_oracle(&phased, &t, 1e-9) < 1e-12);
}

#[test]
fn basic_gate_actions() {
    let mut s = State::<f64>::basis(&[2], &[0]);
    s.apply_gate(&Gate::new(GateKind::H, &[0])).unwrap();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    assert!((s.amps[0] - c(h, 0.0)).norm() < 1e-15 && (s.amps[1] - c(h, 0.0)).norm() < 1e-15);
    // chi |1> = |0>, chi |0> = |2>
    let mut q = State::<f64>::basis(&[3], &[1]);
    q.apply_gate(&Gate::new(GateKind::Chi, &[0])).unwrap();
    assert_eq!(q.amplitude(&[0]), c(1.0, 0.0));
    let mut q = State::<f64>::basis(&[3], &[0]);
    q.apply_gate(&Gate::new(GateKind::Chi, &[0])).unwrap();
    assert_eq!(q.amplitude(&[2]), c(1.0, 0.0));
    // open control on a qutrit
    let mut s = State::<f64>::basis(&[3, 2], &[0, 0]);
    s.apply_gate(&Gate::new(GateKind::X, &[1]).ctrl(0, 0)).unwrap();
    assert_eq!(s.amplitude(&[0, 1]), c(1.0, 0.0));
    let mut s = State::<f64>::basis(&[3, 2], &[2, 0]);
    s.apply_gate(&Gate::new(GateKind::X, &[1]).ctrl(0, 1)).unwrap();
    assert_eq!(s.amplitude(&[2, 0]), c(1.0, 0.0));
}

#[test]
fn empty_and_hadamard_circuits() {
    let id = Circuit::new(GroupId::BT, Arch::Mixed);
    let ex = extract_group_operator::<f64>(&id).unwrap();
    assert!(ex.operator.is_identity(0.0));
    let mut z2 = Circuit::new(GroupId::Z2, Arch::Mixed);
    z2.push(Gate::new(GateKind::H, &[0]));
    let ex = extract_group_operator::<f64>(&z2).unwrap();
    assert!(ex.operator.approx_eq(&group_core::consts::hadamard(), 1e-15));
    assert!(verify_fft(&ex.operator, &table(GroupId::Z2), 1e-9).pass);
}

fn random_gate(dims: &[usize], seed: &[usize]) -> Gate {
    let n = dims.len();
    let t = seed[0] % n;
    let kinds3 = [GateKind::Chi, GateKind::ChiDg, GateKind::H3, GateKind::X12, GateKind::T3, GateKind::S3dg, GateKind::Z0];
    let kinds2 = [GateKind::H, GateKind::X, GateKind::T, GateKind::S, GateKind::Y];
    let mut g = if dims[t] == 3 {
        Gate::new(kinds3[seed[1] % kinds3.len()], &[t])
    } else {
        Gate::new(kinds2[seed[1] % kinds2.len()], &[t])
    };
    let cw = seed[2] % n;
    if cw != t && seed[3] % 2 == 0 {
        g = g.ctrl(cw, seed[4] % dims[cw]);
    }
    g
}

proptest! {
    #[test]
    fn dense_and_sparse_agree_and_preserve_norm(
        seeds in proptest::collection::vec(proptest::collection::vec(0usize..100, 5), 1..25),
        start in proptest::collection::vec(0usize..3, 4),
    ) {
        let dims = [3, 2, 3, 2];
        let vals: Vec<usize> = start.iter().zip(&dims).map(|(v, d)| v % d).collect();
        let mut d = State::<f64>::basis(&dims, &vals);
        let mut s = SparseState::<f64>::basis(&dims, &vals);
        for sd in &seeds {
            let g = random_gate(&dims, sd);
            d.apply_gate(&g).unwrap();
            s.apply_gate(&g).unwrap();
        }
        prop_assert!((d.norm() - 1.0).abs() < 1e-12);
        let sd = s.to_dense();
        for (a, b) in d.amps.iter().zip(&sd.amps) {
            prop_assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn simulation_is_linear(
        seeds in proptest::collection::vec(proptest::collection::vec(0usize..100, 5), 1..15),
        a in proptest::collection::vec(-1.0f64..1.0, 36),
        b in proptest::collection::vec(-1.0f64..1.0, 36),
    ) {
        let dims = [3, 2, 3, 2];
        let va: Vec<_> = a.iter().map(|&x| c(x, 0.5 * x)).collect();
        let vb: Vec<_> = b.iter().map(|&x| c(-0.3 * x, x)).collect();
        let sum: Vec<_> = va.iter().zip(&vb).map(|(x, y)| x + y).collect();
        let mut sa = State::<f64>::from_amps(&dims, va);
        let mut sb = State::<f64>::from_amps(&dims, vb);
        let mut ss = State::<f64>::from_amps(&dims, sum);
        for sd in &seeds {
            let g = random_gate(&dims, sd);
            for s in [&mut sa, &mut sb, &mut ss] {
                s.apply_gate(&g).unwrap();
            }
        }
        for i in 0..36 {
            prop_assert!((sa.amps[i] + sb.amps[i] - ss.amps[i]).norm() < 1e-12);
        }
    }
}

use circuit_ir::{Arch, Circuit, Gate, GateKind};
use group_core::scalar::c;
use group_core::{GroupId, Matrix};
use proptest::prelude::*;
use resource_estimator::*;

fn qubits(n: usize) -> Circuit {
    // S36x3 on qubits has 8 register wires
    let mut circ = Circuit::new(GroupId::S36x3, Arch::Qubit);
    while circ.dims().len() < n {
        circ.add_ancilla();
    }
    circ
}

#[test]
fn toffolis_and_rotations() {
    let mut circ = qubits(8);
    for _ in 0..3 {
        circ.push(Gate::new(GateKind::X, &[2]).ctrl(0, 1).ctrl(1, 1));
    }
    circ.push(Gate::rz(3, 0.1));
    circ.push(Gate::rz(4, 0.3));
    let r = census(&circ);
    assert_eq!(r.counts.toffoli, 3);
    assert_eq!(r.counts.rz, 2);
    assert!((r.t.a - 21.0).abs() < 1e-12 && (r.t.b - 2.3).abs() < 1e-12);
}

#[test]
fn empty_circuit() {
    let r = census(&qubits(8));
    assert_eq!(r.t, Symbolic { a: 0.0, b: 0.0 });
    assert_eq!(r.t_width, 0);
    assert!(r.fault_tolerant);
}

#[test]
fn gate_classes() {
    let mut circ = qubits(8);
    circ.push(Gate::new(GateKind::X, &[0]).ctrl(1, 0).ctrl(2, 1).ctrl(3, 1));
    circ.push(Gate::new(GateKind::Z, &[0]).ctrl(1, 1).ctrl(2, 1));
    circ.push(Gate::new(GateKind::X, &[0]).ctrl(1, 1));
    circ.push(Gate::new(GateKind::Swap, &[0, 1]).ctrl(2, 1));
    circ.push(Gate::new(GateKind::T, &[0]));
    circ.push(Gate::new(GateKind::H, &[0]));
    circ.push(Gate::new(GateKind::S, &[0]));
    circ.push(Gate::phase(5, std::f64::consts::FRAC_PI_2).ctrl(6, 1));
    circ.push(Gate::phase(5, std::f64::consts::PI).ctrl(6, 1));
    let h = std::f64::consts::FRAC_1_SQRT_2;
    circ.push(Gate::unitary(&[6], Matrix::from_rows(vec![vec![c(h, 0.0), c(h, 0.0)], vec![c(h, 0.0), c(-h, 0.0)]])));
    circ.push(Gate::unitary(&[6, 7], group_core::consts::dft(4)));
    let r = census(&circ);
    let k = r.counts;
    assert_eq!((k.c3not, k.toffoli, k.h, k.s, k.generic_2q), (1, 2, 1, 1, 1));
    // controlled S costs three T; controlled Z and the Hadamard-valued U are free
    assert_eq!(k.t, 1 + 3);
    assert_eq!(k.cnot, 1 + 2 + 2 + 1);
    assert_eq!(k.rz_equivalents(), 14);
    assert!((r.t.a - (21.0 + 14.0 + 4.0)).abs() < 1e-12);
}

#[test]
fn mixed_circuits_are_flagged() {
    let mut circ = Circuit::new(GroupId::D27, Arch::Mixed);
    circ.push(Gate::new(GateKind::H3, &[0]));
    let r = census(&circ);
    assert!(!r.fault_tolerant);
    assert_eq!(r.counts.qutrit, 1);
}

#[test]
fn t_width_is_asap() {
    let mut circ = qubits(8);
    circ.push(Gate::new(GateKind::T, &[0]));
    circ.push(Gate::new(GateKind::T, &[1]));
    circ.push(Gate::new(GateKind::X, &[4]).ctrl(2, 1).ctrl(3, 1));
    circ.push(Gate::new(GateKind::T, &[0]));
    assert_eq!(census(&circ).t_width, 3);
}

#[test]
fn symbolic_evaluation() {
    let d27 = table7(GroupId::D27, Impl::Fft).unwrap();
    assert!((t_count(&d27.t, 1e-10).unwrap() - 2842.2).abs() < 0.1);
    assert_eq!(t_count(&d27.t, 1.0).unwrap(), 168.0);
    let bt = table7(GroupId::BT, Impl::Fft).unwrap();
    assert_eq!(bt.t.at(1.0).unwrap(), 98.0);
    let rz = Symbolic { a: 0.0, b: 1.15 };
    assert!((rz.at(1e-3).unwrap() - 11.46).abs() < 0.01);
    assert_eq!(rz.at(0.0), Err(ResourceError::BadEpsilon(0.0)));
    assert!(rz.at(1.5).is_err());
}

#[test]
fn simulation_cost() {
    let v = simcost(GroupId::BT, Impl::Fft, 3, 1e-10).unwrap();
    assert!((v - 18150.6).abs() < 0.5, "{v}");
    for d in [1, 2, 7] {
        assert_eq!(simcost(GroupId::BT, Impl::Fft, d, 1.0).unwrap(), 4676.0 * d as f64 - 3556.0);
    }
    assert_eq!(simcost(GroupId::BT, Impl::Fft, 0, 0.1), Err(ResourceError::BadDimension(0)));
    assert!(simcost(GroupId::D54, Impl::Fft, 1, 0.1).is_err());
}

#[test]
fn quoted_ratios() {
    for (g, want) in [(GroupId::BT, 29.0), (GroupId::BO, 73.0), (GroupId::S36x3, 580.0)] {
        let ft = sim_model(g, Impl::Ft).unwrap();
        let fft = sim_model(g, Impl::Fft).unwrap();
        let ratio = ft.n_fid / fft.n_fid;
        assert_eq!(ft.r_qft, want);
        assert!((ratio / want - 1.0).abs() < 0.03, "{g}: {ratio}");
    }
}

#[test]
fn comparison_table() {
    let mut circ = qubits(8);
    circ.push(Gate::new(GateKind::X, &[2]).ctrl(0, 1).ctrl(1, 1));
    let rows = comparison_rows(GroupId::BT, &census(&circ), 1.0).unwrap();
    assert_eq!(rows.len(), 4);
    let csv = comparison_csv(&rows);
    assert_eq!(csv.lines().next().unwrap(), "group,impl,source,a,b,width,ancilla,T(eps)");
    assert_eq!(csv.lines().last().unwrap(), "BT,FFT,ours,7,0,1,0,7.0");
    let text = comparison_text(&rows);
    assert_eq!(text.lines().count(), 5);
    assert!("fft".parse::<Impl>().is_ok() && "x".parse::<Impl>().is_err());
}

fn arb_gate() -> impl Strategy<Value = Gate> {
    (0usize..6, 0usize..8, 0usize..8, 0usize..8, -3.0f64..3.0).prop_map(|(k, t, a, b, th)| {
        let others: Vec<usize> = [a, b].into_iter().filter(|&w| w != t).collect();
        let mut g = match k {
            0 => Gate::new(GateKind::X, &[t]),
            1 => Gate::rz(t, th),
            2 => Gate::new(GateKind::T, &[t]),
            3 => Gate::phase(t, th),
            4 => Gate::new(GateKind::H, &[t]),
            _ => Gate::new(GateKind::Z, &[t]),
        };
        let mut seen = Vec::new();
        for w in others {
            if !seen.contains(&w) && (k == 0 || k == 5 || seen.is_empty()) {
                g = g.ctrl(w, 1);
                seen.push(w);
            }
        }
        g
    })
}

proptest! {
    #[test]
    fn census_is_additive(a in proptest::collection::vec(arb_gate(), 0..12), b in proptest::collection::vec(arb_gate(), 0..12)) {
        let mut c1 = qubits(8);
        c1.extend(a);
        let mut c2 = qubits(8);
        c2.extend(b);
        let both = c1.compose(&c2).unwrap();
        prop_assert_eq!(census(&both).counts, census(&c1).counts + census(&c2).counts);
    }
}

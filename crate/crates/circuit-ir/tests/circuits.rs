use circuit_ir::json::{from_json, to_json};
use circuit_ir::{Arch, Circuit, CircuitError, Gate, GateKind, Params};
use group_core::scalar::c;
use group_core::{GroupId, Matrix};
use proptest::prelude::*;

const QUBIT: [GateKind; 8] =
    [GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::S, GateKind::Sdg, GateKind::T, GateKind::Tdg];
const QUTRIT: [GateKind; 16] = [
    GateKind::X01,
    GateKind::X02,
    GateKind::X12,
    GateKind::Z0,
    GateKind::Z1,
    GateKind::Z2,
    GateKind::H3,
    GateKind::H3dg,
    GateKind::Chi,
    GateKind::ChiDg,
    GateKind::T3,
    GateKind::T3dg,
    GateKind::S3,
    GateKind::S3dg,
    GateKind::Swap,
    GateKind::Unitary,
];

fn sample() -> Circuit {
    // D27 mixed: wires p(0), q(1), r(2), all qutrits
    let mut circ = Circuit::new(GroupId::D27, Arch::Mixed);
    circ.push(Gate::new(GateKind::H3, &[2]));
    circ.push(Gate::new(GateKind::Chi, &[1]).ctrl(0, 2).ctrl(2, 1));
    circ.push(Gate::new(GateKind::T3dg, &[0]));
    circ.push(Gate::new(GateKind::Swap, &[0, 1]));
    let a = circ.add_ancilla();
    circ.push(Gate::rz(a, 0.1).ctrl(0, 0));
    circ.push(Gate::phase(a, -1.0 / 3.0));
    let h = std::f64::consts::FRAC_1_SQRT_2;
    circ.push(Gate::unitary(&[a], Matrix::from_rows(vec![vec![c(h, 0.0), c(0.0, h)], vec![c(0.0, h), c(h, 0.0)]])));
    circ
}

#[test]
fn json_roundtrip_is_byte_exact() {
    let circ = sample();
    let s = to_json(&circ);
    let back = from_json(&s).unwrap();
    assert_eq!(back, circ);
    assert_eq!(to_json(&back), s);
}

#[test]
fn json_layout() {
    let mut circ = Circuit::new(GroupId::Z2, Arch::Mixed);
    circ.push(Gate::new(GateKind::H, &[0]));
    circ.push(Gate::rz(0, 0.5));
    assert_eq!(
        to_json(&circ),
        "{\"group\":\"Z2\",\"arch\":\"mixed\",\"wires\":[{\"id\":0,\"dim\":2,\"role\":\"group-register\"}],\n\
         \"gates\":[\n\
         {\"kind\":\"H\",\"targets\":[0],\"controls\":[],\"params\":{}},\n\
         {\"kind\":\"Rz\",\"targets\":[0],\"controls\":[],\"params\":{\"theta\":0.5}}\n\
         ],\n\
         \"metadata\":{\"ancilla_count\":0}}\n"
    );
}

#[test]
fn json_rejects_bad_input() {
    let s = to_json(&sample());
    assert!(matches!(from_json(&s.replace("\"ancilla_count\":1", "\"ancilla_count\":2")), Err(_)));
    assert!(from_json(&s.replace("\"kind\":\"H3\"", "\"kind\":\"H7\"")).is_err());
    assert!(from_json(&s.replace("\"group\":\"D27\"", "\"group\":\"Q8\"")).is_err());
    assert!(from_json("{").is_err());
}

#[test]
fn qutrit_register_on_qubits_uses_pairs() {
    let circ = Circuit::new(GroupId::D27, Arch::Qubit);
    assert_eq!(circ.dims(), vec![2; 6]);
    assert_eq!(circ.layout.qutrit_pairs(), vec![(0, 1), (2, 3), (4, 5)]);
    let bt = Circuit::new(GroupId::BT, Arch::Mixed);
    assert_eq!(bt.dims(), vec![3, 2, 2, 2]);
}

#[test]
fn catalogue_is_unitary_and_inverses_cancel() {
    for k in QUBIT.into_iter().chain(QUTRIT) {
        let dims: Vec<usize> = match k {
            GateKind::Swap => vec![3, 3],
            k if QUBIT.contains(&k) => vec![2],
            _ => vec![3],
        };
        let targets: Vec<usize> = (0..dims.len()).collect();
        let g = if k == GateKind::Unitary {
            Gate::unitary(&targets, group_core::consts::dft(3))
        } else {
            Gate::new(k, &targets)
        };
        let m = g.matrix::<f64>(&dims).unwrap();
        assert!(m.is_unitary(1e-14), "{k}");
        let mi = g.inverse().matrix::<f64>(&dims).unwrap();
        assert!(mi.matmul(&m).is_identity(1e-14), "{k}");
        assert_eq!(k.to_string().parse::<GateKind>().unwrap(), k);
    }
    let h3p = Gate::new(GateKind::H3p, &[0, 1]).matrix::<f64>(&[2, 2]).unwrap();
    assert!(h3p.is_unitary(1e-14));
    assert_eq!(h3p[(0, 0)], c(1.0, 0.0));
}

#[test]
fn compose_checks_wires() {
    let a = sample();
    let b = Circuit::new(GroupId::D27, Arch::Mixed);
    assert!(matches!(a.compose(&b), Err(CircuitError::WireMismatch(_))));
    let ab = a.compose(&a.inverse()).unwrap();
    assert_eq!(ab.gates.len(), 2 * a.gates.len());
}

#[test]
fn validation_catches_bad_gates() {
    let mut circ = Circuit::new(GroupId::Q8, Arch::Mixed);
    circ.push(Gate::new(GateKind::X, &[0]).ctrl(0, 1));
    assert!(circ.validate().is_err());
    let mut circ = Circuit::new(GroupId::Q8, Arch::Mixed);
    circ.push(Gate::new(GateKind::X, &[7]));
    assert!(matches!(circ.validate(), Err(CircuitError::WireMismatch(_))));
    let mut circ = Circuit::new(GroupId::D27, Arch::Mixed);
    circ.push(Gate::new(GateKind::H, &[0]));
    assert!(circ.validate().is_err());
    let mut circ = Circuit::new(GroupId::Q8, Arch::Mixed);
    circ.push(Gate::new(GateKind::X, &[0]).ctrl(1, 2));
    assert!(circ.validate().is_err());
}

fn arb_gate() -> impl Strategy<Value = Gate> {
    (0usize..24, 0usize..3, 0usize..3, 0usize..3, -4.0f64..4.0).prop_map(|(k, t, cw, cv, th)| {
        let g = if k < QUTRIT.len() - 2 {
            Gate::new(QUTRIT[k], &[t])
        } else if k < QUTRIT.len() {
            Gate::unitary(&[t], group_core::consts::dft(3).scale(c(th.cos(), th.sin())))
        } else {
            Gate::new(GateKind::Swap, &[t, (t + 1) % 3])
        };
        if g.wires().any(|w| w == cw) {
            g
        } else {
            g.ctrl(cw, cv)
        }
    })
}

proptest! {
    #[test]
    fn inverse_twice_is_identity(gates in proptest::collection::vec(arb_gate(), 0..20)) {
        let mut circ = Circuit::new(GroupId::D27, Arch::Mixed);
        circ.extend(gates);
        prop_assert!(circ.validate().is_ok());
        let back = circ.inverse().inverse();
        prop_assert_eq!(back.gates.len(), circ.gates.len());
        for (a, b) in back.gates.iter().zip(&circ.gates) {
            prop_assert_eq!(a.kind, b.kind);
            prop_assert_eq!(&a.targets, &b.targets);
            prop_assert_eq!(&a.controls, &b.controls);
            if let (Params::Matrix(x), Params::Matrix(y)) = (&a.params, &b.params) {
                prop_assert!(x.approx_eq(y, 0.0));
            }
        }
        let s = to_json(&circ);
        prop_assert_eq!(to_json(&from_json(&s).unwrap()), s);
    }
}

use group_core::consts::{chi, su2_j, su2_k};
use group_core::scalar::c;
use group_core::{GroupElement, GroupId, Matrix};
use proptest::prelude::*;
use rep_theory::{classify_conjugates, dft_matrix, regular_rep, RepTable, RepTable32, RepTable64, Side};
use std::collections::BTreeSet;
use std::sync::OnceLock;

fn tables() -> &'static Vec<RepTable64> {
    static T: OnceLock<Vec<RepTable64>> = OnceLock::new();
    T.get_or_init(|| GroupId::ALL.iter().map(|&g| RepTable::new(g).unwrap()).collect())
}

fn table(id: GroupId) -> &'static RepTable64 {
    tables().iter().find(|t| t.id() == id).unwrap()
}

fn el(id: GroupId, e: &[u8]) -> GroupElement {
    GroupElement::new(id, e.to_vec()).unwrap()
}

#[test]
fn dimensions_are_complete() {
    let counts = [2, 4, 5, 7, 8, 9, 11, 10, 14];
    for (t, k) in tables().iter().zip(counts) {
        assert_eq!(t.irreps.len(), k, "{}", t.id());
        let s: usize = t.irreps.iter().map(|r| r.dim * r.dim).sum();
        assert_eq!(s, t.order(), "{}", t.id());
    }
    let s = table(GroupId::S36x3);
    let dims: Vec<usize> = s.irreps.iter().map(|r| r.dim).collect();
    assert_eq!(dims.iter().filter(|&&d| d == 1).count(), 4);
    assert_eq!(dims.iter().filter(|&&d| d == 3).count(), 8);
    assert_eq!(dims.iter().filter(|&&d| d == 4).count(), 2);
}

#[test]
fn images_are_unitary_homomorphisms() {
    for t in tables() {
        let g = &t.group;
        let n = t.order();
        for (r, irr) in t.irreps.iter().enumerate() {
            for img in &irr.images {
                assert!(img.is_unitary(1e-12), "{} {}", t.id(), irr.label);
            }
            for a in 0..n {
                for b in 0..n {
                    let lhs = &t.mats[r][g.mul_idx(a, b)];
                    let rhs = t.mats[r][a].matmul(&t.mats[r][b]);
                    assert!(lhs.max_diff(&rhs) < 1e-9, "{} {} not a homomorphism", t.id(), irr.label);
                }
            }
        }
    }
}

/// sum_g |chi(g)|^2 = |G| for each irrep, and rows are orthogonal.
#[test]
fn character_row_orthogonality() {
    for t in tables() {
        let n = t.order() as f64;
        for (i, a) in t.chars.iter().enumerate() {
            for (j, b) in t.chars.iter().enumerate() {
                let ip: num_complex::Complex<f64> = a.iter().zip(b).map(|(x, y)| x.conj() * y).sum();
                let want = if i == j { n } else { 0.0 };
                assert!((ip - c(want, 0.0)).norm() < 1e-9, "{} {} {}", t.id(), i, j);
            }
        }
    }
}

#[test]
fn character_column_orthogonality() {
    for t in tables() {
        let classes = t.group.conjugacy_classes();
        for (x, cx) in classes.iter().enumerate() {
            for (y, cy) in classes.iter().enumerate() {
                let s: num_complex::Complex<f64> =
                    t.chars.iter().map(|ch| ch[cx[0]].conj() * ch[cy[0]]).sum();
                if x != y {
                    assert!(s.norm() < 1e-9, "{}", t.id());
                } else {
                    let want = t.order() as f64 / cx.len() as f64;
                    assert!((s.re - want).abs() < 1e-9);
                }
            }
        }
    }
}

#[test]
fn characters_are_class_functions() {
    for t in tables() {
        for cls in t.group.conjugacy_classes() {
            for ch in &t.chars {
                for &x in &cls {
                    assert!((ch[x] - ch[cls[0]]).norm() < 1e-9);
                }
            }
        }
    }
}

#[test]
fn oracle_is_unitary() {
    for t in tables() {
        let f = dft_matrix(t);
        assert!(f.unitarity_residual() < 1e-9, "{}", t.id());
    }
    let z2 = dft_matrix(table(GroupId::Z2));
    assert!(z2.approx_eq(&group_core::consts::hadamard(), 1e-15));
}

#[test]
fn documented_values() {
    let bt = table(GroupId::BT);
    let r7 = bt.index_of("rho7").unwrap();
    let u = el(GroupId::BT, &[0, 0, 0, 1]);
    assert!(bt.irreps[r7].matrix(&u).unwrap().approx_eq(&chi(), 0.0));
    assert!(bt.character(r7, &u).unwrap().norm() < 1e-15);
    let q8 = table(GroupId::Q8);
    let x5 = q8.index_of("xi5").unwrap();
    assert_eq!(q8.character(x5, &el(GroupId::Q8, &[1, 0, 0])).unwrap(), c(-2.0, 0.0));
    let kj = q8.group.multiply(&el(GroupId::Q8, &[0, 0, 1]), &el(GroupId::Q8, &[0, 1, 0])).unwrap();
    let want = su2_k::<f64>().matmul(&su2_j());
    assert!(q8.irreps[x5].matrix(&kj).unwrap().approx_eq(&want, 1e-12));
    for t in tables() {
        let e = GroupElement::identity(t.id());
        for (i, r) in t.irreps.iter().enumerate() {
            assert!(r.matrix(&e).unwrap().is_identity(0.0));
            assert_eq!(t.character(i, &e).unwrap(), c(r.dim as f64, 0.0));
        }
    }
    assert!(q8.irreps[x5].matrix(&GroupElement::identity(GroupId::BT)).is_err());
}

#[test]
fn regular_representation() {
    let z4 = table(GroupId::Z4);
    let k = el(GroupId::Z4, &[0, 1]);
    let lk = regular_rep(&z4.group, &k, Side::Left).unwrap();
    assert!(lk.pow(4).is_identity(0.0));
    assert!(!lk.pow(2).is_identity(0.0));
    for t in tables() {
        let g = &t.group;
        let n = t.order();
        assert!(regular_rep(g, &GroupElement::identity(t.id()), Side::Left).unwrap().is_identity(0.0));
        for a in (0..n).step_by(5) {
            for b in (0..n).step_by(7) {
                for side in [Side::Left, Side::Right] {
                    let la = regular_rep(g, &g.element(a), side).unwrap();
                    let lb = regular_rep(g, &g.element(b), side).unwrap();
                    let lab = regular_rep(g, &g.element(g.mul_idx(a, b)), side).unwrap();
                    assert!(la.matmul(&lb).approx_eq(&lab, 0.0));
                }
            }
        }
    }
}

fn sets(orbits: Vec<Vec<&str>>) -> BTreeSet<BTreeSet<String>> {
    orbits.into_iter().map(|o| o.into_iter().map(String::from).collect()).collect()
}

#[test]
fn conjugate_orbits_su2_chain() {
    let c = classify_conjugates(table(GroupId::Q8), &table(GroupId::BT).group).unwrap();
    assert_eq!(c.extendable_labels(), ["xi1", "xi5"]);
    assert_eq!(sets(c.orbit_labels()), sets(vec![vec!["xi2", "xi4", "xi3"]]));
    let c = classify_conjugates(table(GroupId::BT), &table(GroupId::BO).group).unwrap();
    assert_eq!(c.extendable_labels(), ["rho1", "rho4", "rho7"]);
    assert_eq!(sets(c.orbit_labels()), sets(vec![vec!["rho2", "rho3"], vec!["rho5", "rho6"]]));
}

#[test]
fn conjugate_orbits_su3_chain() {
    let c = classify_conjugates(table(GroupId::Z3xZ3), &table(GroupId::D27).group).unwrap();
    assert_eq!(c.extendable_labels(), ["chi1", "chi2", "chi3"]);
    assert_eq!(sets(c.orbit_labels()), sets(vec![vec!["chi4", "chi5", "chi6"], vec!["chi7", "chi8", "chi9"]]));
    // w is central and xi10, xi11 differ on it, so each is fixed.
    let c = classify_conjugates(table(GroupId::D27), &table(GroupId::D54).group).unwrap();
    assert_eq!(c.extendable_labels(), ["xi1", "xi10", "xi11"]);
    assert_eq!(
        sets(c.orbit_labels()),
        sets(vec![vec!["xi2", "xi3"], vec!["xi4", "xi7"], vec!["xi5", "xi9"], vec!["xi6", "xi8"]])
    );
    let c = classify_conjugates(table(GroupId::D54), &table(GroupId::S36x3).group).unwrap();
    assert_eq!(c.extendable_labels(), ["rhobar1", "rhobar2", "rhobar7", "rhobar8", "rhobar9", "rhobar10"]);
    assert_eq!(sets(c.orbit_labels()), sets(vec![vec!["rhobar3", "rhobar4"], vec!["rhobar5", "rhobar6"]]));
}

#[test]
fn orbit_lengths_divide_transversal() {
    for t in tables() {
        let Some(p) = t.id().predecessor() else { continue };
        let c = classify_conjugates(table(p), &t.group).unwrap();
        let m = t.group.transversal().unwrap().len();
        let mut all: Vec<usize> = c.extendable.clone();
        for o in &c.orbits {
            assert_eq!(m % o.len(), 0);
            all.extend(o);
        }
        all.sort_unstable();
        assert_eq!(all, (0..table(p).irreps.len()).collect::<Vec<_>>());
    }
}

#[test]
fn single_precision_oracle() {
    let t: RepTable32 = RepTable::new(GroupId::BO).unwrap();
    let f = dft_matrix(&t);
    assert!(f.unitarity_residual() < 1e-5);
    let f64o = dft_matrix(table(GroupId::BO));
    assert!(f.cast::<f64>().max_diff(&f64o) < 1e-5);
}

#[test]
fn z2_z4_oracle_rows() {
    let f = dft_matrix(table(GroupId::Z4));
    let h = 0.5;
    let want = Matrix::from_rows(vec![
        vec![c(h, 0.0); 4],
        vec![c(h, 0.0), c(-h, 0.0), c(h, 0.0), c(-h, 0.0)],
        vec![c(h, 0.0), c(0.0, h), c(-h, 0.0), c(0.0, -h)],
        vec![c(h, 0.0), c(0.0, -h), c(-h, 0.0), c(0.0, h)],
    ]);
    assert!(f.approx_eq(&want, 1e-15));
}

proptest! {
    #[test]
    fn s108_homomorphism_sampled(a in 0..108usize, b in 0..108usize, r in 0..14usize) {
        let t = table(GroupId::S36x3);
        let g = &t.group;
        let lhs = t.irreps[r].matrix(&g.element(g.mul_idx(a, b))).unwrap();
        let rhs = t.irreps[r].matrix(&g.element(a)).unwrap().matmul(&t.irreps[r].matrix(&g.element(b)).unwrap());
        prop_assert!(lhs.max_diff(&rhs) < 1e-9);
    }
}

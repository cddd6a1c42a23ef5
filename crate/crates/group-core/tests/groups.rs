use group_core::{Group, Group32, Group64, GroupElement, GroupError, GroupId};
use proptest::prelude::*;
use std::sync::OnceLock;

fn groups() -> &'static Vec<Group64> {
    static G: OnceLock<Vec<Group64>> = OnceLock::new();
    G.get_or_init(|| GroupId::ALL.iter().map(|&g| Group::new(g).unwrap()).collect())
}

fn group(id: GroupId) -> &'static Group64 {
    groups().iter().find(|g| g.id == id).unwrap()
}

fn el(id: GroupId, exps: &[u8]) -> GroupElement {
    GroupElement::new(id, exps.to_vec()).unwrap()
}

#[test]
fn orders_match_enumeration() {
    let expect = [2, 4, 8, 24, 48, 9, 27, 54, 108];
    for (g, n) in groups().iter().zip(expect) {
        assert_eq!(g.order(), n, "{}", g.id);
        assert_eq!(g.id.order(), n);
    }
}

#[test]
fn cayley_tables_are_latin_squares() {
    for g in groups() {
        let n = g.order();
        for i in 0..n {
            let mut row: Vec<usize> = (0..n).map(|j| g.mul_idx(i, j)).collect();
            let mut col: Vec<usize> = (0..n).map(|j| g.mul_idx(j, i)).collect();
            row.sort_unstable();
            col.sort_unstable();
            assert_eq!(row, (0..n).collect::<Vec<_>>());
            assert_eq!(col, (0..n).collect::<Vec<_>>());
        }
    }
}

#[test]
fn matrices_are_distinct_and_unitary() {
    for g in groups() {
        for (i, a) in g.matrices.iter().enumerate() {
            assert!(a.is_unitary(1e-12));
            for b in &g.matrices[..i] {
                assert!(a.max_diff(b) > 0.1);
            }
        }
    }
}

#[test]
fn class_counts() {
    let expect = [2, 4, 5, 7, 8, 9, 11, 10, 14];
    for (g, n) in groups().iter().zip(expect) {
        assert_eq!(g.conjugacy_classes().len(), n, "{}", g.id);
    }
}

#[test]
fn documented_conjugations() {
    let bt = group(GroupId::BT);
    // The BT display reads as u^-1 h u; with t h t^-1 that is t = u^2.
    let u2 = el(GroupId::BT, &[0, 0, 0, 2]);
    assert_eq!(bt.conjugate(&u2, &el(GroupId::BT, &[0, 1, 0, 0])).unwrap(), el(GroupId::BT, &[0, 0, 1, 0]));
    // u j u^-1 = -jk
    assert_eq!(bt.conjugate(&el(GroupId::BT, &[0, 0, 0, 1]), &el(GroupId::BT, &[0, 1, 0, 0])).unwrap(), el(GroupId::BT, &[1, 1, 1, 0]));
    let d54 = group(GroupId::D54);
    let c2 = el(GroupId::D54, &[0, 2, 0, 0]);
    assert_eq!(d54.conjugate(&el(GroupId::D54, &[0, 0, 0, 1]), &el(GroupId::D54, &[0, 1, 0, 0])).unwrap(), c2);
    let s = group(GroupId::S36x3);
    assert_eq!(
        s.conjugate(&el(GroupId::S36x3, &[0, 0, 0, 0, 1]), &el(GroupId::S36x3, &[0, 0, 1, 0, 0])).unwrap(),
        el(GroupId::S36x3, &[0, 2, 0, 0, 0])
    );
}

/// The two BT displays fix the j, k exponents; the sign exponent is a polynomial
/// in b, c. u^-1 h u = +-j^c k^(b+c) and u h u^-1 = +-j^(b+c) k^b.
#[test]
fn bt_conjugation_formula() {
    let bt = group(GroupId::BT);
    let u = el(GroupId::BT, &[0, 0, 0, 1]);
    let u2 = el(GroupId::BT, &[0, 0, 0, 2]);
    for a in 0..2u8 {
        for b in 0..2u8 {
            for c in 0..2u8 {
                let h = el(GroupId::BT, &[a, b, c, 0]);
                let x = bt.conjugate(&u2, &h).unwrap();
                assert_eq!((x.exps[1], x.exps[2], x.exps[3]), (c, (b + c) % 2, 0));
                assert_eq!(x.exps[0], (a + c) % 2);
                let y = bt.conjugate(&u, &h).unwrap();
                assert_eq!((y.exps[1], y.exps[2], y.exps[3]), ((b + c) % 2, b, 0));
            }
        }
    }
}

/// V h V^-1 = w^(p+2qr) C^(2r) E^q for h = w^p C^q E^r.
#[test]
fn s108_conjugation_formula() {
    let s = group(GroupId::S36x3);
    let v = el(GroupId::S36x3, &[0, 0, 0, 0, 1]);
    for p in 0..3u8 {
        for q in 0..3u8 {
            for r in 0..3u8 {
                let h = el(GroupId::S36x3, &[p, q, r, 0, 0]);
                let want = el(GroupId::S36x3, &[(p + 2 * q * r) % 3, (2 * r) % 3, q, 0, 0]);
                assert_eq!(s.conjugate(&v, &h).unwrap(), want);
            }
        }
    }
}

/// V^2 h V^2 = w^p C^(2q) E^(2r)
#[test]
fn d54_conjugation_formula() {
    let d = group(GroupId::D54);
    let v2 = el(GroupId::D54, &[0, 0, 0, 1]);
    for p in 0..3u8 {
        for q in 0..3u8 {
            for r in 0..3u8 {
                let h = el(GroupId::D54, &[p, q, r, 0]);
                assert_eq!(d.conjugate(&v2, &h).unwrap(), el(GroupId::D54, &[p, (2 * q) % 3, (2 * r) % 3, 0]));
            }
        }
    }
}

#[test]
fn normality_of_predecessors() {
    for g in groups() {
        let Some(sub) = g.id.predecessor() else { continue };
        for t in g.transversal().unwrap() {
            for h in group(sub).elements() {
                let x = g.conjugate(&t, &g.embed(&h).unwrap()).unwrap();
                let ts = g.id.transversal_slot().unwrap();
                assert_eq!(x.exps[ts], 0, "{} not normal", g.id);
            }
        }
    }
}

#[test]
fn documented_products() {
    let q8 = group(GroupId::Q8);
    let k = el(GroupId::Q8, &[0, 0, 1]);
    let j = el(GroupId::Q8, &[0, 1, 0]);
    assert_eq!(q8.multiply(&k, &j).unwrap(), el(GroupId::Q8, &[1, 1, 1]));
    assert_eq!(q8.inverse(&j).unwrap(), el(GroupId::Q8, &[1, 1, 0]));
    let bt = group(GroupId::BT);
    let u = el(GroupId::BT, &[0, 0, 0, 1]);
    assert_eq!(bt.multiply(&el(GroupId::BT, &[0, 0, 0, 2]), &u).unwrap(), GroupElement::identity(GroupId::BT));
    assert!(bt.matrix(&u).unwrap().pow(3).is_identity(1e-12));
    let d27 = group(GroupId::D27);
    assert_eq!(d27.multiply(&el(GroupId::D27, &[0, 1, 0]), &el(GroupId::D27, &[0, 0, 1])).unwrap(), el(GroupId::D27, &[0, 1, 1]));
    let bo = group(GroupId::BO);
    let names: Vec<String> = bo.transversal().unwrap().iter().map(|x| x.to_string()).collect();
    assert_eq!(names, ["1", "t"]);
    let names: Vec<String> = bt.transversal().unwrap().iter().map(|x| x.to_string()).collect();
    assert_eq!(names, ["1", "u", "u^2"]);
}

#[test]
fn transversals_partition_into_cosets() {
    for g in groups() {
        let Some(sub) = g.id.predecessor() else { continue };
        let h = group(sub);
        let reps = g.transversal().unwrap();
        let mut seen = vec![false; g.order()];
        for hh in h.elements() {
            let e = g.embed(&hh).unwrap();
            for t in &reps {
                let x = g.multiply(&e, t).unwrap().index();
                assert!(!seen[x], "{} coset overlap", g.id);
                seen[x] = true;
            }
        }
        assert!(seen.iter().all(|&b| b), "{}", g.id);
    }
}

#[test]
fn errors_are_typed() {
    let q8 = group(GroupId::Q8);
    let a = GroupElement::identity(GroupId::Q8);
    let b = GroupElement::identity(GroupId::BT);
    assert_eq!(q8.multiply(&a, &b), Err(GroupError::GroupMismatch(GroupId::Q8, GroupId::BT)));
    assert!(GroupElement::new(GroupId::Q8, vec![0, 2, 0]).is_err());
    assert!("foo".parse::<GroupId>().is_err());
    assert_eq!("s36x3".parse::<GroupId>().unwrap(), GroupId::S36x3);
}

#[test]
fn single_precision_tables_agree() {
    for id in [GroupId::BO, GroupId::S36x3] {
        let g32: Group32 = Group::new(id).unwrap();
        assert_eq!(g32.table(), group(id).table());
    }
}

fn any_pair() -> impl Strategy<Value = (GroupId, usize, usize, usize)> {
    (0..9usize, 0..108usize, 0..108usize, 0..108usize).prop_map(|(g, a, b, c)| {
        let id = GroupId::ALL[g];
        let n = id.order();
        (id, a % n, b % n, c % n)
    })
}

proptest! {
    #[test]
    fn associativity((id, a, b, c) in any_pair()) {
        let g = group(id);
        prop_assert_eq!(g.mul_idx(g.mul_idx(a, b), c), g.mul_idx(a, g.mul_idx(b, c)));
    }

    #[test]
    fn inverse_and_identity((id, a, _b, _c) in any_pair()) {
        let g = group(id);
        let e = GroupElement::identity(id).index();
        prop_assert_eq!(g.mul_idx(a, g.inv_idx(a)), e);
        prop_assert_eq!(g.mul_idx(e, a), a);
        prop_assert_eq!(g.order() % g.element_order(a), 0);
    }

    #[test]
    fn table_matches_matrix_product((id, a, b, _c) in any_pair()) {
        let g = group(id);
        let p = g.matrices[a].matmul(&g.matrices[b]);
        prop_assert!(p.max_diff(&g.matrices[g.mul_idx(a, b)]) < 1e-9);
    }

    #[test]
    fn index_roundtrip((id, a, _b, _c) in any_pair()) {
        prop_assert_eq!(GroupElement::from_index(id, a).index(), a);
    }
}

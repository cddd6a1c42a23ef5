use group_core::GroupId;

/// Irrep label per block of register basis states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepBasisAssignment {
    pub group: GroupId,
    /// (label, register states in increasing order)
    pub blocks: Vec<(String, Vec<usize>)>,
}

impl IrrepBasisAssignment {
    /// Render a register state as its digit string, most significant wire first.
    pub fn digits(group: GroupId, state: usize) -> String {
        group.register_digits(state).iter().map(|(_, d)| char::from(b'0' + d)).collect()
    }
}

fn state(group: GroupId, digits: &[(char, u8)]) -> usize {
    let exps: Vec<u8> = group
        .slots()
        .iter()
        .map(|s| digits.iter().find(|(l, _)| *l == s.letter).map_or(0, |x| x.1))
        .collect();
    group.register_state(&exps)
}

fn block(group: GroupId, label: String, digits: Vec<Vec<(char, u8)>>) -> (String, Vec<usize>) {
    let mut v: Vec<usize> = digits.iter().map(|d| state(group, d)).collect();
    v.sort_unstable();
    v.dedup();
    (label, v)
}

/// Published irrep-to-basis listings, in register digits. Q8 and BT use the
/// SU(2) letters, D27 reads |a k b> as (p, r, q) and D54 reads |s r q p>.
/// Returns `None` for groups without a listing.
pub fn reference_assignment(group: GroupId) -> Option<IrrepBasisAssignment> {
    let g = group;
    let l = |p: &str, k: usize| format!("{p}{k}");
    let blocks = match group {
        GroupId::Q8 => vec![
            block(g, l("xi", 1), vec![vec![]]),
            block(g, l("xi", 2), vec![vec![('b', 1)]]),
            block(g, l("xi", 3), vec![vec![('c', 1)]]),
            block(g, l("xi", 4), vec![vec![('b', 1), ('c', 1)]]),
            block(g, l("xi", 5), (0..4).map(|x| vec![('a', 1), ('b', x & 1), ('c', x >> 1)]).collect()),
        ],
        GroupId::BT => {
            let mut v: Vec<_> = (0..3u8).map(|d| block(g, l("rho", 1 + d as usize), vec![vec![('d', d)]])).collect();
            for d in 0..3u8 {
                v.push(block(
                    g,
                    l("rho", 4 + d as usize),
                    (0..4).map(|x| vec![('d', d), ('a', 1), ('b', x & 1), ('c', x >> 1)]).collect(),
                ));
            }
            v.push(block(
                g,
                l("rho", 7),
                (0..3u8)
                    .flat_map(|d| [(1u8, 0u8), (0, 1), (1, 1)].map(|(c, b)| vec![('d', d), ('c', c), ('b', b)]))
                    .collect(),
            ));
            v
        }
        GroupId::D27 => {
            let mut v: Vec<_> = (0..9u8)
                .map(|x| block(g, l("xi", 1 + x as usize), vec![vec![('r', x / 3), ('q', x % 3)]]))
                .collect();
            for p in 1..3u8 {
                v.push(block(
                    g,
                    l("xi", 9 + p as usize),
                    (0..9u8).map(|x| vec![('p', p), ('r', x / 3), ('q', x % 3)]).collect(),
                ));
            }
            v
        }
        GroupId::D54 => {
            let lit = |s: &str| -> Vec<(char, u8)> {
                s.bytes().zip(['s', 'r', 'q', 'p']).map(|(b, c)| (c, b - b'0')).collect()
            };
            let lits = |xs: &[&str]| xs.iter().map(|x| lit(x)).collect::<Vec<_>>();
            let mut v = vec![
                block(g, l("rhobar", 1), lits(&["0000"])),
                block(g, l("rhobar", 2), lits(&["1000"])),
                block(g, l("rhobar", 3), lits(&["0100", "0200", "0210", "0020"])),
                block(g, l("rhobar", 4), lits(&["1100", "1200", "1210", "1020"])),
                block(g, l("rhobar", 5), lits(&["0010", "0020", "0120", "0220"])),
                block(g, l("rhobar", 6), lits(&["1000", "1110", "1120", "1220"])),
            ];
            for (k, (s, p)) in [(0u8, 1u8), (1, 1), (0, 2), (1, 2)].into_iter().enumerate() {
                v.push(block(
                    g,
                    l("rhobar", 7 + k),
                    (0..9u8).map(|x| vec![('s', s), ('r', x / 3), ('q', x % 3), ('p', p)]).collect(),
                ));
            }
            v
        }
        _ => return None,
    };
    Some(IrrepBasisAssignment { group, blocks })
}

use crate::{Impl, ResourceError, Symbolic};
use group_core::GroupId;

/// Published T-count row: a + b log2(1/eps).
#[derive(Clone, Debug, PartialEq)]
pub struct CostFormula {
    pub group: GroupId,
    pub implementation: Impl,
    pub t: Symbolic,
    pub t_width: u32,
    pub ancilla: u32,
}

/// Basic gate costs: (gate, T count, T width, clean ancillae).
pub const BASIC_GATES: [(&str, Symbolic, Option<u32>, u32); 3] = [
    ("C2NOT", Symbolic { a: 7.0, b: 0.0 }, None, 0),
    ("C3NOT", Symbolic { a: 21.0, b: 0.0 }, Some(1), 1),
    ("Rz", Symbolic { a: 0.0, b: 1.15 }, Some(1), 0),
];

pub const TOFFOLI_T: f64 = 7.0;
pub const C3NOT_T: f64 = 21.0;
pub const RZ_T_PER_BIT: f64 = 1.15;

const fn row(group: GroupId, implementation: Impl, a: f64, b: f64, t_width: u32, ancilla: u32) -> CostFormula {
    CostFormula { group, implementation, t: Symbolic { a, b }, t_width, ancilla }
}

/// Every published row, including the second BT FT figure.
pub const TABLE7: [CostFormula; 9] = [
    row(GroupId::BT, Impl::Ft, 0.0, 3735.2, 5, 0),
    row(GroupId::BT, Impl::Ft, 0.0, 2802.55, 5, 0),
    row(GroupId::BT, Impl::Fft, 98.0, 48.3, 2, 2),
    row(GroupId::BO, Impl::Ft, 0.0, 11370.1, 6, 0),
    row(GroupId::BO, Impl::Fft, 216.0, 48.3, 2, 4),
    row(GroupId::D27, Impl::Fft, 168.0, 80.5, 4, 2),
    row(GroupId::D54, Impl::Fft, 294.0, 80.5, 4, 5),
    row(GroupId::S36x3, Impl::Ft, 0.0, 185898.0, 4, 0),
    row(GroupId::S36x3, Impl::Fft, 532.0, 117.3, 8, 8),
];

/// First published row for the pair.
pub fn table7(group: GroupId, implementation: Impl) -> Result<CostFormula, ResourceError> {
    TABLE7
        .iter()
        .find(|r| r.group == group && r.implementation == implementation)
        .cloned()
        .ok_or(ResourceError::UnknownRow(group, implementation))
}

/// Cheapest published row for the pair.
pub fn table7_best(group: GroupId, implementation: Impl) -> Result<CostFormula, ResourceError> {
    TABLE7
        .iter()
        .filter(|r| r.group == group && r.implementation == implementation)
        .min_by(|x, y| x.t.b.total_cmp(&y.t.b).then(x.t.a.total_cmp(&y.t.a)))
        .cloned()
        .ok_or(ResourceError::UnknownRow(group, implementation))
}

/// Simulation cost C(d, eps) = cd d + c0 + (l0 + ld d) log2(1/eps), with the
/// error budget eps~(d) = k (e0 + ed d) and the quoted fiducial T count.
#[derive(Clone, Debug, PartialEq)]
pub struct SimCostModel {
    pub group: GroupId,
    pub implementation: Impl,
    pub cd: f64,
    pub c0: f64,
    pub l0: f64,
    pub ld: f64,
    pub eps_scale: f64,
    pub e0: f64,
    pub ed: f64,
    pub n_fid: f64,
    pub r_qft: f64,
}

impl SimCostModel {
    pub fn cost(&self, d: u32, epsilon: f64) -> Result<f64, ResourceError> {
        let bits = log_bits(epsilon)?;
        let d = d as f64;
        Ok(self.cd * d + self.c0 + (self.l0 + self.ld * d) * bits)
    }

    pub fn error_budget(&self, d: u32) -> f64 {
        self.eps_scale * (self.e0 + self.ed * d as f64)
    }
}

#[allow(clippy::too_many_arguments)]
const fn sim(
    group: GroupId,
    implementation: Impl,
    cd: f64,
    c0: f64,
    l0: f64,
    ld: f64,
    eps: (f64, f64, f64),
    n_fid: f64,
    r_qft: f64,
) -> SimCostModel {
    SimCostModel { group, implementation, cd, c0, l0, ld, eps_scale: eps.0, e0: eps.1, ed: eps.2, n_fid, r_qft }
}

pub const TABLE8: [SimCostModel; 6] = [
    sim(GroupId::BT, Impl::Ft, 4676.0, -3948.0, 11191.2, 18.975, (0.5, 19463.0, 33.0), 9.8e10, 29.0),
    sim(GroupId::BT, Impl::Fft, 4676.0, -3556.0, 174.225, 18.975, (1.5, 101.0, 11.0), 3.4e9, 29.0),
    sim(GroupId::BO, Impl::Ft, 11949.0, -10157.0, 45473.3, 6.9, (2.0, 19771.0, 3.0), 4.1e11, 73.0),
    sim(GroupId::BO, Impl::Fft, 11949.0, -9293.0, 186.3, 6.9, (6.0, 27.0, 1.0), 5.6e9, 73.0),
    sim(GroupId::S36x3, Impl::Ft, 9632.0, -8192.0, 744167.0, 12.075, (1.5, 431401.0, 7.0), 7.0e12, 580.0),
    sim(GroupId::S36x3, Impl::Fft, 9632.0, -6034.0, 1045.93, 12.075, (0.5, 1819.0, 21.0), 1.2e10, 580.0),
];

pub fn sim_model(group: GroupId, implementation: Impl) -> Result<SimCostModel, ResourceError> {
    TABLE8
        .iter()
        .find(|r| r.group == group && r.implementation == implementation)
        .cloned()
        .ok_or(ResourceError::UnknownRow(group, implementation))
}

pub fn simcost(group: GroupId, implementation: Impl, d: u32, epsilon: f64) -> Result<f64, ResourceError> {
    if d == 0 {
        return Err(ResourceError::BadDimension(d));
    }
    sim_model(group, implementation)?.cost(d, epsilon)
}

/// log2(1/eps) for eps in (0, 1].
pub fn log_bits(epsilon: f64) -> Result<f64, ResourceError> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(ResourceError::BadEpsilon(epsilon));
    }
    Ok(-epsilon.log2())
}

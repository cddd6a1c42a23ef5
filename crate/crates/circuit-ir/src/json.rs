//! Circuit JSON. Field order is fixed and floats are written with 17
//! significant digits, so equal circuits serialize to equal bytes.

use crate::{Arch, Circuit, CircuitError, Control, Gate, GateKind, Params, Wire, WireRole};
use group_core::scalar::c;
use group_core::{GroupId, Mat};
use serde_json::Value;
use std::fmt::Write;

/// C-style `%.17g`.
pub fn fmt_g17(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.16e}", x);
    let (mant, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let sign = if neg { "-" } else { "" };
    if !(-4..17).contains(&exp) {
        let m = trim_zeros(&format!("{}.{}", &digits[..1], &digits[1..]));
        let es = if exp < 0 { '-' } else { '+' };
        return format!("{sign}{m}e{es}{:02}", exp.abs());
    }
    let s = if exp >= 0 {
        let p = exp as usize + 1;
        format!("{}.{}", &digits[..p], &digits[p..])
    } else {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    };
    format!("{sign}{}", trim_zeros(&s))
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn write_params(out: &mut String, p: &Params) {
    match p {
        Params::None => out.push_str("{}"),
        Params::Theta(t) => {
            let _ = write!(out, "{{\"theta\":{}}}", fmt_g17(*t));
        }
        Params::Matrix(m) => {
            out.push_str("{\"matrix\":[");
            for i in 0..m.rows() {
                if i > 0 {
                    out.push(',');
                }
                out.push('[');
                for j in 0..m.cols() {
                    if j > 0 {
                        out.push(',');
                    }
                    let z = m[(i, j)];
                    let _ = write!(out, "[{},{}]", fmt_g17(z.re), fmt_g17(z.im));
                }
                out.push(']');
            }
            out.push_str("]}");
        }
    }
}

pub fn to_json(c: &Circuit) -> String {
    let mut out = String::new();
    let _ = write!(out, "{{\"group\":\"{}\",\"arch\":\"{}\",\"wires\":[", c.group().name(), c.arch().name());
    for (i, w) in c.wires.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{{\"id\":{},\"dim\":{},\"role\":\"{}\"}}", w.id, w.dim, w.role.name());
    }
    out.push_str("],\n\"gates\":[");
    for (i, g) in c.gates.iter().enumerate() {
        out.push_str(if i > 0 { ",\n" } else { "\n" });
        let _ = write!(out, "{{\"kind\":\"{}\",\"targets\":[", g.kind.name());
        let ts: Vec<String> = g.targets.iter().map(|t| t.to_string()).collect();
        out.push_str(&ts.join(","));
        out.push_str("],\"controls\":[");
        let cs: Vec<String> =
            g.controls.iter().map(|c| format!("{{\"wire\":{},\"value\":{}}}", c.wire, c.value)).collect();
        out.push_str(&cs.join(","));
        out.push_str("],\"params\":");
        write_params(&mut out, &g.params);
        out.push('}');
    }
    let _ = write!(out, "\n],\n\"metadata\":{{\"ancilla_count\":{}}}}}\n", c.ancilla_count());
    out
}

fn perr(msg: impl Into<String>) -> CircuitError {
    CircuitError::Parse(msg.into())
}

fn field<'a>(v: &'a Value, k: &str) -> Result<&'a Value, CircuitError> {
    v.get(k).ok_or_else(|| perr(format!("missing field `{k}`")))
}

fn uint(v: &Value, k: &str) -> Result<usize, CircuitError> {
    field(v, k)?.as_u64().map(|x| x as usize).ok_or_else(|| perr(format!("`{k}` is not an integer")))
}

fn string<'a>(v: &'a Value, k: &str) -> Result<&'a str, CircuitError> {
    field(v, k)?.as_str().ok_or_else(|| perr(format!("`{k}` is not a string")))
}

fn array<'a>(v: &'a Value, k: &str) -> Result<&'a Vec<Value>, CircuitError> {
    field(v, k)?.as_array().ok_or_else(|| perr(format!("`{k}` is not an array")))
}

fn parse_matrix(v: &Value) -> Result<Mat, CircuitError> {
    let rows = v.as_array().ok_or_else(|| perr("matrix is not an array"))?;
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        let r = r.as_array().ok_or_else(|| perr("matrix row is not an array"))?;
        let mut row = Vec::with_capacity(r.len());
        for z in r {
            match z.as_array().map(|a| a.as_slice()) {
                Some([a, b]) => {
                    let (a, b) = (a.as_f64(), b.as_f64());
                    row.push(c(a.ok_or_else(|| perr("bad re"))?, b.ok_or_else(|| perr("bad im"))?));
                }
                _ => return Err(perr("matrix entry is not [re, im]")),
            }
        }
        out.push(row);
    }
    if out.is_empty() || out.iter().any(|r| r.len() != out.len()) {
        return Err(perr("matrix is not square"));
    }
    Ok(Mat::from_rows(out))
}

fn parse_gate(v: &Value) -> Result<Gate, CircuitError> {
    let kind: GateKind = string(v, "kind")?.parse()?;
    let targets = array(v, "targets")?
        .iter()
        .map(|t| t.as_u64().map(|x| x as usize).ok_or_else(|| perr("bad target")))
        .collect::<Result<Vec<_>, _>>()?;
    let controls = array(v, "controls")?
        .iter()
        .map(|c| Ok(Control { wire: uint(c, "wire")?, value: uint(c, "value")? }))
        .collect::<Result<Vec<_>, CircuitError>>()?;
    let p = field(v, "params")?.as_object().ok_or_else(|| perr("params is not an object"))?;
    let params = if let Some(t) = p.get("theta") {
        Params::Theta(t.as_f64().ok_or_else(|| perr("bad theta"))?)
    } else if let Some(m) = p.get("matrix") {
        Params::Matrix(parse_matrix(m)?)
    } else {
        Params::None
    };
    Ok(Gate { kind, targets, controls, params })
}

pub fn from_json(s: &str) -> Result<Circuit, CircuitError> {
    let v: Value = serde_json::from_str(s).map_err(|e| perr(e.to_string()))?;
    let group: GroupId = string(&v, "group")?.parse().map_err(|e: group_core::GroupError| perr(e.to_string()))?;
    let arch: Arch = string(&v, "arch")?.parse()?;
    let mut circ = Circuit::new(group, arch);
    let wires = array(&v, "wires")?
        .iter()
        .map(|w| Ok(Wire { id: uint(w, "id")?, dim: uint(w, "dim")?, role: string(w, "role")?.parse()? }))
        .collect::<Result<Vec<_>, CircuitError>>()?;
    let nreg = circ.wires.len();
    if wires.len() < nreg || wires[..nreg] != circ.wires[..] {
        return Err(CircuitError::WireMismatch("register wires do not match the group layout".into()));
    }
    for w in &wires[nreg..] {
        if w.role != WireRole::AncillaClean || w.dim != 2 {
            return Err(CircuitError::WireMismatch(format!("extra wire {} is not a clean qubit ancilla", w.id)));
        }
        circ.add_ancilla();
    }
    if circ.wires != wires {
        return Err(CircuitError::WireMismatch("wire ids are not consecutive".into()));
    }
    circ.gates = array(&v, "gates")?.iter().map(parse_gate).collect::<Result<_, _>>()?;
    let anc = uint(field(&v, "metadata")?, "ancilla_count")?;
    if anc != circ.ancilla_count() {
        return Err(perr("metadata ancilla_count disagrees with the wire list"));
    }
    circ.validate()?;
    Ok(circ)
}

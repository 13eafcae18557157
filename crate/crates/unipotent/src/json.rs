//! JSON views of the library types. Rationals are strings; object keys come
//! out sorted, so emitted text is canonical.

use serde_json::{json, Map, Value};

use crate::orbit::{Case, Orbit};
use crate::packet::{ArthurPacket, LanglandsParam, Member};
use crate::parameter::{ArthurParameter, Summand};
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::spectral::SpAnalysis;
use crate::symbol::{abar_mp_rank, Symbol};

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn orbit(o: &Orbit) -> Value {
    let mut m = Map::new();
    m.insert("family".into(), json!(o.family().name()));
    m.insert("partition".into(), partition(o.partition()));
    if let Some(l) = o.label() {
        m.insert("label".into(), json!(l));
    }
    Value::Object(m)
}

pub fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| json!(x.to_string())).collect())
}

pub fn param(p: &LanglandsParam) -> Value {
    json!({ "lambda": scalars(&p.lambda), "mu": scalars(&p.mu) })
}

pub fn symbol(s: &Symbol) -> Value {
    let ps = s.pair_structure();
    let pairs: Vec<Value> = ps.pairs.iter().map(|p| json!([p.values.0, p.values.1])).collect();
    let mut m = Map::new();
    m.insert("family".into(), json!(s.case().name()));
    m.insert("top".into(), json!(s.top()));
    m.insert("bottom".into(), json!(s.bottom()));
    m.insert("pairs".into(), Value::Array(pairs));
    m.insert("unequal".into(), json!(ps.pairs.iter().map(|p| !p.equal).collect::<Vec<_>>()));
    m.insert("m".into(), json!(s.lusztig_rank()));
    if s.case() == Case::Mpn {
        let mut parts = s.source_parts().unwrap_or_default();
        parts.retain(|&p| p > 0);
        if let Ok(r) = abar_mp_rank(&Partition::from_unsorted(parts)) {
            m.insert("abar_mp_rank".into(), json!(r));
        }
    }
    Value::Object(m)
}

pub fn packet(o: &Orbit, case: Case, members: &[Member]) -> Value {
    let members: Vec<Value> = members
        .iter()
        .map(|m| json!({ "eps": m.eps, "lambda": scalars(&m.param.lambda), "mu": scalars(&m.param.mu) }))
        .collect();
    json!({ "orbit": partition(o.partition()), "group": case.name(), "members": members })
}

pub fn summands(s: &[Summand]) -> Value {
    Value::Array(
        s.iter()
            .map(|s| json!({ "a": s.chi.a.to_string(), "b": s.chi.b.to_string(), "dim": s.dim }))
            .collect(),
    )
}

pub fn parameter(psi: &ArthurParameter) -> Value {
    psi.to_json()
}

/// Character values are listed per generator as `1` or `-1`.
pub fn arthur_packet(psi: &ArthurParameter, pk: &ArthurPacket) -> Value {
    let members: Vec<Value> = pk
        .members
        .iter()
        .map(|m| {
            let values: Vec<i64> =
                (0..pk.generators.len()).map(|i| if m.character >> i & 1 == 1 { -1 } else { 1 }).collect();
            match &m.param {
                Some(p) => json!({ "character": values, "lambda": scalars(&p.lambda), "mu": scalars(&p.mu) }),
                None => json!({ "character": values, "zero": true }),
            }
        })
        .collect();
    json!({ "parameter": parameter(psi), "generators": pk.generators, "members": members })
}

pub fn analysis(psi: &ArthurParameter, a: &SpAnalysis) -> Value {
    json!({
        "parameter": parameter(psi),
        "psi_bp": summands(&a.psi_bp),
        "exchangeable": a.exchangeable,
        "u0": orbit(&a.u0),
        "u_sp": orbit(&a.u_sp),
        "psi_sp": parameter(&a.psi_sp),
    })
}

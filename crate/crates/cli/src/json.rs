//! JSON wire encodings of the algebra objects and the field-descriptor
//! string syntax (`q`, `fp:P`, `dual:fp:P`).

use anyhow::{anyhow, bail, Result};
use quotlab_core::{
    ChartMatrix, FieldElement, FieldKind, GroebnerBasis, Ideal, IncidencePair, MonomialOrder,
    Polynomial, QuotIdeal, Submodule,
};
use serde_json::{json, Value};

/// Parse a field descriptor: `q`, `fp:P` or `dual:fp:P`.
pub fn parse_field(s: &str) -> Result<FieldKind> {
    if s == "q" {
        return Ok(FieldKind::Rational);
    }
    if let Some(p) = s.strip_prefix("fp:") {
        let p: u64 = p.parse().map_err(|_| anyhow!("bad prime in `{s}`"))?;
        return Ok(FieldKind::fp(p)?);
    }
    if let Some(p) = s.strip_prefix("dual:fp:") {
        let p: u64 = p.parse().map_err(|_| anyhow!("bad prime in `{s}`"))?;
        return Ok(FieldKind::dual_fp(p)?);
    }
    bail!("unknown field descriptor `{s}` (expected q, fp:P or dual:fp:P)")
}

pub fn field_string(kind: &FieldKind) -> String {
    kind.to_string()
}

fn order_string(order: MonomialOrder) -> String {
    match order {
        MonomialOrder::GrevLex => "grevlex".into(),
        MonomialOrder::Lex => "lex".into(),
        MonomialOrder::Block { head } => format!("block:{head}"),
    }
}

/// Wire form of one coefficient: `num/den`, decimal residue, or `a+b*eps`.
fn coeff_string(c: &FieldElement) -> String {
    c.wire_string()
}

/// `{"vars": […], "field": "…", "terms": [[coeff, [e…]], …]}` with terms in
/// descending ring order.
pub fn poly_to_json(p: &Polynomial) -> Value {
    let ring = p.ring();
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(m, c)| json!([coeff_string(c), m.exps()]))
        .collect();
    json!({
        "vars": ring.vars(),
        "field": field_string(ring.field()),
        "terms": terms,
    })
}

fn groebner_to_json(gb: &GroebnerBasis) -> Value {
    json!({
        "order": order_string(gb.order()),
        "basis": gb.elements().iter().map(poly_to_json).collect::<Vec<_>>(),
    })
}

/// `{"ring": {…}, "generators": […], "groebner": {…} | null}`.
pub fn ideal_to_json(i: &Ideal) -> Value {
    json!({
        "ring": {
            "vars": i.ring().vars(),
            "order": order_string(i.ring().order()),
            "field": field_string(i.ring().field()),
        },
        "generators": i.generators().iter().map(poly_to_json).collect::<Vec<_>>(),
        "groebner": i.groebner_cached().map(groebner_to_json).unwrap_or(Value::Null),
    })
}

/// Ideal JSON plus `{"dim", "ambient"}` and both charts.
pub fn quot_ideal_to_json(qi: &QuotIdeal) -> Value {
    json!({
        "n": qi.n(),
        "r": qi.r(),
        "ambient": qi.ambient(),
        "dim": qi.chart_dim(),
        "chart": ideal_to_json(qi.chart()),
        "closure": ideal_to_json(qi.closure()),
    })
}

/// `{"n", "r", "q", "level", "basis", "type"}` — `n` is the colength.
pub fn submodule_to_json(s: &Submodule) -> Value {
    json!({
        "n": s.colength(),
        "r": s.r(),
        "q": s.q(),
        "level": s.level(),
        "basis": s.basis(),
        "type": s.quotient_type().parts(),
    })
}

pub fn chart_to_json(m: &ChartMatrix) -> Value {
    json!({
        "n": m.n(),
        "r": m.r(),
        "entries": m
            .entries()
            .iter()
            .map(|row| row.iter().map(poly_to_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn pairs_to_json(pairs: &[IncidencePair]) -> Value {
    Value::Array(
        pairs
            .iter()
            .map(|p| {
                json!({
                    "a_n": submodule_to_json(p.upper()),
                    "a_n1": submodule_to_json(p.lower()),
                })
            })
            .collect(),
    )
}

/// Strata table: `partition,count` rows sorted by partition.
pub fn strata_csv(subs: &[Submodule]) -> String {
    use std::collections::BTreeMap;
    let mut strata: BTreeMap<String, usize> = BTreeMap::new();
    for s in subs {
        *strata.entry(s.quotient_type().to_string()).or_insert(0) += 1;
    }
    let mut out = String::from("partition,count\n");
    for (ty, count) in strata {
        out.push_str(&format!("\"{ty}\",{count}\n"));
    }
    out
}

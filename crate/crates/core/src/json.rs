//! JSON documents for operators, certificates and multiples.
//!
//! An operator is an array of coefficients `{"num": "...", "den": "..."}`
//! (index `i` is the coefficient of `D^i`), each side in the polynomial text
//! grammar.

use serde_json::{json, Map, Value};

use crate::desing::RemovalCertificate;
use crate::error::{Error, Result};
use crate::orealg::{OreOperator, OreRing};
use crate::polyring::{Poly, RatFun};
use crate::text::parse_poly;

fn malformed(msg: impl Into<String>) -> Error {
    Error::usage(format!("malformed document: {}", msg.into()))
}

pub fn operator_to_json(op: &OreOperator) -> Value {
    Value::Array(
        op.coeffs()
            .iter()
            .map(|c| json!({ "num": c.num().to_string(), "den": c.den().to_string() }))
            .collect(),
    )
}

pub fn operator_from_json(v: &Value, ring: OreRing) -> Result<OreOperator> {
    let arr = v
        .as_array()
        .ok_or_else(|| malformed("operator must be an array"))?;
    let coeffs = arr
        .iter()
        .map(|c| {
            let num = poly_field(c, "num")?;
            let den = poly_field(c, "den")?;
            RatFun::new(num, den)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OreOperator::new(ring, coeffs))
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    v.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| malformed(format!("missing string field `{key}`")))
}

fn poly_field(v: &Value, key: &str) -> Result<Poly> {
    parse_poly(str_field(v, key)?)
}

fn uint_field(v: &Value, key: &str) -> Result<u64> {
    v.get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| malformed(format!("missing integer field `{key}`")))
}

pub fn ring_from_json(v: &Value) -> Result<OreRing> {
    str_field(v, "ring")?.parse()
}

/// Certificate together with the operator it applies to.
pub fn certificate_to_json(l: &OreOperator, c: &RemovalCertificate) -> Value {
    json!({
        "ring": l.ring().name(),
        "factor": c.factor.to_string(),
        "power": c.power,
        "order": c.order,
        "exponent": c.exponent,
        "operator": operator_to_json(l),
        "removing": operator_to_json(&c.removing),
        "removed": operator_to_json(&c.removed),
    })
}

pub fn certificate_from_json(v: &Value) -> Result<(OreOperator, RemovalCertificate)> {
    let ring = ring_from_json(v)?;
    let field = |k: &str| v.get(k).ok_or_else(|| malformed(format!("missing field `{k}`")));
    let l = operator_from_json(field("operator")?, ring)?;
    let cert = RemovalCertificate {
        factor: poly_field(v, "factor")?,
        power: uint_field(v, "power")? as u32,
        order: uint_field(v, "order")? as usize,
        exponent: uint_field(v, "exponent")? as u32,
        removing: operator_from_json(field("removing")?, ring)?,
        removed: operator_from_json(field("removed")?, ring)?,
    };
    Ok((l, cert))
}

/// A claimed left multiple `m` of `l`.
pub fn multiple_to_json(l: &OreOperator, m: &OreOperator) -> Value {
    let mut obj = Map::new();
    obj.insert("ring".into(), json!(l.ring().name()));
    obj.insert("operator".into(), operator_to_json(l));
    obj.insert("multiple".into(), operator_to_json(m));
    obj.insert("order".into(), json!(m.order0()));
    if let Ok(d) = m.deg_x() {
        obj.insert("degree".into(), json!(d));
    }
    Value::Object(obj)
}

pub fn multiple_from_json(v: &Value) -> Result<(OreOperator, OreOperator)> {
    let ring = ring_from_json(v)?;
    let field = |k: &str| v.get(k).ok_or_else(|| malformed(format!("missing field `{k}`")));
    Ok((
        operator_from_json(field("operator")?, ring)?,
        operator_from_json(field("multiple")?, ring)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_operator;

    #[test]
    fn operator_round_trip() {
        let op = parse_operator("(x^2 - 1/3)/(x + 2)*D + 7", OreRing::Shift).unwrap();
        let v = operator_to_json(&op);
        assert_eq!(v[1]["den"], "2 + x");
        assert_eq!(operator_from_json(&v, OreRing::Shift).unwrap(), op);
    }
}

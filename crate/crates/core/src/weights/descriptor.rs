//! Textual and JSON weight-system descriptors.
//!
//! Accepted forms: `catalog:ID`, `symbolic`, `symbolic:dyck`, a JSON object,
//! or `@path` naming a file holding any of these.

use serde_json::Value;

use super::{catalog, CatalogId, Mode, Parity, Weight, WeightSystem};
use crate::error::{Error, Result};
use crate::Poly;

pub fn parse_weights(spec: &str) -> Result<WeightSystem> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Descriptor(format!("cannot read {path}: {e}")))?;
        return parse_weights(&text);
    }
    if spec.starts_with('{') {
        let v: Value = serde_json::from_str(spec).map_err(|e| Error::Descriptor(e.to_string()))?;
        return from_value(&v);
    }
    if let Some(id) = spec.strip_prefix("catalog:") {
        return Ok(catalog(id.parse::<CatalogId>()?));
    }
    match spec {
        "symbolic" | "symbolic:motzkin" => Ok(WeightSystem::symbolic(Mode::Motzkin)),
        "symbolic:dyck" => Ok(WeightSystem::symbolic(Mode::Dyck)),
        _ => Err(Error::Descriptor(format!("unrecognised weight descriptor `{spec}`"))),
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Descriptor(msg.into())
}

fn poly(v: &Value) -> Result<Poly> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => n.to_string().parse(),
        other => Err(bad(format!("expected a polynomial, found {other}"))),
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

fn mode_of(v: &Value) -> Result<Mode> {
    match v.get("mode").and_then(Value::as_str).unwrap_or("motzkin") {
        "motzkin" => Ok(Mode::Motzkin),
        "dyck" => Ok(Mode::Dyck),
        other => Err(bad(format!("unknown mode `{other}`"))),
    }
}

fn weight(mode: Mode, v: &Value) -> Result<Weight> {
    let w = match (mode, v) {
        (Mode::Motzkin, Value::Array(pair)) if pair.len() == 2 => {
            Weight::Motzkin { s: poly(&pair[0])?, t: poly(&pair[1])? }
        }
        (Mode::Dyck, Value::Array(one)) if one.len() == 1 => Weight::Dyck(poly(&one[0])?),
        (Mode::Dyck, v @ (Value::String(_) | Value::Number(_))) => Weight::Dyck(poly(v)?),
        _ => return Err(bad(format!("malformed {mode} weight {v}"))),
    };
    let down = match &w {
        Weight::Motzkin { t, .. } => t,
        Weight::Dyck(t) => t,
    };
    if down.is_zero() {
        return Err(bad("down-step weights must be nonzero"));
    }
    Ok(w)
}

fn from_value(v: &Value) -> Result<WeightSystem> {
    if !v.is_object() {
        return Err(bad("descriptor must be a JSON object"));
    }
    match v.get("kind").and_then(Value::as_str) {
        Some("catalog") => {
            let id = field(v, "id")?.as_str().ok_or_else(|| bad("`id` must be a string"))?;
            Ok(catalog(id.parse()?))
        }
        Some("symbolic") => Ok(WeightSystem::symbolic(mode_of(v)?)),
        Some("shift") => {
            let by = field(v, "by")?.as_u64().ok_or_else(|| bad("`by` must be a non-negative integer"))?;
            Ok(from_value(field(v, "of")?)?.shift(by as usize))
        }
        Some("paired") => {
            let parity = match field(v, "parity")?.as_str() {
                Some("even") => Parity::Even,
                Some("odd") => Parity::Odd,
                _ => return Err(bad("`parity` must be \"even\" or \"odd\"")),
            };
            from_value(field(v, "of")?)?.dyck_to_motzkin(parity)
        }
        Some(other) => Err(bad(format!("unknown descriptor kind `{other}`"))),
        None => explicit(v),
    }
}

fn explicit(v: &Value) -> Result<WeightSystem> {
    let mode = mode_of(v)?;
    let prefix = match v.get("prefix") {
        None => vec![],
        Some(Value::Array(items)) => items.iter().map(|w| weight(mode, w)).collect::<Result<_>>()?,
        Some(_) => return Err(bad("`prefix` must be an array")),
    };
    let tail = field(v, "tail")?;
    match tail.get("kind").and_then(Value::as_str) {
        Some("constant") => {
            let w = match mode {
                Mode::Motzkin => Value::Array(vec![field(tail, "s")?.clone(), field(tail, "t")?.clone()]),
                Mode::Dyck => field(tail, "T")?.clone(),
            };
            Ok(WeightSystem::new(mode, prefix, weight(mode, &w)?).with_descriptor(v.clone()))
        }
        Some("symbolic") => Ok(WeightSystem::symbolic_with_prefix(mode, prefix).with_descriptor(v.clone())),
        _ => Err(bad("tail kind must be \"constant\" or \"symbolic\"")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_json() {
        let ws = parse_weights(r#"{"mode":"motzkin","prefix":[["1","1"]],"tail":{"kind":"constant","s":"2","t":"1"}}"#)
            .unwrap();
        for i in 0..6 {
            assert_eq!(ws.weight_at(i), catalog(CatalogId::Ii).weight_at(i));
        }
        let dyck = parse_weights(r#"{"mode":"dyck","tail":{"kind":"constant","T":1}}"#).unwrap();
        assert_eq!(dyck.big_t(4), Poly::one());
    }

    #[test]
    fn shortcuts() {
        assert_eq!(parse_weights("catalog:vii").unwrap(), catalog(CatalogId::Vii));
        assert_eq!(parse_weights(r#"{"kind":"catalog","id":"ii"}"#).unwrap().t(0), Poly::one());
        assert_eq!(parse_weights("symbolic").unwrap().s(3), Poly::named("s_3"));
        assert_eq!(parse_weights("symbolic:dyck").unwrap().mode(), Mode::Dyck);
    }

    #[test]
    fn descriptors_round_trip() {
        let systems = [
            catalog(CatalogId::Xiv),
            catalog(CatalogId::QDyck).dyck_to_motzkin(Parity::Odd).unwrap(),
            WeightSystem::symbolic(Mode::Motzkin).shift(3),
            WeightSystem::constant_tail("a".parse().unwrap(), Poly::from(2), Poly::from(3), "b".parse().unwrap()),
        ];
        for ws in systems {
            let back = from_value(ws.descriptor()).unwrap();
            for i in 0..8 {
                assert_eq!(back.weight_at(i), ws.weight_at(i));
            }
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_weights("nonsense").is_err());
        assert!(matches!(parse_weights("catalog:zz"), Err(Error::UnknownCatalog(_))));
        assert!(parse_weights(r#"{"tail":{"kind":"constant","s":"1","t":"0"}}"#).is_err());
        assert!(parse_weights(r#"{"prefix":[["1"]],"tail":{"kind":"symbolic"}}"#).is_err());
        assert!(parse_weights("{not json").is_err());
    }
}

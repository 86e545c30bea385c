//! File formats for cocycles, twisted coefficient rings and crossing data.
//!
//! Cocycle file: `{"degree": n, "modulus": m, "values": {"0,1": 2, ...}}`.
//! Tuples not listed are zero. For twisted cocycles the values may be
//! strings in `t`, e.g. `"1+2t"`.
//!
//! Ring file: `{"modulus": 3, "relation": [1, 1, 1]}` for `Z_3[t]/(1+t+t²)`.

use serde_json::{json, Map, Value};

use crate::chains::unpack;
use crate::error::{Error, Result};
use crate::homology::Cochain;
use crate::invariants::CrossingDatum;
use crate::ring::{IntegersMod, LaurentQuotient, Ring};

fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::format(format!("invalid JSON: {e}")))
}

fn parse_key(key: &str, degree: usize, order: usize) -> Result<Vec<usize>> {
    let tuple: Vec<usize> = key
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Error::format(format!("bad tuple key {key:?}"))))
        .collect::<Result<_>>()?;
    if tuple.len() != degree {
        return Err(Error::format(format!("tuple key {key:?} has length {}, expected {degree}", tuple.len())));
    }
    if let Some(&x) = tuple.iter().find(|&&x| x >= order) {
        return Err(Error::OutOfRange(format!("element {x} in tuple key {key:?} (quandle of order {order})")));
    }
    Ok(tuple)
}

fn header(v: &Value) -> Result<(usize, u64, &Map<String, Value>)> {
    let degree = v.get("degree").and_then(Value::as_u64).ok_or_else(|| Error::format("cocycle needs \"degree\""))? as usize;
    let modulus = v.get("modulus").and_then(Value::as_u64).ok_or_else(|| Error::format("cocycle needs \"modulus\""))?;
    let values = v.get("values").and_then(Value::as_object).ok_or_else(|| Error::format("cocycle needs an object \"values\""))?;
    if degree == 0 {
        return Err(Error::format("cocycle degree must be at least 1"));
    }
    Ok((degree, modulus, values))
}

/// A `Z_m`-valued cochain on a quandle of the given order.
pub fn parse_cocycle(text: &str, order: usize) -> Result<Cochain<IntegersMod>> {
    let v = parse_value(text)?;
    let (degree, modulus, values) = header(&v)?;
    let ring = IntegersMod::new(modulus)?;
    let mut f = Cochain::zero(ring.clone(), order, degree);
    for (key, val) in values {
        let x = val.as_i64().ok_or_else(|| Error::format(format!("value of {key:?} must be an integer")))?;
        f.set(&parse_key(key, degree, order)?, ring.from_i64(x));
    }
    Ok(f)
}

/// A cochain valued in a Laurent quotient; its `modulus` must match the ring.
pub fn parse_twisted_cocycle(text: &str, ring: &LaurentQuotient, order: usize) -> Result<Cochain<LaurentQuotient>> {
    let v = parse_value(text)?;
    let (degree, modulus, values) = header(&v)?;
    if modulus != ring.modulus() {
        return Err(Error::RingMismatch(format!("cocycle modulus {modulus} but ring {}", ring.tag())));
    }
    let mut f = Cochain::zero(ring.clone(), order, degree);
    for (key, val) in values {
        let x = match val {
            Value::Number(n) => ring.from_i64(n.as_i64().ok_or_else(|| Error::format(format!("bad value for {key:?}")))?),
            Value::String(s) => ring.parse(s)?,
            _ => return Err(Error::format(format!("value of {key:?} must be an integer or a polynomial string"))),
        };
        f.set(&parse_key(key, degree, order)?, x);
    }
    Ok(f)
}

/// Nonzero values only, keys in lexicographic order.
pub fn cocycle_to_json<R: Ring>(f: &Cochain<R>, modulus: u64) -> Value {
    let mut values = Map::new();
    for key in 0..f.values.len() as u64 {
        let v = &f.values[key as usize];
        if f.ring.is_zero(v) {
            continue;
        }
        let tuple = unpack(f.order, f.degree, key);
        let name = tuple.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let formatted = f.ring.format(v);
        let value = formatted.parse::<i64>().map(Value::from).unwrap_or(Value::String(formatted));
        values.insert(name, value);
    }
    json!({"degree": f.degree, "modulus": modulus, "values": values})
}

pub fn parse_ring(text: &str) -> Result<LaurentQuotient> {
    let v = parse_value(text)?;
    let m = v.get("modulus").and_then(Value::as_u64).ok_or_else(|| Error::format("ring needs \"modulus\""))?;
    let rel: Vec<i64> = v
        .get("relation")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::format("ring needs an array \"relation\" (constant term first)"))?
        .iter()
        .map(|c| c.as_i64().ok_or_else(|| Error::format("relation coefficients must be integers")))
        .collect::<Result<_>>()?;
    LaurentQuotient::new(m, &rel)
}

pub fn ring_to_json(ring: &LaurentQuotient) -> Value {
    json!({"modulus": ring.modulus(), "relation": ring.relation()})
}

pub fn parse_crossing_data(text: &str) -> Result<Vec<CrossingDatum>> {
    serde_json::from_str(text).map_err(|e| Error::format(format!("invalid crossing data: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cocycle_round_trip() {
        let text = r#"{"degree": 2, "modulus": 3, "values": {"0,1": 1, "2,0": 5}}"#;
        let f = parse_cocycle(text, 3).unwrap();
        assert_eq!(*f.value(&[2, 0]), 2);
        let again = parse_cocycle(&cocycle_to_json(&f, 3).to_string(), 3).unwrap();
        assert_eq!(f, again);
        assert!(parse_cocycle(r#"{"degree": 2, "modulus": 3, "values": {"0,3": 1}}"#, 3).is_err());
        assert!(parse_cocycle(r#"{"degree": 2, "modulus": 3, "values": {"0": 1}}"#, 3).is_err());
    }

    #[test]
    fn ring_file() {
        let r = parse_ring(r#"{"modulus": 3, "relation": [1, 1, 1]}"#).unwrap();
        assert_eq!(r, LaurentQuotient::z3_cyclotomic());
        assert_eq!(parse_ring(&ring_to_json(&r).to_string()).unwrap(), r);
        let f = parse_twisted_cocycle(r#"{"degree": 2, "modulus": 3, "values": {"0,1": "1+t"}}"#, &r, 3).unwrap();
        assert_eq!(f.value(&[0, 1]), &r.from_coeffs(&[1, 1]));
    }

    #[test]
    fn crossing_data_file() {
        let d = parse_crossing_data(r#"[{"sign": 1, "colors": [0, 1, 2], "shadow": 0}]"#).unwrap();
        assert_eq!(d[0].shadow, Some(0));
        assert_eq!(d[0].alexander, None);
    }
}

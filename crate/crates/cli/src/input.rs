//! Parsers for command-line inputs: poset shorthands and files, count
//! tables, parameter vectors.

use std::collections::HashMap;

use num_rational::BigRational;
use rankalg_core::poly::parse::parse_rational;
use rankalg_core::poset::{grade, order_ideal_lattice, parse_poset, GradedPoset, Poset};
use rankalg_core::{Error, Result};

/// Largest `n` accepted by the shorthands. Lattices of order ideals grow
/// like `2^n`, and the chain count like `n!`.
pub const MAX_SHORTHAND_ITEMS: usize = 12;

/// A poset from the command line: a constraint poset on `[n]` (whose order
/// ideals give the graded poset) or a general graded poset.
#[derive(Clone, Debug)]
pub enum PosetInput {
    Constraint(Poset),
    Graded(Poset),
}

impl PosetInput {
    pub fn graded(&self) -> Result<GradedPoset> {
        match self {
            PosetInput::Constraint(p) => order_ideal_lattice(p),
            PosetInput::Graded(p) => grade(p),
        }
    }

    pub fn constraint(&self) -> Result<&Poset> {
        match self {
            PosetInput::Constraint(p) => Ok(p),
            PosetInput::Graded(_) => Err(Error::Invalid(
                "this command needs a constraint poset on [n] (a shorthand or {\"n\":…} file)".into(),
            )),
        }
    }
}

fn number(s: &str, what: &str) -> Result<usize> {
    let v: usize = s
        .trim()
        .parse()
        .map_err(|_| Error::Format(format!("bad {what} {s:?}")))?;
    Ok(v)
}

/// `boolean:n`, `antichain:n`, `chain:n` or `mixed:c,k`.
pub fn parse_shorthand(text: &str) -> Result<PosetInput> {
    let (kind, arg) = text
        .split_once(':')
        .ok_or_else(|| Error::Format(format!("poset shorthand {text:?} lacks ':'")))?;
    let check = |n: usize| {
        if n == 0 || n > MAX_SHORTHAND_ITEMS {
            Err(Error::Format(format!("item count {n} outside [1, {MAX_SHORTHAND_ITEMS}]")))
        } else {
            Ok(n)
        }
    };
    let p = match kind {
        "boolean" | "antichain" => Poset::antichain(check(number(arg, "size")?)?),
        "chain" => Poset::chain(check(number(arg, "size")?)?),
        "mixed" => {
            let (c, k) = arg
                .split_once(',')
                .ok_or_else(|| Error::Format(format!("mixed shorthand {text:?} needs c,k")))?;
            let (c, k) = (number(c, "chain length")?, number(k, "antichain size")?);
            if c == 0 {
                return Err(Error::Format("mixed shorthand needs a nonempty chain".into()));
            }
            check(c.checked_add(k).ok_or_else(|| Error::Format("size overflow".into()))?)?;
            Poset::chain_plus_antichain(c, k)
        }
        other => return Err(Error::Format(format!("unknown poset shorthand {other:?}"))),
    };
    Ok(PosetInput::Constraint(p))
}

/// A poset file: `{"n":…}` is a constraint poset, `{"elements":…}` a
/// general poset to be graded.
pub fn parse_poset_file(text: &str) -> Result<PosetInput> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Format(format!("poset json: {e}")))?;
    let p = parse_poset(text)?;
    if v.get("n").is_some() {
        Ok(PosetInput::Constraint(p))
    } else {
        Ok(PosetInput::Graded(p))
    }
}

/// `{"label": count, …}`.
pub fn parse_counts(text: &str) -> Result<Vec<(String, u64)>> {
    let map: serde_json::Map<String, serde_json::Value> =
        serde_json::from_str(text).map_err(|e| Error::Format(format!("counts json: {e}")))?;
    let mut out = Vec::with_capacity(map.len());
    for (k, v) in map {
        let c = v
            .as_u64()
            .ok_or_else(|| Error::Format(format!("count for {k:?} is not a nonnegative integer")))?;
        out.push((k, c));
    }
    out.sort();
    Ok(out)
}

/// Comma-separated rationals, e.g. `2,1/3,5`.
pub fn parse_rational_list(text: &str) -> Result<Vec<BigRational>> {
    if text.len() > 1 << 16 {
        return Err(Error::Format("parameter list too long".into()));
    }
    text.split(',').map(parse_rational).collect()
}

/// `label=value` pairs separated by commas, or a JSON object of strings or
/// numbers.
pub fn parse_params(text: &str) -> Result<HashMap<String, BigRational>> {
    let t = text.trim();
    if t.starts_with('{') {
        let map: serde_json::Map<String, serde_json::Value> =
            serde_json::from_str(t).map_err(|e| Error::Format(format!("parameter json: {e}")))?;
        return map
            .into_iter()
            .map(|(k, v)| {
                let s = match &v {
                    serde_json::Value::String(s) => s.clone(),
                    serde_json::Value::Number(n) => n.to_string(),
                    _ => return Err(Error::Format(format!("parameter {k:?} is not a rational"))),
                };
                Ok((k, parse_rational(&s)?))
            })
            .collect();
    }
    t.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Format(format!("expected label=value, got {kv:?}")))?;
            Ok((k.trim().to_string(), parse_rational(v)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthands() {
        let PosetInput::Constraint(p) = parse_shorthand("mixed:3,2").unwrap() else { panic!() };
        assert_eq!(p.len(), 5);
        assert_eq!(p.covers().len(), 2);
        assert_eq!(parse_shorthand("boolean:4").unwrap().graded().unwrap().len(), 16);
        for bad in ["boolean", "boolean:x", "chain:0", "mixed:3", "mixed:0,2", "cube:3", "antichain:99"] {
            assert!(matches!(parse_shorthand(bad), Err(Error::Format(_))), "{bad}");
        }
    }

    #[test]
    fn files_and_tables() {
        assert!(matches!(parse_poset_file(r#"{"n":3,"relations":[[1,2]]}"#).unwrap(), PosetInput::Constraint(_)));
        let g = parse_poset_file(r#"{"elements":["a","b","c"],"relations":[["a","b"],["a","c"]]}"#).unwrap();
        assert_eq!(g.graded().unwrap().rk(), 1);
        assert!(g.constraint().is_err());
        assert_eq!(parse_counts(r#"{"132":2,"123":1}"#).unwrap(), vec![("123".into(), 1), ("132".into(), 2)]);
        assert!(parse_counts(r#"{"123":-1}"#).is_err());
        assert_eq!(parse_rational_list("2,1/3").unwrap().len(), 2);
        assert_eq!(parse_params("u_{12}=1, v_{12}=1/2").unwrap().len(), 2);
        assert_eq!(parse_params(r#"{"a": 2, "b": "1/3"}"#).unwrap().len(), 2);
        assert!(parse_params("a").is_err());
    }
}

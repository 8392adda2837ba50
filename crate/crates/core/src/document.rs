//! The JSON fan document.
//!
//! ```json
//! {
//!   "rank": 2,
//!   "rays": [[1, 0], [0, 1], [-1, -1]],
//!   "edge_multipliers": [1, 1, 1],
//!   "cones": [{"rays": [0, 1], "weight": 1}, {"rays": [1, 2], "weight": 1}, {"rays": [0, 2], "weight": 1}],
//!   "supports": {"sum": [1, 1, 1], "half": ["1/2", 0, 0]}
//! }
//! ```
//!
//! `edge_multipliers` and `supports` are optional. Support numbers are
//! integers or `"p/q"` strings.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::{fmt_rat, parse_rat, Rat};
use crate::equivariant::SupportClass;
use crate::fan::{MultiFan, RawCone, RawFan};
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConeEntry {
    rays: Vec<usize>,
    weight: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    rank: usize,
    rays: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    edge_multipliers: Option<Vec<u64>>,
    cones: Vec<ConeEntry>,
    #[serde(default, skip_serializing_if = "serde_json::Map::is_empty")]
    supports: serde_json::Map<String, Value>,
}

/// A parsed fan document: the raw fan and its named support classes, in
/// document order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanDocument {
    pub raw: RawFan,
    pub supports: Vec<(String, SupportClass)>,
}

impl FanDocument {
    pub fn parse(text: &str) -> Result<FanDocument> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let raw = RawFan {
            rank: doc.rank,
            rays: doc.rays,
            edge_multipliers: doc.edge_multipliers,
            cones: doc.cones.into_iter().map(|c| RawCone { rays: c.rays, weight: c.weight }).collect(),
        };
        let supports = doc
            .supports
            .into_iter()
            .map(|(name, value)| {
                let xi = parse_support(&value).map_err(|e| Error::Parse(format!("supports.{name}: {e}")))?;
                if xi.len() != raw.rays.len() {
                    return Err(Error::Parse(format!("supports.{name}: {} entries for {} rays", xi.len(), raw.rays.len())));
                }
                Ok((name, xi))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FanDocument { raw, supports })
    }

    pub fn from_fan(fan: &MultiFan, supports: Vec<(String, SupportClass)>) -> FanDocument {
        FanDocument { raw: fan.to_raw(), supports }
    }

    pub fn fan(&self) -> Result<MultiFan> {
        MultiFan::validate(&self.raw)
    }

    pub fn support(&self, name: &str) -> Option<&SupportClass> {
        self.supports.iter().find(|(n, _)| n == name).map(|(_, xi)| xi)
    }

    pub fn to_json(&self) -> String {
        let doc = Document {
            rank: self.raw.rank,
            rays: self.raw.rays.clone(),
            edge_multipliers: self.raw.edge_multipliers.clone(),
            cones: self.raw.cones.iter().map(|c| ConeEntry { rays: c.rays.clone(), weight: c.weight }).collect(),
            supports: self.supports.iter().map(|(n, xi)| (n.clone(), support_json(xi))).collect(),
        };
        serde_json::to_string_pretty(&doc).expect("document serializes")
    }
}

/// An exact rational as a JSON integer when integral, `"p/q"` otherwise.
pub fn rat_json(q: &Rat) -> Value {
    match q.to_integer().to_i64() {
        Some(i) if q.is_integer() => Value::from(i),
        _ => Value::String(fmt_rat(q)),
    }
}

pub fn support_json(xi: &SupportClass) -> Value {
    Value::Array(xi.d.iter().map(rat_json).collect())
}

fn parse_entry(v: &Value) -> std::result::Result<Rat, String> {
    match v {
        Value::Number(n) => n.as_i64().map(|i| Rat::from_integer(i.into())).ok_or_else(|| format!("{n} is not an exact integer")),
        Value::String(s) => parse_rat(s).ok_or_else(|| format!("cannot read {s:?} as a rational")),
        other => Err(format!("unexpected value {other}")),
    }
}

/// Reads `[1, "1/2", -3]`.
pub fn parse_support(v: &Value) -> std::result::Result<SupportClass, String> {
    let items = v.as_array().ok_or("expected an array")?;
    let d = items
        .iter()
        .enumerate()
        .map(|(i, x)| parse_entry(x).map_err(|e| format!("entry {i}: {e}")))
        .collect::<std::result::Result<_, _>>()?;
    Ok(SupportClass::new(d))
}

/// Reads a comma-separated list such as `1,1/2,-3`.
pub fn parse_support_list(s: &str) -> std::result::Result<SupportClass, String> {
    let d = s
        .split(',')
        .map(str::trim)
        .map(|x| parse_rat(x).ok_or_else(|| format!("cannot read {x:?} as a rational")))
        .collect::<std::result::Result<_, _>>()?;
    Ok(SupportClass::new(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::fan::fixtures::*;

    #[test]
    fn round_trip() {
        let xi = SupportClass::new(vec![rat(1, 1), rat(-1, 2), rat(0, 1)]);
        let doc = FanDocument::from_fan(&wp112(), vec![("x".into(), xi.clone())]);
        let back = FanDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.support("x"), Some(&xi));
        assert_eq!(back.fan().unwrap().to_raw(), wp112().to_raw());
    }

    #[test]
    fn errors_name_their_location() {
        let e = FanDocument::parse("{\"rank\": 2, \"rays\": [[1, 0], [0, 1.5]], \"cones\": []}").unwrap_err();
        assert!(matches!(&e, Error::Parse(m) if m.contains("line 1")), "{e}");
        let doc = FanDocument::parse("{\"rank\": 2, \"rays\": [[1, 0], [0, 1]], \"cones\": [{\"rays\": [0, 5], \"weight\": 1}]}").unwrap();
        let e = doc.fan().unwrap_err();
        assert!(e.to_string().contains("cone 0"), "{e}");
        let e = FanDocument::parse(
            "{\"rank\": 1, \"rays\": [[1]], \"cones\": [{\"rays\": [0], \"weight\": 1}], \"supports\": {\"a\": [\"x\"]}}",
        )
        .unwrap_err();
        assert!(e.to_string().contains("supports.a"), "{e}");
    }

    #[test]
    fn support_lists() {
        assert_eq!(parse_support_list("1, 1/2,-3").unwrap(), SupportClass::new(vec![rat(1, 1), rat(1, 2), rat(-3, 1)]));
        assert!(parse_support_list("1,a").is_err());
    }
}

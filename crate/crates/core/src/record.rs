//! Structured result records for JSON output.
//!
//! ```json
//! {
//!   "kind": "exact",
//!   "value_exact": {"a": "0", "b": "1", "c": "25", "D": "5"},
//!   "value_decimal": "0.089442719100",
//!   "witness": {"residue": 0, "k": 1, "u": -1, "v": 1},
//!   "params": {"alpha": "[0; (3)*]-"}
//! }
//! ```
//!
//! `value_exact` is `(a + b*sqrt(D))/c` with every integer written as a
//! decimal string; it is `null` for estimates. `witness` is `null` when a
//! record has none.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::approx::MResult;
use crate::error::{Error, Result};
use crate::field::QuadNum;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    pub a: String,
    pub b: String,
    pub c: String,
    #[serde(rename = "D")]
    pub d: String,
}

impl From<&QuadNum> for ExactValue {
    fn from(v: &QuadNum) -> Self {
        ExactValue {
            a: v.a().to_string(),
            b: v.b().to_string(),
            c: v.c().to_string(),
            d: v.radicand().to_string(),
        }
    }
}

impl TryFrom<&ExactValue> for QuadNum {
    type Error = Error;

    fn try_from(e: &ExactValue) -> Result<QuadNum> {
        let int = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|_| Error::parse(0, format!("not an integer: {s:?}")))
        };
        QuadNum::new(int(&e.a)?, int(&e.b)?, int(&e.c)?, int(&e.d)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub kind: String,
    pub value_exact: Option<ExactValue>,
    pub value_decimal: String,
    pub witness: Option<Value>,
    pub params: Map<String, Value>,
}

impl Record {
    pub fn exact(kind: &str, value: &QuadNum, digits: usize) -> Self {
        Record {
            kind: kind.to_string(),
            value_exact: Some(value.into()),
            value_decimal: value.to_decimal(digits),
            witness: None,
            params: Map::new(),
        }
    }

    pub fn from_m(result: &MResult, digits: usize) -> Self {
        match result {
            MResult::Exact { value, witness } => {
                let mut r = Record::exact(result.kind(), value, digits);
                r.witness = Some(serde_json::to_value(witness).expect("plain struct"));
                r
            }
            MResult::UpperBoundOnly { value, residues } => {
                let mut r = Record::exact(result.kind(), value, digits);
                r.witness = Some(serde_json::json!({ "residues": residues }));
                r
            }
            MResult::Estimate {
                value,
                bands,
                window,
            } => Record {
                kind: result.kind().to_string(),
                value_exact: None,
                value_decimal: format!("{value:.digits$}"),
                witness: Some(serde_json::json!({ "bands": bands, "window": window })),
                params: Map::new(),
            },
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn with_witness(mut self, witness: Value) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn value(&self) -> Result<Option<QuadNum>> {
        self.value_exact.as_ref().map(QuadNum::try_from).transpose()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::Witness;

    #[test]
    fn round_trip() {
        let v = QuadNum::sqrt_of(5).unwrap() / 25;
        let m = MResult::Exact {
            value: v.clone(),
            witness: Witness {
                residue: 0,
                k: 1,
                u: -1,
                v: 1,
            },
        };
        let rec = Record::from_m(&m, 12).with_param("alpha", "[0; (3)*]-");
        let text = rec.to_json();
        let back = Record::from_json(&text).unwrap();
        assert_eq!(back, rec);
        assert_eq!(back.value().unwrap(), Some(v));
        let json: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(json["value_exact"]["D"], "5");
        assert_eq!(json["value_decimal"], "0.089442719100");
        assert_eq!(json["witness"]["u"], -1);
    }
}

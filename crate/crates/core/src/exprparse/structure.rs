//! JSON structure documents.
//!
//! ```json
//! {
//!   "name": "example",
//!   "variables": ["x", "y"],
//!   "connection": { "1_22": "x*y", "2_11": "-y" }
//! }
//! ```
//!
//! The key `c_ab` holds `Π^c_ab` with one-based indices. Absent entries are
//! zero and `c_ba` is filled in from `c_ab`. `name`, `description` and
//! `variables` are optional; any other field is rejected.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactmath::{RatFunc, Variables};
use crate::geometry::ChartConnection;

use super::{parse_expr_in, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<[String; 2]>,
    pub connection: BTreeMap<String, String>,
}

fn parse_key(key: &str) -> Option<(usize, usize, usize)> {
    let b = key.as_bytes();
    let digit = |c: u8| match c {
        b'1' => Some(0),
        b'2' => Some(1),
        _ => None,
    };
    if b.len() != 4 || b[1] != b'_' {
        return None;
    }
    Some((digit(b[0])?, digit(b[2])?, digit(b[3])?))
}

impl StructureDoc {
    pub fn from_json(text: &str) -> Result<Self, StructureError> {
        serde_json::from_str(text).map_err(|e| StructureError::Malformed(e.to_string()))
    }

    pub fn vars(&self) -> Result<Variables, StructureError> {
        match &self.variables {
            None => Ok(Variables::default()),
            Some([a, b]) => Variables::new(a, b).map_err(|e| StructureError::Variables(e.to_string())),
        }
    }

    pub fn to_connection(&self) -> Result<ChartConnection, StructureError> {
        let vars = self.vars()?;
        let mut entries: BTreeMap<(usize, usize, usize), (String, RatFunc)> = BTreeMap::new();
        for (key, src) in &self.connection {
            let (c, a, b) = parse_key(key).ok_or_else(|| StructureError::BadKey(key.clone()))?;
            let value = parse_expr_in(src, &vars).map_err(|error| StructureError::Expression {
                key: key.clone(),
                error,
            })?;
            entries.insert((c, a, b), (key.clone(), value));
        }
        let mut conn = ChartConnection::flat(vars);
        for (&(c, a, b), (key, value)) in &entries {
            if let Some((other, twin)) = entries.get(&(c, b, a)) {
                if twin != value {
                    return Err(StructureError::Asymmetric {
                        first: key.clone().min(other.clone()),
                        second: key.clone().max(other.clone()),
                    });
                }
            }
            conn.set_symmetric(c, a, b, value.clone());
        }
        Ok(conn)
    }
}

/// Reads a JSON structure document into a torsion-free connection.
pub fn parse_structure(text: &str) -> Result<ChartConnection, StructureError> {
    StructureDoc::from_json(text)?.to_connection()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exprparse::parse_expr;

    #[test]
    fn first_example_document() {
        let c = parse_structure(r#"{"name": "ex1", "connection": {"1_22": "x*y", "2_11": "-y"}}"#)
            .unwrap();
        let mut nonzero = Vec::new();
        for u in 0..2 {
            for a in 0..2 {
                for b in 0..2 {
                    if !c.get(u, a, b).is_zero() {
                        nonzero.push((u, a, b));
                    }
                }
            }
        }
        assert_eq!(nonzero, vec![(0, 1, 1), (1, 0, 0)]);
        assert_eq!(c.get(0, 1, 1), &parse_expr("x*y").unwrap());
        assert_eq!(c.get(1, 0, 0), &parse_expr("-y").unwrap());
    }

    #[test]
    fn empty_connection_is_flat() {
        assert!(parse_structure(r#"{"connection": {}}"#).unwrap().is_flat());
    }

    #[test]
    fn symmetric_completion() {
        let c = parse_structure(r#"{"connection": {"1_12": "x"}}"#).unwrap();
        assert_eq!(c.get(0, 1, 0), c.get(0, 0, 1));
        assert!(!c.get(0, 1, 0).is_zero());
    }

    #[test]
    fn equal_twins_accepted() {
        let c = parse_structure(r#"{"connection": {"2_12": "x^2/6", "2_21": "x*x/6"}}"#).unwrap();
        assert_eq!(c.get(1, 0, 1), &parse_expr("x^2/6").unwrap());
    }

    #[test]
    fn unequal_twins_rejected() {
        let err = parse_structure(r#"{"connection": {"2_12": "x", "2_21": "y"}}"#).unwrap_err();
        assert!(matches!(err, StructureError::Asymmetric { .. }));
    }

    #[test]
    fn bad_keys_and_fields() {
        for key in ["3_11", "1_1", "1-12", "1_123", "a_12"] {
            let doc = format!(r#"{{"connection": {{"{key}": "1"}}}}"#);
            assert_eq!(parse_structure(&doc), Err(StructureError::BadKey(key.into())));
        }
        assert!(matches!(
            parse_structure(r#"{"connection": {}, "extra": 1}"#),
            Err(StructureError::Malformed(_))
        ));
        assert!(matches!(parse_structure(r#"{"name": "x"}"#), Err(StructureError::Malformed(_))));
    }

    #[test]
    fn expression_errors_carry_key_and_offset() {
        let err = parse_structure(r#"{"connection": {"1_11": "x +"}}"#).unwrap_err();
        match err {
            StructureError::Expression { key, error } => {
                assert_eq!(key, "1_11");
                assert_eq!(error.offset, 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn custom_variables() {
        let c = parse_structure(r#"{"variables": ["u", "v"], "connection": {"1_11": "u*v"}}"#)
            .unwrap();
        assert_eq!(c.vars().name(crate::exactmath::Var::X), "u");
        assert!(parse_structure(r#"{"variables": ["u", "u"], "connection": {}}"#).is_err());
    }
}

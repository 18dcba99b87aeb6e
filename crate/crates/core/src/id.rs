//! Opaque identifiers for vertices, edges and carrier elements.
//!
//! Ids come verbatim from input and are never renumbered. Operations that
//! build new objects (products, quotients, transformation graphs) say in
//! their docs how the synthesized ids are formed.

use serde::{Deserialize, Serialize};
use std::fmt;

/// An identifier: an integer or a string, exactly as supplied by input.
///
/// Integers sort before strings; integers sort numerically, strings
/// lexicographically. This ordering is what "canonical order" means
/// throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Id {
    Int(i64),
    Str(String),
}

impl Id {
    /// Rendering used when an id must serve as a JSON object key.
    pub fn as_key(&self) -> String {
        self.to_string()
    }

    /// Inverse of [`Id::as_key`]: digits (with optional sign) that round-trip
    /// through `i64` are read back as integers, everything else as a string.
    pub fn from_key(key: &str) -> Id {
        if let Ok(n) = key.parse::<i64>() {
            if n.to_string() == key {
                return Id::Int(n);
            }
        }
        Id::Str(key.to_string())
    }
}

impl Ord for Id {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Id::Int(a), Id::Int(b)) => a.cmp(b),
            (Id::Str(a), Id::Str(b)) => a.cmp(b),
            (Id::Int(_), Id::Str(_)) => std::cmp::Ordering::Less,
            (Id::Str(_), Id::Int(_)) => std::cmp::Ordering::Greater,
        }
    }
}

impl PartialOrd for Id {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Id {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Id::Int(n) => write!(f, "{n}"),
            Id::Str(s) => write!(f, "{s}"),
        }
    }
}

impl fmt::Debug for Id {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Id::Int(n) => write!(f, "{n}"),
            Id::Str(s) => write!(f, "{s:?}"),
        }
    }
}

impl From<i64> for Id {
    fn from(n: i64) -> Self {
        Id::Int(n)
    }
}

impl From<i32> for Id {
    fn from(n: i32) -> Self {
        Id::Int(n as i64)
    }
}

impl From<usize> for Id {
    fn from(n: usize) -> Self {
        Id::Int(n as i64)
    }
}

impl From<&str> for Id {
    fn from(s: &str) -> Self {
        Id::Str(s.to_string())
    }
}

impl From<String> for Id {
    fn from(s: String) -> Self {
        Id::Str(s)
    }
}

/// Comma-joined rendering for error messages and labels.
pub fn ids_csv<'a>(ids: impl IntoIterator<Item = &'a Id>) -> String {
    ids.into_iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_ints_then_strings() {
        let mut v = vec![
            Id::from("b"),
            Id::from(10),
            Id::from("a"),
            Id::from(2),
            Id::from(-1),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                Id::from(-1),
                Id::from(2),
                Id::from(10),
                Id::from("a"),
                Id::from("b")
            ]
        );
    }

    #[test]
    fn key_round_trip() {
        assert_eq!(Id::from_key("42"), Id::Int(42));
        assert_eq!(Id::from_key("-7"), Id::Int(-7));
        assert_eq!(Id::from_key("007"), Id::Str("007".into()));
        assert_eq!(Id::from_key("x1"), Id::Str("x1".into()));
        for id in [Id::from(3), Id::from("e12")] {
            assert_eq!(Id::from_key(&id.as_key()), id);
        }
    }

    #[test]
    fn json_untagged() {
        let id: Id = serde_json::from_str("5").unwrap();
        assert_eq!(id, Id::Int(5));
        let id: Id = serde_json::from_str("\"u\"").unwrap();
        assert_eq!(id, Id::Str("u".into()));
        assert_eq!(serde_json::to_string(&Id::Int(5)).unwrap(), "5");
        assert_eq!(serde_json::to_string(&Id::Str("u".into())).unwrap(), "\"u\"");
    }
}

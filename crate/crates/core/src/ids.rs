//! Opaque, totally ordered identifiers for vertices and edges, plus the
//! half-edge (dart) addressing used everywhere else in the crate.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("malformed {kind} identifier `{text}`")]
pub struct IdParseError {
    pub kind: &'static str,
    pub text: String,
}

macro_rules! id_type {
    ($name:ident, $prefix:literal, $kind:literal) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(pub u32);

        impl $name {
            pub fn index(self) -> u32 {
                self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($prefix, "{}"), self.0)
            }
        }

        /// Accepts both the prefixed form (`"v3"`, `"e3"`) and a bare number.
        impl FromStr for $name {
            type Err = IdParseError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                let digits = s.strip_prefix($prefix).unwrap_or(s);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(IdParseError { kind: $kind, text: s.to_string() });
                }
                digits
                    .parse::<u32>()
                    .map($name)
                    .map_err(|_| IdParseError { kind: $kind, text: s.to_string() })
            }
        }

        impl serde::Serialize for $name {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> serde::Deserialize<'de> for $name {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                text.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

id_type!(VertexId, "v", "vertex");
id_type!(EdgeId, "e", "edge");

/// One of the two ends of an arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Zero,
    One,
}

impl End {
    pub const BOTH: [End; 2] = [End::Zero, End::One];

    pub fn index(self) -> usize {
        match self {
            End::Zero => 0,
            End::One => 1,
        }
    }

    pub fn from_index(i: usize) -> Option<End> {
        match i {
            0 => Some(End::Zero),
            1 => Some(End::One),
            _ => None,
        }
    }

    pub fn opposite(self) -> End {
        match self {
            End::Zero => End::One,
            End::One => End::Zero,
        }
    }
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// A dart: one end of one arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge {
    pub edge: EdgeId,
    pub end: End,
}

impl HalfEdge {
    pub fn new(edge: EdgeId, end: End) -> Self {
        HalfEdge { edge, end }
    }

    /// The other end of the same arc.
    pub fn twin(self) -> HalfEdge {
        HalfEdge { edge: self.edge, end: self.end.opposite() }
    }
}

impl fmt::Display for HalfEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.edge, self.end)
    }
}

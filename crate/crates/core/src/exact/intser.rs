//! Serde helpers: integers that fit in an `i64` become JSON numbers, larger
//! ones decimal strings.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize, Serializer};

use super::Integer;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntOrString {
    Int(i64),
    Str(String),
}

impl From<&Integer> for IntOrString {
    fn from(v: &Integer) -> Self {
        match v.to_i64() {
            Some(i) => Self::Int(i),
            None => Self::Str(v.to_string()),
        }
    }
}

impl TryFrom<IntOrString> for Integer {
    type Error = String;
    fn try_from(v: IntOrString) -> Result<Self, String> {
        match v {
            IntOrString::Int(i) => Ok(Integer::from(i)),
            IntOrString::Str(s) => s.parse().map_err(|e| format!("bad integer {s:?}: {e}")),
        }
    }
}

pub fn one<S: Serializer>(v: &Integer, s: S) -> Result<S::Ok, S::Error> {
    IntOrString::from(v).serialize(s)
}

pub fn vec<S: Serializer>(v: &[Integer], s: S) -> Result<S::Ok, S::Error> {
    v.iter()
        .map(IntOrString::from)
        .collect::<Vec<_>>()
        .serialize(s)
}

pub fn option<S: Serializer>(v: &Option<Integer>, s: S) -> Result<S::Ok, S::Error> {
    v.as_ref().map(IntOrString::from).serialize(s)
}

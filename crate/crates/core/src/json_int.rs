//! Serde helpers writing big integers as JSON numbers when they fit in `i64`
//! and as decimal strings otherwise.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(v: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => ser.serialize_i64(x),
        None => ser.serialize_str(&v.to_string()),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Raw {
    Int(i64),
    Text(String),
}

pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigInt, D::Error> {
    match Raw::deserialize(de)? {
        Raw::Int(x) => Ok(BigInt::from(x)),
        Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
    }
}

/// Wrapper for sequences and tuples.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, Deserialize)]
#[serde(transparent)]
pub struct JsonInt(#[serde(with = "self")] pub BigInt);

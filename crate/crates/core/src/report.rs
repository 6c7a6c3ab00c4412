//! Serialization helpers. Dimensions and bounds travel as decimal strings in
//! JSON so consumers never face integer-width questions.

use num::BigInt;
use serde::{de::Error as _, Deserialize, Deserializer, Serializer};
use std::str::FromStr;

pub mod bigint_string {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let raw = String::deserialize(d)?;
        BigInt::from_str(&raw).map_err(D::Error::custom)
    }
}

pub mod bigint_string_opt {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        let raw: Option<String> = Option::deserialize(d)?;
        raw.map(|r| BigInt::from_str(&r).map_err(D::Error::custom))
            .transpose()
    }
}

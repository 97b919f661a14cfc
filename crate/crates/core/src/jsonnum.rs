//! Serde adapters for arbitrary-precision integers in JSON reports.
//!
//! Counts grow far beyond 64 bits, so they are serialized as decimal
//! strings. Weights are plain JSON numbers whenever they fit in a `u64`
//! (they always do for table-backed parameters) and fall back to decimal
//! strings beyond that; deserialization accepts either form.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};
use std::fmt;

struct BigIntVisitor;

impl Visitor<'_> for BigIntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(BigInt::from(v))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        v.parse()
            .map_err(|_| E::custom(format!("invalid decimal integer: {v:?}")))
    }
}

/// Decimal-string encoding, used for subspace counts.
pub mod count {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigInt, D::Error> {
        de.deserialize_any(BigIntVisitor)
    }
}

/// Number-when-it-fits encoding, used for weights and code lengths.
pub mod int {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
        match v.to_u64() {
            Some(small) => ser.serialize_u64(small),
            None => ser.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<BigInt, D::Error> {
        de.deserialize_any(BigIntVisitor)
    }
}

/// Sequence of number-when-it-fits integers, used for the weight hierarchy.
pub mod int_seq {
    use super::*;
    use serde::de::SeqAccess;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[BigInt], ser: S) -> Result<S::Ok, S::Error> {
        struct AsInt<'a>(&'a BigInt);
        impl serde::Serialize for AsInt<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                super::int::serialize(self.0, ser)
            }
        }
        let mut seq = ser.serialize_seq(Some(v.len()))?;
        for item in v {
            seq.serialize_element(&AsInt(item))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<BigInt>, D::Error> {
        struct SeqVisitor;
        impl<'de> Visitor<'de> for SeqVisitor {
            type Value = Vec<BigInt>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a sequence of integers or decimal strings")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<BigInt>, A::Error> {
                struct FromInt(BigInt);
                impl<'de> serde::Deserialize<'de> for FromInt {
                    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
                        super::int::deserialize(de).map(FromInt)
                    }
                }
                let mut out = Vec::new();
                while let Some(FromInt(v)) = seq.next_element()? {
                    out.push(v);
                }
                Ok(out)
            }
        }
        de.deserialize_seq(SeqVisitor)
    }
}

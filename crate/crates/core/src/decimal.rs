//! Serde helpers rendering arbitrary-precision integers as decimal strings.
//!
//! JSON numbers lose precision past 2^53 and the counts here outgrow u64
//! quickly, so BigUint fields serialize as strings via
//! `#[serde(with = "crate::decimal")]`.

use num_bigint::BigUint;
use serde::{de, Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(value: &BigUint, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_str(value)
}

pub fn deserialize<'de, D: Deserializer<'de>>(de_: D) -> Result<BigUint, D::Error> {
    let s = String::deserialize(de_)?;
    s.parse()
        .map_err(|_| de::Error::custom(format!("invalid decimal integer {s:?}")))
}

#[cfg(test)]
mod tests {
    use num_bigint::BigUint;
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize)]
    struct Holder {
        #[serde(with = "crate::decimal")]
        v: BigUint,
    }

    #[test]
    fn round_trips_huge_values() {
        let v = BigUint::from(7u32).pow(200);
        let json = serde_json::to_string(&Holder { v: v.clone() }).unwrap();
        assert!(json.contains('"'), "must be a string, not a bare number");
        let back: Holder = serde_json::from_str(&json).unwrap();
        assert_eq!(back.v, v);
    }

    #[test]
    fn rejects_garbage() {
        assert!(serde_json::from_str::<Holder>(r#"{"v":"12x"}"#).is_err());
    }
}

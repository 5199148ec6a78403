//! Serde adapter writing `f64` as a shortest round-trip decimal string.
//!
//! `f64::to_string` output parses back to the identical double, and the
//! string form also carries `inf` and `NaN`, which JSON numbers cannot.

use serde::{Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(value: &f64, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<f64, D::Error> {
    let text = String::deserialize(deserializer)?;
    text.parse().map_err(serde::de::Error::custom)
}

#[cfg(test)]
mod tests {
    use serde::{Deserialize, Serialize};

    #[derive(Serialize, Deserialize, PartialEq, Debug)]
    struct Wrap(#[serde(with = "super")] f64);

    #[test]
    fn round_trips_exactly() {
        for x in [0.1 + 0.2, 277_258.872_223_978_1, f64::INFINITY, -0.0, 1e-300] {
            let text = serde_json::to_string(&Wrap(x)).unwrap();
            let back: Wrap = serde_json::from_str(&text).unwrap();
            assert_eq!(back.0.to_bits(), x.to_bits(), "{text}");
        }
        assert_eq!(serde_json::to_string(&Wrap(1056.0)).unwrap(), "\"1056\"");
    }
}

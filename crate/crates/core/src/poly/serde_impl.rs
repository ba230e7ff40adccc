//! Structured encoding: a list of `[exponent, coefficient]` pairs by
//! descending exponent.

use serde::de::{Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use super::{Coeff, Poly};

impl<C: Coeff + Serialize> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (e, c) in self.terms_desc() {
            seq.serialize_element(&(e, c))?;
        }
        seq.end()
    }
}

impl<'de, C: Coeff + Deserialize<'de>> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<(u64, C)> = Vec::deserialize(deserializer)?;
        Ok(Poly::from_terms(pairs))
    }
}

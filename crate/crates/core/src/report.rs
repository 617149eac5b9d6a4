//! Serialized report shapes.

use num_bigint::BigUint;
use serde::Serializer;

/// Group orders can exceed `u64`; they are written as decimal strings.
pub fn serialize_biguint<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

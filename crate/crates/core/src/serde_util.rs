use serde::Serializer;

use crate::algebra::Rational;

pub fn rational_as_string<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
pub fn bigint_as_number<S: Serializer>(n: &num_bigint::BigInt, s: S) -> Result<S::Ok, S::Error> {
    match num_traits::ToPrimitive::to_i64(n) {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&n.to_string()),
    }
}

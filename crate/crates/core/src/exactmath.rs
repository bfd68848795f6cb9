//! Arbitrary-precision integers and the polynomial binomial coefficient.
//!
//! Hilbert polynomials are evaluated at arbitrary integers, including
//! negative ones reached by the peeling recursion, so `binom(x, m)` is the
//! falling-factorial polynomial `x (x-1) ... (x-m+1) / m!` and never
//! clipped at zero.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Signed integer of unbounded magnitude. Every dimension count lives here.
pub type ExactInt = BigInt;

/// `x (x-1) ... (x-m+1) / m!` evaluated exactly.
///
/// The running product is divided by `j` at step `j`; after step `j` it
/// equals `binom(x, j)`, which is always an integer.
pub fn polybinom(x: i64, m: u32) -> ExactInt {
    if m == 0 {
        return ExactInt::one();
    }
    if (0..i64::from(m)).contains(&x) {
        return ExactInt::zero();
    }
    let mut acc = ExactInt::one();
    for j in 1..=i64::from(m) {
        acc *= x - j + 1;
        acc /= j;
    }
    acc
}

/// Serde adapter writing an [`ExactInt`] as a decimal string.
///
/// JSON numbers lose precision past 2^53, and values here routinely exceed
/// 64 bits.
pub mod decimal {
    use super::ExactInt;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &ExactInt, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<ExactInt, D::Error> {
        let s = String::deserialize(de)?;
        s.trim().parse().map_err(de::Error::custom)
    }

    /// Same as the parent module, for `Option<ExactInt>`; `None` is the
    /// empty string.
    pub mod option {
        use super::ExactInt;
        use serde::{de, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(
            value: &Option<ExactInt>,
            ser: S,
        ) -> Result<S::Ok, S::Error> {
            match value {
                Some(v) => ser.collect_str(v),
                None => ser.serialize_str(""),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            de: D,
        ) -> Result<Option<ExactInt>, D::Error> {
            let s = String::deserialize(de)?;
            let s = s.trim();
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse().map(Some).map_err(de::Error::custom)
            }
        }
    }
}

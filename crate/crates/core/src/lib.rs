//! Sum-free subsets of `[1..n]`: exact enumeration, link graphs, maximal
//! independent sets in graphs with loops, structural diagnostics and explicit
//! constructions.

pub mod bits;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod groundset;
pub mod linkgraph;
pub mod mis;
pub mod sampling;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use num_bigint::BigUint;

/// Big counts serialize as JSON numbers when they fit in `u64`, otherwise as
/// decimal strings.
pub(crate) mod serde_big {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match v.to_u64() {
            Some(x) => s.serialize_u64(x),
            None => s.serialize_str(&v.to_str_radix(10)),
        }
    }
}

//! Exact diagram counts.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, ParseBigIntError, Sign};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An arbitrary-precision signed integer.
///
/// Counts always render and serialize as exact decimal strings, never as
/// native JSON numbers or fixed-width integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(BigInt);

impl Count {
    pub fn zero() -> Self {
        Count(BigInt::zero())
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn into_bigint(self) -> BigInt {
        self.0
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The magnitude, for non-negative counts.
    pub fn to_biguint(&self) -> Option<BigUint> {
        self.0.to_biguint()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Count {
    type Err = ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse().map(Count)
    }
}

impl From<BigInt> for Count {
    fn from(v: BigInt) -> Self {
        Count(v)
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(BigInt::from_biguint(Sign::Plus, v))
    }
}

impl From<Count> for BigInt {
    fn from(c: Count) -> Self {
        c.0
    }
}

macro_rules! primitive_counts {
    ($($t:ty),*) => {$(
        impl From<$t> for Count {
            fn from(v: $t) -> Self {
                Count(BigInt::from(v))
            }
        }

        impl PartialEq<$t> for Count {
            fn eq(&self, other: &$t) -> bool {
                self.0 == BigInt::from(*other)
            }
        }
    )*};
}

primitive_counts!(u8, u16, u32, u64, u128, usize, i32, i64, i128);

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

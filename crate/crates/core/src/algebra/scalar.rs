use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// `x^e` for any integer exponent; `x` must be nonzero when `e < 0`.
pub fn pow(x: &Scalar, e: i64) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..e.unsigned_abs() {
        acc *= x;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// `(-1)^e`
pub fn sign(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// Parses `"3"`, `"-1/2"` and similar.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let value = Scalar::from_str(t).map_err(|e| Error::Parse(format!("scalar {t:?}: {e}")))?;
    Ok(value)
}

pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// The deformation parameter `q` with `r = q + 1` invertible.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QParam(Scalar);

impl QParam {
    pub fn new(q: Scalar) -> Result<Self> {
        if q == -Scalar::one() {
            return Err(Error::SingularQ);
        }
        Ok(QParam(q))
    }

    pub fn one() -> Self {
        QParam(Scalar::one())
    }

    pub fn q(&self) -> &Scalar {
        &self.0
    }

    pub fn r(&self) -> Scalar {
        &self.0 + Scalar::one()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// The values used throughout the test suites.
    pub fn standard_set() -> Vec<QParam> {
        [int(1), int(2), int(-3), frac(1, 2)].into_iter().map(QParam).collect()
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q={}", self.0)
    }
}

impl FromStr for QParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        QParam::new(parse_scalar(s)?)
    }
}

impl Serialize for QParam {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for QParam {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let value = serde_json::Value::deserialize(deserializer)?;
        let text = match value {
            serde_json::Value::String(s) => s,
            serde_json::Value::Number(n) => n.to_string(),
            other => return Err(serde::de::Error::custom(format!("invalid q: {other}"))),
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_and_signs() {
        assert_eq!(pow(&int(2), -2), frac(1, 4));
        assert_eq!(pow(&frac(1, 2), 3), frac(1, 8));
        assert_eq!(pow(&int(0), 0), int(1));
        assert_eq!(sign(3), int(-1));
        assert_eq!(sign(-2), int(1));
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_scalar("-3/6").unwrap(), frac(-1, 2));
        assert_eq!(format_scalar(&frac(4, 2)), "2");
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn q_rejects_minus_one() {
        assert_eq!("-1".parse::<QParam>(), Err(Error::SingularQ));
        let q: QParam = "1/2".parse().unwrap();
        assert_eq!(q.r(), frac(3, 2));
        assert_eq!(serde_json::to_string(&q).unwrap(), "\"1/2\"");
    }
}

//! Scalars of the (max, +) semifield: the reals extended by a bottom element.
//!
//! Tropical addition `⊕` is `max`, tropical multiplication `⊗` is ordinary
//! `+`. The bottom element `−∞` is the additive zero and absorbs under `⊗`;
//! the real `0` is the multiplicative one. The multiplicative inverse of a
//! finite value is its negation and the power `x^r` is the product `r·x`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A finite real or the bottom element `−∞`.
///
/// Stored as an `f64` that is never NaN or `+∞`, so the order is total.
#[derive(Clone, Copy, PartialEq)]
pub struct MaxPlus(f64);

impl MaxPlus {
    pub const BOTTOM: MaxPlus = MaxPlus(f64::NEG_INFINITY);
    pub const ONE: MaxPlus = MaxPlus(0.0);

    /// Wraps a raw value; `−∞` maps to bottom, NaN and `+∞` are rejected.
    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value == f64::INFINITY {
            return Err(Error::Domain(format!("{value} is not a max-plus scalar")));
        }
        Ok(MaxPlus(value))
    }

    /// Wraps a finite real.
    ///
    /// # Panics
    /// If `value` is not finite.
    pub fn finite(value: f64) -> Self {
        assert!(value.is_finite(), "expected a finite real, got {value}");
        MaxPlus(value)
    }

    pub fn from_option(value: Option<f64>) -> Result<Self> {
        match value {
            Some(v) if v.is_finite() => Ok(MaxPlus(v)),
            Some(v) => Err(Error::Domain(format!("{v} is not a finite real"))),
            None => Ok(Self::BOTTOM),
        }
    }

    pub fn is_bottom(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    pub fn is_finite(self) -> bool {
        !self.is_bottom()
    }

    /// The underlying value, `f64::NEG_INFINITY` for bottom.
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn to_option(self) -> Option<f64> {
        self.is_finite().then_some(self.0)
    }

    /// `self ⊕ other = max(self, other)`.
    #[inline]
    pub fn oplus(self, other: Self) -> Self {
        if self.0 >= other.0 {
            self
        } else {
            other
        }
    }

    /// `self ⊗ other = self + other`, bottom absorbing.
    #[inline]
    pub fn otimes(self, other: Self) -> Self {
        if self.is_bottom() || other.is_bottom() {
            Self::BOTTOM
        } else {
            MaxPlus(self.0 + other.0)
        }
    }

    /// Conjugate `x⁻`: negation for finite values, bottom stays bottom.
    #[inline]
    pub fn conj(self) -> Self {
        if self.is_bottom() {
            self
        } else {
            MaxPlus(-self.0)
        }
    }

    /// Multiplicative inverse; undefined for bottom.
    pub fn inverse(self) -> Result<Self> {
        if self.is_bottom() {
            return Err(Error::Domain("bottom has no multiplicative inverse".into()));
        }
        Ok(MaxPlus(-self.0))
    }

    /// Real power `x^r`, realised as `r·x`. Bottom to a positive power is
    /// bottom; bottom to a non-positive power is rejected.
    pub fn pow(self, exponent: f64) -> Result<Self> {
        if !exponent.is_finite() {
            return Err(Error::Domain(format!("exponent {exponent} is not finite")));
        }
        if self.is_bottom() {
            return if exponent > 0.0 {
                Ok(self)
            } else {
                Err(Error::Domain(format!(
                    "bottom raised to non-positive power {exponent}"
                )))
            };
        }
        Ok(MaxPlus(self.0 * exponent))
    }
}

impl Eq for MaxPlus {}

impl PartialOrd for MaxPlus {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MaxPlus {
    fn cmp(&self, other: &Self) -> Ordering {
        // NaN is excluded at construction.
        self.0.partial_cmp(&other.0).expect("max-plus scalar is never NaN")
    }
}

impl Default for MaxPlus {
    fn default() -> Self {
        Self::BOTTOM
    }
}

impl fmt::Debug for MaxPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MaxPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_bottom() {
            f.write_str("-inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl From<MaxPlus> for f64 {
    fn from(x: MaxPlus) -> f64 {
        x.0
    }
}

/// Serialised as a JSON number, bottom as `null`.
impl serde::Serialize for MaxPlus {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_option().serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for MaxPlus {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Option::<f64>::deserialize(deserializer)?;
        MaxPlus::from_option(v).map_err(serde::de::Error::custom)
    }
}

impl std::iter::Sum for MaxPlus {
    /// Tropical sum (maximum); empty sums are bottom.
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::BOTTOM, MaxPlus::oplus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bottom_rules() {
        let x = MaxPlus::finite(3.5);
        assert_eq!(MaxPlus::BOTTOM.otimes(x), MaxPlus::BOTTOM);
        assert_eq!(MaxPlus::BOTTOM.oplus(x), x);
        assert_eq!(x.otimes(MaxPlus::ONE), x);
        assert_eq!(x.oplus(x), x);
        assert!(MaxPlus::BOTTOM < MaxPlus::finite(-1e300));
    }

    #[test]
    fn rejects_nan_and_top() {
        assert!(MaxPlus::new(f64::NAN).is_err());
        assert!(MaxPlus::new(f64::INFINITY).is_err());
        assert!(MaxPlus::new(f64::NEG_INFINITY).unwrap().is_bottom());
    }

    #[test]
    fn conj_and_inverse() {
        assert_eq!(MaxPlus::finite(2.0).conj(), MaxPlus::finite(-2.0));
        assert!(MaxPlus::BOTTOM.conj().is_bottom());
        assert!(MaxPlus::BOTTOM.inverse().is_err());
        assert_eq!(
            MaxPlus::finite(2.0).otimes(MaxPlus::finite(2.0).inverse().unwrap()),
            MaxPlus::ONE
        );
    }

    #[test]
    fn real_powers() {
        assert_eq!(MaxPlus::finite(3.0).pow(0.5).unwrap(), MaxPlus::finite(1.5));
        assert_eq!(MaxPlus::finite(3.0).pow(-2.0).unwrap(), MaxPlus::finite(-6.0));
        assert!(MaxPlus::BOTTOM.pow(2.0).unwrap().is_bottom());
        assert!(MaxPlus::BOTTOM.pow(0.0).is_err());
        assert!(MaxPlus::BOTTOM.pow(-1.0).is_err());
    }
}

//! Exact arithmetic on the extended half-line `[0, ∞]`.
//!
//! Every distance in the crate is an [`ExtVal`]: either a nonnegative
//! rational held at arbitrary precision or the top element `∞`. Addition
//! absorbs `∞`, and truncated subtraction follows the Lawvere conventions
//! `∞ ⊖ ∞ = 0` and `∞ ⊖ a = ∞` for finite `a`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// A value in `[0, ∞]`.
///
/// Finite values are stored in lowest terms with a positive denominator
/// (guaranteed by [`BigRational`]) and are never negative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExtVal {
    Finite(BigRational),
    Infinity,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseExtValError {
    #[error("empty value")]
    Empty,
    #[error("negative value `{0}`")]
    Negative(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("malformed value `{0}`")]
    Malformed(String),
}

impl ExtVal {
    pub fn zero() -> Self {
        ExtVal::Finite(BigRational::zero())
    }

    pub fn inf() -> Self {
        ExtVal::Infinity
    }

    pub fn from_int(n: u64) -> Self {
        ExtVal::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`. Panics on a zero denominator.
    pub fn ratio(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        ExtVal::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Wraps a rational, returning `None` when it is negative.
    pub fn from_rational(r: BigRational) -> Option<Self> {
        if r.is_negative() {
            None
        } else {
            Some(ExtVal::Finite(r))
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtVal::Finite(r) if r.is_zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtVal::Infinity)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_infinite()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExtVal::Finite(r) => Some(r),
            ExtVal::Infinity => None,
        }
    }

    pub fn add(&self, other: &ExtVal) -> ExtVal {
        match (self, other) {
            (ExtVal::Finite(a), ExtVal::Finite(b)) => ExtVal::Finite(a + b),
            _ => ExtVal::Infinity,
        }
    }

    /// Truncated subtraction `self ⊖ other = max{0, self − other}`.
    pub fn monus(&self, other: &ExtVal) -> ExtVal {
        match (self, other) {
            (ExtVal::Infinity, ExtVal::Infinity) => ExtVal::zero(),
            (ExtVal::Infinity, ExtVal::Finite(_)) => ExtVal::Infinity,
            (ExtVal::Finite(_), ExtVal::Infinity) => ExtVal::zero(),
            (ExtVal::Finite(a), ExtVal::Finite(b)) => {
                if a > b {
                    ExtVal::Finite(a - b)
                } else {
                    ExtVal::zero()
                }
            }
        }
    }

    pub fn min_with(&self, other: &ExtVal) -> ExtVal {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn max_with(&self, other: &ExtVal) -> ExtVal {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }
}

/// The Lawvere distance `d_L(a, b) = b ⊖ a`.
pub fn lawvere(a: &ExtVal, b: &ExtVal) -> ExtVal {
    b.monus(a)
}

/// Minimum of a collection; the empty minimum is `∞`.
pub fn inf_of<'a, I>(values: I) -> ExtVal
where
    I: IntoIterator<Item = &'a ExtVal>,
{
    values
        .into_iter()
        .min()
        .cloned()
        .unwrap_or(ExtVal::Infinity)
}

/// Maximum of a collection; the empty maximum is `0`.
pub fn sup_of<'a, I>(values: I) -> ExtVal
where
    I: IntoIterator<Item = &'a ExtVal>,
{
    values.into_iter().max().cloned().unwrap_or_else(ExtVal::zero)
}

/// Owned-value variant of [`inf_of`].
pub fn inf_owned<I: IntoIterator<Item = ExtVal>>(values: I) -> ExtVal {
    values.into_iter().min().unwrap_or(ExtVal::Infinity)
}

/// Owned-value variant of [`sup_of`].
pub fn sup_owned<I: IntoIterator<Item = ExtVal>>(values: I) -> ExtVal {
    values.into_iter().max().unwrap_or_else(ExtVal::zero)
}

impl Ord for ExtVal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtVal::Infinity, ExtVal::Infinity) => Ordering::Equal,
            (ExtVal::Infinity, _) => Ordering::Greater,
            (_, ExtVal::Infinity) => Ordering::Less,
            (ExtVal::Finite(a), ExtVal::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for ExtVal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for ExtVal {
    fn default() -> Self {
        ExtVal::zero()
    }
}

impl fmt::Display for ExtVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtVal::Infinity => f.write_str("inf"),
            ExtVal::Finite(r) if r.is_integer() => write!(f, "{}", r.numer()),
            ExtVal::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for ExtVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(s: &str, whole: &str) -> Result<BigInt, ParseExtValError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseExtValError::Malformed(whole.to_string()));
    }
    s.parse::<BigInt>()
        .map_err(|_| ParseExtValError::Malformed(whole.to_string()))
}

impl FromStr for ExtVal {
    type Err = ParseExtValError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseExtValError::Empty);
        }
        if s == "inf" {
            return Ok(ExtVal::Infinity);
        }
        if s.starts_with('-') {
            return Err(ParseExtValError::Negative(s.to_string()));
        }
        match s.split_once('/') {
            None => Ok(ExtVal::Finite(BigRational::from_integer(parse_digits(
                s, s,
            )?))),
            Some((p, q)) => {
                let num = parse_digits(p, s)?;
                let den = parse_digits(q, s)?;
                if den.is_zero() {
                    return Err(ParseExtValError::ZeroDenominator(s.to_string()));
                }
                Ok(ExtVal::Finite(BigRational::new(num, den)))
            }
        }
    }
}

/// Parses a signed rational `p`, `-p`, `p/q` or `-p/q`.
pub fn parse_signed_rational(s: &str) -> Result<BigRational, ParseExtValError> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let magnitude = match body.parse::<ExtVal>()? {
        ExtVal::Finite(r) => r,
        ExtVal::Infinity => return Err(ParseExtValError::Malformed(s.to_string())),
    };
    Ok(if neg { -magnitude } else { magnitude })
}

impl serde::Serialize for ExtVal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> ExtVal {
        s.parse().unwrap()
    }

    #[test]
    fn addition() {
        assert_eq!(v("1/2").add(&v("1/3")), v("5/6"));
        assert_eq!(ExtVal::inf().add(&ExtVal::zero()), ExtVal::inf());
        assert_eq!(ExtVal::inf().add(&ExtVal::inf()), ExtVal::inf());
    }

    #[test]
    fn lawvere_conventions() {
        assert_eq!(lawvere(&v("3"), &v("5")), v("2"));
        assert_eq!(lawvere(&v("5"), &v("3")), v("0"));
        assert_eq!(lawvere(&ExtVal::inf(), &ExtVal::inf()), ExtVal::zero());
        assert_eq!(lawvere(&v("2"), &ExtVal::inf()), ExtVal::inf());
        assert_eq!(lawvere(&ExtVal::inf(), &v("2")), ExtVal::zero());
    }

    #[test]
    fn lattice_identities() {
        let xs = [v("1/2"), ExtVal::inf(), v("2")];
        assert_eq!(inf_of(&xs), v("1/2"));
        assert_eq!(sup_of(&xs), ExtVal::inf());
        assert_eq!(sup_of(&[]), ExtVal::zero());
        assert_eq!(inf_of(&[]), ExtVal::inf());
        assert_eq!(ExtVal::inf().cmp(&ExtVal::inf()), Ordering::Equal);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(v("4/6").to_string(), "2/3");
        assert_eq!(v("6/3").to_string(), "2");
        assert_eq!(v("inf").to_string(), "inf");
        assert_eq!(v("0").to_string(), "0");
        assert!(matches!("-1".parse::<ExtVal>(), Err(ParseExtValError::Negative(_))));
        assert!(matches!(
            "1/0".parse::<ExtVal>(),
            Err(ParseExtValError::ZeroDenominator(_))
        ));
        assert!(matches!("x".parse::<ExtVal>(), Err(ParseExtValError::Malformed(_))));
        assert!(matches!("1/-2".parse::<ExtVal>(), Err(ParseExtValError::Malformed(_))));
        assert!(matches!("".parse::<ExtVal>(), Err(ParseExtValError::Empty)));
        assert_eq!(parse_signed_rational("-1/2").unwrap().to_string(), "-1/2");
    }
}

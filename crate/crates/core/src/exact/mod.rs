//! Exact rational arithmetic: scalars, dense matrices, subspaces and bilinear forms.
//!
//! Nothing in here knows about categories. Every comparison is exact.

mod form;
mod matrix;
mod subspace;

pub use form::BilinearForm;
pub use matrix::{ExactMatrix, Rref, Whisker};
pub use subspace::Subspace;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from a pair of machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integral rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"`, `"p"` or `"-p/q"` exactly.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
            let q: BigInt = q.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
            if q.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(t.parse().map_err(|_| format!("not a rational: {s:?}"))?),
    };
    Ok(parsed)
}

/// Renders as `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

/// Serde adapters writing rationals as `"p/q"` strings.
pub mod serde_rational {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }

    /// The same for `Vec<Rational>`.
    pub mod vec {
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        use super::super::{parse_rational, Rational};

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            v.iter().map(ToString::to_string).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<String>::deserialize(d)?
                .iter()
                .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-2").unwrap(), int(-2));
        assert_eq!(parse_rational(" 3 / -6 ").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(fmt_rational(&rat(-4, 6)), "-2/3");
        assert_eq!(fmt_rational(&int(5)), "5");
    }
}

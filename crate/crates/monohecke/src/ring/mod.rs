//! Exact arithmetic: rationals, ℚ(√5), Laurent polynomials in `v`,
//! integer polynomials in `x, y`, multivariate polynomials over ℚ and their
//! fraction field.

mod bipoly;
mod fp;
mod laurent;
pub mod linalg;
mod multipoly;
mod quad;
mod ratfunc;

pub use bipoly::BiPoly;
pub use fp::Fp;
pub use laurent::Laurent;
pub use multipoly::MultiPoly;
pub use quad::QuadExt;
pub use ratfunc::RatFunc;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Commutative ring interface shared by the coefficient types.
///
/// `inverse` returns `None` for non-units, so the same trait serves fields
/// and ℤ.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
    fn inverse(&self) -> Option<Self>;

    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negate())
    }
    fn from_bigint(n: &BigInt) -> Self {
        if let Some(k) = n.to_i64() {
            return Self::from_i64(k);
        }
        let (sign, digits) = n.to_u32_digits();
        let base = Self::from_i64(1 << 32);
        let mut acc = Self::zero();
        for d in digits.iter().rev() {
            acc = acc.times(&base).plus(&Self::from_i64(*d as i64));
        }
        if sign == num_bigint::Sign::Minus {
            acc.negate()
        } else {
            acc
        }
    }
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Parse `"3"`, `"-2/5"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if Zero::is_zero(&d) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// A scalar tagged with its ring; arithmetic across different tags is
/// rejected instead of silently coerced.
#[derive(Clone, Debug, PartialEq)]
pub enum RingElem {
    Int(BigInt),
    Rat(Rational),
    Quad(QuadExt),
}

impl RingElem {
    pub fn tag(&self) -> &'static str {
        match self {
            RingElem::Int(_) => "Z",
            RingElem::Rat(_) => "Q",
            RingElem::Quad(_) => "Q(sqrt5)",
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElem::Int(a) => Zero::is_zero(a),
            RingElem::Rat(a) => Zero::is_zero(a),
            RingElem::Quad(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElem::Int(a) => One::is_one(a),
            RingElem::Rat(a) => One::is_one(a),
            RingElem::Quad(a) => Ring::is_one(a),
        }
    }

    pub fn to_quad(&self) -> QuadExt {
        match self {
            RingElem::Int(a) => QuadExt::from_rational(BigRational::from_integer(a.clone())),
            RingElem::Rat(a) => QuadExt::from_rational(a.clone()),
            RingElem::Quad(a) => a.clone(),
        }
    }

    /// Parse `"3"`, `"1/2"` (ℚ; integers become ℤ) or `"a+b*sqrt5"`-style input
    /// given as `"a,b"` with a `q:` prefix, e.g. `"q:-1/2,-1/2"`.
    pub fn parse(s: &str) -> Result<RingElem> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("q:") {
            let (a, b) = rest
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected q:a,b, got {s:?}")))?;
            return Ok(RingElem::Quad(QuadExt::new(parse_rational(a)?, parse_rational(b)?)));
        }
        let r = parse_rational(s)?;
        if r.is_integer() {
            Ok(RingElem::Int(r.to_integer()))
        } else {
            Ok(RingElem::Rat(r))
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            RingElem::Int(a) => a.to_i64(),
            _ => None,
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Int(a) => write!(f, "{a}"),
            RingElem::Rat(a) => write!(f, "{a}"),
            RingElem::Quad(a) => write!(f, "{a}"),
        }
    }
}

pub(crate) fn fmt_coeff_term(
    f: &mut String,
    first: bool,
    c: &BigInt,
    mono: &str,
) {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            f.push('-');
        }
    } else if neg {
        f.push_str(" - ");
    } else {
        f.push_str(" + ");
    }
    if mono.is_empty() {
        f.push_str(&a.to_string());
    } else if One::is_one(&a) {
        f.push_str(mono);
    } else {
        f.push_str(&format!("{a}*{mono}"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_ring_elems() {
        assert_eq!(RingElem::parse("-2").unwrap(), RingElem::Int(BigInt::from(-2)));
        assert_eq!(RingElem::parse("4/2").unwrap(), RingElem::Int(BigInt::from(2)));
        assert_eq!(RingElem::parse("1/3").unwrap(), RingElem::Rat(rat(1, 3)));
        assert!(matches!(RingElem::parse("q:-1/2,-1/2").unwrap(), RingElem::Quad(_)));
        assert!(RingElem::parse("x").is_err());
        assert!(RingElem::parse("1/0").is_err());
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(Ring::pow(&rat(2, 3), 3), rat(8, 27));
        assert_eq!(Ring::pow(&BigInt::from(3), 0), BigInt::from(1));
    }
}

use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use super::{Rational, Ring};

/// `a + b·√5` with rational `a, b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadExt { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadExt { a, b: BigRational::zero() }
    }

    pub fn sqrt5() -> Self {
        QuadExt { a: BigRational::zero(), b: BigRational::one() }
    }

    /// The golden ratio `(1 + √5)/2 = 2cos(π/5)`.
    pub fn phi() -> Self {
        let h = super::rat(1, 2);
        QuadExt { a: h.clone(), b: h }
    }

    pub fn conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -&self.b }
    }

    pub fn norm(&self) -> Rational {
        &self.a * &self.a - BigRational::from_integer(5.into()) * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        QuadExt::from_rational(BigRational::zero())
    }
    fn one() -> Self {
        QuadExt::from_rational(BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        QuadExt::from_rational(BigRational::from_integer(n.into()))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        QuadExt { a: &self.a + &o.a, b: &self.b + &o.b }
    }
    fn times(&self, o: &Self) -> Self {
        let five = BigRational::from_integer(5.into());
        QuadExt {
            a: &self.a * &o.a + five * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
    fn negate(&self) -> Self {
        QuadExt { a: -&self.a, b: -&self.b }
    }
    fn inverse(&self) -> Option<Self> {
        // √5 is irrational, so the norm vanishes only at zero
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(QuadExt { a: c.a / &n, b: c.b / n })
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt5", self.b),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "{} {} {}*sqrt5", self.a, sign, self.b.abs())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn golden_ratio_identity() {
        // φ² = φ + 1
        let p = QuadExt::phi();
        assert_eq!(p.times(&p), p.plus(&QuadExt::one()));
    }

    #[test]
    fn inverse_roundtrip() {
        let x = QuadExt::new(rat(3, 2), rat(-1, 7));
        assert!(x.times(&x.inverse().unwrap()).is_one());
        assert!(QuadExt::zero().inverse().is_none());
    }
}

use std::fmt;

use super::{Fp, MultiPoly, Rational, Ring};

/// Quotient of multivariate polynomials, kept reduced with a monic
/// denominator so that the representation is canonical.
#[derive(Clone, Debug, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// `None` when `den` is zero.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Option<RatFunc> {
        if den.is_zero() {
            return None;
        }
        Some(RatFunc::reduce(num, den))
    }

    fn reduce(num: MultiPoly, den: MultiPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let lc = den.leading().map(|(_, c)| c.clone()).expect("nonzero denominator");
        let inv = lc.recip();
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: MultiPoly) -> RatFunc {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn from_rational(c: Rational) -> RatFunc {
        RatFunc::from_poly(MultiPoly::constant(c))
    }

    pub fn var(i: usize) -> RatFunc {
        RatFunc::from_poly(MultiPoly::var(i))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn div(&self, o: &RatFunc) -> Option<RatFunc> {
        Some(self.times(&o.inverse()?))
    }

    /// Substitute variables in numerator and denominator.
    pub fn substitute(&self, subs: &[(usize, MultiPoly)]) -> Option<RatFunc> {
        RatFunc::new(self.num.substitute(subs), self.den.substitute(subs))
    }

    pub fn eval_rat(&self, pt: &[Rational]) -> Option<Rational> {
        let d = self.den.eval_rat(pt);
        if num_traits::Zero::is_zero(&d) {
            return None;
        }
        Some(self.num.eval_rat(pt) / d)
    }

    pub fn eval_fp(&self, pt: &[Fp]) -> Option<Fp> {
        let d = self.den.eval_fp(pt)?;
        Some(self.num.eval_fp(pt)?.times(&d.inverse()?))
    }

    /// Degree of a homogeneous quotient (`deg num − deg den`).
    pub fn homogeneous_degree(&self) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        Some(self.num.homogeneous_degree()? as i64 - self.den.homogeneous_degree()? as i64)
    }

    pub fn display_with(&self, names: &[&str]) -> String {
        if self.den.is_one() {
            self.num.display_with(names)
        } else {
            format!("({})/({})", self.num.display_with(names), self.den.display_with(names))
        }
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        (self.num == o.num && self.den == o.den)
            || self.num.times(&o.den) == o.num.times(&self.den)
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc { num: MultiPoly::zero(), den: MultiPoly::one() }
    }
    fn one() -> Self {
        RatFunc { num: MultiPoly::one(), den: MultiPoly::one() }
    }
    fn from_i64(n: i64) -> Self {
        RatFunc::from_poly(MultiPoly::from_i64(n))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RatFunc::reduce(self.num.plus(&o.num), self.den.clone());
        }
        RatFunc::reduce(
            self.num.times(&o.den).plus(&o.num.times(&self.den)),
            self.den.times(&o.den),
        )
    }
    fn times(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.is_poly() && o.is_poly() {
            return RatFunc { num: self.num.times(&o.num), den: MultiPoly::one() };
        }
        // cross-cancel before multiplying to keep sizes down
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let num = n1.times(&n2);
        let den = d1.times(&d2);
        let lc = den.leading().map(|(_, c)| c.clone()).expect("nonzero").recip();
        RatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }
    fn negate(&self) -> Self {
        RatFunc { num: self.num.negate(), den: self.den.clone() }
    }
    fn inverse(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(RatFunc::reduce(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> RatFunc {
        RatFunc::var(0)
    }
    fn d() -> RatFunc {
        RatFunc::var(1)
    }

    #[test]
    fn spec_examples() {
        let inv_a = a().inverse().unwrap();
        assert!(inv_a.plus(&inv_a.negate()).is_zero());
        assert_eq!(a().times(&d()).div(&a()).unwrap(), d());
        assert_eq!(inv_a.times(&a().times(&a())), a());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFunc::new(MultiPoly::one(), MultiPoly::zero()).is_none());
        assert!(RatFunc::zero().inverse().is_none());
    }

    #[test]
    fn canonical_form() {
        // (x^2 - y^2)/(2x + 2y) == (x - y)/2
        let x = MultiPoly::var(0);
        let y = MultiPoly::var(1);
        let n = x.times(&x).minus(&y.times(&y));
        let dd = x.plus(&y).scale(&crate::ring::rat(2, 1));
        let r = RatFunc::new(n, dd).unwrap();
        assert!(r.is_poly());
        assert_eq!(r.num(), &x.minus(&y).scale(&crate::ring::rat(1, 2)));
    }
}

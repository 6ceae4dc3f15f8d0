use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::Ring;
use crate::error::{Error, Result};

/// Element of ℤ[v, v⁻¹], stored sparsely as exponent → coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<i32, BigInt>,
}

impl Laurent {
    pub fn new() -> Self {
        Laurent::default()
    }

    pub fn constant(c: i64) -> Self {
        Laurent::monomial(c, 0)
    }

    /// `c·v^k`
    pub fn monomial(c: impl Into<BigInt>, k: i32) -> Self {
        let mut l = Laurent::new();
        l.add_term(k, c.into());
        l
    }

    pub fn v() -> Self {
        Laurent::monomial(1, 1)
    }

    pub fn v_inv() -> Self {
        Laurent::monomial(1, -1)
    }

    pub fn add_term(&mut self, k: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `v ↦ v⁻¹`
    pub fn bar(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect() }
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Laurent::new();
        for (k, a) in &self.terms {
            out.add_term(*k, a * c);
        }
        out
    }

    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Evaluate at an integer point (negative powers require `v = ±1`).
    pub fn eval_at<R: Ring>(&self, v: &R) -> Option<R> {
        let vi = v.inverse();
        let mut acc = R::zero();
        for (k, c) in &self.terms {
            let base = if *k >= 0 { v.pow(*k as u32) } else { vi.as_ref()?.pow((-k) as u32) };
            acc = acc.plus(&base.times(&R::from_bigint(c)));
        }
        Some(acc)
    }

    /// Parse strings such as `"v^2 + 1 - 3*v^-1"` or `"(v + v^-1)"`-free
    /// sums of monomials.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a Laurent polynomial: {s:?}"));
        let mut out = Laurent::new();
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // split into signed terms, keeping the '-' of negative exponents
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev.is_some() && prev != Some('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = Some(ch);
        }
        terms.push(cur);
        for t in terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(b) => (-1, b),
                None => (1, t.strip_prefix('+').unwrap_or(&t)),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coef, mono) = match body.split_once('*') {
                Some((c, m)) => (c.parse::<BigInt>().map_err(|_| bad())?, Some(m)),
                None if body.starts_with('v') => (BigInt::one(), Some(body)),
                None => (body.parse::<BigInt>().map_err(|_| bad())?, None),
            };
            let exp = match mono {
                None => 0,
                Some("v") => 1,
                Some(m) => m
                    .strip_prefix("v^")
                    .ok_or_else(bad)?
                    .parse::<i32>()
                    .map_err(|_| bad())?,
            };
            out.add_term(exp, coef * sign);
        }
        Ok(out)
    }
}

impl Ring for Laurent {
    fn zero() -> Self {
        Laurent::new()
    }
    fn one() -> Self {
        Laurent::constant(1)
    }
    fn from_i64(n: i64) -> Self {
        Laurent::constant(n)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = Laurent::new();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }
    fn negate(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (k, c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some(Laurent::monomial(c.clone(), -k))
        } else {
            None
        }
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let mono = match k {
                0 => String::new(),
                1 => "v".to_string(),
                _ => format!("v^{k}"),
            };
            super::fmt_coeff_term(&mut s, i == 0, c, &mono);
        }
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_examples() {
        let p = Laurent::v().plus(&Laurent::v_inv());
        assert_eq!(p.bar(), p);
        assert_eq!(Laurent::monomial(1, 2).bar(), Laurent::monomial(1, -2));
        let q = Laurent::constant(1).plus(&Laurent::monomial(2, 3));
        assert_eq!(q.bar(), Laurent::constant(1).plus(&Laurent::monomial(2, -3)));
    }

    #[test]
    fn display_and_parse() {
        let p = Laurent::parse("v^2 + 1 - 3*v^-1").unwrap();
        assert_eq!(p.to_string(), "v^2 + 1 - 3*v^-1");
        assert_eq!(Laurent::parse(&p.to_string()).unwrap(), p);
        assert_eq!(Laurent::parse("-v").unwrap(), Laurent::monomial(-1, 1));
        assert_eq!(Laurent::zero().to_string(), "0");
        assert!(Laurent::parse("v^x").is_err());
        assert!(Laurent::parse("").is_err());
    }

    #[test]
    fn units() {
        assert!(Laurent::monomial(-1, 3).inverse().is_some());
        assert!(Laurent::constant(2).inverse().is_none());
    }
}

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;


use super::{Ring, RingElem};
use crate::error::{Error, Result};

/// Element of ℤ[x, y], stored as (deg_x, deg_y) → coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

fn grlex_key(m: &(u32, u32)) -> (u32, u32) {
    (m.0 + m.1, m.0)
}

impl BiPoly {
    pub fn new() -> Self {
        BiPoly::default()
    }

    pub fn constant(c: i64) -> Self {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, dx: u32, dy: u32) -> Self {
        let mut p = BiPoly::new();
        p.add_term((dx, dy), c.into());
        p
    }

    pub fn x() -> Self {
        BiPoly::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        BiPoly::monomial(1, 0, 1)
    }

    pub fn add_term(&mut self, m: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> BigInt {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0 + m.1).max()
    }

    fn leading(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.iter().max_by_key(|(m, _)| grlex_key(m)).map(|(m, c)| (*m, c))
    }

    /// Swap the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|((a, b), c)| ((*b, *a), c.clone())).collect() }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &BiPoly) -> Option<BiPoly> {
        let (lm, lc) = d.leading()?;
        let lc = lc.clone();
        let mut rem = self.clone();
        let mut q = BiPoly::new();
        while let Some((m, c)) = rem.leading() {
            if m.0 < lm.0 || m.1 < lm.1 {
                return None;
            }
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let qm = (m.0 - lm.0, m.1 - lm.1);
            let t = BiPoly::monomial(qc.clone(), qm.0, qm.1);
            rem = rem.minus(&t.times(d));
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Image under `x ↦ a, y ↦ b`.
    pub fn eval<R: Ring>(&self, a: &R, b: &R) -> R {
        let mut acc = R::zero();
        for ((i, j), c) in &self.terms {
            let ci = R::from_bigint(c);
            acc = acc.plus(&ci.times(&a.pow(*i)).times(&b.pow(*j)));
        }
        acc
    }

    /// Evaluation at tagged scalars; inputs from different rings are
    /// rejected.
    pub fn eval_elem(&self, a: &RingElem, b: &RingElem) -> Result<RingElem> {
        match (a, b) {
            (RingElem::Int(a), RingElem::Int(b)) => Ok(RingElem::Int(self.eval_big(a, b))),
            (RingElem::Rat(a), RingElem::Rat(b)) => Ok(RingElem::Rat(self.eval(a, b))),
            (RingElem::Quad(a), RingElem::Quad(b)) => Ok(RingElem::Quad(self.eval(a, b))),
            _ => Err(Error::Mismatch(format!(
                "cannot evaluate at elements of different rings ({}, {})",
                a.tag(),
                b.tag()
            ))),
        }
    }

    // big coefficients are fine over ℤ
    fn eval_big(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for ((i, j), c) in &self.terms {
            acc += c * Ring::pow(a, *i) * Ring::pow(b, *j);
        }
        acc
    }

    /// Image under `x ↦ p, y ↦ q`.
    pub fn substitute(&self, p: &BiPoly, q: &BiPoly) -> BiPoly {
        let mut acc = BiPoly::new();
        for ((i, j), c) in &self.terms {
            let t = p.pow(*i).times(&q.pow(*j)).scale(c);
            acc = acc.plus(&t);
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> BiPoly {
        let mut out = BiPoly::new();
        for (m, a) in &self.terms {
            out.add_term(*m, a * c);
        }
        out
    }
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::new()
    }
    fn one() -> Self {
        BiPoly::constant(1)
    }
    fn from_i64(n: i64) -> Self {
        BiPoly::constant(n)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = BiPoly::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term((m1.0 + m2.0, m1.1 + m2.1), c1 * c2);
            }
        }
        out
    }
    fn negate(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next()?;
            if *m == (0, 0) && (c.is_one() || (-c).is_one()) {
                return Some(self.clone());
            }
        }
        None
    }
}

fn mono_str(m: (u32, u32)) -> String {
    let part = |v: &str, d: u32| match d {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{d}")),
    };
    [part("x", m.0), part("y", m.1)].into_iter().flatten().collect::<Vec<_>>().join("*")
}

impl fmt::Display for BiPoly {
    /// Graded-lexicographic, highest term first: `x*y - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ms: Vec<_> = self.terms.iter().collect();
        ms.sort_by_key(|(m, _)| std::cmp::Reverse(grlex_key(m)));
        let mut s = String::new();
        for (i, (m, c)) in ms.into_iter().enumerate() {
            super::fmt_coeff_term(&mut s, i == 0, c, &mono_str(*m));
        }
        f.write_str(&s)
    }
}

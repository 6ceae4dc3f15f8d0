use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::{Fp, Rational, Ring};

/// Exponent vector with trailing zeros trimmed, so polynomials in different
/// numbers of variables compare and combine without bookkeeping.
pub type Mono = Vec<u32>;

fn trim(mut m: Mono) -> Mono {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn exp(m: &Mono, i: usize) -> u32 {
    m.get(i).copied().unwrap_or(0)
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| exp(a, i) + exp(b, i)).collect())
}

fn mono_div(a: &Mono, b: &Mono) -> Option<Mono> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = Vec::with_capacity(a.len());
    for i in 0..a.len() {
        out.push(exp(a, i).checked_sub(exp(b, i))?);
    }
    Some(trim(out))
}

fn deg(m: &Mono) -> u32 {
    m.iter().sum()
}

/// Graded lexicographic comparison (variable 0 largest).
pub fn grlex_cmp(a: &Mono, b: &Mono) -> Ordering {
    deg(a).cmp(&deg(b)).then_with(|| {
        let n = a.len().max(b.len());
        for i in 0..n {
            match exp(a, i).cmp(&exp(b, i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

/// Sparse polynomial over ℚ in variables `x_0, x_1, …`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Mono, Rational>,
}

impl MultiPoly {
    pub fn new() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::new();
        p.add_term(Vec::new(), c);
        p
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        MultiPoly::monomial(m, Rational::one())
    }

    pub fn monomial(m: Mono, c: Rational) -> Self {
        let mut p = MultiPoly::new();
        p.add_term(trim(m), c);
        p
    }

    pub fn add_term(&mut self, m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        let m = trim(m);
        let e = self.terms.entry(m.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    pub fn nvars(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(deg).max()
    }

    /// Degree if every term has the same total degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(deg);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_empty())
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&Mono, &Rational)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::new();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    fn mul_mono(&self, m: &Mono, c: &Rational) -> Self {
        let mut out = MultiPoly::new();
        for (a, x) in &self.terms {
            out.terms.insert(mono_mul(a, m), x * c);
        }
        out
    }

    /// Exact quotient, `None` if the division leaves a remainder.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = d.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut q = MultiPoly::new();
        while let Some((m, c)) = rem.leading() {
            let qm = mono_div(m, &lm)?;
            let qc = c / &lc;
            rem = rem.minus(&d.mul_mono(&qm, &qc));
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Substitute `x_i ↦ p_i` for the supplied indices (others unchanged).
    pub fn substitute(&self, subs: &[(usize, MultiPoly)]) -> MultiPoly {
        let mut acc = MultiPoly::new();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = match subs.iter().find(|(j, _)| *j == i) {
                    Some((_, p)) => p.clone(),
                    None => MultiPoly::var(i),
                };
                t = t.times(&base.pow(e));
            }
            acc = acc.plus(&t);
        }
        acc
    }

    pub fn eval_rat(&self, pt: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                t *= Ring::pow(&pt[i], e);
            }
            acc += t;
        }
        acc
    }

    /// Reduction mod p followed by evaluation; `None` if a coefficient
    /// denominator vanishes mod p.
    pub fn eval_fp(&self, pt: &[Fp]) -> Option<Fp> {
        let mut acc = Fp::zero();
        for (m, c) in &self.terms {
            let mut t = rat_to_fp(c)?;
            for (i, &e) in m.iter().enumerate() {
                t = t.times(&pt[i].pow(e));
            }
            acc = acc.plus(&t);
        }
        Some(acc)
    }

    /// Coefficients with respect to `x_k`: degree → coefficient polynomial
    /// (with `x_k` removed).
    fn coeffs_in(&self, k: usize) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = exp(m, k);
            let mut rest = m.clone();
            if k < rest.len() {
                rest[k] = 0;
            }
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }

    fn deg_in(&self, k: usize) -> Option<u32> {
        self.terms.keys().map(|m| exp(m, k)).max()
    }

    fn lc_in(&self, k: usize) -> (u32, MultiPoly) {
        let d = self.deg_in(k).unwrap_or(0);
        let mut lc = MultiPoly::new();
        for (m, c) in &self.terms {
            if exp(m, k) == d {
                let mut rest = m.clone();
                if k < rest.len() {
                    rest[k] = 0;
                }
                lc.add_term(rest, c.clone());
            }
        }
        (d, lc)
    }

    fn x_pow(k: usize, e: u32) -> Mono {
        let mut m = vec![0; k + 1];
        m[k] = e;
        trim(m)
    }

    /// Greatest common divisor, normalized to be monic (zero iff both inputs
    /// are zero).
    pub fn gcd(&self, o: &MultiPoly) -> MultiPoly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        let n = self.nvars().max(o.nvars());
        gcd_rec(self, o, 0, n).monic()
    }
}

fn rat_to_fp(c: &Rational) -> Option<Fp> {
    let n = Fp::from_bigint(c.numer());
    let d = Fp::from_bigint(c.denom());
    Some(n.times(&d.inverse()?))
}

fn content(a: &MultiPoly, k: usize, n: usize) -> MultiPoly {
    let mut g = MultiPoly::new();
    for (_, c) in a.coeffs_in(k) {
        g = if g.is_zero() { c.monic() } else { gcd_rec(&g, &c, k + 1, n).monic() };
        if g.is_constant() {
            return MultiPoly::one();
        }
    }
    g
}

fn primitive_part(a: &MultiPoly, k: usize, n: usize) -> MultiPoly {
    let c = content(a, k, n);
    a.div_exact(&c).expect("content divides").monic()
}

fn prem(a: &MultiPoly, b: &MultiPoly, k: usize) -> MultiPoly {
    let (db, lb) = b.lc_in(k);
    let mut r = a.clone();
    while !r.is_zero() {
        let (dr, lr) = r.lc_in(k);
        if dr < db {
            break;
        }
        let shift = MultiPoly::monomial(MultiPoly::x_pow(k, dr - db), Rational::one());
        r = lb.times(&r).minus(&lr.times(&shift).times(b));
    }
    r
}

/// gcd of polynomials involving only variables `k..n`.
fn gcd_rec(a: &MultiPoly, b: &MultiPoly, k: usize, n: usize) -> MultiPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if k >= n || a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let ca = content(a, k, n);
    let cb = content(b, k, n);
    let c = gcd_rec(&ca, &cb, k + 1, n);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.deg_in(k) < q.deg_in(k) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = prem(&p, &q, k);
        p = q;
        q = if r.is_zero() { r } else { primitive_part(&r, k, n) };
    }
    c.times(&primitive_part(&p, k, n))
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::new()
    }
    fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }
    fn from_i64(n: i64) -> Self {
        MultiPoly::constant(BigRational::from_integer(n.into()))
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn times(&self, o: &Self) -> Self {
        let mut out = MultiPoly::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(mono_mul(m1, m2), c1 * c2);
            }
        }
        out
    }
    fn negate(&self) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_constant() && !self.is_zero() {
            Some(MultiPoly::constant(self.constant_term().recip()))
        } else {
            None
        }
    }
}

impl MultiPoly {
    /// Render with the given variable names, highest grlex term first.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut ms: Vec<_> = self.terms.iter().collect();
        ms.sort_by(|a, b| grlex_cmp(b.0, a.0));
        let mut s = String::new();
        for (i, (m, c)) in ms.into_iter().enumerate() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(j, &e)| {
                    let name = names.get(j).map(|s| s.to_string()).unwrap_or(format!("x{j}"));
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            let mono = mono.join("*");
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else if a.is_integer() {
                s.push_str(&format!("{a}*{mono}"));
            } else {
                s.push_str(&format!("({a})*{mono}"));
            }
        }
        s
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

impl From<BigInt> for MultiPoly {
    fn from(n: BigInt) -> Self {
        MultiPoly::constant(BigRational::from_integer(n))
    }
}

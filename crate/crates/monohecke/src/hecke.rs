//! The monodromic Hecke algebroid over ℤ[v, v⁻¹].
//!
//! A morphism `𝓛 → 𝓛′` is a ℤ[v,v⁻¹]-combination of basis elements `H_w^𝓛`
//! with `𝓛w = 𝓛′`. Composition is built from right multiplication by the
//! generators `H_s`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::coxeter::{CoxeterSystem, Elem};
use crate::error::{Error, Result};
use crate::ring::{Laurent, Ring};
use crate::wset::{Point, WSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeMor {
    pub source: Point,
    pub target: Point,
    pub terms: BTreeMap<Elem, Laurent>,
}

impl HeckeMor {
    pub fn zero(source: Point, target: Point) -> Self {
        HeckeMor { source, target, terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, x: Elem) -> Laurent {
        self.terms.get(&x).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, x: Elem, c: &Laurent) {
        let e = self.terms.entry(x).or_default();
        *e = e.plus(c);
        if e.is_zero() {
            self.terms.remove(&x);
        }
    }

    pub fn add(&self, o: &HeckeMor) -> Result<HeckeMor> {
        self.same_hom(o)?;
        let mut out = self.clone();
        for (&x, c) in &o.terms {
            out.add_term(x, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Laurent) -> HeckeMor {
        let mut out = HeckeMor::zero(self.source, self.target);
        if c.is_zero() {
            return out;
        }
        for (&x, a) in &self.terms {
            out.terms.insert(x, a.times(c));
        }
        out
    }

    fn same_hom(&self, o: &HeckeMor) -> Result<()> {
        if (self.source, self.target) != (o.source, o.target) {
            return Err(Error::Mismatch(format!(
                "morphisms live in different Hom spaces: {}→{} vs {}→{}",
                self.source, self.target, o.source, o.target
            )));
        }
        Ok(())
    }
}

/// `H(W, 𝔬)`: a Coxeter system with a right W-set.
pub struct Algebroid<'a> {
    pub w: &'a CoxeterSystem,
    pub o: &'a WSet,
}

impl<'a> Algebroid<'a> {
    pub fn new(w: &'a CoxeterSystem, o: &'a WSet) -> Self {
        Algebroid { w, o }
    }

    fn check_point(&self, p: Point) -> Result<()> {
        if p >= self.o.len() {
            return Err(Error::Invalid(format!("point {p} not in W-set of size {}", self.o.len())));
        }
        Ok(())
    }

    /// `H_x^𝓛 : 𝓛 → 𝓛x`.
    pub fn basis(&self, p: Point, x: Elem) -> HeckeMor {
        let mut out = HeckeMor::zero(p, self.o.act_elem(self.w, p, x));
        out.terms.insert(x, Laurent::constant(1));
        out
    }

    pub fn identity(&self, p: Point) -> HeckeMor {
        self.basis(p, self.w.identity())
    }

    pub fn gen(&self, p: Point, s: usize) -> HeckeMor {
        self.basis(p, self.w.gen(s))
    }

    /// `H̲_s^𝓛 = H_s + vH_e` if `𝓛s = 𝓛`, else `H_s`.
    pub fn underline(&self, p: Point, s: usize) -> HeckeMor {
        let mut out = self.gen(p, s);
        if self.o.act(p, s) == p {
            out.terms.insert(self.w.identity(), Laurent::v());
        }
        out
    }

    /// `a · H_s^{𝓛′}` where `𝓛′` is the target of `a`.
    pub fn mul_gen(&self, a: &HeckeMor, s: usize) -> HeckeMor {
        let fixed = self.o.act(a.target, s) == a.target;
        let mut out = HeckeMor::zero(a.source, self.o.act(a.target, s));
        let quad = Laurent::v_inv().minus(&Laurent::v());
        for (&x, c) in &a.terms {
            let xs = self.w.rmul(x, s);
            out.add_term(xs, c);
            if self.w.length(xs) < self.w.length(x) && fixed {
                out.add_term(x, &c.times(&quad));
            }
        }
        out
    }

    /// Composition `a ∘ b` read left to right: `a : 𝓛 → 𝓛′`, `b : 𝓛′ → 𝓛″`.
    pub fn mul(&self, a: &HeckeMor, b: &HeckeMor) -> Result<HeckeMor> {
        if a.target != b.source {
            return Err(Error::Mismatch(format!(
                "cannot compose {}→{} with {}→{}",
                a.source, a.target, b.source, b.target
            )));
        }
        let mut out = HeckeMor::zero(a.source, b.target);
        for (&y, c) in &b.terms {
            let mut acc = a.clone();
            for &s in self.w.word(y) {
                acc = self.mul_gen(&acc, s);
            }
            for (&x, d) in &acc.terms {
                out.add_term(x, &d.times(c));
            }
        }
        Ok(out)
    }

    /// `H̲_{w̲}^𝓛 = H̲_{s₁}^𝓛 H̲_{s₂}^{𝓛s₁} ⋯`.
    pub fn product_expr(&self, expr: &[usize], p: Point) -> HeckeMor {
        let mut acc = self.identity(p);
        for &s in expr {
            let fixed = self.o.act(acc.target, s) == acc.target;
            let mut next = self.mul_gen(&acc, s);
            if fixed {
                next = next.add(&acc.scale(&Laurent::v())).expect("same Hom space");
            }
            acc = next;
        }
        acc
    }

    /// `p_{w̲}^{x,𝓛}` for every `x` in the support.
    pub fn p_coeffs(&self, expr: &[usize], p: Point) -> BTreeMap<Elem, Laurent> {
        self.product_expr(expr, p).terms
    }

    /// Standard form `⟨H_x, H_y⟩ = δ_{x,y}`, extended bilinearly.
    pub fn pairing(&self, a: &HeckeMor, b: &HeckeMor) -> Result<Laurent> {
        a.same_hom(b)?;
        let mut out = Laurent::zero();
        for (x, c) in &a.terms {
            if let Some(d) = b.terms.get(x) {
                out = out.plus(&c.times(d));
            }
        }
        Ok(out)
    }

    /// `bar(a · H_s) = bar(a) · bar(H_s)`.
    fn bar_mul_gen(&self, a: &HeckeMor, s: usize) -> HeckeMor {
        let fixed = self.o.act(a.target, s) == a.target;
        let mut out = self.mul_gen(a, s);
        if fixed {
            let shift = Laurent::v().minus(&Laurent::v_inv());
            for (&x, c) in &a.terms {
                out.add_term(x, &c.times(&shift));
            }
        }
        out
    }

    /// `bar(H_x^𝓛)`, via the ShortLex reduced word of `x`.
    pub fn bar_basis(&self, p: Point, x: Elem) -> HeckeMor {
        self.bar_basis_along(p, self.w.word(x))
    }

    /// `bar(H_x^𝓛)` computed along a given reduced word of `x`.
    pub fn bar_basis_along(&self, p: Point, word: &[usize]) -> HeckeMor {
        word.iter().fold(self.identity(p), |acc, &s| self.bar_mul_gen(&acc, s))
    }

    pub fn bar(&self, a: &HeckeMor) -> HeckeMor {
        let mut out = HeckeMor::zero(a.source, a.target);
        for (&x, c) in &a.terms {
            let b = self.bar_basis(a.source, x);
            let cb = c.bar();
            for (&y, d) in &b.terms {
                out.add_term(y, &d.times(&cb));
            }
        }
        out
    }

    /// The functor `H_w^𝓛 ↦ v^{−ℓ_𝓛(w)}` to ℤ[v,v⁻¹].
    pub fn degree_functor(&self, a: &HeckeMor) -> Laurent {
        let mut out = Laurent::zero();
        for (&x, c) in &a.terms {
            let l = self.o.mono_length_elem(self.w, a.source, x) as i32;
            out = out.plus(&c.shift(-l));
        }
        out
    }

    /// Specialization `v ↦ 1`, `H_w ↦ w` into the groupoid algebra.
    pub fn specialize_v1(&self, a: &HeckeMor) -> BTreeMap<Elem, BigInt> {
        a.terms
            .iter()
            .map(|(&x, c)| (x, c.eval_one()))
            .filter(|(_, c)| *c != BigInt::from(0))
            .collect()
    }

    /// Product in `ℤ[M^𝔬(W)]`: `(Σ a_x x)(Σ b_y y) = Σ a_x b_y xy`.
    pub fn groupoid_mul(&self, a: &BTreeMap<Elem, BigInt>, b: &BTreeMap<Elem, BigInt>) -> BTreeMap<Elem, BigInt> {
        let mut out: BTreeMap<Elem, BigInt> = BTreeMap::new();
        for (&x, c) in a {
            for (&y, d) in b {
                *out.entry(self.w.mul(x, y)).or_default() += c * d;
            }
        }
        out.retain(|_, c| *c != BigInt::from(0));
        out
    }

    pub fn to_json(&self, a: &HeckeMor) -> Value {
        let terms: Vec<Value> = a
            .terms
            .iter()
            .map(|(&x, c)| json!({"w": self.w.word_str(self.w.word(x)), "coeff": c.to_string()}))
            .collect();
        json!({"L": a.source, "Lp": a.target, "terms": terms})
    }

    pub fn from_json(&self, v: &Value) -> Result<HeckeMor> {
        let point = |k: &str| -> Result<Point> {
            v.get(k)
                .and_then(Value::as_u64)
                .map(|p| p as Point)
                .ok_or_else(|| Error::Parse(format!("morphism JSON lacks integer {k:?}")))
        };
        let source = point("L")?;
        self.check_point(source)?;
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing terms".into()))?;
        let mut out: Option<HeckeMor> = None;
        for t in terms {
            let word = t.get("w").and_then(Value::as_str).ok_or_else(|| Error::Parse("term lacks w".into()))?;
            let coeff = match t.get("coeff") {
                Some(Value::String(s)) => Laurent::parse(s)?,
                Some(Value::Number(n)) => Laurent::parse(&n.to_string())?,
                _ => return Err(Error::Parse("term lacks coeff".into())),
            };
            let x = self.w.eval(&self.w.parse_word(word)?);
            let b = self.basis(source, x).scale(&coeff);
            out = Some(match out {
                None => b,
                Some(acc) => acc.add(&b)?,
            });
        }
        let target = match v.get("Lp").and_then(Value::as_u64) {
            Some(p) => p as Point,
            None => out.as_ref().map(|m| m.target).unwrap_or(source),
        };
        let out = out.unwrap_or_else(|| HeckeMor::zero(source, target));
        if out.target != target && !out.is_zero() {
            return Err(Error::Invalid(format!("terms do not map point {source} to {target}")));
        }
        Ok(HeckeMor { target, ..out })
    }
}

//! Monodromic subexpressions: decorations, defects, the two orders, and the
//! Hom-rank formulas built on them.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::coxeter::{CoxeterSystem, Elem};
use crate::ring::{Laurent, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    U,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Decoration {
    U0,
    U1,
    D0,
    D1,
}

impl Decoration {
    fn new(label: Label, bit: bool) -> Self {
        match (label, bit) {
            (Label::U, false) => Decoration::U0,
            (Label::U, true) => Decoration::U1,
            (Label::D, false) => Decoration::D0,
            (Label::D, true) => Decoration::D1,
        }
    }
}

/// A subexpression `e̲` of `w̲` together with its Bruhat stroll.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecoratedSubexpr {
    pub bits: Vec<bool>,
    pub labels: Vec<Label>,
    pub decorations: Vec<Decoration>,
    pub defect: i32,
    pub eval: Elem,
    /// `x_0 = e, x_1, …, x_k` with `x_i = x_{i−1} s_i^{e_i}`.
    pub stroll: Vec<Elem>,
}

impl DecoratedSubexpr {
    /// Decorate a given bit vector. Labels compare the stroll element
    /// `x_{i−1}` with `x_{i−1}s_i`.
    pub fn from_bits(w: &CoxeterSystem, expr: &[usize], bits: &[bool]) -> Self {
        assert_eq!(expr.len(), bits.len(), "bit vector must match the expression");
        let mut stroll = vec![w.identity()];
        let mut labels = Vec::with_capacity(expr.len());
        let mut decorations = Vec::with_capacity(expr.len());
        let mut defect = 0;
        let mut x = w.identity();
        for (&s, &b) in expr.iter().zip(bits) {
            let label = if w.is_right_descent(x, s) { Label::D } else { Label::U };
            let dec = Decoration::new(label, b);
            defect += match dec {
                Decoration::U0 => 1,
                Decoration::D0 => -1,
                _ => 0,
            };
            if b {
                x = w.rmul(x, s);
            }
            labels.push(label);
            decorations.push(dec);
            stroll.push(x);
        }
        DecoratedSubexpr { bits: bits.to_vec(), labels, decorations, defect, eval: x, stroll }
    }

    /// `#{e_i = 1} + ℓ_𝓛(w̲) − ℓ(w̲)` where `ℓ_𝓛(w̲) = #K` and `ℓ(w̲)` is
    /// the number of letters.
    pub fn relative_length(&self, kset_len: usize) -> i64 {
        self.bits.iter().filter(|&&b| b).count() as i64 + kset_len as i64 - self.bits.len() as i64
    }

    pub fn bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

/// All subexpressions with `e_i = 1` off `kset` (0-based positions), in
/// lexicographic order of the free bits (1 before 0).
pub fn mono_subexprs(w: &CoxeterSystem, expr: &[usize], kset: &[usize]) -> Vec<DecoratedSubexpr> {
    let free: Vec<usize> = kset.to_vec();
    let n = free.len();
    assert!(n < 40, "too many free positions");
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0..(1u64 << n) {
        let mut bits = vec![true; expr.len()];
        for (j, &i) in free.iter().enumerate() {
            // most significant free position first, 1 before 0
            bits[i] = (mask >> (n - 1 - j)) & 1 == 0;
        }
        out.push(DecoratedSubexpr::from_bits(w, expr, &bits));
    }
    out
}

/// `Σ_e v^{d(w̲,e̲)}` grouped by evaluation: the p-polynomials.
pub fn defect_polys(w: &CoxeterSystem, expr: &[usize], kset: &[usize]) -> BTreeMap<Elem, Laurent> {
    let mut out: BTreeMap<Elem, Laurent> = BTreeMap::new();
    let mut stack = vec![(0usize, w.identity(), 0i32)];
    let mut is_free = vec![false; expr.len()];
    for &k in kset {
        is_free[k] = true;
    }
    while let Some((i, x, d)) = stack.pop() {
        if i == expr.len() {
            out.entry(x).or_default().add_term(d, BigInt::from(1));
            continue;
        }
        let s = expr[i];
        stack.push((i + 1, w.rmul(x, s), d));
        if is_free[i] {
            let delta = if w.is_right_descent(x, s) { -1 } else { 1 };
            stack.push((i + 1, x, d + delta));
        }
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// Label-lexicographic comparison: `f < e` iff at the first index where
/// the labels differ, `e` has `D` and `f` has `U`.
pub fn label_lex_cmp(e: &DecoratedSubexpr, f: &DecoratedSubexpr) -> Ordering {
    for (le, lf) in e.labels.iter().zip(&f.labels) {
        match (le, lf) {
            (Label::D, Label::U) => return Ordering::Greater,
            (Label::U, Label::D) => return Ordering::Less,
            _ => {}
        }
    }
    Ordering::Equal
}

/// Path dominance `e ≼ f`: `x_i ≤ y_i` in Bruhat order along the strolls.
pub fn path_dominated(w: &CoxeterSystem, e: &DecoratedSubexpr, f: &DecoratedSubexpr) -> bool {
    e.stroll.iter().zip(&f.stroll).all(|(&x, &y)| w.bruhat_leq(x, y))
}

/// Graded rank of `Hom(B_x̲, B_y̲)`: `Σ v^{d(x̲,e̲)+d(y̲,f̲)}` over pairs with
/// equal evaluation.
pub fn graded_hom_rank(w: &CoxeterSystem, x: &[usize], kx: &[usize], y: &[usize], ky: &[usize]) -> Laurent {
    let px = defect_polys(w, x, kx);
    let py = defect_polys(w, y, ky);
    let mut out = Laurent::zero();
    for (z, a) in &px {
        if let Some(b) = py.get(z) {
            out = out.plus(&a.times(b));
        }
    }
    out
}

/// `C(r+j−1, j)`: the rank of the degree-`2j` part of a polynomial ring in
/// `r` generators of degree 2.
pub fn monomial_count(r: u64, j: u64) -> BigInt {
    if j == 0 {
        return BigInt::from(1);
    }
    if r == 0 {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..j {
        acc = acc * BigInt::from(r + i) / BigInt::from(i + 1);
    }
    acc
}

/// Degree-0 rank of a graded free module with graded rank `p` over a
/// polynomial ring in `r` degree-2 generators.
pub fn degree0_rank(p: &Laurent, r: u64) -> BigInt {
    let mut out = BigInt::from(0);
    for (d, c) in p.terms() {
        if d <= 0 && d % 2 == 0 {
            out += c * monomial_count(r, (-d / 2) as u64);
        }
    }
    out
}

pub fn hom0_rank(w: &CoxeterSystem, x: &[usize], kx: &[usize], y: &[usize], ky: &[usize], r: u64) -> BigInt {
    degree0_rank(&graded_hom_rank(w, x, kx, y, ky), r)
}

/// Defect histogram `{d: #pairs}` of a graded rank, restricted to `d ≤ 0`.
pub fn nonpositive_histogram(p: &Laurent) -> BTreeMap<i32, BigInt> {
    p.terms().filter(|(d, _)| *d <= 0).map(|(d, c)| (d, c.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_square() {
        let w = CoxeterSystem::preset("A1").unwrap();
        let subs = mono_subexprs(&w, &[0, 0], &[0, 1]);
        let got: BTreeMap<String, i32> = subs.iter().map(|e| (e.bit_string(), e.defect)).collect();
        let want: BTreeMap<String, i32> =
            [("11", 0), ("10", -1), ("01", 1), ("00", 2)].iter().map(|(k, v)| (k.to_string(), *v)).collect();
        assert_eq!(got, want);
        let e01 = subs.iter().find(|e| e.bit_string() == "01").unwrap();
        let e10 = subs.iter().find(|e| e.bit_string() == "10").unwrap();
        assert_eq!(label_lex_cmp(e01, e10), Ordering::Less);
    }

    #[test]
    fn a2_partial_kset() {
        let w = CoxeterSystem::preset("A2").unwrap();
        let subs = mono_subexprs(&w, &[0, 1], &[0]);
        let got: Vec<(String, i32)> = subs.iter().map(|e| (e.bit_string(), e.defect)).collect();
        assert_eq!(got, vec![("11".to_string(), 0), ("01".to_string(), 1)]);
    }

    #[test]
    fn end_bs() {
        let w = CoxeterSystem::preset("A1").unwrap();
        let g = graded_hom_rank(&w, &[0], &[0], &[0], &[0]);
        assert_eq!(g.to_string(), "v^2 + 1");
        assert_eq!(degree0_rank(&g, 7), BigInt::from(1));
        assert_eq!(graded_hom_rank(&w, &[], &[], &[], &[]), Laurent::constant(1));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_count(3, 2), BigInt::from(6));
        assert_eq!(monomial_count(3, 4), BigInt::from(15));
        assert_eq!(monomial_count(1, 9), BigInt::from(1));
    }
}

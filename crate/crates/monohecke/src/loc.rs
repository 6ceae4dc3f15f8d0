//! One-color localization calculus.
//!
//! A Bott–Samelson object `B_{s…s}` for a single color is either *neutral*
//! (`𝓛s = 𝓛`, every letter splits as `Q_e ⊕ Q_s`) or *non-neutral*
//! (`𝓛s ≠ 𝓛`, every letter is `Q_s`). Morphisms are matrices of
//! localization coefficients in `ℚ(α, δ)`, rows indexed by target
//! subexpressions and columns by source subexpressions.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coxeter::CoxeterSystem;
use crate::error::{Error, Result};
use crate::leaves::{path_dominated, Decoration, DecoratedSubexpr};
use crate::ring::{linalg, Fp, MultiPoly, RatFunc, Ring};

/// `α`.
pub fn alpha() -> RatFunc {
    RatFunc::var(0)
}

/// `δ`, with `⟨α∨, δ⟩ = 1`.
pub fn delta() -> RatFunc {
    RatFunc::var(1)
}

/// `s(α) = −α`, `s(δ) = δ − α`.
pub fn reflect(f: &RatFunc) -> RatFunc {
    let a = MultiPoly::var(0);
    let d = MultiPoly::var(1);
    f.substitute(&[(0, a.negate()), (1, d.minus(&a))]).expect("s is an automorphism")
}

/// Demazure operator `∂(f) = (f − s(f))/α`.
pub fn demazure(f: &RatFunc) -> RatFunc {
    f.minus(&reflect(f)).div(&alpha()).expect("α is nonzero")
}

pub fn render(f: &RatFunc) -> String {
    f.display_with(&["a", "d"])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BSObject {
    pub len: usize,
    pub neutral: bool,
}

impl BSObject {
    pub fn new(len: usize, neutral: bool) -> Self {
        // the empty object carries no monodromy information
        BSObject { len, neutral: neutral || len == 0 }
    }

    pub fn empty() -> Self {
        BSObject::new(0, true)
    }

    /// Monodromic subexpressions, lexicographic with `0 < 1`.
    pub fn components(&self) -> Vec<Vec<bool>> {
        if !self.neutral {
            return vec![vec![true; self.len]];
        }
        (0..1u64 << self.len)
            .map(|m| (0..self.len).map(|i| (m >> (self.len - 1 - i)) & 1 == 1).collect())
            .collect()
    }

    /// `ℓ_𝓛` of the expression: the number of neutral letters.
    pub fn mono_length(&self) -> i64 {
        if self.neutral {
            self.len as i64
        } else {
            0
        }
    }

    pub fn concat(&self, o: &BSObject) -> Result<BSObject> {
        if self.len > 0 && o.len > 0 && self.neutral != o.neutral {
            return Err(Error::Mismatch("cannot concatenate neutral and non-neutral strands".into()));
        }
        Ok(BSObject::new(self.len + o.len, self.neutral && o.neutral))
    }
}

fn odd(bits: &[bool]) -> bool {
    bits.iter().filter(|&&b| b).count() % 2 == 1
}

fn bit_label(bits: &[bool]) -> String {
    if bits.is_empty() {
        "∅".into()
    } else {
        bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LocMor {
    pub source: BSObject,
    pub target: BSObject,
    pub degree: i64,
    /// `entries[f][e] = c_e^f`.
    pub entries: Vec<Vec<RatFunc>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GenKind {
    Id,
    /// `ε`: one strand to nothing.
    UpperDot,
    /// `η`: nothing to one strand.
    LowerDot,
    /// `μ`: two strands to one.
    Merge,
    /// `ν`: one strand to two.
    Split,
    Cap,
    Cup,
    /// Multiplication by a polynomial on the empty object; degree is twice
    /// the polynomial degree.
    Poly(RatFunc),
}

impl GenKind {
    pub fn parse(s: &str) -> Result<GenKind> {
        Ok(match s {
            "id" => GenKind::Id,
            "epsilon" | "eps" | "upper-dot" => GenKind::UpperDot,
            "eta" | "lower-dot" => GenKind::LowerDot,
            "mu" | "merge" => GenKind::Merge,
            "nu" | "split" => GenKind::Split,
            "cap" => GenKind::Cap,
            "cup" => GenKind::Cup,
            _ => return Err(Error::Parse(format!("unknown generator {s:?}"))),
        })
    }
}

fn rf(n: i64) -> RatFunc {
    RatFunc::from_i64(n)
}

fn inv_alpha() -> RatFunc {
    alpha().inverse().expect("α is nonzero")
}

/// The localization matrix of a one-color generator.
pub fn gen_matrix(kind: &GenKind, neutral: bool) -> Result<LocMor> {
    let z = RatFunc::zero;
    let obj = |n| BSObject::new(n, neutral);
    let m = |source, target, degree, entries: Vec<Vec<RatFunc>>| LocMor { source, target, degree, entries };
    if !neutral && !matches!(kind, GenKind::Id | GenKind::Cap | GenKind::Cup | GenKind::Poly(_)) {
        return Err(Error::Invalid(format!("{kind:?} does not exist on a non-neutral strand")));
    }
    Ok(match (kind, neutral) {
        (GenKind::Id, _) => LocMor::identity(obj(1)),
        (GenKind::Poly(f), _) => {
            let deg = f
                .homogeneous_degree()
                .ok_or_else(|| Error::Invalid("polynomial must be homogeneous".into()))?;
            m(BSObject::empty(), BSObject::empty(), 2 * deg, vec![vec![f.clone()]])
        }
        (GenKind::UpperDot, _) => m(obj(1), obj(0), 1, vec![vec![alpha(), z()]]),
        (GenKind::LowerDot, _) => m(obj(0), obj(1), 1, vec![vec![rf(1)], vec![z()]]),
        (GenKind::Merge, _) => m(
            obj(2),
            obj(1),
            -1,
            vec![vec![rf(1), z(), z(), rf(1)], vec![z(), rf(1), rf(1), z()]],
        ),
        (GenKind::Split, _) => {
            let (p, n) = (inv_alpha(), inv_alpha().negate());
            m(
                obj(1),
                obj(2),
                -1,
                vec![vec![p.clone(), z()], vec![z(), p], vec![z(), n.clone()], vec![n, z()]],
            )
        }
        (GenKind::Cap, true) => m(obj(2), obj(0), 0, vec![vec![alpha(), z(), z(), alpha()]]),
        (GenKind::Cup, true) => {
            m(obj(0), obj(2), 0, vec![vec![inv_alpha()], vec![z()], vec![z()], vec![inv_alpha().negate()]])
        }
        (GenKind::Cap, false) => m(obj(2), obj(0), 0, vec![vec![rf(1)]]),
        (GenKind::Cup, false) => m(obj(0), obj(2), 0, vec![vec![rf(1)]]),
    })
}

pub fn poly(f: RatFunc) -> LocMor {
    gen_matrix(&GenKind::Poly(f), true).expect("polynomial generator")
}

impl LocMor {
    pub fn identity(obj: BSObject) -> LocMor {
        let n = obj.components().len();
        let entries = (0..n).map(|i| (0..n).map(|j| rf((i == j) as i64)).collect()).collect();
        LocMor { source: obj, target: obj, degree: 0, entries }
    }

    pub fn zero(source: BSObject, target: BSObject, degree: i64) -> LocMor {
        let entries = vec![vec![RatFunc::zero(); source.components().len()]; target.components().len()];
        LocMor { source, target, degree, entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|c| c.is_zero())
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &LocMor) -> Result<LocMor> {
        if self.source != f.target {
            return Err(Error::Mismatch(format!(
                "cannot compose: source {:?} vs target {:?}",
                self.source, f.target
            )));
        }
        let rows = self.entries.len();
        let cols = f.entries.first().map_or(f.source.components().len(), |r| r.len());
        let mid = f.entries.len();
        let mut entries = vec![vec![RatFunc::zero(); cols]; rows];
        for i in 0..rows {
            for k in 0..mid {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..cols {
                    let b = &f.entries[k][j];
                    if !b.is_zero() {
                        entries[i][j] = entries[i][j].plus(&a.times(b));
                    }
                }
            }
        }
        Ok(LocMor { source: f.source, target: self.target, degree: self.degree + f.degree, entries })
    }

    /// Horizontal composition, `self` on the left. The right factor's
    /// coefficients are twisted by the evaluation of the left factor's
    /// target subexpression.
    pub fn tensor(&self, g: &LocMor) -> Result<LocMor> {
        let source = self.source.concat(&g.source)?;
        let target = self.target.concat(&g.target)?;
        let (sc1, tc1) = (self.source.components(), self.target.components());
        let (sc2, tc2) = (g.source.components(), g.target.components());
        let twisted: Vec<Vec<RatFunc>> = g.entries.iter().map(|r| r.iter().map(reflect).collect()).collect();
        let mut entries = vec![vec![RatFunc::zero(); sc1.len() * sc2.len()]; tc1.len() * tc2.len()];
        for (f1, tb) in tc1.iter().enumerate() {
            let tw = if odd(tb) { &twisted } else { &g.entries };
            for e1 in 0..sc1.len() {
                let c1 = &self.entries[f1][e1];
                if c1.is_zero() {
                    continue;
                }
                for f2 in 0..tc2.len() {
                    for e2 in 0..sc2.len() {
                        let c2 = &tw[f2][e2];
                        if !c2.is_zero() {
                            entries[f1 * tc2.len() + f2][e1 * sc2.len() + e2] = c1.times(c2);
                        }
                    }
                }
            }
        }
        Ok(LocMor { source, target, degree: self.degree + g.degree, entries })
    }

    pub fn plus(&self, o: &LocMor) -> Result<LocMor> {
        if self.source != o.source || self.target != o.target {
            return Err(Error::Mismatch("cannot add morphisms with different boundaries".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.plus(y)).collect())
            .collect();
        Ok(LocMor { source: self.source, target: self.target, degree: self.degree, entries })
    }

    /// Every nonzero entry `(f, e)` joins components with equal evaluation
    /// and is homogeneous of degree `deg + ℓ_𝓛(source) − ℓ_𝓛(target)`
    /// (with `deg α = 2`).
    pub fn is_consistent(&self) -> bool {
        let want = self.degree + self.source.mono_length() - self.target.mono_length();
        let (sc, tc) = (self.source.components(), self.target.components());
        self.entries.iter().enumerate().all(|(f, row)| {
            row.iter().enumerate().all(|(e, c)| {
                c.is_zero() || (odd(&tc[f]) == odd(&sc[e]) && c.homogeneous_degree().map(|d| 2 * d) == Some(want))
            })
        })
    }

    pub fn entry(&self, f: &[bool], e: &[bool]) -> RatFunc {
        let fi = self.target.components().iter().position(|c| c == f);
        let ei = self.source.components().iter().position(|c| c == e);
        match (fi, ei) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => RatFunc::zero(),
        }
    }
}

impl fmt::Display for LocMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.source.components().iter().map(|c| bit_label(c)).collect();
        writeln!(f, "degree {}", self.degree)?;
        writeln!(f, "\t{}", cols.join("\t"))?;
        for (row, bits) in self.entries.iter().zip(self.target.components()) {
            let cells: Vec<String> = row.iter().map(render).collect();
            writeln!(f, "{}\t{}", bit_label(&bits), cells.join("\t"))?;
        }
        Ok(())
    }
}

fn g(kind: GenKind, neutral: bool) -> LocMor {
    gen_matrix(&kind, neutral).expect("generator exists")
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

/// Verify the one-color relations as exact matrix identities.
pub fn check_one_color_relations(neutral: bool) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    let mut push = |name: &str, r: Result<bool>| out.push(RelationCheck { name: name.into(), holds: r.unwrap_or(false) });
    let id1 = LocMor::identity(BSObject::new(1, neutral));
    let id0 = LocMor::identity(BSObject::empty());
    let polys = [alpha(), delta(), delta().times(&delta()), alpha().times(&delta()), delta().pow(3)];
    let (cap, cup) = (g(GenKind::Cap, neutral), g(GenKind::Cup, neutral));

    let mut gens = vec![id1.clone(), cap.clone(), cup.clone()];
    if neutral {
        let (eps, eta, mu, nu) =
            (g(GenKind::UpperDot, true), g(GenKind::LowerDot, true), g(GenKind::Merge, true), g(GenKind::Split, true));
        gens.extend([eps.clone(), eta.clone(), mu.clone(), nu.clone()]);
        push("unit: μ∘(η⊗id) = id", (|| Ok(mu.compose(&eta.tensor(&id1)?)? == id1))());
        push("unit: μ∘(id⊗η) = id", (|| Ok(mu.compose(&id1.tensor(&eta)?)? == id1))());
        push("counit: (ε⊗id)∘ν = id", (|| Ok(eps.tensor(&id1)?.compose(&nu)? == id1))());
        push("counit: (id⊗ε)∘ν = id", (|| Ok(id1.tensor(&eps)?.compose(&nu)? == id1))());
        push(
            "associativity: μ∘(μ⊗id) = μ∘(id⊗μ)",
            (|| Ok(mu.compose(&mu.tensor(&id1)?)? == mu.compose(&id1.tensor(&mu)?)?))(),
        );
        push(
            "coassociativity: (ν⊗id)∘ν = (id⊗ν)∘ν",
            (|| Ok(nu.tensor(&id1)?.compose(&nu)? == id1.tensor(&nu)?.compose(&nu)?))(),
        );
        push(
            "frobenius: (id⊗μ)∘(ν⊗id) = ν∘μ = (μ⊗id)∘(id⊗ν)",
            (|| {
                let mid = nu.compose(&mu)?;
                let l = id1.tensor(&mu)?.compose(&nu.tensor(&id1)?)?;
                let r = mu.tensor(&id1)?.compose(&id1.tensor(&nu)?)?;
                Ok(l == mid && r == mid)
            })(),
        );
        push("needle: μ∘ν = 0", (|| Ok(mu.compose(&nu)?.is_zero()))());
        push("barbell: ε∘η = α", (|| Ok(eps.compose(&eta)? == poly(alpha())))());
        push("cap = ε∘μ", (|| Ok(eps.compose(&mu)? == cap))());
        push("cup = ν∘η", (|| Ok(nu.compose(&eta)? == cup))());
        push(
            "polynomial forcing: f⊗id = id⊗s(f) + ∂(f)⊗(η∘ε)",
            (|| {
                let broken = eta.compose(&eps)?;
                for f in &polys {
                    let lhs = poly(f.clone()).tensor(&id1)?;
                    let rhs = id1.tensor(&poly(reflect(f)))?.plus(&poly(demazure(f)).tensor(&broken)?.with_degree(lhs.degree))?;
                    if lhs.entries != rhs.entries {
                        return Ok(false);
                    }
                }
                Ok(true)
            })(),
        );
        push(
            "demazure: μ∘(id⊗f⊗id)∘ν = ∂(f)⊗id",
            (|| {
                for f in &polys {
                    let mid = id1.tensor(&poly(f.clone()))?.tensor(&id1)?;
                    let lhs = mu.compose(&mid)?.compose(&nu)?;
                    let rhs = poly(demazure(f)).tensor(&id1)?;
                    if lhs.entries != rhs.entries {
                        return Ok(false);
                    }
                }
                Ok(true)
            })(),
        );
    } else {
        push("block minimality: ∩∘∪ = id", (|| Ok(cap.compose(&cup)? == id0))());
        push(
            "block minimality: ∪∘∩ = id",
            (|| Ok(cup.compose(&cap)? == LocMor::identity(BSObject::new(2, false))))(),
        );
        push(
            "polynomial forcing: f⊗id = id⊗s(f)",
            (|| {
                for f in &polys {
                    if poly(f.clone()).tensor(&id1)?.entries != id1.tensor(&poly(reflect(f)))?.entries {
                        return Ok(false);
                    }
                }
                Ok(true)
            })(),
        );
    }
    push(
        "zigzag: (∩⊗id)∘(id⊗∪) = id = (id⊗∩)∘(∪⊗id)",
        (|| {
            let l = cap.tensor(&id1)?.compose(&id1.tensor(&cup)?)?;
            let r = id1.tensor(&cap)?.compose(&cup.tensor(&id1)?)?;
            Ok(l == id1 && r == id1)
        })(),
    );
    push(
        "polynomial sliding: f∘g = fg = f⊗g on ∅",
        (|| {
            for f in &polys {
                for h in &polys {
                    let prod = poly(f.times(h));
                    if poly(f.clone()).compose(&poly(h.clone()))? != prod || poly(f.clone()).tensor(&poly(h.clone()))? != prod {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })(),
    );
    push("generators are homogeneous", Ok(gens.iter().all(|m| m.is_consistent())));
    out
}

impl LocMor {
    fn with_degree(mut self, d: i64) -> LocMor {
        self.degree = d;
        self
    }
}

fn a1() -> CoxeterSystem {
    CoxeterSystem::preset("A1").expect("A1 preset")
}

/// Decorated subexpression of the one-color expression of length `n`.
pub fn decorate(n: usize, bits: &[bool]) -> DecoratedSubexpr {
    DecoratedSubexpr::from_bits(&a1(), &vec![0; n], bits)
}

fn check_mono(n: usize, neutral: bool, e: &[bool]) -> Result<()> {
    if e.len() != n {
        return Err(Error::Invalid(format!("subexpression has {} bits, expression has {n}", e.len())));
    }
    if !neutral && e.iter().any(|&b| !b) {
        return Err(Error::Invalid("non-neutral strands admit only the all-ones subexpression".into()));
    }
    Ok(())
}

/// The light leaf `LL_{x,e} : B_x → B_w` for the one-color expression of
/// length `n`; `w` is `(s)` or `∅` according to the parity of `e`.
pub fn ll_matrix_one_color(n: usize, neutral: bool, e: &[bool]) -> Result<LocMor> {
    check_mono(n, neutral, e)?;
    let dec = decorate(n, e);
    let id1 = LocMor::identity(BSObject::new(1, neutral));
    let mut ll = LocMor::identity(BSObject::empty());
    for d in &dec.decorations {
        let widened = ll.tensor(&id1)?;
        let phi = match d {
            Decoration::U0 => g(GenKind::UpperDot, true),
            Decoration::U1 => id1.clone(),
            Decoration::D0 => g(GenKind::Merge, true),
            Decoration::D1 => g(GenKind::Cap, neutral),
        };
        ll = phi.compose(&widened)?;
    }
    Ok(ll)
}

/// The upside-down light leaf `B_w → B_x`, built from the dual generators
/// in reverse order.
pub fn ll_bar_matrix_one_color(n: usize, neutral: bool, e: &[bool]) -> Result<LocMor> {
    check_mono(n, neutral, e)?;
    let dec = decorate(n, e);
    let id1 = LocMor::identity(BSObject::new(1, neutral));
    let mut ll = LocMor::identity(BSObject::empty());
    for d in &dec.decorations {
        let widened = ll.tensor(&id1)?;
        let phi = match d {
            Decoration::U0 => g(GenKind::LowerDot, true),
            Decoration::U1 => id1.clone(),
            Decoration::D0 => g(GenKind::Split, true),
            Decoration::D1 => g(GenKind::Cup, neutral),
        };
        ll = widened.compose(&phi)?;
    }
    Ok(ll)
}

/// `LL̄_{y,f} ∘ LL_{x,e}`.
pub fn double_leaf(x: usize, e: &[bool], y: usize, f: &[bool], neutral: bool) -> Result<LocMor> {
    if odd(e) != odd(f) {
        return Err(Error::Mismatch("subexpressions evaluate to different elements".into()));
    }
    ll_bar_matrix_one_color(y, neutral, f)?.compose(&ll_matrix_one_color(x, neutral, e)?)
}

/// `c_{e′}^{e}`: the coefficient of `LL_{x,e}` on the source component
/// `e′` and the all-ones component of its target.
pub fn leaf_coefficient(ll: &LocMor, e_prime: &[bool]) -> RatFunc {
    let top = vec![true; ll.target.len];
    ll.entry(&top, e_prime)
}

/// Summary of path-dominance upper triangularity on one expression.
#[derive(Clone, Debug, Serialize)]
pub struct TriangularityReport {
    pub len: usize,
    pub neutral: bool,
    pub leaves: usize,
    pub violations: Vec<(String, String)>,
    pub zero_diagonal: Vec<String>,
    pub degree_mismatches: Vec<String>,
}

impl TriangularityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.zero_diagonal.is_empty() && self.degree_mismatches.is_empty()
    }
}

pub fn check_triangularity(n: usize, neutral: bool) -> Result<TriangularityReport> {
    let w = a1();
    let obj = BSObject::new(n, neutral);
    let comps = obj.components();
    let mut rep = TriangularityReport {
        len: n,
        neutral,
        leaves: comps.len(),
        violations: vec![],
        zero_diagonal: vec![],
        degree_mismatches: vec![],
    };
    for e in &comps {
        let ll = ll_matrix_one_color(n, neutral, e)?;
        let de = decorate(n, e);
        if ll.degree != de.defect as i64 || !ll.is_consistent() {
            rep.degree_mismatches.push(bit_label(e));
        }
        if leaf_coefficient(&ll, e).is_zero() {
            rep.zero_diagonal.push(bit_label(e));
        }
        for ep in &comps {
            let c = leaf_coefficient(&ll, ep);
            if !c.is_zero() && !path_dominated(&w, &decorate(n, ep), &de) {
                rep.violations.push((bit_label(ep), bit_label(e)));
            }
        }
    }
    Ok(rep)
}

/// All double leaves `B_x → B_y` and their degree bookkeeping.
pub fn double_leaves(x: usize, y: usize, neutral: bool) -> Result<Vec<(Vec<bool>, Vec<bool>, LocMor)>> {
    let (cx, cy) = (BSObject::new(x, neutral).components(), BSObject::new(y, neutral).components());
    let mut out = Vec::new();
    for e in &cx {
        for f in &cy {
            if odd(e) == odd(f) {
                out.push((e.clone(), f.clone(), double_leaf(x, e, y, f, neutral)?));
            }
        }
    }
    Ok(out)
}

/// Rank of the double leaves `B_x → B_y` as vectors over `ℚ(α, δ)`,
/// computed at a random prime specialization (a lower bound that is sharp
/// with high probability, and exact when it equals the count).
pub fn double_leaf_rank(x: usize, y: usize, neutral: bool, seed: u64) -> Result<(usize, usize)> {
    let leaves = double_leaves(x, y, neutral)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pt = [Fp::new(rng.gen_range(2..1i64 << 50) as i128), Fp::new(rng.gen_range(2..1i64 << 50) as i128)];
    let rows: Vec<Vec<Fp>> = leaves
        .iter()
        .map(|(_, _, m)| m.entries.iter().flatten().map(|c| c.eval_fp(&pt).unwrap_or(Fp::zero())).collect())
        .collect();
    Ok((linalg::rank(&rows), leaves.len()))
}

//! Pre-realizations over ℤ, ℚ and ℚ(√5), and the ladder of validity
//! conditions (Abe, reflection-stable, monodromic, endoscopic, balanced).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::coxeter::{CoxeterMatrix, CoxeterSystem, Elem};
use crate::error::{Error, Result};
use crate::quantum::{qbinom_twisted, qnum_twisted, Color};
use crate::ring::{QuadExt, Ring, RingElem};
use crate::wset::{Point, WSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingTag {
    Z,
    Q,
    Q5,
}

impl RingTag {
    pub fn parse(s: &str) -> Result<RingTag> {
        match s {
            "Z" | "ZZ" => Ok(RingTag::Z),
            "Q" | "QQ" => Ok(RingTag::Q),
            "Q5" | "Q(sqrt5)" => Ok(RingTag::Q5),
            _ => Err(Error::Parse(format!("unknown ring tag {s:?}"))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            RingTag::Z => "Z",
            RingTag::Q => "Q",
            RingTag::Q5 => "Q5",
        }
    }
}

/// A pre-realization: `𝔥 = 𝕜^dim`, coroots are vectors in `𝔥`, roots are
/// functionals on `𝔥`. All scalars are stored in ℚ(√5), which contains the
/// other two rings; `ring` records which ring they are meant to live in.
#[derive(Clone, Debug, PartialEq)]
pub struct Realization {
    pub name: String,
    pub ring: RingTag,
    pub coxeter: CoxeterMatrix,
    pub coroots: Vec<Vec<QuadExt>>,
    pub roots: Vec<Vec<QuadExt>>,
}

/// A failed condition: which pair (or generator), binomial index and
/// monodromy point broke it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub s: usize,
    pub t: usize,
    pub k: u32,
    pub v: u32,
    pub point: Option<Point>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} t={} v={} k={}", self.s, self.t, self.v, self.k)?;
        if let Some(p) = self.point {
            write!(f, " point={p}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

pub type Check = std::result::Result<(), Witness>;

#[derive(Clone, Debug)]
pub enum Condition<'a> {
    Abe,
    ReflectionStable,
    Monodromic(&'a WSet),
    Endoscopic(&'a WSet),
    Balanced,
    ReflectionBalanced,
}

fn q(n: i64) -> QuadExt {
    QuadExt::from_i64(n)
}

fn pairing(v: &[QuadExt], f: &[QuadExt]) -> QuadExt {
    v.iter().zip(f).fold(QuadExt::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
}

fn axpy(y: &[QuadExt], a: &QuadExt, x: &[QuadExt]) -> Vec<QuadExt> {
    y.iter().zip(x).map(|(yi, xi)| yi.minus(&a.times(xi))).collect()
}

fn witness(s: usize, t: usize, k: u32, v: u32, point: Option<Point>, detail: String) -> Witness {
    Witness { s, t, k, v, point, detail }
}

/// Both colored twisted binomials `(v choose k)_{x(d)}` vanish at `(a, b)`
/// for `1 ≤ k < v`; returns the first failing `k`.
fn binomials_vanish(a: &QuadExt, b: &QuadExt, v: u32, d: u32) -> std::result::Result<(), (u32, String)> {
    for k in 1..v {
        for c in [Color::X, Color::Y] {
            let val = qbinom_twisted(v, k, d, c).eval(a, b);
            if !val.is_zero() {
                return Err((k, format!("binomial({v},{k})_{c:?}({d}) = {val}")));
            }
        }
    }
    Ok(())
}

fn divisors(m: u32) -> Vec<u32> {
    (1..=m).filter(|d| m % d == 0).collect()
}

impl Realization {
    /// Kac–Moody style realization: `𝔥 = 𝕜^n`, `α_s∨ = e_s`, and
    /// `⟨α_s∨, α_t⟩ = cartan[s][t]`.
    pub fn from_cartan(name: &str, ring: RingTag, coxeter: CoxeterMatrix, cartan: Vec<Vec<QuadExt>>) -> Result<Self> {
        let n = coxeter.rank;
        if cartan.len() != n || cartan.iter().any(|r| r.len() != n) {
            return Err(Error::Size(format!("Cartan matrix must be {n}×{n}")));
        }
        let coroots = (0..n).map(|s| (0..n).map(|i| q((i == s) as i64)).collect()).collect();
        let roots = (0..n).map(|t| (0..n).map(|s| cartan[s][t].clone()).collect()).collect();
        Ok(Realization { name: name.to_string(), ring, coxeter, coroots, roots })
    }

    pub fn builtin(name: &str) -> Result<Self> {
        let cartan_i = |rows: &[&[i64]]| -> Vec<Vec<QuadExt>> {
            rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
        };
        let phi = QuadExt::phi().negate();
        let two_by_two = |ring: RingTag, preset: &str, a: QuadExt, b: QuadExt| -> Result<Realization> {
            let c = vec![vec![q(2), a], vec![b, q(2)]];
            Realization::from_cartan(name, ring, CoxeterMatrix::preset(preset)?, c)
        };
        match name {
            "A1" => Ok(Realization {
                name: name.into(),
                ring: RingTag::Z,
                coxeter: CoxeterMatrix::preset("A1")?,
                coroots: vec![vec![q(1), q(0)]],
                roots: vec![vec![q(2), q(-1)]],
            }),
            "A2" | "I2(3)" => two_by_two(RingTag::Z, "A2", q(-1), q(-1)),
            "B2" | "I2(4)" => two_by_two(RingTag::Q, "B2", q(-1), q(-2)),
            "G2" | "I2(6)" => two_by_two(RingTag::Q, "G2", q(-1), q(-3)),
            "I2(2)" => two_by_two(RingTag::Q, "I2(2)", q(0), q(0)),
            "I2(5)" => two_by_two(RingTag::Q5, "I2(5)", phi.clone(), phi),
            "A3" => Realization::from_cartan(
                name,
                RingTag::Z,
                CoxeterMatrix::preset("A3")?,
                cartan_i(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]),
            ),
            "B3" => Realization::from_cartan(
                name,
                RingTag::Z,
                CoxeterMatrix::preset("B3")?,
                cartan_i(&[&[2, -1, 0], &[-1, 2, -1], &[0, -2, 2]]),
            ),
            "H3" | "H3-geometric" => {
                let mut c = cartan_i(&[&[2, 0, 0], &[0, 2, -1], &[0, -1, 2]]);
                c[0][1] = phi.clone();
                c[1][0] = phi;
                Realization::from_cartan("H3", RingTag::Q5, CoxeterMatrix::preset("H3")?, c)
            }
            _ => Err(Error::Invalid(format!(
                "unknown realization {name:?} (known: {})",
                BUILTIN_NAMES.join(", ")
            ))),
        }
    }

    pub fn rank(&self) -> usize {
        self.coxeter.rank
    }

    pub fn dim(&self) -> usize {
        self.coroots.first().map_or(0, |v| v.len())
    }

    /// `a_{s,t} = ⟨α_s∨, α_t⟩`.
    pub fn cartan(&self, s: usize, t: usize) -> QuadExt {
        pairing(&self.coroots[s], &self.roots[t])
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<QuadExt>> {
        (0..self.rank()).map(|s| (0..self.rank()).map(|t| self.cartan(s, t)).collect()).collect()
    }

    /// `s(v) = v − ⟨v, α_s⟩ α_s∨` on `𝔥`.
    pub fn act_vector(&self, s: usize, v: &[QuadExt]) -> Vec<QuadExt> {
        axpy(v, &pairing(v, &self.roots[s]), &self.coroots[s])
    }

    /// Contragredient action on `𝔥*`: `s(f) = f − ⟨α_s∨, f⟩ α_s`.
    pub fn act_functional(&self, s: usize, f: &[QuadExt]) -> Vec<QuadExt> {
        axpy(f, &pairing(&self.coroots[s], f), &self.roots[s])
    }

    /// `x · f` for `x ∈ W` (the rightmost letter acts first).
    pub fn elem_act_functional(&self, w: &CoxeterSystem, x: Elem, f: &[QuadExt]) -> Vec<QuadExt> {
        w.word(x).iter().rev().fold(f.to_vec(), |acc, &s| self.act_functional(s, &acc))
    }

    pub fn elem_act_vector(&self, w: &CoxeterSystem, x: Elem, v: &[QuadExt]) -> Vec<QuadExt> {
        w.word(x).iter().rev().fold(v.to_vec(), |acc, &s| self.act_vector(s, &acc))
    }

    /// Matrix of `s` on `𝔥` (columns are images of the standard basis).
    pub fn generator_matrix(&self, s: usize) -> Vec<Vec<QuadExt>> {
        let n = self.dim();
        let cols: Vec<Vec<QuadExt>> =
            (0..n).map(|j| self.act_vector(s, &(0..n).map(|i| q((i == j) as i64)).collect::<Vec<_>>())).collect();
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Checks the three pre-realization axioms; every failure is listed.
    pub fn validate_prerealization(&self) -> Vec<String> {
        let mut errs = Vec::new();
        let (r, n) = (self.rank(), self.dim());
        if self.coroots.len() != r || self.roots.len() != r {
            errs.push(format!("expected {r} roots and coroots"));
            return errs;
        }
        if self.coroots.iter().chain(&self.roots).any(|v| v.len() != n) {
            errs.push(format!("all roots and coroots must have dimension {n}"));
            return errs;
        }
        for s in 0..r {
            if self.cartan(s, s) != q(2) {
                errs.push(format!("axiom 1: <a_{s}^v, a_{s}> = {} != 2", self.cartan(s, s)));
            }
        }
        let mats: Vec<_> = (0..r).map(|s| self.generator_matrix(s)).collect();
        let id = mat_identity(n);
        for s in 0..r {
            for t in s..r {
                let m = self.coxeter.get(s, t);
                let st = if s == t { mats[s].clone() } else { mat_mul(&mats[s], &mats[t]) };
                let p = if s == t { 2 } else { m };
                if mat_pow(&st, p) != id {
                    errs.push(format!("axiom 2: relation (s{s} s{t})^{p} fails"));
                }
            }
        }
        for s in 0..r {
            let ok = match self.ring {
                RingTag::Z => {
                    let mut g = BigInt::from(0);
                    let mut integral = true;
                    for c in &self.roots[s] {
                        if !c.is_rational() || !c.a.is_integer() {
                            integral = false;
                        } else {
                            g = g.gcd(c.a.numer());
                        }
                    }
                    integral && g == BigInt::from(1)
                }
                _ => self.roots[s].iter().any(|c| !c.is_zero()),
            };
            if !ok {
                errs.push(format!("axiom 3: root {s} is not surjective (Demazure surjectivity)"));
            }
        }
        if self.ring != RingTag::Q5 {
            let bad = self.coroots.iter().chain(&self.roots).flatten().any(|c| !c.is_rational());
            if bad {
                errs.push(format!("entries involve sqrt5 but ring is {}", self.ring.as_str()));
            }
        }
        if self.ring == RingTag::Z {
            let bad = self.coroots.iter().chain(&self.roots).flatten().any(|c| !c.a.is_integer());
            if bad {
                errs.push("non-integral entries over Z".into());
            }
        }
        errs
    }

    pub fn check(&self, w: &CoxeterSystem, cond: &Condition) -> Check {
        match cond {
            Condition::Abe => self.check_abe(),
            Condition::ReflectionStable => self.check_reflection_stable(),
            Condition::Monodromic(o) => self.check_monodromic(w, o),
            Condition::Endoscopic(o) => self.check_endoscopic(w, o),
            Condition::Balanced => self.check_balanced(),
            Condition::ReflectionBalanced => self.check_reflection_balanced(),
        }
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        let r = self.rank();
        (0..r).flat_map(move |s| (s + 1..r).map(move |t| (s, t, self.coxeter.get(s, t))))
    }

    pub fn check_abe(&self) -> Check {
        for (s, t, m) in self.pairs() {
            binomials_vanish(&self.cartan(s, t), &self.cartan(t, s), m, 1)
                .map_err(|(k, d)| witness(s, t, k, m, None, d))?;
        }
        Ok(())
    }

    pub fn check_reflection_stable(&self) -> Check {
        for (s, t, m) in self.pairs() {
            for v in divisors(m).into_iter().filter(|&v| v > 1) {
                binomials_vanish(&self.cartan(s, t), &self.cartan(t, s), v, m / v)
                    .map_err(|(k, d)| witness(s, t, k, v, None, d))?;
            }
        }
        Ok(())
    }

    pub fn check_monodromic(&self, w: &CoxeterSystem, o: &WSet) -> Check {
        for (s, t, m) in self.pairs() {
            for p in o.points() {
                let v = o.endo_order(w, p, s, t) as u32;
                if v == 0 {
                    continue;
                }
                binomials_vanish(&self.cartan(s, t), &self.cartan(t, s), v, m / v)
                    .map_err(|(k, d)| witness(s, t, k, v, Some(p), d))?;
            }
        }
        Ok(())
    }

    /// `[m−1]_x = 1 = [m−1]_y` at the Cartan values, for every pair.
    pub fn check_balanced(&self) -> Check {
        for (s, t, m) in self.pairs() {
            self.unit_check(s, t, m - 1, 1, m)?;
        }
        Ok(())
    }

    /// `[v−1]_{x(d)} = 1 = [v−1]_{y(d)}` with `v = m/d` for every divisor
    /// `1 < d < m`.
    pub fn check_reflection_balanced(&self) -> Check {
        for (s, t, m) in self.pairs() {
            for d in divisors(m).into_iter().filter(|&d| d > 1 && d < m) {
                self.unit_check(s, t, m / d - 1, d, m / d)?;
            }
        }
        Ok(())
    }

    fn unit_check(&self, s: usize, t: usize, n: u32, d: u32, v: u32) -> Check {
        let (a, b) = (self.cartan(s, t), self.cartan(t, s));
        for c in [Color::X, Color::Y] {
            let val = qnum_twisted(n as i64, d as i64, c).eval(&a, &b);
            if !val.is_one() {
                return Err(witness(s, t, 0, v, None, format!("[{n}]_{c:?}({d}) = {val}, expected 1")));
            }
        }
        Ok(())
    }

    /// ShortLex-least `(w, r)` with `s′ = w r w⁻¹` and `w r > w`.
    pub fn reflection_datum(w: &CoxeterSystem, refl: Elem) -> Option<(Elem, usize)> {
        w.elements().find_map(|x| {
            (0..w.rank()).find_map(|r| {
                let xr = w.rmul(x, r);
                (w.length(xr) > w.length(x) && w.mul(xr, w.inverse(x)) == refl).then_some((x, r))
            })
        })
    }

    /// Roots and coroots of the reflection subgroup with simple reflections
    /// `simples`, transported along the ShortLex reflection datum.
    pub fn restrict(&self, w: &CoxeterSystem, simples: &[Elem]) -> (Vec<Vec<QuadExt>>, Vec<Vec<QuadExt>>) {
        let mut roots = Vec::new();
        let mut coroots = Vec::new();
        for &sp in simples {
            let (x, r) = Self::reflection_datum(w, sp).expect("simple of a reflection subgroup is a reflection");
            roots.push(self.elem_act_functional(w, x, &self.roots[r]));
            coroots.push(self.elem_act_vector(w, x, &self.coroots[r]));
        }
        (roots, coroots)
    }

    /// The restriction to every `W_𝓛°` is an Abe realization.
    pub fn check_endoscopic(&self, w: &CoxeterSystem, o: &WSet) -> Check {
        for p in o.points() {
            let g = o.endoscopic_group(w, p);
            let (roots, coroots) = self.restrict(w, &g.simples);
            for i in 0..g.simples.len() {
                for j in i + 1..g.simples.len() {
                    let m = g.matrix[i][j];
                    let a = pairing(&coroots[i], &roots[j]);
                    let b = pairing(&coroots[j], &roots[i]);
                    binomials_vanish(&a, &b, m, 1).map_err(|(k, d)| {
                        witness(g.simples[i], g.simples[j], k, m, Some(p), format!("endosimple pair: {d}"))
                    })?;
                }
            }
        }
        Ok(())
    }

    /// Positive-root transport is independent of the reflection datum:
    /// `x·α_s = y·α_t` whenever `xsx⁻¹ = yty⁻¹` with `xs > x`, `yt > y`.
    /// Returns the offending reflection if not.
    pub fn check_root_transport(&self, w: &CoxeterSystem) -> std::result::Result<(), Elem> {
        let mut seen: std::collections::HashMap<Elem, Vec<QuadExt>> = std::collections::HashMap::new();
        for x in w.elements() {
            for s in 0..w.rank() {
                let xs = w.rmul(x, s);
                if w.length(xs) < w.length(x) {
                    continue;
                }
                let refl = w.mul(xs, w.inverse(x));
                let root = self.elem_act_functional(w, x, &self.roots[s]);
                match seen.get(&refl) {
                    Some(r) if *r != root => return Err(refl),
                    Some(_) => {}
                    None => {
                        seen.insert(refl, root);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let enc = |c: &QuadExt| -> Value {
            if self.ring == RingTag::Q5 {
                json!(format!("q:{},{}", c.a, c.b))
            } else {
                json!(c.a.to_string())
            }
        };
        let mat = |vs: &[Vec<QuadExt>]| -> Value { vs.iter().map(|v| v.iter().map(enc).collect::<Vec<_>>()).collect() };
        json!({
            "name": self.name,
            "ring": self.ring.as_str(),
            "coxeter": self.coxeter.m,
            "coroots": mat(&self.coroots),
            "roots": mat(&self.roots),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("realization JSON lacks {k:?}")));
        let ring = RingTag::parse(field("ring")?.as_str().unwrap_or(""))?;
        let coxeter: Vec<Vec<u32>> =
            serde_json::from_value(field("coxeter")?.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let dec = |x: &Value| -> Result<QuadExt> {
            let s = match x {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(Error::Parse(format!("bad scalar {x}"))),
            };
            Ok(RingElem::parse(&s)?.to_quad())
        };
        let mat = |k: &str| -> Result<Vec<Vec<QuadExt>>> {
            field(k)?
                .as_array()
                .ok_or_else(|| Error::Parse(format!("{k} must be an array")))?
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| Error::Parse(format!("{k} rows must be arrays")))?
                        .iter()
                        .map(dec)
                        .collect()
                })
                .collect()
        };
        let r = Realization {
            name: v.get("name").and_then(Value::as_str).unwrap_or("custom").to_string(),
            ring,
            coxeter: CoxeterMatrix::new(coxeter)?,
            coroots: mat("coroots")?,
            roots: mat("roots")?,
        };
        if r.coroots.len() != r.rank() || r.roots.len() != r.rank() {
            return Err(Error::Size(format!("need {} roots and coroots", r.rank())));
        }
        Ok(r)
    }

    /// A Cartan entry as an element of the realization's ring.
    pub fn cartan_elem(&self, s: usize, t: usize) -> RingElem {
        let c = self.cartan(s, t);
        match self.ring {
            RingTag::Q5 => RingElem::Quad(c),
            RingTag::Q => RingElem::Rat(c.a),
            RingTag::Z if c.a.is_integer() => RingElem::Int(c.a.to_integer()),
            RingTag::Z => RingElem::Rat(c.a),
        }
    }
}

pub const BUILTIN_NAMES: &[&str] =
    &["A1", "A2", "A3", "B2", "B3", "G2", "H3", "I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)"];

/// Built-in realizations of crystallographic (Weyl group) type.
pub const CRYSTALLOGRAPHIC: &[&str] = &["A1", "A2", "A3", "B2", "B3", "G2", "I2(2)"];

fn mat_identity(n: usize) -> Vec<Vec<QuadExt>> {
    (0..n).map(|i| (0..n).map(|j| q((i == j) as i64)).collect()).collect()
}

fn mat_mul(a: &[Vec<QuadExt>], b: &[Vec<QuadExt>]) -> Vec<Vec<QuadExt>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).fold(QuadExt::zero(), |acc, (x, br)| acc.plus(&x.times(&br[j]))))
                .collect()
        })
        .collect()
}

fn mat_pow(a: &[Vec<QuadExt>], mut e: u32) -> Vec<Vec<QuadExt>> {
    let mut acc = mat_identity(a.len());
    let mut base = a.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        base = mat_mul(&base, &base);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_prerealizations() {
        for name in BUILTIN_NAMES {
            let r = Realization::builtin(name).unwrap();
            assert!(r.validate_prerealization().is_empty(), "{name}: {:?}", r.validate_prerealization());
        }
    }

    #[test]
    fn axiom_one_violation() {
        let mut r = Realization::builtin("A1").unwrap();
        r.roots[0] = vec![q(1), q(0)];
        let errs = r.validate_prerealization();
        assert!(errs.iter().any(|e| e.starts_with("axiom 1")), "{errs:?}");
    }

    #[test]
    fn cartan_entries() {
        let b2 = Realization::builtin("B2").unwrap();
        assert_eq!((b2.cartan(0, 1), b2.cartan(1, 0)), (q(-1), q(-2)));
        assert_eq!(b2.cartan(1, 1), q(2));
        let h3 = Realization::builtin("H3").unwrap();
        assert_eq!(h3.cartan(0, 1), QuadExt::phi().negate());
        assert_eq!(h3.cartan(1, 0), QuadExt::phi().negate());
    }

    #[test]
    fn json_roundtrip() {
        for name in ["B3", "H3", "A1"] {
            let r = Realization::builtin(name).unwrap();
            assert_eq!(Realization::from_json(&r.to_json()).unwrap(), r);
        }
    }
}

//! Finite right W-sets of monodromy parameters, the block map `b_𝓛`,
//! monodromic length, blocks and endoscopic Coxeter groups.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, Elem};
use crate::error::{invalid, Error, Result};

pub type Point = usize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WSetKind {
    Trivial,
    Regular,
    Cosets(Vec<Elem>),
    Explicit,
}

/// A finite right W-set; `action[s][p] = p·s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WSet {
    pub kind: WSetKind,
    action: Vec<Vec<Point>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub source: Point,
    pub target: Point,
    pub elements: Vec<Elem>,
    pub minimal: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndoscopicGroup {
    pub elements: Vec<Elem>,
    pub simples: Vec<Elem>,
    pub matrix: Vec<Vec<u32>>,
    pub type_name: String,
}

impl WSet {
    pub fn trivial(w: &CoxeterSystem) -> WSet {
        WSet { kind: WSetKind::Trivial, action: vec![vec![0]; w.rank()] }
    }

    pub fn regular(w: &CoxeterSystem) -> WSet {
        let action = (0..w.rank()).map(|s| w.elements().map(|x| w.rmul(x, s)).collect()).collect();
        WSet { kind: WSetKind::Regular, action }
    }

    /// Right cosets `W′w` of the subgroup generated by `gens`, numbered by
    /// first occurrence in ShortLex order (so `C_e = 0`).
    pub fn cosets(w: &CoxeterSystem, gens: &[Elem]) -> WSet {
        let sub = subgroup(w, gens);
        let mut coset_of = vec![usize::MAX; w.size()];
        let mut count = 0;
        for x in w.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &h in &sub {
                coset_of[w.mul(h, x)] = count;
            }
            count += 1;
        }
        let mut rep = vec![0; count];
        for x in w.elements().rev() {
            rep[coset_of[x]] = x;
        }
        let action = (0..w.rank())
            .map(|s| (0..count).map(|c| coset_of[w.rmul(rep[c], s)]).collect())
            .collect();
        WSet { kind: WSetKind::Cosets(gens.to_vec()), action }
    }

    /// Validate explicit permutations: involutions satisfying the braid
    /// relations.
    pub fn explicit(w: &CoxeterSystem, action: Vec<Vec<Point>>) -> Result<WSet> {
        if action.len() != w.rank() {
            return invalid(format!("expected {} permutations, got {}", w.rank(), action.len()));
        }
        let n = action[0].len();
        for (s, p) in action.iter().enumerate() {
            if p.len() != n {
                return invalid("permutations have different sizes");
            }
            let mut seen = vec![false; n];
            for &x in p {
                if x >= n || seen[x] {
                    return invalid(format!("action of generator {} is not a permutation", s + 1));
                }
                seen[x] = true;
            }
            if (0..n).any(|x| p[p[x]] != x) {
                return invalid(format!("action of generator {} is not an involution", s + 1));
            }
        }
        for s in 0..w.rank() {
            for t in s + 1..w.rank() {
                let m = w.m(s, t) as usize;
                for x in 0..n {
                    let a = (0..m).fold(x, |p, k| action[if k % 2 == 0 { s } else { t }][p]);
                    let b = (0..m).fold(x, |p, k| action[if k % 2 == 0 { t } else { s }][p]);
                    if a != b {
                        return invalid(format!("braid relation for ({},{}) fails at point {x}", s + 1, t + 1));
                    }
                }
            }
        }
        Ok(WSet { kind: WSetKind::Explicit, action })
    }

    pub fn len(&self) -> usize {
        self.action.first().map_or(1, |a| a.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> std::ops::Range<Point> {
        0..self.len()
    }

    pub fn act(&self, p: Point, s: usize) -> Point {
        self.action[s][p]
    }

    pub fn act_expr(&self, p: Point, e: &[usize]) -> Point {
        e.iter().fold(p, |q, &s| self.action[s][q])
    }

    pub fn act_elem(&self, w: &CoxeterSystem, p: Point, x: Elem) -> Point {
        self.act_expr(p, w.word(x))
    }

    pub fn action(&self) -> &[Vec<Point>] {
        &self.action
    }

    /// `K(expr, 𝓛)`: 0-based positions where the running point is fixed.
    pub fn kset(&self, p: Point, e: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        let mut q = p;
        for (i, &s) in e.iter().enumerate() {
            let r = self.action[s][q];
            if r == q {
                out.push(i);
            }
            q = r;
        }
        out
    }

    /// `b_𝓛(expr)`: evaluation of the letters outside `K`.
    pub fn b_min(&self, w: &CoxeterSystem, p: Point, e: &[usize]) -> Elem {
        let mut q = p;
        let mut x = w.identity();
        for &s in e {
            let r = self.action[s][q];
            if r != q {
                x = w.rmul(x, s);
            }
            q = r;
        }
        x
    }

    pub fn b_elem(&self, w: &CoxeterSystem, p: Point, x: Elem) -> Elem {
        self.b_min(w, p, w.word(x))
    }

    /// `ℓ_𝓛` of an expression: `#K`.
    pub fn mono_length(&self, p: Point, e: &[usize]) -> usize {
        self.kset(p, e).len()
    }

    pub fn mono_length_elem(&self, w: &CoxeterSystem, p: Point, x: Elem) -> usize {
        self.mono_length(p, w.word(x))
    }

    pub fn stabilizer(&self, w: &CoxeterSystem, p: Point) -> Vec<Elem> {
        w.elements().filter(|&x| self.act_elem(w, p, x) == p).collect()
    }

    /// Fibers of `b_𝓛` on `{w : 𝓛w = 𝓛′}`, sorted by `(ℓ(w^β), w^β)`.
    pub fn blocks(&self, w: &CoxeterSystem, p: Point, q: Point) -> Vec<Block> {
        let mut fib: BTreeMap<Elem, Vec<Elem>> = BTreeMap::new();
        for x in w.elements() {
            if self.act_elem(w, p, x) == q {
                fib.entry(self.b_elem(w, p, x)).or_default().push(x);
            }
        }
        let mut out: Vec<Block> = fib
            .into_values()
            .map(|elements| {
                let minimal = *elements
                    .iter()
                    .find(|&&x| self.mono_length_elem(w, p, x) == 0)
                    .expect("every block has a length-zero element");
                Block { source: p, target: q, elements, minimal }
            })
            .collect();
        out.sort_by_key(|b| (w.length(b.minimal), b.minimal));
        out
    }

    /// `W_𝓛° = b_𝓛⁻¹(e)` with its endosimple reflections.
    pub fn endoscopic_group(&self, w: &CoxeterSystem, p: Point) -> EndoscopicGroup {
        let elements: Vec<Elem> = w.elements().filter(|&x| self.b_elem(w, p, x) == w.identity()).collect();
        let simples: Vec<Elem> =
            elements.iter().copied().filter(|&x| self.mono_length_elem(w, p, x) == 1).collect();
        let matrix: Vec<Vec<u32>> = simples
            .iter()
            .map(|&a| simples.iter().map(|&b| w.order(w.mul(a, b)) as u32).collect())
            .collect();
        let type_name = coxeter_type_name(&matrix);
        EndoscopicGroup { elements, simples, matrix, type_name }
    }

    /// `v_{s,t}^𝓛`: half the size of `W_{⟨s,t⟩} ∩ W_𝓛°`.
    pub fn endo_order(&self, w: &CoxeterSystem, p: Point, s: usize, t: usize) -> usize {
        let m = w.m(s, t) as usize;
        let mut dihedral = BTreeSet::new();
        for k in 0..2 * m {
            let alt = |a: usize, b: usize| -> Vec<usize> { (0..k).map(|i| if i % 2 == 0 { a } else { b }).collect() };
            dihedral.insert(w.eval(&alt(s, t)));
            dihedral.insert(w.eval(&alt(t, s)));
        }
        let n = dihedral.iter().filter(|&&x| self.b_elem(w, p, x) == w.identity()).count();
        n / 2
    }

    /// JSON form `{"points": n, "action": {"s_1": [...], ...}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut act = serde_json::Map::new();
        for (s, perm) in self.action.iter().enumerate() {
            act.insert(format!("s_{}", s + 1), serde_json::json!(perm));
        }
        serde_json::json!({ "points": self.len(), "action": act })
    }

    pub fn from_json(w: &CoxeterSystem, v: &serde_json::Value) -> Result<WSet> {
        let bad = |m: &str| Error::Parse(format!("W-set JSON: {m}"));
        let n = v.get("points").and_then(|x| x.as_u64()).ok_or_else(|| bad("missing points"))? as usize;
        let act = v.get("action").and_then(|x| x.as_object()).ok_or_else(|| bad("missing action"))?;
        let mut action = Vec::new();
        for s in 0..w.rank() {
            let key = format!("s_{}", s + 1);
            let perm = act.get(&key).and_then(|x| x.as_array()).ok_or_else(|| bad(&format!("missing {key}")))?;
            let perm: Option<Vec<usize>> = perm.iter().map(|x| x.as_u64().map(|k| k as usize)).collect();
            let perm = perm.ok_or_else(|| bad("non-integer entry"))?;
            if perm.len() != n {
                return Err(bad("permutation length differs from points"));
            }
            action.push(perm);
        }
        WSet::explicit(w, action)
    }

    /// Parse `trivial`, `regular`, `cosets:s,tst` (generator elements as
    /// letter strings) or a JSON object.
    pub fn parse(w: &CoxeterSystem, spec: &str) -> Result<WSet> {
        let spec = spec.trim();
        match spec {
            "trivial" => return Ok(WSet::trivial(w)),
            "regular" => return Ok(WSet::regular(w)),
            _ => {}
        }
        if let Some(rest) = spec.strip_prefix("cosets:") {
            let mut gens = Vec::new();
            for tok in rest.split(',').filter(|t| !t.is_empty()) {
                let word = parse_letters(w.rank(), tok)?;
                gens.push(w.eval(&word));
            }
            return Ok(WSet::cosets(w, &gens));
        }
        if spec.starts_with('{') {
            let v: serde_json::Value = serde_json::from_str(spec).map_err(|e| Error::Parse(e.to_string()))?;
            return WSet::from_json(w, &v);
        }
        Err(Error::Parse(format!("unknown W-set spec {spec:?}")))
    }
}

/// Letters `s t u` or 1-based digits, without separators: `"tst"`, `"212"`.
pub fn parse_letters(rank: usize, tok: &str) -> Result<Vec<usize>> {
    if tok == "e" {
        return Ok(vec![]);
    }
    tok.chars()
        .map(|c| {
            let g = match c {
                's' => 0,
                't' => 1,
                'u' => 2,
                d if d.is_ascii_digit() && d != '0' => d as usize - '1' as usize,
                _ => return Err(Error::Parse(format!("bad letter {c:?} in {tok:?}"))),
            };
            if g >= rank {
                return Err(Error::Invalid(format!("generator {c} out of range")));
            }
            Ok(g)
        })
        .collect()
}

/// Subgroup generated by `gens` (closure under right multiplication).
pub fn subgroup(w: &CoxeterSystem, gens: &[Elem]) -> Vec<Elem> {
    let mut seen = vec![false; w.size()];
    seen[0] = true;
    let mut q = VecDeque::from([0]);
    let mut out = vec![0];
    while let Some(x) = q.pop_front() {
        for &g in gens {
            let y = w.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
                q.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

/// The W-sets used for exhaustive checks: trivial, regular, and the coset
/// spaces of every distinct subgroup generated by at most two elements.
pub fn builtin_wsets(w: &CoxeterSystem) -> Vec<(String, WSet)> {
    let mut out = vec![("trivial".to_string(), WSet::trivial(w)), ("regular".to_string(), WSet::regular(w))];
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(vec![w.identity()]);
    seen.insert(w.elements().collect::<Vec<_>>());
    for a in w.elements() {
        for b in a..w.size() {
            let sub = subgroup(w, &[a, b]);
            if seen.insert(sub) {
                let gens: Vec<Elem> = if a == b || a == w.identity() { vec![b] } else { vec![a, b] };
                let letters = |g: Elem| -> String {
                    w.word(g)
                        .iter()
                        .map(|&s| if w.rank() <= 3 { ["s", "t", "u"][s].to_string() } else { (s + 1).to_string() })
                        .collect()
                };
                let name = gens.iter().map(|&g| letters(g)).collect::<Vec<_>>().join(",");
                out.push((format!("cosets:{name}"), WSet::cosets(w, &gens)));
            }
        }
    }
    out
}

/// Length function of `(G, simples)` by breadth-first search.
pub fn bfs_lengths(w: &CoxeterSystem, simples: &[Elem]) -> BTreeMap<Elem, usize> {
    let mut dist = BTreeMap::from([(w.identity(), 0)]);
    let mut q = VecDeque::from([w.identity()]);
    while let Some(x) = q.pop_front() {
        let d = dist[&x];
        for &g in simples {
            let y = w.mul(x, g);
            dist.entry(y).or_insert_with(|| {
                q.push_back(y);
                d + 1
            });
        }
    }
    dist
}

/// Name of a finite Coxeter type from its Coxeter matrix, e.g. `A1×A1`.
pub fn coxeter_type_name(m: &[Vec<u32>]) -> String {
    let n = m.len();
    if n == 0 {
        return "trivial".into();
    }
    let mut comp = vec![usize::MAX; n];
    let mut names = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut nodes = vec![start];
        comp[start] = start;
        let mut i = 0;
        while i < nodes.len() {
            let a = nodes[i];
            i += 1;
            for b in 0..n {
                if b != a && m[a][b] > 2 && comp[b] == usize::MAX {
                    comp[b] = start;
                    nodes.push(b);
                }
            }
        }
        nodes.sort_unstable();
        names.push(component_name(m, &nodes));
    }
    names.sort();
    names.join("×")
}

fn component_name(m: &[Vec<u32>], nodes: &[usize]) -> String {
    let k = nodes.len();
    if k == 1 {
        return "A1".into();
    }
    let edges: Vec<(usize, usize, u32)> = nodes
        .iter()
        .flat_map(|&a| nodes.iter().filter(move |&&b| b > a).map(move |&b| (a, b, m[a][b])))
        .filter(|e| e.2 > 2)
        .collect();
    if k == 2 {
        return match edges[0].2 {
            3 => "A2".into(),
            4 => "B2".into(),
            6 => "G2".into(),
            v => format!("I2({v})"),
        };
    }
    let degree = |a: usize| edges.iter().filter(|e| e.0 == a || e.1 == a).count();
    let is_path = edges.len() == k - 1 && nodes.iter().all(|&a| degree(a) <= 2);
    let labels: Vec<u32> = edges.iter().map(|e| e.2).filter(|&l| l != 3).collect();
    if is_path {
        match labels.as_slice() {
            [] => return format!("A{k}"),
            [4] => {
                let end = edges.iter().find(|e| e.2 == 4).unwrap();
                if degree(end.0) == 1 || degree(end.1) == 1 {
                    return format!("B{k}");
                }
                if k == 4 {
                    return "F4".into();
                }
            }
            [5] if k <= 4 => {
                let end = edges.iter().find(|e| e.2 == 5).unwrap();
                if degree(end.0) == 1 || degree(end.1) == 1 {
                    return format!("H{k}");
                }
            }
            _ => {}
        }
    } else if edges.len() == k - 1 && labels.is_empty() {
        // one branch node of degree 3
        if let Some(&c) = nodes.iter().find(|&&a| degree(a) == 3) {
            let arm = |first: usize| {
                let (mut prev, mut cur, mut len) = (c, first, 1);
                loop {
                    let next = edges
                        .iter()
                        .filter_map(|e| if e.0 == cur && e.1 != prev { Some(e.1) } else if e.1 == cur && e.0 != prev { Some(e.0) } else { None })
                        .next();
                    match next {
                        Some(nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => return len,
                    }
                }
            };
            let mut arms: Vec<usize> = edges
                .iter()
                .filter_map(|e| if e.0 == c { Some(e.1) } else if e.1 == c { Some(e.0) } else { None })
                .map(arm)
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => return format!("D{k}"),
                [1, 2, 2] => return "E6".into(),
                [1, 2, 3] => return "E7".into(),
                [1, 2, 4] => return "E8".into(),
                _ => {}
            }
        }
    }
    format!("rank{k}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_example_a2() {
        let w = CoxeterSystem::preset("A2").unwrap();
        let o = WSet::cosets(&w, &[w.gen(0)]);
        assert_eq!(o.len(), 3);
        // C_e = 0, C_t = 1, C_ts = 2
        assert_eq!(o.act(0, 0), 0);
        assert_eq!(o.act(0, 1), 1);
        assert_eq!(o.act(1, 0), 2);
        assert_eq!(o.b_min(&w, 0, &[0, 1]), w.gen(1));
        assert_eq!(o.b_min(&w, 0, &[1, 0]), w.eval(&[1, 0]));
        assert_eq!(o.mono_length(0, &[0, 1]), 1);
        assert_eq!(o.mono_length(0, &[1, 0]), 0);
        let g = o.endoscopic_group(&w, 1);
        assert_eq!(g.elements, vec![0, w.eval(&[0, 1, 0])]);
        assert_eq!(g.simples, vec![w.eval(&[0, 1, 0])]);
    }

    #[test]
    fn trivial_and_regular() {
        let w = CoxeterSystem::preset("A1").unwrap();
        let t = WSet::trivial(&w);
        assert_eq!(t.len(), 1);
        let b = t.blocks(&w, 0, 0);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].elements, vec![0, 1]);
        assert_eq!(b[0].minimal, 0);
        let r = WSet::regular(&w);
        assert_eq!(r.len(), 2);
        assert_eq!(r.act(0, 0), 1);
        let b2 = CoxeterSystem::preset("B2").unwrap();
        let reg = WSet::regular(&b2);
        for p in reg.points() {
            for q in reg.points() {
                for blk in reg.blocks(&b2, p, q) {
                    assert_eq!(blk.elements.len(), 1);
                }
            }
        }
        assert_eq!(WSet::trivial(&b2).endo_order(&b2, 0, 0, 1), 4);
        assert_eq!(reg.endo_order(&b2, 3, 0, 1), 0);
    }

    #[test]
    fn b2_endoscopy() {
        let w = CoxeterSystem::preset("B2").unwrap();
        let tst = w.eval(&[1, 0, 1]);
        let o = WSet::cosets(&w, &[w.gen(0), tst]);
        let g = o.endoscopic_group(&w, 0);
        assert_eq!(g.simples, vec![w.gen(0), tst]);
        assert_eq!(g.type_name, "A1×A1");
        assert_eq!(o.endo_order(&w, 0, 0, 1), 2);
    }

    #[test]
    fn explicit_validation() {
        let w = CoxeterSystem::preset("A2").unwrap();
        assert!(WSet::explicit(&w, vec![vec![1, 0, 3, 2], vec![0, 2, 1, 3]]).is_err());
        assert!(WSet::explicit(&w, vec![vec![1, 0], vec![1, 0]]).is_ok());
        assert!(WSet::explicit(&w, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(WSet::explicit(&w, vec![vec![1, 0], vec![0, 0]]).is_err());
        let sign = WSet::explicit(&w, vec![vec![0], vec![0]]).unwrap();
        assert_eq!(sign.len(), 1);
        let o = WSet::cosets(&w, &[w.gen(0)]);
        assert_eq!(WSet::from_json(&w, &o.to_json()).unwrap().action(), o.action());
    }

    #[test]
    fn type_names() {
        assert_eq!(coxeter_type_name(&[vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]]), "B3");
        assert_eq!(coxeter_type_name(&[vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]]), "H3");
        assert_eq!(coxeter_type_name(&[vec![1, 2], vec![2, 1]]), "A1×A1");
        assert_eq!(coxeter_type_name(&[]), "trivial");
    }
}

//! Finite Coxeter groups with complete multiplication tables.
//!
//! Elements are enumerated by coset enumeration on the trivial subgroup and
//! then renumbered in ShortLex order of their canonical (ShortLex-least)
//! reduced words, so element `0` is the identity and ids increase with
//! length.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a group element in the element table.
pub type Elem = usize;

/// A word in the simple reflections, `0..rank`.
pub type Expr = Vec<usize>;

pub const DEFAULT_BOUND: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterMatrix {
    pub rank: usize,
    pub m: Vec<Vec<u32>>,
}

impl CoxeterMatrix {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self> {
        let rank = m.len();
        for (i, row) in m.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::Invalid("Coxeter matrix must be square".into()));
            }
            for (j, &e) in row.iter().enumerate() {
                if m[j][i] != e {
                    return Err(Error::Invalid(format!("Coxeter matrix not symmetric at ({i},{j})")));
                }
                if i == j && e != 1 {
                    return Err(Error::Invalid(format!("diagonal entry ({i},{i}) must be 1")));
                }
                if i != j && e == 0 {
                    return Err(Error::Size(format!("m({i},{j}) = infinity: only finite groups are supported")));
                }
                if i != j && e < 2 {
                    return Err(Error::Invalid(format!("off-diagonal entry ({i},{j}) must be >= 2")));
                }
            }
        }
        Ok(CoxeterMatrix { rank, m })
    }

    /// Named presets: `A1 A2 A3 B2 B3 G2 H3 I2(m) A1xI2(m)`.
    pub fn preset(name: &str) -> Result<Self> {
        let dihedral = |m: u32| vec![vec![1, m], vec![m, 1]];
        let parse_m = |s: &str| -> Result<u32> {
            s.parse::<u32>().map_err(|_| Error::Parse(format!("bad dihedral order in {name:?}")))
        };
        let m = match name {
            "A1" => vec![vec![1]],
            "A2" => dihedral(3),
            "B2" => dihedral(4),
            "G2" => dihedral(6),
            "A3" => vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]],
            "B3" => vec![vec![1, 3, 2], vec![3, 1, 4], vec![2, 4, 1]],
            "H3" => vec![vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]],
            _ => {
                if let Some(rest) = name.strip_prefix("A1xI2(").and_then(|r| r.strip_suffix(')')) {
                    let k = parse_m(rest)?;
                    vec![vec![1, k, 2], vec![k, 1, 2], vec![2, 2, 1]]
                } else if let Some(rest) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
                    dihedral(parse_m(rest)?)
                } else {
                    return Err(Error::Invalid(format!("unknown Coxeter preset {name:?}")));
                }
            }
        };
        CoxeterMatrix::new(m)
    }

    pub fn get(&self, s: usize, t: usize) -> u32 {
        self.m[s][t]
    }
}

#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    pub matrix: CoxeterMatrix,
    words: Vec<Expr>,
    length: Vec<usize>,
    rmul: Vec<Vec<Elem>>,
    lmul: Vec<Vec<Elem>>,
    inv: Vec<Elem>,
    w0: Elem,
}

const NONE: usize = usize::MAX;

/// Coset enumeration (HLT strategy with coincidence processing) for the
/// Coxeter presentation over the trivial subgroup. Generators are
/// involutions, so each column is its own inverse.
struct CosetTable {
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    ngens: usize,
    limit: usize,
}

impl CosetTable {
    fn new(ngens: usize, limit: usize) -> Self {
        CosetTable { table: vec![vec![NONE; ngens]], parent: vec![0], ngens, limit }
    }

    fn rep(&mut self, mut c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[c] != root {
            let n = self.parent[c];
            self.parent[c] = root;
            c = n;
        }
        root
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, g: usize) -> Result<()> {
        if self.table.len() >= self.limit {
            return Err(Error::Size(format!("coset enumeration exceeded {} cosets", self.limit)));
        }
        let d = self.table.len();
        self.table.push(vec![NONE; self.ngens]);
        self.parent.push(d);
        self.table[c][g] = d;
        self.table[d][g] = c;
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi] = lo;
        queue.push(hi);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.ngens {
                let f = self.table[e][x];
                if f == NONE {
                    continue;
                }
                if self.table[f][x] == e {
                    self.table[f][x] = NONE;
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                if self.table[e1][x] != NONE {
                    let t = self.table[e1][x];
                    self.merge(f1, t, &mut queue);
                } else if self.table[f1][x] != NONE {
                    let t = self.table[f1][x];
                    self.merge(e1, t, &mut queue);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][x] = e1;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, rel: &[usize]) -> Result<()> {
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = rel.len() as isize - 1;
        loop {
            while (i as isize) <= j && self.table[f][rel[i]] != NONE {
                f = self.table[f][rel[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j >= i as isize && self.table[b][rel[j as usize]] != NONE {
                b = self.table[b][rel[j as usize]];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.table[f][rel[i]] = b;
                self.table[b][rel[i]] = f;
                return Ok(());
            }
            self.define(f, rel[i])?;
        }
    }

    fn enumerate(&mut self, rels: &[Vec<usize>]) -> Result<()> {
        let mut c = 0;
        while c < self.table.len() {
            for r in rels {
                if !self.live(c) {
                    break;
                }
                self.scan_and_fill(c, r)?;
            }
            if self.live(c) {
                for g in 0..self.ngens {
                    if self.table[c][g] == NONE {
                        self.define(c, g)?;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> Result<Self> {
        CoxeterSystem::with_bound(matrix, DEFAULT_BOUND)
    }

    pub fn preset(name: &str) -> Result<Self> {
        CoxeterSystem::new(CoxeterMatrix::preset(name)?)
    }

    pub fn with_bound(matrix: CoxeterMatrix, bound: usize) -> Result<Self> {
        let n = matrix.rank;
        if n == 0 {
            return Err(Error::Invalid("rank must be positive".into()));
        }
        let mut rels: Vec<Vec<usize>> = (0..n).map(|s| vec![s, s]).collect();
        for s in 0..n {
            for t in s + 1..n {
                let m = matrix.get(s, t) as usize;
                rels.push((0..2 * m).map(|k| if k % 2 == 0 { s } else { t }).collect());
            }
        }
        let limit = (bound.saturating_mul(8)).max(1 << 12);
        let mut ct = CosetTable::new(n, limit);
        ct.enumerate(&rels)?;
        let live: Vec<usize> = (0..ct.table.len()).filter(|&c| ct.live(c)).collect();
        if live.len() > bound {
            return Err(Error::Size(format!("|W| = {} exceeds bound {bound}", live.len())));
        }

        // breadth-first renumbering: ShortLex-least words and lengths
        let mut id = vec![NONE; ct.table.len()];
        let mut order = vec![0usize];
        let mut words: Vec<Expr> = vec![vec![]];
        id[0] = 0;
        let mut q = VecDeque::from([0usize]);
        while let Some(c) = q.pop_front() {
            for s in 0..n {
                let d = ct.rep(ct.table[c][s]);
                if id[d] == NONE {
                    id[d] = order.len();
                    order.push(d);
                    let mut w = words[id[c]].clone();
                    w.push(s);
                    words.push(w);
                    q.push_back(d);
                }
            }
        }
        let size = order.len();
        let mut rmul = vec![vec![0; n]; size];
        for (i, &c) in order.iter().enumerate() {
            for s in 0..n {
                let d = ct.rep(ct.table[c][s]);
                rmul[i][s] = id[d];
            }
        }
        let length: Vec<usize> = words.iter().map(|w| w.len()).collect();
        let mut inv = vec![0; size];
        for (i, w) in words.iter().enumerate() {
            inv[i] = w.iter().rev().fold(0, |x, &s| rmul[x][s]);
        }
        let mut lmul = vec![vec![0; n]; size];
        for i in 0..size {
            for s in 0..n {
                lmul[i][s] = inv[rmul[inv[i]][s]];
            }
        }
        let w0 = (0..size).max_by_key(|&i| (length[i], std::cmp::Reverse(i))).unwrap_or(0);
        Ok(CoxeterSystem { matrix, words, length, rmul, lmul, inv, w0 })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn m(&self, s: usize, t: usize) -> u32 {
        self.matrix.get(s, t)
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn w0(&self) -> Elem {
        self.w0
    }

    pub fn gen(&self, s: usize) -> Elem {
        self.rmul[0][s]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    pub fn length(&self, w: Elem) -> usize {
        self.length[w]
    }

    /// Canonical (ShortLex-least) reduced word.
    pub fn word(&self, w: Elem) -> &Expr {
        &self.words[w]
    }

    pub fn rmul(&self, w: Elem, s: usize) -> Elem {
        self.rmul[w][s]
    }

    pub fn lmul(&self, s: usize, w: Elem) -> Elem {
        self.lmul[w][s]
    }

    pub fn inverse(&self, w: Elem) -> Elem {
        self.inv[w]
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.words[b].iter().fold(a, |x, &s| self.rmul[x][s])
    }

    pub fn is_right_descent(&self, w: Elem, s: usize) -> bool {
        self.length[self.rmul[w][s]] < self.length[w]
    }

    pub fn is_left_descent(&self, w: Elem, s: usize) -> bool {
        self.length[self.lmul[w][s]] < self.length[w]
    }

    pub fn right_descents(&self, w: Elem) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.is_right_descent(w, s)).collect()
    }

    pub fn left_descents(&self, w: Elem) -> Vec<usize> {
        (0..self.rank()).filter(|&s| self.is_left_descent(w, s)).collect()
    }

    pub fn check_expr(&self, e: &[usize]) -> Result<()> {
        match e.iter().find(|&&s| s >= self.rank()) {
            Some(s) => Err(Error::Invalid(format!("generator {s} out of range for rank {}", self.rank()))),
            None => Ok(()),
        }
    }

    pub fn eval(&self, e: &[usize]) -> Elem {
        e.iter().fold(0, |x, &s| self.rmul[x][s])
    }

    pub fn eval_from(&self, start: Elem, e: &[usize]) -> Elem {
        e.iter().fold(start, |x, &s| self.rmul[x][s])
    }

    pub fn is_reduced(&self, e: &[usize]) -> bool {
        self.length[self.eval(e)] == e.len()
    }

    /// Element whose canonical word is `w`, if `w` is reduced.
    pub fn find(&self, w: &[usize]) -> Option<Elem> {
        let x = self.eval(w);
        self.is_reduced(w).then_some(x)
    }

    /// Bruhat order via the lifting property: for a right descent `s` of
    /// `y`, `x ≤ y ⇔ min(x, xs) ≤ ys`.
    pub fn bruhat_leq(&self, mut x: Elem, mut y: Elem) -> bool {
        loop {
            if self.length[x] > self.length[y] {
                return false;
            }
            if y == 0 {
                return x == 0;
            }
            if x == 0 {
                return true;
            }
            let s = self.words[y][self.words[y].len() - 1];
            let xs = self.rmul[x][s];
            if self.length[xs] < self.length[x] {
                x = xs;
            }
            y = self.rmul[y][s];
        }
    }

    pub fn reflections(&self) -> BTreeSet<Elem> {
        let mut out = BTreeSet::new();
        for w in self.elements() {
            for s in 0..self.rank() {
                let ws = self.rmul(w, s);
                out.insert(self.mul(ws, self.inv[w]));
            }
        }
        out.retain(|&r| r != 0);
        out
    }

    pub fn is_reflection(&self, w: Elem) -> bool {
        self.reflections().contains(&w)
    }

    /// All reduced words of `w`, in ShortLex order.
    pub fn reduced_expressions(&self, w: Elem) -> Vec<Expr> {
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        self.rex_rec(w, &mut suffix, &mut out);
        for e in &mut out {
            e.reverse();
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    fn rex_rec(&self, w: Elem, suffix: &mut Vec<usize>, out: &mut Vec<Expr>) {
        if w == 0 {
            out.push(suffix.clone());
            return;
        }
        for s in 0..self.rank() {
            if self.is_right_descent(w, s) {
                suffix.push(s);
                self.rex_rec(self.rmul[w][s], suffix, out);
                suffix.pop();
            }
        }
    }

    /// Demazure product `x ⋆ y`.
    pub fn hecke_star(&self, x: Elem, y: Elem) -> Elem {
        self.words[y].iter().fold(x, |acc, &s| {
            let t = self.rmul[acc][s];
            if self.length[t] > self.length[acc] {
                t
            } else {
                acc
            }
        })
    }

    /// Order of an element.
    pub fn order(&self, w: Elem) -> usize {
        let mut x = w;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, w);
            k += 1;
        }
        k
    }

    /// Render a word with letters `s t u` (rank ≤ 3) or `s1 s2 …`.
    pub fn word_str(&self, e: &[usize]) -> String {
        if e.is_empty() {
            return "e".into();
        }
        e.iter().map(|&s| gen_name(self.rank(), s)).collect::<Vec<_>>().join(",")
    }

    /// Parse `"s,t,s"`, `"1,2,1"` (1-based) or `"e"`.
    pub fn parse_word(&self, s: &str) -> Result<Expr> {
        parse_word(self.rank(), s)
    }
}

pub fn gen_name(rank: usize, s: usize) -> String {
    if rank <= 3 {
        ["s", "t", "u"][s].to_string()
    } else {
        format!("s{}", s + 1)
    }
}

pub fn parse_word(rank: usize, s: &str) -> Result<Expr> {
    let s = s.trim();
    if s.is_empty() || s == "e" || s == "()" || s == "[]" {
        return Ok(vec![]);
    }
    let body = s.trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    let mut out = Vec::new();
    for tok in body.split([',', ' ']).filter(|t| !t.is_empty()) {
        let g = match tok {
            "s" => 0,
            "t" => 1,
            "u" => 2,
            _ => {
                let t = tok.trim_start_matches('s');
                let k: usize = t.parse().map_err(|_| Error::Parse(format!("bad generator {tok:?}")))?;
                if k == 0 {
                    return Err(Error::Parse("generators are 1-based".into()));
                }
                k - 1
            }
        };
        if g >= rank {
            return Err(Error::Invalid(format!("generator {tok} out of range for rank {rank}")));
        }
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        for (name, n, l0) in [("A1", 2, 1), ("A2", 6, 3), ("B2", 8, 4), ("A3", 24, 6), ("B3", 48, 9), ("H3", 120, 15), ("G2", 12, 6)] {
            let w = CoxeterSystem::preset(name).unwrap();
            assert_eq!(w.size(), n, "{name}");
            assert_eq!(w.length(w.w0()), l0, "{name}");
        }
        assert_eq!(CoxeterSystem::preset("A1xI2(7)").unwrap().size(), 28);
    }

    #[test]
    fn rejects_infinite_and_oversized() {
        let inf = CoxeterMatrix::new(vec![vec![1, 0], vec![0, 1]]);
        assert!(matches!(inf, Err(Error::Size(_))));
        let aff = CoxeterMatrix::new(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        assert!(matches!(CoxeterSystem::with_bound(aff, 500), Err(Error::Size(_))));
        let big = CoxeterMatrix::preset("I2(100)").unwrap();
        assert!(matches!(CoxeterSystem::with_bound(big, 50), Err(Error::Size(_))));
    }

    #[test]
    fn spec_examples() {
        let a1 = CoxeterSystem::preset("A1").unwrap();
        assert_eq!(a1.eval(&[0, 0]), 0);
        let a2 = CoxeterSystem::preset("A2").unwrap();
        assert_eq!(a2.eval(&[0, 1, 0]), a2.eval(&[1, 0, 1]));
        let b2 = CoxeterSystem::preset("B2").unwrap();
        assert_eq!(b2.eval(&[0, 1, 0, 1]), b2.w0());

        let s = a2.gen(0);
        let st = a2.eval(&[0, 1]);
        let ts = a2.eval(&[1, 0]);
        assert!(a2.bruhat_leq(s, st));
        assert!(!a2.bruhat_leq(st, ts));
        assert_eq!(a2.reflections().len(), 3);
        assert_eq!(b2.reflections().len(), 4);
        assert_eq!(a1.reflections().into_iter().collect::<Vec<_>>(), vec![a1.gen(0)]);
        assert_eq!(a2.reduced_expressions(a2.w0()), vec![vec![0, 1, 0], vec![1, 0, 1]]);
        assert_eq!(a2.reduced_expressions(st), vec![vec![0, 1]]);
        assert_eq!(a2.reduced_expressions(0), vec![Vec::<usize>::new()]);
        assert_eq!(a1.hecke_star(a1.gen(0), a1.gen(0)), a1.gen(0));
        assert_eq!(a2.hecke_star(st, ts), a2.w0());
    }

    #[test]
    fn canonical_words_are_shortlex_least() {
        let w = CoxeterSystem::preset("B3").unwrap();
        for x in w.elements() {
            assert_eq!(&w.reduced_expressions(x)[0], w.word(x));
        }
    }

    #[test]
    fn parse_words() {
        assert_eq!(parse_word(3, "s,t,u").unwrap(), vec![0, 1, 2]);
        assert_eq!(parse_word(3, "1,3").unwrap(), vec![0, 2]);
        assert_eq!(parse_word(3, "e").unwrap(), Vec::<usize>::new());
        assert!(parse_word(2, "u").is_err());
        assert!(parse_word(2, "0").is_err());
    }
}

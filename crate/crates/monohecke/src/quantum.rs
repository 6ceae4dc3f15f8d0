//! Two-colored quantum numbers, twisted variables and quantum binomials in
//! ℤ[x, y].

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{BiPoly, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    X,
    Y,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::X => Color::Y,
            Color::Y => Color::X,
        }
    }

    pub fn var(self) -> BiPoly {
        match self {
            Color::X => BiPoly::x(),
            Color::Y => BiPoly::y(),
        }
    }

    pub fn parse(s: &str) -> Result<Color> {
        match s {
            "x" | "X" => Ok(Color::X),
            "y" | "Y" => Ok(Color::Y),
            _ => Err(Error::Parse(format!("color must be x or y, got {s:?}"))),
        }
    }
}

fn cache() -> &'static Mutex<HashMap<(i64, Color), BiPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, Color), BiPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `[n]_x` or `[n]_y`, with `[−n] = −[n]`.
pub fn qnum(n: i64, c: Color) -> BiPoly {
    if n < 0 {
        return qnum(-n, c).negate();
    }
    if let Some(p) = cache().lock().expect("cache lock").get(&(n, c)) {
        return p.clone();
    }
    // [k+1]_c = [2]_c [k]_{c'} − [k−1]_c, run for both colors at once
    let (mut px, mut py) = (BiPoly::zero(), BiPoly::zero());
    let (mut cx, mut cy) = (BiPoly::one(), BiPoly::one());
    for _ in 1..n {
        let nx = BiPoly::x().times(&cy).minus(&px);
        let ny = BiPoly::y().times(&cx).minus(&py);
        px = cx;
        py = cy;
        cx = nx;
        cy = ny;
    }
    let out = if n == 0 {
        BiPoly::zero()
    } else {
        match c {
            Color::X => cx,
            Color::Y => cy,
        }
    };
    cache().lock().expect("cache lock").insert((n, c), out.clone());
    out
}

/// `x(d) = [d+1]_x − [d−1]_x` (resp. `y(d)`).
pub fn twisted_var(d: i64, c: Color) -> BiPoly {
    qnum(d + 1, c).minus(&qnum(d - 1, c))
}

/// The primed recursion for twisted variables: `x′(0) = 2`, `x′(1) = x`,
/// `x′(d) = −x′(d−2) + (x or y)·x′(d−1)` by parity of `d`.
pub fn twisted_var_recursive(d: u32, c: Color) -> BiPoly {
    let mut prev = BiPoly::constant(2);
    if d == 0 {
        return prev;
    }
    let mut cur = c.var();
    for k in 2..=d {
        let mult = if k % 2 == 1 { c.var() } else { c.other().var() };
        let next = mult.times(&cur).minus(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `[n]_{x(d)}`: substitute `x ↦ x(d), y ↦ y(d)` in `[n]_x`.
pub fn qnum_twisted(n: i64, d: i64, c: Color) -> BiPoly {
    qnum(n, c).substitute(&twisted_var(d, Color::X), &twisted_var(d, Color::Y))
}

fn exact(num: &BiPoly, den: &BiPoly) -> BiPoly {
    num.div_exact(den)
        .unwrap_or_else(|| panic!("inexact division in quantum arithmetic: ({num}) / ({den})"))
}

/// `[n·d]_x / [d]_x`, which equals `[n]_{x(d)}`.
pub fn qnum_twisted_quotient(n: i64, d: i64, c: Color) -> BiPoly {
    exact(&qnum(n * d, c), &qnum(d, c))
}

/// Two-colored quantum binomial coefficient.
pub fn qbinom(n: u32, k: u32, c: Color) -> BiPoly {
    assert!(k <= n, "qbinom requires k <= n");
    let mut num = BiPoly::one();
    let mut den = BiPoly::one();
    for i in 0..k {
        num = num.times(&qnum((n - i) as i64, c));
        den = den.times(&qnum((i + 1) as i64, c));
    }
    exact(&num, &den)
}

/// Twisted binomial via quotients of untwisted quantum numbers:
/// `Π [d(n−i)] / Π [d·i]`.
pub fn qbinom_twisted(n: u32, k: u32, d: u32, c: Color) -> BiPoly {
    assert!(k <= n && d >= 1, "qbinom_twisted requires k <= n and d >= 1");
    let d = d as i64;
    let mut num = BiPoly::one();
    let mut den = BiPoly::one();
    for i in 0..k as i64 {
        num = num.times(&qnum(d * (n as i64 - i), c));
        den = den.times(&qnum(d * (i + 1), c));
    }
    exact(&num, &den)
}

/// Twisted binomial by direct substitution into the untwisted binomial.
pub fn qbinom_twisted_subst(n: u32, k: u32, d: u32, c: Color) -> BiPoly {
    qbinom(n, k, c).substitute(&twisted_var(d as i64, Color::X), &twisted_var(d as i64, Color::Y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn at(p: &BiPoly, a: i64, b: i64) -> BigInt {
        p.eval(&BigInt::from(a), &BigInt::from(b))
    }

    #[test]
    fn small_values() {
        assert_eq!(qnum(1, Color::X), BiPoly::one());
        assert_eq!(qnum(2, Color::Y), BiPoly::y());
        assert_eq!(qnum(3, Color::X).to_string(), "x*y - 1");
        assert_eq!(qnum(-3, Color::X), qnum(3, Color::X).negate());
        assert_eq!(twisted_var(0, Color::X), BiPoly::constant(2));
        assert_eq!(twisted_var(1, Color::X), BiPoly::x());
        assert_eq!(twisted_var(2, Color::X).to_string(), "x*y - 2");
        assert_eq!(qnum_twisted(2, 2, Color::X).to_string(), "x*y - 2");
        assert_eq!(qnum_twisted(1, 5, Color::Y), BiPoly::one());
        assert_eq!(qnum_twisted(3, 2, Color::X), qnum_twisted_quotient(3, 2, Color::X));
        assert_eq!(qbinom(7, 0, Color::X), BiPoly::one());
    }

    #[test]
    fn table_vanishing() {
        assert!(at(&qbinom_twisted(2, 1, 2, Color::X), -1, -2) == BigInt::from(0));
        assert!(at(&qbinom_twisted(3, 1, 2, Color::X), -1, -3) == BigInt::from(0));
        assert!(at(&qbinom_twisted(3, 2, 2, Color::Y), -1, -3) == BigInt::from(0));
    }
}

//! Gaussian elimination over any [`Ring`] whose nonzero elements are units.

use super::Ring;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<R: Ring>(m: &mut Vec<Vec<R>>) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("nonzero entries are units");
        for j in c..cols {
            m[r][j] = m[r][j].times(&inv);
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..cols {
                let t = f.times(&m[r][j]);
                m[i][j] = m[i][j].minus(&t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<R: Ring>(m: &[Vec<R>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// Solution of `A x = b` with free variables set to zero, together with the
/// nullity of `A`; `None` if inconsistent.
pub fn solve<R: Ring>(a: &[Vec<R>], b: &[R]) -> Option<(Vec<R>, usize)> {
    let n = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<R>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.last() == Some(&n) {
        return None;
    }
    let mut x = vec![R::zero(); n];
    for (i, &c) in piv.iter().enumerate() {
        x[c] = aug[i][n].clone();
    }
    Some((x, n - piv.len()))
}

/// Basis of the right kernel.
pub fn kernel<R: Ring>(a: &[Vec<R>], ncols: usize) -> Vec<Vec<R>> {
    let mut m = a.to_vec();
    let piv = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![R::zero(); ncols];
            v[f] = R::one();
            for (i, &c) in piv.iter().enumerate() {
                v[c] = m[i][f].negate();
            }
            v
        })
        .collect()
}

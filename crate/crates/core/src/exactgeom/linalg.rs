//! Small exact linear algebra over `Rat`.

use num_traits::{One, Zero};

use super::rat::{RVec, Rat};

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[RVec], dim: usize) -> (Vec<RVec>, Vec<usize>) {
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| r.as_slice().to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rat::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m.into_iter().map(RVec::new).collect(), pivots)
}

pub fn rank(rows: &[RVec], dim: usize) -> usize {
    rref(rows, dim).1.len()
}

/// Basis of `{x : r . x = 0 for all rows r}`.
pub fn nullspace(rows: &[RVec], dim: usize) -> Vec<RVec> {
    let (m, pivots) = rref(rows, dim);
    let mut basis = Vec::new();
    for free in (0..dim).filter(|c| !pivots.contains(c)) {
        let mut v = RVec::zeros(dim);
        v.set(free, Rat::one());
        for (row, &p) in m.iter().zip(&pivots) {
            v.set(p, -row[free].clone());
        }
        basis.push(v);
    }
    basis
}

/// Canonical basis of the span: RREF rows scaled to primitive integers.
pub fn canonical_span(vectors: &[RVec], dim: usize) -> Vec<RVec> {
    rref(vectors, dim).0.into_iter().map(|r| r.primitive()).collect()
}

/// Solves a square nonsingular system.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = Rat::one() / &m[c][c];
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        let pr = m[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != c && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pr) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

/// Component of `v` orthogonal to the span of the (linearly independent) `basis`.
pub fn reject(v: &RVec, basis: &[RVec]) -> RVec {
    if basis.is_empty() {
        return v.clone();
    }
    let gram: Vec<Vec<Rat>> = basis.iter().map(|a| basis.iter().map(|b| a.dot(b)).collect()).collect();
    let rhs: Vec<Rat> = basis.iter().map(|a| a.dot(v)).collect();
    let c = solve(&gram, &rhs).expect("independent basis");
    let mut out = v.clone();
    for (ci, b) in c.iter().zip(basis) {
        if !ci.is_zero() {
            out = out.axpy(&-ci.clone(), b);
        }
    }
    out
}

pub fn in_span(v: &RVec, vectors: &[RVec], dim: usize) -> bool {
    let mut all = vectors.to_vec();
    let r = rank(&all, dim);
    all.push(v.clone());
    rank(&all, dim) == r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_is_orthogonal() {
        let rows = vec![RVec::from_ints(&[1, 1, 0]), RVec::from_ints(&[0, 1, 1])];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            assert!(r.dot(&ns[0]).is_zero());
        }
    }

    #[test]
    fn reject_removes_span_component() {
        let b = vec![RVec::from_ints(&[1, 1, 0])];
        let r = reject(&RVec::from_ints(&[2, 0, 5]), &b);
        assert_eq!(r, RVec::from_ints(&[1, -1, 5]));
    }
}

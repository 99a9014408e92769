//! Exact two-phase simplex with Bland's rule over free variables.

use num_traits::{One, Signed, Zero};

use super::rat::{RVec, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult {
    Infeasible,
    Unbounded,
    Optimal { point: RVec, value: Rat },
}

/// `max c.x` subject to `a.x <= b` and `e.x = f`, `x` free.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    dim: usize,
    ineqs: Vec<(RVec, Rat)>,
    eqs: Vec<(RVec, Rat)>,
}

impl LinearProgram {
    pub fn new(dim: usize) -> Self {
        LinearProgram { dim, ineqs: Vec::new(), eqs: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_ineq(&mut self, a: RVec, b: Rat) {
        debug_assert_eq!(a.dim(), self.dim);
        self.ineqs.push((a, b));
    }

    pub fn add_eq(&mut self, a: RVec, b: Rat) {
        debug_assert_eq!(a.dim(), self.dim);
        self.eqs.push((a, b));
    }

    pub fn feasible_point(&self) -> Option<RVec> {
        match self.maximize(&RVec::zeros(self.dim)) {
            LpResult::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }

    pub fn maximize(&self, c: &RVec) -> LpResult {
        Tableau::build(self).solve(c)
    }
}

struct Tableau {
    d: usize,
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<Option<usize>>,
    // rows that hold a basic free variable or were found redundant
    skip: Vec<bool>,
    free_nonbasic: Vec<usize>,
    ncols: usize,
    artificial_from: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let d = lp.dim;
        let m1 = lp.ineqs.len();
        let ncols = d + m1;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        let mut basis = Vec::new();
        for (i, (a, b)) in lp.ineqs.iter().enumerate() {
            let mut r = a.as_slice().to_vec();
            r.resize(ncols, Rat::zero());
            r[d + i] = Rat::one();
            rows.push(r);
            rhs.push(b.clone());
            basis.push(Some(d + i));
        }
        for (a, b) in &lp.eqs {
            let mut r = a.as_slice().to_vec();
            r.resize(ncols, Rat::zero());
            rows.push(r);
            rhs.push(b.clone());
            basis.push(None);
        }
        let n = rows.len();
        Tableau { d, rows, rhs, basis, skip: vec![false; n], free_nonbasic: Vec::new(), ncols, artificial_from: ncols }
    }

    fn pivot(&mut self, r: usize, c: usize, obj: Option<(&mut Vec<Rat>, &mut Rat)>) {
        let inv = Rat::one() / &self.rows[r][c];
        if !inv.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
            self.rhs[r] *= &inv;
        }
        let prow = std::mem::take(&mut self.rows[r]);
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        if let Some((w, val)) = obj {
            if !w[c].is_zero() {
                let f = w[c].clone();
                for (x, p) in w.iter_mut().zip(&prow) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
                *val += &f * &prhs;
            }
        }
        self.rows[r] = prow;
        self.basis[r] = Some(c);
    }

    fn objective(&self, cost: &[Rat]) -> (Vec<Rat>, Rat) {
        let mut w = cost.to_vec();
        let mut val = Rat::zero();
        for (r, b) in self.basis.iter().enumerate() {
            if let Some(k) = b {
                let ck = &cost[*k];
                if ck.is_zero() {
                    continue;
                }
                for (x, t) in w.iter_mut().zip(&self.rows[r]) {
                    if !t.is_zero() {
                        *x -= ck * t;
                    }
                }
                val += ck * &self.rhs[r];
            }
        }
        (w, val)
    }

    /// Returns false when unbounded.
    fn simplex(&mut self, w: &mut Vec<Rat>, val: &mut Rat, col_limit: usize) -> bool {
        loop {
            let entering = (self.d..col_limit).find(|&j| w[j].is_positive());
            let Some(j) = entering else { return true };
            let mut best: Option<(usize, Rat)> = None;
            for r in 0..self.rows.len() {
                if self.skip[r] || !self.rows[r][j].is_positive() {
                    continue;
                }
                let q = &self.rhs[r] / &self.rows[r][j];
                let better = match &best {
                    None => true,
                    Some((br, bq)) => q < *bq || (q == *bq && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, q));
                }
            }
            let Some((r, _)) = best else { return false };
            self.pivot(r, j, Some((w, val)));
        }
    }

    fn solve(mut self, c: &RVec) -> LpResult {
        let d = self.d;
        // Free variables enter the basis first and never leave.
        for j in 0..d {
            let pick = (0..self.rows.len())
                .filter(|&r| !self.skip[r] && !self.rows[r][j].is_zero())
                .min_by_key(|&r| self.basis[r].is_some());
            match pick {
                Some(r) => {
                    self.pivot(r, j, None);
                    self.skip[r] = true;
                }
                None => self.free_nonbasic.push(j),
            }
        }
        // Phase 1.
        let mut needs_art = Vec::new();
        for r in 0..self.rows.len() {
            if self.skip[r] {
                continue;
            }
            if self.rhs[r].is_negative() {
                for x in self.rows[r].iter_mut() {
                    *x = -x.clone();
                }
                self.rhs[r] = -self.rhs[r].clone();
                needs_art.push(r);
            } else if self.basis[r].is_none() {
                needs_art.push(r);
            }
        }
        if !needs_art.is_empty() {
            let base = self.ncols;
            let extra = needs_art.len();
            for row in self.rows.iter_mut() {
                row.resize(base + extra, Rat::zero());
            }
            for (k, &r) in needs_art.iter().enumerate() {
                self.rows[r][base + k] = Rat::one();
                self.basis[r] = Some(base + k);
            }
            self.artificial_from = base;
            self.ncols = base + extra;
            let mut cost = vec![Rat::zero(); self.ncols];
            for x in cost.iter_mut().skip(base) {
                *x = -Rat::one();
            }
            let (mut w, mut val) = self.objective(&cost);
            let ncols = self.ncols;
            self.simplex(&mut w, &mut val, ncols);
            if val.is_negative() {
                return LpResult::Infeasible;
            }
            // Drive remaining artificials out of the basis.
            for r in 0..self.rows.len() {
                if self.skip[r] {
                    continue;
                }
                if let Some(k) = self.basis[r] {
                    if k >= base {
                        match (d..base).find(|&j| !self.rows[r][j].is_zero()) {
                            Some(j) => self.pivot(r, j, None),
                            None => self.skip[r] = true,
                        }
                    }
                }
            }
        }
        // Phase 2.
        let mut cost = vec![Rat::zero(); self.ncols];
        for j in 0..d {
            cost[j] = c[j].clone();
        }
        let (mut w, mut val) = self.objective(&cost);
        if self.free_nonbasic.iter().any(|&j| !w[j].is_zero()) {
            return LpResult::Unbounded;
        }
        let limit = self.artificial_from;
        if !self.simplex(&mut w, &mut val, limit) {
            return LpResult::Unbounded;
        }
        let mut x = RVec::zeros(d);
        for (r, b) in self.basis.iter().enumerate() {
            if let Some(k) = b {
                if *k < d {
                    x.set(*k, self.rhs[r].clone());
                }
            }
        }
        LpResult::Optimal { point: x, value: val }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::{rat, ratio};

    #[test]
    fn simple_max() {
        // max x + y s.t. x <= 1, y <= 2, x + 2y <= 4
        let mut lp = LinearProgram::new(2);
        lp.add_ineq(RVec::from_ints(&[1, 0]), rat(1));
        lp.add_ineq(RVec::from_ints(&[0, 1]), rat(2));
        lp.add_ineq(RVec::from_ints(&[1, 2]), rat(4));
        match lp.maximize(&RVec::from_ints(&[1, 1])) {
            LpResult::Optimal { point, value } => {
                assert_eq!(value, ratio(5, 2));
                assert_eq!(point, RVec::new(vec![rat(1), ratio(3, 2)]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.add_ineq(RVec::from_ints(&[1]), rat(-1));
        lp.add_ineq(RVec::from_ints(&[-1]), rat(-1));
        assert_eq!(lp.maximize(&RVec::from_ints(&[0])), LpResult::Infeasible);
        let mut lp = LinearProgram::new(2);
        lp.add_eq(RVec::from_ints(&[1, -1]), rat(0));
        assert_eq!(lp.maximize(&RVec::from_ints(&[1, 0])), LpResult::Unbounded);
    }

    #[test]
    fn equalities_and_negative_rhs() {
        let mut lp = LinearProgram::new(3);
        lp.add_eq(RVec::from_ints(&[1, 1, 1]), rat(3));
        lp.add_ineq(RVec::from_ints(&[-1, 0, 0]), rat(-2));
        lp.add_ineq(RVec::from_ints(&[0, -1, 0]), rat(0));
        lp.add_ineq(RVec::from_ints(&[0, 0, -1]), rat(0));
        match lp.maximize(&RVec::from_ints(&[0, 0, 1])) {
            LpResult::Optimal { value, point } => {
                assert_eq!(value, rat(1));
                assert_eq!(point, RVec::from_ints(&[2, 0, 1]));
            }
            other => panic!("{other:?}"),
        }
    }
}

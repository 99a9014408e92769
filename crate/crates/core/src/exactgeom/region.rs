//! Set difference of polyhedra via not-necessarily-closed regions.

use num_traits::{One, Signed};

use super::lp::{LinearProgram, LpResult};
use super::poly::ConvexPoly;
use super::rat::{RVec, Rat};

/// `{x : A x <= b, E x = f, S x < g}`.
#[derive(Clone, Debug)]
pub struct Region {
    closed: ConvexPoly,
    stricts: Vec<(RVec, Rat)>,
}

impl Region {
    pub fn closed(p: ConvexPoly) -> Self {
        Region { closed: p, stricts: Vec::new() }
    }

    pub fn with_strict(mut self, a: RVec, b: Rat) -> Self {
        self.stricts.push((a, b));
        self
    }

    pub fn closure(&self) -> ConvexPoly {
        let mut c = self.closed.clone();
        for (a, b) in &self.stricts {
            c = c.with_ineq(a.clone(), b.clone());
        }
        c
    }

    /// A point of the region, or `None` when it is empty.
    pub fn point(&self) -> Option<RVec> {
        if self.stricts.is_empty() {
            return self.closed.feasible_point();
        }
        let d = self.closed.dim();
        let mut lp = LinearProgram::new(d + 1);
        let zero = RVec::zeros(1);
        for (a, b) in self.closed.ineqs() {
            lp.add_ineq(a.concat(&zero), b.clone());
        }
        for (a, b) in self.closed.eqs() {
            lp.add_eq(a.concat(&zero), b.clone());
        }
        let one = RVec::new(vec![Rat::one()]);
        for (a, b) in &self.stricts {
            lp.add_ineq(a.concat(&one), b.clone());
        }
        lp.add_ineq(RVec::unit(d + 1, d), Rat::one());
        match lp.maximize(&RVec::unit(d + 1, d)) {
            LpResult::Optimal { point, value } if value.is_positive() => Some(point.slice(0, d)),
            _ => None,
        }
    }

    /// A relative interior point of the closure, which lies in the region.
    pub fn witness(&self) -> Option<RVec> {
        let p = self.point()?;
        let w = self.closure().relative_interior_point().unwrap_or(p.clone());
        let inside = self.closed.contains(&w) && self.stricts.iter().all(|(a, b)| a.dot(&w) < *b);
        Some(if inside { w } else { p })
    }

    /// Pieces of `self \ b`, empty pieces pruned.
    fn minus(&self, b: &ConvexPoly) -> Vec<Region> {
        let mut probe = self.clone();
        probe.closed = probe.closed.intersect(b);
        if probe.point().is_none() {
            return vec![self.clone()];
        }
        let mut rows: Vec<(RVec, Rat)> = b.ineqs().to_vec();
        for (a, f) in b.eqs() {
            rows.push((a.clone(), f.clone()));
            rows.push((a.neg(), -f.clone()));
        }
        let mut out = Vec::new();
        for k in 0..rows.len() {
            let (h, beta) = &rows[k];
            if h.is_zero() {
                if beta.is_negative() {
                    out.push(self.clone());
                    break;
                }
                continue;
            }
            let mut q = self.clone();
            q.stricts.push((h.neg(), -beta.clone()));
            for (hj, bj) in &rows[..k] {
                q.closed = q.closed.with_ineq(hj.clone(), bj.clone());
            }
            if q.point().is_some() {
                out.push(q);
            }
        }
        out
    }
}

/// A point of `a` outside every polyhedron of `cover`, if any.
pub fn uncovered_point(a: &ConvexPoly, cover: &[ConvexPoly]) -> Option<RVec> {
    let mut pieces = vec![Region::closed(a.clone())];
    for b in cover {
        pieces = pieces.iter().flat_map(|p| p.minus(b)).collect();
        if pieces.is_empty() {
            return None;
        }
    }
    pieces.first().and_then(|p| p.witness())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::rat;

    fn interval(lo: i64, hi: i64) -> ConvexPoly {
        ConvexPoly::whole(1).with_ineq(RVec::from_ints(&[1]), rat(hi)).with_ineq(RVec::from_ints(&[-1]), rat(-lo))
    }

    #[test]
    fn covered_interval() {
        assert!(uncovered_point(&interval(0, 2), &[interval(0, 1), interval(1, 3)]).is_none());
    }

    #[test]
    fn gap_is_found() {
        let p = uncovered_point(&interval(0, 4), &[interval(0, 1), interval(2, 4)]).unwrap();
        assert!(p[0] > rat(1) && p[0] < rat(2));
    }
}

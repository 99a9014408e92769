//! Closed convex polyhedra `{x : A x <= b, E x = f}`.

use num_traits::{One, Signed, Zero};

use super::cone::ConeH;
use super::lp::{LinearProgram, LpResult};
use super::rat::{RVec, Rat};
use crate::error::{check_dim, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConvexPoly {
    dim: usize,
    ineqs: Vec<(RVec, Rat)>,
    eqs: Vec<(RVec, Rat)>,
}

impl ConvexPoly {
    pub fn new(dim: usize, ineqs: Vec<(RVec, Rat)>, eqs: Vec<(RVec, Rat)>) -> Result<Self> {
        for (a, _) in ineqs.iter().chain(&eqs) {
            check_dim(dim, a.dim())?;
        }
        Ok(Self::raw(dim, ineqs, eqs))
    }

    pub(crate) fn raw(dim: usize, ineqs: Vec<(RVec, Rat)>, eqs: Vec<(RVec, Rat)>) -> Self {
        ConvexPoly { dim, ineqs, eqs }
    }

    pub fn whole(dim: usize) -> Self {
        Self::raw(dim, Vec::new(), Vec::new())
    }

    pub fn point(x: &RVec) -> Self {
        let d = x.dim();
        Self::raw(d, Vec::new(), (0..d).map(|i| (RVec::unit(d, i), x[i].clone())).collect())
    }

    /// Nonnegative orthant on the listed coordinates.
    pub fn nonneg(dim: usize, coords: &[usize]) -> Self {
        Self::raw(dim, coords.iter().map(|&i| (RVec::unit(dim, i).neg(), Rat::zero())).collect(), Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ineqs(&self) -> &[(RVec, Rat)] {
        &self.ineqs
    }

    pub fn eqs(&self) -> &[(RVec, Rat)] {
        &self.eqs
    }

    pub fn with_ineq(mut self, a: RVec, b: Rat) -> Self {
        self.ineqs.push((a, b));
        self
    }

    pub fn with_eq(mut self, a: RVec, b: Rat) -> Self {
        self.eqs.push((a, b));
        self
    }

    pub fn contains(&self, x: &RVec) -> bool {
        x.dim() == self.dim
            && self.ineqs.iter().all(|(a, b)| a.dot(x) <= *b)
            && self.eqs.iter().all(|(a, b)| a.dot(x) == *b)
    }

    /// Indices of inequality rows tight at `x`.
    pub fn active_ineqs(&self, x: &RVec) -> Vec<usize> {
        (0..self.ineqs.len()).filter(|&i| self.ineqs[i].0.dot(x) == self.ineqs[i].1).collect()
    }

    pub fn lp(&self) -> LinearProgram {
        let mut lp = LinearProgram::new(self.dim);
        for (a, b) in &self.ineqs {
            lp.add_ineq(a.clone(), b.clone());
        }
        for (a, b) in &self.eqs {
            lp.add_eq(a.clone(), b.clone());
        }
        lp
    }

    pub fn feasible_point(&self) -> Option<RVec> {
        self.lp().feasible_point()
    }

    pub fn is_empty(&self) -> bool {
        self.feasible_point().is_none()
    }

    pub fn is_interior(&self, x: &RVec) -> bool {
        self.contains(x)
            && self.eqs.iter().all(|(a, _)| a.is_zero())
            && self.ineqs.iter().all(|(a, b)| a.is_zero() || a.dot(x) < *b)
    }

    pub fn is_full_dimensional(&self) -> bool {
        if self.eqs.iter().any(|(a, _)| !a.is_zero()) {
            return self.dim == 0 && !self.is_empty();
        }
        let d = self.dim;
        let mut lp = LinearProgram::new(d + 1);
        for (a, b) in &self.ineqs {
            let t = if a.is_zero() { Rat::zero() } else { Rat::one() };
            lp.add_ineq(a.concat(&RVec::new(vec![t])), b.clone());
        }
        lp.add_ineq(RVec::unit(d + 1, d), Rat::one());
        match lp.maximize(&RVec::unit(d + 1, d)) {
            LpResult::Optimal { value, .. } => value.is_positive(),
            _ => false,
        }
    }

    pub fn is_cone(&self) -> bool {
        self.ineqs.iter().chain(&self.eqs).all(|(_, b)| b.is_zero())
    }

    /// Rows of a polyhedron with zero right-hand sides as a cone.
    pub fn as_cone(&self) -> ConeH {
        ConeH::raw(
            self.dim,
            self.ineqs.iter().map(|(a, _)| a.clone()).collect(),
            self.eqs.iter().map(|(a, _)| a.clone()).collect(),
        )
    }

    pub fn recession_cone(&self) -> ConeH {
        self.as_cone()
    }

    pub fn intersect(&self, other: &ConvexPoly) -> ConvexPoly {
        let mut c = self.clone();
        c.ineqs.extend(other.ineqs.iter().cloned());
        c.eqs.extend(other.eqs.iter().cloned());
        c
    }

    pub fn lift(&self, dim: usize, coords: &[usize]) -> ConvexPoly {
        Self::raw(
            dim,
            self.ineqs.iter().map(|(a, b)| (a.embed(dim, coords), b.clone())).collect(),
            self.eqs.iter().map(|(a, b)| (a.embed(dim, coords), b.clone())).collect(),
        )
    }

    pub fn product(&self, other: &ConvexPoly) -> ConvexPoly {
        let d = self.dim + other.dim;
        let first: Vec<usize> = (0..self.dim).collect();
        let second: Vec<usize> = (self.dim..d).collect();
        self.lift(d, &first).intersect(&other.lift(d, &second))
    }

    /// `{(x, t) : A x - b t <= 0, E x - f t = 0, t >= 0}`.
    pub fn homogenize(&self) -> ConeH {
        let d = self.dim;
        let ext = |(a, b): &(RVec, Rat)| a.concat(&RVec::new(vec![-b.clone()]));
        let mut ineqs: Vec<RVec> = self.ineqs.iter().map(ext).collect();
        ineqs.push(RVec::unit(d + 1, d).neg());
        ConeH::raw(d + 1, ineqs, self.eqs.iter().map(ext).collect())
    }

    /// Inverse of `homogenize`; `None` when the cone lies in `t = 0`.
    pub fn dehomogenize(cone: &ConeH) -> Option<ConvexPoly> {
        let d = cone.dim() - 1;
        if !cone.generators().rays.iter().any(|r| r[d].is_positive()) {
            return None;
        }
        let split = |a: &RVec| (a.slice(0, d), -a[d].clone());
        let ineqs = cone.ineqs().iter().map(split).filter(|(a, b)| !(a.is_zero() && !b.is_negative())).collect();
        let eqs = cone.eqs().iter().map(split).filter(|(a, b)| !(a.is_zero() && b.is_zero())).collect();
        Some(Self::raw(d, ineqs, eqs))
    }

    /// Image under `x -> M x`. `None` for an empty polyhedron.
    pub fn linear_image(&self, m: &[RVec]) -> Option<ConvexPoly> {
        let d = self.dim;
        let mut ext: Vec<RVec> = m.iter().map(|r| r.concat(&RVec::zeros(1))).collect();
        ext.push(RVec::unit(d + 1, d));
        let img = self.homogenize().linear_image(&ext);
        Self::dehomogenize(&img)
    }

    pub fn project(&self, keep: &[usize]) -> Option<ConvexPoly> {
        let m: Vec<RVec> = keep.iter().map(|&i| RVec::unit(self.dim, i)).collect();
        self.linear_image(&m)
    }

    /// Vertex-type generators (points with `t = 1`) and recession generators.
    pub fn vertex_generators(&self) -> (Vec<RVec>, Vec<RVec>, Vec<RVec>) {
        let d = self.dim;
        let h = self.homogenize();
        let g = h.generators();
        let mut points = Vec::new();
        let mut rays = Vec::new();
        for r in &g.rays {
            if r[d].is_positive() {
                points.push(r.slice(0, d).scale(&(Rat::one() / &r[d])));
            } else {
                rays.push(r.slice(0, d));
            }
        }
        let lines = g.lines.iter().map(|l| l.slice(0, d)).collect();
        (points, rays, lines)
    }

    pub fn minkowski_sum(&self, other: &ConvexPoly) -> Option<ConvexPoly> {
        let d = self.dim;
        let (p1, r1, l1) = self.vertex_generators();
        let (p2, r2, l2) = other.vertex_generators();
        let one = RVec::new(vec![Rat::one()]);
        let zero = RVec::zeros(1);
        let mut rays = Vec::new();
        for a in &p1 {
            for b in &p2 {
                rays.push(a.add(b).concat(&one));
            }
        }
        rays.extend(r1.iter().chain(&r2).map(|r| r.concat(&zero)));
        let lines = l1.iter().chain(&l2).map(|l| l.concat(&zero)).collect();
        let cone = ConeH::from_generators(d + 1, rays, lines).ok()?;
        Self::dehomogenize(&cone)
    }

    /// Average of the vertices plus the sum of recession generators.
    pub fn relative_interior_point(&self) -> Option<RVec> {
        let (points, rays, _) = self.vertex_generators();
        if points.is_empty() {
            return None;
        }
        let mut s = RVec::zeros(self.dim);
        for p in &points {
            s = s.add(p);
        }
        s = s.scale(&(Rat::one() / Rat::from_integer((points.len() as i64).into())));
        for r in &rays {
            s = s.add(r);
        }
        Some(s)
    }

    fn max_over(&self, c: &RVec) -> LpResult {
        self.lp().maximize(c)
    }

    pub fn is_subset_of(&self, other: &ConvexPoly) -> bool {
        if self.is_empty() {
            return true;
        }
        let bounded_by = |a: &RVec, b: &Rat| match self.max_over(a) {
            LpResult::Optimal { value, .. } => value <= *b,
            _ => false,
        };
        other.ineqs.iter().all(|(a, b)| bounded_by(a, b))
            && other.eqs.iter().all(|(a, b)| bounded_by(a, b) && bounded_by(&a.neg(), &-b.clone()))
    }

    pub fn same_set(&self, other: &ConvexPoly) -> bool {
        self.is_subset_of(other) && other.is_subset_of(self)
    }

    /// Unique description derived from the canonical homogenized cone.
    pub fn canonical(&self) -> ConvexPoly {
        if self.is_empty() {
            return Self::raw(self.dim, vec![(RVec::zeros(self.dim), -Rat::one())], Vec::new());
        }
        let c = self.homogenize().canonical();
        Self::dehomogenize(&c).expect("nonempty")
    }

    /// `{x : (x, w) in P}` for a trailing block `w`.
    pub fn slice_tail(&self, w: &RVec) -> ConvexPoly {
        let n = self.dim - w.dim();
        let split = |(a, b): &(RVec, Rat)| (a.slice(0, n), b - a.slice(n, self.dim).dot(w));
        Self::raw(n, self.ineqs.iter().map(split).collect(), self.eqs.iter().map(split).collect())
    }

    /// `{y : (w, y) in P}` for a leading block `w`.
    pub fn slice_head(&self, w: &RVec) -> ConvexPoly {
        let n = w.dim();
        let split = |(a, b): &(RVec, Rat)| (a.slice(n, self.dim), b - a.slice(0, n).dot(w));
        Self::raw(self.dim - n, self.ineqs.iter().map(split).collect(), self.eqs.iter().map(split).collect())
    }

    /// Image of the polyhedron under `x -> -x`.
    pub fn neg(&self) -> ConvexPoly {
        Self::raw(
            self.dim,
            self.ineqs.iter().map(|(a, b)| (a.neg(), b.clone())).collect(),
            self.eqs.iter().map(|(a, b)| (a.neg(), b.clone())).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::rat;

    fn square() -> ConvexPoly {
        let mut p = ConvexPoly::whole(2);
        for i in 0..2 {
            p = p.with_ineq(RVec::unit(2, i), rat(1)).with_ineq(RVec::unit(2, i).neg(), rat(0));
        }
        p
    }

    #[test]
    fn projection_of_triangle() {
        // {(x, y) : 0 <= y <= x <= 1} projected to y is [0, 1]
        let t = ConvexPoly::whole(2)
            .with_ineq(RVec::from_ints(&[0, -1]), rat(0))
            .with_ineq(RVec::from_ints(&[-1, 1]), rat(0))
            .with_ineq(RVec::from_ints(&[1, 0]), rat(1));
        let p = t.project(&[1]).unwrap();
        let expected =
            ConvexPoly::whole(1).with_ineq(RVec::from_ints(&[1]), rat(1)).with_ineq(RVec::from_ints(&[-1]), rat(0));
        assert!(p.same_set(&expected));
    }

    #[test]
    fn minkowski_of_squares() {
        let s = square().minkowski_sum(&square()).unwrap();
        assert!(s.contains(&RVec::from_ints(&[2, 2])));
        assert!(!s.contains(&RVec::from_ints(&[3, 0])));
        assert!(s.is_full_dimensional());
    }

    #[test]
    fn canonical_is_representation_independent() {
        let redundant = square().with_ineq(RVec::from_ints(&[1, 1]), rat(5));
        assert_eq!(redundant.canonical(), square().canonical());
    }

    #[test]
    fn empty_detection() {
        let e =
            ConvexPoly::whole(1).with_ineq(RVec::from_ints(&[1]), rat(-1)).with_ineq(RVec::from_ints(&[-1]), rat(0));
        assert!(e.is_empty());
        assert!(e.project(&[0]).is_none());
    }
}

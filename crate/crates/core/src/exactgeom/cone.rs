//! Polyhedral cones `{x : A x <= 0, E x = 0}` with lazily computed generators.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_traits::Zero;

use super::dd::double_description;
use super::linalg::{canonical_span, nullspace, rank, reject};
use super::poly::ConvexPoly;
use super::rat::{RVec, Rat};
use crate::error::{check_dim, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Generators {
    pub rays: Vec<RVec>,
    pub lines: Vec<RVec>,
}

#[derive(Clone, Debug)]
pub struct ConeH {
    dim: usize,
    ineqs: Vec<RVec>,
    eqs: Vec<RVec>,
    gens: OnceLock<Generators>,
}

impl ConeH {
    pub fn new(dim: usize, ineqs: Vec<RVec>, eqs: Vec<RVec>) -> Result<Self> {
        for r in ineqs.iter().chain(&eqs) {
            check_dim(dim, r.dim())?;
        }
        Ok(Self::raw(dim, ineqs, eqs))
    }

    pub(crate) fn raw(dim: usize, ineqs: Vec<RVec>, eqs: Vec<RVec>) -> Self {
        ConeH { dim, ineqs, eqs, gens: OnceLock::new() }
    }

    pub fn whole(dim: usize) -> Self {
        Self::raw(dim, Vec::new(), Vec::new())
    }

    pub fn zero(dim: usize) -> Self {
        let c = Self::raw(dim, Vec::new(), (0..dim).map(|i| RVec::unit(dim, i)).collect());
        let _ = c.gens.set(Generators::default());
        c
    }

    /// `cone(rays) + span(lines)`.
    pub fn from_generators(dim: usize, rays: Vec<RVec>, lines: Vec<RVec>) -> Result<Self> {
        for r in rays.iter().chain(&lines) {
            check_dim(dim, r.dim())?;
        }
        // H-rep of K is the V-rep of its polar.
        let dual = double_description(dim, &rays, &lines);
        let c = Self::raw(dim, dual.rays, dual.lines);
        let primal = double_description(dim, &c.ineqs, &c.eqs);
        let _ = c.gens.set(Generators { rays: primal.rays, lines: primal.lines });
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ineqs(&self) -> &[RVec] {
        &self.ineqs
    }

    pub fn eqs(&self) -> &[RVec] {
        &self.eqs
    }

    pub fn generators(&self) -> &Generators {
        self.gens.get_or_init(|| {
            let dd = double_description(self.dim, &self.ineqs, &self.eqs);
            Generators { rays: dd.rays, lines: dd.lines }
        })
    }

    /// Same cone with generators computed.
    pub fn dd_convert(&self) -> ConeH {
        self.generators();
        self.clone()
    }

    pub fn contains(&self, x: &RVec) -> bool {
        self.ineqs.iter().all(|a| a.dot(x) <= Rat::zero()) && self.eqs.iter().all(|e| e.dot(x).is_zero())
    }

    pub fn is_zero(&self) -> bool {
        let g = self.generators();
        g.rays.is_empty() && g.lines.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.generators().lines.len() == self.dim
    }

    /// Dimension of the linear span.
    pub fn span_dim(&self) -> usize {
        let g = self.generators();
        let all: Vec<RVec> = g.rays.iter().chain(&g.lines).cloned().collect();
        rank(&all, self.dim)
    }

    pub fn is_subset_of(&self, other: &ConeH) -> bool {
        let g = self.generators();
        g.rays.iter().all(|r| other.contains(r))
            && g.lines.iter().all(|l| other.contains(l) && other.contains(&l.neg()))
    }

    pub fn same_set(&self, other: &ConeH) -> bool {
        self.dim == other.dim && self.is_subset_of(other) && other.is_subset_of(self)
    }

    pub fn intersect(&self, other: &ConeH) -> ConeH {
        let mut ineqs = self.ineqs.clone();
        ineqs.extend(other.ineqs.iter().cloned());
        let mut eqs = self.eqs.clone();
        eqs.extend(other.eqs.iter().cloned());
        Self::raw(self.dim, ineqs, eqs)
    }

    pub fn minkowski_sum(&self, other: &ConeH) -> ConeH {
        let (a, b) = (self.generators(), other.generators());
        let rays = a.rays.iter().chain(&b.rays).cloned().collect();
        let lines = a.lines.iter().chain(&b.lines).cloned().collect();
        Self::from_generators(self.dim, rays, lines).expect("same dimension")
    }

    pub fn polar(&self) -> ConeH {
        let g = self.generators();
        let c = Self::raw(self.dim, g.rays.clone(), g.lines.clone());
        let _ = c.gens.set(Generators {
            rays: canonical_rays(&self.ineqs, &self.eqs, self.dim),
            lines: canonical_span(&self.eqs, self.dim),
        });
        c
    }

    pub fn neg(&self) -> ConeH {
        let c = Self::raw(self.dim, self.ineqs.iter().map(|a| a.neg()).collect(), self.eqs.clone());
        if let Some(g) = self.gens.get() {
            let _ = c.gens.set(Generators { rays: g.rays.iter().map(|r| r.neg()).collect(), lines: g.lines.clone() });
        }
        c
    }

    /// Rows embedded into `dim` coordinates at `coords`; the other coordinates are free.
    pub fn lift(&self, dim: usize, coords: &[usize]) -> ConeH {
        Self::raw(
            dim,
            self.ineqs.iter().map(|a| a.embed(dim, coords)).collect(),
            self.eqs.iter().map(|a| a.embed(dim, coords)).collect(),
        )
    }

    pub fn product(&self, other: &ConeH) -> ConeH {
        let d = self.dim + other.dim;
        let first: Vec<usize> = (0..self.dim).collect();
        let second: Vec<usize> = (self.dim..d).collect();
        self.lift(d, &first).intersect(&other.lift(d, &second))
    }

    /// Image under `x -> M x`, rows of `M` given.
    pub fn linear_image(&self, m: &[RVec]) -> ConeH {
        let g = self.generators();
        let img = |v: &RVec| RVec::new(m.iter().map(|row| row.dot(v)).collect());
        Self::from_generators(m.len(), g.rays.iter().map(img).collect(), g.lines.iter().map(img).collect())
            .expect("image dimension")
    }

    pub fn project(&self, keep: &[usize]) -> ConeH {
        let m: Vec<RVec> = keep.iter().map(|&i| RVec::unit(self.dim, i)).collect();
        self.linear_image(&m)
    }

    /// `{x : (x, w) in K}` for a trailing block `w`.
    pub fn slice_tail(&self, w: &RVec) -> ConvexPoly {
        let n = self.dim - w.dim();
        let split = |a: &RVec| (a.slice(0, n), -a.slice(n, self.dim).dot(w));
        ConvexPoly::raw(n, self.ineqs.iter().map(split).collect(), self.eqs.iter().map(split).collect())
    }

    pub fn as_poly(&self) -> ConvexPoly {
        ConvexPoly::raw(
            self.dim,
            self.ineqs.iter().map(|a| (a.clone(), Rat::zero())).collect(),
            self.eqs.iter().map(|a| (a.clone(), Rat::zero())).collect(),
        )
    }

    /// Unique H-representation: equalities span the orthogonal complement of the
    /// linear hull (RREF, primitive), inequalities are the facet normals inside the hull.
    pub fn canonical(&self) -> ConeH {
        let g = self.generators();
        let mut spanning: Vec<RVec> = g.rays.clone();
        spanning.extend(g.lines.iter().cloned());
        let hull = canonical_span(&spanning, self.dim);
        let eqs = canonical_span(&nullspace(&hull, self.dim), self.dim);
        let dual = double_description(self.dim, &g.rays, &g.lines);
        let mut ineqs: Vec<RVec> =
            dual.rays.iter().map(|r| reject(r, &eqs).primitive()).filter(|r| !r.is_zero()).collect();
        ineqs.sort();
        ineqs.dedup();
        let c = Self::raw(self.dim, ineqs, eqs);
        let _ = c.gens.set(g.clone());
        c
    }

    /// Ordering key on canonical forms.
    pub fn canonical_key(&self) -> (Vec<RVec>, Vec<RVec>) {
        (self.ineqs.clone(), self.eqs.clone())
    }

    /// Sum of extreme rays and lines of `K`: a relative interior point when `K` is pointed.
    pub fn relative_interior_point(&self) -> RVec {
        let g = self.generators();
        let mut s = RVec::zeros(self.dim);
        for r in &g.rays {
            s = s.add(r);
        }
        s
    }
}

fn canonical_rays(ineqs: &[RVec], eqs: &[RVec], dim: usize) -> Vec<RVec> {
    let lines = canonical_span(eqs, dim);
    let mut v: Vec<RVec> = ineqs.iter().map(|a| reject(a, &lines).primitive()).filter(|a| !a.is_zero()).collect();
    v.sort();
    v.dedup();
    v
}

pub(crate) fn cmp_canonical(a: &ConeH, b: &ConeH) -> Ordering {
    a.span_dim().cmp(&b.span_dim()).then_with(|| a.canonical_key().cmp(&b.canonical_key()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(ineqs: &[&[i64]], eqs: &[&[i64]], d: usize) -> ConeH {
        ConeH::new(
            d,
            ineqs.iter().map(|r| RVec::from_ints(r)).collect(),
            eqs.iter().map(|r| RVec::from_ints(r)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn canonical_forms_agree_for_equal_cones() {
        let a = c(&[&[-1, 0], &[0, -1], &[-1, -1]], &[], 2);
        let b = ConeH::from_generators(2, vec![RVec::from_ints(&[3, 0]), RVec::from_ints(&[0, 1])], vec![]).unwrap();
        assert_eq!(a.canonical().canonical_key(), b.canonical().canonical_key());
    }

    #[test]
    fn polar_of_orthant() {
        let k = c(&[&[-1, 0], &[0, -1]], &[], 2);
        let p = k.polar();
        assert!(p.contains(&RVec::from_ints(&[-1, -2])));
        assert!(!p.contains(&RVec::from_ints(&[1, 0])));
        assert!(p.polar().same_set(&k));
    }

    #[test]
    fn zero_and_whole() {
        assert!(ConeH::zero(3).is_zero());
        assert!(ConeH::whole(2).is_whole());
        let line = c(&[], &[&[1, 1]], 2);
        assert_eq!(line.span_dim(), 1);
        assert!(!line.is_zero());
    }
}

//! Finite unions of cones and of polyhedra.

use super::cone::{cmp_canonical, ConeH};
use super::poly::ConvexPoly;
use super::rat::RVec;
use super::region::uncovered_point;
use crate::error::{check_dim, Result};

/// Outcome of an inclusion test; the witness lies in the left side only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion {
    pub holds: bool,
    pub witness: Option<RVec>,
}

impl Inclusion {
    pub fn yes() -> Self {
        Inclusion { holds: true, witness: None }
    }
}

/// Union of polyhedral cones. No parts means the empty set.
#[derive(Clone, Debug)]
pub struct ConeUnion {
    dim: usize,
    parts: Vec<ConeH>,
}

#[derive(Clone, Debug)]
pub struct UnionOps {
    pub subset: Inclusion,
    pub equal: bool,
    pub intersection: ConeUnion,
    pub minkowski_sum: ConeUnion,
}

impl ConeUnion {
    pub fn new(dim: usize, parts: Vec<ConeH>) -> Result<Self> {
        for p in &parts {
            check_dim(dim, p.dim())?;
        }
        Ok(ConeUnion { dim, parts })
    }

    pub(crate) fn raw(dim: usize, parts: Vec<ConeH>) -> Self {
        ConeUnion { dim, parts }
    }

    pub fn empty(dim: usize) -> Self {
        ConeUnion { dim, parts: Vec::new() }
    }

    pub fn single(c: ConeH) -> Self {
        ConeUnion { dim: c.dim(), parts: vec![c] }
    }

    pub fn zero(dim: usize) -> Self {
        Self::single(ConeH::zero(dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parts(&self) -> &[ConeH] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True for the set `{0}`.
    pub fn is_zero(&self) -> bool {
        !self.parts.is_empty() && self.parts.iter().all(|p| p.is_zero())
    }

    pub fn contains(&self, x: &RVec) -> bool {
        self.parts.iter().any(|p| p.contains(x))
    }

    /// Canonical parts, sorted, with parts contained in another part removed.
    pub fn canonical(&self) -> ConeUnion {
        let mut parts: Vec<ConeH> = self.parts.iter().map(|p| p.canonical()).collect();
        parts.sort_by(cmp_canonical);
        parts.dedup_by(|a, b| a.canonical_key() == b.canonical_key());
        let keep: Vec<bool> =
            (0..parts.len()).map(|i| !(0..parts.len()).any(|j| j != i && parts[i].is_subset_of(&parts[j]))).collect();
        let parts = parts.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect();
        ConeUnion { dim: self.dim, parts }
    }

    /// Inclusion in `other`, testing parts in ascending dimension.
    pub fn subset_of(&self, other: &ConeUnion) -> Inclusion {
        let mut order: Vec<usize> = (0..self.parts.len()).collect();
        order.sort_by_key(|&i| self.parts[i].span_dim());
        let cover: Vec<ConvexPoly> = other.parts.iter().map(|p| p.as_poly()).collect();
        for i in order {
            let part = &self.parts[i];
            if other.parts.iter().any(|q| part.is_subset_of(q)) {
                continue;
            }
            if let Some(w) = uncovered_point(&part.as_poly(), &cover) {
                return Inclusion { holds: false, witness: Some(w.primitive()) };
            }
        }
        Inclusion::yes()
    }

    pub fn same_set(&self, other: &ConeUnion) -> bool {
        self.subset_of(other).holds && other.subset_of(self).holds
    }

    pub fn intersect(&self, other: &ConeUnion) -> ConeUnion {
        let mut parts = Vec::new();
        for a in &self.parts {
            for b in &other.parts {
                parts.push(a.intersect(b));
            }
        }
        ConeUnion { dim: self.dim, parts }
    }

    pub fn minkowski_sum(&self, other: &ConeUnion) -> ConeUnion {
        let mut parts = Vec::new();
        for a in &self.parts {
            for b in &other.parts {
                parts.push(a.minkowski_sum(b));
            }
        }
        ConeUnion { dim: self.dim, parts }
    }

    pub fn neg(&self) -> ConeUnion {
        ConeUnion { dim: self.dim, parts: self.parts.iter().map(|p| p.neg()).collect() }
    }

    pub fn product(&self, other: &ConeUnion) -> ConeUnion {
        let mut parts = Vec::new();
        for a in &self.parts {
            for b in &other.parts {
                parts.push(a.product(b));
            }
        }
        ConeUnion { dim: self.dim + other.dim, parts }
    }

    /// `{x : (x, w) in K}` for a trailing block `w`.
    pub fn slice_tail(&self, w: &RVec) -> PolyUnion {
        let n = self.dim - w.dim();
        PolyUnion::raw(n, self.parts.iter().map(|p| p.slice_tail(w)).filter(|p| !p.is_empty()).collect())
    }

    pub fn ops(&self, other: &ConeUnion) -> UnionOps {
        let subset = self.subset_of(other);
        let equal = subset.holds && other.subset_of(self).holds;
        UnionOps { subset, equal, intersection: self.intersect(other), minkowski_sum: self.minkowski_sum(other) }
    }

    pub fn to_poly_union(&self) -> PolyUnion {
        PolyUnion::raw(self.dim, self.parts.iter().map(|p| p.as_poly()).collect())
    }
}

/// Union of closed convex polyhedra. No parts means the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyUnion {
    dim: usize,
    parts: Vec<ConvexPoly>,
}

impl PolyUnion {
    pub fn new(dim: usize, parts: Vec<ConvexPoly>) -> Result<Self> {
        for p in &parts {
            check_dim(dim, p.dim())?;
        }
        Ok(PolyUnion { dim, parts })
    }

    pub(crate) fn raw(dim: usize, parts: Vec<ConvexPoly>) -> Self {
        PolyUnion { dim, parts }
    }

    pub fn empty(dim: usize) -> Self {
        PolyUnion { dim, parts: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn parts(&self) -> &[ConvexPoly] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|p| p.is_empty())
    }

    pub fn contains(&self, x: &RVec) -> bool {
        self.parts.iter().any(|p| p.contains(x))
    }

    /// True for the set `{0}`.
    pub fn is_origin(&self) -> bool {
        let o = ConvexPoly::point(&RVec::zeros(self.dim));
        !self.is_empty() && self.subset_of(&PolyUnion::raw(self.dim, vec![o])).holds
    }

    pub fn canonical(&self) -> PolyUnion {
        let mut parts: Vec<ConvexPoly> = self.parts.iter().filter(|p| !p.is_empty()).map(|p| p.canonical()).collect();
        parts.sort();
        parts.dedup();
        let keep: Vec<bool> =
            (0..parts.len()).map(|i| !(0..parts.len()).any(|j| j != i && parts[i].is_subset_of(&parts[j]))).collect();
        let parts = parts.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect();
        PolyUnion { dim: self.dim, parts }
    }

    pub fn subset_of(&self, other: &PolyUnion) -> Inclusion {
        for part in &self.parts {
            if other.parts.iter().any(|q| part.is_subset_of(q)) {
                continue;
            }
            if let Some(w) = uncovered_point(part, &other.parts) {
                return Inclusion { holds: false, witness: Some(w) };
            }
        }
        Inclusion::yes()
    }

    pub fn same_set(&self, other: &PolyUnion) -> bool {
        self.subset_of(other).holds && other.subset_of(self).holds
    }

    pub fn minkowski_sum(&self, other: &PolyUnion) -> PolyUnion {
        let mut parts = Vec::new();
        for a in &self.parts {
            for b in &other.parts {
                if let Some(s) = a.minkowski_sum(b) {
                    parts.push(s);
                }
            }
        }
        PolyUnion { dim: self.dim, parts }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ray_cone(rays: &[&[i64]]) -> ConeH {
        let d = rays[0].len();
        ConeH::from_generators(d, rays.iter().map(|r| RVec::from_ints(r)).collect(), vec![]).unwrap()
    }

    #[test]
    fn union_of_quadrants_covers_halfplane() {
        let half = ConeUnion::single(ray_cone(&[&[1, 0], &[-1, 0], &[0, 1]]));
        let quads = ConeUnion::new(2, vec![ray_cone(&[&[1, 0], &[0, 1]]), ray_cone(&[&[-1, 0], &[0, 1]])]).unwrap();
        assert!(half.same_set(&quads));
    }

    #[test]
    fn witness_lies_outside() {
        let a = ConeUnion::single(ray_cone(&[&[1, 0], &[0, 1]]));
        let b = ConeUnion::single(ray_cone(&[&[1, 0], &[1, 1]]));
        let inc = a.subset_of(&b);
        assert!(!inc.holds);
        let w = inc.witness.unwrap();
        assert!(a.contains(&w) && !b.contains(&w));
    }

    #[test]
    fn canonical_removes_contained_parts() {
        let u = ConeUnion::new(2, vec![ray_cone(&[&[1, 0]]), ray_cone(&[&[1, 0], &[0, 1]])]).unwrap();
        assert_eq!(u.canonical().parts().len(), 1);
    }
}

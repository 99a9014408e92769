//! Radial, Fréchet, proximal and limiting normal cones relative to a set.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{ConeH, ConeUnion, ConvexPoly, RVec, Rat};
use crate::stratify::{local_cells_within, PolySet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConeKind {
    Proximal,
    Frechet,
    Limiting,
}

impl ConeKind {
    pub fn name(self) -> &'static str {
        match self {
            ConeKind::Proximal => "proximal",
            ConeKind::Frechet => "frechet",
            ConeKind::Limiting => "limiting",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConeRequest {
    pub omega: PolySet,
    pub wrt: ConvexPoly,
    pub point: RVec,
    pub kind: ConeKind,
}

impl ConeRequest {
    /// Empty union when the point is outside `omega ∩ wrt`.
    pub fn evaluate(&self) -> Result<ConeUnion> {
        let d = self.point.dim();
        match self.kind {
            ConeKind::Limiting => limiting_normal_wrt(&self.omega, &self.wrt, &self.point),
            ConeKind::Frechet => Ok(frechet_normal_wrt(&self.omega, &self.wrt, &self.point)?
                .map(ConeUnion::single)
                .unwrap_or_else(|| ConeUnion::empty(d))),
            ConeKind::Proximal => Ok(proximal_normal_wrt(&self.omega, &self.wrt, &self.point)?
                .map(ConeUnion::single)
                .unwrap_or_else(|| ConeUnion::empty(d))),
        }
    }
}

fn describe(x: &RVec) -> String {
    x.to_string()
}

/// Tangent directions of a convex polyhedron at one of its points.
pub fn radial_cone(c: &ConvexPoly, x: &RVec) -> Result<ConeH> {
    check_dim(c.dim(), x.dim())?;
    if !c.contains(x) {
        return Err(Error::PointOutside { point: describe(x), set: "the constraint set".into() });
    }
    Ok(tangent_cone(c, x))
}

fn tangent_cone(c: &ConvexPoly, x: &RVec) -> ConeH {
    let ineqs = c.active_ineqs(x).into_iter().map(|i| c.ineqs()[i].0.clone()).collect();
    let eqs = c.eqs().iter().map(|(a, _)| a.clone()).collect();
    ConeH::raw(c.dim(), ineqs, eqs)
}

/// Classical Fréchet normal cone of a union of polyhedra.
pub fn frechet_normal(omega: &PolySet, x: &RVec) -> Result<ConeH> {
    check_dim(omega.dim(), x.dim())?;
    let active = omega.active_pieces(x);
    if active.is_empty() {
        return Err(Error::PointOutside { point: describe(x), set: "omega".into() });
    }
    let mut out = ConeH::whole(x.dim());
    for i in active {
        out = out.intersect(&tangent_cone(&omega.pieces()[i], x).polar());
    }
    Ok(out)
}

fn restricted(omega: &PolySet, wrt: &ConvexPoly) -> PolySet {
    omega.intersect_poly(wrt)
}

/// `N̂(x; omega ∩ C) ∩ R(x; C)`; `None` when `x` is outside `omega ∩ C`.
pub fn frechet_normal_wrt(omega: &PolySet, wrt: &ConvexPoly, x: &RVec) -> Result<Option<ConeH>> {
    check_dim(omega.dim(), x.dim())?;
    check_dim(wrt.dim(), x.dim())?;
    if !wrt.contains(x) || !omega.contains(x) {
        return Ok(None);
    }
    let inter = restricted(omega, wrt);
    let n = frechet_normal(&inter, x)?;
    Ok(Some(n.intersect(&tangent_cone(wrt, x))))
}

/// For polyhedral data the proximal and Fréchet cones relative to `C` coincide.
pub fn proximal_normal_wrt(omega: &PolySet, wrt: &ConvexPoly, x: &RVec) -> Result<Option<ConeH>> {
    frechet_normal_wrt(omega, wrt, x)
}

/// Smallest `σ ≥ 0` with `⟨v, x' − x⟩ ≤ σ‖x' − x‖²` over the grid points
/// `x' = x + step·k`, `k ∈ {−2,…,2}ⁿ`, that lie in `omega ∩ C`. Exact; used to
/// validate proximal normals, for which it is `0` once `step` is below the local scale.
pub fn proximal_sigma(omega: &PolySet, wrt: &ConvexPoly, x: &RVec, v: &RVec, step: &Rat) -> Result<Rat> {
    check_dim(omega.dim(), x.dim())?;
    check_dim(omega.dim(), v.dim())?;
    check_dim(omega.dim(), wrt.dim())?;
    let d = x.dim();
    let mut sigma = Rat::zero();
    let mut k = vec![-2i64; d];
    loop {
        let offset = RVec::from_ints(&k).scale(step);
        if !offset.is_zero() {
            let y = x.add(&offset);
            if wrt.contains(&y) && omega.contains(&y) {
                let lhs = v.dot(&offset);
                if lhs > Rat::zero() {
                    let r = lhs / offset.dot(&offset);
                    if r > sigma {
                        sigma = r;
                    }
                }
            }
        }
        let Some(i) = k.iter().position(|&c| c < 2) else { break };
        k[i] += 1;
        k[..i].iter_mut().for_each(|c| *c = -2);
    }
    Ok(sigma)
}

/// One cone per local cell of `omega ∩ C`, without removing contained parts.
pub fn limiting_normal_wrt_raw(omega: &PolySet, wrt: &ConvexPoly, x: &RVec) -> Result<ConeUnion> {
    limiting_from(omega, wrt, x, ConeKind::Frechet)
}

/// Limiting cone built from proximal or Fréchet cones at nearby points.
pub fn limiting_from(omega: &PolySet, wrt: &ConvexPoly, x: &RVec, from: ConeKind) -> Result<ConeUnion> {
    check_dim(omega.dim(), x.dim())?;
    check_dim(wrt.dim(), x.dim())?;
    let d = x.dim();
    if !wrt.contains(x) || !omega.contains(x) {
        return Ok(ConeUnion::empty(d));
    }
    let c = PolySet::from(wrt.clone());
    let cells = local_cells_within(&[omega, &c], &[true, true], x)?;
    let mut seen: BTreeMap<(Vec<RVec>, Vec<RVec>), ()> = BTreeMap::new();
    let mut parts = Vec::new();
    for cell in cells {
        let cone = match from {
            ConeKind::Proximal => proximal_normal_wrt(omega, wrt, &cell.witness)?,
            _ => frechet_normal_wrt(omega, wrt, &cell.witness)?,
        }
        .expect("cell lies in omega ∩ C");
        let canon = cone.canonical();
        if seen.insert(canon.canonical_key(), ()).is_none() {
            parts.push(canon);
        }
    }
    Ok(ConeUnion::raw(d, parts))
}

/// Limiting normal cone relative to `C`, canonical.
pub fn limiting_normal_wrt(omega: &PolySet, wrt: &ConvexPoly, x: &RVec) -> Result<ConeUnion> {
    Ok(limiting_normal_wrt_raw(omega, wrt, x)?.canonical())
}

/// Classical limiting normal cone.
pub fn limiting_normal(omega: &PolySet, x: &RVec) -> Result<ConeUnion> {
    if !omega.contains(x) {
        return Err(Error::PointOutside { point: describe(x), set: "omega".into() });
    }
    limiting_normal_wrt(omega, &ConvexPoly::whole(x.dim()), x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat;

    fn omega1() -> PolySet {
        // z >= x in R^3
        PolySet::from(ConvexPoly::whole(3).with_ineq(RVec::from_ints(&[1, 0, -1]), rat(0)))
    }

    fn c() -> ConvexPoly {
        ConvexPoly::nonneg(3, &[0])
    }

    #[test]
    fn proximal_sigma_sees_a_nearby_piece() {
        let near = ConvexPoly::whole(1).with_ineq(RVec::from_ints(&[-1]), crate::exactgeom::ratio(-1, 16));
        let left = ConvexPoly::whole(1).with_ineq(RVec::from_ints(&[1]), rat(0));
        let omega = PolySet::new(1, vec![left, near]).unwrap();
        let (x, v, whole) = (RVec::zeros(1), RVec::from_ints(&[1]), ConvexPoly::whole(1));
        assert_eq!(proximal_sigma(&omega, &whole, &x, &v, &crate::exactgeom::ratio(1, 32)).unwrap(), rat(16));
        assert!(proximal_sigma(&omega, &whole, &x, &v, &crate::exactgeom::ratio(1, 64)).unwrap().is_zero());
    }

    #[test]
    fn frechet_wrt_at_origin() {
        let n = frechet_normal_wrt(&omega1(), &c(), &RVec::zeros(3)).unwrap().unwrap();
        assert!(n.contains(&RVec::from_ints(&[1, 0, -1])));
        assert!(n.contains(&RVec::from_ints(&[0, 0, -1])));
        assert!(!n.contains(&RVec::from_ints(&[-1, 0, 0])));
        assert!(!n.contains(&RVec::from_ints(&[0, 1, 0])));
    }

    #[test]
    fn outside_gives_empty_marker() {
        assert!(frechet_normal_wrt(&omega1(), &c(), &RVec::from_ints(&[-1, 0, 0])).unwrap().is_none());
        assert!(limiting_normal_wrt(&omega1(), &c(), &RVec::from_ints(&[1, 0, 0])).unwrap().is_empty());
    }

    #[test]
    fn radial_cone_outside_is_error() {
        assert!(radial_cone(&c(), &RVec::from_ints(&[-1, 0, 0])).is_err());
    }
}

//! Piecewise-linear extended-real functions given by their epigraphs.

use num_traits::{Signed, Zero};

use crate::calculus::{Certificate, TriVerdict};
use crate::cones::{frechet_normal_wrt, limiting_normal_wrt};
use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{ConeUnion, ConvexPoly, PolyUnion, RVec, Rat};
use crate::multimaps::{coderivative_wrt, PolyMultimap};
use crate::stratify::PolySet;

/// `f : ℝⁿ → ℝ ∪ {+∞}` with a polyhedral epigraph in `ℝⁿ⁺¹`, `α` last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLFunc {
    dim: usize,
    epi: PolySet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubdiffKind {
    Frechet,
    Limiting,
    Horizon,
}

impl SubdiffKind {
    pub fn name(self) -> &'static str {
        match self {
            SubdiffKind::Frechet => "frechet",
            SubdiffKind::Limiting => "limiting",
            SubdiffKind::Horizon => "horizon",
        }
    }

    fn level(self) -> i64 {
        match self {
            SubdiffKind::Horizon => 0,
            _ => -1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SubdiffResult {
    pub kind: SubdiffKind,
    pub wrt: ConvexPoly,
    pub value: PolyUnion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FermatReport {
    pub is_stationary_frechet: bool,
    pub is_stationary_limiting: bool,
}

impl PLFunc {
    /// Each piece must be upward closed in `α` and bound `α` from below.
    pub fn new(dim: usize, pieces: Vec<ConvexPoly>) -> Result<Self> {
        for (i, p) in pieces.iter().enumerate() {
            check_dim(dim + 1, p.dim())?;
            if p.ineqs().iter().any(|(a, _)| a[dim].is_positive()) {
                return Err(Error::InvalidEpigraph(format!("piece {i} is not upward closed in α")));
            }
            if p.eqs().iter().any(|(a, _)| !a[dim].is_zero()) {
                return Err(Error::InvalidEpigraph(format!("piece {i} fixes α by an equation")));
            }
            if !p.ineqs().iter().any(|(a, _)| a[dim].is_negative()) {
                return Err(Error::InvalidEpigraph(format!("piece {i} has no lower bound on α")));
            }
        }
        Ok(PLFunc { dim, epi: PolySet::new(dim + 1, pieces)? })
    }

    /// `x ↦ ⟨a, x⟩ + b` on `dom`.
    pub fn affine_on(dom: &ConvexPoly, a: &RVec, b: Rat) -> Result<Self> {
        let n = dom.dim();
        check_dim(n, a.dim())?;
        let lifted = dom.lift(n + 1, &(0..n).collect::<Vec<_>>());
        let row = a.concat(&RVec::new(vec![Rat::from_integer((-1).into())]));
        Self::new(n, vec![lifted.with_ineq(row, -b)])
    }

    pub fn affine(a: &RVec, b: Rat) -> Result<Self> {
        Self::affine_on(&ConvexPoly::whole(a.dim()), a, b)
    }

    /// `x ↦ max_i ⟨aᵢ, x⟩ + bᵢ`.
    pub fn max_affine(n: usize, terms: &[(RVec, Rat)]) -> Result<Self> {
        let mut p = ConvexPoly::whole(n + 1);
        for (a, b) in terms {
            check_dim(n, a.dim())?;
            p = p.with_ineq(a.concat(&RVec::new(vec![Rat::from_integer((-1).into())])), -b.clone());
        }
        Self::new(n, vec![p])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn epi(&self) -> &PolySet {
        &self.epi
    }

    pub fn dom(&self) -> PolySet {
        self.epi.project(&(0..self.dim).collect::<Vec<_>>())
    }

    /// `f(x)`, or `None` off the domain.
    pub fn eval(&self, x: &RVec) -> Option<Rat> {
        let n = self.dim;
        self.epi.pieces().iter().filter_map(|p| piece_value(p, x, n)).min()
    }

    pub fn epigraphical_map(&self) -> PolyMultimap {
        PolyMultimap::new(self.dim, 1, self.epi.clone()).expect("epigraph has dimension n + 1")
    }
}

/// Least `α` with `(x, α)` in the piece, from the rows bounding `α` below.
fn piece_value(p: &ConvexPoly, x: &RVec, n: usize) -> Option<Rat> {
    let mut best: Option<Rat> = None;
    for (a, b) in p.ineqs() {
        let lhs = a.slice(0, n).dot(x);
        let c = &a[n];
        if c.is_zero() {
            if lhs > *b {
                return None;
            }
        } else {
            // lhs + c α <= b with c < 0
            let bound = (b - lhs) / c;
            if best.as_ref().is_none_or(|v| bound > *v) {
                best = Some(bound);
            }
        }
    }
    if p.eqs().iter().any(|(a, b)| a.slice(0, n).dot(x) != *b) {
        return None;
    }
    best
}

fn base_point(f: &PLFunc, wrt: &ConvexPoly, x: &RVec) -> Result<Option<RVec>> {
    check_dim(f.dim, x.dim())?;
    check_dim(f.dim, wrt.dim())?;
    if !wrt.contains(x) {
        return Ok(None);
    }
    Ok(f.eval(x).map(|v| x.concat(&RVec::new(vec![v]))))
}

fn epi_wrt(wrt: &ConvexPoly) -> ConvexPoly {
    wrt.product(&ConvexPoly::whole(1))
}

/// Epigraph normal cone relative to `C × ℝ`; subdifferentials are its slices.
pub fn subdiff_wrt(f: &PLFunc, wrt: &ConvexPoly, x: &RVec, kind: SubdiffKind) -> Result<SubdiffResult> {
    let n = f.dim;
    let level = RVec::new(vec![Rat::from_integer(kind.level().into())]);
    let value = match base_point(f, wrt, x)? {
        None => PolyUnion::empty(n),
        Some(base) => {
            let cone = match kind {
                SubdiffKind::Frechet => frechet_normal_wrt(f.epi(), &epi_wrt(wrt), &base)?
                    .map(ConeUnion::single)
                    .unwrap_or_else(|| ConeUnion::empty(n + 1)),
                _ => limiting_normal_wrt(f.epi(), &epi_wrt(wrt), &base)?,
            };
            cone.slice_tail(&level).canonical()
        }
    };
    Ok(SubdiffResult { kind, wrt: wrt.clone(), value })
}

/// The same subdifferentials as coderivatives of the epigraphical map at `1` and `0`.
pub fn subdiff_via_coderivative(f: &PLFunc, wrt: &ConvexPoly, x: &RVec, kind: SubdiffKind) -> Result<SubdiffResult> {
    if kind == SubdiffKind::Frechet {
        return Err(Error::Precondition("the coderivative form covers the limiting and horizon kinds".into()));
    }
    let n = f.dim;
    let value = match base_point(f, wrt, x)? {
        None => PolyUnion::empty(n),
        Some(base) => {
            let ystar = RVec::new(vec![Rat::from_integer((-kind.level()).into())]);
            coderivative_wrt(&f.epigraphical_map(), wrt, x, &base.slice(n, n + 1), &ystar)?.result
        }
    };
    Ok(SubdiffResult { kind, wrt: wrt.clone(), value })
}

fn require_domain(f: &PLFunc, wrt: &ConvexPoly, x: &RVec) -> Result<()> {
    match base_point(f, wrt, x)? {
        Some(_) => Ok(()),
        None => Err(Error::Precondition("x̄ must lie in dom f ∩ C".into())),
    }
}

/// A nonzero point of a union of cones, if any.
pub(crate) fn nonzero_point(u: &PolyUnion) -> Option<RVec> {
    u.parts().iter().find_map(|p| {
        let (_, rays, lines) = p.vertex_generators();
        rays.into_iter().chain(lines).next().map(|v| v.primitive())
    })
}

/// Local Lipschitz continuity relative to `C`: the horizon subdifferential is `{0}`.
pub fn lipschitz_wrt_check(f: &PLFunc, wrt: &ConvexPoly, x: &RVec) -> Result<TriVerdict> {
    require_domain(f, wrt, x)?;
    let h = subdiff_wrt(f, wrt, x, SubdiffKind::Horizon)?;
    Ok(match nonzero_point(&h.value) {
        Some(v) => TriVerdict::fails(Certificate::Vector(v)),
        None => TriVerdict::holds(),
    })
}

pub fn fermat_check(f: &PLFunc, wrt: &ConvexPoly, x: &RVec) -> Result<FermatReport> {
    require_domain(f, wrt, x)?;
    let zero = RVec::zeros(f.dim);
    Ok(FermatReport {
        is_stationary_frechet: subdiff_wrt(f, wrt, x, SubdiffKind::Frechet)?.value.contains(&zero),
        is_stationary_limiting: subdiff_wrt(f, wrt, x, SubdiffKind::Limiting)?.value.contains(&zero),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::{rat, ratio};

    fn id() -> PLFunc {
        PLFunc::affine(&RVec::from_ints(&[1]), rat(0)).unwrap()
    }

    fn interval(lo: Rat, hi: Rat) -> ConvexPoly {
        ConvexPoly::whole(1).with_ineq(RVec::from_ints(&[1]), hi).with_ineq(RVec::from_ints(&[-1]), -lo)
    }

    #[test]
    fn identity_on_halfline() {
        let c = ConvexPoly::nonneg(1, &[0]);
        let s = subdiff_wrt(&id(), &c, &RVec::zeros(1), SubdiffKind::Limiting).unwrap();
        assert!(s.value.same_set(&PolyUnion::new(1, vec![interval(rat(0), rat(1))]).unwrap()));
        let s = subdiff_wrt(&id(), &ConvexPoly::whole(1), &RVec::zeros(1), SubdiffKind::Limiting).unwrap();
        assert!(s.value.same_set(&PolyUnion::new(1, vec![ConvexPoly::point(&RVec::from_ints(&[1]))]).unwrap()));
    }

    #[test]
    fn eval_max_affine() {
        let f = PLFunc::max_affine(1, &[(RVec::from_ints(&[1]), rat(0)), (RVec::from_ints(&[-1]), rat(0))]).unwrap();
        assert_eq!(f.eval(&RVec::new(vec![ratio(-3, 2)])), Some(ratio(3, 2)));
    }

    #[test]
    fn vertical_face_breaks_lipschitz() {
        let f = PLFunc::affine_on(&ConvexPoly::nonneg(1, &[0]), &RVec::zeros(1), rat(0)).unwrap();
        let v = lipschitz_wrt_check(&f, &ConvexPoly::whole(1), &RVec::zeros(1)).unwrap();
        assert_eq!(v.certificate, Some(Certificate::Vector(RVec::from_ints(&[-1]))));
        assert!(lipschitz_wrt_check(&f, &ConvexPoly::nonneg(1, &[0]), &RVec::zeros(1)).unwrap().is_holds());
    }

    #[test]
    fn rejects_downward_piece() {
        let p = ConvexPoly::whole(2).with_ineq(RVec::from_ints(&[0, 1]), rat(0));
        assert!(matches!(PLFunc::new(1, vec![p]), Err(Error::InvalidEpigraph(_))));
    }
}

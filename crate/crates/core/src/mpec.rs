//! Necessary optimality conditions relative to a set for
//! `min f(x)` subject to `0 ∈ G(x)`, `x ∈ C₁ ∩ C₂`.

use crate::calculus::{nonzero_in_intersection, normal_densed_check, Certificate, TriVerdict, Verdict};
use crate::cones::limiting_normal_wrt;
use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{ConvexPoly, PolyUnion, RVec, Rat};
use crate::multimaps::{aubin_wrt_check, coderivative_cone, coderivative_wrt, zero_slice, PolyMultimap};
use crate::plfunc::{subdiff_wrt, PLFunc, SubdiffKind};

#[derive(Clone, Debug)]
pub struct MPECProblem {
    pub f: PLFunc,
    pub g: PolyMultimap,
    pub c1: ConvexPoly,
    pub c2: ConvexPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MpecVerdict {
    CertifiedNonOptimal,
    NecessaryConditionsHold,
    Inconclusive,
}

impl MpecVerdict {
    pub fn name(self) -> &'static str {
        match self {
            MpecVerdict::CertifiedNonOptimal => "certified-non-optimal",
            MpecVerdict::NecessaryConditionsHold => "necessary-conditions-hold",
            MpecVerdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct StationarityReport {
    pub candidate: RVec,
    pub q1: TriVerdict,
    pub q2: TriVerdict,
    /// `0 ∈ ∂_{C₁} f(x̄) + D*_{C₂} G(x̄, 0)(0)`.
    pub condition_thm13: bool,
    pub aubin_wrt_g: TriVerdict,
    /// `0 ∈ ∂_{C₁} f(x̄)`.
    pub condition_prop15: bool,
    pub subdifferential: PolyUnion,
    pub coderivative_at_zero: PolyUnion,
    /// Feasible direction along which `f` strictly decreases, if any.
    pub descent: Option<RVec>,
    pub verdict: MpecVerdict,
}

impl MPECProblem {
    pub fn new(f: PLFunc, g: PolyMultimap, c1: ConvexPoly, c2: ConvexPoly) -> Result<Self> {
        let n = f.dim();
        check_dim(n, g.in_dim())?;
        check_dim(n, c1.dim())?;
        check_dim(n, c2.dim())?;
        Ok(MPECProblem { f, g, c1, c2 })
    }

    pub fn n(&self) -> usize {
        self.f.dim()
    }

    pub fn m(&self) -> usize {
        self.g.out_dim()
    }

    /// Names the first violated constraint.
    pub fn check_feasible(&self, x: &RVec) -> Result<()> {
        check_dim(self.n(), x.dim())?;
        if !self.g.contains(x, &RVec::zeros(self.m())) {
            return Err(Error::Infeasible("0 ∈ G(x̄)".into()));
        }
        if !self.c1.contains(x) {
            return Err(Error::Infeasible("x̄ ∈ C₁".into()));
        }
        if !self.c2.contains(x) {
            return Err(Error::Infeasible("x̄ ∈ C₂".into()));
        }
        if self.f.eval(x).is_none() {
            return Err(Error::Infeasible("x̄ ∈ dom f".into()));
        }
        Ok(())
    }
}

/// `∂^∞_{C₁} f(x̄) ∩ [−D*_{C₂} G(x̄, 0)(0)] = {0}`.
pub fn check_q1(p: &MPECProblem, x: &RVec) -> Result<TriVerdict> {
    p.check_feasible(x)?;
    let n = p.n();
    let value = p.f.eval(x).expect("feasible");
    let base = x.concat(&RVec::new(vec![value]));
    let epi_cone = limiting_normal_wrt(p.f.epi(), &p.c1.product(&ConvexPoly::whole(1)), &base)?;
    let horizon = zero_slice(&epi_cone, n);
    let kg = coderivative_cone(&p.g, &p.c2, x, &RVec::zeros(p.m()))?;
    let d0 = zero_slice(&kg, n);
    Ok(match nonzero_in_intersection(&horizon, &d0.neg()) {
        Some(v) => TriVerdict::fails(Certificate::Vector(v)),
        None => TriVerdict::holds(),
    })
}

/// Normal-densedness of `{epi f lifted, gph G × ℝ}` at `(x̄, 0, f(x̄))`.
pub fn check_q2(p: &MPECProblem, x: &RVec) -> Result<TriVerdict> {
    p.check_feasible(x)?;
    let (n, m) = (p.n(), p.m());
    let d = n + m + 1;
    let value = p.f.eval(x).expect("feasible");
    let epi_coords: Vec<usize> = (0..n).chain(std::iter::once(n + m)).collect();
    let o1 = p.f.epi().lift(d, &epi_coords);
    let o2 = p.g.graph().lift(d, &(0..n + m).collect::<Vec<_>>());
    let tail = ConvexPoly::whole(m + 1);
    let point = x.concat(&RVec::zeros(m)).concat(&RVec::new(vec![value]));
    normal_densed_check(&o1, &o2, &p.c1.product(&tail), &p.c2.product(&tail), &point)
}

/// A feasible direction `d` with `f'(x̄; d) < 0`, or `None` when `x̄` is a local minimizer.
///
/// Near `x̄` the feasible set and `epi f` coincide with their tangent cones, so it
/// suffices to look for `(d, δ)`, `δ < 0`, in the tangent cone at `(x̄, f(x̄))` of
/// `E ∩ (Q × ℝ)` for each epigraph piece `E` and each slice `Q = {x : (x, 0) ∈ P} ∩ C₁ ∩ C₂`.
pub fn descent_direction(p: &MPECProblem, x: &RVec) -> Result<Option<RVec>> {
    p.check_feasible(x)?;
    let n = p.n();
    let value = p.f.eval(x).expect("feasible");
    let base = x.concat(&RVec::new(vec![value]));
    let zero = RVec::zeros(p.m());
    let line = ConvexPoly::whole(1);
    let c = p.c1.intersect(&p.c2);
    for e in p.f.epi().pieces().iter().filter(|e| e.contains(&base)) {
        for g in p.g.graph().pieces().iter().filter(|g| g.contains(&x.concat(&zero))) {
            let q = e.intersect(&g.slice_tail(&zero).intersect(&c).product(&line));
            let mut cone = ConvexPoly::whole(n + 1).with_ineq(RVec::unit(n + 1, n), -Rat::from_integer(1.into()));
            for (a, b) in q.ineqs() {
                if a.dot(&base) == *b {
                    cone = cone.with_ineq(a.clone(), Rat::from_integer(0.into()));
                }
            }
            for (a, _) in q.eqs() {
                cone = cone.with_eq(a.clone(), Rat::from_integer(0.into()));
            }
            if let Some(d) = cone.feasible_point() {
                return Ok(Some(d.slice(0, n).primitive()));
            }
        }
    }
    Ok(None)
}

/// Runs the qualification checks and both optimality tests at `x̄`.
///
/// The set-relative condition can fail at genuine local minimizers: `f(x) = x`,
/// `G(x) = {x}` on `ℝ` with `x̄ = 0` satisfies both qualification conditions while
/// `∂f(0) + D*G(0, 0)(0) = {1}`. Non-optimality is therefore certified only
/// together with an exact descent direction.
pub fn stationarity_check(p: &MPECProblem, x: &RVec) -> Result<StationarityReport> {
    p.check_feasible(x)?;
    let n = p.n();
    let zero = RVec::zeros(n);
    let q1 = check_q1(p, x)?;
    let q2 = check_q2(p, x)?;
    let aubin = aubin_wrt_check(&p.g, &p.c2, x, &RVec::zeros(p.m()))?;
    let sub = subdiff_wrt(&p.f, &p.c1, x, SubdiffKind::Limiting)?.value;
    let d0 = coderivative_wrt(&p.g, &p.c2, x, &RVec::zeros(p.m()), &RVec::zeros(p.m()))?.result;
    let condition_thm13 = sub.minkowski_sum(&d0).contains(&zero);
    let condition_prop15 = sub.contains(&zero);
    let descent = descent_direction(p, x)?;
    let verdict = if q2.value != Verdict::Holds || !q1.is_holds() {
        MpecVerdict::Inconclusive
    } else if condition_thm13 {
        MpecVerdict::NecessaryConditionsHold
    } else if descent.is_some() {
        MpecVerdict::CertifiedNonOptimal
    } else {
        MpecVerdict::Inconclusive
    };
    Ok(StationarityReport {
        candidate: x.clone(),
        q1,
        q2,
        condition_thm13,
        aubin_wrt_g: aubin,
        condition_prop15,
        subdifferential: sub,
        coderivative_at_zero: d0,
        descent,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat;
    use crate::stratify::PolySet;

    fn problem(c1: ConvexPoly, slope: i64) -> MPECProblem {
        let f = PLFunc::affine(&RVec::from_ints(&[slope]), rat(0)).unwrap();
        let g = PolyMultimap::new(1, 1, PolySet::from(ConvexPoly::nonneg(2, &[0, 1]))).unwrap();
        MPECProblem::new(f, g, c1, ConvexPoly::nonneg(1, &[0])).unwrap()
    }

    #[test]
    fn first_final_example() {
        let r = stationarity_check(&problem(ConvexPoly::nonneg(1, &[0]), 1), &RVec::zeros(1)).unwrap();
        assert_eq!(r.verdict, MpecVerdict::NecessaryConditionsHold);
        assert!(r.condition_prop15);
    }

    #[test]
    fn second_final_example() {
        let r = stationarity_check(&problem(ConvexPoly::whole(1), 1), &RVec::zeros(1)).unwrap();
        assert_eq!(r.q2.value, Verdict::Fails);
        assert_eq!(r.verdict, MpecVerdict::Inconclusive);
        assert!(!r.condition_prop15);
    }

    #[test]
    fn decreasing_objective_is_certified() {
        let r = stationarity_check(&problem(ConvexPoly::nonneg(1, &[0]), -1), &RVec::zeros(1)).unwrap();
        assert_eq!(r.verdict, MpecVerdict::CertifiedNonOptimal);
        assert_eq!(r.descent, Some(RVec::from_ints(&[1])));
    }

    #[test]
    fn condition_fails_at_an_isolated_minimizer() {
        let f = PLFunc::affine(&RVec::from_ints(&[1]), rat(0)).unwrap();
        let g = PolyMultimap::identity(1);
        let p = MPECProblem::new(f, g, ConvexPoly::whole(1), ConvexPoly::whole(1)).unwrap();
        let r = stationarity_check(&p, &RVec::zeros(1)).unwrap();
        assert!(r.q1.is_holds() && r.q2.is_holds());
        assert!(!r.condition_thm13);
        assert_eq!(r.descent, None);
        assert_eq!(r.verdict, MpecVerdict::Inconclusive);
    }

    #[test]
    fn infeasible_candidate() {
        let e = stationarity_check(&problem(ConvexPoly::whole(1), 1), &RVec::from_ints(&[-1])).unwrap_err();
        assert_eq!(e, Error::Infeasible("0 ∈ G(x̄)".into()));
    }
}

//! Floating-point brute-force probes that cross-check the exact engine.
//!
//! Grid points are `x̄ + h·k` with integer `k`, so membership is decided on
//! scaled integer rows and never misclassifies points on faces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{rat_to_f64, ConeH, ConvexPoly, RVec, Rat};
use crate::multimaps::PolyMultimap;
use crate::stratify::PolySet;

/// Sampled Aubin ratios above this are reported divergent.
pub const DIVERGENCE: f64 = 1e3;

#[derive(Clone, Debug, PartialEq)]
pub struct SamplingPlan {
    pub radius: Rat,
    pub grid_step: Rat,
    pub direction_count: usize,
    pub tolerance: f64,
}

impl Default for SamplingPlan {
    fn default() -> Self {
        SamplingPlan {
            radius: Rat::one(),
            grid_step: Rat::new(1.into(), 64.into()),
            direction_count: 16,
            tolerance: 1e-6,
        }
    }
}

impl SamplingPlan {
    /// Grid points per radius.
    fn steps(&self) -> Result<i64> {
        if !self.radius.is_positive() || !self.grid_step.is_positive() || self.grid_step >= self.radius {
            return Err(Error::Input("sampling plan needs 0 < grid_step < radius".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::Input("sampling plan needs a positive tolerance".into()));
        }
        let q = &self.radius / &self.grid_step;
        if !q.is_integer() {
            return Err(Error::Input("radius must be a multiple of grid_step".into()));
        }
        q.to_integer().to_i64().ok_or_else(|| Error::Input("grid too fine".into()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbeOutcome {
    pub consistent: bool,
    pub max_ratio: f64,
    pub radial_ok: bool,
    pub samples: usize,
}

/// Integer form of `a·(x̄ + h k) <= b`, i.e. `a' · k <= b'`.
#[derive(Clone, Debug)]
struct IntRow {
    a: Vec<i128>,
    b: i128,
    eq: bool,
}

fn lcm_den(vals: &[Rat]) -> BigInt {
    vals.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

fn to_i128(v: &BigInt) -> Result<i128> {
    v.to_i128().ok_or_else(|| Error::Limit("coefficient exceeds the oracle's integer range".into()))
}

fn int_row(a: &RVec, b: &Rat, base: &RVec, h: &Rat, eq: bool) -> Result<IntRow> {
    let mut vals: Vec<Rat> = a.as_slice().iter().map(|c| c * h).collect();
    vals.push(b - a.dot(base));
    let l = Rat::from_integer(lcm_den(&vals));
    let ints: Vec<i128> = vals.iter().map(|v| to_i128(&(v * &l).to_integer())).collect::<Result<_>>()?;
    let (last, head) = ints.split_last().expect("nonempty");
    Ok(IntRow { a: head.to_vec(), b: *last, eq })
}

#[derive(Clone, Debug)]
struct IntPoly(Vec<IntRow>);

impl IntPoly {
    fn new(p: &ConvexPoly, base: &RVec, h: &Rat) -> Result<Self> {
        let mut rows = Vec::new();
        for (a, b) in p.ineqs() {
            rows.push(int_row(a, b, base, h, false)?);
        }
        for (a, b) in p.eqs() {
            rows.push(int_row(a, b, base, h, true)?);
        }
        Ok(IntPoly(rows))
    }

    fn contains(&self, k: &[i64]) -> bool {
        self.0.iter().all(|r| {
            let s: i128 = r.a.iter().zip(k).map(|(a, &x)| a * x as i128).sum();
            if r.eq {
                s == r.b
            } else {
                s <= r.b
            }
        })
    }
}

/// Lower bound on the distance from `x` to a polyhedron missing it.
fn distance_bound(p: &ConvexPoly, x: &RVec) -> f64 {
    let mut best = 0.0f64;
    for (a, b) in p.ineqs() {
        let gap = rat_to_f64(&(a.dot(x) - b));
        let norm = a.to_f64().iter().map(|v| v * v).sum::<f64>().sqrt();
        if gap > 0.0 && norm > 0.0 {
            best = best.max(gap / norm);
        }
    }
    for (a, b) in p.eqs() {
        let gap = rat_to_f64(&(a.dot(x) - b)).abs();
        let norm = a.to_f64().iter().map(|v| v * v).sum::<f64>().sqrt();
        if gap > 0.0 && norm > 0.0 {
            best = best.max(gap / norm);
        }
    }
    best
}

/// Slack of the rows inactive at `x` in a polyhedron containing it.
fn inactive_slack(p: &ConvexPoly, x: &RVec) -> f64 {
    let mut best = f64::INFINITY;
    for (a, b) in p.ineqs() {
        let gap = rat_to_f64(&(b - a.dot(x)));
        let norm = a.to_f64().iter().map(|v| v * v).sum::<f64>().sqrt();
        if gap > 0.0 && norm > 0.0 {
            best = best.min(gap / norm);
        }
    }
    best
}

/// Largest `radius / 2^j` not exceeding half of every local obstruction.
fn effective_radius(pieces: &[ConvexPoly], x: &RVec, radius: &Rat) -> Rat {
    let mut bound = f64::INFINITY;
    for p in pieces {
        if p.contains(x) {
            bound = bound.min(inactive_slack(p, x) / 2.0);
        } else if !p.is_empty() {
            bound = bound.min(distance_bound(p, x) / 2.0);
        }
    }
    let mut r = radius.clone();
    let two = Rat::from_integer(2.into());
    while rat_to_f64(&r) > bound {
        r /= &two;
    }
    r
}

/// Integer offsets `k` with `|k| <= n` in the Euclidean norm, in lexicographic order.
fn ball_points(dim: usize, n: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut k = vec![-n; dim];
    if dim == 0 {
        return vec![Vec::new()];
    }
    loop {
        if k.iter().map(|v| v * v).sum::<i64>() <= n * n {
            out.push(k.clone());
        }
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if k[i] < n {
                k[i] += 1;
                for v in k.iter_mut().skip(i + 1) {
                    *v = -n;
                }
                break;
            }
        }
    }
}

/// Reusable grid sample of `Ω ∩ C` around `x̄`.
pub struct FrechetProbe {
    base: RVec,
    wrt: ConvexPoly,
    step: Rat,
    radius: Rat,
    points: Vec<Vec<f64>>,
    tolerance: f64,
}

impl FrechetProbe {
    pub fn new(omega: &PolySet, wrt: &ConvexPoly, x: &RVec, plan: &SamplingPlan) -> Result<Self> {
        check_dim(omega.dim(), x.dim())?;
        check_dim(wrt.dim(), x.dim())?;
        let n = plan.steps()?;
        if !omega.contains(x) || !wrt.contains(x) {
            return Err(Error::Precondition("x̄ must lie in Ω ∩ C".into()));
        }
        let pieces: Vec<ConvexPoly> = omega.pieces().iter().map(|p| p.intersect(wrt)).collect();
        let r = effective_radius(&pieces, x, &plan.radius);
        let h = &r / Rat::from_integer(n.into());
        let ints: Vec<IntPoly> =
            pieces.iter().filter(|p| p.contains(x)).map(|p| IntPoly::new(p, x, &h)).collect::<Result<_>>()?;
        let hf = rat_to_f64(&h);
        let points = ball_points(x.dim(), n)
            .into_iter()
            .filter(|k| k.iter().any(|v| *v != 0) && ints.iter().any(|p| p.contains(k)))
            .map(|k| k.iter().map(|v| *v as f64 * hf).collect())
            .collect();
        Ok(FrechetProbe {
            base: x.clone(),
            wrt: wrt.clone(),
            step: h,
            radius: plan.radius.clone(),
            points,
            tolerance: plan.tolerance,
        })
    }

    pub fn samples(&self) -> usize {
        self.points.len()
    }

    pub fn test(&self, d: &RVec) -> ProbeOutcome {
        let df = d.to_f64();
        let mut max_ratio = f64::NEG_INFINITY;
        for p in &self.points {
            let norm = p.iter().map(|v| v * v).sum::<f64>().sqrt();
            let dot: f64 = p.iter().zip(&df).map(|(a, b)| a * b).sum();
            max_ratio = max_ratio.max(dot / norm);
        }
        if self.points.is_empty() {
            max_ratio = 0.0;
        }
        let radial_ok = [&self.step, &self.radius].iter().any(|p| self.wrt.contains(&self.base.axpy(p, d)));
        ProbeOutcome {
            consistent: max_ratio <= self.tolerance && radial_ok,
            max_ratio,
            radial_ok,
            samples: self.points.len(),
        }
    }
}

/// Grid test of `d ∈ N̂_C(x̄, Ω)`: the limsup quotient and the radial condition.
pub fn frechet_membership_probe(
    omega: &PolySet,
    wrt: &ConvexPoly,
    x: &RVec,
    d: &RVec,
    plan: &SamplingPlan,
) -> Result<ProbeOutcome> {
    check_dim(x.dim(), d.dim())?;
    Ok(FrechetProbe::new(omega, wrt, x, plan)?.test(d))
}

/// A direction where the probe and an exact Fréchet cone disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct Disagreement {
    pub direction: RVec,
    pub exact_member: bool,
    pub probe: ProbeOutcome,
}

/// Test directions: the cone's generators, unit vectors and their pairwise sums.
fn test_directions(cone: &ConeH, count: usize) -> Vec<RVec> {
    let d = cone.dim();
    let g = cone.generators();
    let mut out: Vec<RVec> = g.rays.clone();
    for l in &g.lines {
        out.push(l.clone());
        out.push(l.neg());
    }
    let mut extra = Vec::new();
    for i in 0..d {
        extra.push(RVec::unit(d, i));
        extra.push(RVec::unit(d, i).neg());
    }
    for i in 0..d {
        for j in i + 1..d {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let v = RVec::unit(d, i)
                    .scale(&Rat::from_integer(si.into()))
                    .add(&RVec::unit(d, j).scale(&Rat::from_integer(sj.into())));
                extra.push(v);
            }
        }
    }
    extra.truncate(count.max(2 * d));
    out.extend(extra);
    out
}

/// Compare an exact Fréchet cone with the probe on a fixed set of directions.
pub fn cross_check_frechet(
    omega: &PolySet,
    wrt: &ConvexPoly,
    x: &RVec,
    exact: &ConeH,
    plan: &SamplingPlan,
) -> Result<Vec<Disagreement>> {
    let probe = FrechetProbe::new(omega, wrt, x, plan)?;
    let mut flags = Vec::new();
    for d in test_directions(exact, plan.direction_count) {
        let outcome = probe.test(&d);
        let member = exact.contains(&d);
        if outcome.consistent != member {
            flags.push(Disagreement { direction: d, exact_member: member, probe: outcome });
        }
    }
    Ok(flags)
}

/// Largest sampled `dist(y, F(x)) / |u − x|` over `y ∈ F(u) ∩ B(ȳ, r)`, `x, u ∈ C ∩ B(x̄, r)`.
/// Returns `f64::INFINITY` when some `F(x)` is empty while `F(u) ∩ V` is not.
pub fn aubin_ratio_probe(f: &PolyMultimap, wrt: &ConvexPoly, x: &RVec, y: &RVec, plan: &SamplingPlan) -> Result<f64> {
    let (n, m) = (f.in_dim(), f.out_dim());
    check_dim(n, x.dim())?;
    check_dim(m, y.dim())?;
    let steps = plan.steps()?;
    if !f.contains(x, y) {
        return Err(Error::PointOutside { point: x.concat(y).to_string(), set: "the graph".into() });
    }
    let k = if n + m <= 2 { steps.min(16) } else { steps.min(4) };
    let h = &plan.radius / Rat::from_integer(k.into());
    let base = x.concat(y);
    let graph: Vec<IntPoly> = f.graph().pieces().iter().map(|p| IntPoly::new(p, &base, &h)).collect::<Result<_>>()?;
    let c = IntPoly::new(wrt, x, &h)?;
    let xs: Vec<Vec<i64>> = ball_points(n, k).into_iter().filter(|p| c.contains(p)).collect();
    if xs.is_empty() {
        return Err(Error::Input("no sample points in C near x̄".into()));
    }
    let ys = ball_points(m, 2 * k);
    let fiber = |p: &[i64]| -> Vec<Vec<i64>> {
        ys.iter()
            .filter(|q| {
                let pt: Vec<i64> = p.iter().chain(q.iter()).copied().collect();
                graph.iter().any(|g| g.contains(&pt))
            })
            .cloned()
            .collect()
    };
    let fibers: Vec<Vec<Vec<i64>>> = xs.iter().map(|p| fiber(p)).collect();
    let hf = rat_to_f64(&h);
    let mut worst = 0.0f64;
    for (iu, u) in xs.iter().enumerate() {
        let near: Vec<&Vec<i64>> =
            fibers[iu].iter().filter(|q| q.iter().map(|v| v * v).sum::<i64>() <= k * k).collect();
        if near.is_empty() {
            continue;
        }
        for (ix, xp) in xs.iter().enumerate() {
            if ix == iu {
                continue;
            }
            let dx = u.iter().zip(xp).map(|(a, b)| ((a - b) as f64).powi(2)).sum::<f64>().sqrt() * hf;
            let target = &fibers[ix];
            if target.is_empty() {
                let xr = x.add(&RVec::new(xp.iter().map(|v| &h * Rat::from_integer((*v).into())).collect()));
                if f.value_at(&xr).is_empty() {
                    return Ok(f64::INFINITY);
                }
                worst = worst.max(rat_to_f64(&plan.radius) / dx);
                continue;
            }
            for q in &near {
                let dist = target
                    .iter()
                    .map(|t| t.iter().zip(q.iter()).map(|(a, b)| ((a - b) as f64).powi(2)).sum::<f64>())
                    .fold(f64::INFINITY, f64::min)
                    .sqrt()
                    * hf;
                worst = worst.max(dist / dx);
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat;

    #[test]
    fn halfspace_normal_is_consistent() {
        let omega = PolySet::from(ConvexPoly::whole(2).with_ineq(RVec::from_ints(&[1, 0]), rat(0)));
        let w = ConvexPoly::whole(2);
        let plan = SamplingPlan { grid_step: Rat::new(1.into(), 8.into()), ..SamplingPlan::default() };
        let x = RVec::zeros(2);
        assert!(frechet_membership_probe(&omega, &w, &x, &RVec::from_ints(&[1, 0]), &plan).unwrap().consistent);
        assert!(!frechet_membership_probe(&omega, &w, &x, &RVec::from_ints(&[1, 1]), &plan).unwrap().consistent);
        assert!(frechet_membership_probe(&omega, &w, &x, &RVec::zeros(2), &plan).unwrap().consistent);
    }

    #[test]
    fn ball_point_count() {
        assert_eq!(ball_points(1, 3).len(), 7);
        assert_eq!(ball_points(2, 1).len(), 5);
    }

    #[test]
    fn bad_plan_rejected() {
        let plan = SamplingPlan { grid_step: rat(2), ..SamplingPlan::default() };
        assert!(plan.steps().is_err());
    }
}

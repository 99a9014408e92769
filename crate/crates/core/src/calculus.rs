//! Set-level calculus: product rules, the two qualification conditions,
//! intersection and preimage rules.
//!
//! For polyhedral data every limiting cone is a finite union over local cells,
//! so the sequential conditions reduce to exact cone tests:
//! LQC holds iff `N₁ ∩ (−N₂) = {0}` with `Nᵢ` the limiting cones relative to `Cᵢ`,
//! because any sequence pair with `x₁ₖ* + x₂ₖ* → 0` has a subsequence inside one
//! cell pair, whose cones are constant and closed.

use crate::cones::{frechet_normal_wrt, limiting_normal, limiting_normal_wrt, limiting_normal_wrt_raw, radial_cone};
use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{ConeH, ConeUnion, ConvexPoly, LinearProgram, PolyUnion, RVec, Rat};
use crate::multimaps::{inner_regularity_check, PolyMultimap, Regularity};
use crate::stratify::{global_cells, local_cells_within, PolySet};
use num_traits::Zero;

/// Pair-count cap of the normal-densedness test.
pub const PAIR_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Holds,
    Fails,
    Unknown,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Nonzero vector in a set required to be `{0}`.
    Vector(RVec),
    /// Limit pair whose sum has no admissible representation.
    Sum {
        first: RVec,
        second: RVec,
        sum: RVec,
    },
    /// Point of a cell where a side condition breaks.
    Point(RVec),
    Note(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriVerdict {
    pub value: Verdict,
    pub certificate: Option<Certificate>,
}

impl TriVerdict {
    pub fn holds() -> Self {
        TriVerdict { value: Verdict::Holds, certificate: None }
    }

    pub fn holds_because(note: &str) -> Self {
        TriVerdict { value: Verdict::Holds, certificate: Some(Certificate::Note(note.into())) }
    }

    pub fn fails(c: Certificate) -> Self {
        TriVerdict { value: Verdict::Fails, certificate: Some(c) }
    }

    pub fn unknown(note: &str) -> Self {
        TriVerdict { value: Verdict::Unknown, certificate: Some(Certificate::Note(note.into())) }
    }

    pub fn is_holds(&self) -> bool {
        self.value == Verdict::Holds
    }

    /// Holds when every verdict holds; otherwise the first Fails, else the first Unknown.
    pub fn all(verdicts: impl IntoIterator<Item = TriVerdict>) -> TriVerdict {
        let v: Vec<TriVerdict> = verdicts.into_iter().collect();
        v.iter()
            .find(|t| t.value == Verdict::Fails)
            .or_else(|| v.iter().find(|t| t.value == Verdict::Unknown))
            .cloned()
            .unwrap_or_else(TriVerdict::holds)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleId {
    Product,
    MixedProduct,
    Intersection,
    Preimage,
    Sum,
    Chain,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        match self {
            RuleId::Product => "product",
            RuleId::MixedProduct => "mixed-product",
            RuleId::Intersection => "intersection",
            RuleId::Preimage => "preimage",
            RuleId::Sum => "sum",
            RuleId::Chain => "chain",
        }
    }
}

#[derive(Clone, Debug)]
pub enum Side {
    Cones(ConeUnion),
    Polyhedra(PolyUnion),
}

#[derive(Clone, Debug)]
pub struct RuleReport {
    pub rule: RuleId,
    pub lhs: Side,
    pub rhs: Side,
    pub qualifications: Vec<(String, TriVerdict)>,
    pub inclusion_holds: bool,
    /// Point of `lhs \ rhs` when the inclusion fails.
    pub witness: Option<RVec>,
    /// Additional exact identities checked by the rule.
    pub checks: Vec<(String, bool)>,
}

impl RuleReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.qualifications.iter().all(|(_, v)| v.is_holds())
    }
}

/// Reading of the mixed product rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Thm6Reading {
    /// `(x*, z*)` paired with the first factor.
    #[default]
    Proof,
    /// `(x*, y*)` paired with the first factor; needs `m = s`, `z*` free.
    Statement,
}

/// Nonzero vector of a cone, if any.
pub fn nonzero_vector(c: &ConeH) -> Option<RVec> {
    let g = c.generators();
    let s = c.relative_interior_point();
    if !s.is_zero() {
        return Some(s);
    }
    g.rays.first().or(g.lines.first()).cloned()
}

/// A nonzero vector of `a ∩ b`, or `None` when the intersection is `{0}` or empty.
pub fn nonzero_in_intersection(a: &ConeUnion, b: &ConeUnion) -> Option<RVec> {
    for p in a.parts() {
        for q in b.parts() {
            if let Some(v) = nonzero_vector(&p.intersect(q)) {
                return Some(v);
            }
        }
    }
    None
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what.to_string()))
    }
}

fn common_point(o1: &PolySet, o2: &PolySet, c1: &ConvexPoly, c2: &ConvexPoly, x: &RVec) -> Result<()> {
    for d in [o1.dim(), o2.dim(), c1.dim(), c2.dim()] {
        check_dim(d, x.dim())?;
    }
    require(o1.contains(x) && o2.contains(x) && c1.contains(x) && c2.contains(x), "point must lie in Ω₁ ∩ Ω₂ ∩ C₁ ∩ C₂")
}

fn frechet_union(o: &PolySet, c: &ConvexPoly, x: &RVec) -> Result<ConeUnion> {
    Ok(frechet_normal_wrt(o, c, x)?.map(ConeUnion::single).unwrap_or_else(|| ConeUnion::empty(x.dim())))
}

/// Both kinds of the product formula, each side computed independently.
pub fn product_rule(
    o1: &PolySet,
    c1: &ConvexPoly,
    o2: &PolySet,
    c2: &ConvexPoly,
    x1: &RVec,
    x2: &RVec,
) -> Result<RuleReport> {
    check_dim(o1.dim(), x1.dim())?;
    check_dim(o2.dim(), x2.dim())?;
    require(o1.contains(x1) && c1.contains(x1), "x̄₁ must lie in Ω₁ ∩ C₁")?;
    require(o2.contains(x2) && c2.contains(x2), "x̄₂ must lie in Ω₂ ∩ C₂")?;
    let omega = o1.product(o2);
    let c = c1.product(c2);
    let x = x1.concat(x2);
    let fr_lhs = frechet_union(&omega, &c, &x)?;
    let fr_rhs = frechet_union(o1, c1, x1)?.product(&frechet_union(o2, c2, x2)?);
    let lim_lhs = limiting_normal_wrt(&omega, &c, &x)?;
    let lim_rhs = limiting_normal_wrt(o1, c1, x1)?.product(&limiting_normal_wrt(o2, c2, x2)?).canonical();
    Ok(equality_report(RuleId::Product, fr_lhs, fr_rhs, lim_lhs, lim_rhs))
}

fn equality_report(rule: RuleId, fr_lhs: ConeUnion, fr_rhs: ConeUnion, lhs: ConeUnion, rhs: ConeUnion) -> RuleReport {
    let fr_eq = fr_lhs.same_set(&fr_rhs);
    let inc = lhs.subset_of(&rhs);
    let lim_eq = inc.holds && rhs.subset_of(&lhs).holds;
    RuleReport {
        rule,
        lhs: Side::Cones(lhs),
        rhs: Side::Cones(rhs),
        qualifications: Vec::new(),
        inclusion_holds: inc.holds,
        witness: inc.witness,
        checks: vec![("frechet_equal".into(), fr_eq), ("limiting_equal".into(), lim_eq)],
    }
}

/// Interleaves `(x, z) ∈ ℝⁿ⁺ˢ` and `y ∈ ℝᵐ` into `(x, y, z)`.
fn interleave_coords(n: usize, m: usize, s: usize) -> (Vec<usize>, Vec<usize>) {
    let first: Vec<usize> = (0..n).chain(n + m..n + m + s).collect();
    let second: Vec<usize> = (n..n + m).collect();
    (first, second)
}

fn interleave_union(a: &ConeUnion, b: &ConeUnion, n: usize, m: usize, s: usize) -> ConeUnion {
    let d = n + m + s;
    let (first, second) = interleave_coords(n, m, s);
    let mut parts = Vec::new();
    for p in a.parts() {
        for q in b.parts() {
            parts.push(p.lift(d, &first).intersect(&q.lift(d, &second)));
        }
    }
    ConeUnion::raw(d, parts)
}

fn statement_union(a: &ConeUnion, b: &ConeUnion, n: usize, m: usize) -> ConeUnion {
    // (x*, y*) ∈ first factor, y* ∈ second factor, z* free
    let d = n + m + m;
    let first: Vec<usize> = (0..n + m).collect();
    let second: Vec<usize> = (n..n + m).collect();
    let mut parts = Vec::new();
    for p in a.parts() {
        for q in b.parts() {
            parts.push(p.lift(d, &first).intersect(&q.lift(d, &second)));
        }
    }
    ConeUnion::raw(d, parts)
}

/// Mixed product rule; `o1, c1 ⊂ ℝⁿ⁺ˢ` in `(x, z)` order, `o2, c2 ⊂ ℝᵐ`.
#[allow(clippy::too_many_arguments)]
pub fn mixed_product_rule(
    o1: &PolySet,
    c1: &ConvexPoly,
    o2: &PolySet,
    c2: &ConvexPoly,
    n: usize,
    point: &RVec,
    reading: Thm6Reading,
) -> Result<RuleReport> {
    let m = o2.dim();
    require(o1.dim() >= n, "n must not exceed dim Ω₁")?;
    let s = o1.dim() - n;
    check_dim(n + m + s, point.dim())?;
    check_dim(o1.dim(), c1.dim())?;
    check_dim(m, c2.dim())?;
    if reading == Thm6Reading::Statement {
        require(m == s, "the statement reading needs m = s")?;
    }
    let (first, second) = interleave_coords(n, m, s);
    let xz = point.select(&first);
    let y = point.select(&second);
    require(o1.contains(&xz) && c1.contains(&xz), "(x̄, z̄) must lie in Ω₁ ∩ C₁")?;
    require(o2.contains(&y) && c2.contains(&y), "ȳ must lie in Ω₂ ∩ C₂")?;
    let d = n + m + s;
    let omega = o1.lift(d, &first).intersect(&o2.lift(d, &second));
    let c = c1.lift(d, &first).intersect(&c2.lift(d, &second));
    let fr_lhs = frechet_union(&omega, &c, point)?;
    let lim_lhs = limiting_normal_wrt(&omega, &c, point)?;
    let (f1, f2) = (frechet_union(o1, c1, &xz)?, frechet_union(o2, c2, &y)?);
    let (l1, l2) = (limiting_normal_wrt(o1, c1, &xz)?, limiting_normal_wrt(o2, c2, &y)?);
    let (fr_rhs, lim_rhs) = match reading {
        Thm6Reading::Proof => (interleave_union(&f1, &f2, n, m, s), interleave_union(&l1, &l2, n, m, s)),
        Thm6Reading::Statement => (statement_union(&f1, &f2, n, m), statement_union(&l1, &l2, n, m)),
    };
    Ok(equality_report(RuleId::MixedProduct, fr_lhs, fr_rhs, lim_lhs, lim_rhs.canonical()))
}

/// Limiting qualification condition relative to `{C₁, C₂}`.
pub fn lqc_wrt_check(o1: &PolySet, o2: &PolySet, c1: &ConvexPoly, c2: &ConvexPoly, x: &RVec) -> Result<TriVerdict> {
    common_point(o1, o2, c1, c2, x)?;
    let m1 = limiting_normal_wrt(o1, c1, x)?;
    let m2 = limiting_normal_wrt(o2, c2, x)?;
    Ok(match nonzero_in_intersection(&m1, &m2.neg()) {
        Some(v) => TriVerdict::fails(Certificate::Vector(v)),
        None => TriVerdict::holds(),
    })
}

/// Split `w` as `x₁ + x₂` with `xᵢ ∈ pᵢ`.
fn decompose(w: &RVec, p1: &ConeH, p2: &ConeH) -> Option<(RVec, RVec)> {
    let d = w.dim();
    let mut lp = LinearProgram::new(2 * d);
    let first: Vec<usize> = (0..d).collect();
    let second: Vec<usize> = (d..2 * d).collect();
    for (p, coords) in [(p1, &first), (p2, &second)] {
        for a in p.ineqs() {
            lp.add_ineq(a.embed(2 * d, coords), Rat::zero());
        }
        for a in p.eqs() {
            lp.add_eq(a.embed(2 * d, coords), Rat::zero());
        }
    }
    for i in 0..d {
        let mut row = RVec::zeros(2 * d);
        row.set(i, Rat::from_integer(1.into()));
        row.set(d + i, Rat::from_integer(1.into()));
        lp.add_eq(row, w[i].clone());
    }
    let z = lp.feasible_point()?;
    Some((z.slice(0, d), z.slice(d, 2 * d)))
}

/// Normal-densedness of `{Ω₁, Ω₂}` in `{C₁, C₂}`.
///
/// Achievable limits are `x₁* ∈ L₁`, `x₂* ∈ L₂` (classical limiting cones of
/// `Ωᵢ ∩ Cᵢ`) with `x₁* + x₂* ∈ R`, the union of radial cones of `C` along the
/// cells of `Ω ∩ bd C`. They must be representable in `M₁ + M₂`, where
/// `Mᵢ = N_{Cᵢ}(x̄, Ωᵢ)`, and a nonzero pair summing to 0 needs a nonzero
/// representation, which exists iff `M₁ ∩ (−M₂) ≠ {0}`.
pub fn normal_densed_check(
    o1: &PolySet,
    o2: &PolySet,
    c1: &ConvexPoly,
    c2: &ConvexPoly,
    x: &RVec,
) -> Result<TriVerdict> {
    common_point(o1, o2, c1, c2, x)?;
    if c1.is_interior(x) && c2.is_interior(x) {
        return Ok(TriVerdict::holds_because("base point interior to both constraint sets"));
    }
    let c = c1.intersect(c2);
    let omega = o1.intersect(o2);
    let cset = PolySet::from(c.clone());
    let cells = local_cells_within(&[&omega, &cset], &[true, true], x)?;
    let full = c.is_full_dimensional();
    let mut radial: Vec<ConeH> = Vec::new();
    for cell in &cells {
        let w = &cell.witness;
        let on_boundary = !full || c.ineqs().iter().any(|(a, b)| !a.is_zero() && a.dot(w) == *b);
        if !on_boundary {
            continue;
        }
        let r = radial_cone(&c, w)?.canonical();
        if !radial.iter().any(|q| q.canonical_key() == r.canonical_key()) {
            radial.push(r);
        }
    }
    if radial.is_empty() {
        return Ok(TriVerdict::holds_because("no boundary sequences of Ω ∩ C"));
    }
    // raw parts keep the low-dimensional cells, which give the smallest certificates
    let whole = ConvexPoly::whole(x.dim());
    let l1 = limiting_normal_wrt_raw(&o1.intersect_poly(c1), &whole, x)?;
    let l2 = limiting_normal_wrt_raw(&o2.intersect_poly(c2), &whole, x)?;
    let m1 = limiting_normal_wrt(o1, c1, x)?;
    let m2 = limiting_normal_wrt(o2, c2, x)?;
    let msum = m1.minkowski_sum(&m2).canonical();
    let total = l1.parts().len() * l2.parts().len() * radial.len();
    if total > PAIR_CAP {
        return Ok(TriVerdict::unknown("achievable-limit pair count exceeds the cap"));
    }
    let mut candidates: Vec<(usize, ConeH, &ConeH, &ConeH)> = Vec::new();
    for p1 in l1.parts() {
        for p2 in l2.parts() {
            let sum = p1.minkowski_sum(p2);
            for r in &radial {
                let s = sum.intersect(r);
                candidates.push((s.span_dim(), s, p1, p2));
            }
        }
    }
    candidates.sort_by_key(|(d, ..)| *d);
    for (_, s, p1, p2) in candidates {
        let inc = ConeUnion::single(s).subset_of(&msum);
        if let Some(w) = inc.witness {
            let (a, b) = decompose(&w, p1, p2).expect("witness lies in p1 + p2");
            return Ok(TriVerdict::fails(Certificate::Sum { first: a, second: b, sum: w }));
        }
    }
    if let Some(v) = nonzero_in_intersection(&l1, &l2.neg()) {
        if nonzero_in_intersection(&m1, &m2.neg()).is_none() {
            let sum = RVec::zeros(x.dim());
            return Ok(TriVerdict::fails(Certificate::Sum { second: v.neg(), first: v, sum }));
        }
    }
    Ok(TriVerdict::holds())
}

/// Intersection rule `N_C(x̄, Ω₁∩Ω₂) ⊂ N_{C₁}(x̄, Ω₁) + N_{C₂}(x̄, Ω₂)`.
pub fn intersection_rule(o1: &PolySet, o2: &PolySet, c1: &ConvexPoly, c2: &ConvexPoly, x: &RVec) -> Result<RuleReport> {
    let lqc = lqc_wrt_check(o1, o2, c1, c2, x)?;
    let nd = normal_densed_check(o1, o2, c1, c2, x)?;
    let omega = o1.intersect(o2);
    let c = c1.intersect(c2);
    let lhs_raw = limiting_normal_wrt_raw(&omega, &c, x)?;
    let m1 = limiting_normal_wrt(o1, c1, x)?;
    let m2 = limiting_normal_wrt(o2, c2, x)?;
    let rhs = m1.minkowski_sum(&m2).canonical();
    let inc = lhs_raw.subset_of(&rhs);
    let mut checks = Vec::new();
    if c2.is_interior(x) {
        let alt = limiting_normal_wrt(&omega, c1, x)?;
        checks.push(("neighborhood_identity".into(), alt.same_set(&lhs_raw)));
    }
    Ok(RuleReport {
        rule: RuleId::Intersection,
        lhs: Side::Cones(lhs_raw.canonical()),
        rhs: Side::Cones(rhs),
        qualifications: vec![("lqc".into(), lqc), ("normal_densed".into(), nd)],
        inclusion_holds: inc.holds,
        witness: inc.witness,
        checks,
    })
}

/// `F⁻¹(Θ)` as the projection of `gph F ∩ (ℝⁿ × Θ)`.
pub fn preimage_set(f: &PolyMultimap, theta: &PolySet) -> PolySet {
    let n = f.in_dim();
    let lifted = f.graph().intersect(&theta.lift(n + f.out_dim(), &(n..n + f.out_dim()).collect::<Vec<_>>()));
    lifted.project(&(0..n).collect::<Vec<_>>())
}

/// Cell representatives of `F(x̄) ∩ Θ`.
pub fn fiber_representatives(f: &PolyMultimap, theta: &PolySet, x: &RVec) -> Result<Vec<RVec>> {
    let fiber = f.value_at(x);
    if fiber.is_empty() || theta.is_empty() {
        return Ok(Vec::new());
    }
    let cells = global_cells(&[&fiber, theta], &[true, true], f.out_dim())?;
    Ok(cells.into_iter().map(|c| c.witness).collect())
}

/// `{x* : ∃ y* ∈ T, (x*, −y*) ∈ K}` part by part.
fn compose_with_normals(k: &ConeUnion, t: &ConeUnion, n: usize) -> ConeUnion {
    let m = t.dim();
    let d = n + m;
    let mut parts = Vec::new();
    for kp in k.parts() {
        let flip = |a: &RVec| a.slice(0, n).concat(&a.slice(n, d).neg());
        let kf = ConeH::raw(d, kp.ineqs().iter().map(flip).collect(), kp.eqs().iter().map(flip).collect());
        let tail: Vec<usize> = (n..d).collect();
        for tp in t.parts() {
            let c = kf.intersect(&tp.lift(d, &tail));
            parts.push(c.project(&(0..n).collect::<Vec<_>>()));
        }
    }
    ConeUnion::raw(n, parts)
}

/// `{y* : (0, −y*) ∈ K}`.
pub(crate) fn kernel_cone(k: &ConeUnion, n: usize) -> ConeUnion {
    let d = k.dim();
    let parts = k
        .parts()
        .iter()
        .map(|p| {
            let tail = |a: &RVec| a.slice(n, d).neg();
            ConeH::raw(d - n, p.ineqs().iter().map(tail).collect(), p.eqs().iter().map(tail).collect())
        })
        .collect();
    ConeUnion::raw(d - n, parts)
}

/// Preimage rule for `F⁻¹(Θ)`.
pub fn preimage_rule(f: &PolyMultimap, theta: &PolySet, c: &ConvexPoly, x: &RVec) -> Result<RuleReport> {
    let (n, m) = (f.in_dim(), f.out_dim());
    check_dim(n, x.dim())?;
    check_dim(m, theta.dim())?;
    check_dim(n, c.dim())?;
    let pre = preimage_set(f, theta);
    require(pre.contains(x) && c.contains(x), "x̄ must lie in F⁻¹(Θ) ∩ C")?;
    let lhs_raw = limiting_normal_wrt_raw(&pre, c, x)?;
    let ys = fiber_representatives(f, theta, x)?;
    let cx = c.product(&ConvexPoly::whole(m));
    let theta_lift = theta.lift(n + m, &(n..n + m).collect::<Vec<_>>());
    let mut rhs_parts = Vec::new();
    let mut kernel = Vec::new();
    let mut densed = Vec::new();
    for y in &ys {
        let base = x.concat(y);
        let k = limiting_normal_wrt(f.graph(), &cx, &base)?;
        let t = limiting_normal(theta, y)?;
        rhs_parts.extend(compose_with_normals(&k, &t, n).parts().iter().cloned());
        kernel.push(match nonzero_in_intersection(&t, &kernel_cone(&k, n)) {
            Some(v) => TriVerdict::fails(Certificate::Vector(v)),
            None => TriVerdict::holds(),
        });
        densed.push(normal_densed_check(f.graph(), &theta_lift, &cx, &ConvexPoly::whole(n + m), &base)?);
    }
    let restricted = PolyMultimap::new(n, m, f.graph().intersect(&theta_lift))?;
    let compact = inner_regularity_check(&restricted, c, x, None, Regularity::Semicompact)?;
    let rhs = ConeUnion::raw(n, rhs_parts).canonical();
    let inc = lhs_raw.subset_of(&rhs);
    Ok(RuleReport {
        rule: RuleId::Preimage,
        lhs: Side::Cones(lhs_raw.canonical()),
        rhs: Side::Cones(rhs),
        qualifications: vec![
            ("kernel".into(), TriVerdict::all(kernel)),
            ("normal_densed".into(), TriVerdict::all(densed)),
            ("inner_semicompact".into(), compact),
        ],
        inclusion_holds: inc.holds,
        witness: inc.witness,
        checks: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat;

    #[test]
    fn opposite_full_lines_fail_lqc() {
        let zero = PolySet::from(ConvexPoly::point(&RVec::zeros(1)));
        let r = ConvexPoly::whole(1);
        let v = lqc_wrt_check(&zero, &zero, &r, &r, &RVec::zeros(1)).unwrap();
        assert_eq!(v.value, Verdict::Fails);
        assert_eq!(v.certificate, Some(Certificate::Vector(RVec::from_ints(&[1]))));
    }

    #[test]
    fn interior_shortcut() {
        let h = PolySet::from(ConvexPoly::whole(1).with_ineq(RVec::from_ints(&[1]), rat(0)));
        let c = ConvexPoly::whole(1).with_ineq(RVec::from_ints(&[1]), rat(5));
        let v = normal_densed_check(&h, &h, &c, &c, &RVec::zeros(1)).unwrap();
        assert!(v.is_holds());
    }

    #[test]
    fn product_of_halfline_and_line() {
        let o1 = PolySet::from(ConvexPoly::nonneg(1, &[0]));
        let c1 = ConvexPoly::nonneg(1, &[0]);
        let r = ConvexPoly::whole(1);
        let rep = product_rule(&o1, &c1, &PolySet::whole(1), &r, &RVec::zeros(1), &RVec::zeros(1)).unwrap();
        assert!(rep.checks.iter().all(|(_, b)| *b));
        match rep.lhs {
            Side::Cones(u) => assert!(u.is_zero()),
            _ => unreachable!(),
        }
    }
}

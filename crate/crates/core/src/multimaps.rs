//! Polyhedral set-valued maps: coderivatives relative to a set, the Aubin
//! criterion, sum and chain rules, inner regularity.

use crate::calculus::{
    kernel_cone, nonzero_in_intersection, normal_densed_check, Certificate, RuleId, RuleReport, Side, TriVerdict,
};
use crate::cones::{limiting_normal, limiting_normal_wrt};
use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{ConeH, ConeUnion, ConvexPoly, PolyUnion, RVec, Rat};
use crate::stratify::{global_cells, local_cells_within, PolySet};

/// Default piece cap for sums and compositions.
pub const PIECE_CAP: usize = 4096;

/// `F : ℝⁿ ⇉ ℝᵐ` given by its graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMultimap {
    in_dim: usize,
    out_dim: usize,
    graph: PolySet,
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..b).collect()
}

impl PolyMultimap {
    pub fn new(in_dim: usize, out_dim: usize, graph: PolySet) -> Result<Self> {
        check_dim(in_dim + out_dim, graph.dim())?;
        Ok(PolyMultimap { in_dim, out_dim, graph })
    }

    /// `x ↦ {A x + b}` with `A` given by rows.
    pub fn linear(rows: &[RVec], b: &RVec, in_dim: usize) -> Result<Self> {
        let m = rows.len();
        check_dim(m, b.dim())?;
        let mut p = ConvexPoly::whole(in_dim + m);
        for (i, r) in rows.iter().enumerate() {
            check_dim(in_dim, r.dim())?;
            p = p.with_eq(r.concat(&RVec::unit(m, i).neg()), -b[i].clone());
        }
        Self::new(in_dim, m, PolySet::from(p))
    }

    /// `x ↦ S` for every `x`.
    pub fn constant(in_dim: usize, values: &PolySet) -> Self {
        let graph = PolySet::whole(in_dim).product(values);
        PolyMultimap { in_dim, out_dim: values.dim(), graph }
    }

    pub fn identity(n: usize) -> Self {
        let rows: Vec<RVec> = (0..n).map(|i| RVec::unit(n, i)).collect();
        Self::linear(&rows, &RVec::zeros(n), n).expect("consistent dimensions")
    }

    pub fn in_dim(&self) -> usize {
        self.in_dim
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn graph(&self) -> &PolySet {
        &self.graph
    }

    pub fn inverse(&self) -> PolyMultimap {
        let (n, m) = (self.in_dim, self.out_dim);
        let coords: Vec<usize> = range(m, m + n).into_iter().chain(0..m).collect();
        PolyMultimap { in_dim: m, out_dim: n, graph: self.graph.lift(n + m, &coords) }
    }

    pub fn domain(&self) -> PolySet {
        self.graph.project(&range(0, self.in_dim))
    }

    pub fn value_at(&self, x: &RVec) -> PolySet {
        self.graph.slice_head(x)
    }

    pub fn contains(&self, x: &RVec, y: &RVec) -> bool {
        self.graph.contains(&x.concat(y))
    }

    /// `x ↦ F(x) + G(x)`.
    pub fn sum(&self, other: &PolyMultimap) -> Result<PolyMultimap> {
        self.sum_capped(other, PIECE_CAP)
    }

    pub fn sum_capped(&self, other: &PolyMultimap, cap: usize) -> Result<PolyMultimap> {
        check_dim(self.in_dim, other.in_dim)?;
        check_dim(self.out_dim, other.out_dim)?;
        let (n, m) = (self.in_dim, self.out_dim);
        let pairs = self.graph.pieces().len() * other.graph.pieces().len();
        if pairs > cap {
            return Err(Error::Limit(format!("{pairs} piece pairs in a sum, cap {cap}")));
        }
        let d = n + 2 * m;
        let first: Vec<usize> = range(0, n + m);
        let second: Vec<usize> = range(0, n).into_iter().chain(n + m..d).collect();
        let mut image: Vec<RVec> = (0..n).map(|i| RVec::unit(d, i)).collect();
        image.extend((0..m).map(|j| RVec::unit(d, n + j).add(&RVec::unit(d, n + m + j))));
        let mut pieces = Vec::new();
        for p in self.graph.pieces() {
            for q in other.graph.pieces() {
                let fiber = p.lift(d, &first).intersect(&q.lift(d, &second));
                if let Some(img) = fiber.linear_image(&image) {
                    pieces.push(img);
                }
            }
        }
        Ok(PolyMultimap { in_dim: n, out_dim: m, graph: PolySet::pruned(n + m, pieces) })
    }

    /// `x ↦ F(G(x))` with `self = G`.
    pub fn compose(&self, f: &PolyMultimap) -> Result<PolyMultimap> {
        check_dim(self.out_dim, f.in_dim)?;
        let (n, m, s) = (self.in_dim, self.out_dim, f.out_dim);
        let pairs = self.graph.pieces().len() * f.graph.pieces().len();
        if pairs > PIECE_CAP {
            return Err(Error::Limit(format!("{pairs} piece pairs in a composition, cap {PIECE_CAP}")));
        }
        let d = n + m + s;
        let keep: Vec<usize> = range(0, n).into_iter().chain(n + m..d).collect();
        let mut pieces = Vec::new();
        for p in self.graph.pieces() {
            for q in f.graph.pieces() {
                let fiber = p.lift(d, &range(0, n + m)).intersect(&q.lift(d, &range(n, d)));
                if let Some(img) = fiber.project(&keep) {
                    pieces.push(img);
                }
            }
        }
        Ok(PolyMultimap { in_dim: n, out_dim: s, graph: PolySet::pruned(n + s, pieces) })
    }
}

/// `D*_C F(x̄, ȳ)(y*)`, a finite union of polyhedra in ℝⁿ.
#[derive(Clone, Debug)]
pub struct CoderivativeSlice {
    pub base: (RVec, RVec),
    pub wrt: ConvexPoly,
    pub ystar: RVec,
    pub result: PolyUnion,
}

fn check_base(f: &PolyMultimap, wrt: &ConvexPoly, x: &RVec, y: &RVec) -> Result<()> {
    check_dim(f.in_dim, x.dim())?;
    check_dim(f.out_dim, y.dim())?;
    check_dim(f.in_dim, wrt.dim())?;
    if !f.contains(x, y) {
        return Err(Error::PointOutside { point: x.concat(y).to_string(), set: "the graph".into() });
    }
    if !wrt.contains(x) {
        return Err(Error::Precondition("x̄ must lie in C".into()));
    }
    Ok(())
}

/// `N_{C×ℝᵐ}((x̄, ȳ), gph F)`.
pub fn coderivative_cone(f: &PolyMultimap, wrt: &ConvexPoly, x: &RVec, y: &RVec) -> Result<ConeUnion> {
    check_base(f, wrt, x, y)?;
    let c = wrt.product(&ConvexPoly::whole(f.out_dim));
    limiting_normal_wrt(&f.graph, &c, &x.concat(y))
}

pub fn coderivative_wrt(
    f: &PolyMultimap,
    wrt: &ConvexPoly,
    x: &RVec,
    y: &RVec,
    ystar: &RVec,
) -> Result<CoderivativeSlice> {
    check_dim(f.out_dim, ystar.dim())?;
    let k = coderivative_cone(f, wrt, x, y)?;
    Ok(CoderivativeSlice {
        base: (x.clone(), y.clone()),
        wrt: wrt.clone(),
        ystar: ystar.clone(),
        result: k.slice_tail(&ystar.neg()).canonical(),
    })
}

/// `{x* : (x*, 0) ∈ K}` as cones.
pub(crate) fn zero_slice(k: &ConeUnion, n: usize) -> ConeUnion {
    let head = |a: &RVec| a.slice(0, n);
    let parts = k
        .parts()
        .iter()
        .map(|p| ConeH::new(n, p.ineqs().iter().map(head).collect(), p.eqs().iter().map(head).collect()).expect("dims"))
        .collect();
    ConeUnion::new(n, parts).expect("dims")
}

/// Aubin property relative to `C`: holds iff `D*_C F(x̄, ȳ)(0) = {0}`.
pub fn aubin_wrt_check(f: &PolyMultimap, wrt: &ConvexPoly, x: &RVec, y: &RVec) -> Result<TriVerdict> {
    let k = coderivative_cone(f, wrt, x, y)?;
    let zero = zero_slice(&k, f.in_dim);
    Ok(match nonzero_in_intersection(&zero, &ConeUnion::single(ConeH::whole(f.in_dim))) {
        Some(v) => TriVerdict::fails(Certificate::Vector(v)),
        None => TriVerdict::holds(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    Semicompact,
    Semicontinuous,
    ClosedGraph,
}

/// Inner regularity of `F` relative to `C` at `x̄` (and `ȳ` for semicontinuity).
///
/// Each piece `Q` maps `proj Q` onto its slices Lipschitz-continuously, so
/// near `x̄` the test reduces to covering the local cells of `dom F ∩ C` by the
/// projections of the pieces through `(x̄, ȳ)` (semicontinuity) or through
/// `x̄` (semicompactness).
pub fn inner_regularity_check(
    f: &PolyMultimap,
    wrt: &ConvexPoly,
    x: &RVec,
    y: Option<&RVec>,
    mode: Regularity,
) -> Result<TriVerdict> {
    check_dim(f.in_dim, x.dim())?;
    check_dim(f.in_dim, wrt.dim())?;
    if mode == Regularity::ClosedGraph {
        return Ok(TriVerdict::holds_because("graph is a finite union of closed polyhedra"));
    }
    if !wrt.contains(x) {
        return Err(Error::Precondition("x̄ must lie in C".into()));
    }
    let dom = f.domain();
    let good: Vec<ConvexPoly> = match mode {
        Regularity::Semicontinuous => {
            let y = y.ok_or_else(|| Error::Precondition("semicontinuity needs ȳ".into()))?;
            check_dim(f.out_dim, y.dim())?;
            if !f.contains(x, y) {
                return Err(Error::PointOutside { point: x.concat(y).to_string(), set: "the graph".into() });
            }
            let base = x.concat(y);
            f.graph.pieces().iter().filter(|p| p.contains(&base)).cloned().collect()
        }
        _ => f.graph.pieces().iter().filter(|p| !p.slice_head(x).is_empty()).cloned().collect(),
    };
    if good.is_empty() {
        return Ok(TriVerdict::holds_because("x̄ outside the closed domain"));
    }
    let good = PolySet::pruned(f.in_dim + f.out_dim, good).project(&range(0, f.in_dim));
    let c = PolySet::from(wrt.clone());
    for cell in local_cells_within(&[&dom, &c, &good], &[true, true, false], x)? {
        if !good.contains(&cell.witness) {
            return Ok(TriVerdict::fails(Certificate::Point(cell.witness)));
        }
    }
    Ok(TriVerdict::holds())
}

/// `S(x, y) = {(y₁, y₂) : yᵢ ∈ Fᵢ(x), y₁ + y₂ = y}` on `ℝⁿ⁺ᵐ`.
pub fn sum_splitting_map(f1: &PolyMultimap, f2: &PolyMultimap) -> Result<PolyMultimap> {
    check_dim(f1.in_dim, f2.in_dim)?;
    check_dim(f1.out_dim, f2.out_dim)?;
    let (n, m) = (f1.in_dim, f1.out_dim);
    let d = n + 3 * m;
    let one = range(0, n).into_iter().chain(n + m..n + 2 * m).collect::<Vec<_>>();
    let two = range(0, n).into_iter().chain(n + 2 * m..d).collect::<Vec<_>>();
    let mut pieces = Vec::new();
    for p in f1.graph.pieces() {
        for q in f2.graph.pieces() {
            let mut piece = p.lift(d, &one).intersect(&q.lift(d, &two));
            for j in 0..m {
                let row = RVec::unit(d, n + j).sub(&RVec::unit(d, n + m + j)).sub(&RVec::unit(d, n + 2 * m + j));
                piece = piece.with_eq(row, Rat::from_integer(0.into()));
            }
            pieces.push(piece);
        }
    }
    PolyMultimap::new(n + m, 2 * m, PolySet::pruned(d, pieces))
}

fn sum_qualifications(
    f1: &PolyMultimap,
    f2: &PolyMultimap,
    c1: &ConvexPoly,
    c2: &ConvexPoly,
    x: &RVec,
    y1: &RVec,
    y2: &RVec,
) -> Result<(TriVerdict, TriVerdict)> {
    let (n, m) = (f1.in_dim, f1.out_dim);
    let k1 = coderivative_cone(f1, c1, x, y1)?;
    let k2 = coderivative_cone(f2, c2, x, y2)?;
    let q1 = match nonzero_in_intersection(&zero_slice(&k1, n), &zero_slice(&k2, n).neg()) {
        Some(v) => TriVerdict::fails(Certificate::Vector(v)),
        None => TriVerdict::holds(),
    };
    let d = n + 2 * m;
    let o1 = f1.graph.lift(d, &range(0, n + m));
    let o2 = f2.graph.lift(d, &range(0, n).into_iter().chain(n + m..d).collect::<Vec<_>>());
    let tail = ConvexPoly::whole(2 * m);
    let q2 = normal_densed_check(&o1, &o2, &c1.product(&tail), &c2.product(&tail), &x.concat(y1).concat(y2))?;
    Ok((q1, q2))
}

#[allow(clippy::too_many_arguments)]
fn slice_sum(
    f1: &PolyMultimap,
    f2: &PolyMultimap,
    c1: &ConvexPoly,
    c2: &ConvexPoly,
    x: &RVec,
    y1: &RVec,
    y2: &RVec,
    ystar: &RVec,
) -> Result<PolyUnion> {
    let a = coderivative_wrt(f1, c1, x, y1, ystar)?.result;
    let b = coderivative_wrt(f2, c2, x, y2, ystar)?.result;
    Ok(a.minkowski_sum(&b))
}

/// Sum rule at a fixed splitting `ȳ = ȳ₁ + ȳ₂`.
#[allow(clippy::too_many_arguments)]
pub fn sum_rule(
    f1: &PolyMultimap,
    f2: &PolyMultimap,
    c1: &ConvexPoly,
    c2: &ConvexPoly,
    x: &RVec,
    y1: &RVec,
    y2: &RVec,
    ystar: &RVec,
) -> Result<RuleReport> {
    check_base(f1, c1, x, y1)?;
    check_base(f2, c2, x, y2)?;
    check_dim(f1.out_dim, ystar.dim())?;
    let m = f1.out_dim;
    let y = y1.add(y2);
    let total = f1.sum(f2)?;
    let c = c1.intersect(c2);
    let lhs = coderivative_wrt(&total, &c, x, &y, ystar)?.result;
    let rhs = slice_sum(f1, f2, c1, c2, x, y1, y2, ystar)?.canonical();
    let (q1, q2) = sum_qualifications(f1, f2, c1, c2, x, y1, y2)?;
    let s = sum_splitting_map(f1, f2)?;
    let isc = inner_regularity_check(
        &s,
        &c.product(&ConvexPoly::whole(m)),
        &x.concat(&y),
        Some(&y1.concat(y2)),
        Regularity::Semicontinuous,
    )?;
    let inc = lhs.subset_of(&rhs);
    Ok(RuleReport {
        rule: RuleId::Sum,
        lhs: Side::Polyhedra(lhs),
        rhs: Side::Polyhedra(rhs),
        qualifications: vec![("q1".into(), q1), ("q2".into(), q2), ("inner_semicontinuous".into(), isc)],
        inclusion_holds: inc.holds,
        witness: inc.witness,
        checks: Vec::new(),
    })
}

/// Sum rule in union form over the cell representatives of `S(x̄, ȳ)`.
pub fn sum_rule_semicompact(
    f1: &PolyMultimap,
    f2: &PolyMultimap,
    c1: &ConvexPoly,
    c2: &ConvexPoly,
    x: &RVec,
    y: &RVec,
    ystar: &RVec,
) -> Result<RuleReport> {
    let m = f1.out_dim;
    let s = sum_splitting_map(f1, f2)?;
    let c = c1.intersect(c2);
    let total = f1.sum(f2)?;
    check_base(&total, &c, x, y)?;
    let lhs = coderivative_wrt(&total, &c, x, y, ystar)?.result;
    let fiber = s.value_at(&x.concat(y));
    let reps = global_cells(&[&fiber], &[true], 2 * m)?;
    let mut rhs = Vec::new();
    let (mut q1s, mut q2s) = (Vec::new(), Vec::new());
    for cell in reps {
        let (y1, y2) = (cell.witness.slice(0, m), cell.witness.slice(m, 2 * m));
        rhs.extend(slice_sum(f1, f2, c1, c2, x, &y1, &y2, ystar)?.parts().iter().cloned());
        let (q1, q2) = sum_qualifications(f1, f2, c1, c2, x, &y1, &y2)?;
        q1s.push(q1);
        q2s.push(q2);
    }
    let rhs = PolyUnion::new(x.dim(), rhs)?.canonical();
    let isc =
        inner_regularity_check(&s, &c.product(&ConvexPoly::whole(m)), &x.concat(y), None, Regularity::Semicompact)?;
    let inc = lhs.subset_of(&rhs);
    Ok(RuleReport {
        rule: RuleId::Sum,
        lhs: Side::Polyhedra(lhs),
        rhs: Side::Polyhedra(rhs),
        qualifications: vec![
            ("q1".into(), TriVerdict::all(q1s)),
            ("q2".into(), TriVerdict::all(q2s)),
            ("inner_semicompact".into(), isc),
            ("closed_graph".into(), TriVerdict::holds_because("graph is a finite union of closed polyhedra")),
        ],
        inclusion_holds: inc.holds,
        witness: inc.witness,
        checks: Vec::new(),
    })
}

/// `𝒮(x, z) = G(x) ∩ F⁻¹(z)` on `ℝⁿ⁺ˢ`.
pub fn chain_intermediate_map(g: &PolyMultimap, f: &PolyMultimap) -> Result<PolyMultimap> {
    check_dim(g.out_dim, f.in_dim)?;
    let (n, m, s) = (g.in_dim, g.out_dim, f.out_dim);
    let d = n + s + m;
    let gc: Vec<usize> = range(0, n).into_iter().chain(n + s..d).collect();
    let fc: Vec<usize> = range(n + s, d).into_iter().chain(n..n + s).collect();
    let mut pieces = Vec::new();
    for p in g.graph.pieces() {
        for q in f.graph.pieces() {
            pieces.push(p.lift(d, &gc).intersect(&q.lift(d, &fc)));
        }
    }
    PolyMultimap::new(n + s, m, PolySet::pruned(d, pieces))
}

/// `D*_C G(x̄, ȳ) ∘ D*F(ȳ, z̄)(z*)` at one `ȳ`.
fn composed_slice(
    g: &PolyMultimap,
    f: &PolyMultimap,
    c: &ConvexPoly,
    x: &RVec,
    y: &RVec,
    z: &RVec,
    zstar: &RVec,
) -> Result<(PolyUnion, TriVerdict, ConeUnion)> {
    let (n, m) = (g.in_dim, g.out_dim);
    let kg = coderivative_cone(g, c, x, y)?;
    let kf = limiting_normal(&f.graph, &y.concat(z))?;
    let d = n + m;
    let mut parts = Vec::new();
    for pg in kg.parts() {
        for pf in kf.parts() {
            let mut poly = ConvexPoly::whole(d);
            for a in pg.ineqs() {
                poly = poly.with_ineq(a.slice(0, n).concat(&a.slice(n, d).neg()), Rat::from_integer(0.into()));
            }
            for a in pg.eqs() {
                poly = poly.with_eq(a.slice(0, n).concat(&a.slice(n, d).neg()), Rat::from_integer(0.into()));
            }
            let lift = |a: &RVec| (RVec::zeros(n).concat(&a.slice(0, m)), a.slice(m, a.dim()).dot(zstar));
            for a in pf.ineqs() {
                let (row, b) = lift(a);
                poly = poly.with_ineq(row, b);
            }
            for a in pf.eqs() {
                let (row, b) = lift(a);
                poly = poly.with_eq(row, b);
            }
            if let Some(p) = poly.project(&range(0, n)) {
                parts.push(p);
            }
        }
    }
    let q1 = match nonzero_in_intersection(&zero_slice(&kf, m), &kernel_cone(&kg, n)) {
        Some(v) => TriVerdict::fails(Certificate::Vector(v)),
        None => TriVerdict::holds(),
    };
    Ok((PolyUnion::new(n, parts)?, q1, kg))
}

fn chain_densed(
    g: &PolyMultimap,
    f: &PolyMultimap,
    c: &ConvexPoly,
    x: &RVec,
    y: &RVec,
    z: &RVec,
) -> Result<TriVerdict> {
    let (n, m, s) = (g.in_dim, g.out_dim, f.out_dim);
    let d = n + m + s;
    let t1 = g.graph.lift(d, &range(0, n + m));
    let t2 = f.graph.lift(d, &range(n, d));
    normal_densed_check(&t1, &t2, &c.product(&ConvexPoly::whole(m + s)), &ConvexPoly::whole(d), &x.concat(y).concat(z))
}

/// Chain rule for `F ∘ G` at a fixed intermediate `ȳ`.
#[allow(clippy::too_many_arguments)]
pub fn chain_rule(
    g: &PolyMultimap,
    f: &PolyMultimap,
    c: &ConvexPoly,
    x: &RVec,
    z: &RVec,
    y: &RVec,
    zstar: &RVec,
) -> Result<RuleReport> {
    check_base(g, c, x, y)?;
    check_base(f, &ConvexPoly::whole(f.in_dim), y, z)?;
    check_dim(f.out_dim, zstar.dim())?;
    let comp = g.compose(f)?;
    let lhs = coderivative_wrt(&comp, c, x, z, zstar)?.result;
    let (rhs, q1, _) = composed_slice(g, f, c, x, y, z, zstar)?;
    let rhs = rhs.canonical();
    let q2 = chain_densed(g, f, c, x, y, z)?;
    let sm = chain_intermediate_map(g, f)?;
    let wrt = c.product(&ConvexPoly::whole(f.out_dim));
    let isc = inner_regularity_check(&sm, &wrt, &x.concat(z), Some(y), Regularity::Semicontinuous)?;
    let inc = lhs.subset_of(&rhs);
    Ok(RuleReport {
        rule: RuleId::Chain,
        lhs: Side::Polyhedra(lhs),
        rhs: Side::Polyhedra(rhs),
        qualifications: vec![("q1".into(), q1), ("q2".into(), q2), ("inner_semicontinuous".into(), isc)],
        inclusion_holds: inc.holds,
        witness: inc.witness,
        checks: Vec::new(),
    })
}

/// Chain rule in union form over the cell representatives of `𝒮(x̄, z̄)`.
pub fn chain_rule_semicompact(
    g: &PolyMultimap,
    f: &PolyMultimap,
    c: &ConvexPoly,
    x: &RVec,
    z: &RVec,
    zstar: &RVec,
) -> Result<RuleReport> {
    let comp = g.compose(f)?;
    check_base(&comp, c, x, z)?;
    let lhs = coderivative_wrt(&comp, c, x, z, zstar)?.result;
    let sm = chain_intermediate_map(g, f)?;
    let fiber = sm.value_at(&x.concat(z));
    let mut rhs = Vec::new();
    let (mut q1s, mut q2s) = (Vec::new(), Vec::new());
    for cell in global_cells(&[&fiber], &[true], g.out_dim)? {
        let y = cell.witness;
        let (part, q1, _) = composed_slice(g, f, c, x, &y, z, zstar)?;
        rhs.extend(part.parts().iter().cloned());
        q1s.push(q1);
        q2s.push(chain_densed(g, f, c, x, &y, z)?);
    }
    let rhs = PolyUnion::new(x.dim(), rhs)?.canonical();
    let wrt = c.product(&ConvexPoly::whole(f.out_dim));
    let isc = inner_regularity_check(&sm, &wrt, &x.concat(z), None, Regularity::Semicompact)?;
    let inc = lhs.subset_of(&rhs);
    Ok(RuleReport {
        rule: RuleId::Chain,
        lhs: Side::Polyhedra(lhs),
        rhs: Side::Polyhedra(rhs),
        qualifications: vec![
            ("q1".into(), TriVerdict::all(q1s)),
            ("q2".into(), TriVerdict::all(q2s)),
            ("inner_semicompact".into(), isc),
            ("closed_graph".into(), TriVerdict::holds_because("graph is a finite union of closed polyhedra")),
        ],
        inclusion_holds: inc.holds,
        witness: inc.witness,
        checks: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::Verdict;

    /// `G(x) = ℝ₊` for `x ≥ 0`.
    fn g() -> PolyMultimap {
        PolyMultimap::new(1, 1, PolySet::from(ConvexPoly::nonneg(2, &[0, 1]))).unwrap()
    }

    fn zero() -> RVec {
        RVec::zeros(1)
    }

    #[test]
    fn coderivative_at_zero_wrt_domain() {
        let s = coderivative_wrt(&g(), &ConvexPoly::nonneg(1, &[0]), &zero(), &zero(), &zero()).unwrap();
        assert!(s.result.is_origin());
    }

    #[test]
    fn aubin_depends_on_reference_set() {
        assert!(aubin_wrt_check(&g(), &ConvexPoly::nonneg(1, &[0]), &zero(), &zero()).unwrap().is_holds());
        let v = aubin_wrt_check(&g(), &ConvexPoly::whole(1), &zero(), &zero()).unwrap();
        assert_eq!(v.value, Verdict::Fails);
        assert_eq!(v.certificate, Some(Certificate::Vector(RVec::from_ints(&[-1]))));
    }

    #[test]
    fn vertical_graph_fails_aubin() {
        let f = PolyMultimap::constant(1, &PolySet::from(ConvexPoly::point(&zero()))).inverse();
        assert_eq!(aubin_wrt_check(&f, &ConvexPoly::whole(1), &zero(), &zero()).unwrap().value, Verdict::Fails);
    }

    #[test]
    fn sum_with_zero_map() {
        let z = PolyMultimap::constant(1, &PolySet::from(ConvexPoly::point(&zero())));
        let s = g().sum(&z).unwrap();
        assert!(s.graph().pieces()[0].same_set(&g().graph().pieces()[0]));
    }

    #[test]
    fn semicontinuity_of_halfline_map() {
        let c = ConvexPoly::whole(1);
        let v = inner_regularity_check(&g(), &c, &zero(), Some(&zero()), Regularity::Semicontinuous).unwrap();
        assert!(v.is_holds());
        let v = inner_regularity_check(&g(), &c, &zero(), Some(&RVec::from_ints(&[1])), Regularity::Semicontinuous)
            .unwrap();
        assert!(v.is_holds());
    }
}

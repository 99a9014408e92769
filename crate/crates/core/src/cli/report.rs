//! JSON rendering of exact results. Rationals are `"p/q"` strings, generator
//! lists are sorted, so equal inputs give byte-identical reports.

use serde_json::{json, Map, Value};

use crate::calculus::{Certificate, RuleReport, Side, TriVerdict};
use crate::exactgeom::linalg::canonical_span;
use crate::exactgeom::{fmt_rat, rat_to_f64, ConeH, ConeUnion, ConvexPoly, PolyUnion, RVec, Rat};
use crate::mpec::StationarityReport;

#[derive(Clone, Copy, Debug, Default)]
pub struct Format {
    /// Append a decimal approximation to every rational.
    pub decimal: bool,
}

impl Format {
    pub fn rat(&self, r: &Rat) -> Value {
        if self.decimal && !r.is_integer() {
            Value::String(format!("{} ~ {:.6}", fmt_rat(r), rat_to_f64(r)))
        } else {
            Value::String(fmt_rat(r))
        }
    }

    pub fn vec(&self, v: &RVec) -> Value {
        Value::Array(v.as_slice().iter().map(|r| self.rat(r)).collect())
    }

    fn vecs(&self, vs: &[RVec]) -> Value {
        Value::Array(vs.iter().map(|v| self.vec(v)).collect())
    }

    fn rows(&self, rows: &[(RVec, Rat)]) -> Value {
        Value::Array(rows.iter().map(|(a, b)| json!({"a": self.vec(a), "b": self.rat(b)})).collect())
    }

    pub fn cone(&self, c: &ConeH) -> Value {
        let c = c.canonical();
        let g = c.generators();
        let mut rays: Vec<RVec> = g.rays.iter().map(|r| r.primitive()).collect();
        rays.sort();
        let lines = canonical_span(&g.lines, c.dim());
        json!({
            "ineqs": self.vecs(c.ineqs()),
            "eqs": self.vecs(c.eqs()),
            "rays": self.vecs(&rays),
            "lines": self.vecs(&lines),
        })
    }

    pub fn cone_union(&self, u: &ConeUnion) -> Value {
        let u = u.canonical();
        json!({
            "dim": u.dim(),
            "empty": u.is_empty(),
            "parts": u.parts().iter().map(|p| self.cone(p)).collect::<Vec<_>>(),
        })
    }

    pub fn poly(&self, p: &ConvexPoly) -> Value {
        let p = p.canonical();
        let (mut points, rays, lines) = p.vertex_generators();
        points.sort();
        let mut rays: Vec<RVec> = rays.iter().map(|r| r.primitive()).collect();
        rays.sort();
        let lines = canonical_span(&lines, p.dim());
        json!({
            "ineqs": self.rows(p.ineqs()),
            "eqs": self.rows(p.eqs()),
            "points": self.vecs(&points),
            "rays": self.vecs(&rays),
            "lines": self.vecs(&lines),
        })
    }

    pub fn poly_union(&self, u: &PolyUnion) -> Value {
        let u = u.canonical();
        json!({
            "dim": u.dim(),
            "empty": u.is_empty(),
            "parts": u.parts().iter().map(|p| self.poly(p)).collect::<Vec<_>>(),
        })
    }

    pub fn side(&self, s: &Side) -> Value {
        match s {
            Side::Cones(c) => self.cone_union(c),
            Side::Polyhedra(p) => self.poly_union(p),
        }
    }

    pub fn certificate(&self, c: &Certificate) -> Value {
        match c {
            Certificate::Vector(v) => json!({"vector": self.vec(v)}),
            Certificate::Sum { first, second, sum } => {
                json!({"sum": {"first": self.vec(first), "second": self.vec(second), "total": self.vec(sum)}})
            }
            Certificate::Point(p) => json!({"point": self.vec(p)}),
            Certificate::Note(n) => json!({"note": n}),
        }
    }

    pub fn verdict(&self, v: &TriVerdict) -> Value {
        let mut m = Map::new();
        m.insert("value".into(), json!(v.value.name()));
        if let Some(c) = &v.certificate {
            m.insert("certificate".into(), self.certificate(c));
        }
        Value::Object(m)
    }

    pub fn rule(&self, r: &RuleReport, asserted: bool) -> Value {
        let quals: Map<String, Value> = r.qualifications.iter().map(|(k, v)| (k.clone(), self.verdict(v))).collect();
        let checks: Map<String, Value> = r.checks.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        json!({
            "rule": r.rule.name(),
            "lhs": self.side(&r.lhs),
            "rhs": self.side(&r.rhs),
            "qualifications": quals,
            "hypotheses_hold": r.hypotheses_hold(),
            "inclusion_asserted": asserted,
            "inclusion_holds": r.inclusion_holds,
            "witness": r.witness.as_ref().map(|w| self.vec(w)),
            "checks": checks,
        })
    }

    pub fn stationarity(&self, s: &StationarityReport) -> Value {
        json!({
            "candidate": self.vec(&s.candidate),
            "q1": self.verdict(&s.q1),
            "q2": self.verdict(&s.q2),
            "condition_necessary": s.condition_thm13,
            "aubin_wrt_g": self.verdict(&s.aubin_wrt_g),
            "condition_under_aubin": s.condition_prop15,
            "subdifferential": self.poly_union(&s.subdifferential),
            "coderivative_at_zero": self.poly_union(&s.coderivative_at_zero),
            "descent_direction": s.descent.as_ref().map(|d| self.vec(d)),
            "verdict": s.verdict.name(),
        })
    }
}

//! Problem files: named objects plus queries that reference them by name.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::calculus::Thm6Reading;
use crate::cones::ConeKind;
use crate::error::{check_dim, Error, Result};
use crate::exactgeom::{parse_rat, ConvexPoly, RVec, Rat};
use crate::multimaps::PolyMultimap;
use crate::plfunc::{PLFunc, SubdiffKind};
use crate::stratify::PolySet;

pub const VERSION: u32 = 1;

/// A rational as an integer, a `"p/q"` string, or a `[p, q]` pair.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum RatIn {
    Int(i64),
    Str(String),
    Pair([i64; 2]),
}

impl RatIn {
    fn value(&self) -> Result<Rat> {
        match self {
            RatIn::Int(v) => Ok(Rat::from_integer((*v).into())),
            RatIn::Str(s) => parse_rat(s),
            RatIn::Pair([p, q]) => {
                if *q == 0 {
                    return Err(Error::BadRational(format!("[{p}, {q}]")));
                }
                Ok(Rat::new((*p).into(), (*q).into()))
            }
        }
    }
}

fn vector(v: &[RatIn]) -> Result<RVec> {
    Ok(RVec::new(v.iter().map(RatIn::value).collect::<Result<_>>()?))
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RowIn {
    pub a: Vec<RatIn>,
    pub b: RatIn,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceIn {
    #[serde(default)]
    pub ineqs: Vec<RowIn>,
    #[serde(default)]
    pub eqs: Vec<RowIn>,
}

impl PieceIn {
    fn build(&self, dim: usize) -> Result<ConvexPoly> {
        let rows = |rs: &[RowIn]| -> Result<Vec<(RVec, Rat)>> {
            rs.iter()
                .map(|r| {
                    let a = vector(&r.a)?;
                    check_dim(dim, a.dim())?;
                    Ok((a, r.b.value()?))
                })
                .collect()
        };
        ConvexPoly::new(dim, rows(&self.ineqs)?, rows(&self.eqs)?)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ObjectIn {
    Polyset {
        dim: usize,
        pieces: Vec<PieceIn>,
    },
    Convex {
        dim: usize,
        #[serde(default)]
        ineqs: Vec<RowIn>,
        #[serde(default)]
        eqs: Vec<RowIn>,
    },
    Whole {
        dim: usize,
    },
    Intersect {
        of: Vec<String>,
    },
    Product {
        of: Vec<String>,
    },
    Multimap {
        in_dim: usize,
        out_dim: usize,
        pieces: Vec<PieceIn>,
    },
    Plfunction {
        dim: usize,
        pieces: Vec<PieceIn>,
    },
    MaxAffine {
        dim: usize,
        terms: Vec<RowIn>,
        #[serde(default)]
        domain: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReadingIn {
    Proof,
    Statement,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case", deny_unknown_fields)]
pub enum QueryIn {
    NormalCone {
        #[serde(default)]
        name: Option<String>,
        kind: String,
        omega: String,
        #[serde(default)]
        wrt: Option<String>,
        point: Vec<RatIn>,
    },
    Coderivative {
        #[serde(default)]
        name: Option<String>,
        map: String,
        #[serde(default)]
        wrt: Option<String>,
        x: Vec<RatIn>,
        y: Vec<RatIn>,
        ystar: Vec<RatIn>,
    },
    Subdiff {
        #[serde(default)]
        name: Option<String>,
        function: String,
        #[serde(default)]
        wrt: Option<String>,
        point: Vec<RatIn>,
        kind: String,
    },
    CheckAubin {
        #[serde(default)]
        name: Option<String>,
        map: String,
        #[serde(default)]
        wrt: Option<String>,
        x: Vec<RatIn>,
        y: Vec<RatIn>,
    },
    CheckLipschitz {
        #[serde(default)]
        name: Option<String>,
        function: String,
        #[serde(default)]
        wrt: Option<String>,
        point: Vec<RatIn>,
    },
    CheckLqc {
        #[serde(default)]
        name: Option<String>,
        omega1: String,
        omega2: String,
        wrt1: String,
        wrt2: String,
        point: Vec<RatIn>,
    },
    CheckNormalDensed {
        #[serde(default)]
        name: Option<String>,
        omega1: String,
        omega2: String,
        wrt1: String,
        wrt2: String,
        point: Vec<RatIn>,
    },
    RuleProduct {
        #[serde(default)]
        name: Option<String>,
        omega1: String,
        wrt1: String,
        omega2: String,
        wrt2: String,
        x1: Vec<RatIn>,
        x2: Vec<RatIn>,
    },
    RuleMixedProduct {
        #[serde(default)]
        name: Option<String>,
        omega1: String,
        wrt1: String,
        omega2: String,
        wrt2: String,
        n: usize,
        point: Vec<RatIn>,
        #[serde(default)]
        reading: Option<ReadingIn>,
    },
    RuleIntersection {
        #[serde(default)]
        name: Option<String>,
        omega1: String,
        omega2: String,
        wrt1: String,
        wrt2: String,
        point: Vec<RatIn>,
    },
    RulePreimage {
        #[serde(default)]
        name: Option<String>,
        map: String,
        theta: String,
        #[serde(default)]
        wrt: Option<String>,
        point: Vec<RatIn>,
    },
    RuleSum {
        #[serde(default)]
        name: Option<String>,
        map1: String,
        map2: String,
        wrt1: String,
        wrt2: String,
        x: Vec<RatIn>,
        /// Fixed splitting; when absent, `y` selects the union form.
        #[serde(default)]
        y1: Option<Vec<RatIn>>,
        #[serde(default)]
        y2: Option<Vec<RatIn>>,
        #[serde(default)]
        y: Option<Vec<RatIn>>,
        ystar: Vec<RatIn>,
    },
    RuleChain {
        #[serde(default)]
        name: Option<String>,
        inner: String,
        outer: String,
        #[serde(default)]
        wrt: Option<String>,
        x: Vec<RatIn>,
        z: Vec<RatIn>,
        /// Fixed intermediate point; when absent, the union form.
        #[serde(default)]
        y: Option<Vec<RatIn>>,
        zstar: Vec<RatIn>,
    },
    MpecCheck {
        #[serde(default)]
        name: Option<String>,
        function: String,
        map: String,
        wrt1: String,
        wrt2: String,
        point: Vec<RatIn>,
    },
}

impl QueryIn {
    pub fn op(&self) -> &'static str {
        match self {
            QueryIn::NormalCone { .. } => "normal-cone",
            QueryIn::Coderivative { .. } => "coderivative",
            QueryIn::Subdiff { .. } => "subdiff",
            QueryIn::CheckAubin { .. } => "check-aubin",
            QueryIn::CheckLipschitz { .. } => "check-lipschitz",
            QueryIn::CheckLqc { .. } => "check-lqc",
            QueryIn::CheckNormalDensed { .. } => "check-normal-densed",
            QueryIn::RuleProduct { .. } => "rule-product",
            QueryIn::RuleMixedProduct { .. } => "rule-mixed-product",
            QueryIn::RuleIntersection { .. } => "rule-intersection",
            QueryIn::RulePreimage { .. } => "rule-preimage",
            QueryIn::RuleSum { .. } => "rule-sum",
            QueryIn::RuleChain { .. } => "rule-chain",
            QueryIn::MpecCheck { .. } => "mpec-check",
        }
    }

    pub fn name(&self) -> Option<&str> {
        match self {
            QueryIn::NormalCone { name, .. }
            | QueryIn::Coderivative { name, .. }
            | QueryIn::Subdiff { name, .. }
            | QueryIn::CheckAubin { name, .. }
            | QueryIn::CheckLipschitz { name, .. }
            | QueryIn::CheckLqc { name, .. }
            | QueryIn::CheckNormalDensed { name, .. }
            | QueryIn::RuleProduct { name, .. }
            | QueryIn::RuleMixedProduct { name, .. }
            | QueryIn::RuleIntersection { name, .. }
            | QueryIn::RulePreimage { name, .. }
            | QueryIn::RuleSum { name, .. }
            | QueryIn::RuleChain { name, .. }
            | QueryIn::MpecCheck { name, .. } => name.as_deref(),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub version: u32,
    #[serde(default)]
    pub description: Option<String>,
    pub objects: BTreeMap<String, ObjectIn>,
    pub queries: Vec<QueryIn>,
}

/// A built object.
#[derive(Clone, Debug)]
pub enum Object {
    Set(PolySet),
    Convex(ConvexPoly),
    Map(PolyMultimap),
    Function(PLFunc),
}

/// Parse with line and column diagnostics.
pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let p: ProblemFile = serde_json::from_str(text)
        .map_err(|e| Error::Input(format!("line {}, column {}: {}", e.line(), e.column(), e)))?;
    if p.version != VERSION {
        return Err(Error::Input(format!("field `version`: unsupported version {}", p.version)));
    }
    Ok(p)
}

pub struct Workspace {
    objects: BTreeMap<String, Object>,
}

fn field_err(name: &str, e: Error) -> Error {
    match e {
        Error::Input(m) => Error::Input(format!("object `{name}`: {m}")),
        other => Error::Input(format!("object `{name}`: {other}")),
    }
}

impl Workspace {
    pub fn build(file: &ProblemFile) -> Result<Self> {
        let mut ws = Workspace { objects: BTreeMap::new() };
        let mut pending: Vec<&String> = file.objects.keys().collect();
        // composite objects may reference objects defined under later keys
        while !pending.is_empty() {
            let before = pending.len();
            let mut rest = Vec::new();
            for name in pending {
                let spec = &file.objects[name];
                let deps: Vec<&String> = match spec {
                    ObjectIn::Intersect { of } | ObjectIn::Product { of } => of.iter().collect(),
                    ObjectIn::MaxAffine { domain: Some(d), .. } => vec![d],
                    _ => Vec::new(),
                };
                for d in &deps {
                    if !file.objects.contains_key(*d) {
                        return Err(Error::Input(format!("object `{name}`: unknown reference `{d}`")));
                    }
                }
                if deps.iter().all(|d| ws.objects.contains_key(*d)) {
                    let obj = ws.make(spec).map_err(|e| field_err(name, e))?;
                    ws.objects.insert(name.clone(), obj);
                } else {
                    rest.push(name);
                }
            }
            if rest.len() == before {
                return Err(Error::Input(format!("cyclic object references among {:?}", rest)));
            }
            pending = rest;
        }
        Ok(ws)
    }

    fn make(&self, spec: &ObjectIn) -> Result<Object> {
        Ok(match spec {
            ObjectIn::Polyset { dim, pieces } => {
                Object::Set(PolySet::new(*dim, pieces.iter().map(|p| p.build(*dim)).collect::<Result<_>>()?)?)
            }
            ObjectIn::Convex { dim, ineqs, eqs } => {
                let p = PieceIn { ineqs: ineqs.clone(), eqs: eqs.clone() }.build(*dim)?;
                if p.is_empty() {
                    return Err(Error::Input("convex set is empty".into()));
                }
                Object::Convex(p)
            }
            ObjectIn::Whole { dim } => Object::Convex(ConvexPoly::whole(*dim)),
            ObjectIn::Intersect { of } => self.combine(of, true)?,
            ObjectIn::Product { of } => self.combine(of, false)?,
            ObjectIn::Multimap { in_dim, out_dim, pieces } => {
                let d = in_dim + out_dim;
                let graph = PolySet::new(d, pieces.iter().map(|p| p.build(d)).collect::<Result<_>>()?)?;
                Object::Map(PolyMultimap::new(*in_dim, *out_dim, graph)?)
            }
            ObjectIn::Plfunction { dim, pieces } => {
                Object::Function(PLFunc::new(*dim, pieces.iter().map(|p| p.build(dim + 1)).collect::<Result<_>>()?)?)
            }
            ObjectIn::MaxAffine { dim, terms, domain } => {
                let terms: Vec<(RVec, Rat)> =
                    terms.iter().map(|t| Ok((vector(&t.a)?, t.b.value()?))).collect::<Result<_>>()?;
                let f = PLFunc::max_affine(*dim, &terms)?;
                match domain {
                    None => Object::Function(f),
                    Some(d) => {
                        let dom = self.convex(d)?;
                        check_dim(*dim, dom.dim())?;
                        let lifted = dom.lift(dim + 1, &(0..*dim).collect::<Vec<_>>());
                        let pieces = f.epi().pieces().iter().map(|p| p.intersect(&lifted)).collect();
                        Object::Function(PLFunc::new(*dim, pieces)?)
                    }
                }
            }
        })
    }

    /// Intersection or product of sets; convex when every operand is convex.
    fn combine(&self, of: &[String], intersect: bool) -> Result<Object> {
        if of.is_empty() {
            return Err(Error::Input("`of` must name at least one object".into()));
        }
        if of.iter().all(|n| matches!(self.objects.get(n), Some(Object::Convex(_)))) {
            let mut acc = self.convex(&of[0])?;
            for n in &of[1..] {
                let c = self.convex(n)?;
                acc = if intersect {
                    check_dim(acc.dim(), c.dim())?;
                    acc.intersect(&c)
                } else {
                    acc.product(&c)
                };
            }
            return Ok(Object::Convex(acc));
        }
        let mut acc = self.set(&of[0])?;
        for n in &of[1..] {
            let s = self.set(n)?;
            acc = if intersect {
                check_dim(acc.dim(), s.dim())?;
                acc.intersect(&s)
            } else {
                acc.product(&s)
            };
        }
        Ok(Object::Set(acc))
    }

    fn get(&self, name: &str) -> Result<&Object> {
        self.objects.get(name).ok_or_else(|| Error::Input(format!("unknown object `{name}`")))
    }

    pub fn set(&self, name: &str) -> Result<PolySet> {
        match self.get(name)? {
            Object::Set(s) => Ok(s.clone()),
            Object::Convex(c) => Ok(PolySet::from(c.clone())),
            _ => Err(Error::Input(format!("object `{name}` is not a set"))),
        }
    }

    pub fn convex(&self, name: &str) -> Result<ConvexPoly> {
        match self.get(name)? {
            Object::Convex(c) => Ok(c.clone()),
            Object::Set(s) if s.pieces().len() == 1 => Ok(s.pieces()[0].clone()),
            _ => Err(Error::Input(format!("object `{name}` is not a convex set"))),
        }
    }

    /// The named convex set, or the whole space of dimension `dim`.
    pub fn convex_or_whole(&self, name: &Option<String>, dim: usize) -> Result<ConvexPoly> {
        match name {
            Some(n) => self.convex(n),
            None => Ok(ConvexPoly::whole(dim)),
        }
    }

    pub fn map(&self, name: &str) -> Result<PolyMultimap> {
        match self.get(name)? {
            Object::Map(m) => Ok(m.clone()),
            _ => Err(Error::Input(format!("object `{name}` is not a multimap"))),
        }
    }

    pub fn function(&self, name: &str) -> Result<PLFunc> {
        match self.get(name)? {
            Object::Function(f) => Ok(f.clone()),
            _ => Err(Error::Input(format!("object `{name}` is not a function"))),
        }
    }
}

pub fn point(v: &[RatIn]) -> Result<RVec> {
    vector(v)
}

pub fn cone_kind(s: &str) -> Result<ConeKind> {
    match s {
        "proximal" => Ok(ConeKind::Proximal),
        "frechet" => Ok(ConeKind::Frechet),
        "limiting" => Ok(ConeKind::Limiting),
        _ => Err(Error::Input(format!("field `kind`: unknown cone kind `{s}`"))),
    }
}

pub fn subdiff_kind(s: &str) -> Result<SubdiffKind> {
    match s {
        "frechet" => Ok(SubdiffKind::Frechet),
        "limiting" => Ok(SubdiffKind::Limiting),
        "horizon" => Ok(SubdiffKind::Horizon),
        _ => Err(Error::Input(format!("field `kind`: unknown subdifferential kind `{s}`"))),
    }
}

pub fn reading(r: Option<ReadingIn>) -> Thm6Reading {
    match r {
        Some(ReadingIn::Statement) => Thm6Reading::Statement,
        _ => Thm6Reading::Proof,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_field_is_rejected() {
        let text = r#"{"version": 1, "objects": {}, "queries": [], "extra": 1}"#;
        assert!(matches!(parse_problem(text), Err(Error::Input(_))));
    }

    #[test]
    fn rationals_in_three_forms() {
        let text = r#"{"version": 1, "objects": {"h": {"kind": "convex", "dim": 3,
            "ineqs": [{"a": [1, "-1/2", [3, 4]], "b": "0"}]}}, "queries": []}"#;
        let ws = Workspace::build(&parse_problem(text).unwrap()).unwrap();
        let c = ws.convex("h").unwrap();
        assert_eq!(
            c.ineqs()[0].0,
            RVec::new(vec![Rat::from_integer(1.into()), Rat::new((-1).into(), 2.into()), Rat::new(3.into(), 4.into())])
        );
    }

    #[test]
    fn references_resolve_in_any_order() {
        let text = r#"{"version": 1, "objects": {
            "a": {"kind": "intersect", "of": ["b", "c"]},
            "b": {"kind": "whole", "dim": 2},
            "c": {"kind": "convex", "dim": 2, "ineqs": [{"a": [1, 0], "b": 0}]}}, "queries": []}"#;
        let ws = Workspace::build(&parse_problem(text).unwrap()).unwrap();
        assert_eq!(ws.convex("a").unwrap().ineqs().len(), 1);
    }
}

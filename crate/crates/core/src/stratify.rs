//! Finite unions of polyhedra and their sign-vector cells.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::error::{check_dim, Error, Result};
use crate::exactgeom::region::Region;
use crate::exactgeom::{ConvexPoly, LinearProgram, RVec, Rat};

/// A finite union of nonempty closed convex polyhedra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySet {
    dim: usize,
    pieces: Vec<ConvexPoly>,
}

impl PolySet {
    pub fn new(dim: usize, pieces: Vec<ConvexPoly>) -> Result<Self> {
        for (i, p) in pieces.iter().enumerate() {
            check_dim(dim, p.dim())?;
            if p.is_empty() {
                return Err(Error::EmptyPiece(format!("piece {i}")));
            }
        }
        Ok(PolySet { dim, pieces })
    }

    /// Drops empty pieces.
    pub fn pruned(dim: usize, pieces: Vec<ConvexPoly>) -> Self {
        PolySet { dim, pieces: pieces.into_iter().filter(|p| !p.is_empty()).collect() }
    }

    pub fn whole(dim: usize) -> Self {
        PolySet { dim, pieces: vec![ConvexPoly::whole(dim)] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pieces(&self) -> &[ConvexPoly] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn contains(&self, x: &RVec) -> bool {
        self.pieces.iter().any(|p| p.contains(x))
    }

    pub fn active_pieces(&self, x: &RVec) -> Vec<usize> {
        (0..self.pieces.len()).filter(|&i| self.pieces[i].contains(x)).collect()
    }

    pub fn intersect(&self, other: &PolySet) -> PolySet {
        let mut pieces = Vec::new();
        for a in &self.pieces {
            for b in &other.pieces {
                pieces.push(a.intersect(b));
            }
        }
        Self::pruned(self.dim, pieces)
    }

    pub fn intersect_poly(&self, c: &ConvexPoly) -> PolySet {
        Self::pruned(self.dim, self.pieces.iter().map(|p| p.intersect(c)).collect())
    }

    pub fn product(&self, other: &PolySet) -> PolySet {
        let mut pieces = Vec::new();
        for a in &self.pieces {
            for b in &other.pieces {
                pieces.push(a.product(b));
            }
        }
        PolySet { dim: self.dim + other.dim, pieces }
    }

    pub fn lift(&self, dim: usize, coords: &[usize]) -> PolySet {
        PolySet { dim, pieces: self.pieces.iter().map(|p| p.lift(dim, coords)).collect() }
    }

    pub fn project(&self, keep: &[usize]) -> PolySet {
        PolySet { dim: keep.len(), pieces: self.pieces.iter().filter_map(|p| p.project(keep)).collect() }
    }

    pub fn linear_image(&self, m: &[RVec]) -> PolySet {
        PolySet { dim: m.len(), pieces: self.pieces.iter().filter_map(|p| p.linear_image(m)).collect() }
    }

    /// `{x : (x, w) in S}` for a trailing block `w`.
    pub fn slice_tail(&self, w: &RVec) -> PolySet {
        let n = self.dim - w.dim();
        Self::pruned(n, self.pieces.iter().map(|p| p.slice_tail(w)).collect())
    }
}

impl PolySet {
    /// `{y : (w, y) in S}` for a leading block `w`.
    pub fn slice_head(&self, w: &RVec) -> PolySet {
        Self::pruned(self.dim - w.dim(), self.pieces.iter().map(|p| p.slice_head(w)).collect())
    }
}

impl From<ConvexPoly> for PolySet {
    fn from(p: ConvexPoly) -> Self {
        PolySet { dim: p.dim(), pieces: vec![p] }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    fn of(r: &Rat) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    fn flip(self) -> Sign {
        match self {
            Sign::Neg => Sign::Pos,
            Sign::Zero => Sign::Zero,
            Sign::Pos => Sign::Neg,
        }
    }
}

/// Signs of the distinct hyperplanes and, per participating set, the pieces containing the cell.
///
/// Local cells use hyperplanes through the base point: `b` is zero and the sign is that of `a·(p − base)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSignature {
    pub hyperplanes: Vec<(RVec, Rat)>,
    pub signs: Vec<Sign>,
    pub membership: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub signature: CellSignature,
    pub witness: RVec,
    pub adherent: bool,
}

#[derive(Clone, Copy)]
struct RowRef {
    hyperplane: usize,
    flipped: bool,
    is_eq: bool,
}

struct Arrangement {
    hyperplanes: Vec<(RVec, Rat)>,
    // per set, per piece: rows mapped onto hyperplanes (None when the piece is ignored)
    rows: Vec<Vec<Option<Vec<RowRef>>>>,
}

impl Arrangement {
    fn build(sets: &[&PolySet], relevant: impl Fn(&ConvexPoly) -> bool, local: Option<&RVec>) -> Self {
        let mut index: BTreeMap<(RVec, Rat), usize> = BTreeMap::new();
        let mut hyperplanes = Vec::new();
        let mut rows = Vec::new();
        for s in sets {
            let mut per_set = Vec::new();
            for p in s.pieces() {
                if !relevant(p) {
                    per_set.push(None);
                    continue;
                }
                let mut refs = Vec::new();
                let all = p.ineqs().iter().map(|r| (r, false)).chain(p.eqs().iter().map(|r| (r, true)));
                for ((a, b), is_eq) in all {
                    if a.is_zero() {
                        continue;
                    }
                    if let Some(x) = local {
                        if !is_eq && a.dot(x) != *b {
                            continue;
                        }
                    }
                    let (key, flipped) = normalize_row(a, b, local.is_some());
                    let next = hyperplanes.len();
                    let h = *index.entry(key.clone()).or_insert_with(|| {
                        hyperplanes.push(key);
                        next
                    });
                    refs.push(RowRef { hyperplane: h, flipped, is_eq });
                }
                per_set.push(Some(refs));
            }
            rows.push(per_set);
        }
        Arrangement { hyperplanes, rows }
    }

    fn allowed(&self, required: &[bool]) -> Vec<[bool; 3]> {
        let mut allowed = vec![[true; 3]; self.hyperplanes.len()];
        for (s, per_set) in self.rows.iter().enumerate() {
            if !required[s] {
                continue;
            }
            let live: Vec<&Vec<RowRef>> = per_set.iter().flatten().collect();
            if live.len() != 1 {
                continue;
            }
            for r in live[0] {
                let mask = &mut allowed[r.hyperplane];
                if r.is_eq {
                    mask[0] = false;
                    mask[2] = false;
                } else if r.flipped {
                    mask[0] = false;
                } else {
                    mask[2] = false;
                }
            }
        }
        allowed
    }

    fn membership(&self, signs: &[Sign]) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|per_set| {
                (0..per_set.len())
                    .filter(|&i| match &per_set[i] {
                        None => false,
                        Some(refs) => refs.iter().all(|r| {
                            let s = if r.flipped { signs[r.hyperplane].flip() } else { signs[r.hyperplane] };
                            if r.is_eq {
                                s == Sign::Zero
                            } else {
                                s != Sign::Pos
                            }
                        }),
                    })
                    .collect()
            })
            .collect()
    }
}

fn normalize_row(a: &RVec, b: &Rat, homogeneous: bool) -> ((RVec, Rat), bool) {
    if homogeneous {
        let (n, flipped) = a.normalized_direction();
        ((n, Rat::zero()), flipped)
    } else {
        let ext = a.concat(&RVec::new(vec![b.clone()]));
        let (n, flipped) = ext.normalized_direction();
        let d = a.dim();
        ((n.slice(0, d), n[d].clone()), flipped)
    }
}

fn sign_index(s: Sign) -> usize {
    match s {
        Sign::Neg => 0,
        Sign::Zero => 1,
        Sign::Pos => 2,
    }
}

const SIGNS: [Sign; 3] = [Sign::Neg, Sign::Zero, Sign::Pos];

/// Direction `d` with `sign(h . d) = sigma` for the prefix, or `None`.
fn local_direction(dim: usize, hyper: &[(RVec, Rat)], signs: &[Sign]) -> Option<RVec> {
    let mut lp = LinearProgram::new(dim);
    for ((h, _), s) in hyper.iter().zip(signs) {
        match s {
            Sign::Neg => lp.add_ineq(h.clone(), -Rat::one()),
            Sign::Pos => lp.add_ineq(h.neg(), -Rat::one()),
            Sign::Zero => lp.add_eq(h.clone(), Rat::zero()),
        }
    }
    lp.feasible_point()
}

fn global_point(dim: usize, hyper: &[(RVec, Rat)], signs: &[Sign]) -> Option<RVec> {
    let mut closed = ConvexPoly::whole(dim);
    let mut stricts = Vec::new();
    for ((h, b), s) in hyper.iter().zip(signs) {
        match s {
            Sign::Neg => stricts.push((h.clone(), b.clone())),
            Sign::Pos => stricts.push((h.neg(), -b.clone())),
            Sign::Zero => closed = closed.with_eq(h.clone(), b.clone()),
        }
    }
    let mut r = Region::closed(closed);
    for (a, b) in stricts {
        r = r.with_strict(a, b);
    }
    r.point()
}

/// Cells of the local arrangement at `base` of all sets. Every cell is adherent to `base`.
pub fn local_cells(sets: &[&PolySet], base: &RVec) -> Result<Vec<Cell>> {
    enumerate_local(sets, &vec![false; sets.len()], base)
}

/// Local cells at `base` lying in every set flagged in `required`.
pub fn local_cells_within(sets: &[&PolySet], required: &[bool], base: &RVec) -> Result<Vec<Cell>> {
    enumerate_local(sets, required, base)
}

fn enumerate_local(sets: &[&PolySet], required: &[bool], base: &RVec) -> Result<Vec<Cell>> {
    let dim = base.dim();
    for s in sets {
        check_dim(dim, s.dim())?;
    }
    if !sets.iter().any(|s| s.contains(base)) {
        return Err(Error::BaseOutside);
    }
    if sets.iter().zip(required).any(|(s, &r)| r && !s.contains(base)) {
        return Ok(Vec::new());
    }
    let arr = Arrangement::build(sets, |p| p.contains(base), Some(base));
    let allowed = arr.allowed(required);
    let k = arr.hyperplanes.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| allowed[i].iter().filter(|&&b| b).count());
    let hyper: Vec<(RVec, Rat)> = order.iter().map(|&i| arr.hyperplanes[i].clone()).collect();
    let mut leaves: Vec<(Vec<Sign>, RVec)> = Vec::new();
    let mut stack: Vec<(Vec<Sign>, RVec)> = vec![(Vec::new(), RVec::zeros(dim))];
    while let Some((signs, d)) = stack.pop() {
        let j = signs.len();
        if j == k {
            leaves.push((signs, d));
            continue;
        }
        let current = Sign::of(&hyper[j].0.dot(&d));
        for s in SIGNS.iter().rev() {
            if !allowed[order[j]][sign_index(*s)] {
                continue;
            }
            let mut next = signs.clone();
            next.push(*s);
            if *s == current {
                stack.push((next, d.clone()));
            } else if let Some(p) = local_direction(dim, &hyper[..=j], &next) {
                stack.push((next, p));
            }
        }
    }
    let mut cells = Vec::new();
    for (signs, d) in leaves {
        let mut full = vec![Sign::Zero; k];
        for (pos, &h) in order.iter().enumerate() {
            full[h] = signs[pos];
        }
        let membership = arr.membership(&full);
        if required.iter().zip(&membership).any(|(&r, m)| r && m.is_empty()) {
            continue;
        }
        let t = step_length(sets, base, &d);
        let witness = base.axpy(&t, &d);
        cells.push(Cell {
            signature: CellSignature { hyperplanes: arr.hyperplanes.clone(), signs: full, membership },
            witness,
            adherent: true,
        });
    }
    cells.sort_by(|a, b| a.signature.signs.cmp(&b.signature.signs));
    Ok(cells)
}

/// Step keeping inactive rows inactive and far pieces far.
fn step_length(sets: &[&PolySet], base: &RVec, d: &RVec) -> Rat {
    let two = Rat::from_integer(2.into());
    let mut t = Rat::one();
    let mut bound = |gap: Rat, rate: Rat| {
        if rate.is_positive() {
            let cand = gap / (rate * &two);
            if cand < t {
                t = cand;
            }
        }
    };
    for s in sets {
        for p in s.pieces() {
            if p.contains(base) {
                for (a, b) in p.ineqs() {
                    let slack = b - a.dot(base);
                    if slack.is_positive() {
                        bound(slack, a.dot(d));
                    }
                }
            } else if let Some((a, b)) = p.ineqs().iter().find(|(a, b)| a.dot(base) > *b) {
                bound(a.dot(base) - b, -a.dot(d));
            } else if let Some((a, b)) = p.eqs().iter().find(|(a, b)| a.dot(base) != *b) {
                let gap = (a.dot(base) - b).abs();
                bound(gap, a.dot(d).abs());
            }
        }
    }
    t
}

/// Relatively open cells of the global arrangement of all rows, restricted to
/// cells lying in every set flagged in `required`.
pub fn global_cells(sets: &[&PolySet], required: &[bool], dim: usize) -> Result<Vec<Cell>> {
    for s in sets {
        check_dim(dim, s.dim())?;
    }
    let arr = Arrangement::build(sets, |_| true, None);
    let allowed = arr.allowed(required);
    let k = arr.hyperplanes.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| allowed[i].iter().filter(|&&b| b).count());
    let hyper: Vec<(RVec, Rat)> = order.iter().map(|&i| arr.hyperplanes[i].clone()).collect();
    let Some(start) = ConvexPoly::whole(dim).feasible_point() else {
        return Ok(Vec::new());
    };
    let mut leaves = Vec::new();
    let mut stack: Vec<(Vec<Sign>, RVec)> = vec![(Vec::new(), start)];
    while let Some((signs, y)) = stack.pop() {
        let j = signs.len();
        if j == k {
            leaves.push((signs, y));
            continue;
        }
        let current = Sign::of(&(hyper[j].0.dot(&y) - &hyper[j].1));
        for s in SIGNS.iter().rev() {
            if !allowed[order[j]][sign_index(*s)] {
                continue;
            }
            let mut next = signs.clone();
            next.push(*s);
            if *s == current {
                stack.push((next, y.clone()));
            } else if let Some(p) = global_point(dim, &hyper[..=j], &next) {
                stack.push((next, p));
            }
        }
    }
    let mut cells = Vec::new();
    for (signs, y) in leaves {
        let mut full = vec![Sign::Zero; k];
        for (pos, &h) in order.iter().enumerate() {
            full[h] = signs[pos];
        }
        let membership = arr.membership(&full);
        if required.iter().zip(&membership).any(|(&r, m)| r && m.is_empty()) {
            continue;
        }
        cells.push(Cell {
            signature: CellSignature { hyperplanes: arr.hyperplanes.clone(), signs: full, membership },
            witness: y,
            adherent: false,
        });
    }
    cells.sort_by(|a, b| a.signature.signs.cmp(&b.signature.signs));
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat;

    #[test]
    fn one_hyperplane_three_cells() {
        let h = PolySet::from(ConvexPoly::whole(2).with_eq(RVec::from_ints(&[1, 0]), rat(0)));
        let w = PolySet::whole(2);
        let cells = local_cells(&[&h, &w], &RVec::zeros(2)).unwrap();
        assert_eq!(cells.len(), 3);
    }

    #[test]
    fn base_outside_is_error() {
        let h = PolySet::from(ConvexPoly::whole(1).with_ineq(RVec::from_ints(&[1]), rat(-1)));
        assert_eq!(local_cells(&[&h], &RVec::zeros(1)), Err(Error::BaseOutside));
    }

    #[test]
    fn quadrant_cells_within() {
        let q = PolySet::from(ConvexPoly::nonneg(2, &[0, 1]));
        let cells = local_cells_within(&[&q], &[true], &RVec::zeros(2)).unwrap();
        // origin, two open half-axes, open quadrant
        assert_eq!(cells.len(), 4);
        for c in &cells {
            assert!(q.contains(&c.witness));
        }
    }

    #[test]
    fn global_cells_of_interval() {
        let i = PolySet::from(
            ConvexPoly::whole(1).with_ineq(RVec::from_ints(&[1]), rat(1)).with_ineq(RVec::from_ints(&[-1]), rat(0)),
        );
        let cells = global_cells(&[&i], &[true], 1).unwrap();
        assert_eq!(cells.len(), 3);
    }
}

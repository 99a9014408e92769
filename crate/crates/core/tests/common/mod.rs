#![allow(dead_code)]

pub mod suites;

use rand::Rng;
use wrtcone::exactgeom::{rat, ConeH, ConvexPoly, RVec};
use wrtcone::multimaps::PolyMultimap;
use wrtcone::plfunc::PLFunc;
use wrtcone::stratify::PolySet;

pub fn v(x: &[i64]) -> RVec {
    RVec::from_ints(x)
}

pub fn cone(dim: usize, rays: &[&[i64]]) -> ConeH {
    ConeH::from_generators(dim, rays.iter().map(|r| v(r)).collect(), Vec::new()).unwrap()
}

pub fn halfspace(dim: usize, a: &[i64]) -> ConvexPoly {
    ConvexPoly::whole(dim).with_ineq(v(a), rat(0))
}

/// The sets of the two worked examples on `(x, y, z)`.
pub struct Example {
    pub omega1: PolySet,
    pub omega2: PolySet,
    pub c: ConvexPoly,
    pub c1: ConvexPoly,
    pub c2: ConvexPoly,
}

pub fn example() -> Example {
    Example {
        omega1: PolySet::from(halfspace(3, &[1, 0, -1])),
        omega2: PolySet::from(ConvexPoly::nonneg(3, &[0, 1])),
        c: ConvexPoly::nonneg(3, &[0]),
        c1: ConvexPoly::whole(3),
        c2: ConvexPoly::nonneg(3, &[0]),
    }
}

/// `G(x) = ℝ₊` for `x ≥ 0`, empty otherwise.
pub fn final_g() -> PolyMultimap {
    PolyMultimap::new(1, 1, PolySet::from(ConvexPoly::nonneg(2, &[0, 1]))).unwrap()
}

fn small_vec<R: Rng>(rng: &mut R, dim: usize) -> RVec {
    loop {
        let a: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2..=2)).collect();
        if a.iter().any(|&x| x != 0) {
            return v(&a);
        }
    }
}

/// A polyhedron through the origin: one to three rows `a·x ≤ b`, `b ∈ {0, 1}`,
/// sometimes an equation through the origin.
pub fn random_piece<R: Rng>(rng: &mut R, dim: usize) -> ConvexPoly {
    let mut p = ConvexPoly::whole(dim);
    for _ in 0..rng.gen_range(1..=3) {
        let b = if rng.gen_bool(0.75) { 0 } else { 1 };
        p = p.with_ineq(small_vec(rng, dim), rat(b));
    }
    if dim > 1 && rng.gen_bool(0.15) {
        p = p.with_eq(small_vec(rng, dim), rat(0));
    }
    p
}

pub fn random_set<R: Rng>(rng: &mut R, dim: usize, max_pieces: usize) -> PolySet {
    let k = rng.gen_range(1..=max_pieces);
    PolySet::new(dim, (0..k).map(|_| random_piece(rng, dim)).collect()).unwrap()
}

/// The whole space or one or two halfspaces through the origin.
pub fn random_convex<R: Rng>(rng: &mut R, dim: usize) -> ConvexPoly {
    if rng.gen_bool(0.35) {
        return ConvexPoly::whole(dim);
    }
    let mut c = ConvexPoly::whole(dim);
    for _ in 0..rng.gen_range(1..=2) {
        c = c.with_ineq(small_vec(rng, dim), rat(0));
    }
    if c.is_full_dimensional() {
        c
    } else {
        ConvexPoly::whole(dim)
    }
}

pub fn random_map<R: Rng>(rng: &mut R, n: usize, m: usize, max_pieces: usize) -> PolyMultimap {
    PolyMultimap::new(n, m, random_set(rng, n + m, max_pieces)).unwrap()
}

/// Pieces bounded below in `α` by an affine map, over a random domain through the origin.
pub fn random_plfunc<R: Rng>(rng: &mut R, n: usize, max_pieces: usize) -> PLFunc {
    let k = rng.gen_range(1..=max_pieces);
    let pieces = (0..k)
        .map(|_| {
            let dom = random_piece(rng, n);
            let mut p = dom.lift(n + 1, &(0..n).collect::<Vec<_>>());
            for _ in 0..rng.gen_range(1..=2) {
                let a: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
                p = p.with_ineq(v(&a).concat(&v(&[-1])), rat(0));
            }
            p
        })
        .collect();
    PLFunc::new(n, pieces).unwrap()
}

/// Origin, or a nearby lattice point of `set ∩ c` when one is found.
pub fn random_point<R: Rng>(rng: &mut R, set: &PolySet, c: &ConvexPoly) -> RVec {
    let d = set.dim();
    if rng.gen_bool(0.5) {
        let p: Vec<i64> = (0..d).map(|_| rng.gen_range(-1..=1)).collect();
        let p = v(&p);
        if set.contains(&p) && c.contains(&p) {
            return p;
        }
    }
    RVec::zeros(d)
}

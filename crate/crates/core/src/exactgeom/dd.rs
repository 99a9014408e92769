//! Double description: extreme rays and lineality of `{x : A x <= 0, E x = 0}`.

use num_traits::{Signed, Zero};

use super::linalg::{canonical_span, reject};
use super::rat::{RVec, Rat};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DdOutput {
    pub rays: Vec<RVec>,
    pub lines: Vec<RVec>,
}

#[derive(Clone, Debug)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64).max(1)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn subset_of(&self, o: &BitSet) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    v: RVec,
    zeros: BitSet,
}

fn prepare(rows: &[RVec]) -> Vec<RVec> {
    let mut out: Vec<RVec> = rows.iter().filter(|r| !r.is_zero()).map(|r| r.primitive()).collect();
    out.sort();
    out.dedup();
    out
}

pub fn double_description(dim: usize, ineqs: &[RVec], eqs: &[RVec]) -> DdOutput {
    let eqs = prepare(eqs);
    let ineqs = prepare(ineqs);
    let total = eqs.len() + ineqs.len();
    let mut lines: Vec<RVec> = (0..dim).map(|i| RVec::unit(dim, i)).collect();
    let mut rays: Vec<Ray> = Vec::new();
    let constraints = eqs.iter().map(|a| (a, true)).chain(ineqs.iter().map(|a| (a, false)));
    for (k, (a, is_eq)) in constraints.enumerate() {
        if let Some(p) = lines.iter().position(|l| !a.dot(l).is_zero()) {
            let mut l0 = lines.remove(p);
            let mut s0 = a.dot(&l0);
            if s0.is_positive() {
                l0 = l0.neg();
                s0 = -s0;
            }
            for l in lines.iter_mut() {
                let s = a.dot(l);
                if !s.is_zero() {
                    *l = l.axpy(&(-(&s / &s0)), &l0).primitive();
                }
            }
            for r in rays.iter_mut() {
                let s = a.dot(&r.v);
                if !s.is_zero() {
                    r.v = r.v.axpy(&(-(&s / &s0)), &l0).primitive();
                }
                r.zeros.insert(k);
            }
            if !is_eq {
                // l0 is zero on every earlier constraint.
                let mut zeros = BitSet::new(total);
                for j in 0..k {
                    zeros.insert(j);
                }
                rays.push(Ray { v: l0.primitive(), zeros });
            }
            continue;
        }
        let vals: Vec<Rat> = rays.iter().map(|r| a.dot(&r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut next: Vec<Ray> = Vec::new();
        for p in &pos {
            for n in &neg {
                let common = rays[*p].zeros.and(&rays[*n].zeros);
                let adjacent = rays.iter().enumerate().all(|(i, r)| i == *p || i == *n || !common.subset_of(&r.zeros));
                if !adjacent {
                    continue;
                }
                let v = rays[*n].v.scale(&vals[*p]).axpy(&(-vals[*n].clone()), &rays[*p].v).primitive();
                let mut zeros = common;
                zeros.insert(k);
                next.push(Ray { v, zeros });
            }
        }
        for (i, r) in rays.into_iter().enumerate() {
            if vals[i].is_zero() {
                let mut r = r;
                r.zeros.insert(k);
                next.push(r);
            } else if vals[i].is_negative() && !is_eq {
                next.push(r);
            }
        }
        rays = next;
    }
    let lines = canonical_span(&lines, dim);
    let mut out_rays: Vec<RVec> =
        rays.into_iter().map(|r| reject(&r.v, &lines).primitive()).filter(|v| !v.is_zero()).collect();
    out_rays.sort();
    out_rays.dedup();
    DdOutput { rays: out_rays, lines }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthant() {
        let ineqs: Vec<RVec> = (0..3).map(|i| RVec::unit(3, i).neg()).collect();
        let out = double_description(3, &ineqs, &[]);
        assert!(out.lines.is_empty());
        assert_eq!(out.rays.len(), 3);
    }

    #[test]
    fn square_pyramid_has_four_rays() {
        // |x| <= z, |y| <= z
        let ineqs = vec![
            RVec::from_ints(&[1, 0, -1]),
            RVec::from_ints(&[-1, 0, -1]),
            RVec::from_ints(&[0, 1, -1]),
            RVec::from_ints(&[0, -1, -1]),
        ];
        let out = double_description(3, &ineqs, &[]);
        assert_eq!(out.rays.len(), 4);
        for r in &out.rays {
            assert!(ineqs.iter().all(|a| !a.dot(r).is_positive()));
        }
    }

    #[test]
    fn halfspace_with_lines() {
        let out = double_description(3, &[RVec::from_ints(&[1, 0, -1])], &[]);
        assert_eq!(out.lines.len(), 2);
        assert_eq!(out.rays, vec![RVec::from_ints(&[-1, 0, 1])]);
    }

    #[test]
    fn equality_only() {
        let out = double_description(2, &[], &[RVec::from_ints(&[1, 1])]);
        assert_eq!(out.lines, vec![RVec::from_ints(&[1, -1])]);
        assert!(out.rays.is_empty());
    }
}

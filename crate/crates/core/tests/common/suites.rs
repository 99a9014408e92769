//! Seeded instance checks shared by the acceptance and property targets.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wrtcone::calculus::{intersection_rule, mixed_product_rule, preimage_rule, product_rule, RuleReport, Thm6Reading};
use wrtcone::cones::{
    frechet_normal_wrt, limiting_from, limiting_normal_wrt, proximal_normal_wrt, proximal_sigma, ConeKind,
};
use wrtcone::exactgeom::{ratio, ConeH, ConeUnion, ConvexPoly, RVec};
use wrtcone::multimaps::{chain_rule, sum_rule};
use wrtcone::plfunc::{subdiff_via_coderivative, subdiff_wrt, SubdiffKind};
use wrtcone::stratify::PolySet;
use wrtcone::Error;

use super::*;

/// Polar of the tangent cone of each piece of `Ω ∩ C` through `x`, intersected,
/// then cut by the radial cone of `C`; built from active rows only.
pub fn frechet_oracle(omega: &PolySet, c: &ConvexPoly, x: &RVec) -> Option<ConeH> {
    let d = x.dim();
    if !omega.contains(x) || !c.contains(x) {
        return None;
    }
    let mut acc = ConeH::whole(d);
    for p in omega.pieces() {
        let q = p.intersect(c);
        if !q.contains(x) {
            continue;
        }
        let rays = q.ineqs().iter().filter(|(a, b)| a.dot(x) == *b).map(|(a, _)| a.clone()).collect();
        let lines = q.eqs().iter().map(|(a, _)| a.clone()).collect();
        acc = acc.intersect(&ConeH::from_generators(d, rays, lines).unwrap());
    }
    let active = c.ineqs().iter().filter(|(a, b)| a.dot(x) == *b).map(|(a, _)| a.clone()).collect();
    let radial = ConeH::new(d, active, c.eqs().iter().map(|(a, _)| a.clone()).collect()).unwrap();
    Some(acc.intersect(&radial))
}

fn random_cone(rng: &mut ChaCha8Rng, dim: usize) -> ConeH {
    let rows = (0..rng.gen_range(0..=4)).map(|_| random_piece(rng, dim).ineqs()[0].0.clone()).collect();
    ConeH::new(dim, rows, Vec::new()).unwrap()
}

fn rule_ok(r: &RuleReport) -> bool {
    r.inclusion_holds && r.checks.iter().all(|(_, ok)| *ok)
}

/// Names of the structural properties violated by instance `seed`.
pub fn structural_failures(seed: u64) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    let mut check = |name: &str, ok: bool| {
        if !ok {
            bad.push(format!("seed {seed}: {name}"));
        }
    };
    let dim = 1 + (seed % 3) as usize;
    let omega = random_set(&mut rng, dim, 4);
    let c = random_convex(&mut rng, dim);
    let x = random_point(&mut rng, &omega, &c);

    let fr = frechet_normal_wrt(&omega, &c, &x).unwrap().expect("x in Ω ∩ C");
    let px = proximal_normal_wrt(&omega, &c, &x).unwrap().expect("x in Ω ∩ C");
    let lim = limiting_normal_wrt(&omega, &c, &x).unwrap();
    check("frechet matches the tangent-cone oracle", fr.same_set(&frechet_oracle(&omega, &c, &x).unwrap()));
    check("proximal ⊂ frechet", px.is_subset_of(&fr));
    let pg = px.generators();
    let normals = pg.rays.iter().chain(&pg.lines).cloned().chain(pg.lines.iter().map(|l| l.neg()));
    let sigma_zero = normals.into_iter().all(|n| proximal_sigma(&omega, &c, &x, &n, &ratio(1, 64)).unwrap().is_zero());
    check("proximal inequality on the 1/64 grid", sigma_zero);
    check("frechet ⊂ limiting", ConeUnion::single(fr.clone()).subset_of(&lim).holds);
    let g = fr.generators();
    let gens: Vec<RVec> = g.rays.iter().chain(&g.lines).cloned().collect();
    let convex = gens.iter().all(|a| gens.iter().all(|b| fr.contains(&a.add(b))));
    check("frechet cone closed under sums", convex);
    let via_prox = limiting_from(&omega, &c, &x, ConeKind::Proximal).unwrap();
    let via_fr = limiting_from(&omega, &c, &x, ConeKind::Frechet).unwrap();
    check("limsup of proximal = limsup of frechet", via_prox.same_set(&via_fr));

    let k = random_cone(&mut rng, dim);
    for (name, cone) in [("frechet", &fr), ("random", &k)] {
        check(&format!("polar involution ({name})"), cone.polar().polar().same_set(cone));
        let g = cone.generators();
        let back = ConeH::from_generators(dim, g.rays.clone(), g.lines.clone()).unwrap();
        check(&format!("dd round trip ({name})"), back.same_set(cone));
    }

    let d2 = 1 + (seed / 3 % 2) as usize;
    let o2 = random_set(&mut rng, d2, 2);
    let c2 = random_convex(&mut rng, d2);
    let x2 = random_point(&mut rng, &o2, &c2);
    check("product rule equalities", rule_ok(&product_rule(&omega, &c, &o2, &c2, &x, &x2).unwrap()));

    let m1 = random_set(&mut rng, 2, 2);
    let mc1 = random_convex(&mut rng, 2);
    let m2 = random_set(&mut rng, 1, 2);
    let mc2 = random_convex(&mut rng, 1);
    let r = mixed_product_rule(&m1, &mc1, &m2, &mc2, 1, &RVec::zeros(3), Thm6Reading::Proof).unwrap();
    check("mixed product rule equalities", rule_ok(&r));

    let n = 1 + (seed % 2) as usize;
    let f = random_plfunc(&mut rng, n, 3);
    let fc = random_convex(&mut rng, n);
    let z = RVec::zeros(n);
    for kind in [SubdiffKind::Limiting, SubdiffKind::Horizon] {
        let a = subdiff_wrt(&f, &fc, &z, kind).unwrap().value;
        let b = subdiff_via_coderivative(&f, &fc, &z, kind).unwrap().value;
        check(&format!("{} subdifferential = coderivative form", kind.name()), a.same_set(&b));
    }
    bad
}

#[derive(Debug, Default, Clone, Copy)]
pub struct GuardedTally {
    pub applicable: usize,
    pub guarded: usize,
    pub counterexamples: usize,
    pub skipped: usize,
}

impl GuardedTally {
    fn record(&mut self, r: Result<RuleReport, Error>) -> Option<String> {
        match r {
            Err(Error::Limit(_)) => {
                self.skipped += 1;
                None
            }
            Err(e) => panic!("rule errored: {e}"),
            Ok(r) => {
                self.applicable += 1;
                if r.hypotheses_hold() {
                    self.guarded += 1;
                    if !r.inclusion_holds {
                        self.counterexamples += 1;
                        return Some(format!("{} rule, witness {:?}", r.rule.name(), r.witness));
                    }
                }
                None
            }
        }
    }

    pub fn add(&mut self, o: &GuardedTally) {
        self.applicable += o.applicable;
        self.guarded += o.guarded;
        self.counterexamples += o.counterexamples;
        self.skipped += o.skipped;
    }
}

/// Intersection, preimage, sum and chain rules on instance `seed`.
pub fn guarded_instance(seed: u64) -> (GuardedTally, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let mut t = GuardedTally::default();
    let mut bad = Vec::new();
    let mut note = |t: &mut GuardedTally, r| {
        if let Some(s) = t.record(r) {
            bad.push(format!("seed {seed}: {s}"));
        }
    };

    let d = 1 + (seed % 3) as usize;
    let o1 = random_set(&mut rng, d, 3);
    let o2 = random_set(&mut rng, d, 3);
    let c1 = random_convex(&mut rng, d);
    let c2 = random_convex(&mut rng, d);
    note(&mut t, intersection_rule(&o1, &o2, &c1, &c2, &RVec::zeros(d)));

    let (n, m) = (1 + (seed % 2) as usize, 1 + (seed / 2 % 2) as usize);
    let f = random_map(&mut rng, n, m, 2);
    let theta = random_set(&mut rng, m, 2);
    let c = random_convex(&mut rng, n);
    note(&mut t, preimage_rule(&f, &theta, &c, &RVec::zeros(n)));

    let f1 = random_map(&mut rng, 1, 1, 2);
    let f2 = random_map(&mut rng, 1, 1, 2);
    let (s1, s2) = (random_convex(&mut rng, 1), random_convex(&mut rng, 1));
    let ystar = RVec::from_ints(&[rng.gen_range(-2..=2)]);
    let z1 = RVec::zeros(1);
    note(&mut t, sum_rule(&f1, &f2, &s1, &s2, &z1, &z1, &z1, &ystar));

    let g = random_map(&mut rng, 1, 1, 2);
    let h = random_map(&mut rng, 1, 1, 2);
    let cc = random_convex(&mut rng, 1);
    let zstar = RVec::from_ints(&[rng.gen_range(-2..=2)]);
    note(&mut t, chain_rule(&g, &h, &cc, &z1, &z1, &z1, &zstar));
    (t, bad)
}

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p`, `p/q`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::BadRational(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => r.to_f64().unwrap_or(f64::NAN),
    }
}

pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Dense exact vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RVec(Vec<Rat>);

impl RVec {
    pub fn new(v: Vec<Rat>) -> Self {
        RVec(v)
    }

    pub fn zeros(d: usize) -> Self {
        RVec(vec![Rat::zero(); d])
    }

    pub fn unit(d: usize, i: usize) -> Self {
        let mut v = Self::zeros(d);
        v.0[i] = Rat::one();
        v
    }

    pub fn from_ints(v: &[i64]) -> Self {
        RVec(v.iter().map(|&x| rat(x)).collect())
    }

    pub fn parse(v: &[&str]) -> Result<Self> {
        v.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>().map(RVec)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Rat> {
        self.0
    }

    pub fn set(&mut self, i: usize, v: Rat) {
        self.0[i] = v;
    }

    pub fn dot(&self, o: &RVec) -> Rat {
        debug_assert_eq!(self.dim(), o.dim());
        let mut s = Rat::zero();
        for (a, b) in self.0.iter().zip(&o.0) {
            if !a.is_zero() && !b.is_zero() {
                s += a * b;
            }
        }
        s
    }

    pub fn add(&self, o: &RVec) -> RVec {
        RVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &RVec) -> RVec {
        RVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> RVec {
        RVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Rat) -> RVec {
        RVec(self.0.iter().map(|a| a * s).collect())
    }

    /// `self + s * o`
    pub fn axpy(&self, s: &Rat, o: &RVec) -> RVec {
        RVec(self.0.iter().zip(&o.0).map(|(a, b)| a + s * b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|a| a.is_zero())
    }

    pub fn concat(&self, o: &RVec) -> RVec {
        let mut v = self.0.clone();
        v.extend(o.0.iter().cloned());
        RVec(v)
    }

    pub fn select(&self, idx: &[usize]) -> RVec {
        RVec(idx.iter().map(|&i| self.0[i].clone()).collect())
    }

    pub fn slice(&self, start: usize, end: usize) -> RVec {
        RVec(self.0[start..end].to_vec())
    }

    /// Places the entries at `coords` of a zero vector of length `dim`.
    pub fn embed(&self, dim: usize, coords: &[usize]) -> RVec {
        let mut v = RVec::zeros(dim);
        for (k, &c) in coords.iter().enumerate() {
            v.0[c] = self.0[k].clone();
        }
        v
    }

    pub fn norm_inf(&self) -> Rat {
        self.0.iter().map(|a| a.abs()).max().unwrap_or_else(Rat::zero)
    }

    pub fn norm_l1(&self) -> Rat {
        self.0.iter().fold(Rat::zero(), |s, a| s + a.abs())
    }

    /// Positive multiple with coprime integer entries. Zero stays zero.
    pub fn primitive(&self) -> RVec {
        if self.is_zero() {
            return self.clone();
        }
        let mut l = BigInt::one();
        for a in &self.0 {
            l = l.lcm(a.denom());
        }
        let ints: Vec<BigInt> = self.0.iter().map(|a| (a * Rat::from_integer(l.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for a in &ints {
            g = g.gcd(a);
        }
        RVec(ints.into_iter().map(|a| Rat::from_integer(a / &g)).collect())
    }

    /// Primitive multiple whose first nonzero entry is positive.
    pub fn normalized_direction(&self) -> (RVec, bool) {
        let p = self.primitive();
        match p.0.iter().find(|a| !a.is_zero()) {
            Some(a) if a.is_negative() => (p.neg(), true),
            _ => (p, false),
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(rat_to_f64).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(fmt_rat).collect()
    }
}

impl Index<usize> for RVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl From<Vec<Rat>> for RVec {
    fn from(v: Vec<Rat>) -> Self {
        RVec(v)
    }
}

impl fmt::Display for RVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_rat(a))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(fmt_rat(&ratio(4, 2)), "2");
        assert_eq!(fmt_rat(&ratio(-1, 3)), "-1/3");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn primitive_scaling() {
        let v = RVec::new(vec![ratio(2, 3), ratio(-4, 3), rat(0)]);
        assert_eq!(v.primitive(), RVec::from_ints(&[1, -2, 0]));
        let (d, flipped) = RVec::from_ints(&[0, -2, 4]).normalized_direction();
        assert_eq!(d, RVec::from_ints(&[0, 1, -2]));
        assert!(flipped);
    }
}

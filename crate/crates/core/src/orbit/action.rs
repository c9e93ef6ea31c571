use num_traits::{One, Zero};

use super::point::Point;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};
use crate::rep::RepSpec;

/// `x[i,j](a.v) = sum_{m=0}^{i} a^m / m! x[i-m,j](v)`.
pub fn act(alpha: &Rational, v: &Point) -> Point {
    let mut out = v.clone();
    if alpha.is_zero() {
        return out;
    }
    let top = v.coords().iter().map(Vec::len).max().unwrap_or(0);
    let mut weights = vec![Rational::one()];
    for m in 1..top {
        let next = &weights[m - 1] * alpha / Rational::from_integer(m.into());
        weights.push(next);
    }
    for (j, src) in v.coords().iter().enumerate() {
        let dst = out.summand_mut(j + 1);
        for i in 0..src.len() {
            let mut acc = Rational::zero();
            for m in 0..=i {
                if !src[i - m].is_zero() {
                    acc += &weights[m] * &src[i - m];
                }
            }
            dst[i] = acc;
        }
    }
    out
}

/// A local slice `s` with its derivative `Ds`, ready for normalization.
#[derive(Clone, Debug)]
pub struct Slice {
    s: Polynomial,
    ds: Polynomial,
}

impl Slice {
    pub fn new(rep: &RepSpec, s: Polynomial) -> Result<Self> {
        let d = rep.weitzenbock();
        let ds = d.apply(&s);
        if ds.is_zero() || !d.apply(&ds).is_zero() {
            return Err(Error::NotLocalSlice);
        }
        Ok(Slice { s, ds })
    }

    pub fn s(&self) -> &Polynomial {
        &self.s
    }

    pub fn ds(&self) -> &Polynomial {
        &self.ds
    }

    /// `sigma_s(v) = act(-s(v) / Ds(v), v)`.
    pub fn normalize(&self, v: &Point) -> Result<Point> {
        let ds = self.ds.evaluate(v)?;
        if ds.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let beta = -self.s.evaluate(v)? / ds;
        Ok(act(&beta, v))
    }
}

pub fn slice_normalize(rep: &RepSpec, s: &Polynomial, v: &Point) -> Result<Point> {
    Slice::new(rep, s.clone())?.normalize(v)
}

/// Whether `w = a.v` for some rational `a`. The first nonzero `x[i,j](v)`
/// below the top of its summand fixes the only candidate `a`.
pub fn same_orbit(v: &Point, w: &Point) -> bool {
    if v == w {
        return true;
    }
    if v.coords().len() != w.coords().len() {
        return false;
    }
    for (j, src) in v.coords().iter().enumerate() {
        let Some(i) = src.iter().take(src.len().saturating_sub(1)).position(|a| !a.is_zero()) else {
            continue;
        };
        let dst = &w.coords()[j];
        if dst.len() != src.len() {
            return false;
        }
        // levels below i are zero, so x[i+1](a.v) = x[i+1](v) + a x[i](v)
        let alpha = (&dst[i + 1] - &src[i + 1]) / &src[i];
        return act(&alpha, v) == *w;
    }
    false
}

//! Roberts' inverse on single-summand isobaric invariants, transvectants in
//! the auxiliary variables `y0`, `y1`, and the semitransvectant invariants
//! `w_{j1,j2}` and `z_j`.

use std::collections::BTreeMap;

use num_traits::One;

use super::slices::{delta, f_inv, weight};
use crate::arith::{binomial, factorial, lcm_u32};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, VarId};
use crate::rep::RepSpec;

/// An invariant supported on one summand whose monomials share one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsobaricInvariant {
    poly: Polynomial,
    summand: usize,
    weight: u32,
}

impl IsobaricInvariant {
    pub fn new(rep: &RepSpec, poly: Polynomial, summand: usize) -> Result<Self> {
        let w = weight(rep, &poly, summand)?;
        if !rep.weitzenbock().annihilates(&poly) {
            return Err(Error::NotInvariant);
        }
        // invariants have nonnegative weight; anything else is not in ker D
        let weight = u32::try_from(w).map_err(|_| Error::NotInvariant)?;
        Ok(IsobaricInvariant { poly, summand, weight })
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn summand(&self) -> usize {
        self.summand
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }
}

/// `sum_{i=0}^m (-1)^i Delta_j^i(f) / i! y0^i y1^(m-i)`.
pub fn roberts_inverse(rep: &RepSpec, f: &IsobaricInvariant) -> Result<Polynomial> {
    let dl = delta(rep, f.summand)?;
    let m = f.weight;
    let mut out = Polynomial::zero();
    let mut current = f.poly.clone();
    for i in 0..=m {
        if current.is_zero() {
            break;
        }
        let sign = if i % 2 == 0 { Rational::one() } else { -Rational::one() };
        let c = sign / Rational::from_integer(factorial(i));
        let ys = Monomial::from_factors([(VarId::Y0, i), (VarId::Y1, m - i)]);
        out = &out + &current.mul_monomial(&ys, &c);
        current = dl.apply(&current);
    }
    Ok(out)
}

/// `<F, G>^r = sum_q (-1)^q C(r,q) d^r F / dy0^(r-q) dy1^q * d^r G / dy0^q dy1^(r-q)`.
pub fn transvectant(big_f: &Polynomial, big_g: &Polynomial, r: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    for q in 0..=r {
        let df = big_f.partial_n(VarId::Y0, r - q).partial_n(VarId::Y1, q);
        if df.is_zero() {
            continue;
        }
        let dg = big_g.partial_n(VarId::Y0, q).partial_n(VarId::Y1, r - q);
        if dg.is_zero() {
            continue;
        }
        let mut c = Rational::from_integer(binomial(r, q));
        if q % 2 == 1 {
            c = -c;
        }
        out = &out + &(&df * &dg).scale(&c);
    }
    out
}

fn dehomogenize(f: &Polynomial) -> Polynomial {
    let map = BTreeMap::from([(VarId::Y0, Polynomial::zero()), (VarId::Y1, Polynomial::one())]);
    f.substitute(&map)
}

/// `[f1, f2]^r`: Roberts' inverse on both, `r`-th transvectant, then
/// `y0 = 0`, `y1 = 1`.
pub fn semitransvectant(rep: &RepSpec, f1: &IsobaricInvariant, f2: &IsobaricInvariant, r: u32) -> Result<Polynomial> {
    let bound = f1.weight.min(f2.weight);
    if r > bound {
        return Err(Error::OrderTooLarge { r, bound });
    }
    let big_f = roberts_inverse(rep, f1)?;
    let big_g = roberts_inverse(rep, f2)?;
    Ok(dehomogenize(&transvectant(&big_f, &big_g, r)))
}

fn check_two_mod_four(rep: &RepSpec, j: usize) -> Result<u32> {
    let n = rep.check_summand(j)?;
    if n % 4 != 2 {
        return Err(Error::Congruence { j, n_j: n, expected: "n_j = 2 mod 4" });
    }
    Ok(n)
}

fn pair_data(rep: &RepSpec, j1: usize, j2: usize) -> Result<(u32, u32, u32)> {
    let n1 = check_two_mod_four(rep, j1)?;
    let n2 = check_two_mod_four(rep, j2)?;
    if j1 == j2 {
        return Err(Error::IndexOutOfRange { what: "w pair", i: j1 as i64, j: j2 });
    }
    Ok((n1, n2, lcm_u32(n1, n2)))
}

/// `w_{j1,j2} = [x[0,j1]^(N/n_{j1}), x[0,j2]^(N/n_{j2})]^N`, `N = lcm(n_{j1}, n_{j2})`,
/// computed through the generic semitransvectant.
pub fn w_invariant(rep: &RepSpec, j1: usize, j2: usize) -> Result<Polynomial> {
    let (n1, n2, big_n) = pair_data(rep, j1, j2)?;
    let a = IsobaricInvariant::new(rep, Polynomial::x(0, j1 as u32).pow(big_n / n1), j1)?;
    let b = IsobaricInvariant::new(rep, Polynomial::x(0, j2 as u32).pow(big_n / n2), j2)?;
    semitransvectant(rep, &a, &b, big_n)
}

/// `w_{j1,j2} = sum_q (-1)^q N! Delta_{j1}^(N-q)(x[0,j1]^a) Delta_{j2}^q(x[0,j2]^b)`.
pub fn w_closed_form(rep: &RepSpec, j1: usize, j2: usize) -> Result<Polynomial> {
    let (n1, n2, big_n) = pair_data(rep, j1, j2)?;
    let d1 = delta(rep, j1)?;
    let d2 = delta(rep, j2)?;
    let mut chain1 = vec![Polynomial::x(0, j1 as u32).pow(big_n / n1)];
    let mut chain2 = vec![Polynomial::x(0, j2 as u32).pow(big_n / n2)];
    for q in 1..=big_n as usize {
        chain1.push(d1.apply(&chain1[q - 1]));
        chain2.push(d2.apply(&chain2[q - 1]));
    }
    let n_fact = Rational::from_integer(factorial(big_n));
    let mut out = Polynomial::zero();
    for q in 0..=big_n as usize {
        let c = if q % 2 == 0 { n_fact.clone() } else { -n_fact.clone() };
        out = &out + &(&chain1[big_n as usize - q] * &chain2[q]).scale(&c);
    }
    Ok(out)
}

/// `z_j = [x[0,j], f_{n_j/4,j}]^(n_j)` for `n_j = 0 mod 4`, `n_j > 0`.
pub fn z_invariant(rep: &RepSpec, j: usize) -> Result<Polynomial> {
    let n = rep.check_summand(j)?;
    if n == 0 || n % 4 != 0 {
        return Err(Error::Congruence { j, n_j: n, expected: "n_j = 0 mod 4, n_j > 0" });
    }
    let a = IsobaricInvariant::new(rep, Polynomial::x(0, j as u32), j)?;
    let b = IsobaricInvariant::new(rep, f_inv(rep, n / 4, j)?, j)?;
    semitransvectant(rep, &a, &b, n)
}

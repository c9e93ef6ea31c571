//! Batch evaluation in integer arithmetic.
//!
//! A point with rational coordinates `a = A / L` (common denominator `L`) and
//! a polynomial with coefficients `c = C / M` evaluate to
//! `sum_t C_t prod A^e L^(D - deg t) / (M L^D)`, so the whole sum is computed
//! over `BigInt` with a single normalization at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Polynomial, Rational, VarId};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ScaledPoint {
    scale: BigInt,
    /// `powers[j-1][i][e] = A_{i,j}^e` for `e <= max_degree`
    powers: Vec<Vec<Vec<BigInt>>>,
    scale_powers: Vec<BigInt>,
}

impl ScaledPoint {
    /// `coords[j-1][i]` is the value of `x[i,j]`.
    pub fn new(coords: &[Vec<Rational>], max_degree: u32) -> Self {
        let scale = coords.iter().flatten().fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let power_table = |base: BigInt| {
            let mut v = Vec::with_capacity(max_degree as usize + 1);
            let mut acc = BigInt::one();
            v.push(acc.clone());
            for _ in 0..max_degree {
                acc *= &base;
                v.push(acc.clone());
            }
            v
        };
        let powers = coords
            .iter()
            .map(|summand| summand.iter().map(|a| power_table(a.numer() * (&scale / a.denom()))).collect())
            .collect();
        let scale_powers = power_table(scale.clone());
        ScaledPoint { scale, powers, scale_powers }
    }

    pub fn max_degree(&self) -> u32 {
        self.scale_powers.len() as u32 - 1
    }

    pub fn scale(&self) -> &BigInt {
        &self.scale
    }
}

/// Integer coefficient, degree, and `(summand, level, exponent)` factors.
type PreparedTerm = (BigInt, u32, Vec<(usize, usize, usize)>);

/// A polynomial over the main variables with integer coefficients and a
/// common denominator, ready for repeated evaluation.
#[derive(Clone, Debug)]
pub struct PreparedPolynomial {
    denominator: BigInt,
    degree: u32,
    terms: Vec<PreparedTerm>,
}

impl PreparedPolynomial {
    pub fn new(p: &Polynomial) -> Result<Self> {
        let denominator = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let coeff = c.numer() * (&denominator / c.denom());
            let mut factors = Vec::with_capacity(m.factors().len());
            for &(v, e) in m.factors() {
                match v {
                    VarId::Main { j, i } => factors.push((j as usize - 1, i as usize, e as usize)),
                    VarId::Aux(a) => return Err(Error::AuxiliaryVariable(a)),
                }
            }
            terms.push((coeff, m.degree(), factors));
        }
        Ok(PreparedPolynomial { denominator, degree: p.degree(), terms })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn evaluate(&self, point: &ScaledPoint) -> Result<Rational> {
        if self.degree > point.max_degree() {
            return Err(Error::PointShape(format!(
                "point prepared for degree {} but polynomial has degree {}",
                point.max_degree(),
                self.degree
            )));
        }
        let mut sum = BigInt::zero();
        for (coeff, deg, factors) in &self.terms {
            let mut prod = coeff * &point.scale_powers[(self.degree - deg) as usize];
            for &(j, i, e) in factors {
                let table = point
                    .powers
                    .get(j)
                    .and_then(|s| s.get(i))
                    .ok_or(Error::MissingCoordinate { i: i as u32, j: j as u32 + 1 })?;
                prod *= &table[e];
            }
            sum += prod;
        }
        let denom = &self.denominator * &point.scale_powers[self.degree as usize];
        Ok(Rational::new(sum, denom))
    }
}

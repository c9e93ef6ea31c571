use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, Rational, VarId};
use crate::error::{Error, Result};

/// Supplies values for the main variables `x[i,j]`.
pub trait Assignment {
    fn value(&self, i: u32, j: u32) -> Option<&Rational>;
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

fn accumulate(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v), Rational::one())
    }

    /// `x[i,j]`
    pub fn x(i: u32, j: u32) -> Self {
        Self::var(VarId::x(i, j))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            accumulate(&mut out, m, c);
        }
        Polynomial { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().next_back().map(Monomial::degree).unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Scales so that the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(c) => self.scale(&c.recip()),
            None => Polynomial::zero(),
        }
    }

    /// If `self = c * other` for a nonzero rational `c`, returns `c`.
    pub fn scalar_ratio(&self, other: &Polynomial) -> Option<Rational> {
        if self.len() != other.len() || self.is_zero() {
            return None;
        }
        let (m, c) = self.leading_term()?;
        let (m2, c2) = other.leading_term()?;
        if m != m2 {
            return None;
        }
        let ratio = c / c2;
        if other.scale(&ratio) == *self {
            Some(ratio)
        } else {
            None
        }
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.factors().iter().map(|&(v, _)| v)).collect()
    }

    /// Summands `j` whose variables occur in the polynomial.
    pub fn summands(&self) -> BTreeSet<u32> {
        self.variables().into_iter().filter_map(VarId::summand).collect()
    }

    pub fn has_aux(&self) -> bool {
        self.variables().iter().any(|v| !v.is_main())
    }

    /// Maximum total degree in `y0`, `y1` over all terms.
    pub fn aux_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::aux_degree).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial(&self, v: VarId) -> Polynomial {
        self.partial_n(v, 1)
    }

    /// `k`-fold partial derivative with respect to `v`.
    pub fn partial_n(&self, v: VarId, k: u32) -> Polynomial {
        if k == 0 {
            return self.clone();
        }
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e < k {
                continue;
            }
            let falling: BigInt = (0..k).fold(BigInt::one(), |acc, t| acc * (e - t));
            let reduced = m.div_var(v, k).expect("exponent checked");
            accumulate(&mut out, reduced, c * Rational::from_integer(falling));
        }
        Polynomial { terms: out }
    }

    /// Simultaneous substitution. Variables absent from `map` are kept.
    pub fn substitute(&self, map: &BTreeMap<VarId, Polynomial>) -> Polynomial {
        let mut powers: HashMap<(VarId, u32), Polynomial> = HashMap::new();
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut product = Polynomial::one();
            for &(v, e) in m.factors() {
                match map.get(&v) {
                    Some(image) => {
                        let p = powers.entry((v, e)).or_insert_with(|| image.pow(e));
                        product = &product * &*p;
                        if product.is_zero() {
                            break;
                        }
                    }
                    None => kept.push((v, e)),
                }
            }
            if product.is_zero() {
                continue;
            }
            let rest = Monomial::from_factors(kept);
            for (pm, pc) in product.terms {
                accumulate(&mut out, pm.mul(&rest), pc * c);
            }
        }
        Polynomial { terms: out }
    }

    /// Exact value at a point. Fails on auxiliary variables or missing
    /// coordinates.
    pub fn evaluate<A: Assignment + ?Sized>(&self, point: &A) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for &(v, e) in m.factors() {
                match v {
                    VarId::Aux(a) => return Err(Error::AuxiliaryVariable(a)),
                    VarId::Main { j, i } => {
                        let x = point.value(i, j).ok_or(Error::MissingCoordinate { i, j })?;
                        value *= num_traits::pow(x.clone(), e as usize);
                    }
                }
            }
            total += value;
        }
        Ok(total)
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Polynomial { terms }
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut terms, m.clone(), -c);
        }
        Polynomial { terms }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(small.len() * large.len());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        Polynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<VarId> for Polynomial {
    fn from(v: VarId) -> Self {
        Polynomial::var(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{integer, rational};

    struct Coords(Vec<Vec<Rational>>);

    impl Assignment for Coords {
        fn value(&self, i: u32, j: u32) -> Option<&Rational> {
            self.0.get(j as usize - 1)?.get(i as usize)
        }
    }

    fn x0() -> Polynomial {
        Polynomial::x(0, 1)
    }
    fn x1() -> Polynomial {
        Polynomial::x(1, 1)
    }
    fn x2() -> Polynomial {
        Polynomial::x(2, 1)
    }

    #[test]
    fn additive_inverse() {
        assert!((&x0() + &(-&x0())).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let lhs = (&x0() + &x1()) * (&x0() - &x1());
        let rhs = &x0().pow(2) - &x1().pow(2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn scale_half() {
        let two_x2 = x2().scale(&integer(2));
        assert_eq!(two_x2.scale(&rational(1, 2)), x2());
        assert!(x2().scale(&integer(0)).is_zero());
    }

    #[test]
    fn partial_derivatives() {
        let y0 = Polynomial::var(VarId::Y0);
        let y1 = Polynomial::var(VarId::Y1);
        let f = &y0.pow(2) * &y1;
        assert_eq!(f.partial(VarId::Y0), (&y0 * &y1).scale(&integer(2)));
        let g = &x0() * &y1.pow(2);
        assert!(g.partial(VarId::Y0).is_zero());
        let cube = y0.pow(3);
        let thrice = cube.partial(VarId::Y0).partial(VarId::Y0).partial(VarId::Y0);
        assert_eq!(thrice, Polynomial::constant(integer(6)));
        assert_eq!(cube.partial_n(VarId::Y0, 3), thrice);
        assert!(cube.partial_n(VarId::Y0, 4).is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let f = &(&x0() * &x2()) - &x1().pow(2).scale(&rational(1, 2));
        let p = Coords(vec![vec![integer(1), integer(2), integer(3)]]);
        assert_eq!(f.evaluate(&p).unwrap(), integer(1));
        assert_eq!(Polynomial::zero().evaluate(&p).unwrap(), integer(0));

        let g = &(&Polynomial::x(1, 2) * &Polynomial::x(0, 1)) - &(&Polynomial::x(0, 2) * &Polynomial::x(1, 1));
        let v = Coords(vec![vec![integer(1), integer(3)], vec![integer(2), integer(5)]]);
        assert_eq!(g.evaluate(&v).unwrap(), integer(-1));

        let with_y = Polynomial::var(VarId::Y0);
        assert_eq!(with_y.evaluate(&p), Err(Error::AuxiliaryVariable(0)));
        assert_eq!(Polynomial::x(0, 3).evaluate(&p), Err(Error::MissingCoordinate { i: 0, j: 3 }));
    }

    #[test]
    fn substitution() {
        let y0 = Polynomial::var(VarId::Y0);
        let y1 = Polynomial::var(VarId::Y1);
        let f = &(&y0 * &x0()) + &(&y1 * &x1());
        let map = BTreeMap::from([(VarId::Y0, Polynomial::zero()), (VarId::Y1, Polynomial::one())]);
        assert_eq!(f.substitute(&map), x1());

        let sq = x0().pow(2);
        let shift = BTreeMap::from([(VarId::x(0, 1), &x0() + &x1())]);
        let expected = &(&x0().pow(2) + &(&x0() * &x1()).scale(&integer(2))) + &x1().pow(2);
        assert_eq!(sq.substitute(&shift), expected);
    }

    #[test]
    fn leading_and_ratio() {
        let f = &(&x0() * &x2()) - &x1().pow(2).scale(&rational(1, 2));
        // x[0,1]*x[2,1] > x[1,1]^2 in graded lex
        assert_eq!(f.leading_coefficient(), Some(&integer(1)));
        let g = f.scale(&rational(-3, 7));
        assert_eq!(g.scalar_ratio(&f), Some(rational(-3, 7)));
        assert_eq!(g.monic(), f);
        assert_eq!(f.scalar_ratio(&x0()), None);
    }
}

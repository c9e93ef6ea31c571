use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use super::VarId;

/// A power product of variables. Factors are sorted by variable and carry
/// positive exponents only.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    factors: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        Monomial { degree: e, factors: vec![(v, e)] }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs,
    /// merging repeats and discarding zero exponents.
    pub fn from_factors<I: IntoIterator<Item = (VarId, u32)>>(factors: I) -> Self {
        let mut v: Vec<(VarId, u32)> = factors.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_by_key(|&(var, _)| var);
        let mut merged: Vec<(VarId, u32)> = Vec::with_capacity(v.len());
        for (var, e) in v {
            match merged.last_mut() {
                Some((last, acc)) if *last == var => *acc += e,
                _ => merged.push((var, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e).sum();
        Monomial { degree, factors: merged }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(VarId, u32)] {
        &self.factors
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.factors.binary_search_by_key(&v, |&(var, _)| var).map(|idx| self.factors[idx].1).unwrap_or(0)
    }

    /// Total degree in `y0`, `y1`.
    pub fn aux_degree(&self) -> u32 {
        self.factors.iter().filter(|(v, _)| !v.is_main()).map(|&(_, e)| e).sum()
    }

    pub fn summands(&self) -> BTreeSet<u32> {
        self.factors.iter().filter_map(|(v, _)| v.summand()).collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (0, 0);
        while a < self.factors.len() && b < other.factors.len() {
            let (va, ea) = self.factors[a];
            let (vb, eb) = other.factors[b];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ea));
                    a += 1;
                }
                Ordering::Greater => {
                    out.push((vb, eb));
                    b += 1;
                }
                Ordering::Equal => {
                    out.push((va, ea + eb));
                    a += 1;
                    b += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[a..]);
        out.extend_from_slice(&other.factors[b..]);
        Monomial { degree: self.degree + other.degree, factors: out }
    }

    /// Divides by `v^k`, returning `None` when the exponent of `v` is below `k`.
    pub fn div_var(&self, v: VarId, k: u32) -> Option<Monomial> {
        let idx = self.factors.binary_search_by_key(&v, |&(var, _)| var).ok()?;
        let e = self.factors[idx].1;
        if e < k {
            return None;
        }
        let mut factors = self.factors.clone();
        if e == k {
            factors.remove(idx);
        } else {
            factors[idx].1 = e - k;
        }
        Some(Monomial { degree: self.degree - k, factors })
    }
}

/// Graded lexicographic order; among monomials of equal degree the exponent
/// of the largest variable is most significant.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let mut a = self.factors.iter().rev();
            let mut b = other.factors.iter().rev();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va != vb {
                            return va.cmp(&vb);
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (idx, (v, e)) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

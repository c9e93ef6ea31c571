use std::collections::BTreeMap;

use super::{Monomial, Polynomial, Rational, VarId};
use crate::error::{Error, Result};

/// Iteration cap for [`Derivation::nilpotency_index`].
const MAX_ITERATIONS: usize = 100_000;

/// A derivation of the polynomial ring, given by the images of variables.
/// Variables without an image are sent to zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Derivation {
    images: BTreeMap<VarId, Polynomial>,
}

impl Derivation {
    pub fn new<I: IntoIterator<Item = (VarId, Polynomial)>>(images: I) -> Self {
        Derivation { images: images.into_iter().filter(|(_, p)| !p.is_zero()).collect() }
    }

    /// The Weitzenböck derivation `sum_j sum_{i>=1} x[i-1,j] d/dx[i,j]` for
    /// summand degrees `n_1, ..., n_k` (in that order).
    pub fn weitzenbock(summands: &[u32]) -> Self {
        let images = summands.iter().enumerate().flat_map(|(idx, &n)| {
            let j = idx as u32 + 1;
            (1..=n).map(move |i| (VarId::x(i, j), Polynomial::x(i - 1, j)))
        });
        Derivation::new(images)
    }

    pub fn image(&self, v: VarId) -> Option<&Polynomial> {
        self.images.get(&v)
    }

    pub fn images(&self) -> impl Iterator<Item = (&VarId, &Polynomial)> {
        self.images.iter()
    }

    /// `sum_v D(v) * df/dv`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        let mut out: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in f.terms() {
            for &(v, e) in m.factors() {
                let Some(image) = self.images.get(&v) else { continue };
                let rest = m.div_var(v, 1).expect("variable present");
                let coeff = c * Rational::from_integer(e.into());
                for (im, ic) in image.terms() {
                    out.push((rest.mul(im), &coeff * ic));
                }
            }
        }
        Polynomial::from_terms(out)
    }

    pub fn apply_n(&self, f: &Polynomial, times: u32) -> Polynomial {
        let mut g = f.clone();
        for _ in 0..times {
            if g.is_zero() {
                break;
            }
            g = self.apply(&g);
        }
        g
    }

    /// `[f, D f, ..., D^nu f]` where `D^{nu+1} f = 0`. Empty for `f = 0`.
    pub fn orbit(&self, f: &Polynomial) -> Result<Vec<Polynomial>> {
        let mut seq = Vec::new();
        let mut g = f.clone();
        while !g.is_zero() {
            if seq.len() >= MAX_ITERATIONS {
                return Err(Error::NotNilpotent(MAX_ITERATIONS));
            }
            let next = self.apply(&g);
            seq.push(g);
            g = next;
        }
        Ok(seq)
    }

    /// The largest `d` with `D^d f != 0`.
    pub fn nilpotency_index(&self, f: &Polynomial) -> Result<u32> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.orbit(f)?.len() as u32 - 1)
    }

    pub fn annihilates(&self, f: &Polynomial) -> bool {
        self.apply(f).is_zero()
    }

    /// Leibniz-rule defect `D(fg) - D(f) g - f D(g)`; zero for every derivation.
    pub fn leibniz_defect(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let lhs = self.apply(&(f * g));
        let rhs = &(&self.apply(f) * g) + &(f * &self.apply(g));
        &lhs - &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::integer;

    fn x(i: u32, j: u32) -> Polynomial {
        Polynomial::x(i, j)
    }

    #[test]
    fn weitzenbock_on_variables() {
        let d = Derivation::weitzenbock(&[2, 2]);
        assert_eq!(d.apply(&x(2, 1)), x(1, 1));
        assert!(d.apply(&x(0, 2)).is_zero());
        assert!(d.apply(&Polynomial::one()).is_zero());
    }

    #[test]
    fn cross_invariant_for_two_quadratics() {
        // x01 x22 - x11 x12 + x21 x02: D-terms cancel pairwise
        let d = Derivation::weitzenbock(&[2, 2]);
        let f = &(&(&x(0, 1) * &x(2, 2)) - &(&x(1, 1) * &x(1, 2))) + &(&x(2, 1) * &x(0, 2));
        assert!(d.apply(&f).is_zero());
    }

    #[test]
    fn nilpotency_examples() {
        let d = Derivation::weitzenbock(&[3, 3]);
        for i in 0..=3 {
            assert_eq!(d.nilpotency_index(&x(i, 1)).unwrap(), i);
        }
        let f1 = &(&x(0, 1) * &x(2, 1)) - &x(1, 1).pow(2).scale(&crate::arith::rational(1, 2));
        assert_eq!(d.nilpotency_index(&f1).unwrap(), 0);

        let g = &x(1, 1) * &x(2, 2);
        assert_eq!(d.nilpotency_index(&g).unwrap(), 3);
        let d3 = d.apply_n(&g, 3);
        // D^3 (x11 x22) = C(3,1) x01 x02
        assert_eq!(d3, (&x(0, 1) * &x(0, 2)).scale(&integer(3)));
        assert!(d.apply(&d3).is_zero());

        assert_eq!(d.nilpotency_index(&Polynomial::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn non_nilpotent_is_reported() {
        // D(y0) = y0 never terminates
        let d = Derivation::new([(VarId::Y0, Polynomial::var(VarId::Y0))]);
        assert!(matches!(d.nilpotency_index(&Polynomial::var(VarId::Y0)), Err(Error::NotNilpotent(_))));
    }
}

use num_traits::One;

use crate::arith::{factorial, integer, rational};
use crate::error::{Error, Result};
use crate::poly::{Derivation, Polynomial, Rational, VarId};
use crate::rep::RepSpec;

fn level_error(what: &'static str, i: u32, j: usize) -> Error {
    Error::IndexOutOfRange { what, i: i as i64, j }
}

/// `f_{i,j} = sum_{q<i} (-1)^q x[q,j] x[2i-q,j] + 1/2 (-1)^i x[i,j]^2`,
/// and `f_{0,j} = x[0,j]`. Valid for `0 <= i <= floor(n_j / 2)`.
pub fn f_inv(rep: &RepSpec, i: u32, j: usize) -> Result<Polynomial> {
    let n = rep.check_summand(j)?;
    if i > n / 2 {
        return Err(level_error("f", i, j));
    }
    let jj = j as u32;
    if i == 0 {
        return Ok(Polynomial::x(0, jj));
    }
    let sign = |q: u32| if q.is_multiple_of(2) { integer(1) } else { integer(-1) };
    let mut f = Polynomial::x(i, jj).pow(2).scale(&(sign(i) * rational(1, 2)));
    for q in 0..i {
        f = &f + &(&Polynomial::x(q, jj) * &Polynomial::x(2 * i - q, jj)).scale(&sign(q));
    }
    Ok(f)
}

/// The local slice `s_{i,j} = sum_{q<=i} (-1)^q (2i+1-2q)/2 x[q,j] x[2i+1-q,j]`
/// with `s_{0,j} = x[1,j]`. Valid for `0 <= i <= floor((n_j - 1) / 2)`;
/// satisfies `D(s_{i,j}) = f_{i,j}`.
pub fn s_slice(rep: &RepSpec, i: u32, j: usize) -> Result<Polynomial> {
    rep.check_summand(j)?;
    match rep.lower_half_top(j) {
        Some(top) if i <= top => {}
        _ => return Err(level_error("s", i, j)),
    }
    let jj = j as u32;
    if i == 0 {
        return Ok(Polynomial::x(1, jj));
    }
    let mut s = Polynomial::zero();
    for q in 0..=i {
        let c = rational((2 * i + 1 - 2 * q) as i64, 2) * if q % 2 == 0 { integer(1) } else { integer(-1) };
        s = &s + &(&Polynomial::x(q, jj) * &Polynomial::x(2 * i + 1 - q, jj)).scale(&c);
    }
    Ok(s)
}

/// `eps_s(f) = sum_{q=0}^{nu(f)} (-1)^q / q! (D^q f) s^q (D s)^{nu(f) - q}`.
pub fn epsilon(d: &Derivation, s: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ds = d.apply(s);
    if !d.apply(&ds).is_zero() {
        return Err(Error::NotLocalSlice);
    }
    let orbit = d.orbit(f)?;
    let nu = orbit.len() - 1;
    let mut s_pows = vec![Polynomial::one()];
    let mut ds_pows = vec![Polynomial::one()];
    for q in 1..=nu {
        s_pows.push(&s_pows[q - 1] * s);
        ds_pows.push(&ds_pows[q - 1] * &ds);
    }
    let mut total = Polynomial::zero();
    for (q, dq) in orbit.iter().enumerate() {
        let sign = if q % 2 == 0 { Rational::one() } else { -Rational::one() };
        let c = sign / Rational::from_integer(factorial(q as u32));
        let term = &(dq * &s_pows[q]) * &ds_pows[nu - q];
        total = &total + &term.scale(&c);
    }
    Ok(total)
}

/// `Delta_j = sum_i (n_j - i)(i + 1) x[i+1,j] d/dx[i,j]`.
pub fn delta(rep: &RepSpec, j: usize) -> Result<Derivation> {
    let n = rep.check_summand(j)?;
    let jj = j as u32;
    Ok(Derivation::new((0..n).map(|i| {
        let c = integer(((n - i) * (i + 1)) as i64);
        (VarId::x(i, jj), Polynomial::x(i + 1, jj).scale(&c))
    })))
}

/// Common value of `sum_i (n_j - 2i) e_i` over the monomials of `f`, which
/// must involve summand `j` only.
pub fn weight(rep: &RepSpec, f: &Polynomial, j: usize) -> Result<i64> {
    let n = rep.check_summand(j)? as i64;
    let mut common = None;
    for (m, _) in f.terms() {
        let mut w = 0i64;
        for &(v, e) in m.factors() {
            match v {
                VarId::Main { j: vj, i } if vj as usize == j => w += (n - 2 * i as i64) * e as i64,
                _ => return Err(Error::NotSingleSummand(j)),
            }
        }
        match common {
            None => common = Some(w),
            Some(c) if c != w => return Err(Error::NotIsobaric),
            _ => {}
        }
    }
    common.ok_or(Error::ZeroPolynomial)
}

pub fn is_isobaric(rep: &RepSpec, f: &Polynomial, j: usize) -> bool {
    weight(rep, f, j).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(s: &str) -> RepSpec {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn f_examples() {
        let r = rep("4");
        assert_eq!(f_inv(&r, 0, 1).unwrap(), Polynomial::x(0, 1));
        assert_eq!(f_inv(&r, 1, 1).unwrap(), p("x[0,1]*x[2,1] - 1/2*x[1,1]^2"));
        assert_eq!(f_inv(&r, 2, 1).unwrap(), p("x[0,1]*x[4,1] - x[1,1]*x[3,1] + 1/2*x[2,1]^2"));
        assert!(f_inv(&r, 3, 1).is_err());
        assert!(f_inv(&r, 0, 2).is_err());
    }

    #[test]
    fn s_examples() {
        let r = rep("3");
        assert_eq!(s_slice(&r, 0, 1).unwrap(), Polynomial::x(1, 1));
        assert_eq!(s_slice(&r, 1, 1).unwrap(), p("3/2*x[0,1]*x[3,1] - 1/2*x[1,1]*x[2,1]"));
        assert!(s_slice(&r, 2, 1).is_err());
        assert!(s_slice(&rep("0"), 0, 1).is_err());
        let d = r.weitzenbock();
        assert_eq!(d.apply(&s_slice(&r, 1, 1).unwrap()), f_inv(&r, 1, 1).unwrap());
    }

    #[test]
    fn slices_differentiate_to_f() {
        for n in 1..=9u32 {
            let r = RepSpec::canonicalize(&[n]).unwrap();
            let d = r.weitzenbock();
            for i in 0..=(n - 1) / 2 {
                assert_eq!(d.apply(&s_slice(&r, i, 1).unwrap()), f_inv(&r, i, 1).unwrap(), "n={n} i={i}");
            }
            for i in 0..=n / 2 {
                assert!(d.annihilates(&f_inv(&r, i, 1).unwrap()));
            }
        }
    }

    #[test]
    fn epsilon_examples() {
        // V1 + V1: eps_{s_{0,2}}(x[1,1]) = x11 x02 - x01 x12
        let r = rep("1,1");
        let d = r.weitzenbock();
        let s = s_slice(&r, 0, 2).unwrap();
        assert_eq!(epsilon(&d, &s, &Polynomial::x(1, 1)).unwrap(), p("x[1,1]*x[0,2] - x[0,1]*x[1,2]"));
        assert!(epsilon(&d, &s, &s).unwrap().is_zero());

        // eps_{s_{0,j}}(x[2,j]) = x0 f_1
        let r = rep("2");
        let d = r.weitzenbock();
        let s = s_slice(&r, 0, 1).unwrap();
        let e = epsilon(&d, &s, &Polynomial::x(2, 1)).unwrap();
        assert_eq!(e, p("x[0,1]^2*x[2,1] - 1/2*x[0,1]*x[1,1]^2"));
        assert_eq!(e, &Polynomial::x(0, 1) * &f_inv(&r, 1, 1).unwrap());

        assert_eq!(epsilon(&d, &s, &Polynomial::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(epsilon(&d, &Polynomial::x(2, 1), &Polynomial::x(1, 1)), Err(Error::NotLocalSlice));
    }

    #[test]
    fn delta_examples() {
        let r = rep("2");
        let dl = delta(&r, 1).unwrap();
        assert_eq!(dl.apply(&Polynomial::x(0, 1)), p("2*x[1,1]"));
        assert_eq!(dl.apply(&Polynomial::x(1, 1)), p("2*x[2,1]"));
        assert!(dl.apply(&Polynomial::x(2, 1)).is_zero());
        assert_eq!(dl.apply_n(&Polynomial::x(0, 1), 2), p("4*x[2,1]"));
    }

    #[test]
    fn weight_examples() {
        for n in 1..=8u32 {
            let r = RepSpec::canonicalize(&[n]).unwrap();
            assert_eq!(weight(&r, &Polynomial::x(0, 1), 1).unwrap(), n as i64);
            for i in 1..=n / 2 {
                let f = f_inv(&r, i, 1).unwrap();
                assert_eq!(weight(&r, &f, 1).unwrap(), 2 * n as i64 - 4 * i as i64);
            }
            assert!(!is_isobaric(&r, &(&Polynomial::x(0, 1) + &Polynomial::x(1, 1)), 1));
        }
        let r = rep("2,2");
        assert_eq!(weight(&r, &Polynomial::x(0, 2), 1), Err(Error::NotSingleSummand(1)));
        assert_eq!(weight(&r, &Polynomial::one(), 1).unwrap(), 0);
    }
}

use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{push_witness, Check, CheckReport};
use crate::arith::lcm_u32;
use crate::error::Result;
use crate::factory::{f_inv, s_slice, w_closed_form, w_invariant, z_invariant, Family, Indices, SeparatingSet};
use crate::poly::{Monomial, Polynomial, Rational, VarId};
use crate::rep::RepSpec;

/// `D(t) = 0` for every element.
pub fn check_invariance(set: &SeparatingSet) -> CheckReport {
    let d = set.rep.weitzenbock();
    let mut witnesses = Vec::new();
    let mut failures = 0;
    for e in &set.elements {
        let dt = d.apply(&e.poly);
        if !dt.is_zero() {
            failures += 1;
            push_witness(&mut witnesses, json!({ "element": e.label(), "derivative": dt.to_string() }));
        }
    }
    let details = json!({ "checked": set.len(), "failures": failures });
    CheckReport::new(Check::Invariance, failures > 0, details, witnesses)
}

/// `deg t <= 2n - 1`; `f` of degree at most 2, `z` of degree 3, and
/// `deg eps_{s_{i2,j2}}(x[i1,j1]) = deg(s_{i2,j2}) i1 + 1`.
pub fn check_degree(set: &SeparatingSet) -> CheckReport {
    let rep = &set.rep;
    let bound = 2 * rep.dim() as u32 - 1;
    let mut witnesses = Vec::new();
    let mut failures = 0;
    let mut by_family: BTreeMap<&'static str, u32> = BTreeMap::new();
    for e in &set.elements {
        if e.poly.is_zero() {
            continue;
        }
        let deg = e.poly.degree();
        let slot = by_family.entry(e.family.name()).or_default();
        *slot = (*slot).max(deg);
        let expected = match (e.family, e.indices) {
            (Family::Z, _) => Some(3),
            (_, Indices::Epsilon { i1, i2, .. }) => Some(if i2 == 0 { i1 + 1 } else { 2 * i1 + 1 }),
            _ => None,
        };
        let ok = deg <= bound && expected.is_none_or(|x| x == deg) && (e.family != Family::F || deg <= 2);
        if !ok {
            failures += 1;
            push_witness(&mut witnesses, json!({ "element": e.label(), "degree": deg, "expected": expected }));
        }
    }
    let details = json!({
        "max_degree": set.max_degree(),
        "bound": bound,
        "max_degree_by_family": by_family,
        "failures": failures,
    });
    CheckReport::new(Check::Degree, failures > 0, details, witnesses)
}

/// Every element involves at most two summands.
pub fn check_support(set: &SeparatingSet) -> CheckReport {
    let mut witnesses = Vec::new();
    let mut failures = 0;
    let mut max = 0;
    for e in &set.elements {
        let summands = e.poly.summands();
        max = max.max(summands.len());
        if summands.len() > 2 {
            failures += 1;
            push_witness(&mut witnesses, json!({ "element": e.label(), "summands": summands }));
        }
    }
    let details = json!({ "checked": set.len(), "max_summands": max, "failures": failures });
    CheckReport::new(Check::Support, failures > 0, details, witnesses)
}

/// `c` when `p = c * m` for the monomial `m`, `c != 0`.
fn scalar_of(p: &Polynomial, m: &Monomial) -> Option<Rational> {
    match p.terms().next() {
        Some((lead, c)) if p.len() == 1 && lead == m => Some(c.clone()),
        _ => None,
    }
}

fn x0_power(j: usize, e: u32) -> (VarId, u32) {
    (VarId::x(0, j as u32), e)
}

/// Projection images: every `Pi*(t)` lies in the `x[0,j]`, `j <= l` subring
/// and is fixed by the sign flip on `j <= l'`; `Pi*(w)`, `Pi*(z_j)` and
/// `Pi*(f_{n_j/2,j})` are nonzero multiples of the predicted monomials, with
/// the scalars recorded. Also checks both computations of `w` and the ratio
/// `w_{j2,j1} / w_{j1,j2}`.
pub fn check_projection(set: &SeparatingSet) -> Result<CheckReport> {
    let rep = &set.rep;
    let pi = rep.projection();
    let mut witnesses = Vec::new();
    let mut failures = 0;
    let mut fail = |witnesses: &mut Vec<Value>, w: Value| {
        failures += 1;
        push_witness(witnesses, w);
    };

    for e in &set.elements {
        let image = pi.apply(&e.poly);
        if !pi.in_even_base_subring(&image) {
            fail(&mut witnesses, json!({ "element": e.label(), "image": image.to_string(), "problem": "variables" }));
        } else if pi.sign_flip(&image) != image {
            fail(&mut witnesses, json!({ "element": e.label(), "image": image.to_string(), "problem": "sign" }));
        }
    }

    let lp = rep.l_prime();
    let mut w_scalars = Vec::new();
    for j1 in 1..=lp {
        for j2 in j1 + 1..=lp {
            let (n1, n2) = (rep.degree(j1), rep.degree(j2));
            let big_n = lcm_u32(n1, n2);
            let w = w_invariant(rep, j1, j2)?;
            let closed = w_closed_form(rep, j1, j2)?;
            let swapped = w_invariant(rep, j2, j1)?;
            let m = Monomial::from_factors([x0_power(j1, big_n / n1), x0_power(j2, big_n / n2)]);
            let scalar = scalar_of(&pi.apply(&w), &m);
            let ratio = swapped.scalar_ratio(&w);
            let two_path = w == closed;
            if scalar.is_none() || !two_path || ratio.is_none() {
                fail(&mut witnesses, json!({ "w": [j1, j2], "image": pi.apply(&w).to_string(), "two_path": two_path }));
            }
            w_scalars.push(json!({
                "pair": [j1, j2],
                "n": [n1, n2],
                "scalar": scalar.map(|c| c.to_string()),
                "two_path_agree": two_path,
                "swap_ratio": ratio.map(|c| c.to_string()),
            }));
        }
    }

    let mut z_scalars = Vec::new();
    for j in lp + 1..=rep.l() {
        if rep.degree(j) == 0 {
            continue;
        }
        let z = z_invariant(rep, j)?;
        let scalar = scalar_of(&pi.apply(&z), &Monomial::from_factors([x0_power(j, 3)]));
        if scalar.is_none() || z.degree() != 3 {
            fail(&mut witnesses, json!({ "z": j, "image": pi.apply(&z).to_string() }));
        }
        z_scalars.push(json!({ "j": j, "n": rep.degree(j), "scalar": scalar.map(|c| c.to_string()) }));
    }

    let mut f_scalars = Vec::new();
    for j in 1..=rep.l() {
        let n = rep.degree(j);
        let f = f_inv(rep, n / 2, j)?;
        let e = if n == 0 { 1 } else { 2 };
        let scalar = scalar_of(&pi.apply(&f), &Monomial::from_factors([x0_power(j, e)]));
        if scalar.is_none() {
            fail(&mut witnesses, json!({ "f": [n / 2, j], "image": pi.apply(&f).to_string() }));
        }
        f_scalars.push(json!({ "i": n / 2, "j": j, "n": n, "scalar": scalar.map(|c| c.to_string()) }));
    }

    let details = json!({
        "checked": set.len(),
        "w": w_scalars,
        "z": z_scalars,
        "f_middle": f_scalars,
        "failures": failures,
    });
    Ok(CheckReport::new(Check::Projection, failures > 0, details, witnesses))
}

/// `D(s_{i,j}) = f_{i,j}` for every local slice of the representation.
pub(crate) fn slice_derivatives_agree(rep: &RepSpec) -> Result<(usize, Vec<Value>)> {
    let d = rep.weitzenbock();
    let mut count = 0;
    let mut bad = Vec::new();
    for j in 1..=rep.k() {
        let Some(top) = rep.lower_half_top(j) else { continue };
        for i in 0..=top {
            count += 1;
            if d.apply(&s_slice(rep, i, j)?) != f_inv(rep, i, j)? {
                bad.push(json!({ "slice": [i, j] }));
            }
        }
    }
    Ok((count, bad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Execution;
    use crate::factory::{build_separating_set, DedupMode};
    use crate::verify::Status;

    fn set(s: &str) -> SeparatingSet {
        let rep: RepSpec = s.parse().unwrap();
        build_separating_set(&rep, DedupMode::Scalar, Execution::Sequential).unwrap()
    }

    #[test]
    fn two_quadratics() {
        let t = set("2,2");
        for r in [check_invariance(&t), check_degree(&t), check_support(&t), check_projection(&t).unwrap()] {
            assert_eq!(r.status, Status::Pass, "{:?}", r);
        }
        let p = check_projection(&t).unwrap();
        assert_eq!(p.details["w"][0]["scalar"], "-8");
        assert_eq!(p.details["w"][0]["swap_ratio"], "1");
        assert_eq!(p.details["f_middle"][0]["scalar"], "-1/2");
        assert_eq!(check_degree(&t).details["bound"], 11);
    }

    #[test]
    fn quartic_z_constant() {
        let p = check_projection(&set("4")).unwrap();
        assert_eq!(p.status, Status::Pass);
        assert_eq!(p.details["z"][0]["scalar"], "-6912");
        assert_eq!(p.details["f_middle"][0]["scalar"], "1/2");
    }

    #[test]
    fn catches_a_non_invariant() {
        let mut t = set("3");
        t.elements[0].poly = Polynomial::x(1, 1);
        assert_eq!(check_invariance(&t).status, Status::Fail);
        t.elements[0].poly = &(&Polynomial::x(0, 1) * &Polynomial::x(1, 1)) * &Polynomial::x(2, 1);
        assert_eq!(check_degree(&t).status, Status::Fail);
    }

    #[test]
    fn slices_differentiate_to_f() {
        let (count, bad) = slice_derivatives_agree(&"5,3,6".parse().unwrap()).unwrap();
        assert_eq!(count, 3 + 2 + 3);
        assert!(bad.is_empty());
    }
}

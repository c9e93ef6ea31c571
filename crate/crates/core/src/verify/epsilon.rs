use num_traits::{pow, Zero};
use serde_json::json;

use super::symbolic::slice_derivatives_agree;
use super::{push_witness, Check, CheckReport};
use crate::error::Result;
use crate::exec::Execution;
use crate::factory::{epsilon, s_slice};
use crate::orbit::{seeded_rng, Bounds, Point, Slice};
use crate::poly::{PreparedPolynomial, Rational};
use crate::rep::RepSpec;

pub(crate) const EPSILON_STREAM: u64 = 2 << 40;

/// Redraws per point before giving up on `Ds(v) != 0` for every slice.
const MAX_REDRAWS: usize = 64;

struct Pair {
    slice: usize,
    i1: u32,
    j1: usize,
    nu: usize,
    eps: PreparedPolynomial,
}

/// `eps_s(x[i1,j1])(v) = Ds(v)^nu * x[i1,j1](sigma_s(v))` for every local
/// slice `s`, every variable, on `trials` random points; plus
/// `D(s_{i,j}) = f_{i,j}` symbolically.
pub fn check_epsilon(rep: &RepSpec, trials: usize, seed: u64, bounds: Bounds, exec: Execution) -> Result<CheckReport> {
    let d = rep.weitzenbock();
    let (slice_count, bad_slices) = slice_derivatives_agree(rep)?;
    let mut slices = Vec::new();
    for j in 1..=rep.k() {
        let Some(top) = rep.lower_half_top(j) else { continue };
        for i in 0..=top {
            slices.push(((i, j), Slice::new(rep, s_slice(rep, i, j)?)?));
        }
    }
    let jobs: Vec<(usize, u32, usize)> = (0..slices.len())
        .flat_map(|k| rep.variables().filter_map(move |v| Some((k, v.level()?, v.summand()? as usize))))
        .collect();
    let pairs = exec
        .map(&jobs, |&(k, i1, j1)| -> Result<Pair> {
            let x = crate::poly::Polynomial::x(i1, j1 as u32);
            let eps = epsilon(&d, slices[k].1.s(), &x)?;
            let nu = d.nilpotency_index(&x)? as usize;
            Ok(Pair { slice: k, i1, j1, nu, eps: PreparedPolynomial::new(&eps)? })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let max_degree = pairs.iter().map(|p| p.eps.degree()).max().unwrap_or(0);

    let outcomes =
        exec.map_range(if slices.is_empty() { 0 } else { trials }, |t| -> Result<(usize, Vec<serde_json::Value>)> {
            let mut rng = seeded_rng(seed, EPSILON_STREAM + t as u64);
            let mut v = Point::random(rep, &mut rng, bounds);
            let mut redraws = 0;
            while slices.iter().any(|(_, s)| s.ds().evaluate(&v).map_or(true, |x| x.is_zero())) && redraws < MAX_REDRAWS
            {
                v = Point::random(rep, &mut rng, bounds);
                redraws += 1;
            }
            let scaled = v.scaled(max_degree);
            let normalized: Vec<Option<(Point, Rational)>> = slices
                .iter()
                .map(|(_, s)| {
                    let ds = s.ds().evaluate(&v).ok()?;
                    Some((s.normalize(&v).ok()?, ds))
                })
                .collect();
            let mut bad = Vec::new();
            let mut checked = 0;
            for p in &pairs {
                let Some((sigma, ds)) = &normalized[p.slice] else { continue };
                checked += 1;
                let lhs = p.eps.evaluate(&scaled)?;
                let rhs = pow(ds.clone(), p.nu) * sigma.get(p.i1, p.j1);
                if lhs != rhs {
                    let (i2, j2) = slices[p.slice].0;
                    bad.push(json!({
                        "slice": [i2, j2],
                        "variable": [p.i1, p.j1],
                        "point": v.to_strings(),
                        "lhs": lhs.to_string(),
                        "rhs": rhs.to_string(),
                    }));
                }
            }
            Ok((checked, bad))
        });

    let mut checked = 0;
    let mut points = 0;
    let mut failures = bad_slices.len();
    let mut witnesses = Vec::new();
    for w in bad_slices {
        push_witness(&mut witnesses, w);
    }
    for outcome in outcomes {
        let (c, bad) = outcome?;
        checked += c;
        points += usize::from(c == pairs.len());
        failures += bad.len();
        for w in bad {
            push_witness(&mut witnesses, w);
        }
    }
    let short = !slices.is_empty() && points < trials;
    let details = json!({
        "slices": slice_count,
        "pairs": pairs.len(),
        "points": points,
        "evaluations": checked,
        "failures": failures,
    });
    Ok(CheckReport::new(Check::Epsilon, failures > 0 || short, details, witnesses))
}

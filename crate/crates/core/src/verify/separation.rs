use std::collections::BTreeMap;

use num_traits::Zero;
use rand::Rng;
use serde::Serialize;
use serde_json::json;

use super::{push_witness, Check, CheckReport};
use crate::error::Result;
use crate::exec::Execution;
use crate::factory::{SeparatingSet, TaggedInvariant};
use crate::orbit::{act, seeded_rng, Bounds, Oracle, Point, Stratum};
use crate::poly::{PreparedPolynomial, Rational};
use crate::rep::RepSpec;

pub(crate) const SEPARATION_STREAM: u64 = 1 << 40;

/// Evaluates every element of `T` at rational points in integer arithmetic.
pub struct Evaluator<'a> {
    set: &'a SeparatingSet,
    prepared: Vec<PreparedPolynomial>,
    max_degree: u32,
}

impl<'a> Evaluator<'a> {
    pub fn new(set: &'a SeparatingSet) -> Result<Self> {
        let prepared = set.elements.iter().map(|e| PreparedPolynomial::new(&e.poly)).collect::<Result<_>>()?;
        Ok(Evaluator { set, prepared, max_degree: set.max_degree() })
    }

    pub fn values(&self, v: &Point) -> Result<Vec<Rational>> {
        let scaled = v.scaled(self.max_degree);
        self.prepared.iter().map(|p| p.evaluate(&scaled)).collect()
    }

    /// The first element of `T` taking different values at `v` and `w`.
    pub fn first_difference(&self, v: &Point, w: &Point) -> Result<Option<(&'a TaggedInvariant, Rational, Rational)>> {
        let (sv, sw) = (v.scaled(self.max_degree), w.scaled(self.max_degree));
        for (e, p) in self.set.elements.iter().zip(&self.prepared) {
            let (a, b) = (p.evaluate(&sv)?, p.evaluate(&sw)?);
            if a != b {
                return Ok(Some((e, a, b)));
            }
        }
        Ok(None)
    }
}

/// How the second point of a random pair is produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    /// Two independent points.
    Generic,
    /// Two independent points of `Z`.
    InZ,
    /// A point of `Z` and its global sign flip on the `2 mod 4` block, upper
    /// coordinates redrawn.
    ZFlip,
    /// As `ZFlip`, flipping the first even summand only.
    ZPartialFlip,
    /// Two independent points with a random prefix of the scan zeroed.
    LowZeros,
    /// An orbit point of `v` with the first nonzero scanned coordinate negated.
    LowZerosMirror,
    /// `v` and `a.v`.
    Orbit,
    /// `a.v` with one coordinate shifted.
    Perturbed,
}

impl PairKind {
    pub const ALL: [PairKind; 8] = [
        PairKind::Generic,
        PairKind::InZ,
        PairKind::ZFlip,
        PairKind::ZPartialFlip,
        PairKind::LowZeros,
        PairKind::LowZerosMirror,
        PairKind::Orbit,
        PairKind::Perturbed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PairKind::Generic => "generic",
            PairKind::InZ => "in_Z",
            PairKind::ZFlip => "z_flip",
            PairKind::ZPartialFlip => "z_partial_flip",
            PairKind::LowZeros => "low_zeros",
            PairKind::LowZerosMirror => "low_zeros_mirror",
            PairKind::Orbit => "orbit",
            PairKind::Perturbed => "perturbed",
        }
    }

    /// Pair `t` of a run uses kind `t mod 8`.
    pub fn for_trial(t: usize) -> PairKind {
        PairKind::ALL[t % PairKind::ALL.len()]
    }
}

fn nonzero<R: Rng + ?Sized>(rng: &mut R, bounds: Bounds) -> Rational {
    loop {
        let a = bounds.sample(rng);
        if !a.is_zero() {
            return a;
        }
    }
}

/// Redraws every coordinate above the lower half except the middle ones of
/// even summands, which are all invariants see on `Z`.
fn redraw_upper<R: Rng + ?Sized>(rep: &RepSpec, p: &mut Point, rng: &mut R, bounds: Bounds) {
    for j in 1..=rep.k() {
        let n = rep.degree(j);
        let start = rep.lower_half_top(j).map_or(0, |t| t + 1);
        for i in start..=n {
            if n.is_multiple_of(2) && i == n / 2 {
                continue;
            }
            p.set(i, j, bounds.sample(rng));
        }
    }
}

pub(crate) fn make_pair<R: Rng + ?Sized>(rep: &RepSpec, kind: PairKind, rng: &mut R, bounds: Bounds) -> (Point, Point) {
    let strata = Stratum::ALL;
    match kind {
        PairKind::Generic => (Point::random(rep, rng, bounds), Point::random(rep, rng, bounds)),
        PairKind::InZ => {
            (Point::random_in(rep, rng, Stratum::InZ, bounds), Point::random_in(rep, rng, Stratum::InZ, bounds))
        }
        PairKind::ZFlip | PairKind::ZPartialFlip => {
            let v = Point::random_in(rep, rng, Stratum::InZ, bounds);
            let mut w = v.clone();
            let last = if kind == PairKind::ZFlip { rep.l_prime() } else { rep.l().min(1) };
            for j in 1..=last {
                let n = rep.degree(j);
                let t = -v.get(n / 2, j).clone();
                w.set(n / 2, j, t);
            }
            redraw_upper(rep, &mut w, rng, bounds);
            (v, w)
        }
        PairKind::LowZeros => (
            Point::random_in(rep, rng, Stratum::LowZeros, bounds),
            Point::random_in(rep, rng, Stratum::LowZeros, bounds),
        ),
        PairKind::LowZerosMirror => {
            let v = Point::random_in(rep, rng, Stratum::LowZeros, bounds);
            let mut w = v.clone();
            'scan: for j in 1..=rep.k() {
                let Some(top) = rep.lower_half_top(j) else { continue };
                for i in 0..=top {
                    if !v.get(i, j).is_zero() {
                        w.set(i, j, -v.get(i, j).clone());
                        break 'scan;
                    }
                }
            }
            let alpha = bounds.sample(rng);
            (v, act(&alpha, &w))
        }
        PairKind::Orbit => {
            let stratum = strata[rng.gen_range(0..strata.len())];
            let v = Point::random_in(rep, rng, stratum, bounds);
            let alpha = nonzero(rng, bounds);
            let w = act(&alpha, &v);
            (v, w)
        }
        PairKind::Perturbed => {
            let stratum = strata[rng.gen_range(0..strata.len())];
            let v = Point::random_in(rep, rng, stratum, bounds);
            let mut w = act(&bounds.sample(rng), &v);
            let j = rng.gen_range(1..=rep.k());
            let i = rng.gen_range(0..=rep.degree(j));
            let shifted = w.get(i, j) + nonzero(rng, bounds);
            w.set(i, j, shifted);
            (v, w)
        }
    }
}

struct Outcome {
    kind: PairKind,
    branch: &'static str,
    oracle: bool,
    agree: bool,
    witness: Option<String>,
    v: Point,
    w: Point,
}

#[derive(Default, Serialize)]
struct Tally {
    pairs: usize,
    equivalent: usize,
    separated: usize,
    mismatches: usize,
}

/// Over `trials` stratified pairs: all of `T` agrees on `(v, w)` iff the
/// oracle says equivalent; orbit pairs are never separated.
pub fn check_separation(
    set: &SeparatingSet,
    trials: usize,
    seed: u64,
    bounds: Bounds,
    exec: Execution,
) -> Result<CheckReport> {
    let rep = &set.rep;
    let oracle = Oracle::new(rep);
    let eval = Evaluator::new(set)?;
    let outcomes = exec.map_range(trials, |t| -> Result<Outcome> {
        let mut rng = seeded_rng(seed, SEPARATION_STREAM + t as u64);
        let kind = PairKind::for_trial(t);
        let (v, w) = make_pair(rep, kind, &mut rng, bounds);
        let decision = oracle.decide(&v, &w);
        let diff = eval.first_difference(&v, &w)?;
        Ok(Outcome {
            kind,
            branch: decision.branch.name(),
            oracle: decision.equivalent,
            agree: diff.is_none(),
            witness: diff.map(|(e, _, _)| e.label()),
            v,
            w,
        })
    });

    let mut by_kind: BTreeMap<&'static str, Tally> = BTreeMap::new();
    let mut by_branch: BTreeMap<&'static str, usize> = BTreeMap::new();
    let mut witnesses = Vec::new();
    let mut mismatches = 0;
    let mut orbit_separated = 0;
    for outcome in outcomes {
        let o = outcome?;
        let tally = by_kind.entry(o.kind.name()).or_default();
        tally.pairs += 1;
        if o.oracle {
            tally.equivalent += 1;
        } else {
            tally.separated += 1;
        }
        *by_branch.entry(o.branch).or_default() += 1;
        let orbit_bad = o.kind == PairKind::Orbit && !(o.oracle && o.agree);
        if o.oracle != o.agree || orbit_bad {
            tally.mismatches += 1;
            mismatches += 1;
            orbit_separated += usize::from(orbit_bad);
            push_witness(
                &mut witnesses,
                json!({
                    "kind": o.kind.name(),
                    "branch": o.branch,
                    "oracle_equivalent": o.oracle,
                    "invariants_agree": o.agree,
                    "separating_element": o.witness,
                    "v": o.v.to_strings(),
                    "w": o.w.to_strings(),
                }),
            );
        }
    }
    let details = json!({
        "pairs": trials,
        "elements": set.len(),
        "mismatches": mismatches,
        "orbit_pairs_separated": orbit_separated,
        "by_kind": by_kind,
        "by_branch": by_branch,
    });
    Ok(CheckReport::new(Check::Separation, mismatches > 0, details, witnesses))
}

//! Assembly of the separating set `T` from its six families.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::roberts::{w_invariant, z_invariant};
use super::slices::{epsilon, f_inv, s_slice};
use crate::error::Result;
use crate::exec::Execution;
use crate::poly::{Derivation, Polynomial, PolynomialJson, Rational};
use crate::rep::RepSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    /// `f_{i,j}`
    F,
    /// `eps_{s_{i2,j2}}(x[i1,j1])`, `j1 < j2`, upper levels of `j1`
    EpsCrossLow,
    /// `eps_{s_{i2,j}}(x[i1,j])`, `i2 <= i1`
    EpsSelf,
    /// `eps_{s_{i2,j2}}(x[i1,j1])`, `j2 < j1`
    EpsCrossHigh,
    W,
    Z,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::F, Family::EpsCrossLow, Family::EpsSelf, Family::EpsCrossHigh, Family::W, Family::Z];

    pub fn name(self) -> &'static str {
        match self {
            Family::F => "F",
            Family::EpsCrossLow => "EPS_CROSS_LOW",
            Family::EpsSelf => "EPS_SELF",
            Family::EpsCrossHigh => "EPS_CROSS_HIGH",
            Family::W => "W",
            Family::Z => "Z",
        }
    }
}

/// Indices of an element, in the order they are printed. Summands `j` are
/// 1-based positions in the canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Indices {
    Level { i: u32, j: usize },
    Epsilon { i1: u32, j1: usize, i2: u32, j2: usize },
    Pair { j1: usize, j2: usize },
    Summand { j: usize },
}

impl Indices {
    pub fn to_vec(self) -> Vec<usize> {
        match self {
            Indices::Level { i, j } => vec![i as usize, j],
            Indices::Epsilon { i1, j1, i2, j2 } => vec![i1 as usize, j1, i2 as usize, j2],
            Indices::Pair { j1, j2 } => vec![j1, j2],
            Indices::Summand { j } => vec![j],
        }
    }
}

impl fmt::Display for Indices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_vec().iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Indices {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v = self.to_vec();
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x)?;
        }
        seq.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaggedInvariant {
    pub family: Family,
    pub indices: Indices,
    pub poly: Polynomial,
}

impl TaggedInvariant {
    pub fn label(&self) -> String {
        let name = match self.family {
            Family::F => "f",
            Family::EpsCrossLow | Family::EpsSelf | Family::EpsCrossHigh => "eps",
            Family::W => "w",
            Family::Z => "z",
        };
        format!("{name}{}", self.indices)
    }
}

/// How candidates are collapsed after enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DedupMode {
    /// Drop zeros and rational multiples of earlier elements.
    #[default]
    Scalar,
    /// Drop zeros and exact repeats.
    Exact,
    /// Keep everything.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DropReason {
    Zero,
    /// `poly = ratio * kept`
    DuplicateOf {
        family: Family,
        indices: Indices,
        ratio: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dropped {
    pub family: Family,
    pub indices: Indices,
    pub reason: DropReason,
}

#[derive(Clone, Debug)]
pub struct SeparatingSet {
    pub rep: RepSpec,
    pub mode: DedupMode,
    pub elements: Vec<TaggedInvariant>,
    pub raw_counts: BTreeMap<Family, usize>,
    pub dropped: Vec<Dropped>,
}

impl SeparatingSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn raw_total(&self) -> usize {
        self.raw_counts.values().sum()
    }

    pub fn counts(&self) -> BTreeMap<Family, usize> {
        let mut out: BTreeMap<Family, usize> = Family::ALL.iter().map(|&f| (f, 0)).collect();
        for e in &self.elements {
            *out.entry(e.family).or_default() += 1;
        }
        out
    }

    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(|e| e.poly.degree()).max().unwrap_or(0)
    }

    pub fn find(&self, family: Family, indices: Indices) -> Option<&TaggedInvariant> {
        self.elements.iter().find(|e| e.family == family && e.indices == indices)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rep = rep_json(&self.rep);
        let names = |m: &BTreeMap<Family, usize>| -> serde_json::Map<String, serde_json::Value> {
            m.iter().map(|(f, c)| (f.name().to_string(), (*c).into())).collect()
        };
        let dropped: Vec<_> = self
            .dropped
            .iter()
            .map(|d| {
                let reason = match &d.reason {
                    DropReason::Zero => serde_json::json!("zero"),
                    DropReason::DuplicateOf { family, indices, ratio } => serde_json::json!({
                        "duplicate_of": { "family": family, "indices": indices, "ratio": ratio.to_string() }
                    }),
                };
                serde_json::json!({ "family": d.family, "indices": d.indices, "reason": reason })
            })
            .collect();
        let elements: Vec<_> = self
            .elements
            .iter()
            .map(|e| {
                serde_json::json!({
                    "family": e.family,
                    "indices": e.indices,
                    "degree": e.poly.degree(),
                    "text": e.poly.to_string(),
                    "poly": PolynomialJson::from(&e.poly),
                })
            })
            .collect();
        serde_json::json!({
            "rep": rep,
            "dedup": self.mode,
            "size": self.len(),
            "raw_total": self.raw_total(),
            "raw_counts": names(&self.raw_counts),
            "counts": names(&self.counts()),
            "dropped": dropped,
            "elements": elements,
        })
    }
}

/// Echo of a representation for reports.
pub fn rep_json(rep: &RepSpec) -> serde_json::Value {
    serde_json::json!({
        "label": rep.label(),
        "canonical": rep.summands(),
        "permutation": rep.permutation(),
        "n": rep.dim(),
        "k": rep.k(),
        "l": rep.l(),
        "l_prime": rep.l_prime(),
    })
}

/// Candidate descriptors, in family order then lexicographic index order.
fn enumerate(rep: &RepSpec) -> Vec<(Family, Indices)> {
    let k = rep.k();
    let upper_start = |j: usize| rep.lower_half_top(j).map_or(0, |t| t + 1);
    let slice_levels = |j: usize| -> Vec<u32> { rep.lower_half_top(j).map_or(Vec::new(), |t| (0..=t).collect()) };
    let mut out = Vec::new();

    for j in 1..=k {
        for i in 0..=rep.degree(j) / 2 {
            out.push((Family::F, Indices::Level { i, j }));
        }
    }
    for j1 in 1..=k {
        for j2 in j1 + 1..=k {
            for i1 in upper_start(j1)..=rep.degree(j1) {
                for i2 in slice_levels(j2) {
                    out.push((Family::EpsCrossLow, Indices::Epsilon { i1, j1, i2, j2 }));
                }
            }
        }
    }
    for j in 1..=k {
        for i2 in slice_levels(j) {
            for i1 in i2..=rep.degree(j) {
                out.push((Family::EpsSelf, Indices::Epsilon { i1, j1: j, i2, j2: j }));
            }
        }
    }
    for j1 in 1..=k {
        for j2 in 1..j1 {
            for i1 in 0..=rep.degree(j1) {
                for i2 in slice_levels(j2) {
                    out.push((Family::EpsCrossHigh, Indices::Epsilon { i1, j1, i2, j2 }));
                }
            }
        }
    }
    let lp = rep.l_prime();
    for j1 in 1..=lp {
        for j2 in j1 + 1..=lp {
            out.push((Family::W, Indices::Pair { j1, j2 }));
        }
    }
    for j in lp + 1..=rep.l() {
        if rep.degree(j) > 0 {
            out.push((Family::Z, Indices::Summand { j }));
        }
    }
    out.sort();
    out
}

struct Context {
    rep: RepSpec,
    d: Derivation,
    slices: BTreeMap<(u32, usize), Polynomial>,
}

impl Context {
    fn new(rep: &RepSpec) -> Result<Self> {
        let mut slices = BTreeMap::new();
        for j in 1..=rep.k() {
            if let Some(top) = rep.lower_half_top(j) {
                for i in 0..=top {
                    slices.insert((i, j), s_slice(rep, i, j)?);
                }
            }
        }
        Ok(Context { rep: rep.clone(), d: rep.weitzenbock(), slices })
    }

    fn compute(&self, family: Family, indices: Indices) -> Result<Polynomial> {
        match indices {
            Indices::Level { i, j } => f_inv(&self.rep, i, j),
            Indices::Epsilon { i1, j1, i2, j2 } => {
                epsilon(&self.d, &self.slices[&(i2, j2)], &Polynomial::x(i1, j1 as u32))
            }
            Indices::Pair { j1, j2 } => w_invariant(&self.rep, j1, j2),
            Indices::Summand { j } => {
                debug_assert_eq!(family, Family::Z);
                z_invariant(&self.rep, j)
            }
        }
    }
}

/// Enumerates every family for a canonical representation, then applies the
/// dedup policy in enumeration order (first occurrence wins).
pub fn build_separating_set(rep: &RepSpec, mode: DedupMode, exec: Execution) -> Result<SeparatingSet> {
    let ctx = Context::new(rep)?;
    let candidates = enumerate(rep);
    let polys = exec.map(&candidates, |&(family, indices)| ctx.compute(family, indices));

    let mut raw_counts: BTreeMap<Family, usize> = Family::ALL.iter().map(|&f| (f, 0)).collect();
    let mut elements: Vec<TaggedInvariant> = Vec::new();
    let mut dropped = Vec::new();
    let mut seen: HashMap<Polynomial, usize> = HashMap::new();

    for (&(family, indices), poly) in candidates.iter().zip(polys) {
        let poly = poly?;
        *raw_counts.entry(family).or_default() += 1;
        if mode == DedupMode::None {
            elements.push(TaggedInvariant { family, indices, poly });
            continue;
        }
        if poly.is_zero() {
            dropped.push(Dropped { family, indices, reason: DropReason::Zero });
            continue;
        }
        let key = match mode {
            DedupMode::Scalar => poly.monic(),
            _ => poly.clone(),
        };
        match seen.get(&key) {
            Some(&idx) => {
                let kept = &elements[idx];
                let ratio = poly.scalar_ratio(&kept.poly).expect("same normal form");
                dropped.push(Dropped {
                    family,
                    indices,
                    reason: DropReason::DuplicateOf { family: kept.family, indices: kept.indices, ratio },
                });
            }
            None => {
                seen.insert(key, elements.len());
                elements.push(TaggedInvariant { family, indices, poly });
            }
        }
    }

    Ok(SeparatingSet { rep: rep.clone(), mode, elements, raw_counts, dropped })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> SeparatingSet {
        build_separating_set(&s.parse().unwrap(), DedupMode::Scalar, Execution::Sequential).unwrap()
    }

    #[test]
    fn single_cubic() {
        let t = build("3");
        assert_eq!(t.len(), 7);
        assert_eq!(t.raw_total(), 9);
        // eps_{s_{0,1}}(x[1,1]) = eps_s(s) = 0
        assert!(t
            .dropped
            .iter()
            .any(|d| d.reason == DropReason::Zero && d.indices == Indices::Epsilon { i1: 1, j1: 1, i2: 0, j2: 1 }));
    }

    #[test]
    fn two_quadratics() {
        let t = build("2,2");
        assert_eq!(t.len(), 10);
        let c = t.counts();
        assert_eq!(c[&Family::F], 4);
        assert_eq!(c[&Family::EpsCrossLow], 2);
        assert_eq!(c[&Family::EpsSelf], 2);
        assert_eq!(c[&Family::EpsCrossHigh], 1);
        assert_eq!(c[&Family::W], 1);
        // eps_{s_{0,1}}(x[1,2]) = -eps_{s_{0,2}}(x[1,1])
        let d = t.dropped.iter().find(|d| d.indices == Indices::Epsilon { i1: 1, j1: 2, i2: 0, j2: 1 }).unwrap();
        assert_eq!(
            d.reason,
            DropReason::DuplicateOf {
                family: Family::EpsCrossLow,
                indices: Indices::Epsilon { i1: 1, j1: 1, i2: 0, j2: 2 },
                ratio: crate::arith::integer(-1)
            }
        );
    }

    #[test]
    fn dedup_modes() {
        let rep: RepSpec = "1,1".parse().unwrap();
        let none = build_separating_set(&rep, DedupMode::None, Execution::Sequential).unwrap();
        let exact = build_separating_set(&rep, DedupMode::Exact, Execution::Sequential).unwrap();
        let scalar = build_separating_set(&rep, DedupMode::Scalar, Execution::Sequential).unwrap();
        assert_eq!(none.len(), none.raw_total());
        assert!(none.elements.iter().any(|e| e.poly.is_zero()));
        assert!(exact.len() > scalar.len());
        assert!(scalar.len() < none.len());
        // f0, f0, x11 x02 - x01 x12
        assert_eq!(scalar.len(), 3);
    }

    #[test]
    fn trivial_summand_contributes_only_its_coordinate() {
        let t = build("0,2");
        assert_eq!(t.rep.summands(), &[2, 0]);
        let with_v0 = t.elements.iter().filter(|e| e.poly.summands().contains(&2)).count();
        assert_eq!(with_v0, 1);
        assert_eq!(t.counts()[&Family::Z], 0);
    }

    #[test]
    fn parallel_matches_sequential() {
        let rep: RepSpec = "2,2,4,3".parse().unwrap();
        let a = build_separating_set(&rep, DedupMode::Scalar, Execution::Sequential).unwrap();
        let b = build_separating_set(&rep, DedupMode::Scalar, Execution::Parallel).unwrap();
        assert_eq!(a.elements, b.elements);
        assert_eq!(a.dropped, b.dropped);
    }
}

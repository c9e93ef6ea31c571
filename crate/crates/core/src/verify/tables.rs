use serde::Serialize;
use serde_json::json;

use super::{Check, CheckReport, Status};
use crate::factory::SeparatingSet;

/// Published sizes of `T`, keyed by the sorted summand list.
const TABLE: &[(&[u32], usize)] = &[
    (&[2, 2], 10),
    (&[2, 2, 2], 21),
    (&[2, 2, 2, 2], 36),
    (&[3], 7),
    (&[3, 3], 24),
    (&[3, 3, 3], 51),
    (&[3, 3, 3, 3], 108),
    (&[3, 3, 3, 3, 3], 135),
    (&[4], 11),
    (&[4, 4], 35),
    (&[4, 4, 4], 75),
    (&[4, 4, 4, 4], 128),
    (&[4, 4, 4, 4, 4], 195),
    (&[5], 16),
    (&[5, 5], 56),
    (&[1, 2], 7),
    (&[1, 3], 12),
    (&[1, 4], 17),
    (&[1, 5], 23),
    (&[2, 3], 15),
    (&[2, 4], 21),
    (&[2, 5], 29),
    (&[3, 4], 30),
    (&[3, 5], 39),
];

/// Representations whose size is asserted exactly; everything else is
/// compared for information only.
const HARD: &[&[u32]] = &[&[3], &[2, 2], &[2, 2, 2], &[2, 2, 2, 2], &[3, 3], &[3, 3, 3], &[3, 3, 3, 3, 3]];

fn sorted(summands: &[u32]) -> Vec<u32> {
    let mut v = summands.to_vec();
    v.sort_unstable();
    v
}

pub fn table_value(summands: &[u32]) -> Option<usize> {
    let key = sorted(summands);
    TABLE.iter().find(|(k, _)| *k == key.as_slice()).map(|&(_, v)| v)
}

/// Closed forms for `n` copies of `V_m`: `2n^2+n`, `5n^2+2n`, `7n^2+4n`,
/// `12n^2+4n`, `(31n^2+9n)/2` for `m = 2..6`.
pub fn formula_value(summands: &[u32]) -> Option<(String, usize)> {
    let m = *summands.first()?;
    if summands.iter().any(|&x| x != m) {
        return None;
    }
    let n = summands.len();
    let (name, v) = match m {
        2 => ("2n^2+n", 2 * n * n + n),
        3 => ("5n^2+2n", 5 * n * n + 2 * n),
        4 => ("7n^2+4n", 7 * n * n + 4 * n),
        5 => ("12n^2+4n", 12 * n * n + 4 * n),
        6 => ("(31n^2+9n)/2", (31 * n * n + 9 * n) / 2),
        _ => return None,
    };
    Some((name.to_string(), v))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub table: Option<usize>,
    pub formula: Option<(String, usize)>,
    /// The exact value that must be reproduced, if any.
    pub hard: Option<usize>,
}

impl Expectation {
    pub fn for_summands(summands: &[u32]) -> Self {
        let key = sorted(summands);
        let table = table_value(&key);
        let formula = formula_value(&key);
        let hard = if HARD.contains(&key.as_slice()) { table } else { None };
        Expectation { table, formula, hard }
    }
}

/// Raw and deduplicated counts, `|T| <= 3n^2`, and comparison against the
/// published tables.
pub fn check_counts(set: &SeparatingSet) -> CheckReport {
    let rep = &set.rep;
    let size = set.len();
    let bound = 3 * rep.dim() * rep.dim();
    let expect = Expectation::for_summands(rep.summands());
    let mut witnesses = Vec::new();
    let mut failed = false;
    let mut flagged = false;
    if size > bound {
        failed = true;
        witnesses.push(json!({ "size": size, "bound": bound, "problem": "growth" }));
    }
    if let Some(h) = expect.hard.filter(|&h| h != size) {
        failed = true;
        witnesses.push(json!({ "size": size, "expected": h, "problem": "hard" }));
    }
    if let Some(t) = expect.table.filter(|&t| t != size) {
        flagged = true;
        witnesses.push(json!({ "size": size, "table": t, "problem": "table" }));
    }
    if let Some((name, f)) = expect.formula.as_ref().filter(|f| f.1 != size) {
        flagged = true;
        witnesses.push(json!({ "size": size, "formula": name, "value": f, "problem": "formula" }));
    }
    let names = |m: &std::collections::BTreeMap<crate::factory::Family, usize>| -> serde_json::Map<_, _> {
        m.iter().map(|(f, c)| (f.name().to_string(), json!(c))).collect()
    };
    let details = json!({
        "size": size,
        "raw_total": set.raw_total(),
        "raw_counts": names(&set.raw_counts),
        "counts": names(&set.counts()),
        "growth_bound": bound,
        "max_degree": set.max_degree(),
        "expected": expect,
    });
    let mut report = CheckReport::new(Check::Counts, failed, details, witnesses);
    if !failed && flagged {
        report.status = Status::Flagged;
    }
    report
}

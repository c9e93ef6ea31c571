//! Acceptance criteria over the suite representations. Prints one line per
//! criterion and exits nonzero if any criterion fails.

use std::time::Instant;

use gasep_core::factory::{f_inv, s_slice, w_closed_form, w_invariant, z_invariant, Family};
use gasep_core::verify::{self, Check, Status, VerifyConfig};
use gasep_core::{build_separating_set, DedupMode, Execution, Monomial, Polynomial, RepSpec, SeparatingSet, VarId};

const SUITE: [&str; 13] = ["3", "4", "5", "2,2", "2,2,2", "2,2,2,2", "3,3", "1,2", "1,4", "2,3", "2,4", "2,2,4", "4,4"];

struct Outcome {
    number: u32,
    title: &'static str,
    failures: Vec<String>,
    note: String,
}

impl Outcome {
    fn line(&self) -> String {
        let verdict = if self.failures.is_empty() { "PASS" } else { "FAIL" };
        let mut s = format!("{verdict} criterion {:>2}: {} ({})", self.number, self.title, self.note);
        for f in self.failures.iter().take(5) {
            s.push_str(&format!("\n    {f}"));
        }
        s
    }
}

fn suite() -> Vec<SeparatingSet> {
    SUITE
        .iter()
        .map(|s| {
            let rep: RepSpec = s.parse().unwrap();
            build_separating_set(&rep, DedupMode::Scalar, Execution::default()).unwrap()
        })
        .collect()
}

fn kernel(sets: &[SeparatingSet]) -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for t in sets {
        let d = t.rep.weitzenbock();
        for e in &t.elements {
            checked += 1;
            if !d.apply(&e.poly).is_zero() {
                failures.push(format!("{}: {} not in ker D", t.rep, e.label()));
            }
        }
    }
    Outcome { number: 1, title: "kernel membership", failures, note: format!("{checked} elements") }
}

fn sizes() -> Outcome {
    let expected: [(&str, usize); 8] = [
        ("3", 7),
        ("2,2", 10),
        ("2,2,2", 21),
        ("2,2,2,2", 36),
        ("3", 7),
        ("3,3", 24),
        ("3,3,3", 51),
        ("3,3,3,3,3", 135),
    ];
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for (s, want) in expected {
        let rep: RepSpec = s.parse().unwrap();
        let got = build_separating_set(&rep, DedupMode::Scalar, Execution::default()).unwrap().len();
        seen.push(format!("{}={got}", rep.label()));
        if got != want {
            failures.push(format!("{}: |T| = {got}, expected {want}", rep.label()));
        }
    }
    Outcome { number: 2, title: "size reproduction", failures, note: seen.join(" ") }
}

fn degrees(sets: &[SeparatingSet]) -> Outcome {
    let mut failures = Vec::new();
    let mut worst = Vec::new();
    for t in sets {
        let bound = 2 * t.rep.dim() as u32 - 1;
        worst.push(format!("{}:{}/{}", t.rep, t.max_degree(), bound));
        for e in &t.elements {
            let deg = e.poly.degree();
            let bad = deg > bound || (e.family == Family::F && deg > 2) || (e.family == Family::Z && deg != 3);
            if bad {
                failures.push(format!("{}: {} has degree {deg}", t.rep, e.label()));
            }
        }
        for j in t.rep.l_prime() + 1..=t.rep.l() {
            let z = z_invariant(&t.rep, j).unwrap();
            if z.degree() != 3 {
                failures.push(format!("{}: z({j}) has degree {}", t.rep, z.degree()));
            }
        }
    }
    Outcome { number: 3, title: "degree bound", failures, note: worst.join(" ") }
}

fn support(sets: &[SeparatingSet]) -> Outcome {
    let mut failures = Vec::new();
    for t in sets {
        for e in &t.elements {
            if e.poly.summands().len() > 2 {
                failures.push(format!("{}: {} spans {:?}", t.rep, e.label(), e.poly.summands()));
            }
        }
    }
    Outcome { number: 4, title: "two-summand support", failures, note: format!("{} reps", sets.len()) }
}

fn x0_monomial(factors: &[(usize, u32)]) -> Monomial {
    Monomial::from_factors(factors.iter().map(|&(j, e)| (VarId::x(0, j as u32), e)))
}

fn single_multiple(p: &Polynomial, m: &Monomial) -> Option<String> {
    let (lead, c) = p.leading_term()?;
    (p.len() == 1 && lead == m).then(|| c.to_string())
}

fn projection_w(sets: &[SeparatingSet]) -> Outcome {
    let mut failures = Vec::new();
    let mut pairs = 0;
    for t in sets {
        let rep = &t.rep;
        let pi = rep.projection();
        for j1 in 1..=rep.l_prime() {
            for j2 in j1 + 1..=rep.l_prime() {
                pairs += 1;
                let (n1, n2) = (rep.degree(j1), rep.degree(j2));
                let big_n = num_integer::lcm(n1, n2);
                let w = w_invariant(rep, j1, j2).unwrap();
                if w != w_closed_form(rep, j1, j2).unwrap() {
                    failures.push(format!("{rep}: w({j1},{j2}) paths differ"));
                }
                let m = x0_monomial(&[(j1, big_n / n1), (j2, big_n / n2)]);
                if single_multiple(&pi.apply(&w), &m).is_none() {
                    failures.push(format!("{rep}: Pi*(w({j1},{j2})) = {}", pi.apply(&w)));
                }
            }
        }
    }
    let rep: RepSpec = "2,2".parse().unwrap();
    let image = rep.projection().apply(&w_invariant(&rep, 1, 2).unwrap());
    let expected: Polynomial = "-8*x[0,1]*x[0,2]".parse().unwrap();
    if image != expected {
        failures.push(format!("2V2: Pi*(w) = {image}, expected {expected}"));
    }
    Outcome {
        number: 5,
        title: "w projection and two-path agreement",
        failures,
        note: format!("{pairs} pairs, 2V2 image {image}"),
    }
}

fn projection_images(sets: &[SeparatingSet]) -> Outcome {
    let mut failures = Vec::new();
    let mut z_constants = Vec::new();
    for t in sets {
        let rep = &t.rep;
        let pi = rep.projection();
        for e in &t.elements {
            let image = pi.apply(&e.poly);
            if !pi.in_even_base_subring(&image) || pi.sign_flip(&image) != image {
                failures.push(format!("{rep}: Pi*({}) = {image}", e.label()));
            }
        }
        for j in rep.l_prime() + 1..=rep.l() {
            let z = z_invariant(rep, j).unwrap();
            match single_multiple(&pi.apply(&z), &x0_monomial(&[(j, 3)])) {
                Some(c) => z_constants.push(format!("{rep}:z({j})={c}")),
                None => failures.push(format!("{rep}: Pi*(z({j})) = {}", pi.apply(&z))),
            }
        }
    }
    Outcome { number: 6, title: "projection image constraints", failures, note: z_constants.join(" ") }
}

fn slices(sets: &[SeparatingSet]) -> Outcome {
    let mut failures = Vec::new();
    let mut points = usize::MAX;
    for t in sets {
        let rep = &t.rep;
        let d = rep.weitzenbock();
        for j in 1..=rep.k() {
            let Some(top) = rep.lower_half_top(j) else { continue };
            for i in 0..=top {
                if d.apply(&s_slice(rep, i, j).unwrap()) != f_inv(rep, i, j).unwrap() {
                    failures.push(format!("{rep}: D(s({i},{j})) != f({i},{j})"));
                }
            }
        }
        let r = verify::check_epsilon(rep, 100, 2024, Default::default(), Execution::default()).unwrap();
        points = points.min(r.details["points"].as_u64().unwrap() as usize);
        if r.status != Status::Pass {
            failures.push(format!("{rep}: {}", r.details));
        }
    }
    Outcome { number: 7, title: "slice identities", failures, note: format!("min {points} points per rep") }
}

fn separation(sets: &[SeparatingSet]) -> Outcome {
    let mut failures = Vec::new();
    let mut total = 0;
    for t in sets {
        let r = verify::check_separation(t, 500, 2024, Default::default(), Execution::default()).unwrap();
        total += r.details["pairs"].as_u64().unwrap();
        if r.status != Status::Pass {
            failures.push(format!("{}: {} {:?}", t.rep, r.details, r.witnesses.first()));
        }
        if r.details["orbit_pairs_separated"] != 0 {
            failures.push(format!("{}: orbit pair separated", t.rep));
        }
    }
    Outcome { number: 8, title: "separating property", failures, note: format!("{total} pairs") }
}

fn growth(sets: &[SeparatingSet]) -> Outcome {
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for t in sets {
        let n = t.rep.dim();
        seen.push(format!("{}:{}/{}", t.rep, t.len(), 3 * n * n));
        if t.len() > 3 * n * n {
            failures.push(format!("{}: |T| = {} > 3n^2 = {}", t.rep, t.len(), 3 * n * n));
        }
    }
    Outcome { number: 9, title: "size growth", failures, note: seen.join(" ") }
}

fn determinism() -> Outcome {
    let mut failures = Vec::new();
    for s in ["2,2", "2,3", "2,2,4"] {
        let rep: RepSpec = s.parse().unwrap();
        let config = VerifyConfig { checks: Check::ALL.to_vec(), trials: 500, seed: 11, ..VerifyConfig::default() };
        let a = verify::verify(&rep, &config).unwrap().to_json_pretty();
        let b = verify::verify(&rep, &config).unwrap().to_json_pretty();
        let seq = VerifyConfig { exec: Execution::Sequential, ..config };
        let c = verify::verify(&rep, &seq).unwrap().to_json_pretty();
        if a != b || a != c {
            failures.push(format!("{}: reports differ", rep.label()));
        }
    }
    Outcome { number: 10, title: "determinism", failures, note: "3 reps, repeated and sequential runs".into() }
}

fn main() {
    let start = Instant::now();
    let sets = suite();
    let outcomes = vec![
        kernel(&sets),
        sizes(),
        degrees(&sets),
        support(&sets),
        projection_w(&sets),
        projection_images(&sets),
        slices(&sets),
        separation(&sets),
        growth(&sets),
        determinism(),
    ];
    for o in &outcomes {
        println!("{}", o.line());
    }
    println!("acceptance finished in {:.1}s", start.elapsed().as_secs_f64());
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.failures.is_empty()).map(|o| o.number).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}

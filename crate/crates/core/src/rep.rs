//! The representation `V_(n) = V_{n_1} + ... + V_{n_k}` and the
//! half-projection substitution.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Derivation, Polynomial, VarId};

/// Congruence block of a summand degree in the canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Block {
    TwoModFour,
    ZeroModFour,
    Trivial,
    Odd,
}

fn block(n: u32) -> Block {
    match n {
        0 => Block::Trivial,
        n if n % 4 == 2 => Block::TwoModFour,
        n if n % 4 == 0 => Block::ZeroModFour,
        _ => Block::Odd,
    }
}

/// Summand degrees in canonical order: `n_j = 2 mod 4` for `j <= l'`,
/// `n_j = 0 mod 4` for `l' < j <= l` (trivial `V_0` summands last among
/// those), odd `n_j` for `j > l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RepSpec {
    summands: Vec<u32>,
    /// `permutation[c]` is the 0-based input position of canonical summand `c + 1`.
    permutation: Vec<usize>,
}

impl RepSpec {
    /// Stable reordering of the input into the three congruence blocks.
    pub fn canonicalize(raw: &[u32]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyRep);
        }
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by_key(|&p| block(raw[p]));
        Ok(RepSpec { summands: order.iter().map(|&p| raw[p]).collect(), permutation: order })
    }

    /// Keeps the given order. Used for projection targets, which need not
    /// satisfy the canonical convention.
    pub fn ordered(summands: Vec<u32>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::EmptyRep);
        }
        let permutation = (0..summands.len()).collect();
        Ok(RepSpec { summands, permutation })
    }

    pub fn summands(&self) -> &[u32] {
        &self.summands
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn is_canonical(&self) -> bool {
        self.summands.windows(2).all(|w| block(w[0]) <= block(w[1]))
    }

    /// Number of summands `k`.
    pub fn k(&self) -> usize {
        self.summands.len()
    }

    /// Dimension `n = sum (n_j + 1)`.
    pub fn dim(&self) -> usize {
        self.summands.iter().map(|&n| n as usize + 1).sum()
    }

    /// Number of even summand degrees `l` (including trivial summands).
    pub fn l(&self) -> usize {
        self.summands.iter().filter(|&&n| n % 2 == 0).count()
    }

    /// Number of summand degrees `= 2 mod 4`.
    pub fn l_prime(&self) -> usize {
        self.summands.iter().filter(|&&n| n % 4 == 2).count()
    }

    /// Degree `n_j` of summand `j` (1-based).
    pub fn degree(&self, j: usize) -> u32 {
        self.summands[j - 1]
    }

    pub fn check_summand(&self, j: usize) -> Result<u32> {
        if j == 0 || j > self.k() {
            return Err(Error::IndexOutOfRange { what: "summand", i: 0, j });
        }
        Ok(self.degree(j))
    }

    /// All main variables `x[i,j]` in ring order.
    pub fn variables(&self) -> impl Iterator<Item = VarId> + '_ {
        self.summands.iter().enumerate().flat_map(|(idx, &n)| (0..=n).map(move |i| VarId::x(i, idx as u32 + 1)))
    }

    /// Highest level scanned for the minimal index: `floor((n_j - 1) / 2)`,
    /// or `None` when `n_j = 0`.
    pub fn lower_half_top(&self, j: usize) -> Option<u32> {
        let n = self.degree(j);
        (n >= 1).then(|| (n - 1) / 2)
    }

    pub fn weitzenbock(&self) -> Derivation {
        Derivation::weitzenbock(&self.summands)
    }

    pub fn projection(&self) -> ProjectionMap {
        ProjectionMap::new(self)
    }

    /// Short label such as `2V2+V4`, in canonical order.
    pub fn label(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut idx = 0;
        while idx < self.summands.len() {
            let n = self.summands[idx];
            let run = self.summands[idx..].iter().take_while(|&&m| m == n).count();
            parts.push(if run == 1 { format!("V{n}") } else { format!("{run}V{n}") });
            idx += run;
        }
        parts.join("+")
    }

    /// Multiset equality with another summand list.
    pub fn same_multiset(&self, other: &[u32]) -> bool {
        let mut a = self.summands.clone();
        let mut b = other.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Parses `2,2,3` into a canonicalized representation.
impl FromStr for RepSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = s
            .split(',')
            .map(|part| part.trim().parse::<u32>().map_err(|_| Error::MalformedRep(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        RepSpec::canonicalize(&raw)
    }
}

/// The algebra map induced by `V_(floor(n/2)) -> V_(n)`,
/// `(a_0, ..., a_{n'_j}) -> (0, ..., 0, a_0, ..., a_{n'_j})`.
#[derive(Clone, Debug)]
pub struct ProjectionMap {
    source: RepSpec,
    target: RepSpec,
    substitution: BTreeMap<VarId, Polynomial>,
}

impl ProjectionMap {
    pub fn new(source: &RepSpec) -> Self {
        let target = RepSpec::ordered(source.summands.iter().map(|&n| n / 2).collect()).expect("source is nonempty");
        let mut substitution = BTreeMap::new();
        for (idx, &n) in source.summands.iter().enumerate() {
            let j = idx as u32 + 1;
            let shift = n.div_ceil(2);
            for i in 0..=n {
                let image = if i < shift { Polynomial::zero() } else { Polynomial::x(i - shift, j) };
                substitution.insert(VarId::x(i, j), image);
            }
        }
        ProjectionMap { source: source.clone(), target, substitution }
    }

    pub fn source(&self) -> &RepSpec {
        &self.source
    }

    pub fn target(&self) -> &RepSpec {
        &self.target
    }

    /// The image of `f`, expressed in the target's variables.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        f.substitute(&self.substitution)
    }

    /// The sign change `x[0,j] -> -x[0,j]` for `j <= l'` of the source, on
    /// target polynomials.
    pub fn sign_flip(&self, f: &Polynomial) -> Polynomial {
        let map = (1..=self.source.l_prime() as u32).map(|j| (VarId::x(0, j), -&Polynomial::x(0, j))).collect();
        f.substitute(&map)
    }

    /// Whether every variable of the target polynomial `f` is some `x[0,j]`
    /// with `j <= l`.
    pub fn in_even_base_subring(&self, f: &Polynomial) -> bool {
        let l = self.source.l() as u32;
        f.variables().into_iter().all(|v| matches!(v, VarId::Main { j, i: 0 } if j <= l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    #[test]
    fn canonical_order() {
        let rep = RepSpec::canonicalize(&[3, 2, 4, 2]).unwrap();
        assert_eq!(rep.summands(), &[2, 2, 4, 3]);
        assert_eq!(rep.permutation(), &[1, 3, 2, 0]);
        assert_eq!((rep.l_prime(), rep.l(), rep.k()), (2, 3, 4));

        let one = RepSpec::canonicalize(&[1]).unwrap();
        assert_eq!((one.summands(), one.l(), one.l_prime()), (&[1][..], 0, 0));

        let two = RepSpec::canonicalize(&[2, 2]).unwrap();
        assert_eq!((two.l(), two.l_prime(), two.dim()), (2, 2, 6));

        assert_eq!(RepSpec::canonicalize(&[]), Err(Error::EmptyRep));
    }

    #[test]
    fn trivial_summands_go_last_among_multiples_of_four() {
        let rep = RepSpec::canonicalize(&[0, 1, 4, 6, 0]).unwrap();
        assert_eq!(rep.summands(), &[6, 4, 0, 0, 1]);
        assert_eq!((rep.l_prime(), rep.l()), (1, 4));
        assert!(rep.is_canonical());
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let rep = RepSpec::canonicalize(&[5, 0, 8, 3, 2, 6, 4]).unwrap();
        let again = RepSpec::canonicalize(rep.summands()).unwrap();
        assert_eq!(again.summands(), rep.summands());
        assert_eq!(again.permutation(), &(0..7).collect::<Vec<_>>()[..]);
    }

    #[test]
    fn parse_and_label() {
        let rep: RepSpec = "2, 3,2".parse().unwrap();
        assert_eq!(rep.label(), "2V2+V3");
        assert!(matches!("2,x".parse::<RepSpec>(), Err(Error::MalformedRep(_))));
        assert!("".parse::<RepSpec>().is_err());
    }

    #[test]
    fn projection_images() {
        let rep: RepSpec = "2".parse().unwrap();
        let pi = rep.projection();
        assert_eq!(pi.target().summands(), &[1]);
        assert_eq!(pi.apply(&Polynomial::x(2, 1)), Polynomial::x(1, 1));
        assert!(pi.apply(&Polynomial::x(0, 1)).is_zero());
        // f_{1} = x0 x2 - 1/2 x1^2 maps to -1/2 x0^2
        let f1: Polynomial = "x[0,1]*x[2,1] - 1/2*x[1,1]^2".parse().unwrap();
        assert_eq!(pi.apply(&f1), Polynomial::x(0, 1).pow(2).scale(&rational(-1, 2)));
    }

    #[test]
    fn odd_summands_shift_by_ceiling() {
        let rep: RepSpec = "3".parse().unwrap();
        let pi = rep.projection();
        assert_eq!(pi.target().summands(), &[1]);
        assert!(pi.apply(&Polynomial::x(1, 1)).is_zero());
        assert_eq!(pi.apply(&Polynomial::x(2, 1)), Polynomial::x(0, 1));
        assert_eq!(pi.apply(&Polynomial::x(3, 1)), Polynomial::x(1, 1));
    }
}

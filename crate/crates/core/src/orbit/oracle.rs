use num_traits::Zero;

use super::action::Slice;
use super::point::Point;
use crate::factory::s_slice;
use crate::rep::RepSpec;

/// Which step of the decision procedure settled the comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// Both points lie in the common zero set `Z` of the lower halves.
    ZeroSet,
    /// `x[i,j]` vanishes at exactly one point, or the squares differ.
    Level { i: u32, j: usize },
    /// Slice-normalized points compared along `s_{i,j}`.
    Slice { i: u32, j: usize },
}

impl Branch {
    pub fn name(&self) -> &'static str {
        match self {
            Branch::ZeroSet => "zero_set",
            Branch::Level { .. } => "level",
            Branch::Slice { .. } => "slice",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decision {
    pub equivalent: bool,
    pub branch: Branch,
}

/// The invariant-equivalence oracle for one representation, with the local
/// slices of the minimal-index scan precomputed.
#[derive(Clone, Debug)]
pub struct Oracle {
    rep: RepSpec,
    /// `(i, j, s_{i,j})` in scan order: `j` ascending, then `i` ascending.
    scan: Vec<(u32, usize, Slice)>,
}

impl Oracle {
    pub fn new(rep: &RepSpec) -> Self {
        let mut scan = Vec::new();
        for j in 1..=rep.k() {
            let Some(top) = rep.lower_half_top(j) else { continue };
            for i in 0..=top {
                let s = s_slice(rep, i, j).expect("level within the lower half");
                scan.push((i, j, Slice::new(rep, s).expect("s_{i,j} is a local slice")));
            }
        }
        Oracle { rep: rep.clone(), scan }
    }

    pub fn rep(&self) -> &RepSpec {
        &self.rep
    }

    /// Whether every invariant takes the same value at `v` and `w`.
    pub fn decide(&self, v: &Point, w: &Point) -> Decision {
        for (i, j, slice) in &self.scan {
            let (i, j) = (*i, *j);
            let a = v.get(i, j);
            let b = w.get(i, j);
            if a.is_zero() && b.is_zero() {
                continue;
            }
            // here f_{i,j} = +-1/2 x[i,j]^2 at both points
            if a.is_zero() || b.is_zero() || a * a != b * b {
                return Decision { equivalent: false, branch: Branch::Level { i, j } };
            }
            let nv = slice.normalize(v).expect("Ds = f_{i,j} is nonzero here");
            let nw = slice.normalize(w).expect("Ds = f_{i,j} is nonzero here");
            return Decision { equivalent: nv == nw, branch: Branch::Slice { i, j } };
        }
        Decision { equivalent: self.zero_set_equivalent(v, w), branch: Branch::ZeroSet }
    }

    pub fn equivalent(&self, v: &Point, w: &Point) -> bool {
        self.decide(v, w).equivalent
    }

    /// On `Z` the invariants see only `t_j = x[n_j/2, j]` for even `n_j`, up to
    /// one global sign on the `n_j = 2 mod 4` block.
    fn zero_set_equivalent(&self, v: &Point, w: &Point) -> bool {
        let rep = &self.rep;
        let mid = |p: &Point, j: usize| p.get(rep.degree(j) / 2, j).clone();
        let lp = rep.l_prime();
        let fixed = (lp + 1..=rep.l()).all(|j| mid(v, j) == mid(w, j));
        if !fixed {
            return false;
        }
        let same = (1..=lp).all(|j| mid(v, j) == mid(w, j));
        let flipped = (1..=lp).all(|j| mid(v, j) == -mid(w, j));
        same || flipped
    }
}

pub fn invariant_equivalent(rep: &RepSpec, v: &Point, w: &Point) -> bool {
    Oracle::new(rep).equivalent(v, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;
    use crate::orbit::act;

    fn rep(s: &str) -> RepSpec {
        s.parse().unwrap()
    }

    fn pt(r: &RepSpec, c: &[&[i64]]) -> Point {
        Point::from_integers(r, c).unwrap()
    }

    #[test]
    fn single_quadratic_sign_flip() {
        let r = rep("2");
        let d = Oracle::new(&r).decide(&pt(&r, &[&[0, 3, 1]]), &pt(&r, &[&[0, -3, 7]]));
        assert_eq!(d, Decision { equivalent: true, branch: Branch::ZeroSet });
    }

    #[test]
    fn two_quadratics_relative_sign() {
        let r = rep("2,2");
        let o = Oracle::new(&r);
        let v = pt(&r, &[&[0, 2, 0], &[0, 5, 0]]);
        assert!(!o.equivalent(&v, &pt(&r, &[&[0, -2, 0], &[0, 5, 0]])));
        assert!(o.equivalent(&v, &pt(&r, &[&[0, -2, 1], &[0, -5, 3]])));
    }

    #[test]
    fn multiples_of_four_keep_their_sign() {
        let r = rep("4");
        let o = Oracle::new(&r);
        let v = pt(&r, &[&[0, 0, 3, 1, 1]]);
        assert!(!o.equivalent(&v, &pt(&r, &[&[0, 0, -3, 1, 1]])));
        assert!(o.equivalent(&v, &pt(&r, &[&[0, 0, 3, 2, 9]])));
    }

    #[test]
    fn v1_points() {
        let r = rep("1");
        let o = Oracle::new(&r);
        assert!(o.equivalent(&pt(&r, &[&[1, 3]]), &pt(&r, &[&[1, 5]])));
        assert!(o.equivalent(&pt(&r, &[&[0, 1]]), &pt(&r, &[&[0, 2]])));
        assert_eq!(o.decide(&pt(&r, &[&[1, 3]]), &pt(&r, &[&[-1, 3]])).branch, Branch::Slice { i: 0, j: 1 });
        assert!(!o.equivalent(&pt(&r, &[&[1, 3]]), &pt(&r, &[&[-1, 3]])));
        assert_eq!(o.decide(&pt(&r, &[&[1, 3]]), &pt(&r, &[&[2, 3]])).branch, Branch::Level { i: 0, j: 1 });
    }

    #[test]
    fn orbit_points_are_equivalent() {
        let r = rep("2,4,3");
        let o = Oracle::new(&r);
        let v = pt(&r, &[&[0, 1, 2], &[1, 2, 0, -3, 4], &[0, 3, -1, 2]]);
        assert!(o.equivalent(&v, &act(&rational(-7, 2), &v)));
        let mut w = act(&rational(1, 3), &v);
        w.set(3, 3, rational(5, 1));
        assert!(!o.equivalent(&v, &w));
    }

    #[test]
    fn trivial_summand_is_compared_directly() {
        let r = rep("0,1");
        let o = Oracle::new(&r);
        assert!(!o.equivalent(&pt(&r, &[&[2], &[0, 1]]), &pt(&r, &[&[3], &[0, 1]])));
        assert!(o.equivalent(&pt(&r, &[&[2], &[0, 1]]), &pt(&r, &[&[2], &[0, 5]])));
    }
}

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::point::Point;
use crate::error::{Error, Result};
use crate::poly::Rational;
use crate::rep::RepSpec;

/// Sampled coordinates are `p / q` with `|p| <= numerator`, `1 <= q <= denominator`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub numerator: u32,
    pub denominator: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { numerator: 9, denominator: 4 }
    }
}

impl Bounds {
    pub fn contains(&self, a: &Rational) -> bool {
        let num = a.numer().magnitude();
        let den = a.denom();
        // a reduced fraction may have a smaller denominator than the sampled one
        *num <= self.numerator.into() && *den <= self.denominator.into() && !den.is_zero()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        let p = i64::from(self.numerator);
        let num = rng.gen_range(-p..=p);
        let den = rng.gen_range(1..=i64::from(self.denominator.max(1)));
        Rational::new(num.into(), den.into())
    }
}

/// Parses `9,4` or `9/4`.
impl FromStr for Bounds {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bounds `{s}`: expected NUM,DEN"));
        let (a, b) = s.split_once([',', '/']).ok_or_else(bad)?;
        let numerator = a.trim().parse().map_err(|_| bad())?;
        let denominator: u32 = b.trim().parse().map_err(|_| bad())?;
        if denominator == 0 {
            return Err(bad());
        }
        Ok(Bounds { numerator, denominator })
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.numerator, self.denominator)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stratum {
    Generic,
    #[serde(rename = "in_Z")]
    InZ,
    LowZeros,
}

impl Stratum {
    pub const ALL: [Stratum; 3] = [Stratum::Generic, Stratum::InZ, Stratum::LowZeros];

    pub fn name(self) -> &'static str {
        match self {
            Stratum::Generic => "generic",
            Stratum::InZ => "in_Z",
            Stratum::LowZeros => "low_zeros",
        }
    }
}

impl FromStr for Stratum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Stratum::ALL
            .into_iter()
            .find(|st| st.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown stratum `{s}`")))
    }
}

/// The generator behind every sampled point: ChaCha8 seeded from `seed`,
/// on an independent stream per `stream`.
pub fn seeded_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn lower_half(rep: &RepSpec) -> Vec<(u32, usize)> {
    (1..=rep.k())
        .flat_map(|j| rep.lower_half_top(j).into_iter().flat_map(move |top| (0..=top).map(move |i| (i, j))))
        .collect()
}

impl Point {
    pub fn random<R: Rng + ?Sized>(rep: &RepSpec, rng: &mut R, bounds: Bounds) -> Point {
        let coords = rep.summands().iter().map(|&n| (0..=n).map(|_| bounds.sample(rng)).collect()).collect();
        Point::new(rep, coords).expect("shape matches")
    }

    pub fn random_in<R: Rng + ?Sized>(rep: &RepSpec, rng: &mut R, stratum: Stratum, bounds: Bounds) -> Point {
        let mut p = Point::random(rep, rng, bounds);
        let scan = lower_half(rep);
        let cut = match stratum {
            Stratum::Generic => 0,
            Stratum::InZ => scan.len(),
            Stratum::LowZeros => rng.gen_range(0..=scan.len()),
        };
        for &(i, j) in &scan[..cut] {
            p.set(i, j, Rational::zero());
        }
        p
    }
}

pub fn sample_point(rep: &RepSpec, seed: u64, bounds: Bounds) -> Point {
    Point::random(rep, &mut seeded_rng(seed, 0), bounds)
}

/// `in_Z` zeroes every lower-half level; `low_zeros` zeroes a random prefix
/// of the minimal-index scan order.
pub fn sample_special(rep: &RepSpec, seed: u64, stratum: Stratum, bounds: Bounds) -> Point {
    Point::random_in(rep, &mut seeded_rng(seed, 0), stratum, bounds)
}

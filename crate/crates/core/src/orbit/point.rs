use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{parse_rational, Assignment, Rational, ScaledPoint};
use crate::rep::RepSpec;

/// A rational point of `V_(n)`; `coords[j-1][i]` is `x[i,j]` in canonical
/// summand order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<Vec<Rational>>,
}

impl Point {
    pub fn new(rep: &RepSpec, coords: Vec<Vec<Rational>>) -> Result<Self> {
        if coords.len() != rep.k() {
            return Err(Error::PointShape(format!("expected {} summands, got {}", rep.k(), coords.len())));
        }
        for (idx, (summand, &n)) in coords.iter().zip(rep.summands()).enumerate() {
            if summand.len() != n as usize + 1 {
                return Err(Error::PointShape(format!(
                    "summand {} has {} coordinates, expected {}",
                    idx + 1,
                    summand.len(),
                    n + 1
                )));
            }
        }
        Ok(Point { coords })
    }

    pub fn from_integers(rep: &RepSpec, coords: &[&[i64]]) -> Result<Self> {
        let coords = coords.iter().map(|s| s.iter().map(|&a| Rational::from_integer(a.into())).collect()).collect();
        Point::new(rep, coords)
    }

    pub fn zero(rep: &RepSpec) -> Self {
        Point { coords: rep.summands().iter().map(|&n| vec![Rational::zero(); n as usize + 1]).collect() }
    }

    pub fn coords(&self) -> &[Vec<Rational>] {
        &self.coords
    }

    /// `x[i,j]` for `j` 1-based. Panics outside the shape.
    pub fn get(&self, i: u32, j: usize) -> &Rational {
        &self.coords[j - 1][i as usize]
    }

    pub fn set(&mut self, i: u32, j: usize, value: Rational) {
        self.coords[j - 1][i as usize] = value;
    }

    pub fn summand(&self, j: usize) -> &[Rational] {
        &self.coords[j - 1]
    }

    pub(crate) fn summand_mut(&mut self, j: usize) -> &mut Vec<Rational> {
        &mut self.coords[j - 1]
    }

    pub fn scaled(&self, max_degree: u32) -> ScaledPoint {
        ScaledPoint::new(&self.coords, max_degree)
    }

    /// Coordinates as strings, one array per summand.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.coords.iter().map(|s| s.iter().map(|a| a.to_string()).collect()).collect()
    }

    /// Parses `[["1","3/2"],[0,-1]]`; entries may be strings or integers.
    pub fn from_json(rep: &RepSpec, text: &str) -> Result<Self> {
        let raw: Vec<Vec<RawCoord>> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let coords = raw
            .into_iter()
            .map(|s| s.into_iter().map(RawCoord::into_rational).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Point::new(rep, coords)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_strings()).expect("strings serialize")
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoord {
    Int(i64),
    Text(String),
}

impl RawCoord {
    fn into_rational(self) -> Result<Rational> {
        match self {
            RawCoord::Int(a) => Ok(Rational::from_integer(a.into())),
            RawCoord::Text(s) => parse_rational(&s),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl Assignment for Point {
    fn value(&self, i: u32, j: u32) -> Option<&Rational> {
        self.coords.get((j as usize).checked_sub(1)?)?.get(i as usize)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_strings().iter().map(|s| format!("({})", s.join(", "))).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

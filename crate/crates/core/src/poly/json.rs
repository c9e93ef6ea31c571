//! JSON form: `{"terms":[{"coeff":"-8","monomial":[["x",i,j,e],["y",a,e]]}]}`.

use serde::{Deserialize, Serialize};

use super::{parse_rational, Monomial, Polynomial, VarId};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FactorJson {
    /// `["x", i, j, e]`
    Main(String, u32, u32, u32),
    /// `["y", a, e]`
    Aux(String, u8, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: Vec<FactorJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub terms: Vec<TermJson>,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        let terms = p
            .terms()
            .rev()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                monomial: m
                    .factors()
                    .iter()
                    .map(|&(v, e)| match v {
                        VarId::Main { j, i } => FactorJson::Main("x".into(), i, j, e),
                        VarId::Aux(a) => FactorJson::Aux("y".into(), a, e),
                    })
                    .collect(),
            })
            .collect();
        PolynomialJson { terms }
    }
}

impl TryFrom<&PolynomialJson> for Polynomial {
    type Error = Error;

    fn try_from(json: &PolynomialJson) -> Result<Self, Error> {
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            let coeff = parse_rational(&t.coeff)?;
            let mut factors = Vec::with_capacity(t.monomial.len());
            for f in &t.monomial {
                match f {
                    FactorJson::Main(tag, i, j, e) if tag == "x" && *j >= 1 => factors.push((VarId::x(*i, *j), *e)),
                    FactorJson::Aux(tag, a, e) if tag == "y" && *a <= 1 => factors.push((VarId::Aux(*a), *e)),
                    other => return Err(Error::Parse(format!("bad monomial factor {other:?}"))),
                }
            }
            terms.push((Monomial::from_factors(factors), coeff));
        }
        Ok(Polynomial::from_terms(terms))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolynomialJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = PolynomialJson::deserialize(d)?;
        Polynomial::try_from(&json).map_err(serde::de::Error::custom)
    }
}

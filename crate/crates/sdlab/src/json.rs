//! On-disk formats: the complex JSON schema, the observable schema, and the
//! exact rational codec. Rationals travel as strings `"p/q"` in lowest terms
//! with positive denominator (plain `"p"` when the denominator is one), so
//! nothing is laundered through floating point.

use std::collections::BTreeMap;

use num::{BigInt, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::measures::PolynomialObservable;
use crate::poly::Rational;
use crate::subdivision::{EmbeddedComplex, Point};

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::BadRational(s.to_string()))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(Error::BadRational(s.to_string()));
            }
            Ok(Rational::new(parse_int(num)?, d))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fixed-point decimal rendering with `digits` fractional digits, rounded
/// half away from zero.
pub fn decimal_string(r: &Rational, digits: usize) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let abs = r.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    // round(|r| * scale)
    let scaled_num = abs.numer() * &scale;
    let twice = &scaled_num * 2 + abs.denom();
    let rounded = twice / (abs.denom() * 2);
    let whole = &rounded / &scale;
    let frac = &rounded % &scale;
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{:0width$}", frac, width = digits)
    }
}

/// JSON schema for a complex: facet lists plus optional exact coordinates
/// keyed by vertex id.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub facets: Vec<Vec<VertexId>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<BTreeMap<String, Vec<String>>>,
}

impl ComplexJson {
    pub fn from_parts(
        complex: &SimplicialComplex,
        coords: Option<&BTreeMap<VertexId, Point>>,
    ) -> Self {
        ComplexJson {
            facets: complex
                .facets()
                .iter()
                .map(|f| f.vertices().to_vec())
                .collect(),
            coordinates: coords.map(|map| {
                map.iter()
                    .map(|(v, p)| {
                        (
                            v.to_string(),
                            p.iter().map(rational_string).collect::<Vec<_>>(),
                        )
                    })
                    .collect()
            }),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.facets.clone())
    }

    pub fn coordinate_table(&self) -> Result<Option<BTreeMap<VertexId, Point>>> {
        let Some(raw) = &self.coordinates else {
            return Ok(None);
        };
        let mut out = BTreeMap::new();
        for (key, strs) in raw {
            let v: VertexId = key
                .parse()
                .map_err(|_| Error::BadInput(format!("bad vertex key {key:?}")))?;
            let p: Point = strs
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<_>>()?;
            out.insert(v, p);
        }
        Ok(Some(out))
    }

    /// Builds the embedded complex; errors when no coordinates are present.
    pub fn to_embedded(&self) -> Result<EmbeddedComplex> {
        let complex = self.to_complex()?;
        let coords = self
            .coordinate_table()?
            .ok_or_else(|| Error::BadInput("this command needs vertex coordinates".into()))?;
        EmbeddedComplex::new(complex, coords)
    }
}

/// JSON schema for a polynomial observable.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhiJson {
    pub ambient: usize,
    pub terms: Vec<PhiTermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PhiTermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

impl PhiJson {
    pub fn from_observable(phi: &PolynomialObservable) -> Self {
        PhiJson {
            ambient: phi.ambient_dim(),
            terms: phi
                .terms()
                .iter()
                .map(|(exp, coef)| PhiTermJson {
                    exp: exp.clone(),
                    coef: rational_string(coef),
                })
                .collect(),
        }
    }

    pub fn to_observable(&self) -> Result<PolynomialObservable> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.exp.clone(), parse_rational(&t.coef)?)))
            .collect::<Result<Vec<_>>>()?;
        PolynomialObservable::new(self.ambient, terms)
    }
}

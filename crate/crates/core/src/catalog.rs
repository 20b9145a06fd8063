//! Named `(l, h)` pairs, each built from closed-form coefficient formulas.
//!
//! `laguerre` and `miller-lee` are the families the sequences were worked
//! out for; the rest are classical families with well-known closed forms,
//! kept as independent cross-checks.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::engine::ShefferPair;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::series::TruncatedSeries;

type Series = TruncatedSeries<Rational>;

pub type Params = BTreeMap<String, Rational>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    #[serde(rename = "type")]
    pub kind: &'static str,
}

/// Catalog metadata for one family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub name: &'static str,
    pub params: Vec<ParamSpec>,
    pub description: &'static str,
}

const fn rational(name: &'static str) -> ParamSpec {
    ParamSpec { name, kind: "rational" }
}

/// Stable order: the two worked families and the identity pair, then extensions.
pub fn list_families() -> Vec<FamilySpec> {
    vec![
        FamilySpec {
            name: "laguerre",
            params: vec![rational("lambda")],
            description: "generalized Laguerre: l = (1-y)^(-lambda-1), h = y/(y-1)",
        },
        FamilySpec {
            name: "miller-lee",
            params: vec![rational("m")],
            description: "Miller-Lee type Appell: l = (1-y)^(m+1), h = y",
        },
        FamilySpec {
            name: "monomial",
            params: vec![],
            description: "identity pair: l = 1, h = y (x^n)",
        },
        FamilySpec {
            name: "bernoulli",
            params: vec![],
            description: "extension, Bernoulli polynomials: l = (e^y-1)/y, h = y",
        },
        FamilySpec {
            name: "euler",
            params: vec![],
            description: "extension, Euler polynomials: l = (e^y+1)/2, h = y",
        },
        FamilySpec {
            name: "exp-shift",
            params: vec![],
            description: "extension, shifted powers: l = e^y, h = y",
        },
        FamilySpec {
            name: "hermite",
            params: vec![],
            description: "extension, probabilists' Hermite: l = exp(y^2/2), h = y",
        },
        FamilySpec {
            name: "laguerre-assoc",
            params: vec![],
            description: "extension, associated pair: l = 1, h = y/(y-1)",
        },
        FamilySpec {
            name: "log-assoc",
            params: vec![],
            description: "extension, associated pair (falling factorials): l = 1, h = e^y-1",
        },
    ]
}

pub fn find_family(name: &str) -> Option<FamilySpec> {
    list_families().into_iter().find(|f| f.name == name)
}

/// `(1 - y)^alpha` via `c_{k+1} = c_k (k - alpha) / (k + 1)`.
pub fn binomial_series(alpha: &Rational, order: usize) -> Series {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = Rational::one();
    for k in 0..=order {
        coeffs.push(c.clone());
        c = c * (Rational::from_int(k as i64) - alpha) / Rational::from_int(k as i64 + 1);
    }
    Series::new(order, coeffs)
}

fn inv_factorial(k: usize) -> Rational {
    Rational::factorial(k).recip().expect("k! > 0")
}

/// `y / (y - 1) = -y - y^2 - ...`
fn laguerre_h(order: usize) -> Series {
    Series::from_fn(order, |k| if k == 0 { Rational::zero() } else { Rational::from_int(-1) })
}

/// `e^y - 1`
fn exp_minus_one(order: usize) -> Series {
    Series::from_fn(order, |k| if k == 0 { Rational::zero() } else { inv_factorial(k) })
}

fn take_params(family: &FamilySpec, params: &Params) -> Result<Vec<Rational>> {
    if let Some(extra) = params.keys().find(|k| !family.params.iter().any(|p| p.name == *k)) {
        return Err(Error::UnexpectedParam {
            family: family.name.into(),
            param: extra.clone(),
        });
    }
    family
        .params
        .iter()
        .map(|p| {
            params.get(p.name).cloned().ok_or_else(|| Error::MissingParam {
                family: family.name.into(),
                param: p.name.into(),
            })
        })
        .collect()
}

/// Builds the named pair at the given truncation order.
pub fn make_pair(name: &str, params: &Params, order: usize) -> Result<ShefferPair> {
    let family = find_family(name).ok_or_else(|| Error::UnknownFamily(name.into()))?;
    let values = take_params(&family, params)?;
    if order < 1 {
        return Err(Error::InvalidParam {
            family: name.into(),
            reason: "truncation order must be at least 1".into(),
        });
    }
    let y = Series::variable(order);
    let (l, h) = match name {
        "monomial" => (Series::one(order), y),
        "laguerre" => {
            let alpha = -(&values[0] + &Rational::one());
            (binomial_series(&alpha, order), laguerre_h(order))
        }
        "miller-lee" => {
            let alpha = &values[0] + &Rational::one();
            (binomial_series(&alpha, order), y)
        }
        "hermite" => {
            let l = Series::from_fn(order, |k| {
                if k % 2 == 0 {
                    let j = k / 2;
                    (Rational::from_int(2).pow(j as u32) * Rational::factorial(j))
                        .recip()
                        .expect("nonzero")
                } else {
                    Rational::zero()
                }
            });
            (l, y)
        }
        "bernoulli" => (Series::from_fn(order, |k| inv_factorial(k + 1)), y),
        "euler" => {
            let l = Series::from_fn(order, |k| {
                if k == 0 {
                    Rational::one()
                } else {
                    inv_factorial(k) * Rational::new(1, 2)
                }
            });
            (l, y)
        }
        "exp-shift" => (Series::exponential(order), y),
        "laguerre-assoc" => (Series::one(order), laguerre_h(order)),
        "log-assoc" => (Series::one(order), exp_minus_one(order)),
        _ => unreachable!("every listed family has a builder"),
    };
    ShefferPair::from_series(l, h).map_err(|e| Error::InvalidParam {
        family: name.into(),
        reason: e.to_string(),
    })
}

/// Convenience for single-parameter families.
pub fn params(entries: &[(&str, Rational)]) -> Params {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// The parameterized instances used by the verification grid.
pub fn grid_instances() -> Vec<(&'static str, Params)> {
    let mut out = Vec::new();
    for lambda in ["0", "1", "5/2"] {
        out.push(("laguerre", params(&[("lambda", lambda.parse().unwrap())])));
    }
    for m in ["0", "1", "3"] {
        out.push(("miller-lee", params(&[("m", m.parse().unwrap())])));
    }
    for name in ["hermite", "bernoulli", "euler", "exp-shift", "monomial", "log-assoc", "laguerre-assoc"] {
        out.push((name, Params::new()));
    }
    out
}

//! Literal evaluation of the printed worked-example identities.
//!
//! Each identity is evaluated exactly as printed, against sequences
//! generated by the engine. The printed coefficient tables are reported
//! alongside the triples extracted from the defining series, and the
//! theorem each example specializes is re-checked with the extracted
//! triple. Ground truth is always the extraction, never the table.

use serde::Serialize;

use crate::catalog::{self, Params};
use crate::engine::{self, CoeffTriple, Theorem};
use crate::error::Result;
use crate::exact::{Poly, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn of(residual: &Poly) -> Self {
        if residual.is_zero() {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// Printed coefficient table, as vectors indexed by `k`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct PrintedCoeffs {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct AuditEntry {
    pub identity_id: &'static str,
    pub family: &'static str,
    pub parameters: Params,
    /// First index where the printed identity fails, or the largest index checked.
    pub n: usize,
    pub checked_from: usize,
    pub status: Status,
    pub residual: Poly,
    pub printed_coeffs: PrintedCoeffs,
    pub derived_coeffs: CoeffTriple,
    pub backing_theorem: Theorem,
    pub backing_status: Status,
    pub backing_residual: Poly,
}

pub type AuditReport = Vec<AuditEntry>;

/// A printed identity: family, parameter name, backing theorem, smallest
/// index at which it makes sense, and its residual.
struct Identity {
    id: &'static str,
    family: &'static str,
    param: &'static str,
    theorem: Theorem,
    min_n: usize,
    printed: fn(&Rational, usize) -> PrintedCoeffs,
    residual: fn(&[Poly], &Rational, usize) -> Poly,
}

fn int(v: i64) -> Rational {
    Rational::from_int(v)
}

fn fact(k: usize) -> Rational {
    Rational::factorial(k)
}

fn binom(n: usize, k: usize) -> Rational {
    Rational::binomial(n, k)
}

fn table(len: usize, f: impl Fn(usize) -> [Rational; 3]) -> PrintedCoeffs {
    let rows: Vec<[Rational; 3]> = (0..len).map(f).collect();
    PrintedCoeffs {
        a: rows.iter().map(|r| r[0].clone()).collect(),
        b: rows.iter().map(|r| r[1].clone()).collect(),
        c: rows.iter().map(|r| r[2].clone()).collect(),
    }
}

/// Rising factorial `(s)_k`.
fn pochhammer(s: i64, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * int(s + i as i64))
}

/// Laguerre, from the differential equation:
/// `sum_{k=1}^{n} C(n,k) k! (x - k(k-1)(k+4)(λ+1)/6) A_{n-k} = n A_n`.
fn laguerre_t21_residual(a: &[Poly], lambda: &Rational, n: usize) -> Poly {
    let lp1 = lambda + &Rational::one();
    let mut lhs = Poly::zero();
    for k in 1..=n {
        let kk = k as i64;
        let shift = &Rational::new(kk * (kk - 1) * (kk + 4), 6) * &lp1;
        let factor = Poly::new(vec![-shift, Rational::one()]);
        let term = (&factor * &a[n - k]).scale(&(binom(n, k) * fact(k)));
        lhs = &lhs + &term;
    }
    &lhs - &a[n].scale(&int(n as i64))
}

fn laguerre_t21_printed(lambda: &Rational, len: usize) -> PrintedCoeffs {
    let lp1 = lambda + &Rational::one();
    table(len, |k| {
        [
            pochhammer(1, k),
            &lp1 * &(pochhammer(2, k) - pochhammer(1, k)),
            &lp1 * &(pochhammer(3, k) - pochhammer(4, k)),
        ]
    })
}

/// Laguerre, first recurrence:
/// `A_{n+1} + (x+2λ+2) A_n = 2xn A_{n-1} - 2(x+λ+1) C(n,2) A_{n-2}
///  + (λ+1) sum_{k=3}^{n} C(n,k) A_{n-k} k!`.
fn laguerre_t31_residual(a: &[Poly], lambda: &Rational, n: usize) -> Poly {
    let lp1 = lambda + &Rational::one();
    let x = Poly::x();
    let lhs = &a[n + 1] + &(&Poly::new(vec![lp1.clone() * int(2), Rational::one()]) * &a[n]);
    let mut rhs = (&x * &a[n - 1]).scale(&int(2 * n as i64));
    let second = &Poly::new(vec![lp1.clone(), Rational::one()]) * &a[n - 2];
    rhs = &rhs - &second.scale(&(int(2) * binom(n, 2)));
    for k in 3..=n {
        rhs = &rhs + &a[n - k].scale(&(&lp1 * &(binom(n, k) * fact(k))));
    }
    &lhs - &rhs
}

fn laguerre_t31_printed(lambda: &Rational, len: usize) -> PrintedCoeffs {
    let lp1 = lambda + &Rational::one();
    table(len, |k| {
        let a = match k {
            0 => int(-1),
            1 => int(2),
            2 => int(-2),
            _ => Rational::zero(),
        };
        let c = match k {
            0 => -&lp1,
            1 => lp1.clone(),
            _ => Rational::zero(),
        };
        [a, -(&lp1 * &fact(k)), c]
    })
}

/// Miller-Lee, from the differential equation:
/// `n A_n - n x A_{n-1} = sum_{k=1}^{n} C(n,k) A_{n-k} (b_k + c_k)`.
fn miller_lee_t21_residual(a: &[Poly], m: &Rational, n: usize) -> Poly {
    let printed = miller_lee_t21_printed(m, n + 1);
    let lhs = &a[n].scale(&int(n as i64)) - &(&Poly::x() * &a[n - 1]).scale(&int(n as i64));
    let rhs = (1..=n).fold(Poly::zero(), |acc, k| {
        let bc = &printed.b[k] + &printed.c[k];
        &acc + &a[n - k].scale(&(binom(n, k) * bc))
    });
    &lhs - &rhs
}

fn miller_lee_t21_printed(m: &Rational, len: usize) -> PrintedCoeffs {
    let mp1 = m + &Rational::one();
    table(len, |k| {
        if k == 0 {
            // a_0 is not tabulated
            [Rational::zero(), Rational::zero(), Rational::zero()]
        } else {
            let a = if k == 1 { Rational::one() } else { Rational::zero() };
            [a, &mp1 * &pochhammer(1, k), -(&mp1 * &pochhammer(1, k))]
        }
    })
}

/// Miller-Lee, first recurrence:
/// `A_{n+1} - x A_n = sum_{k=0}^{n} C(n,k) A_{n-k} (b_k + c_k)`.
fn miller_lee_t31_residual(a: &[Poly], m: &Rational, n: usize) -> Poly {
    let printed = miller_lee_t31_printed(m, n + 1);
    let lhs = &a[n + 1] - &(&Poly::x() * &a[n]);
    let rhs = (0..=n).fold(Poly::zero(), |acc, k| {
        let bc = &printed.b[k] + &printed.c[k];
        &acc + &a[n - k].scale(&(binom(n, k) * bc))
    });
    &lhs - &rhs
}

fn miller_lee_t31_printed(m: &Rational, len: usize) -> PrintedCoeffs {
    let mp1 = m + &Rational::one();
    table(len, |k| {
        let a = if k == 0 { Rational::one() } else { Rational::zero() };
        [a, &mp1 * &pochhammer(1, k), -(&mp1 * &pochhammer(1, k))]
    })
}

/// Miller-Lee, second recurrence, with the printed `λ` read as `m`:
/// `A_{n+1} = x A_n - 2(m+1) sum_{k=0}^{n} C(n,k) A_{n-k} k!`.
fn miller_lee_t32_residual(a: &[Poly], m: &Rational, n: usize) -> Poly {
    let mp1 = m + &Rational::one();
    let sum = (0..=n).fold(Poly::zero(), |acc, k| {
        &acc + &a[n - k].scale(&(binom(n, k) * fact(k)))
    });
    let rhs = &(&Poly::x() * &a[n]) - &sum.scale(&(int(2) * mp1));
    &a[n + 1] - &rhs
}

fn miller_lee_t32_printed(m: &Rational, len: usize) -> PrintedCoeffs {
    let mp1 = m + &Rational::one();
    table(len, |k| {
        let a = if k == 0 { Rational::one() } else { Rational::zero() };
        let bc = -(&mp1 * &pochhammer(1, k));
        [a, bc.clone(), bc]
    })
}

const IDENTITIES: [Identity; 5] = [
    Identity {
        id: "laguerre-t2.1",
        family: "laguerre",
        param: "lambda",
        theorem: Theorem::T21,
        min_n: 0,
        printed: laguerre_t21_printed,
        residual: laguerre_t21_residual,
    },
    Identity {
        id: "laguerre-t3.1",
        family: "laguerre",
        param: "lambda",
        theorem: Theorem::T31,
        min_n: 2,
        printed: laguerre_t31_printed,
        residual: laguerre_t31_residual,
    },
    Identity {
        id: "miller-lee-t2.1",
        family: "miller-lee",
        param: "m",
        theorem: Theorem::T21,
        min_n: 1,
        printed: miller_lee_t21_printed,
        residual: miller_lee_t21_residual,
    },
    Identity {
        id: "miller-lee-t3.1",
        family: "miller-lee",
        param: "m",
        theorem: Theorem::T31,
        min_n: 0,
        printed: miller_lee_t31_printed,
        residual: miller_lee_t31_residual,
    },
    Identity {
        id: "miller-lee-t3.2",
        family: "miller-lee",
        param: "m",
        theorem: Theorem::T32,
        min_n: 0,
        printed: miller_lee_t32_printed,
        residual: miller_lee_t32_residual,
    },
];

/// Identity ids in report order.
pub fn identity_ids() -> Vec<&'static str> {
    IDENTITIES.iter().map(|i| i.id).collect()
}

const LAGUERRE_VALUES: [&str; 3] = ["0", "1", "5/2"];
const MILLER_LEE_VALUES: [&str; 3] = ["0", "1", "3"];

/// Residual of a printed identity, as printed, at a single `n`.
pub fn printed_residual(id: &str, value: &Rational, n: usize) -> Result<Option<Poly>> {
    let Some(identity) = IDENTITIES.iter().find(|i| i.id == id) else {
        return Ok(None);
    };
    if n < identity.min_n {
        return Ok(None);
    }
    let params = catalog::params(&[(identity.param, value.clone())]);
    let pair = catalog::make_pair(identity.family, &params, n + 2)?;
    let seq = engine::sheffer_appell_sequence(&pair, n + 1)?;
    Ok(Some((identity.residual)(&seq.polys, value, n)))
}

fn audit_one(identity: &Identity, value: &Rational, n: usize) -> Result<AuditEntry> {
    let params = catalog::params(&[(identity.param, value.clone())]);
    let pair = catalog::make_pair(identity.family, &params, n + 2)?;
    let seq = engine::sheffer_appell_sequence(&pair, n + 1)?;
    let derived = engine::coeff_triple(&pair, identity.theorem, n)?;

    let first = identity.min_n.min(n);
    let mut at = n;
    let mut residual = Poly::zero();
    for k in first..=n {
        let r = (identity.residual)(&seq.polys, value, k);
        if !r.is_zero() {
            at = k;
            residual = r;
            break;
        }
    }
    let backing_residual = engine::residual_from(&seq.polys, &derived, n)?;
    Ok(AuditEntry {
        identity_id: identity.id,
        family: identity.family,
        parameters: params,
        n: at,
        checked_from: first,
        status: Status::of(&residual),
        residual,
        printed_coeffs: (identity.printed)(value, n + 1),
        derived_coeffs: derived,
        backing_theorem: identity.theorem,
        backing_status: Status::of(&backing_residual),
        backing_residual,
    })
}

/// Evaluates every printed identity for every parameter value at all
/// indices up to `n`. Needs `n >= 3` so that every identity is exercised.
pub fn printed_example_audit(n: usize) -> Result<AuditReport> {
    if n < 3 {
        return Err(crate::Error::Contract("the audit needs n >= 3".into()));
    }
    let mut report = Vec::new();
    for identity in &IDENTITIES {
        let values: &[&str] = if identity.family == "laguerre" {
            &LAGUERRE_VALUES
        } else {
            &MILLER_LEE_VALUES
        };
        for v in values {
            report.push(audit_one(identity, &v.parse()?, n)?);
        }
    }
    Ok(report)
}

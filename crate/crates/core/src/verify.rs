//! Batch verification: independent `(pair, check, n)` jobs evaluated either
//! sequentially or, with the `parallel` feature, on the rayon pool. Results
//! always come back in input order.

use serde::Serialize;

use crate::catalog::{self, Params};
use crate::engine::{self, Corollary, Theorem};
use crate::error::Result;
use crate::exact::{Poly, Rational};
use crate::matrix;
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CheckKind {
    Theorem(Theorem),
    Corollary(Corollary),
    Lemma,
    /// Multiplicativity of Pascal matrices on `(l, h)`.
    PascalProduct,
    /// Wronskian of a product on `(l, e^{xy})`.
    WronskianProduct,
    /// Wronskian of the composite `l(h(y))`.
    WronskianComposite,
    /// Truncation at `n + 5` reproduces the members `0..=n`.
    TruncationStability,
}

impl std::fmt::Display for CheckKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckKind::Theorem(t) => write!(f, "theorem {t}"),
            CheckKind::Corollary(c) => write!(f, "corollary {c}"),
            CheckKind::Lemma => f.write_str("lemma"),
            CheckKind::PascalProduct => f.write_str("pascal-product"),
            CheckKind::WronskianProduct => f.write_str("wronskian-product"),
            CheckKind::WronskianComposite => f.write_str("wronskian-composite"),
            CheckKind::TruncationStability => f.write_str("truncation"),
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Check {
    pub family: String,
    pub params: Params,
    pub kind: CheckKind,
    pub n: usize,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub passed: bool,
    /// Nonzero residual of a failing identity.
    pub residual: Option<Poly>,
    pub error: Option<String>,
}

impl CheckOutcome {
    pub fn label(&self) -> String {
        let c = &self.check;
        let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let family = if params.is_empty() {
            c.family.clone()
        } else {
            format!("{}({})", c.family, params.join(","))
        };
        format!("{family} {} n={}", c.kind, c.n)
    }
}

fn evaluate(check: &Check) -> Result<Option<Poly>> {
    let n = check.n;
    // residuals at n touch member n + 1 and derivatives up to order n + 1
    let pair = catalog::make_pair(&check.family, &check.params, n + 2)?;
    let verdict = |ok: bool| if ok { None } else { Some(Poly::zero()) };
    Ok(match check.kind {
        CheckKind::Theorem(t) => {
            let r = engine::theorem_residual(&pair, t, n)?;
            (!r.is_zero()).then_some(r)
        }
        CheckKind::Corollary(c) => {
            let r = engine::corollary_residual(&pair, n, c)?;
            (!r.is_zero()).then_some(r)
        }
        CheckKind::Lemma => verdict(engine::lemma_check(&pair, n)?),
        CheckKind::PascalProduct => {
            verdict(matrix::check_property_ii(pair.l().series(), pair.h().series(), n)?)
        }
        CheckKind::WronskianProduct => {
            let order = pair.order();
            let exy = TruncatedSeries::<Rational>::variable(order).times_x().exp()?;
            verdict(matrix::check_property_iii(&pair.l().series().lift::<Poly>(), &exy, n)?)
        }
        CheckKind::WronskianComposite => {
            verdict(matrix::check_property_iv(pair.l().series(), pair.h(), n)?)
        }
        CheckKind::TruncationStability => {
            let wide = catalog::make_pair(&check.family, &check.params, n + 5)?;
            let narrow = engine::sheffer_appell_sequence(&pair, n)?;
            let again = engine::sheffer_appell_sequence(&wide, n + 5)?;
            let sheffer = engine::sheffer_sequence(&pair, n)?;
            let sheffer_again = engine::sheffer_sequence(&wide, n + 5)?;
            verdict(
                narrow.polys[..] == again.polys[..=n]
                    && sheffer.polys[..] == sheffer_again.polys[..=n],
            )
        }
    })
}

/// Runs one check. Errors become failing outcomes carrying the message.
pub fn run_check(check: &Check) -> CheckOutcome {
    match evaluate(check) {
        Ok(residual) => CheckOutcome {
            check: check.clone(),
            passed: residual.is_none(),
            residual: residual.filter(|r| !r.is_zero()),
            error: None,
        },
        Err(e) => CheckOutcome {
            check: check.clone(),
            passed: false,
            residual: None,
            error: Some(e.to_string()),
        },
    }
}

pub fn run_sequential(checks: &[Check]) -> Vec<CheckOutcome> {
    checks.iter().map(run_check).collect()
}

#[cfg(feature = "parallel")]
pub fn run_parallel(checks: &[Check]) -> Vec<CheckOutcome> {
    use rayon::prelude::*;
    checks.par_iter().map(run_check).collect()
}

/// Parallel when the `parallel` feature is on, sequential otherwise.
pub fn run(checks: &[Check]) -> Vec<CheckOutcome> {
    #[cfg(feature = "parallel")]
    {
        run_parallel(checks)
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_sequential(checks)
    }
}

/// One check per `n` in `0..=max_n` for each kind.
pub fn grid(family: &str, params: &Params, kinds: &[CheckKind], max_n: usize) -> Vec<Check> {
    kinds
        .iter()
        .flat_map(|&kind| {
            (0..=max_n).map(move |n| Check {
                family: family.to_string(),
                params: params.clone(),
                kind,
                n,
            })
        })
        .collect()
}

pub fn theorem_kinds() -> Vec<CheckKind> {
    Theorem::ALL.iter().map(|&t| CheckKind::Theorem(t)).collect()
}

pub fn property_kinds() -> Vec<CheckKind> {
    vec![
        CheckKind::PascalProduct,
        CheckKind::WronskianProduct,
        CheckKind::WronskianComposite,
    ]
}

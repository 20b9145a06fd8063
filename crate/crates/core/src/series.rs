//! Truncated formal power series in `y`.
//!
//! A [`TruncatedSeries`] of order `n` stores the coefficients of
//! `y^0 ..= y^n`; every result is exact modulo `y^(n+1)`. Binary operations
//! demand equal orders and fail loudly otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, Ring};

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawSeries<R>", bound = "R: Ring + Serialize + for<'a> Deserialize<'a>")]
pub struct TruncatedSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

#[derive(Deserialize)]
struct RawSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> TryFrom<RawSeries<R>> for TruncatedSeries<R> {
    type Error = String;

    fn try_from(raw: RawSeries<R>) -> std::result::Result<Self, String> {
        if raw.coeffs.len() != raw.order + 1 {
            return Err(format!(
                "series of order {} needs {} coefficients, got {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            ));
        }
        Ok(TruncatedSeries {
            order: raw.order,
            coeffs: raw.coeffs,
        })
    }
}

impl<R: Ring> TruncatedSeries<R> {
    /// Builds a series of the given order, padding with zeros or dropping
    /// coefficients past the order.
    pub fn new(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncatedSeries {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, vec![])
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![R::one()])
    }

    /// The series `y`.
    pub fn variable(order: usize) -> Self {
        Self::new(order, vec![R::zero(), R::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.coeffs[k]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// Drops terms above `order`; asks for at most the current order.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order {
            return Err(Error::InsufficientOrder {
                have: self.order,
                need: order,
            });
        }
        Ok(TruncatedSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, other_order: usize) -> Result<()> {
        if self.order != other_order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other_order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other.order)?;
        Ok(Self::from_fn(self.order, |k| self.coeffs[k].plus(&other.coeffs[k])))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other.order)?;
        Ok(Self::from_fn(self.order, |k| self.coeffs[k].minus(&other.coeffs[k])))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order, |k| self.coeffs[k].negated())
    }

    pub fn scale(&self, by: &Rational) -> Self {
        Self::from_fn(self.order, |k| self.coeffs[k].scaled(by))
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other.order)?;
        let mut out = vec![R::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// Product with a rational-coefficient series of the same order.
    pub fn mul_rational(&self, other: &TruncatedSeries<Rational>) -> Result<Self> {
        self.check_order(other.order())?;
        let mut out = vec![R::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs()[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.scaled(b));
                }
            }
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: out,
        })
    }

    pub fn pow(&self, exp: usize) -> Result<Self> {
        let mut acc = Self::one(self.order);
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Term-wise `d/dy`; the result has order one less.
    pub fn derivative(&self) -> Result<Self> {
        if self.order == 0 {
            return Err(Error::DerivativeOfConstant);
        }
        Ok(Self::from_fn(self.order - 1, |k| {
            self.coeffs[k + 1].scaled(&Rational::from_int(k as i64 + 1))
        }))
    }

    /// `f(g(y))` by Horner's scheme; `g` has no constant term so the
    /// truncated result is exact.
    pub fn compose(&self, inner: &DeltaSeries) -> Result<Self> {
        let g = inner.series();
        self.check_order(g.order())?;
        let mut acc = Self::zero(self.order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_rational(g)?;
            acc.coeffs[0] = acc.coeffs[0].plus(c);
        }
        Ok(acc)
    }

    /// `exp(g) = sum g^k / k!` for a series with zero constant term, via
    /// `k e_k = sum_{j=1}^{k} j g_j e_{k-j}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut out: Vec<R> = Vec::with_capacity(self.order + 1);
        out.push(R::one());
        for k in 1..=self.order {
            let mut acc = R::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                let term = self.coeffs[j]
                    .times(&out[k - j])
                    .scaled(&Rational::from_int(j as i64));
                acc = acc.plus(&term);
            }
            out.push(acc.scaled(&Rational::new(1, k as i64)));
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// `[a(0), a'(0), ..., a^(n)(0)]`, i.e. `k! * coeff_k`.
    pub fn derivative_vector(&self) -> Vec<R> {
        let mut fact = Rational::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k > 0 {
                    fact = &fact * &Rational::from_int(k as i64);
                }
                c.scaled(&fact)
            })
            .collect()
    }
}

impl TruncatedSeries<Rational> {
    pub fn from_ints(order: usize, coeffs: &[i64]) -> Self {
        Self::new(order, coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// Embeds a rational series into another coefficient ring.
    pub fn lift<R: Ring>(&self) -> TruncatedSeries<R> {
        TruncatedSeries::from_fn(self.order, |k| R::from_rational(self.coeffs[k].clone()))
    }

    /// `exp(y)`
    pub fn exponential(order: usize) -> Self {
        Self::from_fn(order, |k| Rational::factorial(k).recip().unwrap())
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeffs[0].recip().ok_or(Error::NotInvertible)?;
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(c0.clone());
        for k in 1..=self.order {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc + &self.coeffs[j] * &out[k - j];
                }
            }
            out.push(-(acc * &c0));
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// Series quotient `self / den`.
    pub fn div(&self, den: &Self) -> Result<Self> {
        self.mul(&den.reciprocal()?)
    }

    /// Embeds as a series over polynomials whose `y^k` coefficient is `c_k * x`.
    pub fn times_x(&self) -> TruncatedSeries<Poly> {
        TruncatedSeries::from_fn(self.order, |k| Poly::monomial(self.coeffs[k].clone(), 1))
    }
}

/// Series with zero constant term and nonzero linear term.
#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(transparent)]
pub struct DeltaSeries(TruncatedSeries<Rational>);

impl DeltaSeries {
    pub fn new(series: TruncatedSeries<Rational>) -> Result<Self> {
        if series.order() < 1 {
            return Err(Error::NotDelta("order must be at least 1"));
        }
        if !series.coeff(0).is_zero() {
            return Err(Error::NotDelta("constant term must vanish"));
        }
        if series.coeff(1).is_zero() {
            return Err(Error::NotDelta("linear term must be nonzero"));
        }
        Ok(DeltaSeries(series))
    }

    /// The identity delta series `y`.
    pub fn identity(order: usize) -> Self {
        DeltaSeries(TruncatedSeries::variable(order.max(1)))
    }

    pub fn series(&self) -> &TruncatedSeries<Rational> {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    /// `h'(0)`, never zero.
    pub fn linear_coeff(&self) -> &Rational {
        self.0.coeff(1)
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        DeltaSeries::new(self.0.truncate(order)?)
    }

    /// Compositional inverse by Lagrange inversion:
    /// `[y^k] h^{-1} = (1/k) [t^{k-1}] (t / h(t))^k`.
    pub fn comp_inverse(&self) -> DeltaSeries {
        let n = self.order();
        // h(t)/t, known through t^{n-1}
        let quotient = TruncatedSeries::new(n - 1, self.0.coeffs()[1..].to_vec());
        let phi = quotient
            .reciprocal()
            .expect("linear coefficient of a delta series is nonzero");
        let mut coeffs = vec![Rational::zero()];
        let mut power = TruncatedSeries::<Rational>::one(n - 1);
        for k in 1..=n {
            power = power.mul(&phi).expect("equal orders");
            coeffs.push(power.coeff(k - 1) * &Rational::new(1, k as i64));
        }
        let inverse = DeltaSeries(TruncatedSeries::new(n, coeffs));
        debug_assert_eq!(
            self.0.compose(&inverse).expect("equal orders"),
            TruncatedSeries::variable(n),
            "compositional inverse post-condition"
        );
        inverse
    }
}

/// Series with nonzero constant term.
#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(transparent)]
pub struct InvertibleSeries(TruncatedSeries<Rational>);

impl InvertibleSeries {
    pub fn new(series: TruncatedSeries<Rational>) -> Result<Self> {
        if series.coeff(0).is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(InvertibleSeries(series))
    }

    pub fn series(&self) -> &TruncatedSeries<Rational> {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        InvertibleSeries::new(self.0.truncate(order)?)
    }

    pub fn reciprocal(&self) -> TruncatedSeries<Rational> {
        self.0.reciprocal().expect("constant term is nonzero")
    }
}

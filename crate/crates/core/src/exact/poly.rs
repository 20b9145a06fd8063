use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize};

use super::Rational;

/// Dense univariate polynomial in `x` over the rationals, lowest degree first.
///
/// Always canonical: no trailing zero coefficient, so the zero polynomial is
/// the empty vector and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, by: &Rational) -> Self {
        if by.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    /// `k`-th derivative with respect to `x`.
    pub fn derivative(&self, k: usize) -> Self {
        if k == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(k)
            .map(|(i, c)| {
                // i! / (i - k)!
                let falling = ((i - k + 1)..=i).fold(Rational::one(), |acc, f| {
                    acc * Rational::from_int(f as i64)
                });
                c * &falling
            })
            .collect();
        Poly::new(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(deserializer)?;
        if coeffs.last().is_some_and(Rational::is_zero) {
            return Err(serde::de::Error::custom(
                "polynomial has a trailing zero coefficient",
            ));
        }
        Ok(Poly { coeffs })
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 if show_mag => write!(f, "*x")?,
                1 => write!(f, "x")?,
                _ if show_mag => write!(f, "*x^{k}")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = &*c + s;
        }
        Poly::new(coeffs)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(c: &[&str]) -> Poly {
        Poly::new(c.iter().map(|s| q(s)).collect())
    }

    #[test]
    fn add_cancels_and_strips() {
        assert_eq!(Poly::from_ints(&[1, 1]) + Poly::from_ints(&[1, -1]), Poly::from_ints(&[2]));
        let a = Poly::from_ints(&[3, 0, 5]);
        assert_eq!(&a + &Poly::zero(), a);
        let s = Poly::from_ints(&[0, 0, 1]) + Poly::from_ints(&[0, 1, -1]);
        assert_eq!(s, Poly::x());
        assert_eq!(s.coeffs().len(), 2);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            Poly::from_ints(&[1, 1]) * Poly::from_ints(&[1, -1]),
            Poly::from_ints(&[1, 0, -1])
        );
        assert_eq!(Poly::from_ints(&[1, 1]).pow(2), Poly::from_ints(&[1, 2, 1]));
        assert_eq!(p(&["1/2", "2/3"]) * p(&["0", "3"]), p(&["0", "3/2", "2"]));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(Poly::from_ints(&[0, 0, 0, 1]).derivative(1), Poly::from_ints(&[0, 0, 3]));
        assert_eq!(p(&["0", "1", "1/2"]).derivative(2), Poly::one());
        assert_eq!(Poly::from_ints(&[5]).derivative(1), Poly::zero());
        assert_eq!(Poly::from_ints(&[1, 2]).derivative(5), Poly::zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Poly::from_ints(&[1, 0, 1]).eval(&q("2")), q("5"));
        assert_eq!(p(&["7/3", "4", "-9"]).eval(&Rational::zero()), q("7/3"));
        assert_eq!(Poly::from_ints(&[1, -1]).eval(&q("1/3")), q("2/3"));
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
        assert_eq!(Poly::from_ints(&[0, 0, 4]).degree(), Some(2));
    }

    #[test]
    fn display() {
        assert_eq!(p(&["-1/2", "1"]).to_string(), "x - 1/2");
        assert_eq!(Poly::from_ints(&[1, -2, 1]).to_string(), "x^2 - 2*x + 1");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn serde_shape() {
        let a = p(&["0", "-1/2", "3"]);
        assert_eq!(serde_json::to_string(&a).unwrap(), r#"["0","-1/2","3"]"#);
        assert!(serde_json::from_str::<Poly>(r#"["1","0"]"#).is_err());
        assert_eq!(serde_json::from_str::<Poly>("[]").unwrap(), Poly::zero());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-5i64..=5, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(small_rational(), 0..6).prop_map(Poly::new)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn product_rule(a in small_poly(), b in small_poly()) {
            let lhs = (&a * &b).derivative(1);
            let rhs = &(&a.derivative(1) * &b) + &(&a * &b.derivative(1));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn canonical_results(a in small_poly(), b in small_poly()) {
            for r in [&a + &b, &a - &b, &a * &b, a.derivative(1)] {
                prop_assert!(r.coeffs().last().is_none_or(|c| !c.is_zero()));
            }
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!((&a * &b).degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
            }
        }

        #[test]
        fn json_round_trip(a in small_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            let back: Poly = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
            prop_assert_eq!(back, a);
        }
    }
}

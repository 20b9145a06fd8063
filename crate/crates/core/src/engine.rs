//! Sequence generation and identity residuals for a Sheffer pair `(l, h)`.
//!
//! The Sheffer-Appell sequence has exponential generating function
//! `e^{x h^{-1}(y)} / (l(h^{-1}(y)) l(y))`; its `k`-th member is `k!` times
//! the `y^k` coefficient. The coefficient triples `(a, b, c)` of each
//! identity are derivative vectors of composite series built from `l` and
//! `h`, and each residual is the exact polynomial obtained by moving every
//! term of the identity to one side.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Poly, Rational};
use crate::matrix::{omega_inverse, pascal_exy, pascal_matrix, wronskian_powers_matrix, Matrix};
use crate::series::{DeltaSeries, InvertibleSeries, TruncatedSeries};

type Series = TruncatedSeries<Rational>;

/// An invertible series `l` and a delta series `h` of a common order.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct ShefferPair {
    l: InvertibleSeries,
    h: DeltaSeries,
}

impl ShefferPair {
    pub fn new(l: InvertibleSeries, h: DeltaSeries) -> Result<Self> {
        if l.order() != h.order() {
            return Err(Error::OrderMismatch {
                left: l.order(),
                right: h.order(),
            });
        }
        Ok(ShefferPair { l, h })
    }

    /// Validates raw series as a pair.
    pub fn from_series(l: Series, h: Series) -> Result<Self> {
        ShefferPair::new(InvertibleSeries::new(l)?, DeltaSeries::new(h)?)
    }

    pub fn l(&self) -> &InvertibleSeries {
        &self.l
    }

    pub fn h(&self) -> &DeltaSeries {
        &self.h
    }

    pub fn order(&self) -> usize {
        self.h.order()
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        Ok(ShefferPair {
            l: self.l.truncate(order)?,
            h: self.h.truncate(order)?,
        })
    }

    /// `l = 1` exactly.
    pub fn is_associated(&self) -> bool {
        let c = self.l.series().coeffs();
        c[0].is_one() && c[1..].iter().all(Rational::is_zero)
    }

    /// `h = y` exactly.
    pub fn is_appell(&self) -> bool {
        self.h.series() == &Series::variable(self.order())
    }

    fn require(&self, need: usize) -> Result<()> {
        if self.order() < need {
            return Err(Error::InsufficientOrder {
                have: self.order(),
                need,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceKind {
    Sheffer,
    Appell,
    ShefferAppell,
    Associated,
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SequenceKind::Sheffer => "sheffer",
            SequenceKind::Appell => "appell",
            SequenceKind::ShefferAppell => "sheffer-appell",
            SequenceKind::Associated => "associated",
        })
    }
}

/// `polys[k]` has degree exactly `k`.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct PolySequence {
    pub kind: SequenceKind,
    pub polys: Vec<Poly>,
}

impl PolySequence {
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn degrees_exact(&self) -> bool {
        self.polys.iter().enumerate().all(|(k, p)| p.degree() == Some(k))
    }
}

/// Reads off `polys[k] = k! [y^k] (prefactor * e^{x g(y)})`.
fn sequence_from_gf(
    kind: SequenceKind,
    prefactor: &Series,
    exponent: &DeltaSeries,
    n: usize,
) -> Result<PolySequence> {
    let gf = exponent.series().times_x().exp()?.mul_rational(prefactor)?;
    let mut polys = gf.derivative_vector();
    polys.truncate(n + 1);
    Ok(PolySequence { kind, polys })
}

/// Delta series need order at least 1, so tiny requests run at order 1.
fn work_order(n: usize) -> usize {
    n.max(1)
}

/// Sheffer-Appell polynomials `_sA_0 ..= _sA_n`.
pub fn sheffer_appell_sequence(pair: &ShefferPair, n: usize) -> Result<PolySequence> {
    pair.require(work_order(n))?;
    let p = pair.truncate(work_order(n))?;
    let hinv = p.h.comp_inverse();
    let l = p.l.series();
    let denom = l.compose(&hinv)?.mul(l)?;
    sequence_from_gf(SequenceKind::ShefferAppell, &denom.reciprocal()?, &hinv, n)
}

/// Sheffer polynomials with generating function `e^{x h^{-1}(y)} / l(h^{-1}(y))`.
pub fn sheffer_sequence(pair: &ShefferPair, n: usize) -> Result<PolySequence> {
    pair.require(work_order(n))?;
    let p = pair.truncate(work_order(n))?;
    let hinv = p.h.comp_inverse();
    let prefactor = p.l.series().compose(&hinv)?.reciprocal()?;
    let kind = if p.is_associated() {
        SequenceKind::Associated
    } else {
        SequenceKind::Sheffer
    };
    sequence_from_gf(kind, &prefactor, &hinv, n)
}

/// Appell polynomials with generating function `e^{xy} / l(y)`.
pub fn appell_sequence(l: &InvertibleSeries, n: usize) -> Result<PolySequence> {
    let m = work_order(n);
    if l.order() < m {
        return Err(Error::InsufficientOrder { have: l.order(), need: m });
    }
    let l = l.truncate(m)?;
    sequence_from_gf(SequenceKind::Appell, &l.reciprocal(), &DeltaSeries::identity(m), n)
}

/// Binomial convolution `result_m = sum_k C(m, k) A_k s_{m-k}` for every
/// member of `s`. The result keeps the kind of `s`.
pub fn discrete_convolution(kernel: &[Rational], s: &PolySequence) -> Result<PolySequence> {
    if kernel.len() < s.len() {
        return Err(Error::LengthMismatch {
            have: kernel.len(),
            need: s.len(),
        });
    }
    let polys = (0..s.len())
        .map(|m| {
            (0..=m).fold(Poly::zero(), |acc, k| {
                let w = &Rational::binomial(m, k) * &kernel[k];
                &acc + &s.polys[m - k].scale(&w)
            })
        })
        .collect();
    Ok(PolySequence { kind: s.kind, polys })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "2.1")]
    T21,
    #[serde(rename = "3.1")]
    T31,
    #[serde(rename = "3.2")]
    T32,
    #[serde(rename = "3.3")]
    T33,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::T21, Theorem::T31, Theorem::T32, Theorem::T33];

    /// Highest member of the sequence a residual at `n` touches.
    pub fn top_index(self, n: usize) -> usize {
        match self {
            Theorem::T21 => n,
            _ => n + 1,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::T21 => "2.1",
            Theorem::T31 => "3.1",
            Theorem::T32 => "3.2",
            Theorem::T33 => "3.3",
        })
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "2.1" => Ok(Theorem::T21),
            "3.1" => Ok(Theorem::T31),
            "3.2" => Ok(Theorem::T32),
            "3.3" => Ok(Theorem::T33),
            _ => Err(format!("unknown theorem {s:?}, expected one of 2.1, 3.1, 3.2, 3.3")),
        }
    }
}

/// Derivatives at zero of the three defining series of a theorem.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CoeffTriple {
    pub theorem: Theorem,
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub c: Vec<Rational>,
}

impl CoeffTriple {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `x a_k + b_k + c_k`
    pub fn combined(&self, k: usize) -> Poly {
        Poly::new(vec![&self.b[k] + &self.c[k], self.a[k].clone()])
    }
}

/// All the composite series the four theorems draw on, at order `n`.
struct Composites {
    n: usize,
    l: Series,
    dl: Series,
    h: Series,
    dh: Series,
    l_of_h: Series,
    dl_of_h: Series,
    l_of_hinv: Series,
    dl_of_hinv: Series,
    dh_of_hinv: Series,
}

impl Composites {
    fn new(pair: &ShefferPair, n: usize) -> Result<Self> {
        let m = work_order(n);
        pair.require(m + 1)?;
        let wide = pair.truncate(m + 1)?;
        let p = pair.truncate(m)?;
        let h = p.h;
        let hinv = h.comp_inverse();
        let l = p.l.series().clone();
        let dl = wide.l.series().derivative()?;
        let dh = wide.h.series().derivative()?;
        Ok(Composites {
            n,
            l_of_h: l.compose(&h)?,
            dl_of_h: dl.compose(&h)?,
            l_of_hinv: l.compose(&hinv)?,
            dl_of_hinv: dl.compose(&hinv)?,
            dh_of_hinv: dh.compose(&hinv)?,
            h: h.series().clone(),
            l,
            dl,
            dh,
        })
    }

    fn triple(&self, theorem: Theorem) -> Result<CoeffTriple> {
        let dv = |s: Series| {
            let mut v = s.derivative_vector();
            v.truncate(self.n + 1);
            v
        };
        let [a, b, c] = self.series(theorem)?;
        Ok(CoeffTriple {
            theorem,
            a: dv(a),
            b: dv(b),
            c: dv(c),
        })
    }

    fn series(&self, theorem: Theorem) -> Result<[Series; 3]> {
        let Composites {
            n: _,
            l,
            dl,
            h,
            dh,
            l_of_h,
            dl_of_h,
            l_of_hinv,
            dl_of_hinv,
            dh_of_hinv,
        } = self;
        Ok(match theorem {
            Theorem::T21 => [
                h.div(dh)?,
                h.mul(dl_of_h)?.div(l_of_h)?.neg(),
                h.mul(dl)?.div(&dh.mul(l)?)?.neg(),
            ],
            Theorem::T31 => [
                dh.reciprocal()?,
                dl_of_h.div(l_of_h)?.neg(),
                dl.div(&dh.mul(l)?)?.neg(),
            ],
            Theorem::T32 => [
                dh_of_hinv.clone(),
                dh_of_hinv.mul(dl)?.div(l)?.neg(),
                dl_of_hinv.div(l_of_hinv)?.neg(),
            ],
            Theorem::T33 => [
                dh_of_hinv.reciprocal()?,
                dl.div(l)?.neg(),
                dl_of_hinv.div(&dh_of_hinv.mul(l_of_hinv)?)?.neg(),
            ],
        })
    }
}

/// `(a_k, b_k, c_k)` for `k = 0..=n`. Needs a pair of order at least `n + 1`.
pub fn coeff_triple(pair: &ShefferPair, theorem: Theorem, n: usize) -> Result<CoeffTriple> {
    Composites::new(pair, n)?.triple(theorem)
}

/// Every theorem's triple from one set of composites.
pub fn all_coeff_triples(pair: &ShefferPair, n: usize) -> Result<Vec<CoeffTriple>> {
    let comp = Composites::new(pair, n)?;
    Theorem::ALL
        .iter()
        .map(|&theorem| comp.triple(theorem))
        .collect()
}

pub fn coeffs_t21(pair: &ShefferPair, n: usize) -> Result<CoeffTriple> {
    coeff_triple(pair, Theorem::T21, n)
}

pub fn coeffs_t31(pair: &ShefferPair, n: usize) -> Result<CoeffTriple> {
    coeff_triple(pair, Theorem::T31, n)
}

pub fn coeffs_t32(pair: &ShefferPair, n: usize) -> Result<CoeffTriple> {
    coeff_triple(pair, Theorem::T32, n)
}

pub fn coeffs_t33(pair: &ShefferPair, n: usize) -> Result<CoeffTriple> {
    coeff_triple(pair, Theorem::T33, n)
}

fn need(polys: &[Poly], triple: &CoeffTriple, top: usize, n: usize) -> Result<()> {
    if polys.len() <= top || triple.len() <= n {
        return Err(Error::Contract(format!(
            "residual at n = {n} needs members up to {top} and coefficients up to {n}"
        )));
    }
    Ok(())
}

/// `sum_{k=0}^{n} (x a_k + b_k + c_k) p^{(k)}(x) / k!`
fn taylor_operator(p: &Poly, triple: &CoeffTriple, n: usize) -> Poly {
    (0..=n).fold(Poly::zero(), |acc, k| {
        let dk = p.derivative(k);
        if dk.is_zero() {
            return acc;
        }
        let dk = dk.scale(&Rational::factorial(k).recip().expect("k! > 0"));
        &acc + &(&triple.combined(k) * &dk)
    })
}

/// Residual of `theorem` at index `n`, given the sequence and the matching
/// coefficient triple (both possibly longer than needed).
pub fn residual_from(polys: &[Poly], triple: &CoeffTriple, n: usize) -> Result<Poly> {
    let theorem = triple.theorem;
    need(polys, triple, theorem.top_index(n), n)?;
    let binom = |k: usize| Rational::binomial(n, k);
    Ok(match theorem {
        Theorem::T21 => {
            let lhs = taylor_operator(&polys[n], triple, n);
            &lhs - &polys[n].scale(&Rational::from_int(n as i64))
        }
        Theorem::T31 => &polys[n + 1] - &taylor_operator(&polys[n], triple, n),
        Theorem::T32 => {
            let mut r = &polys[n + 1].scale(&triple.a[0]) - &(&Poly::x() * &polys[n]);
            for k in 0..=n {
                let bc = &triple.b[k] + &triple.c[k];
                r = &r - &polys[n - k].scale(&(binom(k) * bc));
            }
            for k in 1..=n {
                r = &r + &polys[n + 1 - k].scale(&(binom(k) * &triple.a[k]));
            }
            r
        }
        Theorem::T33 => {
            let sum = (0..=n).fold(Poly::zero(), |acc, k| {
                let term = &triple.combined(k) * &polys[n - k];
                &acc + &term.scale(&binom(k))
            });
            &polys[n + 1] - &sum
        }
    })
}

/// Residual of any theorem at `n`, computed from scratch.
pub fn theorem_residual(pair: &ShefferPair, theorem: Theorem, n: usize) -> Result<Poly> {
    let seq = sheffer_appell_sequence(pair, theorem.top_index(n))?;
    let triple = coeff_triple(pair, theorem, n)?;
    residual_from(&seq.polys, &triple, n)
}

/// Differential equation residual.
pub fn ode_residual_t21(pair: &ShefferPair, n: usize) -> Result<Poly> {
    theorem_residual(pair, Theorem::T21, n)
}

pub fn recurrence_residual_t31(pair: &ShefferPair, n: usize) -> Result<Poly> {
    theorem_residual(pair, Theorem::T31, n)
}

pub fn recurrence_residual_t32(pair: &ShefferPair, n: usize) -> Result<Poly> {
    theorem_residual(pair, Theorem::T32, n)
}

pub fn recurrence_residual_t33(pair: &ShefferPair, n: usize) -> Result<Poly> {
    theorem_residual(pair, Theorem::T33, n)
}

/// Left side of the matrix factorization: entry `(i, j)` is
/// `_sA_i^{(j)}(x) / j!`, derivatives taken in `x`.
pub fn lemma_lhs(seq: &PolySequence, n: usize) -> Matrix<Poly> {
    Matrix::from_fn(n + 1, n + 1, |i, j| {
        seq.polys[i]
            .derivative(j)
            .scale(&Rational::factorial(j).recip().expect("j! > 0"))
    })
}

/// Right side: `W[1, h^{-1}, ..., (h^{-1})^n] Ω^{-1} P[1/l] P[1/l(h)] P[e^{xy}]`,
/// all at `y = 0`.
pub fn lemma_rhs(pair: &ShefferPair, n: usize) -> Result<Matrix<Poly>> {
    pair.require(work_order(n))?;
    let p = pair.truncate(work_order(n))?;
    let hinv = p.h.comp_inverse();
    let recip_l = p.l.reciprocal();
    let recip_l_of_h = p.l.series().compose(&p.h)?.reciprocal()?;
    let rational = wronskian_powers_matrix(&hinv, n)?
        .matrix()
        .mul(&omega_inverse(n))?
        .mul(pascal_matrix(&recip_l, n)?.matrix())?
        .mul(pascal_matrix(&recip_l_of_h, n)?.matrix())?;
    rational.lift::<Poly>().mul(pascal_exy(n).matrix())
}

/// Whether both sides of the matrix factorization agree entrywise.
pub fn lemma_check(pair: &ShefferPair, n: usize) -> Result<bool> {
    let seq = sheffer_appell_sequence(pair, n)?;
    Ok(lemma_lhs(&seq, n) == lemma_rhs(pair, n)?)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Corollary {
    #[serde(rename = "C2.1")]
    C21,
    #[serde(rename = "C3.1")]
    C31,
    #[serde(rename = "C3.2")]
    C32,
    #[serde(rename = "C3.3")]
    C33,
}

impl Corollary {
    pub const ALL: [Corollary; 4] = [Corollary::C21, Corollary::C31, Corollary::C32, Corollary::C33];

    /// Theorem whose coefficient triple the corollary specializes. The
    /// C3.2 statement repeats C3.1 verbatim, including `a_k = (1/h')^{(k)}`.
    pub fn theorem(self) -> Theorem {
        match self {
            Corollary::C21 => Theorem::T21,
            Corollary::C31 | Corollary::C32 => Theorem::T31,
            Corollary::C33 => Theorem::T33,
        }
    }
}

impl fmt::Display for Corollary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Corollary::C21 => "C2.1",
            Corollary::C31 => "C3.1",
            Corollary::C32 => "C3.2",
            Corollary::C33 => "C3.3",
        })
    }
}

/// Residual of a corollary for an associated pair `(1, h)`.
pub fn corollary_residual(pair: &ShefferPair, n: usize, which: Corollary) -> Result<Poly> {
    if !pair.is_associated() {
        return Err(Error::NotAssociated);
    }
    let triple = coeff_triple(pair, which.theorem(), n)?;
    if !triple.b.iter().chain(&triple.c).all(Rational::is_zero) {
        return Err(Error::Contract("b and c must vanish when l = 1".into()));
    }
    let seq = sheffer_appell_sequence(pair, n + 1)?;
    let q = &seq.polys;
    let x = Poly::x();
    Ok(match which {
        Corollary::C21 => {
            let sum = (0..=n).fold(Poly::zero(), |acc, k| {
                let term = q[n]
                    .derivative(k)
                    .scale(&(&triple.a[k] / &Rational::factorial(k)));
                &acc + &term
            });
            &(&x * &sum) - &q[n].scale(&Rational::from_int(n as i64))
        }
        Corollary::C31 | Corollary::C32 => {
            let sum = (0..=n).fold(Poly::zero(), |acc, k| {
                let term = q[n]
                    .derivative(k)
                    .scale(&(&triple.a[k] / &Rational::factorial(k)));
                &acc + &term
            });
            &q[n + 1] - &(&x * &sum)
        }
        Corollary::C33 => {
            let sum = (0..=n).fold(Poly::zero(), |acc, k| {
                &acc + &q[n - k].scale(&(Rational::binomial(n, k) * &triple.a[k]))
            });
            &q[n + 1] - &(&x * &sum)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| Rational::from_int(c)).collect()
    }

    fn monomial_pair(order: usize) -> ShefferPair {
        ShefferPair::from_series(Series::one(order), Series::variable(order)).unwrap()
    }

    fn exp_shift_pair(order: usize) -> ShefferPair {
        ShefferPair::from_series(Series::exponential(order), Series::variable(order)).unwrap()
    }

    fn laguerre0(order: usize) -> ShefferPair {
        let l = Series::from_fn(order, |_| Rational::one());
        let h = Series::from_fn(order, |k| if k == 0 { Rational::zero() } else { q("-1") });
        ShefferPair::from_series(l, h).unwrap()
    }

    #[test]
    fn pair_validation() {
        assert!(ShefferPair::from_series(Series::zero(3), Series::variable(3)).is_err());
        assert!(ShefferPair::from_series(Series::one(3), Series::one(3)).is_err());
        assert!(ShefferPair::from_series(Series::one(3), Series::variable(4)).is_err());
        assert!(monomial_pair(3).is_associated());
        assert!(monomial_pair(3).is_appell());
        assert!(!exp_shift_pair(3).is_associated());
    }

    #[test]
    fn sequences_of_monomial_pair() {
        let expected: Vec<Poly> = (0..=4).map(|k| Poly::x().pow(k)).collect();
        let p = monomial_pair(4);
        assert_eq!(sheffer_appell_sequence(&p, 4).unwrap().polys, expected);
        assert_eq!(sheffer_sequence(&p, 4).unwrap().polys, expected);
        assert_eq!(appell_sequence(p.l(), 4).unwrap().polys, expected);
        assert_eq!(sheffer_sequence(&p, 4).unwrap().kind, SequenceKind::Associated);
        assert!(sheffer_appell_sequence(&p, 5).is_err());
    }

    #[test]
    fn shifted_sequences() {
        let p = exp_shift_pair(6);
        let sa = sheffer_appell_sequence(&p, 6).unwrap();
        let shift2 = Poly::from_ints(&[-2, 1]);
        for (k, poly) in sa.polys.iter().enumerate() {
            assert_eq!(poly, &shift2.pow(k as u32));
        }
        let ap = appell_sequence(p.l(), 2).unwrap();
        assert_eq!(ap.polys[2], Poly::from_ints(&[1, -2, 1]));
    }

    #[test]
    fn laguerre_first_members() {
        let p = laguerre0(4);
        assert_eq!(sheffer_appell_sequence(&p, 4).unwrap().polys[1], Poly::from_ints(&[0, -1]));
        assert_eq!(sheffer_sequence(&p, 4).unwrap().polys[1], Poly::from_ints(&[1, -1]));
    }

    #[test]
    fn convolution_examples() {
        let s = sheffer_sequence(&monomial_pair(5), 5).unwrap();
        let mut delta = vec![Rational::zero(); 6];
        delta[0] = Rational::one();
        assert_eq!(discrete_convolution(&delta, &s).unwrap().polys, s.polys);

        let kernel = Series::exponential(5).reciprocal().unwrap().derivative_vector();
        assert_eq!(kernel, ints(&[1, -1, 1, -1, 1, -1]));
        let shifted = discrete_convolution(&kernel, &s).unwrap();
        for (k, poly) in shifted.polys.iter().enumerate() {
            assert_eq!(poly, &Poly::from_ints(&[-1, 1]).pow(k as u32));
        }
        assert!(discrete_convolution(&kernel[..3], &s).is_err());
    }

    #[test]
    fn triples_for_monomial_and_shift() {
        let p = monomial_pair(5);
        let t = coeffs_t21(&p, 4).unwrap();
        assert_eq!(t.a, ints(&[0, 1, 0, 0, 0]));
        assert!(t.b.iter().chain(&t.c).all(Rational::is_zero));
        for th in [Theorem::T31, Theorem::T32, Theorem::T33] {
            let t = coeff_triple(&p, th, 4).unwrap();
            assert_eq!(t.a, ints(&[1, 0, 0, 0, 0]), "{th}");
            assert!(t.b.iter().chain(&t.c).all(Rational::is_zero));
        }

        let p = exp_shift_pair(5);
        let t = coeffs_t21(&p, 4).unwrap();
        assert_eq!(t.a, ints(&[0, 1, 0, 0, 0]));
        assert_eq!(t.b, ints(&[0, -1, 0, 0, 0]));
        assert_eq!(t.c, ints(&[0, -1, 0, 0, 0]));
        let t = coeffs_t33(&p, 4).unwrap();
        assert_eq!(t.a, ints(&[1, 0, 0, 0, 0]));
        assert_eq!(t.b, ints(&[-1, 0, 0, 0, 0]));
        assert_eq!(t.c, ints(&[-1, 0, 0, 0, 0]));
    }

    #[test]
    fn triple_needs_extra_order() {
        assert!(coeffs_t31(&monomial_pair(4), 4).is_err());
        assert!(coeffs_t31(&monomial_pair(5), 4).is_ok());
    }

    #[test]
    fn residuals_vanish_on_simple_pairs() {
        for pair in [monomial_pair(14), exp_shift_pair(14), laguerre0(14)] {
            for n in 0..=12 {
                for th in Theorem::ALL {
                    assert!(theorem_residual(&pair, th, n).unwrap().is_zero(), "{th} n={n}");
                }
            }
        }
    }

    #[test]
    fn residual_detects_a_wrong_sequence() {
        let pair = exp_shift_pair(6);
        let mut seq = sheffer_appell_sequence(&pair, 5).unwrap().polys;
        seq[3] = &seq[3] + &Poly::one();
        let triple = coeffs_t31(&pair, 3).unwrap();
        assert!(!residual_from(&seq, &triple, 3).unwrap().is_zero());
        assert!(residual_from(&seq[..3], &triple, 3).is_err());
    }

    #[test]
    fn lemma_examples() {
        assert!(lemma_check(&monomial_pair(3), 3).unwrap());
        assert_eq!(lemma_rhs(&monomial_pair(3), 3).unwrap(), pascal_exy(3).into_matrix());
        assert!(lemma_check(&exp_shift_pair(4), 4).unwrap());
        assert!(lemma_check(&laguerre0(4), 4).unwrap());
    }

    #[test]
    fn corollaries() {
        let p = monomial_pair(8);
        for c in Corollary::ALL {
            assert!(corollary_residual(&p, 6, c).unwrap().is_zero());
        }
        assert_eq!(
            corollary_residual(&exp_shift_pair(8), 3, Corollary::C21),
            Err(Error::NotAssociated)
        );
    }

    #[test]
    fn theorem_names_round_trip() {
        for th in Theorem::ALL {
            assert_eq!(th.to_string().parse::<Theorem>().unwrap(), th);
            assert_eq!(serde_json::to_string(&th).unwrap(), format!("\"{th}\""));
        }
        assert!("4.1".parse::<Theorem>().is_err());
    }
}

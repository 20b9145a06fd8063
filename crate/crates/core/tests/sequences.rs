//! Catalog-wide invariants of the generated sequences and classical
//! closed forms used as independent cross-checks.

use sheffer_core::catalog::{grid_instances, make_pair, Params};
use sheffer_core::engine::{
    appell_sequence, discrete_convolution, sheffer_appell_sequence, sheffer_sequence, theorem_residual,
    Theorem,
};
use sheffer_core::{InvertibleSeries, Poly, Rational, TruncatedSeries};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

/// `n! L_n(x)` from `L_n(x) = sum_j (-1)^j C(n, n-j) x^j / j!`.
fn laguerre_closed_form(n: usize) -> Poly {
    let coeffs = (0..=n)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            Rational::from_int(sign) * Rational::binomial(n, n - j) * Rational::factorial(n)
                / Rational::factorial(j)
        })
        .collect();
    Poly::new(coeffs)
}

#[test]
fn degrees_and_leading_coefficients() {
    for (name, params) in grid_instances() {
        let pair = make_pair(name, &params, 10).unwrap();
        let h1 = pair.h().linear_coeff().clone();
        let l0 = pair.l().series().coeff(0).clone();
        let sa = sheffer_appell_sequence(&pair, 10).unwrap();
        let sh = sheffer_sequence(&pair, 10).unwrap();
        assert!(sa.degrees_exact() && sh.degrees_exact(), "{name}");
        for n in 0..=10 {
            let base = h1.recip().unwrap().pow(n as u32);
            assert_eq!(sa.polys[n].leading_coeff().unwrap(), &(&base / &(&l0 * &l0)));
            assert_eq!(sh.polys[n].leading_coeff().unwrap(), &(&base / &l0));
        }
    }
}

#[test]
fn appell_reduction_and_derivative_property() {
    for name in ["hermite", "bernoulli", "euler", "exp-shift", "monomial"] {
        let pair = make_pair(name, &Params::new(), 10).unwrap();
        let l = pair.l().series();
        let l_squared = InvertibleSeries::new(l.mul(l).unwrap()).unwrap();
        assert_eq!(
            sheffer_appell_sequence(&pair, 10).unwrap().polys,
            appell_sequence(&l_squared, 10).unwrap().polys
        );
        let sh = sheffer_sequence(&pair, 10).unwrap();
        assert_eq!(sh.polys, appell_sequence(pair.l(), 10).unwrap().polys);
        for n in 1..=10 {
            assert_eq!(sh.polys[n].derivative(1), sh.polys[n - 1].scale(&Rational::from_int(n as i64)));
        }
    }
}

#[test]
fn convolution_reproduces_sheffer_appell() {
    for (name, params) in grid_instances() {
        let pair = make_pair(name, &params, 10).unwrap();
        let kernel = pair.l().reciprocal().derivative_vector();
        let conv = discrete_convolution(&kernel, &sheffer_sequence(&pair, 10).unwrap()).unwrap();
        assert_eq!(conv.polys, sheffer_appell_sequence(&pair, 10).unwrap().polys, "{name}");
    }
}

#[test]
fn laguerre_matches_closed_form() {
    let pair = make_pair("laguerre", &sheffer_core::catalog::params(&[("lambda", q("0"))]), 10).unwrap();
    let seq = sheffer_sequence(&pair, 10).unwrap();
    for n in 0..=10 {
        assert_eq!(seq.polys[n], laguerre_closed_form(n), "n = {n}");
    }
    assert_eq!(seq.polys[1], Poly::from_ints(&[1, -1]));
}

#[test]
fn hermite_three_term() {
    let pair = make_pair("hermite", &Params::new(), 11).unwrap();
    let he = sheffer_sequence(&pair, 11).unwrap().polys;
    assert_eq!(he[2], Poly::from_ints(&[-1, 0, 1]));
    for n in 1..=10 {
        let rhs = &(&Poly::x() * &he[n]) - &he[n - 1].scale(&Rational::from_int(n as i64));
        assert_eq!(he[n + 1], rhs);
    }
}

#[test]
fn bernoulli_numbers() {
    let pair = make_pair("bernoulli", &Params::new(), 4).unwrap();
    let b = appell_sequence(pair.l(), 4).unwrap().polys;
    assert_eq!(b[1], Poly::new(vec![q("-1/2"), q("1")]));
    let at_zero: Vec<Rational> = b.iter().map(|p| p.eval(&Rational::zero())).collect();
    assert_eq!(at_zero[..3], [q("1"), q("-1/2"), q("1/6")]);
    assert_eq!(at_zero[4], q("-1/30"));
}

#[test]
fn appell_examples() {
    let exp = InvertibleSeries::new(TruncatedSeries::exponential(3)).unwrap();
    assert_eq!(appell_sequence(&exp, 2).unwrap().polys[2], Poly::from_ints(&[1, -2, 1]));
}

#[test]
fn named_residual_examples() {
    let ml1 = make_pair("miller-lee", &sheffer_core::catalog::params(&[("m", q("1"))]), 9).unwrap();
    assert!(theorem_residual(&ml1, Theorem::T31, 6).unwrap().is_zero());
    let lag1 = make_pair("laguerre", &sheffer_core::catalog::params(&[("lambda", q("1"))]), 9).unwrap();
    assert!(theorem_residual(&lag1, Theorem::T32, 6).unwrap().is_zero());
    let lag2 = make_pair("laguerre", &sheffer_core::catalog::params(&[("lambda", q("2"))]), 10).unwrap();
    assert!(theorem_residual(&lag2, Theorem::T21, 8).unwrap().is_zero());
    let herm = make_pair("hermite", &Params::new(), 9).unwrap();
    assert!(theorem_residual(&herm, Theorem::T33, 6).unwrap().is_zero());
}

#[test]
fn laguerre_triples_from_series() {
    use sheffer_core::engine::{coeffs_t21, coeffs_t31, coeffs_t33};
    let ints = |v: &[i64]| v.iter().map(|&c| Rational::from_int(c)).collect::<Vec<_>>();
    let lambda = q("3");
    let pair = make_pair("laguerre", &sheffer_core::catalog::params(&[("lambda", lambda.clone())]), 6).unwrap();
    assert_eq!(coeffs_t21(&pair, 4).unwrap().a, ints(&[0, 1, -2, 0, 0]));
    let t = coeffs_t31(&pair, 4).unwrap();
    assert_eq!(t.a, ints(&[-1, 2, -2, 0, 0]));
    assert_eq!(t.b, ints(&[-4, 4, 0, 0, 0]));
    assert_eq!(t.c, ints(&[4, -4, 0, 0, 0]));
    // 1/h'(h^{-1}(y)) by composing then expanding: h' = -1/(y-1)^2, h^{-1} = h
    let h = pair.h().clone();
    let dh_recip = TruncatedSeries::from_ints(5, &[-1, 2, -1]);
    let oracle = dh_recip.compose(&h.truncate(5).unwrap()).unwrap().truncate(4).unwrap();
    assert_eq!(coeffs_t33(&pair, 4).unwrap().a, oracle.derivative_vector());
}

#[test]
fn miller_lee_triples() {
    use sheffer_core::engine::coeffs_t32;
    let m = q("2");
    let pair = make_pair("miller-lee", &sheffer_core::catalog::params(&[("m", m.clone())]), 6).unwrap();
    let t = coeffs_t32(&pair, 4).unwrap();
    assert_eq!(t.a, vec![q("1"), q("0"), q("0"), q("0"), q("0")]);
    for k in 0..=4 {
        let expect = Rational::from_int(3) * Rational::factorial(k);
        assert_eq!(t.b[k], expect);
        assert_eq!(t.c[k], expect);
    }
}

#[test]
fn truncation_stability() {
    for (name, params) in grid_instances() {
        let narrow = make_pair(name, &params, 8).unwrap();
        let wide = make_pair(name, &params, 13).unwrap();
        let a = sheffer_appell_sequence(&narrow, 8).unwrap();
        let b = sheffer_appell_sequence(&wide, 13).unwrap();
        assert_eq!(
            serde_json::to_string(&a.polys).unwrap(),
            serde_json::to_string(&b.polys[..=8]).unwrap()
        );
    }
}

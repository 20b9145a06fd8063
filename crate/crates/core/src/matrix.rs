//! Pascal functional and Wronskian matrices evaluated at `y = 0`.
//!
//! `P_n[f]` has entry `(i, j) = C(i, j) f^{(i-j)}(0)` for `i >= j`; the
//! Wronskian `W_n[f_1, ..., f_m]` stacks the derivative vectors of the
//! `f_k` as columns. `Ω_n = diag(0!, 1!, ..., n!)`.

use std::ops::Index;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, Ring};
use crate::series::{DeltaSeries, TruncatedSeries};

/// Dense row-major matrix. Serializes as nested arrays, row by row.
#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(transparent)]
pub struct Matrix<R> {
    rows: Vec<Vec<R>>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let width = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == width), "ragged matrix");
        Matrix { rows }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        Matrix {
            rows: (0..rows).map(|i| (0..cols).map(|j| f(i, j)).collect()).collect(),
        }
    }

    /// Single column.
    pub fn column(entries: Vec<R>) -> Self {
        Matrix {
            rows: entries.into_iter().map(|e| vec![e]).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn diagonal(entries: Vec<R>) -> Self {
        let n = entries.len();
        let mut m = Self::from_fn(n, n, |_, _| R::zero());
        for (i, e) in entries.into_iter().enumerate() {
            m.rows[i][i] = e;
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().skip(i + 1).all(R::is_zero))
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ncols() != other.nrows() {
            return Err(Error::Contract(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        Ok(Self::from_fn(self.nrows(), other.ncols(), |i, j| {
            self.rows[i]
                .iter()
                .zip(&other.rows)
                .filter(|(a, _)| !a.is_zero())
                .fold(R::zero(), |acc, (a, row)| acc.plus(&a.times(&row[j])))
        }))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.nrows() != other.nrows() || self.ncols() != other.ncols() {
            return Err(Error::Contract("matrix shape mismatch".into()));
        }
        Ok(Self::from_fn(self.nrows(), self.ncols(), |i, j| {
            self.rows[i][j].plus(&other.rows[i][j])
        }))
    }

    pub fn scale(&self, by: &Rational) -> Self {
        Self::from_fn(self.nrows(), self.ncols(), |i, j| self.rows[i][j].scaled(by))
    }
}

impl Matrix<Rational> {
    pub fn lift<R: Ring>(&self) -> Matrix<R> {
        Matrix::from_fn(self.nrows(), self.ncols(), |i, j| {
            R::from_rational(self.rows[i][j].clone())
        })
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.rows[i][j]
    }
}

/// Square matrix with nothing above the diagonal.
#[derive(Clone, PartialEq, Debug, Serialize)]
#[serde(transparent)]
pub struct LowerTriangularMatrix<R>(Matrix<R>);

impl<R: Ring> LowerTriangularMatrix<R> {
    pub fn new(m: Matrix<R>) -> Result<Self> {
        if m.nrows() != m.ncols() || !m.is_lower_triangular() {
            return Err(Error::Contract("matrix is not square lower triangular".into()));
        }
        Ok(LowerTriangularMatrix(m))
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<R> {
        self.0
    }

    pub fn mul(&self, other: &Self) -> Self {
        LowerTriangularMatrix(self.0.mul(&other.0).expect("equal dimensions"))
    }
}

fn require_order<R: Ring>(f: &TruncatedSeries<R>, n: usize) -> Result<()> {
    if f.order() < n {
        return Err(Error::InsufficientOrder {
            have: f.order(),
            need: n,
        });
    }
    Ok(())
}

/// `P_n[f]|_{y=0}`.
pub fn pascal_matrix<R: Ring>(f: &TruncatedSeries<R>, n: usize) -> Result<LowerTriangularMatrix<R>> {
    require_order(f, n)?;
    let dv = f.derivative_vector();
    Ok(LowerTriangularMatrix(Matrix::from_fn(n + 1, n + 1, |i, j| {
        if i >= j {
            dv[i - j].scaled(&Rational::binomial(i, j))
        } else {
            R::zero()
        }
    })))
}

/// `W_n[f]|_{y=0}` as an `(n+1) x 1` column.
pub fn wronskian_vector<R: Ring>(f: &TruncatedSeries<R>, n: usize) -> Result<Matrix<R>> {
    require_order(f, n)?;
    let mut dv = f.derivative_vector();
    dv.truncate(n + 1);
    Ok(Matrix::column(dv))
}

/// `W_n[f_1, ..., f_m]|_{y=0}`.
pub fn wronskian_matrix<R: Ring>(fs: &[TruncatedSeries<R>], n: usize) -> Result<Matrix<R>> {
    let cols = fs
        .iter()
        .map(|f| wronskian_vector(f, n).map(|c| c.col(0)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_fn(n + 1, fs.len(), |i, j| cols[j][i].clone()))
}

/// `W_n[1, h, h^2, ..., h^n]|_{y=0}`; lower triangular since `h^j = O(y^j)`.
pub fn wronskian_powers_matrix(h: &DeltaSeries, n: usize) -> Result<LowerTriangularMatrix<Rational>> {
    require_order(h.series(), n)?;
    let mut powers = Vec::with_capacity(n + 1);
    let mut p = TruncatedSeries::one(h.order());
    for _ in 0..=n {
        powers.push(p.clone());
        p = p.mul(h.series())?;
    }
    LowerTriangularMatrix::new(wronskian_matrix(&powers, n)?)
}

/// `Ω_n = diag(0!, ..., n!)`.
pub fn omega(n: usize) -> Matrix<Rational> {
    Matrix::diagonal((0..=n).map(Rational::factorial).collect())
}

/// `Ω_n^{-1}`.
pub fn omega_inverse(n: usize) -> Matrix<Rational> {
    Matrix::diagonal(
        (0..=n)
            .map(|k| Rational::factorial(k).recip().expect("k! > 0"))
            .collect(),
    )
}

/// `P_n[e^{xy}]|_{y=0}`, entries `C(i, j) x^{i-j}`.
pub fn pascal_exy(n: usize) -> LowerTriangularMatrix<Poly> {
    let exy = TruncatedSeries::<Rational>::variable(n)
        .times_x()
        .exp()
        .expect("y*x has no constant term");
    pascal_matrix(&exy, n).expect("order n")
}

/// Multiplicativity of Pascal matrices: `P[fg] = P[f] P[g] = P[g] P[f]`.
pub fn check_property_ii(
    f: &TruncatedSeries<Rational>,
    g: &TruncatedSeries<Rational>,
    n: usize,
) -> Result<bool> {
    let (f, g) = (f.truncate(n)?, g.truncate(n)?);
    let pf = pascal_matrix(&f, n)?;
    let pg = pascal_matrix(&g, n)?;
    let pfg = pascal_matrix(&f.mul(&g)?, n)?;
    Ok(pfg == pf.mul(&pg) && pfg == pg.mul(&pf))
}

/// `W[fg] = P[f] W[g] = P[g] W[f]`.
pub fn check_property_iii<R: Ring>(
    f: &TruncatedSeries<R>,
    g: &TruncatedSeries<R>,
    n: usize,
) -> Result<bool> {
    let (f, g) = (f.truncate(n)?, g.truncate(n)?);
    let wfg = wronskian_vector(&f.mul(&g)?, n)?;
    let left = pascal_matrix(&f, n)?.matrix().mul(&wronskian_vector(&g, n)?)?;
    let right = pascal_matrix(&g, n)?.matrix().mul(&wronskian_vector(&f, n)?)?;
    Ok(wfg == left && wfg == right)
}

/// `W[l(h(y))] = W[1, h, ..., h^n] Ω^{-1} W[l]`.
pub fn check_property_iv(l: &TruncatedSeries<Rational>, h: &DeltaSeries, n: usize) -> Result<bool> {
    let m = n.max(1);
    let (l, h) = (l.truncate(m)?, h.truncate(m)?);
    let lhs = wronskian_vector(&l.compose(&h)?, n)?;
    let rhs = wronskian_powers_matrix(&h, n)?
        .matrix()
        .mul(&omega_inverse(n))?
        .mul(&wronskian_vector(&l, n)?)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = TruncatedSeries<Rational>;

    fn int_matrix(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
                .collect(),
        )
    }

    fn geometric(order: usize) -> S {
        S::from_fn(order, |_| Rational::one())
    }

    fn laguerre_h(order: usize) -> DeltaSeries {
        DeltaSeries::new(S::from_fn(order, |k| {
            if k == 0 { Rational::zero() } else { Rational::from_int(-1) }
        }))
        .unwrap()
    }

    #[test]
    fn pascal_examples() {
        let p = pascal_matrix(&S::exponential(2), 2).unwrap();
        assert_eq!(p.matrix(), &int_matrix(&[&[1, 0, 0], &[1, 1, 0], &[1, 2, 1]]));
        assert_eq!(pascal_matrix(&S::one(2), 2).unwrap().matrix(), &Matrix::identity(3));
        // derivatives of 1/(1-y) at 0 are k!, entry C(i,j)(i-j)!
        let oracle = Matrix::from_fn(3, 3, |i, j| {
            if i >= j { Rational::binomial(i, j) * Rational::factorial(i - j) } else { Rational::zero() }
        });
        assert_eq!(oracle, int_matrix(&[&[1, 0, 0], &[1, 1, 0], &[2, 2, 1]]));
        assert_eq!(pascal_matrix(&geometric(2), 2).unwrap().matrix(), &oracle);
        assert!(pascal_matrix(&geometric(1), 2).is_err());
    }

    #[test]
    fn wronskian_examples() {
        let exy = S::variable(2).times_x().exp().unwrap();
        let w = wronskian_vector(&exy, 2).unwrap();
        assert_eq!(w.col(0), vec![Poly::one(), Poly::x(), Poly::x().pow(2)]);
        assert_eq!(wronskian_vector(&S::one(2), 2).unwrap(), int_matrix(&[&[1], &[0], &[0]]));
        assert_eq!(
            wronskian_vector(&S::from_ints(2, &[0, 0, 1]), 2).unwrap(),
            int_matrix(&[&[0], &[0], &[2]])
        );
    }

    #[test]
    fn powers_matrix_examples() {
        let w = wronskian_powers_matrix(&DeltaSeries::identity(4), 4).unwrap();
        assert_eq!(w.matrix(), &omega(4));

        // (y/(y-1))^j = (-y - y^2 - ...)^j
        let w = wronskian_powers_matrix(&laguerre_h(2), 2).unwrap();
        assert_eq!(w.matrix(), &int_matrix(&[&[1, 0, 0], &[0, -1, 0], &[0, -2, 2]]));

        let h = DeltaSeries::new(S::from_ints(3, &[0, 7, 2])).unwrap();
        assert_eq!(wronskian_powers_matrix(&h, 3).unwrap().matrix()[(1, 1)], Rational::from_int(7));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(2), int_matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]));
        assert_eq!(
            omega_inverse(3),
            Matrix::diagonal(vec![
                Rational::one(),
                Rational::one(),
                Rational::new(1, 2),
                Rational::new(1, 6)
            ])
        );
        assert_eq!(omega(5).mul(&omega_inverse(5)).unwrap(), Matrix::identity(6));
    }

    #[test]
    fn property_examples() {
        assert!(check_property_ii(&S::one(3), &S::one(3), 3).unwrap());
        assert!(check_property_ii(&S::exponential(6), &geometric(6), 6).unwrap());

        let g = geometric(4).lift::<Poly>();
        assert!(check_property_iii(&TruncatedSeries::one(4), &g, 4).unwrap());
        let ey = S::exponential(5).lift::<Poly>();
        let exy = S::variable(5).times_x().exp().unwrap();
        assert!(check_property_iii(&ey, &exy, 5).unwrap());
        // both sides are the derivative vector of e^{(x+1)y}
        let w = wronskian_vector(&ey.mul(&exy).unwrap(), 5).unwrap();
        let x1 = Poly::from_ints(&[1, 1]);
        assert_eq!(w.col(0), (0..=5).map(|k| x1.pow(k)).collect::<Vec<_>>());

        let l = S::from_ints(5, &[2, -1, 3]);
        assert!(check_property_iv(&l, &DeltaSeries::identity(5), 5).unwrap());
        assert!(check_property_iv(&geometric(5), &laguerre_h(5), 5).unwrap());
        assert_eq!(
            geometric(5).compose(&laguerre_h(5)).unwrap(),
            S::from_ints(5, &[1, -1])
        );
    }

    #[test]
    fn pascal_exy_entries() {
        let p = pascal_exy(3);
        assert_eq!(p.matrix()[(3, 1)], Poly::monomial(Rational::from_int(3), 2));
        assert_eq!(p.matrix()[(2, 2)], Poly::one());
        assert!(p.matrix()[(1, 2)].is_zero());
    }

    #[test]
    fn serializes_row_major() {
        let m = int_matrix(&[&[1, 0], &[2, 3]]);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"[["1","0"],["2","3"]]"#);
    }
}

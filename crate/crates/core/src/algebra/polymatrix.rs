//! Square matrices over a multivariate polynomial ring.

use num_traits::One;

use super::{MultiPolynomial, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    nvars: usize,
    entries: Vec<MultiPolynomial>,
}

impl PolyMatrix {
    pub fn from_fn(
        dim: usize,
        nvars: usize,
        mut f: impl FnMut(usize, usize) -> MultiPolynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let e = f(i, j);
                assert_eq!(e.nvars(), nvars, "entry ({i},{j}) lives in another ring");
                entries.push(e);
            }
        }
        Self {
            dim,
            nvars,
            entries,
        }
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<MultiPolynomial>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(
                "matrix must be square and nonempty".into(),
            ));
        }
        if let Some(bad) = rows.iter().flatten().find(|p| p.nvars() != nvars) {
            return Err(Error::VarCountMismatch {
                left: nvars,
                right: bad.nvars(),
            });
        }
        Ok(Self {
            dim,
            nvars,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zero(dim: usize, nvars: usize) -> Self {
        Self::from_fn(dim, nvars, |_, _| MultiPolynomial::zero(nvars))
    }

    pub fn identity(dim: usize, nvars: usize) -> Self {
        Self::from_fn(dim, nvars, |i, j| {
            if i == j {
                MultiPolynomial::one(nvars)
            } else {
                MultiPolynomial::zero(nvars)
            }
        })
    }

    /// Constant matrix from rational entries.
    pub fn from_rational(m: &super::RationalMatrix, nvars: usize) -> Self {
        assert_eq!(m.rows(), m.cols());
        Self::from_fn(m.rows(), nvars, |i, j| {
            MultiPolynomial::constant(nvars, m.get(i, j).clone())
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPolynomial {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MultiPolynomial) {
        assert_eq!(v.nvars(), self.nvars);
        self.entries[i * self.dim + j] = v;
    }

    pub fn map(&self, f: impl Fn(&MultiPolynomial) -> MultiPolynomial) -> Self {
        let entries: Vec<_> = self.entries.iter().map(f).collect();
        let nvars = entries.first().map(|e| e.nvars()).unwrap_or(self.nvars);
        Self {
            dim: self.dim,
            nvars,
            entries,
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "{} vs {}",
                self.dim, other.dim
            )));
        }
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.dim;
        let mut out = Self::zero(n, self.nvars);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * n + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            dim: self.dim,
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            dim: self.dim,
            nvars: self.nvars,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &MultiPolynomial) -> Self {
        self.map(|e| e * c)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, self.nvars, |i, j| self.get(j, i).clone())
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> MultiPolynomial {
        bareiss_det(self.dim, self.nvars, self.entries.clone())
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Vec<MultiPolynomial> {
        let mut out = Vec::with_capacity((self.dim - 1) * (self.dim - 1));
        for i in (0..self.dim).filter(|&i| i != skip_row) {
            for j in (0..self.dim).filter(|&j| j != skip_col) {
                out.push(self.get(i, j).clone());
            }
        }
        out
    }

    /// Classical adjoint: `adj(g) * g = det(g) * I`.
    pub fn adjugate(&self) -> Self {
        let n = self.dim;
        if n == 1 {
            return Self::identity(1, self.nvars);
        }
        let mut out = Self::zero(n, self.nvars);
        for i in 0..n {
            for j in 0..n {
                let d = bareiss_det(n - 1, self.nvars, self.minor(j, i));
                let v = if (i + j) % 2 == 0 { d } else { -&d };
                out.set(i, j, v);
            }
        }
        out
    }

    /// Inverse with polynomial entries; fails unless the determinant divides
    /// every entry of the adjugate.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        divide_entries(&self.adjugate(), &det)
    }

    /// `g x g^{-1}`, computed as `g x adj(g) / det(g)` with exact division.
    pub fn conjugate(g: &Self, x: &Self) -> Result<Self> {
        g.check_compatible(x)?;
        let det = g.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let numer = g.mul(x)?.mul(&g.adjugate())?;
        divide_entries(&numer, &det)
    }

    /// Characteristic polynomial `det(x I - M)` in a ring with one extra
    /// variable `x` appended after the existing ones.
    pub fn char_poly(&self) -> MultiPolynomial {
        let nv = self.nvars + 1;
        let x = MultiPolynomial::var(nv, self.nvars);
        let entries = (0..self.dim * self.dim)
            .map(|idx| {
                let (i, j) = (idx / self.dim, idx % self.dim);
                let e = self.entries[idx].extend_vars(nv);
                if i == j {
                    &x - &e
                } else {
                    -&e
                }
            })
            .collect();
        bareiss_det(self.dim, nv, entries)
    }

    /// Characteristic polynomial by the Faddeev-LeVerrier recursion, returned
    /// as coefficients `[c_1, .., c_n]` of `x^n + c_1 x^{n-1} + .. + c_n`.
    /// Independent of Bareiss; only divides by integers.
    pub fn char_poly_faddeev(&self) -> Vec<MultiPolynomial> {
        let n = self.dim;
        let mut coeffs = Vec::with_capacity(n);
        let mut m = Self::identity(n, self.nvars);
        let ident = Self::identity(n, self.nvars);
        let mut c_prev = MultiPolynomial::one(self.nvars);
        for k in 1..=n {
            if k > 1 {
                m = self.mul(&m).unwrap().add(&ident.scale(&c_prev)).unwrap();
            }
            let am = self.mul(&m).unwrap();
            let mut trace = MultiPolynomial::zero(self.nvars);
            for i in 0..n {
                trace = &trace + am.get(i, i);
            }
            let c = trace.scale(&-Rational::new(1.into(), (k as i64).into()));
            coeffs.push(c.clone());
            c_prev = c;
        }
        coeffs
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim, self.nvars)
    }

    /// Every entry evaluated at a rational point.
    pub fn eval(&self, point: &[Rational]) -> super::RationalMatrix {
        super::RationalMatrix::from_fn(self.dim, self.dim, |i, j| self.get(i, j).eval(point))
    }

    /// Row-major grid of entries printed with the given variable names.
    pub fn to_strings(&self, names: &[&str]) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.get(i, j).to_string_with(names))
                    .collect()
            })
            .collect()
    }
}

fn divide_entries(m: &PolyMatrix, d: &MultiPolynomial) -> Result<PolyMatrix> {
    let mut entries = Vec::with_capacity(m.entries.len());
    for e in &m.entries {
        match e.exact_div(d)? {
            Some(q) => entries.push(q),
            None => return Err(Error::NonPolynomialResult),
        }
    }
    Ok(PolyMatrix {
        dim: m.dim,
        nvars: m.nvars,
        entries,
    })
}

/// Bareiss elimination on a row-major `n x n` array; every division is exact.
pub(crate) fn bareiss_det(n: usize, nvars: usize, mut a: Vec<MultiPolynomial>) -> MultiPolynomial {
    if n == 0 {
        return MultiPolynomial::one(nvars);
    }
    let mut sign = Rational::one();
    let mut prev = MultiPolynomial::one(nvars);
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                return MultiPolynomial::zero(nvars);
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let aik = a[i * n + k].clone();
            for j in k + 1..n {
                let num = &(&pivot * &a[i * n + j]) - &(&aik * &a[k * n + j]);
                a[i * n + j] = if prev.as_constant().is_some_and(|c| c.is_one()) {
                    num
                } else {
                    num.exact_div(&prev)
                        .expect("same ring")
                        .expect("Bareiss division is exact")
                };
            }
            a[i * n + k] = MultiPolynomial::zero(nvars);
        }
        prev = pivot;
    }
    a[n * n - 1].scale(&sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(nv: usize, c: i64) -> MultiPolynomial {
        MultiPolynomial::constant(nv, Rational::from_integer(c.into()))
    }

    #[test]
    fn bareiss_matches_cofactor_expansion_3x3() {
        let t = MultiPolynomial::var(1, 0);
        let m = PolyMatrix::from_rows(
            1,
            vec![
                vec![t.clone(), p(1, 1), p(1, 0)],
                vec![p(1, 2), t.pow(2), p(1, 1)],
                vec![p(1, 0), p(1, 3), t.clone()],
            ],
        )
        .unwrap();
        // t*(t^3 - 3) - 1*(2t - 0) + 0
        let expected = &(&t.pow(4) - &t.scale(&Rational::from_integer(3.into())))
            - &t.scale(&Rational::from_integer(2.into()));
        assert_eq!(m.det(), expected);
    }

    #[test]
    fn zero_pivot_requires_row_swap() {
        let m =
            PolyMatrix::from_rows(0, vec![vec![p(0, 0), p(0, 1)], vec![p(0, 1), p(0, 0)]]).unwrap();
        assert_eq!(m.det(), p(0, -1));
    }

    #[test]
    fn conjugation_of_identity_is_identity() {
        let t = MultiPolynomial::var(1, 0);
        let g = PolyMatrix::from_rows(1, vec![vec![p(1, 1), t.clone()], vec![p(1, 0), p(1, 1)]])
            .unwrap();
        let i = PolyMatrix::identity(2, 1);
        assert!(PolyMatrix::conjugate(&g, &i).unwrap().is_identity());
    }

    #[test]
    fn singular_and_non_polynomial_conjugation() {
        let t = MultiPolynomial::var(1, 0);
        let sing = PolyMatrix::from_rows(
            1,
            vec![vec![t.clone(), t.clone()], vec![t.clone(), t.clone()]],
        )
        .unwrap();
        let x = PolyMatrix::identity(2, 1);
        assert_eq!(PolyMatrix::conjugate(&sing, &x), Err(Error::SingularMatrix));

        let g = PolyMatrix::from_rows(1, vec![vec![t.clone(), p(1, 0)], vec![p(1, 0), p(1, 1)]])
            .unwrap();
        let x =
            PolyMatrix::from_rows(1, vec![vec![p(1, 0), p(1, 1)], vec![p(1, 0), p(1, 0)]]).unwrap();
        // diag(t,1) E12 diag(1/t,1) = t E12 is polynomial; the other way is not
        assert!(PolyMatrix::conjugate(&g, &x).is_ok());
        let xt = x.transpose();
        assert_eq!(
            PolyMatrix::conjugate(&g, &xt),
            Err(Error::NonPolynomialResult)
        );
    }

    #[test]
    fn faddeev_agrees_with_bareiss_char_poly() {
        let t = MultiPolynomial::var(2, 0);
        let s = MultiPolynomial::var(2, 1);
        let m = PolyMatrix::from_rows(
            2,
            vec![
                vec![t.clone(), p(2, 1), s.clone()],
                vec![p(2, 0), s.clone(), p(2, 1)],
                vec![&t * &s, p(2, 2), p(2, -1)],
            ],
        )
        .unwrap();
        let cp = m.char_poly();
        let fl = m.char_poly_faddeev();
        let x = MultiPolynomial::var(3, 2);
        let mut rebuilt = x.pow(3);
        for (k, c) in fl.iter().enumerate() {
            rebuilt = &rebuilt + &(&c.extend_vars(3) * &x.pow(2 - k as u32));
        }
        assert_eq!(cp, rebuilt);
    }
}

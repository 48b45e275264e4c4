//! Exact arithmetic: big rationals, Laurent polynomials in `q`, multivariate
//! polynomials, and matrices over both.

mod multipoly;
mod polymatrix;
mod qpoly;
mod ratmatrix;

pub use multipoly::{var_names, Monomial, MultiPolynomial};
pub use polymatrix::PolyMatrix;
pub use qpoly::QPolynomial;
pub use ratmatrix::RationalMatrix;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

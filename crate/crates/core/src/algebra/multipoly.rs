//! Multivariate polynomials with exact rational coefficients.
//!
//! Monomials are ordered graded-lexicographically (total degree first, then
//! lexicographically with the first variable largest). Printing lists terms
//! from the largest monomial down, so the text form is canonical.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPolynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<Rational>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c.into());
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The variable `x_idx` (zero-based).
    pub fn var(nvars: usize, idx: usize) -> Self {
        assert!(
            idx < nvars,
            "variable index {idx} out of range for {nvars} variables"
        );
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(exps), Rational::one());
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    /// Returns the constant when the polynomial has degree zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.total_degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Exact product; fails when the operands live in different rings.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        self.check_vars(divisor)?;
        let (lm, lc) = match divisor.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(Error::Precondition("division by zero polynomial".into())),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Ok(None);
            }
            let qm = m.div(&lm);
            let qc = c / &lc;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    /// Substitutes `x_var -> value`; `value` must live in the same ring.
    pub fn substitute(&self, var: usize, value: &Self) -> Self {
        assert_eq!(self.nvars, value.nvars, "substitution ring mismatch");
        let max = self.degree_in(var).unwrap_or(0);
        let mut powers = vec![Self::one(self.nvars)];
        for k in 1..=max as usize {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let k = rest.0[var] as usize;
            rest.0[var] = 0;
            let mut t = Self::zero(self.nvars);
            t.add_term(rest, c.clone());
            out = &out + &(&t * &powers[k]);
        }
        out
    }

    /// Simultaneous substitution `x_i -> images[i]` into a ring with
    /// `target_nvars` variables.
    pub fn compose(&self, images: &[Self], target_nvars: usize) -> Self {
        assert_eq!(images.len(), self.nvars);
        assert!(images.iter().all(|p| p.nvars == target_nvars));
        let mut out = Self::zero(target_nvars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target_nvars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Re-embeds into a ring with more variables; new variables are appended.
    pub fn extend_vars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.resize(nvars, 0);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Writes `self = sum_k coeff_k * x_var^k` and returns `coeff_k`
    /// (polynomials free of `x_var`) indexed by `k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var).map(|d| d as usize + 1).unwrap_or(0);
        let mut out = vec![Self::zero(self.nvars); deg];
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let k = rest.0[var] as usize;
            rest.0[var] = 0;
            out[k].add_term(rest, c.clone());
        }
        out
    }

    /// Multiplies by `x_var^k`.
    pub fn mul_var_pow(&self, var: usize, k: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.clone();
                    e.0[var] += k;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Remainder of division by `relation`, which must be monic in `var`.
    /// The result has `var`-degree below that of the relation.
    pub fn reduce_monic(&self, var: usize, relation: &Self) -> Result<Self> {
        self.check_vars(relation)?;
        let rel_coeffs = relation.coefficients_in(var);
        let d = rel_coeffs
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::Precondition("relation is zero".into()))?;
        if rel_coeffs[d] != Self::one(self.nvars) {
            return Err(Error::Precondition(format!(
                "relation is not monic in variable {var}"
            )));
        }
        let mut coeffs = self.coefficients_in(var);
        while coeffs.len() > d {
            let top = coeffs.pop().unwrap();
            let shift = coeffs.len() - d;
            for (k, rc) in rel_coeffs.iter().take(d).enumerate() {
                coeffs[k + shift] = &coeffs[k + shift] - &(&top * rc);
            }
        }
        let mut out = Self::zero(self.nvars);
        for (k, c) in coeffs.iter().enumerate() {
            out = &out + &c.mul_var_pow(var, k as u32);
        }
        Ok(out)
    }

    /// Canonical text form using the given variable names.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.nvars, "one name per variable");
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    s.push('-');
                }
            } else if negative {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            for (name, &e) in names.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push((*name).to_string()),
                    e => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(s, "{abs}").unwrap();
            } else {
                if !abs.is_one() {
                    write!(s, "{abs}*").unwrap();
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }

    /// Coefficients are all integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom() == &BigInt::one())
    }
}

impl Add for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn add(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn sub(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn mul(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn neg(self) -> MultiPolynomial {
        self.scale(&-Rational::one())
    }
}

/// Standard names `t1..tn` followed by any extra names.
pub fn var_names(prefix: &str, count: usize, extra: &[&str]) -> Vec<String> {
    (1..=count)
        .map(|i| format!("{prefix}{i}"))
        .chain(extra.iter().map(|s| s.to_string()))
        .collect()
}

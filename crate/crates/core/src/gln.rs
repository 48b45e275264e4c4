//! Irreducible `GL_n` representations through Gelfand-Tsetlin patterns:
//! weight multiplicities, Weyl dimensions, characters and Schur expansion.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Monomial, MultiPolynomial, Rational};
use crate::error::{Error, Result};
use crate::weights::Coweight;

/// A Gelfand-Tsetlin pattern; `rows[0]` is the top row (length `n`), each
/// following row is one shorter and interlaces the one above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GTPattern {
    pub rows: Vec<Vec<i64>>,
}

impl GTPattern {
    pub fn is_valid(&self) -> bool {
        self.rows.windows(2).all(|w| {
            let (up, down) = (&w[0], &w[1]);
            down.len() + 1 == up.len()
                && down
                    .iter()
                    .enumerate()
                    .all(|(i, &d)| up[i] >= d && d >= up[i + 1])
        })
    }

    /// `mu_k = (sum of row of length k) - (sum of row of length k - 1)`.
    pub fn weight(&self) -> Coweight {
        let n = self.rows.len();
        let sums: Vec<i64> = self.rows.iter().map(|r| r.iter().sum()).collect();
        // sums[n - k] is the sum of the row of length k
        Coweight(
            (1..=n)
                .map(|k| sums[n - k] - if k == 1 { 0 } else { sums[n - k + 1] })
                .collect(),
        )
    }
}

/// Depth-first enumeration of the patterns with top row `lam`. When `target`
/// is given, only patterns of that weight are produced (row sums are pruned
/// as soon as a row is complete).
fn enumerate(lam: &[i64], target: Option<&[i64]>, visit: &mut dyn FnMut(&[Vec<i64>])) {
    let n = lam.len();
    if n == 0 {
        visit(&[]);
        return;
    }
    // required row sums, indexed by row length
    let sums: Option<Vec<i64>> = target.map(|mu| {
        mu.iter()
            .scan(0, |acc, &m| {
                *acc += m;
                Some(*acc)
            })
            .collect()
    });
    if let Some(s) = &sums {
        if s[n - 1] != lam.iter().sum::<i64>() {
            return;
        }
    }
    let mut rows: Vec<Vec<i64>> = vec![lam.to_vec()];
    fn fill(
        rows: &mut Vec<Vec<i64>>,
        cur: &mut Vec<i64>,
        sums: &Option<Vec<i64>>,
        visit: &mut dyn FnMut(&[Vec<i64>]),
    ) {
        let up = rows.last().unwrap().clone();
        let len = up.len() - 1;
        if len == 0 {
            visit(rows);
            return;
        }
        let i = cur.len();
        if i == len {
            if let Some(s) = sums {
                if cur.iter().sum::<i64>() != s[len - 1] {
                    return;
                }
            }
            rows.push(std::mem::take(cur));
            fill(rows, &mut Vec::new(), sums, visit);
            *cur = rows.pop().unwrap();
            return;
        }
        let partial: i64 = cur.iter().sum();
        for v in up[i + 1]..=up[i] {
            if let Some(s) = sums {
                // bounds on what the rest of the row can still contribute
                let rest_max: i64 = up[i + 1..len].iter().sum();
                let rest_min: i64 = up[i + 2..=len].iter().sum();
                let target = s[len - 1];
                if partial + v + rest_max < target || partial + v + rest_min > target {
                    continue;
                }
            }
            cur.push(v);
            fill(rows, cur, sums, visit);
            cur.pop();
        }
    }
    fill(&mut rows, &mut Vec::new(), &sums, visit);
}

pub fn gt_patterns(lam: &Coweight) -> Vec<GTPattern> {
    assert!(lam.is_dominant(), "GT patterns need a dominant top row");
    let mut out = Vec::new();
    enumerate(&lam.0, None, &mut |rows| {
        out.push(GTPattern {
            rows: rows.to_vec(),
        })
    });
    out
}

/// `dim V_lam(mu)`: the number of GT patterns with top row `lam` and weight `mu`.
pub fn weight_multiplicity(lam: &Coweight, mu: &Coweight) -> u64 {
    assert!(lam.is_dominant(), "highest weight must be dominant");
    assert_eq!(lam.n(), mu.n(), "rank mismatch");
    if lam.size() != mu.size() {
        return 0;
    }
    let mut count = 0u64;
    enumerate(&lam.0, Some(&mu.0), &mut |_| count += 1);
    count
}

/// Weyl dimension formula `prod_{i<j} (l_i - l_j + j - i) / (j - i)`.
pub fn weyl_dimension(lam: &Coweight) -> BigInt {
    assert!(lam.is_dominant(), "highest weight must be dominant");
    let n = lam.n();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from(lam.0[i] - lam.0[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    num / den
}

/// A symmetric Laurent polynomial in `x_1..x_n` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CharacterPoly {
    pub n: usize,
    pub terms: BTreeMap<Vec<i64>, BigInt>,
}

impl CharacterPoly {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, exps: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &BigInt) {
        for (e, x) in &other.terms {
            self.add_term(e.clone(), x * c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Value at `x_i = 1`.
    pub fn dimension(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |a, c| a + c)
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut s = e.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            &self.coeff(&s) == c
                && (0..self.n.saturating_sub(1)).all(|i| {
                    let mut sw = e.clone();
                    sw.swap(i, i + 1);
                    &self.coeff(&sw) == c
                })
        })
    }

    /// As an honest polynomial; fails on negative exponents.
    pub fn to_multipoly(&self) -> Result<MultiPolynomial> {
        let mut p = MultiPolynomial::zero(self.n);
        for (e, c) in &self.terms {
            if e.iter().any(|&x| x < 0) {
                return Err(Error::Precondition("negative exponent in character".into()));
            }
            p.add_term(
                Monomial(e.iter().map(|&x| x as u32).collect()),
                Rational::from_integer(c.clone()),
            );
        }
        Ok(p)
    }
}

/// Schur polynomial `s_lam(x_1..x_n)` as a sum over GT patterns; negative
/// parts give the corresponding determinant-twisted Laurent character.
pub fn character(lam: &Coweight) -> CharacterPoly {
    assert!(lam.is_dominant(), "highest weight must be dominant");
    let mut ch = CharacterPoly::new(lam.n());
    enumerate(&lam.0, None, &mut |rows| {
        let w = GTPattern {
            rows: rows.to_vec(),
        }
        .weight();
        ch.add_term(w.0, BigInt::one());
    });
    ch
}

/// Expands a symmetric Laurent character as `sum_lam m_lam s_lam` by
/// repeatedly subtracting the Schur function of the lex-leading exponent.
pub fn schur_expand(ch: &CharacterPoly) -> Result<BTreeMap<Coweight, BigInt>> {
    let mut rest = ch.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, c)) = rest
        .terms
        .iter()
        .next_back()
        .map(|(e, c)| (e.clone(), c.clone()))
    {
        if c.is_negative() {
            return Err(Error::NegativeMultiplicity {
                weight: lead,
                coeff: c.to_string(),
            });
        }
        let lam = Coweight(lead);
        if !lam.is_dominant() {
            return Err(Error::Precondition(format!(
                "character is not symmetric: leading exponent {lam} is not dominant"
            )));
        }
        rest.add_scaled(&character(&lam), &-c.clone());
        out.insert(lam, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(weight_multiplicity(&cw(&[2, 0]), &cw(&[1, 1])), 1);
        assert_eq!(weight_multiplicity(&cw(&[2, 1, 0]), &cw(&[1, 1, 1])), 2);
        assert_eq!(weight_multiplicity(&cw(&[3, 1, 0]), &cw(&[3, 1, 0])), 1);
        assert_eq!(weight_multiplicity(&cw(&[2, 0]), &cw(&[2, 1])), 0);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(weyl_dimension(&cw(&[1, 0])), BigInt::from(2));
        assert_eq!(weyl_dimension(&cw(&[2, 1, 0])), BigInt::from(8));
        assert_eq!(weyl_dimension(&cw(&[3, 3, 3])), BigInt::one());
        assert_eq!(gt_patterns(&cw(&[2, 1, 0])).len(), 8);
    }

    #[test]
    fn character_examples() {
        let x = |e: &[i64]| e.to_vec();
        let s10 = character(&cw(&[1, 0]));
        assert_eq!(s10.terms.len(), 2);
        assert_eq!(s10.coeff(&x(&[1, 0])), BigInt::one());
        assert_eq!(s10.coeff(&x(&[0, 1])), BigInt::one());
        let s11 = character(&cw(&[1, 1]));
        assert_eq!(s11.terms.len(), 1);
        assert_eq!(s11.coeff(&x(&[1, 1])), BigInt::one());
        let s20 = character(&cw(&[2, 0]));
        assert_eq!(s20.terms.len(), 3);
        for e in [[2, 0], [1, 1], [0, 2]] {
            assert_eq!(s20.coeff(&e), BigInt::one());
        }
    }

    #[test]
    fn negative_parts_give_laurent_characters() {
        // dual of the standard rep of GL_2
        let ch = character(&cw(&[0, -1]));
        assert_eq!(ch.coeff(&[0, -1]), BigInt::one());
        assert_eq!(ch.coeff(&[-1, 0]), BigInt::one());
        assert!(ch.to_multipoly().is_err());
    }

    #[test]
    fn schur_expansion_of_a_product() {
        // s_(1,0)^2 = s_(2,0) + s_(1,1)
        let s = character(&cw(&[1, 0]));
        let mut sq = CharacterPoly::new(2);
        for (a, ca) in &s.terms {
            for (b, cb) in &s.terms {
                sq.add_term(vec![a[0] + b[0], a[1] + b[1]], ca * cb);
            }
        }
        let exp = schur_expand(&sq).unwrap();
        assert_eq!(exp.len(), 2);
        assert_eq!(exp[&cw(&[2, 0])], BigInt::one());
        assert_eq!(exp[&cw(&[1, 1])], BigInt::one());
    }

    #[test]
    fn schur_expansion_rejects_virtual_characters() {
        let mut v = character(&cw(&[1, 1]));
        v.add_scaled(&character(&cw(&[2, 0])), &BigInt::from(-1));
        assert!(schur_expand(&v).is_err());
    }
}

//! Coweights of `GL_n`, dominance order and pairings with `rho`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{rat_frac, Rational};
use crate::error::{Error, Result};

/// An integer vector `lambda` in the coweight lattice of `GL_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn new(parts: Vec<i64>) -> Self {
        Coweight(parts)
    }

    pub fn zero(n: usize) -> Self {
        Coweight(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_partition(&self) -> bool {
        self.is_dominant() && self.0.iter().all(|&p| p >= 0)
    }

    /// Adds `k` to every part (tensoring with `det^k`).
    pub fn twist(&self, k: i64) -> Self {
        Coweight(self.0.iter().map(|p| p + k).collect())
    }

    /// The dominant representative of the Weyl orbit.
    pub fn dominant_rep(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Coweight(v)
    }

    /// Highest weight of the dual representation: `(-l_n, .., -l_1)`.
    pub fn dual(&self) -> Self {
        Coweight(self.0.iter().rev().map(|p| -p).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Partial sums `l_1, l_1 + l_2, ...`.
    pub fn partial_sums(&self) -> Vec<i64> {
        self.0
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl From<Vec<i64>> for Coweight {
    fn from(v: Vec<i64>) -> Self {
        Coweight(v)
    }
}

pub fn is_dominant(lam: &Coweight) -> bool {
    lam.is_dominant()
}

/// `mu <= lam` in dominance order: equal size and every partial sum of `mu`
/// bounded by that of `lam`.
pub fn dominance_leq(mu: &Coweight, lam: &Coweight) -> Result<bool> {
    if mu.n() != lam.n() {
        return Err(Error::DimensionMismatch(format!(
            "coweights of length {} and {}",
            mu.n(),
            lam.n()
        )));
    }
    if mu.size() != lam.size() {
        return Ok(false);
    }
    Ok(mu
        .partial_sums()
        .iter()
        .zip(lam.partial_sums())
        .all(|(m, l)| *m <= l))
}

/// `<lam, 2 rho_n>` together with `<lam, rho_n>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RhoPairing {
    /// `<lam, 2 rho_n> = sum_i lam_i (n + 1 - 2i)`
    pub value: i64,
    #[serde(serialize_with = "crate::serde_util::rational_as_string")]
    pub half_value: Rational,
}

pub fn rho_pairing(lam: &Coweight) -> RhoPairing {
    let value = two_rho_pairing(lam);
    RhoPairing {
        value,
        half_value: rat_frac(value, 2),
    }
}

pub fn two_rho_pairing(lam: &Coweight) -> i64 {
    let n = lam.n() as i64;
    lam.0
        .iter()
        .enumerate()
        .map(|(i, &l)| l * (n + 1 - 2 * (i as i64 + 1)))
        .sum()
}

/// `<lam - mu, rho_n>` when it is an integer.
pub fn rho_pairing_difference(lam: &Coweight, mu: &Coweight) -> Option<i64> {
    let v = two_rho_pairing(&lam.sub(mu));
    (v % 2 == 0).then_some(v / 2)
}

/// Simultaneous determinant twist making both coweights partitions; the
/// shift is the least one that works.
pub fn normalize_pair(lam: &Coweight, mu: &Coweight) -> (Coweight, Coweight, i64) {
    let min = lam.0.iter().chain(&mu.0).copied().min().unwrap_or(0);
    let k = if min < 0 { -min } else { 0 };
    (lam.twist(k), mu.twist(k), k)
}

/// All partitions of `size` with at most `n` parts, padded to length `n`,
/// in decreasing lexicographic order.
pub fn partitions(size: i64, n: usize) -> Vec<Coweight> {
    fn rec(rem: i64, max: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Coweight>) {
        if slots == 0 {
            if rem == 0 {
                out.push(Coweight(cur.clone()));
            }
            return;
        }
        let hi = rem.min(max);
        for p in (0..=hi).rev() {
            // the remaining slots can hold at most `p` each
            if p * (slots as i64) < rem {
                break;
            }
            cur.push(p);
            rec(rem - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size < 0 {
        return out;
    }
    if n == 0 {
        if size == 0 {
            out.push(Coweight(vec![]));
        }
        return out;
    }
    rec(size, size, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Dominant pairs `(lam, mu)` of partitions with `|lam| = |mu| <= max_size`
/// and `mu <= lam`.
pub fn dominant_pairs(n: usize, max_size: i64) -> Vec<(Coweight, Coweight)> {
    let mut out = Vec::new();
    for s in 0..=max_size {
        let parts = partitions(s, n);
        for lam in &parts {
            for mu in &parts {
                if dominance_leq(mu, lam).unwrap() {
                    out.push((lam.clone(), mu.clone()));
                }
            }
        }
    }
    out
}

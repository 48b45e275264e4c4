//! Kostka-Foulkes polynomials `K_{lam,mu}(q)`, computed two ways: the charge
//! statistic on semistandard tableaux, and the alternating sum of the
//! q-analogue of Kostant's partition function over the Weyl group.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::QPolynomial;
use crate::gln;
use crate::weights::{normalize_pair, Coweight};

/// A semistandard Young tableau in English notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ssyt {
    pub rows: Vec<Vec<u32>>,
}

impl Ssyt {
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn content(&self, n: usize) -> Vec<i64> {
        let mut c = vec![0; n];
        for &x in self.rows.iter().flatten() {
            c[x as usize - 1] += 1;
        }
        c
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].len() <= w[0].len() && w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi));
        rows_ok && cols_ok
    }

    /// Rows read left to right, from the bottom row up.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// Tableaux of shape `lam` and content `mu` (both partitions of equal size).
/// The entries equal to `k` fill the horizontal strip between consecutive
/// rows of a Gelfand-Tsetlin pattern.
pub fn ssyt(lam: &Coweight, mu: &Coweight) -> Vec<Ssyt> {
    assert!(lam.is_partition(), "shape must be a partition");
    assert!(mu.0.iter().all(|&m| m >= 0), "content must be nonnegative");
    gln::gt_patterns(lam)
        .into_iter()
        .filter(|p| p.weight() == *mu)
        .map(|p| {
            let n = lam.n();
            let nrows = lam.0.iter().filter(|&&x| x > 0).count();
            let mut rows = vec![Vec::new(); nrows];
            // rows[n - k] of the pattern is the shape filled by 1..=k
            for k in 1..=n {
                let shape = &p.rows[n - k];
                for (r, &len) in shape.iter().enumerate().filter(|(_, &l)| l > 0) {
                    while (rows[r].len() as i64) < len {
                        rows[r].push(k as u32);
                    }
                }
            }
            Ssyt { rows }
        })
        .collect()
}

/// Lascoux-Schutzenberger charge of a word whose content is a partition.
///
/// Standard subwords are peeled off by scanning leftwards (cyclically) for
/// 1, 2, 3, ..; a letter found only after wrapping around sits to the right
/// of its predecessor and raises the running index by one.
pub fn charge(word: &[u32]) -> u64 {
    let mut letters: Vec<u32> = word.to_vec();
    let mut total = 0u64;
    while !letters.is_empty() {
        let max = *letters.iter().max().expect("nonempty");
        let len = letters.len();
        let mut taken = vec![false; len];
        let mut pos = len;
        let mut index = 0u64;
        for letter in 1..=max {
            let left = (0..pos).rev().find(|&p| !taken[p] && letters[p] == letter);
            let p = match left {
                Some(p) => p,
                None => {
                    let p = (pos..len)
                        .rev()
                        .find(|&p| !taken[p] && letters[p] == letter)
                        .unwrap_or_else(|| panic!("content is not a partition: missing {letter}"));
                    index += 1;
                    p
                }
            };
            total += index;
            taken[p] = true;
            pos = p;
        }
        letters = letters
            .into_iter()
            .zip(taken)
            .filter_map(|(l, t)| (!t).then_some(l))
            .collect();
    }
    total
}

/// `K_{lam,mu}(q) = sum_T q^{charge(T)}` over tableaux of shape `lam` and
/// content `mu`. Both arguments are determinant-twisted into partitions first.
pub fn kostka_foulkes_charge(lam: &Coweight, mu: &Coweight) -> QPolynomial {
    check_args(lam, mu);
    if lam.size() != mu.size() {
        return QPolynomial::zero();
    }
    let (lam, mu, _) = normalize_pair(lam, mu);
    ssyt(&lam, &mu)
        .iter()
        .map(|t| QPolynomial::monomial(1, charge(&t.reading_word()) as i64))
        .sum()
}

/// `sum_{w in S_n} sign(w) P_q(w(lam + rho) - (mu + rho))`.
pub fn kostka_foulkes_lusztig(lam: &Coweight, mu: &Coweight) -> QPolynomial {
    check_args(lam, mu);
    if lam.size() != mu.size() {
        return QPolynomial::zero();
    }
    let n = lam.n();
    let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let lr: Vec<i64> = lam.0.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mr: Vec<i64> = mu.0.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut memo = HashMap::new();
    let mut total = QPolynomial::zero();
    for (perm, sign) in permutations_with_sign(n) {
        let v: Vec<i64> = (0..n).map(|i| lr[perm[i]] - mr[i]).collect();
        let p = q_partition_memo(&v, &mut memo);
        if p.is_zero() {
            continue;
        }
        total = if sign > 0 { &total + &p } else { &total - &p };
    }
    total
}

fn check_args(lam: &Coweight, mu: &Coweight) {
    assert_eq!(lam.n(), mu.n(), "rank mismatch");
    assert!(lam.is_dominant(), "lam must be dominant");
    assert!(mu.is_dominant(), "mu must be dominant");
}

/// `sum q^{#roots}` over the ways of writing `v` as a nonnegative
/// combination of the positive roots `e_i - e_j` (i < j) of `GL_n`.
pub fn q_partition_function(v: &Coweight) -> QPolynomial {
    q_partition_memo(&v.0, &mut HashMap::new())
}

fn q_partition_memo(v: &[i64], memo: &mut HashMap<Vec<i64>, QPolynomial>) -> QPolynomial {
    if v.iter().sum::<i64>() != 0 {
        return QPolynomial::zero();
    }
    let mut acc = 0;
    for &x in v {
        acc += x;
        if acc < 0 {
            return QPolynomial::zero();
        }
    }
    if v.len() <= 1 {
        return QPolynomial::one();
    }
    if let Some(p) = memo.get(v) {
        return p.clone();
    }
    // the roots e_1 - e_j carry all of v_1, distributed over j = 2..n
    let head = v[0];
    let tail = &v[1..];
    let mut out = QPolynomial::zero();
    let mut comp = vec![0i64; tail.len()];
    compositions(head, 0, &mut comp, &mut |c| {
        let next: Vec<i64> = tail.iter().zip(c).map(|(a, b)| a + b).collect();
        let sub = q_partition_memo(&next, memo);
        if !sub.is_zero() {
            out = &out + &sub.shift(head);
        }
    });
    memo.insert(v.to_vec(), out.clone());
    out
}

fn compositions(rem: i64, idx: usize, cur: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
    if idx + 1 == cur.len() {
        cur[idx] = rem;
        f(cur);
        return;
    }
    for k in 0..=rem {
        cur[idx] = k;
        compositions(rem - k, idx + 1, cur, f);
    }
}

/// All permutations of `0..n` with their signs.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i32)>) {
        if cur.len() == used.len() {
            let inv = (0..cur.len())
                .flat_map(|i| (i + 1..cur.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| cur[i] > cur[j])
                .count();
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `K_{lam,mu}(1)`, handy for comparing against weight multiplicities.
pub fn specialize_at_one(k: &QPolynomial) -> BigInt {
    k.eval_at_one()
}

/// `K_{lam,lam} = 1`.
pub fn is_unit(k: &QPolynomial) -> bool {
    k.terms().count() == 1 && k.coeff(0) == BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    fn qp(terms: &[(i64, i64)]) -> QPolynomial {
        QPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn charge_of_small_words() {
        assert_eq!(charge(&[1, 2]), 1);
        assert_eq!(charge(&[2, 1]), 0);
        assert_eq!(charge(&[3, 1, 2]), 2);
        assert_eq!(charge(&[2, 1, 3]), 1);
        assert_eq!(charge(&[1, 2, 3]), 3);
        assert_eq!(charge(&[2, 1, 1]), 0);
    }

    #[test]
    fn charge_examples() {
        assert_eq!(
            kostka_foulkes_charge(&cw(&[2, 0]), &cw(&[1, 1])),
            qp(&[(1, 1)])
        );
        assert_eq!(
            kostka_foulkes_charge(&cw(&[2, 1, 0]), &cw(&[2, 1, 0])),
            QPolynomial::one()
        );
        assert_eq!(
            kostka_foulkes_charge(&cw(&[2, 1, 0]), &cw(&[1, 1, 1])),
            qp(&[(1, 1), (2, 1)])
        );
    }

    #[test]
    fn lusztig_examples() {
        assert_eq!(
            kostka_foulkes_lusztig(&cw(&[2, 0]), &cw(&[1, 1])),
            qp(&[(1, 1)])
        );
        assert!(kostka_foulkes_lusztig(&cw(&[1, 1]), &cw(&[2, 0])).is_zero());
        assert_eq!(
            kostka_foulkes_lusztig(&cw(&[3, 1, 0]), &cw(&[3, 1, 0])),
            QPolynomial::one()
        );
    }

    #[test]
    fn q_partition_examples() {
        assert_eq!(q_partition_function(&cw(&[0, 0, 0])), QPolynomial::one());
        assert_eq!(q_partition_function(&cw(&[1, -1])), qp(&[(1, 1)]));
        assert_eq!(
            q_partition_function(&cw(&[1, 0, -1])),
            qp(&[(1, 1), (2, 1)])
        );
        assert!(q_partition_function(&cw(&[-1, 1])).is_zero());
    }

    #[test]
    fn tableaux_are_semistandard_with_requested_content() {
        let lam = cw(&[3, 2, 1]);
        let mu = cw(&[2, 2, 2]);
        let ts = ssyt(&lam, &mu);
        assert!(!ts.is_empty());
        for t in &ts {
            assert!(t.is_semistandard());
            assert_eq!(t.content(3), mu.0);
            assert_eq!(t.shape(), vec![3, 2, 1]);
        }
    }

    #[test]
    fn det_twist_invariance() {
        let lam = cw(&[1, 0, -1]);
        let mu = cw(&[0, 0, 0]);
        let k = kostka_foulkes_charge(&lam, &mu);
        assert_eq!(k, kostka_foulkes_charge(&lam.twist(1), &mu.twist(1)));
        assert_eq!(k, kostka_foulkes_lusztig(&lam, &mu));
        assert_eq!(k, qp(&[(1, 1), (2, 1)]));
    }
}

//! Decategorified spectral side: shearing of bigraded series, branching of
//! `GL_2n` representations to `GL_n x G_m` along `psi_X`, and the image of
//! free modules under the composite functor `Phi`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::QPolynomial;
use crate::error::{Error, Result};
use crate::gln::{character, schur_expand, weyl_dimension, CharacterPoly};
use crate::weights::Coweight;

/// Finitely supported `(degree i, weight j) -> dim`; zero entries are never
/// stored. Serialized as a list of `[i, j, dim]` triples.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<(i64, i64, u64)>", from = "Vec<(i64, i64, u64)>")]
pub struct BigradedSeries {
    entries: BTreeMap<(i64, i64), u64>,
}

impl From<Vec<(i64, i64, u64)>> for BigradedSeries {
    fn from(v: Vec<(i64, i64, u64)>) -> Self {
        let mut s = Self::default();
        for (i, j, d) in v {
            s.add(i, j, d);
        }
        s
    }
}

impl From<BigradedSeries> for Vec<(i64, i64, u64)> {
    fn from(s: BigradedSeries) -> Self {
        s.entries.into_iter().map(|((i, j), d)| (i, j, d)).collect()
    }
}

impl BigradedSeries {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: i64, j: i64, dim: u64) {
        if dim > 0 {
            *self.entries.entry((i, j)).or_insert(0) += dim;
        }
    }

    pub fn get(&self, i: i64, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn total_dimension(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn reindex(&self, f: impl Fn(i64, i64) -> i64) -> Self {
        let mut out = Self::new();
        for (&(i, j), &d) in &self.entries {
            out.add(f(i, j), j, d);
        }
        out
    }

    /// Degree generating function `sum dim q^i`, forgetting weights.
    pub fn degree_series(&self) -> QPolynomial {
        let mut p = QPolynomial::zero();
        for (&(i, _), &d) in &self.entries {
            p.add_term(i, d.into());
        }
        p
    }

    /// Negates every weight.
    pub fn flip_weights(&self) -> Self {
        let mut out = Self::new();
        for (&(i, j), &d) in &self.entries {
            out.add(i, -j, d);
        }
        out
    }
}

/// `tilde M^i_j = M^{i+j}_j`: the entry at `(i, j)` moves to `(i - j, j)`.
/// Weights must be even.
pub fn shear(series: &BigradedSeries) -> Result<BigradedSeries> {
    if let Some(((_, j), _)) = series.entries().find(|((_, j), _)| j % 2 != 0) {
        return Err(Error::Precondition(format!(
            "odd weight {j} cannot be sheared"
        )));
    }
    Ok(shear_unchecked(series))
}

/// [`shear`] without the parity requirement; modules over an evenly
/// weighted algebra may carry odd weights.
pub fn shear_unchecked(series: &BigradedSeries) -> BigradedSeries {
    series.reindex(|i, j| i - j)
}

/// Inverse of [`shear`].
pub fn unshear(series: &BigradedSeries) -> BigradedSeries {
    series.reindex(|i, j| i + j)
}

/// Blocks of `g_2n = [[A, B], [C, D]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Block {
    A,
    B,
    C,
    D,
}

/// Weight of the coordinate functions dual to a block under `2 rho_L`
/// (left action): `B^* -> -2`, `C^* -> +2`, `A^*, D^* -> 0`.
pub fn dual_block_weight(block: Block) -> i64 {
    match block {
        Block::A | Block::D => 0,
        Block::B => -2,
        Block::C => 2,
    }
}

/// Generators of `Sym(g_2n[-2])`: all in degree 2, weighted by block.
pub fn sym_generator_series(n: usize) -> BigradedSeries {
    let mut s = BigradedSeries::new();
    for block in [Block::A, Block::B, Block::C, Block::D] {
        s.add(2, dual_block_weight(block), (n * n) as u64);
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchTerm {
    pub lam: Coweight,
    pub j: i64,
    #[serde(serialize_with = "crate::serde_util::bigint_as_number")]
    pub mult: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchingDecomposition {
    pub big_lam: Coweight,
    pub n: usize,
    pub terms: Vec<BranchTerm>,
}

impl BranchingDecomposition {
    pub fn dimension(&self) -> BigInt {
        self.terms
            .iter()
            .map(|t| &t.mult * weyl_dimension(&t.lam))
            .fold(BigInt::zero(), |a, b| a + b)
    }

    /// `sum_j m_{lam, j}`.
    pub fn diagonal_multiplicities(&self) -> BTreeMap<Coweight, BigInt> {
        let mut out: BTreeMap<Coweight, BigInt> = BTreeMap::new();
        for t in &self.terms {
            *out.entry(t.lam.clone()).or_insert_with(BigInt::zero) += &t.mult;
        }
        out
    }
}

/// Splits the `GL_2n` character under `x_i -> x_i h`, `x_{n+i} -> x_i h^{-1}`
/// into `GL_n` characters indexed by the power of `h`.
pub fn psi_x_restriction(big_lam: &Coweight) -> Result<BTreeMap<i64, CharacterPoly>> {
    if !big_lam.n().is_multiple_of(2) || big_lam.n() == 0 {
        return Err(Error::Precondition(format!(
            "{big_lam} must have even positive length"
        )));
    }
    if !big_lam.is_dominant() {
        return Err(Error::Precondition(format!("{big_lam} is not dominant")));
    }
    let n = big_lam.n() / 2;
    let mut out: BTreeMap<i64, CharacterPoly> = BTreeMap::new();
    for (e, c) in &character(big_lam).terms {
        let x: Vec<i64> = (0..n).map(|i| e[i] + e[n + i]).collect();
        let h: i64 = e[..n].iter().sum::<i64>() - e[n..].iter().sum::<i64>();
        out.entry(h)
            .or_insert_with(|| CharacterPoly::new(n))
            .add_term(x, c.clone());
    }
    Ok(out)
}

/// Restriction along `delta x 2 rho_L : GL_n x G_m -> GL_2n`.
pub fn branch_psi_x(big_lam: &Coweight) -> Result<BranchingDecomposition> {
    let parts = psi_x_restriction(big_lam)?;
    let n = big_lam.n() / 2;
    let expanded: Vec<(i64, BTreeMap<Coweight, BigInt>)> = parts
        .into_par_iter()
        .map(|(j, ch)| schur_expand(&ch).map(|m| (j, m)))
        .collect::<Result<_>>()?;
    let mut terms = Vec::new();
    for (j, m) in expanded {
        for (lam, mult) in m {
            terms.push(BranchTerm { lam, j, mult });
        }
    }
    terms.sort_by(|a, b| (b.j, &b.lam).cmp(&(a.j, &a.lam)));
    let out = BranchingDecomposition {
        big_lam: big_lam.clone(),
        n,
        terms,
    };
    if out.dimension() != weyl_dimension(big_lam) {
        return Err(Error::Verification(format!(
            "branching of {big_lam} loses dimension"
        )));
    }
    Ok(out)
}

/// Restriction to the diagonal `GL_n`, computed independently at `h = 1`.
pub fn diagonal_restriction(big_lam: &Coweight) -> Result<BTreeMap<Coweight, BigInt>> {
    let n = big_lam.n() / 2;
    let mut ch = CharacterPoly::new(n);
    for (e, c) in &character(big_lam).terms {
        ch.add_term((0..n).map(|i| e[i] + e[n + i]).collect(), c.clone());
    }
    schur_expand(&ch)
}

/// One summand `B (x) V_lam [-shift]` of the image of a free module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeSummand {
    pub lam: Coweight,
    pub shift: i64,
    #[serde(serialize_with = "crate::serde_util::bigint_as_number")]
    pub mult: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeModuleImage {
    pub big_lam: Coweight,
    pub n: usize,
    pub summands: Vec<FreeSummand>,
}

/// `Phi(Sym(g_2n[-2]) (x) V_Lam) = sum_j B (x) V_j [-j]` with
/// `B = Sym(g_n[-4])`.
pub fn phi_on_free_module(big_lam: &Coweight) -> Result<FreeModuleImage> {
    let br = branch_psi_x(big_lam)?;
    Ok(FreeModuleImage {
        big_lam: big_lam.clone(),
        n: br.n,
        summands: br
            .terms
            .into_iter()
            .map(|t| FreeSummand {
                lam: t.lam,
                shift: t.j,
                mult: t.mult,
            })
            .collect(),
    })
}

/// `(1 - q^step)^{-count}` up to degree `max_deg`.
pub fn inverse_power_series(step: i64, count: u64, max_deg: i64) -> QPolynomial {
    let mut out = QPolynomial::one();
    let geometric: QPolynomial = (0..=max_deg / step)
        .map(|k| QPolynomial::monomial(1, k * step))
        .sum();
    for _ in 0..count {
        out = (&out * &geometric).truncate(max_deg);
    }
    out
}

impl FreeModuleImage {
    /// Hilbert series `sum m dim(V_lam) q^shift / (1 - q^4)^{n^2}`, truncated.
    pub fn hilbert_series(&self, max_deg: i64) -> QPolynomial {
        let w: QPolynomial = self
            .summands
            .iter()
            .map(|s| {
                let d = &s.mult * weyl_dimension(&s.lam);
                QPolynomial::from_terms([(s.shift, d)])
            })
            .sum();
        (&w * &inverse_power_series(
            4,
            (self.n * self.n) as u64,
            max_deg - w.min_degree().unwrap_or(0),
        ))
            .truncate(max_deg)
    }
}

/// Sheared generator data of the free module `Sym(g_2n[-2]) (x) V_Lam`,
/// computed from weight multiplicities of `V_Lam` (no Schur expansion).
#[derive(Clone, Debug, Serialize)]
pub struct ShearedFreeModule {
    pub n: usize,
    /// Sheared algebra generators, per block.
    pub generators: Vec<(Block, BigradedSeries)>,
    /// Sheared module generators `V_Lam`.
    pub module: BigradedSeries,
}

/// The right regular `G_m`-action flips the sign of all weights before
/// shearing.
pub fn sheared_free_module(big_lam: &Coweight) -> Result<ShearedFreeModule> {
    let n = big_lam.n() / 2;
    let mut weights = BigradedSeries::new();
    for (j, ch) in psi_x_restriction(big_lam)? {
        let d = ch
            .dimension()
            .to_u64()
            .ok_or_else(|| Error::Verification("weight space dimension out of range".into()))?;
        weights.add(0, j, d);
    }
    let generators = [Block::A, Block::B, Block::C, Block::D]
        .into_iter()
        .map(|b| {
            let mut s = BigradedSeries::new();
            s.add(2, dual_block_weight(b), (n * n) as u64);
            (b, shear(&s.flip_weights()).expect("block weights are even"))
        })
        .collect();
    Ok(ShearedFreeModule {
        n,
        generators,
        module: shear_unchecked(&weights.flip_weights()),
    })
}

impl ShearedFreeModule {
    fn degrees_of(&self, block: Block) -> Vec<i64> {
        self.generators
            .iter()
            .filter(|(b, _)| *b == block)
            .flat_map(|(_, s)| s.entries().map(|((i, _), _)| i).collect::<Vec<_>>())
            .collect()
    }

    /// The pull-back `tilde A -> B` along `C -> [[0, I], [C, 0]]` is graded:
    /// `B`-block coordinates (sent to constants) sit in degree 0 and
    /// `C`-block coordinates (sent to generators of `Sym(g_n[-4])`) in degree 4.
    pub fn base_change_is_graded(&self) -> bool {
        self.degrees_of(Block::B).iter().all(|&d| d == 0)
            && self.degrees_of(Block::C).iter().all(|&d| d == 4)
    }

    /// Hilbert series of `B (x)_{tilde A} (tilde A (x) W) = B (x) W`.
    pub fn base_changed_hilbert_series(&self, max_deg: i64) -> Result<QPolynomial> {
        if !self.base_change_is_graded() {
            return Err(Error::Verification(
                "pull-back to Sym(g_n[-4]) is not graded".into(),
            ));
        }
        let w = self.module.degree_series();
        let b_gens: u64 = self
            .generators
            .iter()
            .filter(|(b, _)| *b == Block::C)
            .map(|(_, s)| s.total_dimension())
            .sum();
        Ok(
            (&w * &inverse_power_series(4, b_gens, max_deg - w.min_degree().unwrap_or(0)))
                .truncate(max_deg),
        )
    }
}

/// Both sides of the free-module identity up to `max_deg`.
pub fn hilbert_series_identity(
    big_lam: &Coweight,
    max_deg: i64,
) -> Result<(QPolynomial, QPolynomial)> {
    let lhs = sheared_free_module(big_lam)?.base_changed_hilbert_series(max_deg)?;
    let rhs = phi_on_free_module(big_lam)?.hilbert_series(max_deg);
    Ok((lhs, rhs))
}

/// `j -> -j`, `lam -> lam^*`.
pub fn dual_decomposition(d: &BranchingDecomposition) -> Vec<BranchTerm> {
    let mut terms: Vec<_> = d
        .terms
        .iter()
        .map(|t| BranchTerm {
            lam: t.lam.dual(),
            j: -t.j,
            mult: t.mult.clone(),
        })
        .collect();
    terms.sort_by(|a, b| (b.j, &b.lam).cmp(&(a.j, &a.lam)));
    terms
}

/// All multiplicities positive and all weights of one parity (that of `|Lam|`).
pub fn decomposition_well_formed(d: &BranchingDecomposition) -> bool {
    let parity = d.big_lam.size().rem_euclid(2);
    d.terms
        .iter()
        .all(|t| t.mult.is_positive() && t.j.rem_euclid(2) == parity)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    fn term(lam: &[i64], j: i64, m: i64) -> BranchTerm {
        BranchTerm {
            lam: cw(lam),
            j,
            mult: m.into(),
        }
    }

    #[test]
    fn shear_generator_degrees() {
        let sheared = shear(&sym_generator_series(1)).unwrap();
        let mut degs: Vec<i64> = sheared
            .entries()
            .flat_map(|((i, _), d)| std::iter::repeat_n(i, d as usize))
            .collect();
        degs.sort();
        assert_eq!(degs, vec![0, 2, 2, 4]);
        assert_eq!(sheared.get(4, -2), 1);
        assert_eq!(sheared.get(0, 2), 1);
    }

    #[test]
    fn shear_rejects_odd_weights() {
        let s = BigradedSeries::from(vec![(0, 1, 1)]);
        assert!(shear(&s).is_err());
        let s = BigradedSeries::from(vec![(3, 0, 2), (1, 0, 5)]);
        assert_eq!(shear(&s).unwrap(), s);
    }

    #[test]
    fn branching_examples() {
        let d = branch_psi_x(&cw(&[1, 0])).unwrap();
        assert_eq!(d.terms, vec![term(&[1], 1, 1), term(&[1], -1, 1)]);
        let d = branch_psi_x(&cw(&[1, 1])).unwrap();
        assert_eq!(d.terms, vec![term(&[2], 0, 1)]);
        let d = branch_psi_x(&cw(&[1, 1, 1, 1])).unwrap();
        assert_eq!(d.terms, vec![term(&[2, 2], 0, 1)]);
    }

    #[test]
    fn free_module_examples() {
        let img = phi_on_free_module(&cw(&[0, 0])).unwrap();
        assert_eq!(img.summands.len(), 1);
        assert_eq!(img.summands[0].shift, 0);
        let img = phi_on_free_module(&cw(&[1, 0])).unwrap();
        let shifts: Vec<i64> = img.summands.iter().map(|s| s.shift).collect();
        assert_eq!(shifts, vec![1, -1]);
    }

    #[test]
    fn base_change_grading_pins_the_sign() {
        let m = sheared_free_module(&cw(&[1, 0])).unwrap();
        assert!(m.base_change_is_graded());
        let (lhs, rhs) = hilbert_series_identity(&cw(&[1, 0]), 12).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_json_round_trip() {
        let s = BigradedSeries::from(vec![(2, -2, 1), (0, 0, 3)]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[[0,0,3],[2,-2,1]]");
        let back: BigradedSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}

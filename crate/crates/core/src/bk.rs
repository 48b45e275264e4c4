//! Explicit models of irreducible `GL_n` representations inside tensor powers
//! of the standard representation, the principal nilpotent `e_n`, and the
//! Brylinski-Kostant filtration `F_i V = ker e_n^{i+1}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{QPolynomial, Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::gln::weyl_dimension;
use crate::weights::Coweight;

pub const DEFAULT_DIMENSION_BOUND: usize = 3000;

/// Sparse vector in `(C^n)^{⊗d}`; keys encode basis tensors in base `n`.
pub type SparseVec = BTreeMap<u64, Rational>;

/// Incrementally maintained reduced echelon basis of a subspace.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    /// `(pivot, vector)`; each vector is 1 at its own pivot and 0 at the others.
    rows: Vec<(u64, SparseVec)>,
}

impl EchelonBasis {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (p, row) in &self.rows {
            let Some(c) = v.get(p).cloned() else { continue };
            axpy(&mut v, &-c, row);
        }
        v
    }

    /// Adds `v` to the span; returns false when it was already there.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((&p, c)) = r.iter().next() else {
            return false;
        };
        let inv = c.recip();
        let r: SparseVec = r.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        for (_, row) in self.rows.iter_mut() {
            if let Some(c) = row.get(&p).cloned() {
                axpy(row, &-c, &r);
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn vectors(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.iter().map(|(_, v)| v)
    }

    /// Coordinates of a vector known to lie in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        let coords: Vec<Rational> = self
            .rows
            .iter()
            .map(|(p, _)| v.get(p).cloned().unwrap_or_else(Rational::zero))
            .collect();
        let mut check = v.clone();
        for (c, (_, row)) in coords.iter().zip(&self.rows) {
            axpy(&mut check, &-c.clone(), row);
        }
        check.is_empty().then_some(coords)
    }
}

fn axpy(v: &mut SparseVec, a: &Rational, w: &SparseVec) {
    for (k, x) in w {
        let e = v.entry(*k).or_insert_with(Rational::zero);
        *e += a * x;
        if e.is_zero() {
            v.remove(k);
        }
    }
}

/// Rank of a family of sparse vectors.
pub fn sparse_rank<'a>(vs: impl IntoIterator<Item = &'a SparseVec>) -> usize {
    let mut b = EchelonBasis::default();
    vs.into_iter().filter(|v| b.insert(v)).count()
}

/// Weight-space decomposition of `V_lam` realized in `(C^n)^{⊗|lam|}`.
#[derive(Clone, Debug)]
pub struct WeightedRep {
    pub n: usize,
    /// Highest weight as requested (may have negative parts).
    pub highest_weight: Coweight,
    /// Determinant twist used to make the highest weight a partition.
    pub twist: i64,
    pub degree: usize,
    /// Keyed by the untwisted weight.
    pub weight_spaces: BTreeMap<Coweight, EchelonBasis>,
}

impl WeightedRep {
    pub fn dimension(&self) -> usize {
        self.weight_spaces.values().map(EchelonBasis::len).sum()
    }

    fn decode(&self, key: u64) -> Vec<usize> {
        let mut letters = vec![0; self.degree];
        let mut k = key;
        for slot in letters.iter_mut().rev() {
            *slot = (k % self.n as u64) as usize;
            k /= self.n as u64;
        }
        letters
    }

    fn encode(&self, letters: &[usize]) -> u64 {
        letters
            .iter()
            .fold(0u64, |acc, &l| acc * self.n as u64 + l as u64)
    }

    /// `E_{from -> to}`: sends `e_from` to `e_to` in each tensor slot.
    pub fn apply_elementary(&self, to: usize, from: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (key, c) in v {
            let letters = self.decode(*key);
            for (slot, &l) in letters.iter().enumerate() {
                if l == from {
                    let mut nl = letters.clone();
                    nl[slot] = to;
                    let e = out.entry(self.encode(&nl)).or_insert_with(Rational::zero);
                    *e += c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// The principal nilpotent `e_n = sum_i E_{i,i+1}`.
    pub fn apply_principal_nilpotent(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for i in 0..self.n.saturating_sub(1) {
            let w = self.apply_elementary(i, i + 1, v);
            axpy(&mut out, &Rational::one(), &w);
        }
        out
    }

    /// Ordered basis of the whole representation: weight spaces in
    /// decreasing order, each in its echelon order.
    pub fn basis(&self) -> Vec<(Coweight, &SparseVec)> {
        self.weight_spaces
            .iter()
            .rev()
            .flat_map(|(w, b)| b.vectors().map(move |v| (w.clone(), v)))
            .collect()
    }

    /// Coordinates in the basis of [`Self::basis`]. Weight spaces have
    /// disjoint supports, so the union of their echelon bases is again reduced.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        let mut coords = Vec::with_capacity(self.dimension());
        let mut rest = v.clone();
        for b in self.weight_spaces.values().rev() {
            for (p, row) in &b.rows {
                let c = v.get(p).cloned().unwrap_or_else(Rational::zero);
                axpy(&mut rest, &-c.clone(), row);
                coords.push(c);
            }
        }
        rest.is_empty().then_some(coords)
    }

    /// Matrix of a linear operator preserving `V` in the basis of [`Self::basis`].
    pub fn operator_matrix(&self, op: impl Fn(&SparseVec) -> SparseVec) -> Result<RationalMatrix> {
        let basis = self.basis();
        let dim = basis.len();
        let mut m = RationalMatrix::zeros(dim, dim);
        for (j, (_, v)) in basis.iter().enumerate() {
            let coords = self.coordinates(&op(v)).ok_or_else(|| {
                Error::Verification("operator does not preserve the representation".into())
            })?;
            for (i, c) in coords.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    pub fn principal_nilpotent_matrix(&self) -> Result<RationalMatrix> {
        self.operator_matrix(|v| self.apply_principal_nilpotent(v))
    }

    /// Index range of the weight space `mu` inside [`Self::basis`].
    pub fn weight_range(&self, mu: &Coweight) -> Option<std::ops::Range<usize>> {
        let mut start = 0;
        for (w, b) in self.weight_spaces.iter().rev() {
            if w == mu {
                return Some(start..start + b.len());
            }
            start += b.len();
        }
        None
    }
}

/// Columns of a partition, as their lengths.
fn column_lengths(lam: &[i64]) -> Vec<usize> {
    let first = lam.first().copied().unwrap_or(0).max(0) as usize;
    (0..first)
        .map(|c| lam.iter().filter(|&&p| p as usize > c).count())
        .collect()
}

/// Builds `V_lam` as the span of lowering operators applied to the product of
/// column antisymmetrizers `e_1 ∧ .. ∧ e_k` (one per column of `lam`).
pub fn build_irrep(lam: &Coweight) -> Result<WeightedRep> {
    build_irrep_bounded(lam, DEFAULT_DIMENSION_BOUND)
}

pub fn build_irrep_bounded(lam: &Coweight, bound: usize) -> Result<WeightedRep> {
    if !lam.is_dominant() {
        return Err(Error::Precondition(format!("{lam} is not dominant")));
    }
    let n = lam.n();
    if n == 0 {
        return Err(Error::Precondition("empty coweight".into()));
    }
    let expected: usize = weyl_dimension(lam)
        .try_into()
        .map_err(|_| Error::DimensionOverflow {
            dim: usize::MAX,
            bound,
        })?;
    if expected > bound {
        return Err(Error::DimensionOverflow {
            dim: expected,
            bound,
        });
    }
    let min = *lam.0.iter().min().unwrap();
    let twist = if min < 0 { -min } else { 0 };
    let part = lam.twist(twist);
    let degree = part.size() as usize;

    let mut rep = WeightedRep {
        n,
        highest_weight: lam.clone(),
        twist,
        degree,
        weight_spaces: BTreeMap::new(),
    };

    // highest weight vector
    let mut hw = SparseVec::new();
    hw.insert(0, Rational::one());
    let mut filled = 0usize;
    for len in column_lengths(&part.0) {
        let mut next = SparseVec::new();
        for (perm, sign) in crate::kostka::permutations_with_sign(len) {
            for (key, c) in &hw {
                let mut k = *key;
                for &p in &perm {
                    k = k * n as u64 + p as u64;
                }
                let coeff = if sign > 0 { c.clone() } else { -c.clone() };
                *next.entry(k).or_insert_with(Rational::zero) += coeff;
            }
        }
        next.retain(|_, c| !c.is_zero());
        hw = next;
        filled += len;
    }
    debug_assert_eq!(filled, degree);

    let mut top = EchelonBasis::default();
    top.insert(&hw);
    let mut frontier: BTreeMap<Coweight, EchelonBasis> = BTreeMap::new();
    frontier.insert(lam.clone(), top);
    while !frontier.is_empty() {
        let mut next: BTreeMap<Coweight, EchelonBasis> = BTreeMap::new();
        for (w, basis) in &frontier {
            for i in 0..n - 1 {
                let mut lower = w.clone();
                lower.0[i] -= 1;
                lower.0[i + 1] += 1;
                for v in basis.vectors() {
                    let img = rep.apply_elementary(i + 1, i, v);
                    if !img.is_empty() {
                        next.entry(lower.clone()).or_default().insert(&img);
                    }
                }
            }
        }
        for (w, b) in std::mem::replace(&mut frontier, next) {
            rep.weight_spaces.insert(w, b);
        }
    }

    let dim = rep.dimension();
    if dim != expected {
        return Err(Error::Verification(format!(
            "constructed dimension {dim} differs from Weyl dimension {expected}"
        )));
    }
    Ok(rep)
}

/// Dimensions `dim F_i V(mu)` for `i = 0, 1, ..` until the filtration is
/// exhaustive. Kernels of powers of `e_n` are intersected with the weight
/// space by stacking bases.
pub fn bk_filtration(rep: &WeightedRep, mu: &Coweight) -> Result<Vec<usize>> {
    let Some(range) = rep.weight_range(mu) else {
        return Ok(Vec::new());
    };
    let e = rep.principal_nilpotent_matrix()?;
    let dim = e.rows();
    let weight_dim = range.len();
    let mut dims = Vec::new();
    let mut k = 1u32;
    loop {
        let ker = e.kernel_power(k)?;
        // dim(K ∩ W) = dim K + dim W - dim(K + W)
        let stacked = RationalMatrix::from_fn(ker.len() + weight_dim, dim, |r, c| {
            if r < ker.len() {
                ker[r][c].clone()
            } else if c == range.start + (r - ker.len()) {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let inter = ker.len() + weight_dim - stacked.rank();
        dims.push(inter);
        if inter == weight_dim {
            break;
        }
        k += 1;
        if k as usize > dim + 1 {
            return Err(Error::Verification("e_n is not nilpotent".into()));
        }
    }
    Ok(dims)
}

/// `P_mu(V, q) = sum_i dim(F_i V(mu) / F_{i-1} V(mu)) q^i`.
pub fn bk_polynomial(rep: &WeightedRep, mu: &Coweight) -> Result<QPolynomial> {
    let dims = bk_filtration(rep, mu)?;
    let mut p = QPolynomial::zero();
    let mut prev = 0usize;
    for (i, &d) in dims.iter().enumerate() {
        p.add_term(i as i64, ((d - prev) as u64).into());
        prev = d;
    }
    Ok(p)
}

/// Same polynomial computed weight space by weight space: `dim F_{k-1} V(mu)`
/// is `dim V(mu)` minus the rank of `e_n^k` on a basis of `V(mu)`.
pub fn bk_polynomial_direct(rep: &WeightedRep, mu: &Coweight) -> QPolynomial {
    let Some(basis) = rep.weight_spaces.get(mu) else {
        return QPolynomial::zero();
    };
    let dim = basis.len();
    let mut images: Vec<SparseVec> = basis.vectors().cloned().collect();
    let mut p = QPolynomial::zero();
    let mut prev = 0usize;
    let mut i = 0i64;
    loop {
        images = images
            .iter()
            .map(|v| rep.apply_principal_nilpotent(v))
            .collect();
        let f = dim - sparse_rank(&images);
        p.add_term(i, ((f - prev) as u64).into());
        prev = f;
        if f == dim {
            break;
        }
        i += 1;
    }
    p
}

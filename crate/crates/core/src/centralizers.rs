//! Kostant sections, the embedding `tau(C) = [[0, I], [C, 0]]`, regular
//! centralizers and the Shalika normal form.

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::algebra::{MultiPolynomial, PolyMatrix, Rational, RationalMatrix};
use crate::error::{Error, Result};
use crate::sample::{random_point, random_rational, seeded_rng};

/// Coefficients `(c_1, .., c_s)` of `x^s + c_1 x^{s-1} + .. + c_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyPoint(pub Vec<Rational>);

impl CharPolyPoint {
    pub fn s(&self) -> usize {
        self.0.len()
    }

    /// Image of a matrix under the Chevalley map.
    pub fn of_matrix(x: &RationalMatrix) -> Self {
        CharPolyPoint(x.char_poly())
    }

    /// `(0, c_1, 0, c_2, .., 0, c_n)`: the coefficients of `p(x^2)`.
    pub fn interleave(&self) -> Self {
        CharPolyPoint(
            self.0
                .iter()
                .flat_map(|c| [Rational::zero(), c.clone()])
                .collect(),
        )
    }
}

/// Companion matrix: ones above the diagonal, last row `(-c_s, .., -c_1)`.
pub fn kostant_section(c: &CharPolyPoint) -> RationalMatrix {
    let s = c.s();
    RationalMatrix::from_fn(s, s, |i, j| {
        if i + 1 == s {
            -c.0[s - 1 - j].clone()
        } else if j == i + 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Companion matrix over a polynomial ring.
pub fn kostant_section_symbolic(c: &[MultiPolynomial], nvars: usize) -> PolyMatrix {
    let s = c.len();
    PolyMatrix::from_fn(s, nvars, |i, j| {
        if i + 1 == s {
            -&c[s - 1 - j]
        } else if j == i + 1 {
            MultiPolynomial::one(nvars)
        } else {
            MultiPolynomial::zero(nvars)
        }
    })
}

pub fn tau_embed_matrix(c: &RationalMatrix) -> Result<RationalMatrix> {
    if !c.is_square() {
        return Err(Error::DimensionMismatch("tau needs a square matrix".into()));
    }
    let n = c.rows();
    Ok(RationalMatrix::block(
        &RationalMatrix::zeros(n, n),
        &RationalMatrix::identity(n),
        c,
        &RationalMatrix::zeros(n, n),
    ))
}

/// `P e_i = w_i` for `w = (e_1, e_3, .., e_{2n-1}, e_2, e_4, .., e_{2n})`.
pub fn interleaving_permutation(n: usize) -> RationalMatrix {
    RationalMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let image = if j < n { 2 * j } else { 2 * (j - n) + 1 };
        if i == image {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Checks `kappa_{2n}(tau(c)) = P tau(kappa_n(c)) P^{-1}` exactly and returns `P`.
pub fn companion_conjugation_check(c: &CharPolyPoint) -> Result<RationalMatrix> {
    let n = c.s();
    let p = interleaving_permutation(n);
    let lhs = kostant_section(&c.interleave());
    let rhs = &(&p * &tau_embed_matrix(&kostant_section(c))?) * &p.inverse()?;
    if lhs != rhs {
        return Err(Error::Verification(format!(
            "companion identity fails at n={n}"
        )));
    }
    Ok(p)
}

/// The same identity with `c_1, .., c_n` as indeterminates.
pub fn companion_conjugation_symbolic(n: usize) -> Result<bool> {
    let c: Vec<_> = (0..n).map(|i| MultiPolynomial::var(n, i)).collect();
    let interleaved: Vec<_> = c
        .iter()
        .flat_map(|ci| [MultiPolynomial::zero(n), ci.clone()])
        .collect();
    let lhs = kostant_section_symbolic(&interleaved, n);
    let p = PolyMatrix::from_rational(&interleaving_permutation(n), n);
    let t = crate::twistor::tau(&kostant_section_symbolic(&c, n));
    Ok(PolyMatrix::conjugate(&p, &t)? == lhs)
}

/// Regular means the commutant has dimension exactly `s`.
pub fn is_regular(x: &RationalMatrix) -> bool {
    x.is_square() && x.commutant_basis().len() == x.rows()
}

/// A basis of the commutant of `x`.
pub fn centralizer_basis(x: &RationalMatrix) -> Vec<RationalMatrix> {
    x.commutant_basis()
}

/// `I, x, .., x^{s-1}`, which spans the commutant when `x` is regular.
pub fn power_basis(x: &RationalMatrix) -> Vec<RationalMatrix> {
    (0..x.rows() as u32).map(|k| x.pow(k)).collect()
}

pub fn is_commutative(ms: &[RationalMatrix]) -> bool {
    ms.iter()
        .enumerate()
        .all(|(i, a)| ms[i + 1..].iter().all(|b| a.commutes_with(b)))
}

/// `g -> diag(g, g)`, from the centralizer of `C` to that of `tau(C)`.
pub fn centralizer_embedding(g: &RationalMatrix, c: &RationalMatrix) -> Result<RationalMatrix> {
    if !g.is_square() || g.rows() != c.rows() {
        return Err(Error::DimensionMismatch(
            "g and C must be square of equal size".into(),
        ));
    }
    if !g.commutes_with(c) {
        return Err(Error::Precondition("g does not commute with C".into()));
    }
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let n = g.rows();
    Ok(RationalMatrix::block(
        g,
        &RationalMatrix::zeros(n, n),
        &RationalMatrix::zeros(n, n),
        g,
    ))
}

fn unipotent(x: &RationalMatrix) -> RationalMatrix {
    let n = x.rows();
    RationalMatrix::block(
        &RationalMatrix::identity(n),
        &RationalMatrix::zeros(n, n),
        x,
        &RationalMatrix::identity(n),
    )
}

/// `[[I, 0], [X, I]] [[A, I], [C, -A]] [[I, 0], [-X, I]]`.
pub fn shalika_conjugate(
    a: &RationalMatrix,
    c: &RationalMatrix,
    x: &RationalMatrix,
) -> RationalMatrix {
    let n = a.rows();
    let m = RationalMatrix::block(a, &RationalMatrix::identity(n), c, &-a);
    &(&unipotent(x) * &m) * &unipotent(&-x)
}

/// The closed form `[[A - X, I], [C + XA + AX - X^2, X - A]]`.
pub fn shalika_closed_form(
    a: &RationalMatrix,
    c: &RationalMatrix,
    x: &RationalMatrix,
) -> RationalMatrix {
    let n = a.rows();
    let lower = &(&(c + &(x * a)) + &(a * x)) - &(x * x);
    RationalMatrix::block(&(a - x), &RationalMatrix::identity(n), &lower, &(x - a))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShalikaNormalForm {
    /// `C + A^2`.
    pub normal: RationalMatrix,
    pub conjugated: RationalMatrix,
    pub verified: bool,
}

/// Translate by `X = A`, which kills both diagonal blocks.
pub fn shalika_normal_form(a: &RationalMatrix, c: &RationalMatrix) -> Result<ShalikaNormalForm> {
    if !a.is_square() || a.rows() != c.rows() || !c.is_square() {
        return Err(Error::DimensionMismatch(
            "A and C must be square of equal size".into(),
        ));
    }
    let normal = c + &(a * a);
    let conjugated = shalika_conjugate(a, c, a);
    let verified = conjugated == tau_embed_matrix(&normal)?;
    Ok(ShalikaNormalForm {
        normal,
        conjugated,
        verified,
    })
}

/// The diagonal blocks of the translate are affine in `X`; the normal form is
/// unique when the linear part has full rank `n^2`.
pub fn shalika_uniqueness(a: &RationalMatrix, c: &RationalMatrix) -> bool {
    let n = a.rows();
    let diag_blocks = |x: &RationalMatrix| -> Vec<Rational> {
        let m = shalika_conjugate(a, c, x);
        let mut v = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for j in 0..n {
                v.push(m.get(i, j).clone());
                v.push(m.get(n + i, n + j).clone());
            }
        }
        v
    };
    let base = diag_blocks(&RationalMatrix::zeros(n, n));
    let columns: Vec<Vec<Rational>> = (0..n * n)
        .map(|k| {
            let mut e = RationalMatrix::zeros(n, n);
            e.set(k / n, k % n, Rational::one());
            diag_blocks(&e)
                .iter()
                .zip(&base)
                .map(|(x, b)| x - b)
                .collect()
        })
        .collect();
    let linear = RationalMatrix::from_fn(2 * n * n, n * n, |i, j| columns[j][i].clone());
    linear.rank() == n * n && diag_blocks(a).iter().all(Zero::is_zero)
}

/// Symbolic Shalika conjugation identity with the entries of `A, C, X` as indeterminates.
pub fn shalika_identity_symbolic(n: usize) -> Result<bool> {
    let nv = 3 * n * n;
    let var =
        |block: usize, i: usize, j: usize| MultiPolynomial::var(nv, block * n * n + i * n + j);
    let mat = |block: usize| PolyMatrix::from_fn(n, nv, |i, j| var(block, i, j));
    let (a, c, x) = (mat(0), mat(1), mat(2));
    let ident = PolyMatrix::identity(n, nv);
    let zero = PolyMatrix::zero(n, nv);
    let neg = |m: &PolyMatrix| m.map(|e| -e);
    let block = |p: &PolyMatrix, q: &PolyMatrix, r: &PolyMatrix, s: &PolyMatrix| {
        PolyMatrix::from_fn(2 * n, nv, |i, j| {
            let src = match (i < n, j < n) {
                (true, true) => p,
                (true, false) => q,
                (false, true) => r,
                (false, false) => s,
            };
            src.get(i % n, j % n).clone()
        })
    };
    let u = block(&ident, &zero, &x, &ident);
    let m = block(&a, &ident, &c, &neg(&a));
    let lhs = PolyMatrix::conjugate(&u, &m)?;
    let lower = c.add(&x.mul(&a)?)?.add(&a.mul(&x)?)?.sub(&x.mul(&x)?)?;
    let rhs = block(&a.sub(&x)?, &ident, &lower, &x.sub(&a)?);
    Ok(lhs == rhs)
}

/// `x tau(C) x^{-1}`.
pub fn moment_map_image(x: &RationalMatrix, c: &RationalMatrix) -> Result<RationalMatrix> {
    let t = tau_embed_matrix(c)?;
    if x.rows() != t.rows() || !x.is_square() {
        return Err(Error::DimensionMismatch("x must be 2n x 2n".into()));
    }
    let inv = x.inverse()?;
    Ok(&(x * &t) * &inv)
}

/// `e^T_X(t)` at a rational point.
pub fn e_t_x_at(t: &[Rational]) -> RationalMatrix {
    crate::twistor::e_t_x(t.len()).eval(t)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> RationalMatrix {
    RationalMatrix::from_fn(rows, cols, |_, _| random_rational(rng, bound))
}

/// Random invertible matrix (rejection sampling).
pub fn random_invertible(rng: &mut impl Rng, n: usize, bound: i64) -> RationalMatrix {
    loop {
        let m = random_matrix(rng, n, n, bound);
        if !m.det().is_zero() {
            return m;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Companion,
    Tau,
    Shalika,
    Embedding,
}

impl std::str::FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "companion" => Ok(CheckKind::Companion),
            "tau" => Ok(CheckKind::Tau),
            "shalika" => Ok(CheckKind::Shalika),
            "embedding" => Ok(CheckKind::Embedding),
            other => Err(Error::Precondition(format!("unknown check {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: CheckKind,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub symbolic: Option<bool>,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.symbolic != Some(false)
    }
}

/// Runs one family of checks on `samples` seeded random inputs.
pub fn run_check(kind: CheckKind, n: usize, seed: u64, samples: usize) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let mut rng = seeded_rng(seed);
    let mut failures = Vec::new();
    let mut passed = 0;
    let symbolic = match kind {
        CheckKind::Companion if n <= 3 => Some(companion_conjugation_symbolic(n)?),
        CheckKind::Shalika if n <= 2 => Some(shalika_identity_symbolic(n)?),
        _ => None,
    };
    for k in 0..samples {
        let ok = match kind {
            CheckKind::Companion => {
                let c = CharPolyPoint(random_point(&mut rng, n, 9));
                companion_conjugation_check(&c).is_ok()
            }
            CheckKind::Tau => {
                let c = random_matrix(&mut rng, n, n, 5);
                let t = tau_embed_matrix(&c)?;
                CharPolyPoint::of_matrix(&t) == CharPolyPoint::of_matrix(&c).interleave()
                    && is_regular(&t) == is_regular(&c)
            }
            CheckKind::Shalika => {
                let a = random_matrix(&mut rng, n, n, 5);
                let c = random_matrix(&mut rng, n, n, 5);
                shalika_normal_form(&a, &c)?.verified && shalika_uniqueness(&a, &c)
            }
            CheckKind::Embedding => {
                let c = random_matrix(&mut rng, n, n, 5);
                let coeffs = random_point(&mut rng, n, 5);
                let g = coeffs
                    .iter()
                    .enumerate()
                    .fold(RationalMatrix::identity(n), |acc, (i, a)| {
                        &acc + &c.pow(i as u32 + 1).scale(a)
                    });
                if g.det().is_zero() {
                    true
                } else {
                    let e = centralizer_embedding(&g, &c)?;
                    let t = tau_embed_matrix(&c)?;
                    let g2 = &g * &g;
                    e.commutes_with(&t) && centralizer_embedding(&g2, &c)? == &e * &e
                }
            }
        };
        if ok {
            passed += 1;
        } else {
            failures.push(format!("sample {k}"));
        }
    }
    Ok(CheckReport {
        check: kind,
        n,
        seed,
        samples,
        symbolic,
        passed,
        failures,
    })
}

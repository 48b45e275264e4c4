//! Named, deterministic invariant checks grouped into suites. Every check is
//! exact; randomized checks draw from a ChaCha8 stream keyed by the seed.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{MultiPolynomial, QPolynomial};
use crate::bk::{bk_polynomial, bk_polynomial_direct, build_irrep};
use crate::centralizers::{
    companion_conjugation_symbolic, e_t_x_at, is_regular, kostant_section, run_check,
    CharPolyPoint, CheckKind,
};
use crate::error::{Error, Result};
use crate::gln::{weight_multiplicity, weyl_dimension};
use crate::kostka::{kostka_foulkes_charge, kostka_foulkes_lusztig, specialize_at_one};
use crate::sample::{random_point, seeded_rng};
use crate::spectral::{
    branch_psi_x, diagonal_restriction, hilbert_series_identity, shear, sheared_free_module,
    sym_generator_series, unshear, Block,
};
use crate::stalks::{stalk_table, Flavor};
use crate::twistor::{
    build_phi, cup_matrix, e_t, e_t_x, expected_char_poly, splitting_check, tau, twistor_pullback,
    upsilon, upsilon_h, upsilon_prime, EquivariantRing, RingKind,
};
use crate::weights::{dominance_leq, partitions, rho_pairing_difference, Coweight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Kostka,
    Bk,
    Stalks,
    Twistor,
    Centralizers,
    Shalika,
    Spectral,
}

impl Suite {
    pub const COMPONENTS: [Suite; 7] = [
        Suite::Kostka,
        Suite::Bk,
        Suite::Stalks,
        Suite::Twistor,
        Suite::Centralizers,
        Suite::Shalika,
        Suite::Spectral,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Kostka => "kostka",
            Suite::Bk => "bk",
            Suite::Stalks => "stalks",
            Suite::Twistor => "twistor",
            Suite::Centralizers => "centralizers",
            Suite::Shalika => "shalika",
            Suite::Spectral => "spectral",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::COMPONENTS)
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: None,
        }
    }

    pub fn from_result(name: String, r: Result<Option<String>>) -> Self {
        match r {
            Ok(None) => Check {
                name,
                passed: true,
                detail: None,
            },
            Ok(Some(why)) => Check {
                name,
                passed: false,
                detail: Some(why),
            },
            Err(e) => Check {
                name,
                passed: false,
                detail: Some(e.to_string()),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    /// Largest rank exercised; every rank `1..=n` is checked.
    pub n: usize,
    pub seed: u64,
    /// Random samples per rank for the sampled checks.
    pub samples: usize,
}

impl VerifyConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        Self {
            n,
            seed,
            samples: 20,
        }
    }
}

/// Size bound on `|lam|` for table-style checks at rank `n`.
pub fn table_size_bound(n: usize) -> i64 {
    match n {
        0..=3 => 6,
        4 => 5,
        _ => 4,
    }
}

/// Size bound on `|lam|` for the tensor-model filtration at rank `n`.
pub fn bk_size_bound(n: usize) -> i64 {
    match n {
        0..=2 => 6,
        3 => 4,
        _ => 3,
    }
}

/// First failing item of an exhaustive scan, as a failure detail.
fn first_failure<T: Sync>(
    items: &[T],
    f: impl Fn(&T) -> Result<Option<String>> + Sync,
) -> Result<Option<String>> {
    let results: Vec<Result<Option<String>>> = items.par_iter().map(&f).collect();
    for r in results {
        if let Some(why) = r? {
            return Ok(Some(why));
        }
    }
    Ok(None)
}

fn attempt(f: impl FnOnce() -> Result<Option<String>>) -> Result<Option<String>> {
    f()
}

fn fail_unless(ok: bool, why: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(why)
}

fn all_pairs(n: usize, size: i64) -> Vec<(Coweight, Coweight)> {
    let mut out = Vec::new();
    for s in 0..=size {
        let ps = partitions(s, n);
        for lam in &ps {
            for mu in &ps {
                out.push((lam.clone(), mu.clone()));
            }
        }
    }
    out
}

pub fn kostka_checks(n: usize) -> Vec<Check> {
    let size = table_size_bound(n);
    let pairs = all_pairs(n, size);
    let mut out = Vec::new();
    out.push(Check::from_result(
        format!("kostka: charge equals q-analogue (n={n}, |lam|<={size})"),
        first_failure(&pairs, |(lam, mu)| {
            let (a, b) = (
                kostka_foulkes_charge(lam, mu),
                kostka_foulkes_lusztig(lam, mu),
            );
            Ok(fail_unless(a == b, || format!("K[{lam},{mu}]: {a} vs {b}")))
        }),
    ));
    out.push(Check::from_result(
        format!("kostka: K(1) is the weight multiplicity (n={n})"),
        first_failure(&pairs, |(lam, mu)| {
            let k = kostka_foulkes_charge(lam, mu);
            Ok(fail_unless(
                specialize_at_one(&k) == weight_multiplicity(lam, mu).into(),
                || format!("K[{lam},{mu}](1) = {}", specialize_at_one(&k)),
            ))
        }),
    ));
    out.push(Check::from_result(
        format!("kostka: vanishing, unit diagonal, nonnegativity (n={n})"),
        first_failure(&pairs, |(lam, mu)| {
            let k = kostka_foulkes_charge(lam, mu);
            let ok = if lam == mu {
                k == QPolynomial::one()
            } else if dominance_leq(mu, lam)? {
                k.has_nonnegative_coefficients()
                    && rho_pairing_difference(lam, mu).is_some_and(|d| d >= 0)
            } else {
                k.is_zero()
            };
            Ok(fail_unless(ok, || format!("K[{lam},{mu}] = {k}")))
        }),
    ));
    let lams: Vec<Coweight> = (0..=8).flat_map(|s| partitions(s, n.min(4))).collect();
    out.push(Check::from_result(
        format!(
            "kostka: weight multiplicities sum to the Weyl dimension (n={})",
            n.min(4)
        ),
        first_failure(&lams, |lam| {
            let total: u64 = crate::gln::gt_patterns(lam).len() as u64;
            let by_weight: u64 = all_weights_of(lam)
                .iter()
                .map(|mu| weight_multiplicity(lam, mu))
                .sum();
            Ok(fail_unless(
                by_weight == total && weyl_dimension(lam) == total.into(),
                || format!("{lam}: {by_weight} vs {total}"),
            ))
        }),
    ));
    out
}

/// All integer vectors with the size of `lam` dominated by it, i.e. all
/// permutations of partitions below `lam`.
fn all_weights_of(lam: &Coweight) -> Vec<Coweight> {
    let mut out = Vec::new();
    for mu in partitions(lam.size(), lam.n()) {
        if !dominance_leq(&mu, lam).unwrap_or(false) {
            continue;
        }
        let mut perms: Vec<Vec<i64>> = crate::kostka::permutations_with_sign(lam.n())
            .into_iter()
            .map(|(p, _)| p.iter().map(|&i| mu.0[i]).collect())
            .collect();
        perms.sort();
        perms.dedup();
        out.extend(perms.into_iter().map(Coweight));
    }
    out
}

pub fn bk_checks(n: usize) -> Vec<Check> {
    let size = bk_size_bound(n);
    let lams: Vec<Coweight> = (0..=size).flat_map(|s| partitions(s, n)).collect();
    vec![Check::from_result(
        format!("bk: filtration polynomial equals Kostka-Foulkes (n={n}, |lam|<={size})"),
        first_failure(&lams, |lam| {
            let rep = build_irrep(lam)?;
            for mu in partitions(lam.size(), n) {
                let p = bk_polynomial(&rep, &mu)?;
                let k = kostka_foulkes_charge(lam, &mu);
                if p != k {
                    return Ok(Some(format!("P[{lam},{mu}] = {p}, K = {k}")));
                }
                if bk_polynomial_direct(&rep, &mu) != p {
                    return Ok(Some(format!("P[{lam},{mu}]: two computations disagree")));
                }
            }
            Ok(None)
        }),
    )]
}

pub fn stalks_checks(n: usize) -> Vec<Check> {
    let size = table_size_bound(n);
    let name = |s: &str| format!("stalks: {s} (n={n}, |lam|<={size})");
    let tables =
        [Flavor::Complex, Flavor::Quaternionic, Flavor::Symmetric].map(|f| stalk_table(n, size, f));
    let [c, q, s] = match tables {
        [Ok(c), Ok(q), Ok(s)] => [c, q, s],
        [a, b, c] => {
            let e = a.err().or(b.err()).or(c.err()).expect("one table failed");
            return vec![Check::from_result(name("tables"), Err(e))];
        }
    };
    let same = c.rows.len() == q.rows.len()
        && c.rows.len() == s.rows.len()
        && c.rows.iter().zip(&q.rows).zip(&s.rows).all(|((a, b), d)| {
            a.lam == b.lam
                && a.mu == b.mu
                && a.poly == b.poly
                && b.poly == d.poly
                && b.degrees == d.degrees
        });
    let diag = q
        .rows
        .iter()
        .filter(|r| r.lam == r.mu)
        .all(|r| r.degrees.values().sum::<u64>() == 1 && r.degrees.len() == 1);
    let bound = c.rows.iter().all(|r| r.degree_bound_ok());
    let dims = q.rows.iter().all(|r| r.orbit_dimension % 4 == 0);
    vec![
        Check::from_result(
            name("quaternionic and symmetric polynomials equal complex ones"),
            Ok(fail_unless(same, || "tables differ".into())),
        ),
        Check::from_result(
            name("complex degrees even, quaternionic degrees divisible by 4"),
            Ok(fail_unless(
                c.parity_ok() && q.parity_ok() && s.parity_ok(),
                || "odd stalk degree".into(),
            )),
        ),
        Check::from_result(
            name("generic stalk is one-dimensional"),
            Ok(fail_unless(diag, || "diagonal entry is not 1".into())),
        ),
        Check::from_result(
            name("degree bound <lam - mu, rho>"),
            Ok(fail_unless(bound, || "degree bound violated".into())),
        ),
        Check::from_result(
            name("quaternionic orbit dimensions divisible by 4"),
            Ok(fail_unless(dims, || "orbit dimension".into())),
        ),
    ]
}

/// `prod (class - v)` over the given fixed-point values.
fn product_relation(ring: &EquivariantRing, values: &[MultiPolynomial]) -> MultiPolynomial {
    let c = ring.class();
    values
        .iter()
        .fold(MultiPolynomial::one(ring.nvars()), |acc, v| {
            &acc * &(&c - v)
        })
}

pub fn twistor_checks(n: usize) -> Vec<Check> {
    let name = |s: &str| format!("twistor: {s} (n={n})");
    let mut out = Vec::new();
    out.push(Check::from_result(
        name("ring presentations"),
        attempt(|| {
            let full = EquivariantRing::new(n, RingKind::ComplexFull);
            let res = EquivariantRing::new(n, RingKind::ComplexRestricted);
            let quat = EquivariantRing::new(n, RingKind::Quaternionic);
            let full_rel =
                product_relation(&full, &(0..2 * n).map(|i| full.t(i)).collect::<Vec<_>>());
            let xi2 = res.class().pow(2);
            let res_rel = (0..n).fold(MultiPolynomial::one(res.nvars()), |acc, i| {
                &acc * &(&xi2 - &res.t(i).pow(2))
            });
            let quat_rel =
                product_relation(&quat, &(0..n).map(|i| quat.t(i).pow(2)).collect::<Vec<_>>());
            Ok(fail_unless(
                full.relation == full_rel && res.relation == res_rel && quat.relation == quat_rel,
                || "relation differs".into(),
            ))
        }),
    ));
    out.push(Check::from_result(
        name("pullback of eta is xi^2 and kills the relation"),
        attempt(|| {
            let quat = EquivariantRing::new(n, RingKind::Quaternionic);
            let res = EquivariantRing::new(n, RingKind::ComplexRestricted);
            let ok = twistor_pullback(&quat.class(), n)? == res.reduce(&res.class().pow(2))?
                && twistor_pullback(&quat.relation, n)?.is_zero();
            Ok(fail_unless(ok, || "pullback".into()))
        }),
    ));
    out.push(Check::from_result(
        name("localization images"),
        attempt(|| {
            let quat = EquivariantRing::new(n, RingKind::Quaternionic);
            let coeff_ring = n;
            let expected: Vec<_> = (0..n)
                .map(|i| MultiPolynomial::var(coeff_ring, i).pow(2))
                .collect();
            let res = EquivariantRing::new(n, RingKind::ComplexRestricted);
            let expected_xi: Vec<_> = (0..n)
                .map(|i| MultiPolynomial::var(coeff_ring, i))
                .chain((0..n).map(|i| -&MultiPolynomial::var(coeff_ring, i)))
                .collect();
            let ok = quat.localization_map(&quat.class())? == expected
                && res.localization_map(&res.class())? == expected_xi
                && [
                    RingKind::ComplexFull,
                    RingKind::ComplexRestricted,
                    RingKind::Quaternionic,
                ]
                .into_iter()
                .all(|k| EquivariantRing::new(n, k).localization_injective(3));
            Ok(fail_unless(ok, || "localization".into()))
        }),
    ));
    out.push(Check::from_result(
        name("cup matrices equal the bidiagonal forms"),
        attempt(|| {
            upsilon(n, true).check()?;
            upsilon_h(n).check()?;
            upsilon_prime(n).check()?;
            let ok = cup_matrix(&upsilon(n, true))? == e_t(n)
                && cup_matrix(&upsilon_prime(n))? == tau(&e_t_x(n));
            let cp = expected_char_poly(n);
            Ok(fail_unless(
                ok && e_t(n).char_poly() == cp && tau(&e_t_x(n)).char_poly() == cp,
                || "cup matrix".into(),
            ))
        }),
    ));
    out.push(Check::from_result(
        name("splitting into two free modules"),
        attempt(|| {
            Ok(fail_unless(splitting_check(n)?.holds(), || {
                "splitting".into()
            }))
        }),
    ));
    if n <= 3 {
        out.push(Check::from_result(
            name("Phi conjugates tau(e^T_X) to e^T"),
            attempt(|| {
                let phi = build_phi(n)?;
                Ok(fail_unless(
                    phi.identity_holds() && phi.det_is_unit(),
                    || "Phi".into(),
                ))
            }),
        ));
    }
    out
}

pub fn centralizer_checks(n: usize, seed: u64, samples: usize) -> Vec<Check> {
    let name = |s: &str| format!("centralizers: {s} (n={n}, seed={seed})");
    let mut out = Vec::new();
    for kind in [CheckKind::Companion, CheckKind::Tau, CheckKind::Embedding] {
        let label = match kind {
            CheckKind::Companion => "companion conjugation identity",
            CheckKind::Tau => "tau interleaves char polys and preserves regularity",
            _ => "diag(g, g) centralizes tau(C) and is multiplicative",
        };
        out.push(Check::from_result(
            name(label),
            run_check(kind, n, seed, samples).map(|r| {
                fail_unless(r.ok(), || {
                    format!("{} failures, symbolic {:?}", r.failures.len(), r.symbolic)
                })
            }),
        ));
    }
    if n <= 2 {
        out.push(Check::from_result(
            name("companion identity, symbolic"),
            companion_conjugation_symbolic(n).map(|ok| fail_unless(ok, || "symbolic".into())),
        ));
    }
    out.push(Check::from_result(
        name("companion and e^T_X(t) are regular"),
        attempt(|| {
            let mut rng = seeded_rng(seed);
            for _ in 0..samples {
                let c = CharPolyPoint(random_point(&mut rng, n, 9));
                if !is_regular(&kostant_section(&c)) {
                    return Ok(Some(format!("companion of {:?} not regular", c.0)));
                }
                let t = random_point(&mut rng, n, 9);
                let m = e_t_x_at(&t);
                let squares: Vec<_> = t.iter().map(|x| x * x).collect();
                let mut distinct = squares.clone();
                distinct.sort();
                distinct.dedup();
                if distinct.len() == n && !is_regular(&m) {
                    return Ok(Some("e^T_X(t) not regular at distinct t_i^2".into()));
                }
            }
            Ok(None)
        }),
    ));
    out
}

pub fn shalika_checks(n: usize, seed: u64, samples: usize) -> Vec<Check> {
    vec![Check::from_result(
        format!(
            "shalika: normal form C + A^2, unique{} (n={n}, seed={seed})",
            if n <= 2 { ", symbolic identity" } else { "" }
        ),
        run_check(CheckKind::Shalika, n, seed, samples).map(|r| {
            fail_unless(r.ok(), || {
                format!("{} failures, symbolic {:?}", r.failures.len(), r.symbolic)
            })
        }),
    )]
}

pub fn spectral_checks(n: usize) -> Vec<Check> {
    let name = |s: &str| format!("spectral: {s} (n={n})");
    let mut out = Vec::new();
    out.push(Check::from_result(
        name("sheared generator degrees {0, 2, 2, 4}"),
        attempt(|| {
            let m = sheared_free_module(&Coweight::zero(2 * n))?;
            let mut degs: Vec<(Block, i64)> = m
                .generators
                .iter()
                .flat_map(|(b, s)| {
                    s.entries()
                        .map(move |((i, _), _)| (*b, i))
                        .collect::<Vec<_>>()
                })
                .collect();
            degs.sort();
            let g = sym_generator_series(n);
            let round_trip =
                unshear(&shear(&g)?) == g && shear(&g)?.total_dimension() == g.total_dimension();
            Ok(fail_unless(
                degs == [(Block::A, 2), (Block::B, 0), (Block::C, 4), (Block::D, 2)] && round_trip,
                || format!("{degs:?}"),
            ))
        }),
    ));
    out.push(Check::from_result(
        name("nearby cycles of omega_1 and det"),
        attempt(|| {
            let mut omega = vec![0; 2 * n];
            omega[0] = 1;
            let mut std = vec![0; n];
            std[0] = 1;
            let d = branch_psi_x(&Coweight(omega))?;
            let got: Vec<_> = d
                .terms
                .iter()
                .map(|t| (t.lam.clone(), t.j, t.mult.clone()))
                .collect();
            let want = vec![
                (Coweight(std.clone()), 1, 1.into()),
                (Coweight(std), -1, 1.into()),
            ];
            let det = branch_psi_x(&Coweight(vec![1; 2 * n]))?;
            let det_ok = det.terms.len() == 1
                && det.terms[0].lam == Coweight(vec![2; n])
                && det.terms[0].j == 0
                && det.terms[0].mult.is_one();
            Ok(fail_unless(got == want && det_ok, || format!("{got:?}")))
        }),
    ));
    if n <= 2 {
        let lams: Vec<Coweight> = (0..=4).flat_map(|s| partitions(s, 2 * n)).collect();
        out.push(Check::from_result(
            name("free-module Hilbert series identity, |Lam|<=4"),
            first_failure(&lams, |lam| {
                let (lhs, rhs) = hilbert_series_identity(lam, 16)?;
                Ok(fail_unless(lhs == rhs, || format!("{lam}: {lhs} vs {rhs}")))
            }),
        ));
        out.push(Check::from_result(
            name("branching at h = 1 is the diagonal restriction"),
            first_failure(&lams, |lam| {
                let d = branch_psi_x(lam)?;
                Ok(fail_unless(
                    d.diagonal_multiplicities() == diagonal_restriction(lam)?,
                    || lam.to_string(),
                ))
            }),
        ));
    }
    out
}

/// Runs one suite (or all) for every rank `1..=config.n`. The output order
/// depends only on the configuration.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<Vec<Check>> {
    if config.n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::COMPONENTS.to_vec(),
        s => vec![s],
    };
    let mut out = Vec::new();
    for s in suites {
        for n in 1..=config.n {
            out.extend(match s {
                Suite::Kostka => kostka_checks(n),
                Suite::Bk => bk_checks(n),
                Suite::Stalks => stalks_checks(n),
                Suite::Twistor => twistor_checks(n),
                Suite::Centralizers => centralizer_checks(n, config.seed, config.samples),
                Suite::Shalika => shalika_checks(n, config.seed, config.samples),
                Suite::Spectral => spectral_checks(n),
                Suite::All => unreachable!(),
            });
        }
    }
    Ok(out)
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use satake_core::algebra::QPolynomial;
use satake_core::bk::{bk_filtration, bk_polynomial, build_irrep};
use satake_core::centralizers::{run_check, CheckKind};
use satake_core::gln::weight_multiplicity;
use satake_core::kostka::{kostka_foulkes_charge, kostka_foulkes_lusztig, specialize_at_one};
use satake_core::spectral::{
    branch_psi_x, decomposition_well_formed, diagonal_restriction, hilbert_series_identity,
    phi_on_free_module, shear, unshear, BigradedSeries,
};
use satake_core::stalks::{stalk_table, Flavor};
use satake_core::twistor::twistor_report;
use satake_core::verify::{all_passed, run_suite, Check, Suite, VerifyConfig};
use satake_core::weights::{dominance_leq, partitions, Coweight};

use crate::{CliError, Format, Result};

/// One subcommand with its arguments, as echoed in the envelope and hashed
/// for the cache.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    Kostka {
        n: usize,
        lam: Coweight,
        mu: Coweight,
    },
    KostkaTable {
        n: usize,
        size: i64,
    },
    Bk {
        n: usize,
        lam: Coweight,
        mu: Option<Coweight>,
    },
    Stalks {
        n: usize,
        size: i64,
        flavor: Flavor,
    },
    Twistor {
        n: usize,
    },
    Centralizers {
        n: usize,
        check: CheckKind,
        seed: u64,
        samples: usize,
    },
    Branch {
        n: usize,
        big_lam: Coweight,
    },
    Shear {
        input: BigradedSeries,
        inverse: bool,
    },
    Verify {
        n: usize,
        suite: Suite,
        seed: u64,
        samples: usize,
    },
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_len(what: &str, w: &Coweight, len: usize) -> Result<()> {
    if w.n() != len {
        return Err(usage(format!(
            "--{what} needs {len} entries, got {}",
            w.n()
        )));
    }
    Ok(())
}

fn check_dominant(what: &str, w: &Coweight) -> Result<()> {
    if !w.is_dominant() {
        return Err(usage(format!("--{what} {w} is not weakly decreasing")));
    }
    Ok(())
}

/// Dominant coweights of the same size as `lam` lying below it.
fn weights_below(lam: &Coweight) -> Vec<Coweight> {
    let k = -lam.0.iter().copied().min().unwrap_or(0).min(0);
    let top = lam.twist(k);
    partitions(top.size(), lam.n())
        .into_iter()
        .filter(|mu| dominance_leq(mu, &top).unwrap_or(false))
        .map(|mu| mu.twist(-k))
        .collect()
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Kostka { .. } => "kostka",
            Command::KostkaTable { .. } => "kostka-table",
            Command::Bk { .. } => "bk",
            Command::Stalks { .. } => "stalks",
            Command::Twistor { .. } => "twistor",
            Command::Centralizers { .. } => "centralizers",
            Command::Branch { .. } => "branch",
            Command::Shear { .. } => "shear",
            Command::Verify { .. } => "verify",
        }
    }

    /// Verification runs always print the full envelope.
    pub fn always_enveloped(&self) -> bool {
        matches!(self, Command::Verify { .. })
    }

    pub fn validate(&self, format: Format) -> Result<()> {
        let n = match self {
            Command::Shear { .. } => 1,
            Command::Kostka { n, .. }
            | Command::KostkaTable { n, .. }
            | Command::Bk { n, .. }
            | Command::Stalks { n, .. }
            | Command::Twistor { n }
            | Command::Centralizers { n, .. }
            | Command::Branch { n, .. }
            | Command::Verify { n, .. } => *n,
        };
        if n == 0 {
            return Err(usage("--n must be positive"));
        }
        match self {
            Command::Kostka { n, lam, mu } => {
                check_len("lam", lam, *n)?;
                check_len("mu", mu, *n)?;
                check_dominant("lam", lam)?;
                check_dominant("mu", mu)?;
            }
            Command::KostkaTable { size, .. } | Command::Stalks { size, .. } if *size < 1 => {
                return Err(usage("--size must be positive"));
            }
            Command::Bk { n, lam, mu } => {
                check_len("lam", lam, *n)?;
                check_dominant("lam", lam)?;
                if let Some(mu) = mu {
                    check_len("mu", mu, *n)?;
                }
            }
            Command::Centralizers { samples, .. } | Command::Verify { samples, .. }
                if *samples == 0 =>
            {
                return Err(usage("--samples must be positive"));
            }
            Command::Branch { n, big_lam } => {
                check_len("Lam", big_lam, 2 * n)?;
                check_dominant("Lam", big_lam)?;
            }
            _ => {}
        }
        if format != Format::Json
            && matches!(self, Command::Twistor { .. } | Command::Centralizers { .. })
        {
            return Err(usage(format!(
                "{} only supports --format json",
                self.name()
            )));
        }
        Ok(())
    }

    /// Payload and checks; pure in the arguments.
    pub fn execute(&self) -> Result<(Value, Vec<Check>)> {
        match self {
            Command::Kostka { lam, mu, .. } => {
                let k = kostka_foulkes_charge(lam, mu);
                let agree = k == kostka_foulkes_lusztig(lam, mu);
                Ok((
                    json!({ "poly": k }),
                    vec![Check::new("charge equals q-analogue", agree)],
                ))
            }
            Command::KostkaTable { n, size } => kostka_table(*n, *size),
            Command::Bk { lam, mu, .. } => bk(lam, mu.as_ref()),
            Command::Stalks { n, size, flavor } => {
                let t = stalk_table(*n, *size, *flavor)?;
                let diag = t
                    .rows
                    .iter()
                    .filter(|r| r.lam == r.mu)
                    .all(|r| r.poly == QPolynomial::one());
                let checks = vec![
                    Check::new("parity vanishing", t.parity_ok()),
                    Check::new("diagonal entries are 1", diag),
                    Check::new("degree bound", t.rows.iter().all(|r| r.degree_bound_ok())),
                ];
                Ok((serde_json::to_value(&t)?, checks))
            }
            Command::Twistor { n } => {
                let r = twistor_report(*n)?;
                let checks = r
                    .checks
                    .iter()
                    .map(|(name, ok)| Check::new(name.clone(), *ok))
                    .collect();
                Ok((serde_json::to_value(&r)?, checks))
            }
            Command::Centralizers {
                n,
                check,
                seed,
                samples,
            } => {
                let r = run_check(*check, *n, *seed, *samples)?;
                let c = Check {
                    name: format!("{check:?} identity").to_lowercase(),
                    passed: r.ok(),
                    detail: (!r.ok())
                        .then(|| format!("{} of {} samples failed", r.failures.len(), r.samples)),
                };
                Ok((serde_json::to_value(&r)?, vec![c]))
            }
            Command::Branch { big_lam, .. } => {
                let d = branch_psi_x(big_lam)?;
                let free = phi_on_free_module(big_lam)?;
                let (lhs, rhs) = hilbert_series_identity(big_lam, 16)?;
                let checks = vec![
                    Check::new("decomposition well formed", decomposition_well_formed(&d)),
                    Check::new(
                        "h = 1 gives the diagonal restriction",
                        d.diagonal_multiplicities() == diagonal_restriction(big_lam)?,
                    ),
                    Check::new("free-module Hilbert series identity", lhs == rhs),
                ];
                let payload = json!({
                    "big_lam": big_lam,
                    "n": d.n,
                    "terms": d.terms,
                    "free_module": free.summands,
                });
                Ok((payload, checks))
            }
            Command::Shear { input, inverse } => {
                let out = if *inverse {
                    unshear(input)
                } else {
                    shear(input)?
                };
                let back = if *inverse {
                    shear(&out)?
                } else {
                    unshear(&out)
                };
                let checks = vec![
                    Check::new(
                        "dimension preserved",
                        out.total_dimension() == input.total_dimension(),
                    ),
                    Check::new("invertible", &back == input),
                ];
                Ok((json!({ "series": out }), checks))
            }
            Command::Verify {
                n,
                suite,
                seed,
                samples,
            } => {
                let checks = run_suite(
                    *suite,
                    &VerifyConfig {
                        n: *n,
                        seed: *seed,
                        samples: *samples,
                    },
                )?;
                let passed = checks.iter().filter(|c| c.passed).count();
                let payload = json!({
                    "suite": suite,
                    "passed": passed,
                    "total": checks.len(),
                    "all_passed": all_passed(&checks),
                });
                Ok((payload, checks))
            }
        }
    }
}

#[derive(Serialize)]
struct KostkaRow {
    lam: Coweight,
    mu: Coweight,
    poly: QPolynomial,
}

fn kostka_table(n: usize, size: i64) -> Result<(Value, Vec<Check>)> {
    let mut pairs = Vec::new();
    for s in 0..=size {
        let ps = partitions(s, n);
        for lam in &ps {
            for mu in &ps {
                if dominance_leq(mu, lam)? {
                    pairs.push((lam.clone(), mu.clone()));
                }
            }
        }
    }
    let rows: Vec<(KostkaRow, bool, bool)> = pairs
        .into_par_iter()
        .map(|(lam, mu)| {
            let poly = kostka_foulkes_charge(&lam, &mu);
            let agree = poly == kostka_foulkes_lusztig(&lam, &mu);
            let spec = specialize_at_one(&poly) == weight_multiplicity(&lam, &mu).into();
            (KostkaRow { lam, mu, poly }, agree, spec)
        })
        .collect();
    let checks = vec![
        Check::new("charge equals q-analogue", rows.iter().all(|r| r.1)),
        Check::new("K(1) is the weight multiplicity", rows.iter().all(|r| r.2)),
    ];
    let rows: Vec<KostkaRow> = rows.into_iter().map(|r| r.0).collect();
    Ok((json!({ "n": n, "size": size, "rows": rows }), checks))
}

#[derive(Serialize)]
struct BkRow {
    mu: Coweight,
    poly: QPolynomial,
    filtration: Vec<usize>,
}

fn bk(lam: &Coweight, mu: Option<&Coweight>) -> Result<(Value, Vec<Check>)> {
    let rep = build_irrep(lam)?;
    let mus = match mu {
        Some(m) => vec![m.clone()],
        None => weights_below(lam),
    };
    let mut rows = Vec::new();
    let mut agree = true;
    let mut spec = true;
    for mu in mus {
        let poly = bk_polynomial(&rep, &mu)?;
        if mu.is_dominant() {
            agree &= poly == kostka_foulkes_charge(lam, &mu);
        }
        spec &= specialize_at_one(&poly) == weight_multiplicity(lam, &mu).into();
        rows.push(BkRow {
            filtration: bk_filtration(&rep, &mu)?,
            mu,
            poly,
        });
    }
    let checks = vec![
        Check::new("filtration polynomial equals Kostka-Foulkes", agree),
        Check::new("P(1) is the weight multiplicity", spec),
    ];
    Ok((
        json!({ "lam": lam, "dimension": rep.dimension(), "rows": rows }),
        checks,
    ))
}

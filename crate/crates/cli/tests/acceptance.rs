//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::Command as Process;
use std::time::Instant;

use satake_core::algebra::{rat, MultiPolynomial, PolyMatrix, RationalMatrix};
use satake_core::bk::{bk_polynomial, build_irrep};
use satake_core::centralizers::{
    centralizer_embedding, companion_conjugation_check, companion_conjugation_symbolic, e_t_x_at,
    is_regular, kostant_section, random_invertible, random_matrix, run_check,
    shalika_identity_symbolic, tau_embed_matrix, CharPolyPoint, CheckKind,
};
use satake_core::gln::weight_multiplicity;
use satake_core::kostka::{kostka_foulkes_charge, kostka_foulkes_lusztig, specialize_at_one};
use satake_core::sample::{random_point, seeded_rng};
use satake_core::stalks::{stalk_table, Flavor};
use satake_core::twistor::{build_phi, tau};
use satake_core::verify::{spectral_checks, twistor_checks, Check};
use satake_core::weights::{partitions, Coweight};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn require(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn checks_pass(checks: Vec<Check>) -> Result<usize, String> {
    match checks.iter().find(|c| !c.passed) {
        Some(c) => Err(format!(
            "{}: {}",
            c.name,
            c.detail.clone().unwrap_or_default()
        )),
        None => Ok(checks.len()),
    }
}

fn pairs(n: usize, size: i64) -> Vec<(Coweight, Coweight)> {
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

fn kostka_oracles() -> Outcome {
    let mut count = 0;
    for (n, size) in [(1, 6), (2, 6), (3, 6), (4, 5)] {
        for (lam, mu) in pairs(n, size) {
            let k = kostka_foulkes_charge(&lam, &mu);
            require(k == kostka_foulkes_lusztig(&lam, &mu), || {
                format!("K[{lam},{mu}] oracles differ")
            })?;
            require(
                specialize_at_one(&k) == weight_multiplicity(&lam, &mu).into(),
                || format!("K[{lam},{mu}](1) is not the weight multiplicity"),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} pairs"))
}

fn brylinski_kostant() -> Outcome {
    let mut count = 0;
    for (n, size) in [(1, 4), (2, 6), (3, 4)] {
        for s in 0..=size {
            for lam in partitions(s, n) {
                let rep = build_irrep(&lam).map_err(|e| e.to_string())?;
                for mu in partitions(s, n) {
                    let p = bk_polynomial(&rep, &mu).map_err(|e| e.to_string())?;
                    require(p == kostka_foulkes_charge(&lam, &mu), || {
                        format!("P[{lam},{mu}] = {p}")
                    })?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} pairs"))
}

fn stalk_tables() -> Outcome {
    let mut rows = 0;
    for (n, size) in [(1, 6), (2, 6), (3, 6), (4, 5)] {
        let [c, q, s] = [Flavor::Complex, Flavor::Quaternionic, Flavor::Symmetric]
            .map(|f| stalk_table(n, size, f).map_err(|e| e.to_string()));
        let (c, q, s) = (c?, q?, s?);
        require(
            c.rows.len() == q.rows.len() && q.rows.len() == s.rows.len(),
            || "row counts differ".into(),
        )?;
        for ((a, b), d) in c.rows.iter().zip(&q.rows).zip(&s.rows) {
            require(
                a.poly == b.poly && b.poly == d.poly && b.degrees == d.degrees,
                || format!("({},{}) polynomials differ", a.lam, a.mu),
            )?;
            let shift = b.orbit_dimension / 2;
            require(b.degrees.keys().all(|deg| (deg + shift) % 4 == 0), || {
                format!("({},{}) has a degree off 4Z after the shift", b.lam, b.mu)
            })?;
            if b.lam == b.mu {
                require(
                    b.degrees.values().copied().collect::<Vec<_>>() == [1],
                    || format!("diagonal {}", b.lam),
                )?;
            }
        }
        rows += c.rows.len();
    }
    Ok(format!("{rows} rows per flavor"))
}

fn twistor_suite() -> Outcome {
    let mut total = 0;
    for n in 1..=4 {
        total += checks_pass(twistor_checks(n))?;
    }
    Ok(format!("{total} checks, n<=4"))
}

fn phi_identity() -> Outcome {
    for n in 1..=3 {
        let phi = build_phi(n).map_err(|e| e.to_string())?;
        require(phi.identity_holds() && phi.det_is_unit(), || {
            format!("n={n}")
        })?;
    }
    Ok("n<=3".into())
}

fn companion_identity() -> Outcome {
    for n in 1..=2 {
        require(
            companion_conjugation_symbolic(n).map_err(|e| e.to_string())?,
            || format!("symbolic n={n}"),
        )?;
    }
    let mut rng = seeded_rng(6);
    for n in 3..=5 {
        for k in 0..50 {
            let c = CharPolyPoint(random_point(&mut rng, n, 9));
            companion_conjugation_check(&c).map_err(|e| format!("n={n} sample {k}: {e}"))?;
        }
    }
    Ok("symbolic n<=2, 150 points".into())
}

fn centralizer_suite() -> Outcome {
    let mut rng = seeded_rng(7);
    for n in 1..=3 {
        for k in 0..100 {
            let companion = kostant_section(&CharPolyPoint(random_point(&mut rng, n, 9)));
            require(is_regular(&companion), || {
                format!("companion n={n} sample {k}")
            })?;
            let t = random_point(&mut rng, n, 9);
            let mut squares: Vec<_> = t.iter().map(|x| x * x).collect();
            squares.sort();
            squares.dedup();
            require(squares.len() < n || is_regular(&e_t_x_at(&t)), || {
                format!("e^T_X n={n} sample {k}")
            })?;
            // half conjugated 0/1 diagonals (often non-regular), half random
            let c = if k % 2 == 0 {
                let s = random_invertible(&mut rng, n, 4);
                let d = RationalMatrix::from_fn(n, n, |i, j| {
                    if i == j {
                        rat(((i + k) % 2) as i64)
                    } else {
                        rat(0)
                    }
                });
                &(&s * &d) * &s.inverse().map_err(|e| e.to_string())?
            } else {
                random_matrix(&mut rng, n, n, 5)
            };
            let tc = tau_embed_matrix(&c).map_err(|e| e.to_string())?;
            require(is_regular(&tc) == is_regular(&c), || {
                format!("tau regularity n={n} sample {k}")
            })?;
            if is_regular(&c) {
                let g = &RationalMatrix::identity(n) + &c.scale(&rat(2));
                if g.det() != rat(0) {
                    let e = centralizer_embedding(&g, &c).map_err(|e| e.to_string())?;
                    let e2 = centralizer_embedding(&(&g * &g), &c).map_err(|e| e.to_string())?;
                    require(e.commutes_with(&tc) && e2 == &e * &e, || {
                        format!("embedding n={n} sample {k}")
                    })?;
                }
            }
        }
        let r = run_check(CheckKind::Embedding, n, 8, 100).map_err(|e| e.to_string())?;
        require(r.ok(), || format!("embedding runner n={n}"))?;
        let nv = n * n;
        let c = PolyMatrix::from_fn(n, nv, |i, j| MultiPolynomial::var(nv, i * n + j));
        let expected: Vec<_> = c
            .char_poly_faddeev()
            .into_iter()
            .flat_map(|ci| [MultiPolynomial::zero(nv), ci])
            .collect();
        require(tau(&c).char_poly_faddeev() == expected, || {
            format!("interleaved char poly n={n}")
        })?;
    }
    Ok("100 samples per n<=3".into())
}

fn shalika() -> Outcome {
    for n in 1..=2 {
        require(
            shalika_identity_symbolic(n).map_err(|e| e.to_string())?,
            || format!("symbolic n={n}"),
        )?;
    }
    for n in 1..=3 {
        let r = run_check(CheckKind::Shalika, n, 9, 100).map_err(|e| e.to_string())?;
        require(r.ok() && r.passed == 100, || {
            format!("n={n}: {:?}", r.failures)
        })?;
    }
    Ok("symbolic n<=2, 100 samples for n<=3".into())
}

fn spectral() -> Outcome {
    let mut total = 0;
    for n in 1..=3 {
        total += checks_pass(spectral_checks(n))?;
    }
    Ok(format!("{total} checks"))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_satake-kit");
    let cache = std::env::temp_dir().join(format!("satake-kit-acceptance-{}", std::process::id()));
    let runs: Vec<(Vec<u8>, bool)> = [
        vec!["--no-cache"],
        vec!["--no-cache"],
        vec!["--cache-dir"],
        vec!["--cache-dir"],
    ]
    .into_iter()
    .map(|mut extra| {
        if extra[0] == "--cache-dir" {
            extra.push(cache.to_str().expect("utf-8 temp dir"));
        }
        let out = Process::new(bin)
            .args(["verify", "--suite", "all", "--seed", "7"])
            .args(&extra)
            .env_remove("SATAKE_KIT_CACHE")
            .output()
            .expect("run satake-kit");
        (out.stdout, out.status.success())
    })
    .collect();
    let _ = std::fs::remove_dir_all(&cache);
    require(runs.iter().all(|r| r.1), || "a run exited nonzero".into())?;
    require(runs.iter().all(|r| r.0 == runs[0].0), || {
        "outputs differ".into()
    })?;
    Ok(format!("4 runs, {} identical bytes", runs[0].0.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Kostka-Foulkes oracle equivalence", kostka_oracles),
        (
            "Brylinski-Kostant filtration equals Kostka-Foulkes",
            brylinski_kostant,
        ),
        ("doubled-degree stalk tables", stalk_tables),
        ("twistor / equivariant suite", twistor_suite),
        ("Phi conjugation identity", phi_identity),
        ("companion matrix identity", companion_identity),
        ("centralizer suite", centralizer_suite),
        ("Shalika normal form", shalika),
        ("spectral suite", spectral),
        ("deterministic verify envelopes", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(info) => println!("criterion {:>2} PASS  {name} ({info}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

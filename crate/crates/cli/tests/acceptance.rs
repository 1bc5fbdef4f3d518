//! The twelve acceptance criteria, one line each. Exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::thread;
use std::time::{Duration, Instant};

use simsun_core::bijection::{phi_forward, psi_forward};
use simsun_core::registry::verify_identity;
use simsun_core::{Engine, Family, Permutation, Poly};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ids(list: &[(&str, usize)]) -> Verdict {
    let engine = Engine::new();
    for &(id, n) in list {
        let r = verify_identity(&engine, id, n).map_err(|e| format!("{id}: {e}"))?;
        if !r.passed() {
            return Err(format!("{id}: {}", r.counterexample.unwrap_or_default()));
        }
    }
    let names: Vec<String> = list.iter().map(|(id, n)| format!("{id}@{n}")).collect();
    Ok(names.join(" "))
}

fn poly(s: &str) -> Poly {
    s.parse().expect("literal polynomial")
}

fn literal_rows() -> Verdict {
    let start = Instant::now();
    let engine = Engine::new();
    let rows: &[(Family, &[&str])] = &[
        (
            Family::S,
            &[
                "1",
                "1 + x",
                "1 + 4*x",
                "1 + 11*x + 4*x^2",
                "1 + 26*x + 34*x^2",
            ],
        ),
        (
            Family::P,
            &["1", "2", "3 + 2*x", "4 + 12*x", "5 + 44*x + 12*x^2"],
        ),
        (Family::Pplus, &["1", "1", "2", "3 + 4*x", "4 + 22*x"]),
        (
            Family::Pminus,
            &["1", "1", "1 + 2*x", "1 + 8*x", "1 + 22*x + 12*x^2"],
        ),
        (
            Family::T,
            &[
                "x",
                "x + x^2",
                "x + 2*x^2 + 2*x^3",
                "x + 3*x^2 + 8*x^3 + 4*x^4",
            ],
        ),
    ];
    for (family, expected) in rows {
        let t = engine
            .triangle(*family, expected.len())
            .map_err(|e| e.to_string())?;
        for (i, want) in expected.iter().enumerate() {
            let n = i + 1;
            let got = t.row(n).ok_or(format!("{family}_{n} missing"))?;
            if *got != poly(want) {
                return Err(format!("{family}_{n} = {got}, expected {want}"));
            }
        }
    }
    let w = engine.triangle(Family::W, 3).map_err(|e| e.to_string())?;
    if w.row(3) != Some(&poly("4 + 2*x")) {
        return Err(format!("W_3 = {:?}", w.row(3).map(ToString::to_string)));
    }
    let what = engine
        .triangle(Family::What, 1)
        .map_err(|e| e.to_string())?;
    for n in 0..=1 {
        if what.row(n) != Some(&Poly::one()) {
            return Err(format!("What_{n} != 1"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "S_1..5 P_1..5 P+-_1..5 T_1..4 W_3 What_0,1 in {elapsed:?}"
    ))
}

fn phi_criterion() -> Verdict {
    let p: Permutation = "3412".parse().unwrap();
    let block = phi_forward(&p).map_err(|e| e.to_string())?;
    if block.image.len() != 8 {
        return Err(format!("block of 3412 has {} members", block.image.len()));
    }
    ids(&[("phi", 8), ("I-eq9", 12)])
}

fn psi_criterion() -> Verdict {
    let p: Permutation = "3412".parse().unwrap();
    let c = psi_forward(&p).map_err(|e| e.to_string())?;
    if c.to_string() != "(1,4,3)(2)" {
        return Err(format!("3412 maps to {c}"));
    }
    ids(&[("psi", 9), ("I-des-exc", 10)])
}

fn run_cli(args: &[&str]) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_simsun"))
        .args(args)
        .output()
        .ok()?
        .status
        .code()
}

fn verify_all_and_mutations() -> Verdict {
    let code = run_cli(&["verify", "all"]);
    if code != Some(0) {
        return Err(format!("verify all exited {code:?}"));
    }
    for f in Family::RECURRENT {
        let code = run_cli(&["verify", "all", "--n-max", "6", "--mutate", f.name()]);
        if code != Some(1) {
            return Err(format!("mutating {f} exited {code:?}"));
        }
    }
    Ok(format!(
        "verify all exits 0; {} mutated recurrences exit 1",
        Family::RECURRENT.len()
    ))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("literal rows", literal_rows),
        ("enumeration matches recurrence", || {
            ids(&[
                ("I-enum-S", 12),
                ("I-enum-T", 12),
                ("I-enum-P", 12),
                ("I-enum-Sxq", 11),
                ("I-enum-W", 10),
                ("I-enum-What", 10),
                ("I-enum-R", 10),
            ])
        }),
        ("recognizers match generators", || {
            ids(&[("I-filter-gen", 9)])
        }),
        ("cardinalities", || ids(&[("I-card", 10)])),
        ("phi", phi_criterion),
        ("psi", psi_criterion),
        ("polynomial identities", || {
            ids(&[
                ("I-conv5", 12),
                ("I-eq8", 12),
                ("I-lemma2", 12),
                ("I-eq20", 12),
                ("I-pn0", 12),
                ("I-spt", 12),
                ("I-eq11", 12),
                ("I-tformula", 12),
                ("I-corner", 12),
                ("I-sundaram", 12),
                ("I-euler", 10),
            ])
        }),
        ("Stirling reconstruction", || ids(&[("I-stirling", 15)])),
        ("series", || {
            ids(&[
                ("coeff-match-Sxz", 12),
                ("coeff-match-What", 12),
                ("S-eq-What-squared", 12),
                ("pde21", 10),
                ("coeff-match-Sxq", 10),
                ("cud", 9),
                ("coeff-match-springer", 8),
                ("trivar-egf", 9),
            ])
        }),
        ("equidistributions", || {
            ids(&[("I-cud", 9), ("I-sxq-minus1", 20)])
        }),
        ("roots", || {
            ids(&[
                ("rz", 25),
                ("lemma-chow", 20),
                ("theorem-interlace", 20),
                ("corollary-sxq", 15),
            ])
        }),
        (
            "verify all and mutation smoke test",
            verify_all_and_mutations,
        ),
    ];

    let results: Vec<(Verdict, Duration)> = thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, check)| {
                s.spawn(move || {
                    let start = Instant::now();
                    (check(), start.elapsed())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| (Err("panicked".into()), Duration::ZERO))
            })
            .collect()
    });

    let mut failed = 0;
    for (i, ((name, _), (verdict, elapsed))) in criteria.iter().zip(&results).enumerate() {
        match verdict {
            Ok(detail) => println!(
                "criterion {:>2} PASS {name} ({elapsed:.1?}): {detail}",
                i + 1
            ),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({elapsed:.1?}): {msg}", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

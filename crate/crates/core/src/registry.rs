//! Every checkable identity under one id, with its default and maximal range.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bijection::{verify_phi, verify_psi};
use crate::error::{Error, Result};
use crate::identities::{closed_form, mobius_compose, s_from_stirling, ClosedForm};
use crate::perm::{count_alternating, enumerate_permutations, is_alternating, Permutation};
use crate::poly::{binomial, rat, Poly, Rational, Var};
use crate::report::{expect_eq, IdentityReport};
use crate::rootcheck::verify_roots;
use crate::series::verify_series;
use crate::simsun::{
    distribution, for_each_in_class, gen_simsun_first, gen_simsun_second, is_simsun_first,
    is_simsun_second, Class, Stat,
};
use crate::triangle::{Engine, Family, Triangle};

/// What backs an identity check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    /// Polynomial identities between triangles.
    Polynomial,
    /// Triangles against brute-force enumeration.
    Enumeration,
    /// Truncated generating functions; `n` is the series order.
    Series,
    Bijection,
    Roots,
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub id: &'static str,
    pub kind: Kind,
    pub min_n: usize,
    pub default_n_max: usize,
    pub max_n: usize,
    pub summary: &'static str,
}

const fn entry(
    id: &'static str,
    kind: Kind,
    min_n: usize,
    default_n_max: usize,
    max_n: usize,
    summary: &'static str,
) -> Entry {
    Entry {
        id,
        kind,
        min_n,
        default_n_max,
        max_n,
        summary,
    }
}

use Kind::*;

pub const ENTRIES: &[Entry] = &[
    entry(
        "I-rows",
        Polynomial,
        0,
        12,
        40,
        "rows are nonnegative integers within degree bounds",
    ),
    entry(
        "I-conv5",
        Polynomial,
        0,
        12,
        40,
        "S_n = 2^-n sum C(n,k) What_k(2x) What_{n-k}(2x)",
    ),
    entry("I-eq9", Polynomial, 0, 12, 40, "W(n+1,k) = 2^(n-k) S(n,k)"),
    entry(
        "I-eq8",
        Polynomial,
        2,
        12,
        40,
        "R_n from W_n and from S_{n-1} by a Mobius substitution",
    ),
    entry(
        "I-lemma2",
        Polynomial,
        1,
        12,
        40,
        "P, P+, P- rows from S_n, coefficientwise and as polynomials",
    ),
    entry(
        "I-eq20",
        Polynomial,
        1,
        12,
        40,
        "(n-k) P(n+1,k) = (k+1)(n-k+1) P(n,k) + (n-2k+1)(n-k) P(n,k-1)",
    ),
    entry(
        "I-pn0",
        Polynomial,
        1,
        12,
        40,
        "P(n,0) = n and P(n,1) = (n-1)(2^(n-1) - n)",
    ),
    entry(
        "I-spt",
        Polynomial,
        0,
        12,
        40,
        "S(n,k) and P(n,k) as sums of two T coefficients",
    ),
    entry(
        "I-eq11",
        Polynomial,
        1,
        12,
        40,
        "(1+x) T_n = x S_n(x^2) + x^2 P_n(x^2)",
    ),
    entry("I-tformula", Polynomial, 0, 12, 40, "T_{n+1} from S_n"),
    entry("I-sundaram", Polynomial, 0, 12, 40, "a_{k+1}(n+2) = S(n,k)"),
    entry(
        "I-stirling",
        Polynomial,
        1,
        15,
        40,
        "S_n rebuilt from Stirling numbers with exact division",
    ),
    entry(
        "I-sxq-minus1",
        Polynomial,
        1,
        20,
        40,
        "closed form of S_n(x,-1)",
    ),
    entry("I-sxq-q1", Polynomial, 0, 12, 40, "S_n(x,1) = S_n(x)"),
    entry(
        "I-corner",
        Enumeration,
        1,
        12,
        13,
        "S(2m,m) = T(2m,2m) and P(2m+1,m) = T(2m+1,2m+1) count alternating simsun permutations",
    ),
    entry(
        "I-euler",
        Enumeration,
        0,
        10,
        12,
        "E_{n+1} = 2^-n sum C(n,k) What_k(2) What_{n-k}(2)",
    ),
    entry(
        "I-D",
        Enumeration,
        1,
        12,
        13,
        "D_n = x S_{n-1} and D_n(1) = E_n",
    ),
    entry(
        "I-card",
        Enumeration,
        0,
        10,
        12,
        "|RS_n| = |SS_n| = S_n(1) = E_{n+1}",
    ),
    entry("I-enum-S", Enumeration, 0, 12, 13, "descents over RS_n"),
    entry("I-enum-T", Enumeration, 0, 12, 13, "up-down runs over RS_n"),
    entry(
        "I-enum-P",
        Enumeration,
        1,
        12,
        13,
        "interior peaks over RS_n, RS+_n, RS-_n",
    ),
    entry("I-enum-Sxq", Enumeration, 0, 11, 12, "(exc, cyc) over SS_n"),
    entry(
        "I-trivar",
        Enumeration,
        0,
        10,
        12,
        "(exc, fix, cyc) over SS_n against the binomial sum",
    ),
    entry(
        "I-enum-W",
        Enumeration,
        1,
        10,
        11,
        "interior peaks over all permutations",
    ),
    entry(
        "I-enum-What",
        Enumeration,
        0,
        10,
        11,
        "left peaks over all permutations",
    ),
    entry(
        "I-enum-R",
        Enumeration,
        1,
        10,
        11,
        "alternating runs over all permutations",
    ),
    entry(
        "I-des-exc",
        Enumeration,
        0,
        10,
        12,
        "des over RS_n and exc over SS_n agree",
    ),
    entry(
        "I-cud",
        Enumeration,
        0,
        9,
        11,
        "cycles over SS_n and over cycle-up-down permutations agree",
    ),
    entry(
        "I-filter-gen",
        Enumeration,
        0,
        9,
        10,
        "recognizers agree with the insertion generators",
    ),
    entry(
        "S-eq-What-squared",
        Series,
        0,
        12,
        24,
        "S(x,z) = What(2x,z/2)^2",
    ),
    entry(
        "coeff-match-Sxz",
        Series,
        0,
        12,
        24,
        "S(x,z) coefficients against the S triangle",
    ),
    entry(
        "coeff-match-What",
        Series,
        0,
        12,
        24,
        "What(x,z) coefficients against the What triangle",
    ),
    entry(
        "coeff-match-Sxq",
        Series,
        0,
        10,
        24,
        "S(x,z)^q coefficients against the S(x,q) triangle",
    ),
    entry(
        "coeff-match-springer",
        Series,
        0,
        12,
        24,
        "Springer coefficients against What_n(2) and snakes",
    ),
    entry(
        "pde21",
        Series,
        1,
        10,
        24,
        "(1 - xz) S_z = q S + x(1-2x) S_x termwise",
    ),
    entry(
        "cud",
        Series,
        0,
        9,
        24,
        "(1 - sin z)^-q against cycles over SS_n and cycle-up-down permutations",
    ),
    entry(
        "S1q-eq-one-minus-sin",
        Series,
        0,
        10,
        24,
        "S(1,q;z) = (1 - sin z)^-q",
    ),
    entry(
        "trivar-egf",
        Series,
        0,
        9,
        24,
        "e^{qz(y-1)} S(x,z)^q against the S(x,y,q) triangle",
    ),
    entry("phi", Bijection, 1, 8, 9, "Phi blocks partition S_{n+1}"),
    entry(
        "psi",
        Bijection,
        1,
        9,
        10,
        "Psi is a des-to-exc bijection RS_n -> SS_n",
    ),
    entry(
        "rz",
        Roots,
        2,
        25,
        30,
        "S_n, P_n, P+_n, P-_n have simple nonpositive real roots",
    ),
    entry("lemma-chow", Roots, 2, 20, 30, "S_n precedes S_{n+1}"),
    entry(
        "theorem-interlace",
        Roots,
        2,
        20,
        30,
        "P_{n+1} << S_n, P+_{n+1} precedes S_n, S_n << P-_{n+1}",
    ),
    entry(
        "corollary-sxq",
        Roots,
        2,
        15,
        30,
        "S_n(x,q) has simple nonpositive real roots for sample q > 0",
    ),
];

pub fn lookup(id: &str) -> Result<&'static Entry> {
    ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::Unknown {
            kind: "identity",
            name: id.to_string(),
        })
}

/// Verifies `id` for `n` in its minimum up to `n_max`.
pub fn verify_identity(engine: &Engine, id: &str, n_max: usize) -> Result<IdentityReport> {
    let e = lookup(id)?;
    if n_max < e.min_n || n_max > e.max_n {
        return Err(Error::OutOfRange {
            name: "n_max",
            value: n_max as i64,
            range: format!("{}..={}", e.min_n, e.max_n),
        });
    }
    match e.kind {
        Series => verify_series(engine, id, n_max),
        Roots => verify_roots(engine, id, n_max),
        Bijection if id == "phi" => Ok(verify_phi(n_max)),
        Bijection => Ok(verify_psi(n_max)),
        Polynomial | Enumeration => run_identity(engine, e, n_max),
    }
}

/// Every identity at `min(default, cap)`.
pub fn verify_all(engine: &Engine, cap: Option<usize>) -> Result<Vec<IdentityReport>> {
    ENTRIES
        .iter()
        .map(|e| {
            let n = cap
                .map_or(e.default_n_max, |c| c.min(e.default_n_max))
                .max(e.min_n);
            verify_identity(engine, e.id, n)
        })
        .collect()
}

type Check = std::result::Result<(), String>;

fn row(t: &Triangle, n: usize) -> Poly {
    t.row(n).cloned().unwrap_or_else(Poly::zero)
}

fn entry_of(t: &Triangle, n: usize, k: i64) -> BigInt {
    if k < 0 {
        BigInt::zero()
    } else {
        t.entry(n, k as usize)
    }
}

fn dist(class: Class, stats: &[Stat], n: usize) -> std::result::Result<Poly, String> {
    distribution(class, stats, n).map_err(|e| e.to_string())
}

fn at(p: &Poly, v: Var, value: Rational) -> Poly {
    p.eval_at(v, &value)
}

fn x_pow(k: u32) -> Poly {
    Poly::monomial([k, 0, 0], rat(1))
}

fn springer(what: &Triangle, k: usize) -> Rational {
    row(what, k)
        .evaluate(&[(Var::X, rat(2))])
        .expect("univariate row")
}

fn run_identity(engine: &Engine, e: &Entry, n_max: usize) -> Result<IdentityReport> {
    let n0 = e.min_n;
    let id = e.id;
    let tri = |f: Family, n: usize| engine.triangle(f, n.max(f.first_row()));
    Ok(match id {
        "I-rows" => {
            let fams: Vec<Triangle> = Family::ALL
                .iter()
                .map(|&f| tri(f, n_max + 1))
                .collect::<Result<_>>()?;
            IdentityReport::run(id, n0, n_max, |n| {
                for t in &fams {
                    check_row_shape(t, n)?;
                }
                Ok(())
            })
        }
        "I-conv5" => {
            let s = tri(Family::S, n_max)?;
            let w = tri(Family::What, n_max)?;
            let two_x = Poly::from_coeffs([0, 2]);
            let w2: Vec<Poly> = (0..=n_max)
                .map(|k| row(&w, k).substitute(Var::X, &two_x))
                .collect();
            IdentityReport::run(id, n0, n_max, |n| {
                let mut sum = Poly::zero();
                for k in 0..=n {
                    let c = Rational::from_integer(binomial(n, k));
                    sum = &sum + &(&w2[k] * &w2[n - k]).scale(&c);
                }
                let sum = sum.scale(&Rational::new(1.into(), BigInt::from(2).pow(n as u32)));
                expect_eq("S_n", &sum, &row(&s, n))
            })
        }
        "I-eq9" => {
            let s = tri(Family::S, n_max)?;
            let w = tri(Family::W, n_max + 1)?;
            IdentityReport::run(id, n0, n_max, |n| {
                let mut rhs = Poly::zero();
                for k in 0..=n / 2 {
                    let c = s.entry(n, k) * BigInt::from(2).pow((n - k) as u32);
                    rhs.add_term([k as u32, 0, 0], Rational::from_integer(c));
                }
                expect_eq("W_{n+1}", &row(&w, n + 1), &rhs)
            })
        }
        "I-eq8" => {
            let s = tri(Family::S, n_max)?;
            let w = tri(Family::W, n_max)?;
            let r = tri(Family::R, n_max)?;
            IdentityReport::run(id, n0, n_max, |n| {
                let m = (n - 2) as u32;
                let err = |e: Error| e.to_string();
                let scale = Rational::new(1.into(), BigInt::from(2).pow(m));
                let from_w = &Poly::x() * &mobius_compose(&row(&w, n), m, &rat(2)).map_err(err)?;
                let from_w = from_w.scale(&scale);
                let from_s = &Poly::from_coeffs([0, 2])
                    * &mobius_compose(&row(&s, n - 1), m, &rat(1)).map_err(err)?;
                expect_eq("R_n via W_n", &row(&r, n), &from_w)?;
                expect_eq("R_n via S_{n-1}", &row(&r, n), &from_s)
            })
        }
        "I-lemma2" => {
            let s = tri(Family::S, n_max)?;
            let p = tri(Family::P, n_max + 1)?;
            let pp = tri(Family::Pplus, n_max + 1)?;
            let pm = tri(Family::Pminus, n_max + 1)?;
            IdentityReport::run(id, n0, n_max, |n| {
                for k in 0..=(n / 2) as i64 {
                    let snk = entry_of(&s, n, k);
                    let nn = n as i64;
                    let checks = [
                        (
                            "P+(n+1,k)",
                            entry_of(&pp, n + 1, k),
                            BigInt::from(nn - 2 * k) * &snk,
                        ),
                        (
                            "P-(n+1,k)",
                            entry_of(&pm, n + 1, k),
                            BigInt::from(1 + k) * &snk,
                        ),
                        (
                            "P(n+1,k)",
                            entry_of(&p, n + 1, k),
                            BigInt::from(nn + 1 - k) * &snk,
                        ),
                    ];
                    for (what, lhs, rhs) in checks {
                        expect_eq(&format!("{what} at k={k}"), &lhs, &rhs)?;
                    }
                }
                for form in [
                    ClosedForm::PFromS,
                    ClosedForm::PplusFromS,
                    ClosedForm::PminusFromS,
                ] {
                    let (fam, off) = form.target();
                    let t = [&p, &pp, &pm]
                        .into_iter()
                        .find(|t| t.family() == fam)
                        .expect("target family");
                    let cf = closed_form(engine, form, n).map_err(|e| e.to_string())?;
                    expect_eq(form.name(), &cf, &row(t, n + off))?;
                }
                Ok(())
            })
        }
        "I-eq20" => {
            let p = tri(Family::P, n_max + 1)?;
            IdentityReport::run(id, n0, n_max, |n| {
                let nn = n as i64;
                for k in 0..=nn / 2 {
                    let lhs = BigInt::from(nn - k) * entry_of(&p, n + 1, k);
                    let rhs = BigInt::from((k + 1) * (nn - k + 1)) * entry_of(&p, n, k)
                        + BigInt::from((nn - 2 * k + 1) * (nn - k)) * entry_of(&p, n, k - 1);
                    expect_eq(&format!("k={k}"), &lhs, &rhs)?;
                }
                Ok(())
            })
        }
        "I-pn0" => {
            let p = tri(Family::P, n_max)?;
            IdentityReport::run(id, n0, n_max, |n| {
                expect_eq("P(n,0)", &p.entry(n, 0), &BigInt::from(n))?;
                let expected = BigInt::from(n - 1) * (BigInt::from(2).pow(n as u32 - 1) - n);
                expect_eq("P(n,1)", &p.entry(n, 1), &expected)
            })
        }
        "I-spt" => {
            let s = tri(Family::S, n_max)?;
            let p = tri(Family::P, n_max)?;
            let t = tri(Family::T, n_max)?;
            IdentityReport::run(id, n0, n_max, |n| {
                for k in 0..=n {
                    let tk = |j: usize| t.entry(n, j);
                    expect_eq(
                        &format!("S(n,{k})"),
                        &s.entry(n, k),
                        &(tk(2 * k) + tk(2 * k + 1)),
                    )?;
                    if n >= 1 {
                        let rhs = tk(2 * k + 1) + tk(2 * k + 2);
                        expect_eq(&format!("P(n,{k})"), &p.entry(n, k), &rhs)?;
                    }
                }
                Ok(())
            })
        }
        "I-eq11" => {
            let s = tri(Family::S, n_max)?;
            let p = tri(Family::P, n_max)?;
            let t = tri(Family::T, n_max)?;
            let x2 = x_pow(2);
            IdentityReport::run(id, n0, n_max, |n| {
                let lhs = &Poly::from_coeffs([1, 1]) * &row(&t, n);
                let rhs = &(&Poly::x() * &row(&s, n).substitute(Var::X, &x2))
                    + &(&x2 * &row(&p, n).substitute(Var::X, &x2));
                expect_eq("(1+x)T_n", &lhs, &rhs)
            })
        }
        "I-tformula" => {
            let t = tri(Family::T, n_max + 1)?;
            IdentityReport::run(id, n0, n_max, |n| {
                let cf = closed_form(engine, ClosedForm::TFromS, n).map_err(|e| e.to_string())?;
                expect_eq("T_{n+1}", &cf, &row(&t, n + 1))
            })
        }
        "I-sundaram" => {
            let s = tri(Family::S, n_max)?;
            let a = tri(Family::A, n_max + 2)?;
            IdentityReport::run(id, n0, n_max, |n| {
                expect_eq("A_{n+2}", &row(&a, n + 2), &(&Poly::x() * &row(&s, n)))
            })
        }
        "I-stirling" => {
            let s = tri(Family::S, n_max)?;
            IdentityReport::run(id, n0, n_max, |n| {
                let rebuilt = s_from_stirling(n).map_err(|e| e.to_string())?;
                expect_eq("S_n", &rebuilt, &row(&s, n))
            })
        }
        "I-sxq-minus1" => {
            let t = tri(Family::Sxq, n_max)?;
            IdentityReport::run(id, n0, n_max, |n| {
                let cf =
                    closed_form(engine, ClosedForm::SxqAtMinusOne, n).map_err(|e| e.to_string())?;
                expect_eq("S_n(x,-1)", &at(&row(&t, n), Var::Q, rat(-1)), &cf)
            })
        }
        "I-sxq-q1" => {
            let s = tri(Family::S, n_max)?;
            let t = tri(Family::Sxq, n_max)?;
            IdentityReport::run(id, n0, n_max, |n| {
                expect_eq("S_n(x,1)", &at(&row(&t, n), Var::Q, rat(1)), &row(&s, n))
            })
        }
        "I-corner" => {
            let s = tri(Family::S, n_max)?;
            let p = tri(Family::P, n_max)?;
            let t = tri(Family::T, n_max)?;
            IdentityReport::run(id, n0, n_max, |n| {
                let mut alt = 0u64;
                for_each_in_class(Class::Rs, n, |w| alt += u64::from(is_alternating(w)))
                    .map_err(|e| e.to_string())?;
                let alt = BigInt::from(alt);
                let m = n / 2;
                let corner = if n % 2 == 0 {
                    s.entry(n, m)
                } else {
                    p.entry(n, m)
                };
                expect_eq("corner of S or P", &corner, &alt)?;
                expect_eq("T(n,n)", &t.entry(n, n), &alt)
            })
        }
        "I-euler" => {
            let w = tri(Family::What, n_max)?;
            IdentityReport::run(id, n0, n_max, |n| {
                let mut sum = Rational::zero();
                for k in 0..=n {
                    sum += Rational::from_integer(binomial(n, k))
                        * springer(&w, k)
                        * springer(&w, n - k);
                }
                let sum = sum / Rational::from_integer(BigInt::from(2).pow(n as u32));
                let e = Rational::from_integer(count_alternating(n + 1).into());
                expect_eq("E_{n+1}", &sum, &e)
            })
        }
        "I-D" => {
            let s = tri(Family::S, n_max)?;
            let d = tri(Family::D, n_max)?;
            IdentityReport::run(id, n0, n_max, |n| {
                let dn = row(&d, n);
                expect_eq("D_n", &dn, &(&Poly::x() * &row(&s, n - 1)))?;
                let e = Poly::int(count_alternating(n) as i64);
                expect_eq("D_n(1)", &at(&dn, Var::X, rat(1)), &e)
            })
        }
        "I-card" => {
            let s = tri(Family::S, n_max)?;
            IdentityReport::run(id, n0, n_max, |n| {
                let e = BigInt::from(count_alternating(n + 1));
                let rs = BigInt::from(gen_simsun_first(n).len());
                let ss = BigInt::from(gen_simsun_second(n).len());
                let s1 = s.int_row(n).expect("row").into_iter().sum::<BigInt>();
                expect_eq("|RS_n|", &rs, &e)?;
                expect_eq("|SS_n|", &ss, &e)?;
                expect_eq("S_n(1)", &s1, &e)
            })
        }
        "I-enum-S" => enum_check(
            id,
            n0,
            n_max,
            tri(Family::S, n_max)?,
            Class::Rs,
            &[Stat::Des],
        ),
        "I-enum-T" => enum_check(
            id,
            n0,
            n_max,
            tri(Family::T, n_max)?,
            Class::Rs,
            &[Stat::Uprun],
        ),
        "I-enum-Sxq" => enum_check(
            id,
            n0,
            n_max,
            tri(Family::Sxq, n_max)?,
            Class::Ss,
            &[Stat::Exc, Stat::Cyc],
        ),
        "I-trivar" => enum_check(
            id,
            n0,
            n_max,
            tri(Family::Sxyq, n_max)?,
            Class::Ss,
            &[Stat::Exc, Stat::Fix, Stat::Cyc],
        ),
        "I-enum-W" => enum_check(
            id,
            n0,
            n_max,
            tri(Family::W, n_max)?,
            Class::All,
            &[Stat::Pk],
        ),
        "I-enum-What" => enum_check(
            id,
            n0,
            n_max,
            tri(Family::What, n_max)?,
            Class::All,
            &[Stat::Lpk],
        ),
        "I-enum-R" => enum_check(
            id,
            n0,
            n_max,
            tri(Family::R, n_max)?,
            Class::All,
            &[Stat::Altruns],
        ),
        "I-enum-P" => {
            let fams = [
                (tri(Family::P, n_max)?, Class::Rs),
                (tri(Family::Pplus, n_max)?, Class::RsPlus),
                (tri(Family::Pminus, n_max)?, Class::RsMinus),
            ];
            IdentityReport::run(id, n0, n_max, |n| {
                for (t, class) in &fams {
                    let d = dist(*class, &[Stat::Pk], n)?;
                    expect_eq(t.family().name(), &row(t, n), &d)?;
                }
                Ok(())
            })
        }
        "I-des-exc" => IdentityReport::run(id, n0, n_max, |n| {
            let des = dist(Class::Rs, &[Stat::Des], n)?;
            let exc = dist(Class::Ss, &[Stat::Exc], n)?;
            expect_eq("des vs exc", &des, &exc)
        }),
        "I-cud" => IdentityReport::run(id, n0, n_max, |n| {
            let ss = dist(Class::Ss, &[Stat::Cyc], n)?;
            let cud = dist(Class::Cud, &[Stat::Cyc], n)?;
            expect_eq("cyc over SS_n vs cycle-up-down", &ss, &cud)
        }),
        "I-filter-gen" => IdentityReport::run(id, n0, n_max, check_filter_gen),
        _ => unreachable!("registry entry without a runner: {id}"),
    })
}

fn enum_check(
    id: &str,
    n0: usize,
    n_max: usize,
    t: Triangle,
    class: Class,
    stats: &[Stat],
) -> IdentityReport {
    let n0 = n0.max(t.first_row());
    IdentityReport::run(id, n0, n_max, |n| {
        let d = dist(class, stats, n)?;
        expect_eq(t.family().name(), &row(&t, n), &d)
    })
}

fn check_filter_gen(n: usize) -> Check {
    let mut first = Vec::new();
    let mut second = Vec::new();
    for p in enumerate_permutations(n) {
        if is_simsun_first(&p) {
            first.push(p.clone());
        }
        if is_simsun_second(&p) {
            second.push(p);
        }
    }
    if first != gen_simsun_first(n) {
        return Err("first kind: filter and generator differ".into());
    }
    let generated: Vec<Permutation> = gen_simsun_second(n)
        .iter()
        .map(|c| c.to_permutation())
        .collect();
    if second != generated {
        return Err("second kind: filter and generator differ".into());
    }
    Ok(())
}

fn floor_half(n: usize, shift: usize) -> Option<u32> {
    n.checked_sub(shift).map(|m| (m / 2) as u32)
}

fn check_row_shape(t: &Triangle, n: usize) -> Check {
    let f = t.family();
    if n < f.first_row() {
        return Ok(());
    }
    let p = row(t, n);
    if !p.all_coeffs_integral() || !p.all_coeffs_nonnegative() {
        return Err(format!(
            "{f}_{n} = {p} has a negative or fractional coefficient"
        ));
    }
    let deg = p.degree(Var::X);
    let expected = match f {
        Family::S => Some((n / 2) as u32),
        Family::P | Family::Pminus => floor_half(n, 1),
        Family::Pplus if n >= 2 => floor_half(n, 2),
        Family::W => floor_half(n, 1),
        Family::What | Family::Sxq | Family::Sxyq => Some((n / 2) as u32),
        Family::R => n.checked_sub(1).map(|m| m as u32),
        Family::T => Some(n as u32),
        Family::A => Some((n / 2) as u32),
        Family::D => Some((n.div_ceil(2)) as u32),
        Family::Pplus => deg,
    };
    if deg != expected {
        return Err(format!(
            "{f}_{n} = {p} has x-degree {deg:?}, expected {expected:?}"
        ));
    }
    if f == Family::S && t.entry(n, 0) != BigInt::from(1) {
        return Err(format!("S({n},0) != 1"));
    }
    if f == Family::A {
        let nonzero_beyond = (0..=n).any(|i| 2 * i > n && !t.entry(n, i).is_zero());
        if nonzero_beyond {
            return Err(format!("a_i({n}) nonzero for some 2i > {n}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_ranges_consistent() {
        for (i, e) in ENTRIES.iter().enumerate() {
            assert!(
                e.min_n <= e.default_n_max && e.default_n_max <= e.max_n,
                "{}",
                e.id
            );
            assert!(ENTRIES[i + 1..].iter().all(|o| o.id != e.id), "{}", e.id);
        }
    }

    #[test]
    fn every_entry_runs_at_a_small_size() {
        let engine = Engine::new();
        for e in ENTRIES {
            let n = e.min_n.max(e.default_n_max.min(6));
            let r = verify_identity(&engine, e.id, n).unwrap();
            assert!(r.passed(), "{}: {:?}", e.id, r.counterexample);
        }
    }

    #[test]
    fn rejects_unknown_ids_and_ranges() {
        let engine = Engine::new();
        assert!(verify_identity(&engine, "I-nope", 3).is_err());
        assert!(verify_identity(&engine, "phi", 20).is_err());
        assert!(verify_identity(&engine, "I-eq8", 1).is_err());
    }
}

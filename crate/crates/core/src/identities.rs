//! Closed forms and number-theoretic helpers used by the identity registry.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{binomial, factorial, pow_rat, rat, Poly, Rational, Var};
use crate::triangle::{Engine, Family};

/// Stirling number of the second kind `{n brace i}`.
pub fn stirling2(n: usize, i: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); m + 1];
        for k in 1..=m {
            let stay = row.get(k).cloned().unwrap_or_default() * BigInt::from(k);
            next[k] = stay + &row[k - 1];
        }
        row = next;
    }
    row.get(i).cloned().unwrap_or_default()
}

fn binom_signed(n: usize, k: i64) -> BigInt {
    if k < 0 {
        BigInt::zero()
    } else {
        binomial(n, k as usize)
    }
}

/// The coefficient `p(n, n - 2k + 1)`, an alternating sum over Stirling
/// numbers of the second kind.
pub fn p_coeff(n: usize, k: usize) -> BigInt {
    let lo = n as i64 - 2 * k as i64;
    let mut total = BigInt::zero();
    for i in 1..=n {
        let bracket = binom_signed(i, lo) - binom_signed(i, lo + 1);
        if bracket.is_zero() {
            continue;
        }
        let mut term = factorial(i) * stirling2(n, i) * bracket;
        term *= BigInt::from(2).pow((n - i) as u32);
        if (n - i) % 2 == 1 {
            term = -term;
        }
        total += term;
    }
    if k % 2 == 1 {
        -total
    } else {
        total
    }
}

/// `S_n(x)` rebuilt from the Stirling-number expansion. The sum runs to
/// `⌊n/2⌋ + 1` and is divided exactly by `2^{n+1} x`.
pub fn s_from_stirling(n: usize) -> Result<Poly> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: 0,
            range: "1..".into(),
        });
    }
    let base = Poly::from_coeffs([-1, 2]);
    let mut sum = Poly::zero();
    for k in 0..=(n / 2 + 1) {
        let c = Rational::from_integer(p_coeff(n + 1, k));
        sum = &sum + &base.pow(k as u32).scale(&c);
    }
    let divided = sum.div_x_pow(1).ok_or_else(|| {
        Error::IdentityViolation(format!("n={n}: sum {sum} is not divisible by x"))
    })?;
    let d = Rational::from_integer(BigInt::from(2).pow(n as u32 + 1));
    let mut out = Poly::zero();
    for (e, c) in divided.terms() {
        let q = c / &d;
        if !q.is_integer() {
            return Err(Error::IdentityViolation(format!(
                "n={n}: coefficient {c} is not divisible by {d}"
            )));
        }
        out.add_term(*e, q);
    }
    Ok(out)
}

/// `Σ_k p_k (αx)^k (1+x)^{m-k}`, i.e. `(1+x)^m p(αx/(1+x))`.
pub fn mobius_compose(p: &Poly, m: u32, alpha: &Rational) -> Result<Poly> {
    let coeffs = p
        .rat_coeffs()
        .ok_or_else(|| Error::Precondition(format!("{p} is not univariate in x")))?;
    if coeffs.len() as u32 > m + 1 && !p.is_zero() {
        return Err(Error::Precondition(format!(
            "degree of {p} exceeds {m}; the result is not a polynomial"
        )));
    }
    let one_plus_x = Poly::from_coeffs([1, 1]);
    let mut out = Poly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let scale = c * pow_rat(alpha, k as u32);
        let term = Poly::monomial([k as u32, 0, 0], scale);
        out = &out + &(&term * &one_plus_x.pow(m - k as u32));
    }
    Ok(out)
}

/// Named closed forms expressed through `S_n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClosedForm {
    /// `P_{n+1} = (n+1) S_n - x S_n'`.
    PFromS,
    /// `P⁺_{n+1} = n S_n - 2x S_n'`.
    PplusFromS,
    /// `P⁻_{n+1} = S_n + x S_n'`.
    PminusFromS,
    /// `T_{n+1} = x(1+nx) S_n(x²) + ½x²(1-2x) d/dx[S_n(x²)]`.
    TFromS,
    /// `S_n(x, -1)`: `(1-x)(1-2x)^{m-1}` for `n = 2m`, `-(1-2x)^m` for `n = 2m+1`.
    SxqAtMinusOne,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 5] = [
        ClosedForm::PFromS,
        ClosedForm::PplusFromS,
        ClosedForm::PminusFromS,
        ClosedForm::TFromS,
        ClosedForm::SxqAtMinusOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::PFromS => "P-from-S",
            ClosedForm::PplusFromS => "Pplus-from-S",
            ClosedForm::PminusFromS => "Pminus-from-S",
            ClosedForm::TFromS => "T-from-S",
            ClosedForm::SxqAtMinusOne => "Sxq-at-minus1",
        }
    }

    /// The family (and row offset) the closed form reproduces.
    pub fn target(self) -> (Family, usize) {
        match self {
            ClosedForm::PFromS => (Family::P, 1),
            ClosedForm::PplusFromS => (Family::Pplus, 1),
            ClosedForm::PminusFromS => (Family::Pminus, 1),
            ClosedForm::TFromS => (Family::T, 1),
            ClosedForm::SxqAtMinusOne => (Family::Sxq, 0),
        }
    }
}

impl std::str::FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClosedForm> {
        ClosedForm::ALL
            .into_iter()
            .find(|c| c.name() == s || (s == "P±-from-S" && *c == ClosedForm::PplusFromS))
            .ok_or_else(|| Error::Unknown {
                kind: "closed form",
                name: s.to_string(),
            })
    }
}

/// Evaluates a closed form at `n`, using `S_n` from `engine`.
pub fn closed_form(engine: &Engine, form: ClosedForm, n: usize) -> Result<Poly> {
    if form == ClosedForm::SxqAtMinusOne {
        if n == 0 {
            return Err(Error::OutOfRange {
                name: "n",
                value: 0,
                range: "1..".into(),
            });
        }
        let m = (n / 2) as u32;
        let one_minus_2x = Poly::from_coeffs([1, -2]);
        return Ok(if n.is_multiple_of(2) {
            &Poly::from_coeffs([1, -1]) * &one_minus_2x.pow(m - 1)
        } else {
            -one_minus_2x.pow(m)
        });
    }
    let s = engine
        .triangle(Family::S, n)?
        .row(n)
        .cloned()
        .expect("row n");
    let ds = s.derivative(Var::X);
    let x = Poly::x();
    let nn = rat(n as i64);
    Ok(match form {
        ClosedForm::PFromS => &s.scale(&(&nn + rat(1))) - &(&x * &ds),
        ClosedForm::PplusFromS => &s.scale(&nn) - &(&x * &ds).scale(&rat(2)),
        ClosedForm::PminusFromS => &s + &(&x * &ds),
        ClosedForm::TFromS => {
            let x2 = Poly::monomial([2, 0, 0], rat(1));
            let s2 = s.substitute(Var::X, &x2);
            let ds2 = s2.derivative(Var::X);
            let lead = &x * &(&Poly::one() + &x.scale(&nn));
            let half_x2 = Poly::monomial([2, 0, 0], Rational::new(1.into(), 2.into()));
            let tail = &(&half_x2 * &Poly::from_coeffs([1, -2])) * &ds2;
            &(&lead * &s2) + &tail
        }
        ClosedForm::SxqAtMinusOne => unreachable!(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    /// Counts set partitions of `[n]` into exactly `k` blocks via restricted
    /// growth strings.
    fn partitions_brute(n: usize, k: usize) -> u64 {
        fn go(pos: usize, n: usize, max: usize, k: usize) -> u64 {
            if pos == n {
                return u64::from(max == k);
            }
            (0..=max.min(k - 1))
                .map(|b| go(pos + 1, n, max.max(b + 1), k))
                .sum()
        }
        if k == 0 {
            return u64::from(n == 0);
        }
        go(0, n, 0, k)
    }

    #[test]
    fn stirling_matches_brute_force() {
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(
                    stirling2(n, k),
                    BigInt::from(partitions_brute(n, k)),
                    "{n},{k}"
                );
            }
        }
    }

    #[test]
    fn stirling_reconstruction() {
        assert_eq!(s_from_stirling(1).unwrap(), Poly::one());
        assert_eq!(s_from_stirling(4).unwrap(), poly("1 + 11*x + 4*x^2"));
        let t = Engine::new().triangle(Family::S, 15).unwrap();
        for n in 1..=15 {
            assert_eq!(&s_from_stirling(n).unwrap(), t.row(n).unwrap(), "n={n}");
        }
        assert!(s_from_stirling(0).is_err());
    }

    #[test]
    fn mobius_examples() {
        let s2 = poly("1 + x");
        assert_eq!(mobius_compose(&s2, 1, &rat(1)).unwrap(), poly("1 + 2*x"));
        assert_eq!(
            mobius_compose(&Poly::one(), 3, &rat(5)).unwrap(),
            poly("1 + 3*x + 3*x^2 + x^3")
        );
        assert!(mobius_compose(&poly("1 + x^2"), 1, &rat(1)).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let e = Engine::new();
        assert_eq!(
            closed_form(&e, ClosedForm::PFromS, 4).unwrap(),
            poly("5 + 44*x + 12*x^2")
        );
        assert_eq!(
            closed_form(&e, ClosedForm::SxqAtMinusOne, 4).unwrap(),
            poly("1 - 3*x + 2*x^2")
        );
        assert_eq!(closed_form(&e, ClosedForm::TFromS, 0).unwrap(), Poly::x());
        assert!("nope".parse::<ClosedForm>().is_err());
    }

    #[test]
    fn closed_forms_match_triangles() {
        let e = Engine::new();
        for form in [
            ClosedForm::PFromS,
            ClosedForm::PplusFromS,
            ClosedForm::PminusFromS,
            ClosedForm::TFromS,
        ] {
            let (fam, off) = form.target();
            let t = e.triangle(fam, 13).unwrap();
            for n in 1..=12 {
                assert_eq!(
                    &closed_form(&e, form, n).unwrap(),
                    t.row(n + off).unwrap(),
                    "{} n={n}",
                    form.name()
                );
            }
        }
    }
}

//! Recurrence engines for every polynomial family.
//!
//! Each family is produced row by row from its seed. An [`Engine`] can carry a
//! deliberate off-by-one in one family's index-dependent coefficient; the
//! identity registry is expected to catch it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{binomial, Poly, Var};

/// Polynomial families with a recurrence (or defining relation).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Family {
    /// Descents over simsun permutations.
    S,
    /// Left peaks over all permutations.
    What,
    /// Interior peaks over all permutations.
    W,
    /// Alternating runs over all permutations.
    R,
    /// Up-down runs over simsun permutations.
    T,
    /// Interior peaks over simsun permutations starting with a descent.
    Pplus,
    /// Interior peaks over simsun permutations starting with an ascent.
    Pminus,
    /// Interior peaks over simsun permutations.
    P,
    /// Sundaram's orbit counts `a_i(n)`.
    A,
    /// Excedances and cycles over second-kind simsun permutations.
    Sxq,
    /// Excedances, fixed points and cycles over second-kind simsun permutations.
    Sxyq,
    /// Leaves of increasing 1-2 trees, via `D_{n+1} = x S_n`.
    D,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::S,
        Family::What,
        Family::W,
        Family::R,
        Family::T,
        Family::Pplus,
        Family::Pminus,
        Family::P,
        Family::A,
        Family::Sxq,
        Family::Sxyq,
        Family::D,
    ];

    /// Families driven by an index-dependent recurrence (every family but
    /// `P`, which is the sum `P⁺ + P⁻`).
    pub const RECURRENT: [Family; 11] = [
        Family::S,
        Family::What,
        Family::W,
        Family::R,
        Family::T,
        Family::Pplus,
        Family::Pminus,
        Family::A,
        Family::Sxq,
        Family::Sxyq,
        Family::D,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::S => "S",
            Family::What => "What",
            Family::W => "W",
            Family::R => "R",
            Family::T => "T",
            Family::Pplus => "Pplus",
            Family::Pminus => "Pminus",
            Family::P => "P",
            Family::A => "A",
            Family::Sxq => "Sxq",
            Family::Sxyq => "Sxyq",
            Family::D => "D",
        }
    }

    /// Index of the first row the family defines.
    pub fn first_row(self) -> usize {
        match self {
            Family::S | Family::What | Family::T | Family::Sxq | Family::Sxyq => 0,
            Family::W | Family::R | Family::Pplus | Family::Pminus | Family::P => 1,
            Family::A | Family::D => 1,
        }
    }

    pub fn is_univariate(self) -> bool {
        !matches!(self, Family::Sxq | Family::Sxyq)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let f = match s {
            "S" => Family::S,
            "What" | "Ŵ" | "W-hat" => Family::What,
            "W" => Family::W,
            "R" => Family::R,
            "T" => Family::T,
            "Pplus" | "P+" | "P⁺" => Family::Pplus,
            "Pminus" | "P-" | "P⁻" => Family::Pminus,
            "P" => Family::P,
            "A" => Family::A,
            "Sxq" => Family::Sxq,
            "Sxyq" => Family::Sxyq,
            "D" => Family::D,
            _ => {
                return Err(Error::Unknown {
                    kind: "family",
                    name: s.to_string(),
                })
            }
        };
        Ok(f)
    }
}

/// Rows `first..=n_max` of one family.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangle {
    family: Family,
    first: usize,
    rows: Vec<Poly>,
}

impl Triangle {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn first_row(&self) -> usize {
        self.first
    }

    pub fn n_max(&self) -> usize {
        self.first + self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Option<&Poly> {
        n.checked_sub(self.first).and_then(|i| self.rows.get(i))
    }

    /// Row `n` as integer coefficients in increasing degree (univariate
    /// families only).
    pub fn int_row(&self, n: usize) -> Option<Vec<BigInt>> {
        self.row(n).and_then(Poly::int_coeffs)
    }

    /// Entry `(n, k)`; zero outside the stored range.
    pub fn entry(&self, n: usize, k: usize) -> BigInt {
        self.row(n)
            .map(|p| p.coeff([k as u32, 0, 0]))
            .filter(|c| c.is_integer())
            .map(|c| c.to_integer())
            .unwrap_or_else(BigInt::zero)
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &Poly)> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, p)| (i + self.first, p))
    }

    /// CSV with header `family,n,k,value`. For the multivariate families `k`
    /// is the power of `x` and `value` the coefficient polynomial in `q`, `y`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("family,n,k,value\n");
        for (n, row) in self.rows() {
            let deg = row.degree(Var::X).unwrap_or(0);
            for k in 0..=deg {
                let c = row.coeff_of_x(k);
                out.push_str(&format!("{},{},{},{}\n", self.family, n, k, c));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows()
            .map(|(n, p)| json!({ "n": n, "poly": p.to_string(), "coeffs": p.to_json() }))
            .collect();
        json!({ "family": self.family.name(), "rows": rows })
    }
}

/// Builds triangles. `Engine::default()` is the faithful engine.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Engine {
    mutation: Option<Family>,
}

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn get(row: &[BigInt], k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    row.get(k as usize).cloned().unwrap_or_else(BigInt::zero)
}

fn trim(mut row: Vec<BigInt>) -> Vec<BigInt> {
    while row.len() > 1 && row.last().is_some_and(Zero::is_zero) {
        row.pop();
    }
    row
}

/// `(a0 + a1 x) p + (c1 x + c2 x²) p'` on coefficient vectors.
fn linear_step(row: &[BigInt], a0: i64, a1: i64, c1: i64, c2: i64) -> Vec<BigInt> {
    let len = row.len() + 1;
    let out = (0..len as i64)
        .map(|k| get(row, k) * big(a0 + c1 * k) + get(row, k - 1) * big(a1 + c2 * (k - 1)))
        .collect();
    trim(out)
}

/// `new[k] = Σ_j coeff_j(k) · row[k - j]`, for three-term coefficient recurrences.
fn three_term(row: &[BigInt], len: usize, coeff: impl Fn(i64) -> [i64; 3]) -> Vec<BigInt> {
    let out = (0..len as i64)
        .map(|k| {
            let [c0, c1, c2] = coeff(k);
            get(row, k) * big(c0) + get(row, k - 1) * big(c1) + get(row, k - 2) * big(c2)
        })
        .collect();
    trim(out)
}

impl Engine {
    pub fn new() -> Engine {
        Engine::default()
    }

    /// Engine with an off-by-one in `family`'s recurrence index.
    pub fn with_mutation(family: Family) -> Engine {
        Engine {
            mutation: Some(family),
        }
    }

    pub fn mutation(&self) -> Option<Family> {
        self.mutation
    }

    fn bump(&self, family: Family) -> i64 {
        i64::from(self.mutation == Some(family))
    }

    pub fn triangle(&self, family: Family, n_max: usize) -> Result<Triangle> {
        let first = family.first_row();
        if n_max < first {
            return Err(Error::OutOfRange {
                name: "n_max",
                value: n_max as i64,
                range: format!("{first}.."),
            });
        }
        let rows: Vec<Poly> = match family {
            Family::Sxq => self.sxq_rows(n_max),
            Family::Sxyq => self.sxyq_rows(n_max),
            _ => self
                .int_rows(family, n_max)
                .into_iter()
                .map(Poly::from_coeffs)
                .collect(),
        };
        Ok(Triangle {
            family,
            first,
            rows,
        })
    }

    /// Integer rows `first..=n_max` of a univariate family.
    pub fn int_rows(&self, family: Family, n_max: usize) -> Vec<Vec<BigInt>> {
        let d = self.bump(family);
        match family {
            Family::S => {
                let mut rows = vec![vec![big(1)]];
                for n in 0..n_max {
                    let next = linear_step(&rows[n], 1, n as i64 + d, 1, -2);
                    rows.push(next);
                }
                rows
            }
            Family::What => {
                let mut rows = vec![vec![big(1)]];
                for n in 0..n_max {
                    let next = linear_step(&rows[n], 1, n as i64 + d, 2, -2);
                    rows.push(next);
                }
                rows
            }
            Family::W => {
                let mut rows = vec![vec![big(1)]];
                for n in 1..n_max {
                    let next = linear_step(&rows[n - 1], 2, n as i64 - 1 + d, 2, -2);
                    rows.push(next);
                }
                rows
            }
            Family::R => {
                let mut rows = vec![vec![big(1)]];
                for n in 2..=n_max as i64 {
                    let prev = rows.last().unwrap();
                    let next = three_term(prev, n as usize, |k| [k, 2, n - k + d]);
                    rows.push(next);
                }
                rows
            }
            Family::T => {
                let mut rows = vec![vec![big(1)]];
                for n in 1..=n_max as i64 {
                    let prev = rows.last().unwrap();
                    let next =
                        three_term(prev, n as usize + 1, |k| [(k + 1) / 2, 1, n - k + 1 + d]);
                    rows.push(next);
                }
                rows
            }
            Family::Pplus | Family::Pminus | Family::P => {
                let (plus, minus) = self.p_pm_rows(n_max);
                match family {
                    Family::Pplus => plus,
                    Family::Pminus => minus,
                    _ => {
                        let mut rows = vec![vec![big(1)]];
                        for (a, b) in plus.iter().zip(&minus).skip(1) {
                            let len = a.len().max(b.len());
                            let sum = (0..len as i64).map(|k| get(a, k) + get(b, k)).collect();
                            rows.push(trim(sum));
                        }
                        rows
                    }
                }
            }
            Family::A => {
                let mut rows = vec![vec![big(1)]];
                for n in 1..n_max as i64 {
                    let prev = rows.last().unwrap();
                    let len = (n as usize).div_ceil(2) + 1;
                    let next = (0..len as i64)
                        .map(|i| get(prev, i) * big(i) + get(prev, i - 1) * big(n - 2 * i + 2 + d))
                        .collect();
                    rows.push(next);
                }
                rows
            }
            Family::D => {
                let s = self.int_rows(Family::S, n_max + 1);
                (1..=n_max)
                    .map(|n| {
                        let src = (n as i64 - 1 + d) as usize;
                        let mut row = vec![BigInt::zero()];
                        row.extend(s[src].iter().cloned());
                        row
                    })
                    .collect()
            }
            Family::Sxq | Family::Sxyq => {
                panic!("{family} is not univariate; use Engine::triangle")
            }
        }
    }

    /// `(P⁺, P⁻)` rows `1..=n_max`, recurrences seeded at `n = 2`.
    fn p_pm_rows(&self, n_max: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
        let dp = self.bump(Family::Pplus);
        let dm = self.bump(Family::Pminus);
        let mut plus = vec![vec![big(1)]];
        let mut minus = vec![vec![big(1)]];
        if n_max >= 2 {
            plus.push(vec![big(1)]);
            minus.push(vec![big(1)]);
        }
        for n in 2..n_max as i64 {
            let (a, b) = (plus.last().unwrap(), minus.last().unwrap());
            let len = n as usize / 2 + 2;
            let next_plus = (0..len as i64)
                .map(|k| get(a, k) * big(k + 1) + get(a, k - 1) * big(n - 2 * k + dp) + get(b, k))
                .collect();
            let next_minus = (0..len as i64)
                .map(|k| {
                    get(b, k) * big(k + 1) + get(b, k - 1) * big(n - 2 * k + 1 + dm) + get(a, k - 1)
                })
                .collect();
            plus.push(trim(next_plus));
            minus.push(trim(next_minus));
        }
        (plus, minus)
    }

    fn sxq_rows(&self, n_max: usize) -> Vec<Poly> {
        let d = self.bump(Family::Sxq);
        let x = Poly::x();
        let slope = &x * &(&Poly::one() - &(&Poly::int(2) * &x));
        let mut rows = vec![Poly::one()];
        for n in 0..n_max {
            let prev = &rows[n];
            let mult = &Poly::q() + &Poly::int(n as i64 + d).shift([1, 0, 0]);
            let next = &(&mult * prev) + &(&slope * &prev.derivative(Var::X));
            rows.push(next);
        }
        rows
    }

    fn sxyq_rows(&self, n_max: usize) -> Vec<Poly> {
        let d = self.bump(Family::Sxyq);
        let sxq = self.sxq_rows(n_max);
        let base = &(&Poly::y() * &Poly::q()) - &Poly::q();
        let mut powers = vec![Poly::one()];
        for i in 1..=n_max {
            powers.push(&powers[i - 1] * &base);
        }
        (0..=n_max)
            .map(|n| {
                let mut acc = Poly::zero();
                for i in 0..=n {
                    let c = binomial(n + d as usize, i);
                    let term = (&powers[i] * &sxq[n - i])
                        .scale(&num_rational::BigRational::from_integer(c));
                    acc = &acc + &term;
                }
                acc
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(f: Family, n: usize) -> Poly {
        Engine::new()
            .triangle(f, n)
            .unwrap()
            .row(n)
            .unwrap()
            .clone()
    }

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn listed_rows() {
        assert_eq!(row(Family::S, 5), p("1 + 26*x + 34*x^2"));
        assert_eq!(row(Family::T, 3), p("x + 2*x^2 + 2*x^3"));
        assert_eq!(row(Family::Pplus, 5), p("4 + 22*x"));
        assert_eq!(row(Family::W, 3), p("4 + 2*x"));
        assert_eq!(row(Family::R, 3), p("2*x + 4*x^2"));
        assert_eq!(row(Family::Sxq, 2), p("q^2 + x*q"));
        assert_eq!(row(Family::What, 2), p("1 + x"));
        assert_eq!(row(Family::D, 1), p("x"));
    }

    #[test]
    fn sundaram_rows_vanish_beyond_half() {
        let t = Engine::new().triangle(Family::A, 6).unwrap();
        for (n, r) in t.rows() {
            for i in 0..=r.degree(Var::X).unwrap_or(0) as usize {
                if 2 * i > n {
                    assert!(t.entry(n, i).is_zero(), "a_{i}({n})");
                }
            }
        }
        assert_eq!(t.int_row(2).unwrap(), vec![big(0), big(1)]);
    }

    #[test]
    fn unknown_family_and_short_range() {
        assert!("Q".parse::<Family>().is_err());
        assert!(Engine::new().triangle(Family::W, 0).is_err());
    }

    #[test]
    fn csv_schema() {
        let csv = Engine::new().triangle(Family::S, 5).unwrap().to_csv();
        assert!(csv.starts_with("family,n,k,value\n"));
        assert!(csv.ends_with("S,5,0,1\nS,5,1,26\nS,5,2,34\n"));
    }

    #[test]
    fn mutation_changes_every_recurrent_family() {
        for f in Family::RECURRENT {
            let good = Engine::new().triangle(f, 6).unwrap();
            let bad = Engine::with_mutation(f).triangle(f, 6).unwrap();
            assert_ne!(good, bad, "{f}");
        }
    }
}

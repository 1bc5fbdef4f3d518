//! Truncated power series in `z` whose coefficients are polynomials in
//! `x`, `q`, `y`, and builders for the exponential generating functions of
//! the simsun families.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{check_range, Error, Result};
use crate::poly::{factorial, pow_rat, rat, ratio, Poly, Rational, Var};
use crate::report::{expect_eq, IdentityReport};
use crate::simsun::{count_snakes, distribution, Class, Stat};
use crate::triangle::{Engine, Family};

pub const DEFAULT_ORDER: usize = 16;
pub const MAX_ORDER: usize = 24;

/// `Σ_{n ≤ order} c_n z^n`, exact modulo `z^{order+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalSeries {
    order: usize,
    coeffs: Vec<Poly>,
}

fn constant_of(p: &Poly) -> Option<Rational> {
    if p.terms().all(|(e, _)| *e == [0, 0, 0]) {
        Some(p.coeff([0, 0, 0]))
    } else {
        None
    }
}

impl FormalSeries {
    /// Pads with zeros or truncates `coeffs` to `order + 1` terms.
    pub fn new(order: usize, mut coeffs: Vec<Poly>) -> FormalSeries {
        coeffs.resize(order + 1, Poly::zero());
        FormalSeries { order, coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Poly) -> FormalSeries {
        FormalSeries {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> FormalSeries {
        FormalSeries::new(order, Vec::new())
    }

    pub fn one(order: usize) -> FormalSeries {
        FormalSeries::new(order, vec![Poly::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    /// `n! · c_n`.
    pub fn egf_coeff(&self, n: usize) -> Poly {
        self.coeffs[n].scale(&Rational::from_integer(factorial(n)))
    }

    pub fn add(&self, other: &FormalSeries) -> FormalSeries {
        let order = self.order.min(other.order);
        FormalSeries::from_fn(order, |n| &self.coeffs[n] + &other.coeffs[n])
    }

    pub fn sub(&self, other: &FormalSeries) -> FormalSeries {
        let order = self.order.min(other.order);
        FormalSeries::from_fn(order, |n| &self.coeffs[n] - &other.coeffs[n])
    }

    pub fn mul(&self, other: &FormalSeries) -> FormalSeries {
        let order = self.order.min(other.order);
        FormalSeries::from_fn(order, |n| {
            let mut acc = Poly::zero();
            for k in 0..=n {
                if self.coeffs[k].is_zero() || other.coeffs[n - k].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[k] * &other.coeffs[n - k]);
            }
            acc
        })
    }

    /// Multiplies every coefficient by `p`.
    pub fn mul_poly(&self, p: &Poly) -> FormalSeries {
        self.map_coeffs(|c| c * p)
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Poly) -> Poly) -> FormalSeries {
        FormalSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(&mut f).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be a nonzero number.
    pub fn inverse(&self) -> Result<FormalSeries> {
        let c0 = constant_of(&self.coeffs[0])
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::Precondition("inverse needs a unit constant term".into()))?;
        let inv0 = c0.recip();
        let mut g: Vec<Poly> = vec![Poly::constant(inv0.clone())];
        for n in 1..=self.order {
            let mut acc = Poly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = &acc + &(&self.coeffs[k] * &g[n - k]);
                }
            }
            g.push(acc.scale(&-inv0.clone()));
        }
        Ok(FormalSeries::new(self.order, g))
    }

    /// `exp(f)`; the constant term must vanish.
    pub fn exp(&self) -> Result<FormalSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("exp needs a zero constant term".into()));
        }
        let mut g: Vec<Poly> = vec![Poly::one()];
        for n in 1..=self.order {
            let mut acc = Poly::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = &acc + &(&self.coeffs[k] * &g[n - k]).scale(&rat(k as i64));
                }
            }
            g.push(acc.scale(&ratio(1, n as i64)));
        }
        Ok(FormalSeries::new(self.order, g))
    }

    /// `log(f)`; the constant term must be 1.
    pub fn log(&self) -> Result<FormalSeries> {
        if self.coeffs[0] != Poly::one() {
            return Err(Error::Precondition("log needs constant term 1".into()));
        }
        let mut g: Vec<Poly> = vec![Poly::zero()];
        for n in 1..=self.order {
            let mut acc = Poly::zero();
            for (k, gk) in g.iter().enumerate().skip(1) {
                if !gk.is_zero() && !self.coeffs[n - k].is_zero() {
                    acc = &acc + &(gk * &self.coeffs[n - k]).scale(&rat(k as i64));
                }
            }
            g.push(&self.coeffs[n] - &acc.scale(&ratio(1, n as i64)));
        }
        Ok(FormalSeries::new(self.order, g))
    }

    /// `f^k` for an integer `k`; negative powers need an invertible series.
    pub fn pow_int(&self, k: i64) -> Result<FormalSeries> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut out = FormalSeries::one(self.order);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// `f^e = exp(e · log f)` for a polynomial exponent such as `q`.
    pub fn pow_poly(&self, e: &Poly) -> Result<FormalSeries> {
        self.log()?.mul_poly(e).exp()
    }

    /// `d/dz`, losing one order of precision.
    pub fn derivative_z(&self) -> FormalSeries {
        let order = self.order.saturating_sub(1);
        FormalSeries::from_fn(order, |n| {
            self.coeffs
                .get(n + 1)
                .map(|c| c.scale(&rat(n as i64 + 1)))
                .unwrap_or_else(Poly::zero)
        })
    }

    /// Formal derivative of every coefficient in `v`.
    pub fn derivative(&self, v: Var) -> FormalSeries {
        self.map_coeffs(|c| c.derivative(v))
    }

    /// `f(r z)`.
    pub fn scale_z(&self, r: &Rational) -> FormalSeries {
        FormalSeries::from_fn(self.order, |n| self.coeffs[n].scale(&pow_rat(r, n as u32)))
    }

    pub fn substitute(&self, v: Var, with: &Poly) -> FormalSeries {
        self.map_coeffs(|c| c.substitute(v, with))
    }

    /// `n ↦ n! c_n` as decimal-string coefficient data.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..=self.order)
            .map(|n| {
                let c = self.egf_coeff(n);
                json!({ "n": n, "poly": c.to_string(), "coeffs": c.to_json() })
            })
            .collect();
        json!({ "order": self.order, "egf_coeffs": rows })
    }
}

impl fmt::Display for FormalSeries {
    /// One line per `n`: `n: n!·c_n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in 0..=self.order {
            writeln!(f, "{n}: {}", self.egf_coeff(n))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Builders

/// Generating functions that can be built by name.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesName {
    /// `S(x, z)`, descents over first-kind simsun permutations.
    Sxz,
    /// `Ŵ(x, z)`, left peaks over all permutations.
    What,
    /// `Ŵ(2x, z/2)²`.
    SxzFromWhat,
    /// `1 / (cos z − sin z)`.
    Springer,
    /// `S(x, z)^q`.
    Sxqz,
    /// `(1 − sin z)^{−q}`.
    OneMinusSinNegq,
    /// `e^{q z (y−1)} S(x, z)^q`.
    Trivariate,
}

impl SeriesName {
    pub const ALL: [SeriesName; 7] = [
        SeriesName::Sxz,
        SeriesName::What,
        SeriesName::SxzFromWhat,
        SeriesName::Springer,
        SeriesName::Sxqz,
        SeriesName::OneMinusSinNegq,
        SeriesName::Trivariate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesName::Sxz => "Sxz",
            SeriesName::What => "What",
            SeriesName::SxzFromWhat => "Sxz-from-What",
            SeriesName::Springer => "springer",
            SeriesName::Sxqz => "Sxqz",
            SeriesName::OneMinusSinNegq => "one-minus-sin-negq",
            SeriesName::Trivariate => "trivariate",
        }
    }
}

impl FromStr for SeriesName {
    type Err = Error;

    fn from_str(s: &str) -> Result<SeriesName> {
        SeriesName::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "series",
                name: s.to_string(),
            })
    }
}

/// Even and odd halves `Σ b^j z^{2j}/(c^j (2j)!)` and
/// `Σ b^j z^{2j+1}/(c^j d (2j+1)!)`, i.e. `cos(u)` and `sin(u)/√a` with the
/// square root absorbed into the polynomial `b`.
fn split_trig(order: usize, b: &Poly, c: i64, d: i64) -> (FormalSeries, FormalSeries) {
    let mut even = FormalSeries::zero(order);
    let mut odd = FormalSeries::zero(order);
    let mut bj = Poly::one();
    for j in 0..=order / 2 {
        let cj = BigInt::from(c).pow(j as u32);
        let e = 2 * j;
        even.coeffs[e] = bj.scale(&Rational::new(BigInt::one(), &cj * factorial(e)));
        if e < order {
            odd.coeffs[e + 1] = bj.scale(&Rational::new(BigInt::one(), cj * d * factorial(e + 1)));
        }
        bj = &bj * b;
    }
    (even, odd)
}

fn sin_cos(order: usize) -> (FormalSeries, FormalSeries) {
    let (cos, sin) = split_trig(order, &Poly::int(-1), 1, 1);
    (sin, cos)
}

/// Builds a named series to `order`.
pub fn build(name: SeriesName, order: usize) -> Result<FormalSeries> {
    check_range("order", order, 0, MAX_ORDER)?;
    let q = Poly::q();
    match name {
        SeriesName::Sxz => {
            let (c, s) = split_trig(order, &Poly::from_coeffs([1, -2]), 4, 2);
            c.sub(&s).inverse()?.pow_int(2)
        }
        SeriesName::What => {
            let (c, s) = split_trig(order, &Poly::from_coeffs([1, -1]), 1, 1);
            c.sub(&s).inverse()
        }
        SeriesName::SxzFromWhat => {
            let w = build(SeriesName::What, order)?;
            w.substitute(Var::X, &Poly::from_coeffs([0, 2]))
                .scale_z(&ratio(1, 2))
                .pow_int(2)
        }
        SeriesName::Springer => {
            let (sin, cos) = sin_cos(order);
            cos.sub(&sin).inverse()
        }
        SeriesName::Sxqz => build(SeriesName::Sxz, order)?.pow_poly(&q),
        SeriesName::OneMinusSinNegq => {
            let (sin, _) = sin_cos(order);
            FormalSeries::one(order).sub(&sin).pow_poly(&-q)
        }
        SeriesName::Trivariate => {
            let exponent = &q * &(&Poly::y() - &Poly::one());
            let e = FormalSeries::new(order, vec![Poly::zero(), exponent]).exp()?;
            Ok(e.mul(&build(SeriesName::Sxqz, order)?))
        }
    }
}

// ---------------------------------------------------------------------------
// Series-level identities

/// Identifiers accepted by [`verify_series`].
pub const SERIES_IDS: [&str; 9] = [
    "S-eq-What-squared",
    "coeff-match-Sxz",
    "coeff-match-What",
    "coeff-match-Sxq",
    "coeff-match-springer",
    "pde21",
    "cud",
    "S1q-eq-one-minus-sin",
    "trivar-egf",
];

/// Largest `n` for which enumeration-backed series checks run.
pub const ENUMERATION_LIMIT: usize = 9;

/// Largest `n` for which Springer coefficients are compared with snakes.
pub const SNAKE_LIMIT: usize = 8;

fn match_triangle(
    engine: &Engine,
    id: &str,
    series: &FormalSeries,
    family: Family,
) -> Result<IdentityReport> {
    let order = series.order();
    let t = engine.triangle(family, order)?;
    Ok(IdentityReport::run(id, 0, order, |n| {
        expect_eq(
            &format!("{family} row"),
            &series.egf_coeff(n),
            t.row(n).expect("row"),
        )
    }))
}

/// Checks a series identity coefficient by coefficient up to `order`.
pub fn verify_series(engine: &Engine, id: &str, order: usize) -> Result<IdentityReport> {
    check_range("order", order, 0, MAX_ORDER)?;
    match id {
        "S-eq-What-squared" => {
            let a = build(SeriesName::Sxz, order)?;
            let b = build(SeriesName::SxzFromWhat, order)?;
            Ok(IdentityReport::run(id, 0, order, |n| {
                expect_eq("coefficient", a.coeff(n), b.coeff(n))
            }))
        }
        "coeff-match-Sxz" => match_triangle(engine, id, &build(SeriesName::Sxz, order)?, Family::S),
        "coeff-match-What" => {
            match_triangle(engine, id, &build(SeriesName::What, order)?, Family::What)
        }
        "coeff-match-Sxq" => {
            match_triangle(engine, id, &build(SeriesName::Sxqz, order)?, Family::Sxq)
        }
        "trivar-egf" => match_triangle(
            engine,
            id,
            &build(SeriesName::Trivariate, order)?,
            Family::Sxyq,
        ),
        "coeff-match-springer" => {
            let s = build(SeriesName::Springer, order)?;
            let what = engine.triangle(Family::What, order)?;
            Ok(IdentityReport::run(id, 0, order, |n| {
                let c = s.egf_coeff(n);
                let at2 = what
                    .row(n)
                    .expect("row")
                    .evaluate(&[(Var::X, rat(2))])
                    .map_err(|e| e.to_string())?;
                expect_eq("What_n(2)", &c, &Poly::constant(at2))?;
                if n <= SNAKE_LIMIT {
                    let snakes = Poly::int(count_snakes(n) as i64);
                    expect_eq("snake count", &c, &snakes)?;
                }
                Ok(())
            }))
        }
        "pde21" => {
            let s = build(SeriesName::Sxqz, order)?;
            let (x, q) = (Poly::x(), Poly::q());
            let x_one_minus_2x = Poly::from_coeffs([0, 1, -2]);
            let upper = order.saturating_sub(1);
            Ok(IdentityReport::run(id, 0, upper, |n| {
                let c = s.coeff(n);
                let lhs =
                    &s.coeff(n + 1).scale(&rat(n as i64 + 1)) - &(&x * c).scale(&rat(n as i64));
                let rhs = &(&q * c) + &(&x_one_minus_2x * &c.derivative(Var::X));
                expect_eq("z-coefficient", &lhs, &rhs)
            }))
        }
        "S1q-eq-one-minus-sin" => {
            let a = build(SeriesName::Sxqz, order)?.substitute(Var::X, &Poly::one());
            let b = build(SeriesName::OneMinusSinNegq, order)?;
            Ok(IdentityReport::run(id, 0, order, |n| {
                expect_eq("coefficient", a.coeff(n), b.coeff(n))
            }))
        }
        "cud" => {
            let upper = order.min(ENUMERATION_LIMIT);
            let s = build(SeriesName::OneMinusSinNegq, upper)?;
            Ok(IdentityReport::run(id, 0, upper, |n| {
                let c = s.egf_coeff(n);
                let ss = distribution(Class::Ss, &[Stat::Cyc], n).map_err(|e| e.to_string())?;
                let cud = distribution(Class::Cud, &[Stat::Cyc], n).map_err(|e| e.to_string())?;
                expect_eq("second kind", &c, &ss)?;
                expect_eq("cycle-up-down", &c, &cud)
            }))
        }
        _ => Err(Error::Unknown {
            kind: "series identity",
            name: id.to_string(),
        }),
    }
}

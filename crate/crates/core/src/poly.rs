//! Sparse multivariate polynomials in `x`, `q`, `y` with exact rational
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Polynomial variables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    X,
    Q,
    Y,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Q, Var::Y];

    fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Q => "q",
            Var::Y => "y",
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        match s {
            "x" => Ok(Var::X),
            "q" => Ok(Var::Q),
            "y" => Ok(Var::Y),
            _ => Err(Error::Unknown {
                kind: "variable",
                name: s.to_string(),
            }),
        }
    }
}

/// Exponents of `(x, q, y)`.
pub type Monomial = [u32; 3];

/// Exact polynomial. Terms are kept ordered by `(deg_x, deg_q, deg_y)` and no
/// zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::monomial([0, 0, 0], c)
    }

    pub fn int(c: i64) -> Poly {
        Poly::constant(rat(c))
    }

    pub fn var(v: Var) -> Poly {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Poly::monomial(e, Rational::one())
    }

    pub fn x() -> Poly {
        Poly::var(Var::X)
    }

    pub fn q() -> Poly {
        Poly::var(Var::Q)
    }

    pub fn y() -> Poly {
        Poly::var(Var::Y)
    }

    pub fn monomial(e: Monomial, c: Rational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Poly { terms }
    }

    /// `Σ coeffs[k] x^k`.
    pub fn from_coeffs<I, T>(coeffs: I) -> Poly
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = Poly::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term([k as u32, 0, 0], Rational::from_integer(c.into()));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: Monomial) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn degree(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v.index()] > 0)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplication by a monomial `x^a q^b y^c`.
    pub fn shift(&self, by: Monomial) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| ([e[0] + by[0], e[1] + by[1], e[2] + by[2]], v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> Poly {
        let i = v.index();
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = *e;
                f[i] -= 1;
                out.add_term(f, c * rat(e[i] as i64));
            }
        }
        out
    }

    /// Substitutes a rational value for one variable.
    pub fn eval_at(&self, v: Var, value: &Rational) -> Poly {
        let i = v.index();
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut f = *e;
            f[i] = 0;
            out.add_term(f, c * pow_rat(value, e[i]));
        }
        out
    }

    /// Full evaluation; every variable occurring in the polynomial must be
    /// assigned.
    pub fn evaluate(&self, assignment: &[(Var, Rational)]) -> Result<Rational> {
        let mut p = self.clone();
        for (v, val) in assignment {
            p = p.eval_at(*v, val);
        }
        if let Some(v) = Var::ALL.into_iter().find(|&v| p.uses(v)) {
            return Err(Error::Precondition(format!(
                "variable {} left unassigned",
                v.name()
            )));
        }
        Ok(p.coeff([0, 0, 0]))
    }

    /// Composition: replaces `v` by the polynomial `with`.
    pub fn substitute(&self, v: Var, with: &Poly) -> Poly {
        let i = v.index();
        let max = self.degree(v).unwrap_or(0);
        let mut powers = vec![Poly::one()];
        for k in 1..=max as usize {
            powers.push(&powers[k - 1] * with);
        }
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            let mut f = *e;
            f[i] = 0;
            let term = powers[e[i] as usize].shift(f).scale(c);
            out = &out + &term;
        }
        out
    }

    /// Substitution by variable name, for callers holding user input.
    pub fn substitute_named(&self, name: &str, with: &Poly) -> Result<Poly> {
        let v: Var = name.parse()?;
        Ok(self.substitute(v, with))
    }

    /// Coefficient list in `x`, if the polynomial is univariate in `x` with
    /// integer coefficients.
    pub fn int_coeffs(&self) -> Option<Vec<BigInt>> {
        let deg = match self.degree(Var::X) {
            None => return Some(Vec::new()),
            Some(d) => d as usize,
        };
        let mut out = vec![BigInt::zero(); deg + 1];
        for (e, c) in &self.terms {
            if e[1] != 0 || e[2] != 0 || !c.is_integer() {
                return None;
            }
            out[e[0] as usize] = c.to_integer();
        }
        Some(out)
    }

    /// Coefficient list in `x` over the rationals; `None` if other variables
    /// occur.
    pub fn rat_coeffs(&self) -> Option<Vec<Rational>> {
        let deg = match self.degree(Var::X) {
            None => return Some(Vec::new()),
            Some(d) => d as usize,
        };
        let mut out = vec![Rational::zero(); deg + 1];
        for (e, c) in &self.terms {
            if e[1] != 0 || e[2] != 0 {
                return None;
            }
            out[e[0] as usize] = c.clone();
        }
        Some(out)
    }

    /// Coefficient of `x^k` as a polynomial in the remaining variables.
    pub fn coeff_of_x(&self, k: u32) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[0] == k {
                out.add_term([0, e[1], e[2]], c.clone());
            }
        }
        out
    }

    pub fn all_coeffs_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// JSON form: univariate integer polynomials become coefficient arrays
    /// (increasing degree, decimal strings); anything else becomes a term list.
    pub fn to_json(&self) -> Value {
        if let Some(c) = self.int_coeffs() {
            return Value::Array(c.iter().map(|v| Value::String(v.to_string())).collect());
        }
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!({ "x": e[0], "q": e[1], "y": e[2], "coeff": c.to_string() }))
                .collect(),
        )
    }

    /// Exact division by `x^k`, if possible.
    pub fn div_x_pow(&self, k: u32) -> Option<Poly> {
        let mut out = Poly::zero();
        for (e, c) in &self.terms {
            if e[0] < k {
                return None;
            }
            out.add_term([e[0] - k, e[1], e[2]], c.clone());
        }
        Some(out)
    }
}

pub(crate) fn pow_rat(base: &Rational, k: u32) -> Rational {
    let mut r = Rational::one();
    for _ in 0..k {
        r *= base;
    }
    r
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

fn write_coeff_abs(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    let a = c.abs();
    if a.is_integer() {
        write!(f, "{}", a.numer())
    } else {
        write!(f, "{}/{}", a.numer(), a.denom())
    }
}

/// Canonical text, terms in increasing `(x, q, y)` exponent order:
/// `1 + 11*x + 4*x^2`, `q + x*q`, `1/2*x - 3`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = *e == [0, 0, 0];
            let unit = c.abs().is_one();
            let mut first = true;
            if is_const || !unit {
                write_coeff_abs(f, c)?;
                first = false;
            }
            for v in Var::ALL {
                let k = e[v.index()];
                if k == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(v.name())?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses sums of terms `c*v^k*…` as produced by `Display`.
    fn from_str(s: &str) -> Result<Poly> {
        let bad = || Error::Parse(format!("cannot parse polynomial `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut out = Poly::zero();
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                pieces.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '-' && i == 0 {
                neg = true;
            } else if ch == '+' && i == 0 {
            } else {
                cur.push(ch);
            }
        }
        pieces.push((neg, cur));
        for (neg, piece) in pieces {
            if piece.is_empty() {
                return Err(bad());
            }
            let mut coeff = Rational::one();
            let mut e = [0u32; 3];
            for factor in piece.split('*') {
                if let Some(first) = factor.chars().next() {
                    if first.is_ascii_digit() {
                        let c = match factor.split_once('/') {
                            Some((a, b)) => Rational::new(
                                a.parse().map_err(|_| bad())?,
                                b.parse().map_err(|_| bad())?,
                            ),
                            None => Rational::from_integer(factor.parse().map_err(|_| bad())?),
                        };
                        coeff *= c;
                        continue;
                    }
                }
                let (name, k) = match factor.split_once('^') {
                    Some((n, k)) => (n, k.parse::<u32>().map_err(|_| bad())?),
                    None => (factor, 1),
                };
                let v: Var = name.parse()?;
                e[v.index()] += k;
            }
            out.add_term(e, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Converts a small big integer to `i64`, for display and test convenience.
pub fn to_i64(b: &BigInt) -> Option<i64> {
    b.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(
            Poly::from_coeffs([1, 11, 4]).to_string(),
            "1 + 11*x + 4*x^2"
        );
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p("x*q + q^3 + 3*x*q^2").to_string(), "q^3 + x*q + 3*x*q^2");
        assert_eq!(p("-1 + 2*x").to_string(), "-1 + 2*x");
        assert_eq!(p("1/2*x - 3").to_string(), "-3 + 1/2*x");
    }

    #[test]
    fn derivative_and_evaluation() {
        let s4 = Poly::from_coeffs([1, 11, 4]);
        assert_eq!(s4.derivative(Var::X), Poly::from_coeffs([11, 8]));
        assert_eq!(s4.evaluate(&[(Var::X, rat(1))]).unwrap(), rat(16));
        assert!(p("x + q").evaluate(&[(Var::X, rat(1))]).is_err());
    }

    #[test]
    fn substitution() {
        let s4 = Poly::from_coeffs([1, 11, 4]);
        let sq = s4.substitute(Var::X, &p("x^2"));
        assert_eq!(sq, p("1 + 11*x^2 + 4*x^4"));
        assert!(s4.substitute_named("z", &Poly::one()).is_err());
        assert_eq!(
            p("q + x").substitute_named("q", &p("2*x")).unwrap(),
            p("3*x")
        );
    }

    #[test]
    fn int_coeff_extraction() {
        assert_eq!(
            p("4*x^2 + 1").int_coeffs().unwrap(),
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(4)]
        );
        assert!(p("x*q").int_coeffs().is_none());
        assert!(p("1/2").int_coeffs().is_none());
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(0), BigInt::one());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(((0u32..4, 0u32..3, 0u32..2), -5i64..6, 1i64..4), 0..6).prop_map(
            |terms| {
                let mut out = Poly::zero();
                for ((a, b, c), n, d) in terms {
                    out.add_term([a, b, c], ratio(n, d));
                }
                out
            },
        )
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            // Leibniz rule
            prop_assert_eq!(
                (&a * &b).derivative(Var::X),
                &(&a.derivative(Var::X) * &b) + &(&a * &b.derivative(Var::X))
            );
        }

        #[test]
        fn display_parse_round_trip(a in arb_poly()) {
            let text = a.to_string();
            prop_assert_eq!(text.parse::<Poly>().unwrap(), a);
        }
    }
}

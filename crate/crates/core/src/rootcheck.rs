//! Exact real-root certification with Sturm sequences, and the root-ordering
//! relations between real-rooted polynomials.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{rat, ratio, Poly, Rational, Var};
use crate::report::IdentityReport;
use crate::triangle::{Engine, Family};

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UniPoly {
    c: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut c: Vec<Rational>) -> UniPoly {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UniPoly { c }
    }

    /// Converts a polynomial that only involves `x`.
    pub fn from_poly(p: &Poly) -> Result<UniPoly> {
        p.rat_coeffs()
            .map(UniPoly::new)
            .ok_or_else(|| Error::Precondition(format!("{p} is not univariate in x")))
    }

    pub fn to_poly(&self) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in self.c.iter().enumerate() {
            out.add_term([k as u32, 0, 0], c.clone());
        }
        out
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.c.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.c
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    fn scale(&self, s: &Rational) -> UniPoly {
        UniPoly::new(self.c.iter().map(|c| c * s).collect())
    }

    fn neg(&self) -> UniPoly {
        self.scale(&rat(-1))
    }

    /// Rescales to leading coefficient ±1 keeping the sign of the leading term.
    fn normalize_positive(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().abs().recip())
    }

    /// Integer coefficients with content 1, a positive multiple of `self`.
    fn primitive_integer(&self) -> Vec<BigInt> {
        let den = self.c.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .c
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if content.is_zero() || content.is_one() {
            return ints;
        }
        ints.into_iter().map(|c| c / &content).collect()
    }

    fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::default();
        }
        let mut out = vec![Rational::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in other.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (UniPoly::default(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        let inv = d.lead().recip();
        for i in (0..q.len()).rev() {
            let f = &r[i + dd] * &inv;
            if f.is_zero() {
                continue;
            }
            for (j, c) in d.c.iter().enumerate() {
                r[i + j] -= &f * c;
            }
            q[i] = f;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.normalize_positive();
        }
        a.monic()
    }

    fn exact_div(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero());
        q
    }

    /// `p = x^m · rest` with `rest(0) ≠ 0`.
    fn strip_zero_roots(&self) -> (usize, UniPoly) {
        let m = self.c.iter().take_while(|c| c.is_zero()).count();
        (m, UniPoly::new(self.c[m..].to_vec()))
    }

    /// Yun's decomposition `p = c · Π f_i^i` with squarefree, pairwise coprime
    /// monic `f_i`; entry `i-1` holds `f_i`.
    pub fn squarefree_decomposition(&self) -> Vec<UniPoly> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let d = f.derivative();
        let a0 = f.gcd(&d);
        let mut b = f.exact_div(&a0);
        let mut c = d.exact_div(&a0);
        let mut dd = c.sub(&b.derivative());
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&dd);
            out.push(a.clone());
            b = b.exact_div(&a);
            c = dd.exact_div(&a);
            dd = c.sub(&b.derivative());
        }
        while out.last().is_some_and(|f: &UniPoly| f.degree() == Some(0)) {
            out.pop();
        }
        out
    }

    fn sub(&self, other: &UniPoly) -> UniPoly {
        let len = self.c.len().max(other.c.len());
        UniPoly::new(
            (0..len)
                .map(|i| {
                    let a = self.c.get(i).cloned().unwrap_or_default();
                    let b = other.c.get(i).cloned().unwrap_or_default();
                    a - b
                })
                .collect(),
        )
    }

    /// Product of the distinct irreducible factors, monic.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return UniPoly::new(vec![Rational::one()]);
        }
        self.exact_div(&self.gcd(&self.derivative())).monic()
    }

    /// `1 + max |a_i| / |a_n|`; every real root lies in `(-B, B)`.
    pub fn cauchy_bound(&self) -> Rational {
        let lead = self.lead().abs();
        let max = self.c.iter().map(|c| c.abs()).max().unwrap_or_default();
        Rational::one() + max / lead
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

// ---------------------------------------------------------------------------
// Sturm sequences

/// The Sturm chain `p, p', -rem(p, p'), …` of a nonzero polynomial, each
/// member stored as a primitive integer polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Vec<BigInt>>,
}

/// Sign of `p(a/b)` for `b > 0`, via `Σ c_i a^i b^(d-i)`.
fn sign_at(p: &[BigInt], a: &BigInt, b: &BigInt) -> i8 {
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    for c in p.iter().rev() {
        acc = acc * a + c * &bpow;
        bpow *= b;
    }
    if acc.is_positive() {
        1
    } else if acc.is_negative() {
        -1
    } else {
        0
    }
}

impl SturmSequence {
    pub fn new(p: &UniPoly) -> SturmSequence {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            let r = UniPoly::new(
                r.neg()
                    .primitive_integer()
                    .into_iter()
                    .map(Rational::from_integer)
                    .collect(),
            );
            chain.push(r);
        }
        SturmSequence {
            chain: chain.iter().map(UniPoly::primitive_integer).collect(),
        }
    }

    /// Sign changes of the chain evaluated at `x`, zeros skipped.
    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let s = sign_at(p, x.numer(), x.denom());
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct real roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

// ---------------------------------------------------------------------------
// Isolation

/// A half-open interval `(lo, hi]` holding exactly one root; `lo == hi`
/// means the root is known exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_exact() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "({}, {}]", self.lo, self.hi)
        }
    }
}

/// The distinct real roots of a polynomial, isolated in increasing order,
/// with their multiplicities.
#[derive(Clone, Debug)]
pub struct RootIsolation {
    pub poly: UniPoly,
    pub roots: Vec<(RootInterval, usize)>,
}

fn isolate_squarefree(sqf: &UniPoly) -> Vec<RootInterval> {
    let mut out = Vec::new();
    if sqf.degree().unwrap_or(0) == 0 {
        return out;
    }
    let sturm = SturmSequence::new(sqf);
    let b = sqf.cauchy_bound();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sturm.count(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            let iv = if sqf.eval(&hi).is_zero() {
                RootInterval { lo: hi.clone(), hi }
            } else {
                RootInterval { lo, hi }
            };
            out.push(iv);
            continue;
        }
        let mid = (&lo + &hi) / rat(2);
        // pushed so that the lower half is processed first
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out
}

/// Halves `iv` (a root interval of the squarefree `sqf`) once.
pub fn refine(sqf: &UniPoly, iv: &RootInterval) -> RootInterval {
    if iv.is_exact() {
        return iv.clone();
    }
    let mid = (&iv.lo + &iv.hi) / rat(2);
    if sqf.eval(&mid).is_zero() {
        return RootInterval {
            lo: mid.clone(),
            hi: mid,
        };
    }
    if SturmSequence::new(sqf).count(&iv.lo, &mid) == 1 {
        RootInterval {
            lo: iv.lo.clone(),
            hi: mid,
        }
    } else {
        RootInterval {
            lo: mid,
            hi: iv.hi.clone(),
        }
    }
}

/// Isolates the distinct real roots of `p` with multiplicities.
pub fn isolate(p: &UniPoly) -> Result<RootIsolation> {
    if p.is_zero() {
        return Err(Error::Precondition(
            "the zero polynomial has no isolation".into(),
        ));
    }
    let sqf = p.squarefree_part();
    let factors = p.squarefree_decomposition();
    let sturms: Vec<SturmSequence> = factors.iter().map(SturmSequence::new).collect();
    let roots = isolate_squarefree(&sqf)
        .into_iter()
        .map(|iv| {
            let mult = multiplicity(&factors, &sturms, &iv);
            (iv, mult)
        })
        .collect();
    Ok(RootIsolation {
        poly: p.clone(),
        roots,
    })
}

fn multiplicity(factors: &[UniPoly], sturms: &[SturmSequence], iv: &RootInterval) -> usize {
    for (i, (f, s)) in factors.iter().zip(sturms).enumerate() {
        let hit = if iv.is_exact() {
            f.eval(&iv.lo).is_zero()
        } else {
            s.count(&iv.lo, &iv.hi) == 1
        };
        if hit {
            return i + 1;
        }
    }
    0
}

/// Outcome of [`certify_rz`].
#[derive(Clone, Debug)]
pub struct RzCertificate {
    pub real_rooted: bool,
    pub all_nonpositive: bool,
    pub all_simple: bool,
    /// Multiplicity of the root at 0, factored out before the analysis.
    pub zero_root_multiplicity: usize,
    pub isolation: RootIsolation,
}

impl RzCertificate {
    /// Real-rooted with simple, nonpositive roots.
    pub fn holds(&self) -> bool {
        self.real_rooted && self.all_nonpositive && self.all_simple
    }
}

/// Certifies real-rootedness, sign and simplicity of the roots of `p`.
pub fn certify_rz(p: &Poly) -> Result<RzCertificate> {
    let u = UniPoly::from_poly(p)?;
    if u.is_zero() {
        return Err(Error::Precondition("the zero polynomial".into()));
    }
    let (m, rest) = u.strip_zero_roots();
    let sqf = rest.squarefree_part();
    let deg = sqf.degree().unwrap_or(0);
    let (real_rooted, all_nonpositive) = if deg == 0 {
        (true, true)
    } else {
        let sturm = SturmSequence::new(&sqf);
        let b = sqf.cauchy_bound();
        (
            sturm.count(&-b.clone(), &b) == deg,
            sturm.count(&Rational::zero(), &b) == 0,
        )
    };
    let all_simple = m <= 1 && rest.gcd(&rest.derivative()).degree().unwrap_or(0) == 0;
    Ok(RzCertificate {
        real_rooted,
        all_nonpositive,
        all_simple,
        zero_root_multiplicity: m,
        isolation: isolate(&u)?,
    })
}

// ---------------------------------------------------------------------------
// Relations

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Relation {
    /// `p † q`: `deg q = deg p + 1` and `θ₁ ≤ ξ₁ ≤ θ₂ ≤ ⋯ ≤ ξ_n ≤ θ_{n+1}`.
    Interlace,
    /// `p ≪ q`: equal degrees and `ξ₁ ≤ θ₁ ≤ ξ₂ ≤ ⋯ ≤ ξ_n ≤ θ_n`.
    AlternatesLeft,
    /// `p ≺ q`: either of the above, picked by degree.
    Precede,
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Relation> {
        Ok(match s {
            "interlace" | "†" => Relation::Interlace,
            "alternates-left" | "≪" | "<<" => Relation::AlternatesLeft,
            "precede" | "≺" => Relation::Precede,
            _ => {
                return Err(Error::Unknown {
                    kind: "relation",
                    name: s.to_string(),
                })
            }
        })
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Interlace => "†",
            Relation::AlternatesLeft => "≪",
            Relation::Precede => "≺",
        })
    }
}

/// Verdict of [`check_relation`]. Roots are given as ranks into the sorted
/// distinct roots of `p·q`, so equal ranks are proven common roots.
#[derive(Clone, Debug)]
pub struct RelationReport {
    /// The relation actually tested (`Precede` resolves to one of the others).
    pub relation: Relation,
    pub holds: bool,
    pub p_roots: Vec<usize>,
    pub q_roots: Vec<usize>,
    pub common: Vec<RootInterval>,
}

fn expanded_ranks(all: &[RootInterval], p: &UniPoly) -> Vec<usize> {
    let factors = p.squarefree_decomposition();
    let sturms: Vec<SturmSequence> = factors.iter().map(SturmSequence::new).collect();
    let mut out = Vec::new();
    for (rank, iv) in all.iter().enumerate() {
        let m = multiplicity(&factors, &sturms, iv);
        out.extend(std::iter::repeat_n(rank, m));
    }
    out
}

/// Decides `p R q` for real-rooted `p`, `q` from exactly ordered roots.
pub fn check_relation(p: &Poly, q: &Poly, relation: Relation) -> Result<RelationReport> {
    let (up, uq) = (UniPoly::from_poly(p)?, UniPoly::from_poly(q)?);
    let (dp, dq) = match (up.degree(), uq.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::Precondition("zero polynomial in relation".into())),
    };
    let resolved = match relation {
        Relation::Precede if dq == dp + 1 => Relation::Interlace,
        Relation::Precede if dq == dp => Relation::AlternatesLeft,
        Relation::Interlace if dq == dp + 1 => Relation::Interlace,
        Relation::AlternatesLeft if dq == dp => Relation::AlternatesLeft,
        _ => {
            return Err(Error::Precondition(format!(
                "degrees {dp} and {dq} do not fit {relation}"
            )))
        }
    };
    for (name, u) in [("p", &up), ("q", &uq)] {
        let sqf = u.squarefree_part();
        let distinct = sqf.degree().unwrap_or(0);
        let b = sqf.cauchy_bound();
        if distinct > 0 && SturmSequence::new(&sqf).count(&-b.clone(), &b) != distinct {
            return Err(Error::Precondition(format!(
                "{name} = {u} is not real-rooted"
            )));
        }
    }
    let joint = up.mul(&uq).squarefree_part();
    let all = isolate_squarefree(&joint);
    let xi = expanded_ranks(&all, &up);
    let theta = expanded_ranks(&all, &uq);
    let holds = match resolved {
        Relation::Interlace => (0..xi.len()).all(|i| theta[i] <= xi[i] && xi[i] <= theta[i + 1]),
        _ => {
            (0..xi.len()).all(|i| xi[i] <= theta[i] && (i + 1 == xi.len() || theta[i] <= xi[i + 1]))
        }
    };
    let common = all
        .iter()
        .enumerate()
        .filter(|(r, _)| xi.contains(r) && theta.contains(r))
        .map(|(_, iv)| iv.clone())
        .collect();
    Ok(RelationReport {
        relation: resolved,
        holds,
        p_roots: xi,
        q_roots: theta,
        common,
    })
}

// ---------------------------------------------------------------------------
// Suites

pub const ROOT_SUITES: [&str; 4] = ["rz", "lemma-chow", "theorem-interlace", "corollary-sxq"];

/// Largest `n_max` accepted by [`verify_roots`].
pub const MAX_ROOT_N: usize = 30;

/// Sample values of `q` for the `S_n(x, q)` suite.
pub fn sample_qs() -> [Rational; 4] {
    [ratio(1, 2), rat(1), rat(2), rat(3)]
}

fn relation_holds(p: &Poly, q: &Poly, r: Relation, what: &str) -> std::result::Result<(), String> {
    let report = check_relation(p, q, r).map_err(|e| format!("{what}: {e}"))?;
    if report.holds {
        Ok(())
    } else {
        Err(format!("{what} fails for {p} and {q}"))
    }
}

fn rz_holds(p: &Poly, what: &str) -> std::result::Result<(), String> {
    let c = certify_rz(p).map_err(|e| format!("{what}: {e}"))?;
    if c.holds() {
        Ok(())
    } else {
        Err(format!(
            "{what} = {p}: real_rooted={} nonpositive={} simple={}",
            c.real_rooted, c.all_nonpositive, c.all_simple
        ))
    }
}

/// Runs a root suite for `2 ≤ n ≤ n_max`.
pub fn verify_roots(engine: &Engine, suite: &str, n_max: usize) -> Result<IdentityReport> {
    crate::error::check_range("n_max", n_max, 2, MAX_ROOT_N)?;
    let row = |t: &crate::triangle::Triangle, n: usize| t.row(n).expect("row").clone();
    match suite {
        "rz" => {
            let fams = [Family::S, Family::P, Family::Pplus, Family::Pminus]
                .map(|f| engine.triangle(f, n_max));
            let fams: Vec<_> = fams.into_iter().collect::<Result<_>>()?;
            Ok(IdentityReport::run(suite, 2, n_max, |n| {
                for t in &fams {
                    rz_holds(&row(t, n), &format!("{}_{n}", t.family()))?;
                }
                Ok(())
            }))
        }
        "lemma-chow" => {
            let s = engine.triangle(Family::S, n_max + 1)?;
            Ok(IdentityReport::run(suite, 2, n_max, |n| {
                rz_holds(&row(&s, n), &format!("S_{n}"))?;
                relation_holds(
                    &row(&s, n),
                    &row(&s, n + 1),
                    Relation::Precede,
                    "S_n ≺ S_{n+1}",
                )
            }))
        }
        "theorem-interlace" => {
            let s = engine.triangle(Family::S, n_max)?;
            let p = engine.triangle(Family::P, n_max + 1)?;
            let pp = engine.triangle(Family::Pplus, n_max + 1)?;
            let pm = engine.triangle(Family::Pminus, n_max + 1)?;
            Ok(IdentityReport::run(suite, 2, n_max, |n| {
                let sn = row(&s, n);
                relation_holds(
                    &row(&p, n + 1),
                    &sn,
                    Relation::AlternatesLeft,
                    "P_{n+1} ≪ S_n",
                )?;
                relation_holds(&row(&pp, n + 1), &sn, Relation::Precede, "P⁺_{n+1} ≺ S_n")?;
                relation_holds(
                    &sn,
                    &row(&pm, n + 1),
                    Relation::AlternatesLeft,
                    "S_n ≪ P⁻_{n+1}",
                )
            }))
        }
        "corollary-sxq" => {
            let t = engine.triangle(Family::Sxq, n_max)?;
            Ok(IdentityReport::run(suite, 2, n_max, |n| {
                for qv in sample_qs() {
                    let p = row(&t, n).eval_at(Var::Q, &qv);
                    rz_holds(&p, &format!("S_{n}(x, {qv})"))?;
                }
                Ok(())
            }))
        }
        _ => Err(Error::Unknown {
            kind: "root suite",
            name: suite.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn from_roots(roots: &[(i64, usize)]) -> UniPoly {
        let mut p = UniPoly::new(vec![rat(1)]);
        for &(r, m) in roots {
            for _ in 0..m {
                p = p.mul(&UniPoly::new(vec![rat(-r), rat(1)]));
            }
        }
        p
    }

    #[test]
    fn certifies_listed_rows() {
        let c = certify_rz(&poly("1 + 11*x + 4*x^2")).unwrap();
        assert!(c.holds());
        assert_eq!(c.isolation.roots.len(), 2);
        assert!(certify_rz(&Poly::one()).unwrap().holds());
        assert!(certify_rz(&poly("1 + 26*x + 34*x^2")).unwrap().holds());
        let c = certify_rz(&poly("1 + x^2")).unwrap();
        assert!(!c.real_rooted);
        let c = certify_rz(&poly("1 - x")).unwrap();
        assert!(c.real_rooted && !c.all_nonpositive);
        let c = certify_rz(&poly("1 + 2*x + x^2")).unwrap();
        assert!(c.real_rooted && !c.all_simple);
        let c = certify_rz(&poly("x^2 + x^3")).unwrap();
        assert_eq!(c.zero_root_multiplicity, 2);
        assert!(!c.all_simple);
        assert!(certify_rz(&Poly::zero()).is_err());
        assert!(certify_rz(&poly("x*q")).is_err());
    }

    #[test]
    fn relations_from_examples() {
        let r = check_relation(&poly("3 + 2*x"), &poly("1 + x"), Relation::AlternatesLeft).unwrap();
        assert!(r.holds);
        assert!(
            check_relation(&Poly::int(5), &poly("2 + 3*x"), Relation::Precede)
                .unwrap()
                .holds
        );
        let s4 = poly("1 + 11*x + 4*x^2");
        let s5 = poly("1 + 26*x + 34*x^2");
        assert!(check_relation(&s4, &s5, Relation::Precede).unwrap().holds);
        assert!(
            check_relation(&poly("1 + x"), &poly("1 + 4*x"), Relation::Precede)
                .unwrap()
                .holds
        );
        assert!(
            !check_relation(&poly("1 + 4*x"), &poly("1 + x"), Relation::AlternatesLeft)
                .unwrap()
                .holds
        );
        let p5 = poly("5 + 44*x + 12*x^2");
        assert!(
            check_relation(&p5, &s4, Relation::AlternatesLeft)
                .unwrap()
                .holds
        );
        assert!(check_relation(&s4, &p5, Relation::Interlace).is_err());
    }

    #[test]
    fn common_roots_honor_weak_inequalities() {
        let p = from_roots(&[(-3, 1), (-1, 1)]).to_poly();
        let q = from_roots(&[(-3, 1), (-1, 1)]).to_poly();
        let r = check_relation(&p, &q, Relation::AlternatesLeft).unwrap();
        assert!(r.holds);
        assert_eq!(r.common.len(), 2);
        let q = from_roots(&[(-4, 1), (-3, 1), (0, 1)]).to_poly();
        assert!(check_relation(&p, &q, Relation::Interlace).unwrap().holds);
        let q = from_roots(&[(-4, 1), (-2, 2)]).to_poly();
        assert!(!check_relation(&p, &q, Relation::Interlace).unwrap().holds);
    }

    #[test]
    fn multiplicities() {
        let p = from_roots(&[(-2, 3), (1, 1), (5, 2)]);
        let iso = isolate(&p).unwrap();
        let mults: Vec<usize> = iso.roots.iter().map(|(_, m)| *m).collect();
        assert_eq!(mults, [3, 1, 2]);
        let mut iv = iso.roots[1].0.clone();
        for _ in 0..20 {
            iv = refine(&p.squarefree_part(), &iv);
        }
        assert!(iv.lo < rat(1) && rat(1) <= iv.hi);
    }

    #[test]
    fn suites_small() {
        let e = Engine::new();
        for suite in ROOT_SUITES {
            let r = verify_roots(&e, suite, 8).unwrap();
            assert!(r.passed(), "{suite}: {:?}", r.counterexample);
        }
        assert!(verify_roots(&e, "nope", 4).is_err());
        assert!(verify_roots(&e, "rz", 1).is_err());
    }

    proptest! {
        #[test]
        fn sturm_counts_match_known_roots(
            roots in prop::collection::vec((-6i64..7, 1usize..3), 1..5),
            a in -8i64..8,
            w in 1i64..10,
        ) {
            let p = from_roots(&roots);
            let mut distinct: Vec<i64> = roots.iter().map(|r| r.0).collect();
            distinct.sort();
            distinct.dedup();
            let sturm = SturmSequence::new(&p.squarefree_part());
            let expected = distinct.iter().filter(|&&r| a < r && r <= a + w).count();
            prop_assert_eq!(sturm.count(&rat(a), &rat(a + w)), expected);
            let iso = isolate(&p).unwrap();
            prop_assert_eq!(iso.roots.len(), distinct.len());
            for ((iv, m), r) in iso.roots.iter().zip(&distinct) {
                prop_assert!(iv.lo < rat(*r) && rat(*r) <= iv.hi || iv.is_exact() && iv.lo == rat(*r));
                let mult: usize = roots.iter().filter(|x| x.0 == *r).map(|x| x.1).sum();
                prop_assert_eq!(*m, mult);
            }
        }
    }
}

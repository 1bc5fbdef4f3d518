//! Simsun permutations of the first and second kind: recognizers, insertion
//! generators, labelings and distribution polynomials.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{check_range, Error, Result};
use crate::perm::{
    self, bypass, for_each_permutation, write_word, CycleDecomposition, Permutation,
};
use crate::poly::{Poly, Rational};

/// `true` iff no restriction of `w` to `[k]` has a double descent.
pub fn is_simsun_first_word(w: &[usize]) -> bool {
    let n = w.len();
    let mut sub = Vec::with_capacity(n);
    for k in 3..=n {
        sub.clear();
        sub.extend(w.iter().copied().filter(|&v| v <= k));
        if sub.windows(3).any(|t| t[0] > t[1] && t[1] > t[2]) {
            return false;
        }
    }
    true
}

pub fn is_simsun_first(p: &Permutation) -> bool {
    is_simsun_first_word(p.word())
}

fn has_double_exc(succ: &[usize]) -> bool {
    let m = succ.len() - 1;
    let mut pred = vec![0; m + 1];
    for i in 1..=m {
        pred[succ[i]] = i;
    }
    (1..=m).any(|x| pred[x] < x && x < succ[x])
}

/// `true` iff removing the `k` largest letters leaves no double excedance,
/// for every `k` from 0 to `n`.
pub fn is_simsun_second_word(w: &[usize]) -> bool {
    let mut succ = Vec::with_capacity(w.len() + 1);
    succ.push(0);
    succ.extend_from_slice(w);
    for m in (1..=w.len()).rev() {
        if has_double_exc(&succ) {
            return false;
        }
        bypass(&mut succ, m);
    }
    true
}

pub fn is_simsun_second(p: &Permutation) -> bool {
    is_simsun_second_word(p.word())
}

/// Gaps after which `m + 1` may not be inserted into a simsun word `w` of
/// length `m`: gap `g` (after `w[g-1]`, 0 = front) is forbidden when
/// `w[g] > w[g+1]` (0-based), i.e. the next letter starts a descent.
fn forbidden_gap(w: &[usize], g: usize) -> bool {
    g + 1 < w.len() && w[g] > w[g + 1]
}

/// Depth-first visit of every member of `RS_n` (insertion order, not
/// lexicographic).
pub fn for_each_simsun_first(n: usize, mut f: impl FnMut(&[usize])) {
    fn go(w: &mut Vec<usize>, n: usize, f: &mut impl FnMut(&[usize])) {
        let m = w.len();
        if m == n {
            f(w);
            return;
        }
        for g in 0..=m {
            if forbidden_gap(w, g) {
                continue;
            }
            w.insert(g, m + 1);
            go(w, n, f);
            w.remove(g);
        }
    }
    let mut w = Vec::with_capacity(n);
    go(&mut w, n, &mut f);
}

/// `RS_n` in lexicographic order, built by insertion of the largest letter.
pub fn gen_simsun_first(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_simsun_first(n, |w| {
        out.push(Permutation::from_word_unchecked(w.to_vec()))
    });
    out.sort();
    out
}

fn is_cyclic_peak(succ: &[usize], pred: &[usize], i: usize) -> bool {
    pred[i] < i && i > succ[i]
}

/// Depth-first visit of every member of `SS_n`, passed as the one-line word.
pub fn for_each_simsun_second(n: usize, mut f: impl FnMut(&[usize])) {
    fn go(succ: &mut Vec<usize>, n: usize, f: &mut impl FnMut(&[usize])) {
        let m = succ.len() - 1;
        if m == n {
            f(&succ[1..]);
            return;
        }
        let mut pred = vec![0; m + 1];
        for i in 1..=m {
            pred[succ[i]] = i;
        }
        for i in 1..=m {
            if is_cyclic_peak(succ, &pred, i) {
                continue;
            }
            let next = succ[i];
            succ[i] = m + 1;
            succ.push(next);
            go(succ, n, f);
            succ.pop();
            succ[i] = next;
        }
        succ.push(m + 1);
        go(succ, n, f);
        succ.pop();
    }
    let mut succ = vec![0];
    go(&mut succ, n, &mut f);
}

/// `SS_n` in lexicographic order of the one-line word.
pub fn gen_simsun_second(n: usize) -> Vec<CycleDecomposition> {
    let mut words = Vec::new();
    for_each_simsun_second(n, |w| {
        words.push(Permutation::from_word_unchecked(w.to_vec()))
    });
    words.sort();
    words.iter().map(Permutation::to_cycles).collect()
}

// ---------------------------------------------------------------------------
// Labels

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LabelKind {
    X,
    Y,
    P,
    Q,
    U,
    V,
}

impl LabelKind {
    fn letter(self) -> char {
        match self {
            LabelKind::X => 'x',
            LabelKind::Y => 'y',
            LabelKind::P => 'p',
            LabelKind::Q => 'q',
            LabelKind::U => 'u',
            LabelKind::V => 'v',
        }
    }
}

/// A superscript label such as `x_2`; indices are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Label {
    pub kind: LabelKind,
    pub index: usize,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "^{{{}{}}}", self.kind.letter(), self.index)
    }
}

/// A word with labels in its gaps. Gap `g` is the slot right after `π(g)`,
/// with gap 0 the front.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledWord {
    pub base: Permutation,
    pub labels: Vec<(usize, Label)>,
}

/// A standard cycle form with labels placed right after letters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledCycles {
    pub base: CycleDecomposition,
    pub labels: Vec<(usize, Label)>,
}

/// Gaps carrying `x` and `y` labels in a first-kind simsun word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FirstKindGaps {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

/// Label gaps of the first-kind labeling. Descent positions are taken over
/// `i ∈ [n−1]`.
pub(crate) fn first_kind_gaps(w: &[usize]) -> FirstKindGaps {
    let n = w.len();
    let descent = |i: usize| i >= 1 && i < n && w[i - 1] > w[i];
    let x: Vec<usize> = (1..n).filter(|&i| descent(i)).collect();
    let y: Vec<usize> = (0..n).filter(|&j| !descent(j) && !descent(j + 1)).collect();
    FirstKindGaps { x, y }
}

/// Gaps carrying `p` labels (pairs around each interior peak) and `q` labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PeakGaps {
    pub p: Vec<(usize, usize)>,
    pub q: Vec<usize>,
}

pub(crate) fn peak_gaps(w: &[usize]) -> PeakGaps {
    let n = w.len();
    // 1-based peak index i ↔ w[i-1]
    let peaks: Vec<usize> = (2..n)
        .filter(|&i| w[i - 2] < w[i - 1] && w[i - 1] > w[i])
        .collect();
    let mut taken = vec![false; n + 1];
    for &i in &peaks {
        taken[i] = true;
        taken[i - 1] = true;
    }
    PeakGaps {
        p: peaks.iter().map(|&i| (i - 1, i)).collect(),
        q: (1..n).filter(|&j| !taken[j]).collect(),
    }
}

/// Letters carrying `u` and `v` labels in a second-kind simsun permutation,
/// `v` letters in left-to-right order of the standard cycle form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SecondKindSlots {
    pub u: Vec<usize>,
    pub v: Vec<usize>,
}

pub(crate) fn second_kind_slots(succ: &[usize]) -> SecondKindSlots {
    let m = succ.len() - 1;
    let mut pred = vec![0; m + 1];
    for i in 1..=m {
        pred[succ[i]] = i;
    }
    let u: Vec<usize> = (1..=m).filter(|&i| succ[i] > i).collect();
    let word = &succ[1..];
    let cycles = Permutation::from_word_unchecked(word.to_vec()).to_cycles();
    let v = cycles
        .cycles()
        .iter()
        .flatten()
        .copied()
        .filter(|&l| succ[l] <= l && !is_cyclic_peak(succ, &pred, l))
        .collect();
    SecondKindSlots { u, v }
}

fn labels_from(gaps: &[(usize, LabelKind)]) -> Vec<(usize, Label)> {
    let mut counters: HashMap<LabelKind, usize> = HashMap::new();
    gaps.iter()
        .map(|&(g, kind)| {
            let c = counters.entry(kind).or_insert(0);
            *c += 1;
            (g, Label { kind, index: *c })
        })
        .collect()
}

/// Labeling of a first-kind simsun permutation by descents (`x`) and the
/// remaining admissible gaps (`y`).
pub fn label_first(p: &Permutation) -> Result<LabeledWord> {
    if !is_simsun_first(p) {
        return Err(Error::Precondition(format!("{p} is not simsun")));
    }
    let gaps = first_kind_gaps(p.word());
    let mut all: Vec<(usize, LabelKind)> = gaps
        .x
        .iter()
        .map(|&g| (g, LabelKind::X))
        .chain(gaps.y.iter().map(|&g| (g, LabelKind::Y)))
        .collect();
    all.sort();
    Ok(LabeledWord {
        base: p.clone(),
        labels: labels_from(&all),
    })
}

/// Labeling of any permutation by its interior peaks (`p`, two gaps each) and
/// the remaining inner gaps (`q`).
pub fn label_peak(p: &Permutation) -> LabeledWord {
    let gaps = peak_gaps(p.word());
    let mut labels = Vec::new();
    for (r, &(a, b)) in gaps.p.iter().enumerate() {
        let l = Label {
            kind: LabelKind::P,
            index: r + 1,
        };
        labels.push((a, l));
        labels.push((b, l));
    }
    for (s, &g) in gaps.q.iter().enumerate() {
        labels.push((
            g,
            Label {
                kind: LabelKind::Q,
                index: s + 1,
            },
        ));
    }
    labels.sort_by_key(|&(g, _)| g);
    LabeledWord {
        base: p.clone(),
        labels,
    }
}

/// Labeling of a second-kind simsun permutation: `u_r` after the `r`-th
/// excedance position, `v_s` after every letter that is neither an excedance
/// position nor a cyclic peak.
pub fn label_second(c: &CycleDecomposition) -> Result<LabeledCycles> {
    let p = c.to_permutation();
    if !is_simsun_second(&p) {
        return Err(Error::Precondition(format!(
            "{c} is not simsun of the second kind"
        )));
    }
    let slots = second_kind_slots(&c.successor_map());
    let mut labels: Vec<(usize, Label)> = Vec::new();
    for (r, &l) in slots.u.iter().enumerate() {
        labels.push((
            l,
            Label {
                kind: LabelKind::U,
                index: r + 1,
            },
        ));
    }
    for (s, &l) in slots.v.iter().enumerate() {
        labels.push((
            l,
            Label {
                kind: LabelKind::V,
                index: s + 1,
            },
        ));
    }
    Ok(LabeledCycles {
        base: c.clone(),
        labels,
    })
}

impl fmt::Display for LabeledWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.base.word();
        let sep = w.len() > 9;
        let write_gap = |f: &mut fmt::Formatter<'_>, g: usize| -> fmt::Result {
            for (_, l) in self.labels.iter().filter(|(h, _)| *h == g) {
                write!(f, "{l}")?;
            }
            Ok(())
        };
        write_gap(f, 0)?;
        for (i, v) in w.iter().enumerate() {
            if sep && i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
            write_gap(f, i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for LabeledCycles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = self.base.len() > 9;
        for c in self.base.cycles() {
            f.write_str("(")?;
            for (i, v) in c.iter().enumerate() {
                if sep && i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
                for (_, l) in self.labels.iter().filter(|(h, _)| h == v) {
                    write!(f, "{l}")?;
                }
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Distributions

/// Permutation classes over which distributions are taken.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Class {
    /// First-kind simsun permutations.
    Rs,
    /// First-kind simsun permutations with `π(1) > π(2)`.
    RsPlus,
    /// First-kind simsun permutations with `π(1) < π(2)`.
    RsMinus,
    /// Second-kind simsun permutations.
    Ss,
    All,
    /// Snakes of type `B_n` (counted only).
    Snake,
    /// Cycle-up-down permutations.
    Cud,
    /// Alternating permutations.
    Alt,
}

impl Class {
    /// Largest `n` accepted by [`distribution`].
    pub fn max_n(self) -> usize {
        match self {
            Class::Rs | Class::RsPlus | Class::RsMinus => 13,
            Class::Ss => 12,
            Class::All | Class::Cud | Class::Alt => 11,
            Class::Snake => 9,
        }
    }
}

impl FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Class> {
        Ok(match s {
            "RS" | "simsun1" => Class::Rs,
            "RS+" => Class::RsPlus,
            "RS-" => Class::RsMinus,
            "SS" | "simsun2" => Class::Ss,
            "ALL" | "all" => Class::All,
            "SNAKE" | "snakes" => Class::Snake,
            "CUD" | "cud" => Class::Cud,
            "ALT" | "alternating" => Class::Alt,
            _ => {
                return Err(Error::Unknown {
                    kind: "class",
                    name: s.to_string(),
                })
            }
        })
    }
}

/// Statistics usable in a distribution. `cyc` is recorded in `q`, `fix` in
/// `y`, everything else in `x`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Stat {
    Des,
    Lpk,
    Pk,
    Altruns,
    Uprun,
    Exc,
    Cyc,
    Fix,
}

impl Stat {
    fn slot(self) -> usize {
        match self {
            Stat::Cyc => 1,
            Stat::Fix => 2,
            _ => 0,
        }
    }

    fn eval(self, w: &[usize]) -> usize {
        match self {
            Stat::Des => perm::des(w),
            Stat::Lpk => perm::lpk(w),
            Stat::Pk => perm::pk(w),
            Stat::Altruns => perm::altruns(w),
            Stat::Uprun => perm::uprun(w),
            Stat::Exc => perm::exc(w),
            Stat::Cyc => perm::cyc(w),
            Stat::Fix => perm::fix(w),
        }
    }
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Stat> {
        Ok(match s {
            "des" => Stat::Des,
            "lpk" => Stat::Lpk,
            "pk" => Stat::Pk,
            "altruns" => Stat::Altruns,
            "uprun" => Stat::Uprun,
            "exc" => Stat::Exc,
            "cyc" => Stat::Cyc,
            "fix" => Stat::Fix,
            _ => {
                return Err(Error::Unknown {
                    kind: "statistic",
                    name: s.to_string(),
                })
            }
        })
    }
}

/// Visits every member of `class` of size `n` as a one-line word. Snakes are
/// not words and are rejected.
pub fn for_each_in_class(class: Class, n: usize, mut f: impl FnMut(&[usize])) -> Result<()> {
    check_range("n", n, 0, class.max_n())?;
    match class {
        Class::Rs => for_each_simsun_first(n, f),
        Class::RsPlus => for_each_simsun_first(n, |w| {
            if n < 2 || w[0] > w[1] {
                f(w)
            }
        }),
        Class::RsMinus => for_each_simsun_first(n, |w| {
            if n < 2 || w[0] < w[1] {
                f(w)
            }
        }),
        Class::Ss => for_each_simsun_second(n, f),
        Class::All => for_each_permutation(n, f),
        Class::Cud => for_each_permutation(n, |w| {
            if Permutation::from_word_unchecked(w.to_vec()).is_cycle_up_down() {
                f(w)
            }
        }),
        Class::Alt => for_each_permutation(n, |w| {
            if perm::is_alternating(w) {
                f(w)
            }
        }),
        Class::Snake => {
            return Err(Error::Unsupported(
                "snakes are signed; use count_snakes".into(),
            ))
        }
    }
    Ok(())
}

/// Visits the snakes of type `B_n` in lexicographic order of their windows,
/// by backtracking over signed prefixes.
pub fn for_each_snake(n: usize, mut f: impl FnMut(&[i64])) {
    fn go(prefix: &mut Vec<i64>, used: &mut [bool], n: usize, f: &mut impl FnMut(&[i64])) {
        let len = prefix.len();
        if len == n {
            f(prefix);
            return;
        }
        let n = n as i64;
        for v in (-n..=n).filter(|&v| v != 0) {
            let a = v.unsigned_abs() as usize;
            if used[a] {
                continue;
            }
            let ok = match prefix.last() {
                None => v > 0,
                Some(&last) if (len - 1).is_multiple_of(2) => last > v,
                Some(&last) => last < v,
            };
            if !ok {
                continue;
            }
            used[a] = true;
            prefix.push(v);
            go(prefix, used, n as usize, f);
            prefix.pop();
            used[a] = false;
        }
    }
    go(
        &mut Vec::with_capacity(n),
        &mut vec![false; n + 1],
        n,
        &mut f,
    );
}

pub fn count_snakes(n: usize) -> u64 {
    let mut count = 0;
    for_each_snake(n, |_| count += 1);
    count
}

/// Exact distribution polynomial of `stats` over `class`, by enumeration.
pub fn distribution(class: Class, stats: &[Stat], n: usize) -> Result<Poly> {
    let mut seen = [false; 3];
    for s in stats {
        if std::mem::replace(&mut seen[s.slot()], true) {
            return Err(Error::Unsupported(format!(
                "statistics {stats:?} share a variable"
            )));
        }
    }
    if class == Class::Snake {
        if !stats.is_empty() {
            return Err(Error::Unsupported("snakes carry no statistics here".into()));
        }
        check_range("n", n, 0, class.max_n())?;
        return Ok(Poly::constant(Rational::from_integer(BigInt::from(
            count_snakes(n),
        ))));
    }
    let mut counts: HashMap<[u32; 3], u64> = HashMap::new();
    for_each_in_class(class, n, |w| {
        let mut e = [0u32; 3];
        for s in stats {
            e[s.slot()] = s.eval(w) as u32;
        }
        *counts.entry(e).or_insert(0) += 1;
    })?;
    let mut out = Poly::zero();
    for (e, c) in counts {
        out.add_term(e, Rational::from_integer(BigInt::from(c)));
    }
    Ok(out)
}

/// Renders a word the way the CLI lists it.
pub fn word_string(w: &[usize]) -> String {
    let mut s = String::new();
    write_word(&mut s, w).expect("writing to a String");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_permutations;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn recognizers() {
        assert!(is_simsun_first(&p("35142")));
        assert!(!is_simsun_first(&p("35241")));
        assert!(is_simsun_first(&Permutation::identity(7)));

        let c: CycleDecomposition = "(1,5,3,4)(2)".parse().unwrap();
        assert!(!is_simsun_second(&c.to_permutation()));
        assert!(is_simsun_second(&Permutation::identity(6)));
        let c: CycleDecomposition = "(1,3,2)".parse().unwrap();
        assert!(is_simsun_second(&c.to_permutation()));
        // excluded only by the k = 0 check
        let c: CycleDecomposition = "(1,2,3)".parse().unwrap();
        assert!(!is_simsun_second(&c.to_permutation()));
    }

    #[test]
    fn generator_sizes() {
        let rs3: Vec<String> = gen_simsun_first(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(rs3, ["123", "132", "213", "231", "312"]);
        assert_eq!(gen_simsun_first(4).len(), 16);
        assert_eq!(gen_simsun_first(1), vec![p("1")]);

        let mut ss3: Vec<String> = gen_simsun_second(3).iter().map(|c| c.to_string()).collect();
        ss3.sort();
        assert_eq!(
            ss3,
            ["(1)(2)(3)", "(1)(2,3)", "(1,2)(3)", "(1,3)(2)", "(1,3,2)"]
        );
        assert_eq!(gen_simsun_second(1).len(), 1);
        assert_eq!(gen_simsun_second(4).len(), 16);
    }

    #[test]
    fn labelings_reproduce_examples() {
        assert_eq!(
            label_first(&p("34125")).unwrap().to_string(),
            "^{y1}34^{x1}1^{y2}2^{y3}5"
        );
        assert_eq!(
            label_peak(&p("34125")).to_string(),
            "3^{p1}4^{p1}1^{q1}2^{q2}5"
        );
        let c: CycleDecomposition = "(1,3)(2,4)(5)".parse().unwrap();
        assert_eq!(
            label_second(&c).unwrap().to_string(),
            "(1^{u1}3)(2^{u2}4)(5^{v1})"
        );
        let c: CycleDecomposition = "(1,4,3)(2)".parse().unwrap();
        assert_eq!(
            label_second(&c).unwrap().to_string(),
            "(1^{u1}43^{v1})(2^{v2})"
        );
        assert!(label_first(&p("35241")).is_err());
        assert!(label_second(&"(1,2,3)".parse().unwrap()).is_err());
    }

    #[test]
    fn label_counts() {
        for n in 1..=7 {
            for q in gen_simsun_first(n) {
                let d = q.word_stats().des;
                let l = label_first(&q).unwrap();
                let xs = l
                    .labels
                    .iter()
                    .filter(|(_, l)| l.kind == LabelKind::X)
                    .count();
                let ys = l
                    .labels
                    .iter()
                    .filter(|(_, l)| l.kind == LabelKind::Y)
                    .count();
                assert_eq!((xs, ys), (d, n - 2 * d), "{q}");
            }
            for c in gen_simsun_second(n) {
                let s = c.to_permutation().cycle_stats();
                let l = label_second(&c).unwrap();
                let us = l
                    .labels
                    .iter()
                    .filter(|(_, l)| l.kind == LabelKind::U)
                    .count();
                let vs = l.labels.len() - us;
                assert_eq!((us, vs), (s.exc, n - 2 * s.exc), "{c}");
                assert_eq!(s.exc, s.cpk);
                let mut letters: Vec<usize> = l.labels.iter().map(|&(h, _)| h).collect();
                letters.sort();
                letters.dedup();
                assert_eq!(letters.len(), l.labels.len(), "one label per letter in {c}");
            }
        }
    }

    #[test]
    fn peak_labels_cover_inner_gaps() {
        for q in enumerate_permutations(6) {
            let l = label_peak(&q);
            let k = q.word_stats().pk;
            let qs = l
                .labels
                .iter()
                .filter(|(_, l)| l.kind == LabelKind::Q)
                .count();
            assert_eq!(qs, 6 - 2 * k - 1);
            assert_eq!(l.labels.len(), 6 - 1);
        }
    }

    #[test]
    fn listed_distributions() {
        assert_eq!(
            distribution(Class::Rs, &[Stat::Des], 4).unwrap(),
            poly("1 + 11*x + 4*x^2")
        );
        assert_eq!(
            distribution(Class::Rs, &[Stat::Uprun], 4).unwrap(),
            poly("x + 3*x^2 + 8*x^3 + 4*x^4")
        );
        assert_eq!(
            distribution(Class::Ss, &[Stat::Exc, Stat::Cyc], 3).unwrap(),
            poly("q^3 + 3*x*q^2 + x*q")
        );
        assert_eq!(
            distribution(Class::RsMinus, &[Stat::Pk], 5).unwrap(),
            poly("1 + 22*x + 12*x^2")
        );
        assert_eq!(distribution(Class::Snake, &[], 3).unwrap(), Poly::int(11));
    }

    #[test]
    fn snakes_match_signed_enumeration() {
        for n in 0..=5 {
            let brute: Vec<Vec<i64>> = perm::enumerate_signed(n)
                .filter(|s| s.is_snake())
                .map(|s| s.window().to_vec())
                .collect();
            let mut listed = Vec::new();
            for_each_snake(n, |w| listed.push(w.to_vec()));
            assert_eq!(listed, brute, "n={n}");
        }
        assert_eq!(count_snakes(4), 57);
    }

    #[test]
    fn distribution_errors() {
        assert!(distribution(Class::Snake, &[Stat::Des], 3).is_err());
        assert!(distribution(Class::Rs, &[Stat::Des, Stat::Pk], 3).is_err());
        assert!(distribution(Class::All, &[Stat::Des], 40).is_err());
        assert!("foo".parse::<Class>().is_err());
        assert!("foo".parse::<Stat>().is_err());
    }
}

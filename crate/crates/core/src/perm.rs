//! Permutations, signed permutations and standard cycle decompositions, with
//! every word- and cycle-level statistic used elsewhere in the crate.
//!
//! Letters are 1-based throughout: a permutation of `[n]` stores its one-line
//! word `π(1)…π(n)` as a `Vec<usize>` with values in `1..=n`.

use std::fmt;
use std::str::FromStr;

use crate::error::{check_range, Error, Result};

/// A permutation of `[n]` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Permutation {
    word: Vec<usize>,
}

/// A signed permutation of `±[n]`, stored by its window `π(1)…π(n)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SignedPermutation {
    window: Vec<i64>,
}

/// Standard cycle form: each cycle starts with its smallest letter and the
/// cycles are ordered by increasing minima.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

/// Word statistics of a permutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct StatRecord {
    pub des: usize,
    pub lpk: usize,
    pub pk: usize,
    pub altruns: usize,
    pub uprun: usize,
    /// Length of the longest alternating subsequence `a > b < c > …`.
    pub lalt: usize,
}

/// Cycle statistics of a permutation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CycleStatRecord {
    pub exc: usize,
    pub fix: usize,
    pub cyc: usize,
    pub cpk: usize,
    pub has_double_exc: bool,
}

fn is_rearrangement(values: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n + 1];
    let mut count = 0;
    for v in values {
        if v == 0 || v > n || seen[v] {
            return false;
        }
        seen[v] = true;
        count += 1;
    }
    count == n
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if !is_rearrangement(word.iter().copied(), n) {
            return Err(Error::InvalidPermutation(format!(
                "{word:?} is not a rearrangement of 1..={n}"
            )));
        }
        Ok(Permutation { word })
    }

    /// Caller guarantees `word` is a rearrangement of `1..=word.len()`.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(is_rearrangement(word.iter().copied(), word.len()));
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    /// `π(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// Left-right reversal `π(n)…π(1)`.
    pub fn reverse(&self) -> Permutation {
        let mut word = self.word.clone();
        word.reverse();
        Permutation { word }
    }

    /// Subword of the letters `≤ k`, in their order of appearance.
    pub fn restrict_to(&self, k: usize) -> Result<Permutation> {
        check_range("k", k, 0, self.len())?;
        Ok(Permutation {
            word: self.word.iter().copied().filter(|&v| v <= k).collect(),
        })
    }

    pub fn word_stats(&self) -> StatRecord {
        word_stats(&self.word)
    }

    pub fn cycle_stats(&self) -> CycleStatRecord {
        cycle_stats(&self.word)
    }

    pub fn to_cycles(&self) -> CycleDecomposition {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.word[cur - 1];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles }
    }

    /// `π(1) > π(2) < π(3) > ⋯`.
    pub fn is_alternating(&self) -> bool {
        is_alternating(&self.word)
    }

    /// Every cycle `(b(1), b(2), …)` of the standard form satisfies
    /// `b(1) < b(2) > b(3) < ⋯`.
    pub fn is_cycle_up_down(&self) -> bool {
        self.to_cycles().cycles.iter().all(|c| {
            c.windows(2)
                .enumerate()
                .all(|(i, w)| if i % 2 == 0 { w[0] < w[1] } else { w[0] > w[1] })
        })
    }

    /// Parses either a one-line word (`3412`, `3,4,1,2`) or a cycle form
    /// (`(1,4,3)(2)`).
    pub fn parse_any(s: &str) -> Result<Permutation> {
        let t = s.trim();
        if t.starts_with('(') {
            Ok(t.parse::<CycleDecomposition>()?.to_permutation())
        } else {
            t.parse()
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let word: Vec<usize> = if t.is_empty() {
            Vec::new()
        } else if t.contains(',') || t.contains(' ') {
            t.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad letter `{p}` in `{s}`")))
                })
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter `{c}` in `{s}`")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word)
    }
}

pub(crate) fn write_word(f: &mut impl fmt::Write, word: &[usize]) -> fmt::Result {
    if word.len() <= 9 {
        for v in word {
            write!(f, "{v}")?;
        }
    } else {
        for (i, v) in word.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{v}")?;
        }
    }
    Ok(())
}

impl SignedPermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        if !is_rearrangement(window.iter().map(|v| v.unsigned_abs() as usize), n) {
            return Err(Error::InvalidPermutation(format!(
                "absolute values of {window:?} do not form 1..={n}"
            )));
        }
        Ok(SignedPermutation { window })
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `π(i)` for `i ∈ ±[n]`, using `π(−i) = −π(i)`.
    pub fn apply(&self, i: i64) -> i64 {
        let v = self.window[(i.unsigned_abs() - 1) as usize];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    /// `0 < π(1) > π(2) < π(3) > ⋯`.
    pub fn is_snake(&self) -> bool {
        is_snake(&self.window)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl CycleDecomposition {
    /// Builds a decomposition from any cycle list covering `[n]` exactly once,
    /// rotating and sorting it into standard form.
    pub fn new(cycles: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = cycles.iter().map(Vec::len).sum();
        if cycles.iter().any(Vec::is_empty) {
            return Err(Error::InvalidCycles("empty cycle".into()));
        }
        if !is_rearrangement(cycles.iter().flatten().copied(), n) {
            return Err(Error::InvalidCycles(format!(
                "letters of {cycles:?} do not form 1..={n}"
            )));
        }
        let mut cycles: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|mut c| {
                let pos = c
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, v)| *v)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                c.rotate_left(pos);
                c
            })
            .collect();
        cycles.sort_by_key(|c| c[0]);
        Ok(CycleDecomposition { cycles })
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut word = vec![0; self.len()];
        for c in &self.cycles {
            for (i, &v) in c.iter().enumerate() {
                word[v - 1] = c[(i + 1) % c.len()];
            }
        }
        Permutation { word }
    }

    /// Successor map indexed by letter; index 0 is unused.
    pub(crate) fn successor_map(&self) -> Vec<usize> {
        let mut succ = vec![0; self.len() + 1];
        for c in &self.cycles {
            for (i, &v) in c.iter().enumerate() {
                succ[v] = c[(i + 1) % c.len()];
            }
        }
        succ
    }

    pub(crate) fn from_successor_map(succ: &[usize]) -> CycleDecomposition {
        let word = succ[1..].to_vec();
        Permutation::from_word_unchecked(word).to_cycles()
    }

    /// Deletes the `k` largest letters from the functional graph, linking
    /// each deleted letter's predecessor to its successor.
    pub fn remove_largest(&self, k: usize) -> Result<CycleDecomposition> {
        let n = self.len();
        check_range("k", k, 0, n)?;
        let mut succ = self.successor_map();
        for m in ((n - k + 1)..=n).rev() {
            bypass(&mut succ, m);
        }
        succ.truncate(n - k + 1);
        Ok(Self::from_successor_map(&succ))
    }
}

/// Removes letter `m = succ.len() - 1` from a successor map (in place, leaving
/// the map one entry shorter).
pub(crate) fn bypass(succ: &mut Vec<usize>, m: usize) {
    debug_assert_eq!(m + 1, succ.len());
    let next = succ[m];
    if next != m {
        let pred = succ
            .iter()
            .position(|&s| s == m)
            .expect("letter has a predecessor");
        succ[pred] = next;
    }
    succ.pop();
}

impl FromStr for CycleDecomposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected `(` in `{s}`")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{s}`")))?;
            let body = open[..close].trim();
            let cycle: Vec<usize> = if body.contains(',') {
                body.split(',')
                    .map(|p| {
                        p.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad letter `{p}` in `{s}`")))
                    })
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::Parse(format!("bad letter `{c}` in `{s}`")))
                    })
                    .collect::<Result<_>>()?
            };
            cycles.push(cycle);
            rest = open[close + 1..].trim_start();
        }
        CycleDecomposition::new(cycles)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            f.write_str("(")?;
            for (i, v) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Slice-level statistics. These are the hot paths of every enumeration.

pub fn des(w: &[usize]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

/// Left peaks with the virtual boundary `π(0) = 0`.
pub fn lpk(w: &[usize]) -> usize {
    let n = w.len();
    (0..n.saturating_sub(1))
        .filter(|&i| {
            let prev = if i == 0 { 0 } else { w[i - 1] };
            prev < w[i] && w[i] > w[i + 1]
        })
        .count()
}

/// Interior peaks, positions `2..=n-1`.
pub fn pk(w: &[usize]) -> usize {
    w.windows(3).filter(|t| t[0] < t[1] && t[1] > t[2]).count()
}

/// Number of maximal monotone runs; 0 for words shorter than 2.
pub fn altruns(w: &[usize]) -> usize {
    if w.len() < 2 {
        return 0;
    }
    1 + w
        .windows(3)
        .filter(|t| (t[0] < t[1]) != (t[1] < t[2]))
        .count()
}

/// Alternating runs of the word with a 0 prepended.
pub fn uprun(w: &[usize]) -> usize {
    match w.len() {
        0 => 0,
        1 => 1,
        _ => altruns(w) + usize::from(w[0] > w[1]),
    }
}

/// Longest subsequence of shape `a > b < c > ⋯`.
pub fn lalt(w: &[usize]) -> usize {
    let n = w.len();
    // odd[i]: longest such subsequence ending at i with odd length (next step goes down)
    // even[i]: ... with even length (next step goes up)
    let mut odd = vec![1usize; n];
    let mut even = vec![0usize; n];
    for i in 0..n {
        for j in 0..i {
            if w[j] > w[i] {
                even[i] = even[i].max(odd[j] + 1);
            } else if even[j] > 0 {
                odd[i] = odd[i].max(even[j] + 1);
            }
        }
    }
    odd.iter().chain(even.iter()).copied().max().unwrap_or(0)
}

pub fn word_stats(w: &[usize]) -> StatRecord {
    StatRecord {
        des: des(w),
        lpk: lpk(w),
        pk: pk(w),
        altruns: altruns(w),
        uprun: uprun(w),
        lalt: lalt(w),
    }
}

/// Excedances `π(i) > i` over `i ∈ [n−1]`.
pub fn exc(w: &[usize]) -> usize {
    let n = w.len();
    (1..n).filter(|&i| w[i - 1] > i).count()
}

pub fn fix(w: &[usize]) -> usize {
    w.iter().enumerate().filter(|&(i, &v)| v == i + 1).count()
}

pub fn cyc(w: &[usize]) -> usize {
    let n = w.len();
    let mut seen = vec![false; n + 1];
    let mut count = 0;
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            cur = w[cur - 1];
        }
    }
    count
}

pub fn cycle_stats(w: &[usize]) -> CycleStatRecord {
    let n = w.len();
    let mut inv = vec![0; n + 1];
    for (i, &v) in w.iter().enumerate() {
        inv[v] = i + 1;
    }
    let mut cpk = 0;
    let mut has_double_exc = false;
    for x in 1..=n {
        let before = inv[x];
        let after = w[x - 1];
        if before < x && x > after {
            cpk += 1;
        }
        if before < x && x < after {
            has_double_exc = true;
        }
    }
    CycleStatRecord {
        exc: exc(w),
        fix: fix(w),
        cyc: cyc(w),
        cpk,
        has_double_exc,
    }
}

pub fn is_alternating(w: &[usize]) -> bool {
    w.windows(2)
        .enumerate()
        .all(|(i, p)| if i % 2 == 0 { p[0] > p[1] } else { p[0] < p[1] })
}

pub fn is_snake(w: &[i64]) -> bool {
    match w.first() {
        None => true,
        Some(&first) if first <= 0 => false,
        Some(_) => w
            .windows(2)
            .enumerate()
            .all(|(i, p)| if i % 2 == 0 { p[0] > p[1] } else { p[0] < p[1] }),
    }
}

// ---------------------------------------------------------------------------
// Enumeration

/// Advances `w` to the next permutation in lexicographic order.
pub fn next_permutation<T: Ord>(w: &mut [T]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Advances a signed window to its lexicographic successor.
pub fn next_signed_window(w: &mut [i64]) -> bool {
    let n = w.len();
    for i in (0..n).rev() {
        let mut used = vec![false; n + 1];
        for v in &w[..i] {
            used[v.unsigned_abs() as usize] = true;
        }
        let candidate = (1..=n as i64)
            .filter(|&a| !used[a as usize])
            .flat_map(|a| [-a, a])
            .filter(|&v| v > w[i])
            .min();
        if let Some(v) = candidate {
            w[i] = v;
            used[v.unsigned_abs() as usize] = true;
            let mut rest: Vec<i64> = (1..=n as i64).filter(|&a| !used[a as usize]).collect();
            rest.reverse();
            for (slot, a) in w[i + 1..].iter_mut().zip(rest) {
                *slot = -a;
            }
            return true;
        }
    }
    false
}

/// Lexicographic iterator over `S_n`.
pub struct Permutations {
    current: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.current = Some(succ);
        }
        Some(Permutation { word: cur })
    }
}

pub fn enumerate_permutations(n: usize) -> Permutations {
    Permutations {
        current: Some((1..=n).collect()),
    }
}

/// Lexicographic iterator over the windows of `B_n`.
pub struct SignedPermutations {
    current: Option<Vec<i64>>,
}

impl Iterator for SignedPermutations {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let cur = self.current.take()?;
        let mut succ = cur.clone();
        if next_signed_window(&mut succ) {
            self.current = Some(succ);
        }
        Some(SignedPermutation { window: cur })
    }
}

pub fn enumerate_signed(n: usize) -> SignedPermutations {
    SignedPermutations {
        current: Some((1..=n as i64).rev().map(|a| -a).collect()),
    }
}

/// Visits every permutation of `[n]` in lexicographic order without
/// allocating per element.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut w: Vec<usize> = (1..=n).collect();
    loop {
        f(&w);
        if !next_permutation(&mut w) {
            break;
        }
    }
}

/// Counts alternating permutations of `[n]` by backtracking over prefixes
/// that already satisfy the alternating shape.
pub fn count_alternating(n: usize) -> u64 {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], n: usize) -> u64 {
        let len = prefix.len();
        if len == n {
            return 1;
        }
        let mut total = 0;
        for v in 1..=n {
            if used[v] {
                continue;
            }
            if len > 0 {
                let last = prefix[len - 1];
                let ok = if (len - 1).is_multiple_of(2) {
                    last > v
                } else {
                    last < v
                };
                if !ok {
                    continue;
                }
            }
            used[v] = true;
            prefix.push(v);
            total += go(prefix, used, n);
            prefix.pop();
            used[v] = false;
        }
        total
    }
    go(&mut Vec::with_capacity(n), &mut vec![false; n + 1], n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn stats_of_514623() {
        let s = p("514623").word_stats();
        assert_eq!(s.altruns, 4);
        assert_eq!(s.uprun, 5);
        assert_eq!((s.des, s.lpk, s.pk), (2, 2, 1));
        assert_eq!(s.lalt, 5);
    }

    #[test]
    fn left_peaks_of_21435() {
        assert_eq!(p("21435").word_stats().lpk, 2);
    }

    #[test]
    fn monotone_words() {
        for n in 2..8 {
            let s = Permutation::identity(n).word_stats();
            assert_eq!((s.des, s.lpk, s.pk, s.altruns, s.uprun), (0, 0, 0, 1, 1));
        }
        let one = p("1").word_stats();
        assert_eq!((one.altruns, one.uprun, one.lalt), (0, 1, 1));
        let empty = Permutation::identity(0).word_stats();
        assert_eq!((empty.altruns, empty.uprun, empty.lalt), (0, 0, 0));
    }

    #[test]
    fn cycle_statistics() {
        let c: CycleDecomposition = "(1,3,4)(2)".parse().unwrap();
        assert!(c.to_permutation().cycle_stats().has_double_exc);

        let id = Permutation::identity(5).cycle_stats();
        assert_eq!(
            id,
            CycleStatRecord {
                exc: 0,
                fix: 5,
                cyc: 5,
                cpk: 0,
                has_double_exc: false
            }
        );

        let c: CycleDecomposition = "(1,3,2)".parse().unwrap();
        let w = c.to_permutation();
        assert_eq!(w, p("312"));
        let s = w.cycle_stats();
        assert_eq!((s.exc, s.cyc, s.cpk, s.has_double_exc), (1, 1, 1, false));
    }

    #[test]
    fn cycle_conversions() {
        assert_eq!(p("3412").to_cycles().to_string(), "(1,3)(2,4)");
        assert_eq!(p("123").to_cycles().to_string(), "(1)(2)(3)");
        let c: CycleDecomposition = "(1,4,3)(2)".parse().unwrap();
        assert_eq!(c.to_permutation(), p("4213"));
        // non-standard input gets rotated and sorted
        let c: CycleDecomposition = "(2)(3,1,4)".parse().unwrap();
        assert_eq!(c.to_string(), "(1,4,3)(2)");
        assert_eq!("(143)(2)".parse::<CycleDecomposition>().unwrap(), c);
    }

    #[test]
    fn malformed_cycles_rejected() {
        assert!("(1,2)(2)".parse::<CycleDecomposition>().is_err());
        assert!("(1,3)".parse::<CycleDecomposition>().is_err());
        assert!("(1,2".parse::<CycleDecomposition>().is_err());
        assert!(CycleDecomposition::new(vec![vec![1], vec![]]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
    }

    #[test]
    fn restriction() {
        assert_eq!(p("35142").restrict_to(3).unwrap(), p("312"));
        assert_eq!(p("35142").restrict_to(5).unwrap(), p("35142"));
        assert!(p("35142").restrict_to(0).unwrap().is_empty());
        assert!(p("35142").restrict_to(6).is_err());
    }

    #[test]
    fn removing_largest_letters() {
        let c: CycleDecomposition = "(1,5,3,4)(2)".parse().unwrap();
        assert_eq!(c.remove_largest(1).unwrap().to_string(), "(1,3,4)(2)");
        assert_eq!(c.remove_largest(0).unwrap(), c);
        assert_eq!(c.remove_largest(5).unwrap().len(), 0);
        assert!(c.remove_largest(6).is_err());
        let c: CycleDecomposition = "(1,3,2)".parse().unwrap();
        assert_eq!(c.remove_largest(1).unwrap().to_string(), "(1,2)");
    }

    #[test]
    fn enumeration_order_and_counts() {
        let all: Vec<_> = enumerate_permutations(3).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], p("123"));
        assert_eq!(all[5], p("321"));
        assert_eq!(enumerate_permutations(0).count(), 1);
        assert_eq!(enumerate_signed(2).count(), 8);
        assert_eq!(enumerate_signed(3).count(), 48);
        assert_eq!(enumerate_signed(0).count(), 1);
        let signed: Vec<_> = enumerate_signed(3).collect();
        assert!(signed.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn snakes_of_b2() {
        let snakes: Vec<String> = enumerate_signed(2)
            .filter(SignedPermutation::is_snake)
            .map(|s| s.to_string())
            .collect();
        assert_eq!(snakes, ["1 -2", "2 -1", "2 1"]);
    }

    #[test]
    fn shape_predicates() {
        assert!(p("21").is_alternating());
        assert!(!p("12").is_alternating());
        assert!(p("132").is_cycle_up_down()); // (1,3,2)
        assert!(!p("231").is_cycle_up_down()); // (1,2,3)
        assert_eq!(p("3412").reverse(), p("2143"));
    }

    #[test]
    fn alternating_counts_match_brute_force() {
        for n in 0..=8 {
            let brute = enumerate_permutations(n)
                .filter(|p| p.is_alternating())
                .count() as u64;
            assert_eq!(count_alternating(n), brute, "n={n}");
        }
    }

    #[test]
    fn parse_word_forms() {
        assert_eq!(p("3,4,1,2"), p("3412"));
        assert_eq!(Permutation::parse_any("(1,4,3)(2)").unwrap(), p("4213"));
        let long = Permutation::identity(11);
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10,11");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
    }
}

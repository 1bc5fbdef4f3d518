//! The block correspondence Φ between first-kind simsun permutations and
//! permutations of `[n+1]` grouped by interior peaks, and the bijection Ψ
//! onto simsun permutations of the second kind.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{self, bypass, CycleDecomposition, Permutation};
use crate::report::IdentityReport;
use crate::simsun::{
    first_kind_gaps, for_each_simsun_first, gen_simsun_second, is_simsun_first_word,
    is_simsun_second_word, peak_gaps, second_kind_slots,
};

/// Where the largest letter went when a simsun word grew by one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Step {
    /// Appended at the end.
    End,
    /// Inserted at the `r`-th `x`-labeled gap (1-based).
    X(usize),
    /// Inserted at the `s`-th `y`-labeled gap (1-based).
    Y(usize),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::End => f.write_str("END"),
            Step::X(r) => write!(f, "x{r}"),
            Step::Y(s) => write!(f, "y{s}"),
        }
    }
}

/// The steps `1 → 12… → π`, one per inserted letter `2..=n`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct InsertionHistory {
    steps: Vec<Step>,
}

impl InsertionHistory {
    pub fn new(steps: Vec<Step>) -> Self {
        InsertionHistory { steps }
    }

    /// Reads off the history of a first-kind simsun permutation by removing
    /// its largest letters one at a time.
    pub fn of(p: &Permutation) -> Result<InsertionHistory> {
        let w = p.word();
        if w.is_empty() {
            return Err(Error::Precondition("empty permutation".into()));
        }
        let mut steps = Vec::with_capacity(w.len() - 1);
        let mut cur = w.to_vec();
        for m in (2..=w.len()).rev() {
            let g = cur.iter().position(|&v| v == m).expect("letter present");
            cur.remove(g);
            steps.push(
                classify_first(&cur, g)
                    .ok_or_else(|| Error::Precondition(format!("{p} is not simsun")))?,
            );
        }
        steps.reverse();
        Ok(InsertionHistory { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Size of the permutation the history builds.
    pub fn len(&self) -> usize {
        self.steps.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Rebuilds the first-kind simsun permutation.
    pub fn replay(&self) -> Result<Permutation> {
        let mut w = vec![1];
        for step in &self.steps {
            let m = w.len();
            let gaps = first_kind_gaps(&w);
            let g = match *step {
                Step::End => Some(m),
                Step::X(r) => r.checked_sub(1).and_then(|i| gaps.x.get(i).copied()),
                Step::Y(s) => s.checked_sub(1).and_then(|i| gaps.y.get(i).copied()),
            }
            .ok_or_else(|| Error::Precondition(format!("step {step} has no slot in {w:?}")))?;
            w.insert(g, m + 1);
        }
        Ok(Permutation::from_word_unchecked(w))
    }
}

fn classify_first(w: &[usize], g: usize) -> Option<Step> {
    if g == w.len() {
        return Some(Step::End);
    }
    let gaps = first_kind_gaps(w);
    if let Some(r) = gaps.x.iter().position(|&h| h == g) {
        return Some(Step::X(r + 1));
    }
    gaps.y.iter().position(|&h| h == g).map(|s| Step::Y(s + 1))
}

fn classify_peak(w: &[usize], g: usize) -> Step {
    if g == 0 || g == w.len() {
        return Step::End;
    }
    let gaps = peak_gaps(w);
    if let Some(r) = gaps.p.iter().position(|&(a, b)| a == g || b == g) {
        return Step::X(r + 1);
    }
    let s = gaps
        .q
        .iter()
        .position(|&h| h == g)
        .expect("inner gaps are all labeled");
    Step::Y(s + 1)
}

// ---------------------------------------------------------------------------
// Φ

/// A first-kind simsun permutation and its block of permutations of `[n+1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PhiImage {
    pub source: Permutation,
    /// Sorted lexicographically.
    pub image: Vec<Permutation>,
}

fn phi_words(history: &InsertionHistory) -> Vec<Vec<usize>> {
    let mut images = vec![vec![1, 2], vec![2, 1]];
    for step in history.steps() {
        let m = images[0].len();
        let mut next = Vec::with_capacity(images.len() * 2);
        for t in &images {
            let gaps: Vec<usize> = match *step {
                Step::End => vec![0, m],
                Step::X(r) => {
                    let (a, b) = peak_gaps(t).p[r - 1];
                    vec![a, b]
                }
                Step::Y(s) => vec![peak_gaps(t).q[s - 1]],
            };
            for g in gaps {
                let mut u = t.clone();
                u.insert(g, m + 1);
                next.push(u);
            }
        }
        images = next;
    }
    images.sort();
    images
}

/// The block of permutations of `[n+1]` attached to a simsun `p`.
pub fn phi_forward(p: &Permutation) -> Result<PhiImage> {
    if p.is_empty() || !is_simsun_first_word(p.word()) {
        return Err(Error::Precondition(format!(
            "{p} is not a nonempty simsun permutation"
        )));
    }
    let history = InsertionHistory::of(p)?;
    Ok(PhiImage {
        source: p.clone(),
        image: phi_words(&history)
            .into_iter()
            .map(Permutation::from_word_unchecked)
            .collect(),
    })
}

/// The simsun permutation whose block contains `t`.
pub fn phi_inverse(t: &Permutation) -> Result<Permutation> {
    let w = t.word();
    if w.len() < 2 {
        return Err(Error::Precondition(format!(
            "{t} is too short; blocks start at length 2"
        )));
    }
    let mut steps = Vec::with_capacity(w.len() - 2);
    let mut cur = w.to_vec();
    for m in (3..=w.len()).rev() {
        let g = cur.iter().position(|&v| v == m).expect("letter present");
        cur.remove(g);
        steps.push(classify_peak(&cur, g));
    }
    steps.reverse();
    InsertionHistory::new(steps).replay()
}

// ---------------------------------------------------------------------------
// Ψ

fn psi_succ(history: &InsertionHistory) -> Vec<usize> {
    let mut succ = vec![0, 1];
    for step in history.steps() {
        let m = succ.len() - 1;
        let anchor = match *step {
            Step::End => None,
            Step::X(r) => Some(second_kind_slots(&succ).u[r - 1]),
            Step::Y(s) => Some(second_kind_slots(&succ).v[s - 1]),
        };
        match anchor {
            None => succ.push(m + 1),
            Some(l) => {
                succ.push(succ[l]);
                succ[l] = m + 1;
            }
        }
    }
    succ
}

/// The second-kind simsun permutation matched to a first-kind one; descents
/// become excedances.
pub fn psi_forward(p: &Permutation) -> Result<CycleDecomposition> {
    if p.is_empty() || !is_simsun_first_word(p.word()) {
        return Err(Error::Precondition(format!(
            "{p} is not a nonempty simsun permutation"
        )));
    }
    let history = InsertionHistory::of(p)?;
    Ok(CycleDecomposition::from_successor_map(&psi_succ(&history)))
}

pub fn psi_inverse(c: &CycleDecomposition) -> Result<Permutation> {
    let n = c.len();
    if n == 0 || !is_simsun_second_word(c.to_permutation().word()) {
        return Err(Error::Precondition(format!(
            "{c} is not a nonempty simsun permutation of the second kind"
        )));
    }
    let mut succ = c.successor_map();
    let mut steps = Vec::with_capacity(n - 1);
    for m in (2..=n).rev() {
        if succ[m] == m {
            succ.pop();
            steps.push(Step::End);
            continue;
        }
        let l = succ
            .iter()
            .position(|&s| s == m)
            .expect("letter has a predecessor");
        bypass(&mut succ, m);
        let slots = second_kind_slots(&succ);
        let step = if let Some(r) = slots.u.iter().position(|&h| h == l) {
            Step::X(r + 1)
        } else if let Some(s) = slots.v.iter().position(|&h| h == l) {
            Step::Y(s + 1)
        } else {
            return Err(Error::Precondition(format!(
                "{c}: letter {m} follows unlabeled letter {l}"
            )));
        };
        steps.push(step);
    }
    steps.reverse();
    InsertionHistory::new(steps).replay()
}

// ---------------------------------------------------------------------------
// Verification

/// Checks that the blocks of `RS_n` partition `S_{n+1}`, that each block has
/// `2^{n-des}` members with `pk = des`, and that `phi_inverse` recovers the
/// source from every member.
pub fn verify_phi(n: usize) -> IdentityReport {
    IdentityReport::run("phi", 1, n, check_phi)
}

fn check_phi(n: usize) -> std::result::Result<(), String> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut failure = None;
    for_each_simsun_first(n, |w| {
        if failure.is_some() {
            return;
        }
        let p = Permutation::from_word_unchecked(w.to_vec());
        let k = perm::des(w);
        let history = match InsertionHistory::of(&p) {
            Ok(h) => h,
            Err(e) => {
                failure = Some(e.to_string());
                return;
            }
        };
        let block = phi_words(&history);
        if block.len() != 1 << (n - k) {
            failure = Some(format!("block of {p} has {} members", block.len()));
            return;
        }
        for t in block {
            if perm::pk(&t) != k {
                failure = Some(format!("{} in block of {p} has pk != {k}", perm_str(&t)));
                return;
            }
            match phi_inverse(&Permutation::from_word_unchecked(t.clone())) {
                Ok(back) if back == p => {}
                Ok(back) => {
                    failure = Some(format!("{} maps back to {back}, not {p}", perm_str(&t)));
                    return;
                }
                Err(e) => {
                    failure = Some(e.to_string());
                    return;
                }
            }
            if !seen.insert(t.clone()) {
                failure = Some(format!("{} lies in two blocks", perm_str(&t)));
                return;
            }
        }
    });
    if let Some(f) = failure {
        return Err(f);
    }
    let total: usize = (1..=n + 1).product();
    if seen.len() != total {
        return Err(format!(
            "blocks cover {} of {total} permutations",
            seen.len()
        ));
    }
    Ok(())
}

/// Checks that Ψ maps `RS_n` injectively onto `SS_n`, carries descents to
/// excedances, and is inverted by `psi_inverse`.
pub fn verify_psi(n: usize) -> IdentityReport {
    IdentityReport::run("psi", 1, n, check_psi)
}

fn check_psi(n: usize) -> std::result::Result<(), String> {
    let mut image: HashSet<Vec<usize>> = HashSet::new();
    let mut failure = None;
    for_each_simsun_first(n, |w| {
        if failure.is_some() {
            return;
        }
        let p = Permutation::from_word_unchecked(w.to_vec());
        let outcome = psi_forward(&p).and_then(|c| {
            let back = psi_inverse(&c)?;
            Ok((c, back))
        });
        let (c, back) = match outcome {
            Ok(v) => v,
            Err(e) => {
                failure = Some(e.to_string());
                return;
            }
        };
        let word = c.to_permutation().into_word();
        if perm::exc(&word) != perm::des(w) {
            failure = Some(format!("des({p}) != exc({c})"));
        } else if back != p {
            failure = Some(format!("{p} -> {c} -> {back}"));
        } else if !image.insert(word) {
            failure = Some(format!("{c} is hit twice"));
        }
    });
    if let Some(f) = failure {
        return Err(f);
    }
    let target: HashSet<Vec<usize>> = gen_simsun_second(n)
        .iter()
        .map(|c| c.to_permutation().into_word())
        .collect();
    if image != target {
        return Err(format!(
            "image has {} elements, second kind has {}",
            image.len(),
            target.len()
        ));
    }
    Ok(())
}

fn perm_str(w: &[usize]) -> String {
    crate::simsun::word_string(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn words(v: &[Permutation]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(words(&phi_forward(&p("1")).unwrap().image), ["12", "21"]);
        assert_eq!(
            words(&phi_forward(&p("12")).unwrap().image),
            ["123", "213", "312", "321"]
        );
        let mut expected = vec![
            "15423", "35412", "25413", "35421", "14523", "34512", "24513", "34521",
        ];
        expected.sort();
        assert_eq!(words(&phi_forward(&p("3412")).unwrap().image), expected);
        assert_eq!(phi_inverse(&p("34512")).unwrap(), p("3412"));
        assert_eq!(phi_inverse(&p("12")).unwrap(), p("1"));
        assert!(phi_forward(&p("35241")).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_forward(&p("3412")).unwrap().to_string(), "(1,4,3)(2)");
        assert_eq!(psi_forward(&p("12")).unwrap().to_string(), "(1)(2)");
        assert_eq!(
            psi_inverse(&"(1,4,3)(2)".parse().unwrap()).unwrap(),
            p("3412")
        );
        assert!(psi_inverse(&"(1,2,3)".parse().unwrap()).is_err());
    }

    #[test]
    fn history_round_trip() {
        let h = InsertionHistory::of(&p("3412")).unwrap();
        assert_eq!(h.steps(), [Step::End, Step::Y(1), Step::X(1)]);
        for n in 1..=7 {
            for_each_simsun_first(n, |w| {
                let q = Permutation::from_word_unchecked(w.to_vec());
                assert_eq!(InsertionHistory::of(&q).unwrap().replay().unwrap(), q);
            });
        }
    }

    #[test]
    fn verifiers_pass_small() {
        assert!(verify_phi(6).passed());
        assert!(verify_psi(7).passed());
    }
}

use serde::Serialize;

/// Exact verdicts of one identity over a range of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub n_min: usize,
    pub n_max: usize,
    /// `(n, holds)` for every `n` actually checked; checking stops at the
    /// first failure.
    pub verdicts: Vec<(usize, bool)>,
    pub counterexample: Option<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none() && self.verdicts.iter().all(|&(_, ok)| ok)
    }

    /// Runs `check` for every `n` in `n_min..=n_max`, stopping at the first
    /// `Err`, whose message becomes the counterexample.
    pub fn run(
        id: impl Into<String>,
        n_min: usize,
        n_max: usize,
        mut check: impl FnMut(usize) -> Result<(), String>,
    ) -> IdentityReport {
        let mut report = IdentityReport {
            id: id.into(),
            n_min,
            n_max,
            verdicts: Vec::new(),
            counterexample: None,
        };
        for n in n_min..=n_max {
            match check(n) {
                Ok(()) => report.verdicts.push((n, true)),
                Err(msg) => {
                    report.verdicts.push((n, false));
                    report.counterexample = Some(format!("n={n}: {msg}"));
                    break;
                }
            }
        }
        report
    }

    /// A report that failed before any `n` could be checked.
    pub fn failed(id: impl Into<String>, n_min: usize, n_max: usize, msg: String) -> Self {
        IdentityReport {
            id: id.into(),
            n_min,
            n_max,
            verdicts: Vec::new(),
            counterexample: Some(msg),
        }
    }
}

/// `Ok(())` if equal, otherwise a message showing both sides.
pub(crate) fn expect_eq<T: PartialEq + std::fmt::Display>(
    what: &str,
    lhs: &T,
    rhs: &T,
) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{what}: {lhs} != {rhs}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stops_at_first_failure() {
        let r = IdentityReport::run(
            "t",
            1,
            10,
            |n| if n < 4 { Ok(()) } else { Err("boom".into()) },
        );
        assert!(!r.passed());
        assert_eq!(r.verdicts.len(), 4);
        assert_eq!(r.counterexample.as_deref(), Some("n=4: boom"));
        assert!(IdentityReport::run("t", 1, 3, |_| Ok(())).passed());
    }
}

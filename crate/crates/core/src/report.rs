//! Structured verdicts returned by the `check_*` operations.

use std::fmt;

/// One evaluated identity. `j` is the prefix length or column index the
/// identity was evaluated at, when it has one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub j: Option<usize>,
    pub passed: bool,
    /// Both sides of a failed identity, rendered for diagnosis.
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass(name: impl Into<String>, j: Option<usize>) -> Self {
        Verdict {
            name: name.into(),
            j,
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, j: Option<usize>, witness: String) -> Self {
        Verdict {
            name: name.into(),
            j,
            passed: false,
            witness: Some(witness),
        }
    }

    /// Compares two values, keeping both in the witness on mismatch.
    pub fn compare<T: PartialEq + fmt::Debug>(
        name: impl Into<String>,
        j: Option<usize>,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        if lhs == rhs {
            Self::pass(name, j)
        } else {
            Self::fail(name, j, format!("{lhs:?} != {rhs:?}"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: &'static str,
    pub subject: String,
    pub m: usize,
    pub verdicts: Vec<Verdict>,
}

impl CheckReport {
    pub fn new(check: &'static str, subject: String, m: usize) -> Self {
        CheckReport {
            check,
            subject,
            m,
            verdicts: Vec::new(),
        }
    }

    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{} {} m={}: {} ({} identities)",
            self.check,
            self.subject,
            self.m,
            status,
            self.verdicts.len()
        )?;
        for v in self.failures() {
            write!(f, "\n  {}", v.name)?;
            if let Some(j) = v.j {
                write!(f, " at j={j}")?;
            }
            if let Some(w) = &v.witness {
                write!(f, ": {w}")?;
            }
        }
        Ok(())
    }
}

//! Verdicts shared by all checkers.

use serde::Serialize;

/// Outcome of one exhaustively checked law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    /// The law fails; `witness` is the lexicographically smallest failing tuple.
    Fail {
        witness: Vec<usize>,
    },
    NotApplicable {
        reason: String,
    },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            Verdict::Fail { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn not_applicable(reason: impl Into<String>) -> Self {
        Verdict::NotApplicable { reason: reason.into() }
    }

    pub fn from_witness(w: Option<Vec<usize>>) -> Self {
        match w {
            None => Verdict::Pass,
            Some(witness) => Verdict::Fail { witness },
        }
    }
}

/// A named verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl Check {
    pub fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        Check {
            name: name.into(),
            verdict,
        }
    }
}

/// Named checks in a fixed order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckList(pub Vec<Check>);

impl CheckList {
    pub fn push(&mut self, name: impl Into<String>, verdict: Verdict) {
        self.0.push(Check::new(name, verdict));
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.0.iter().find(|c| c.name == name).map(|c| &c.verdict)
    }

    pub fn passes(&self, name: &str) -> bool {
        self.get(name).is_some_and(Verdict::is_pass)
    }

    /// True when no check failed (not-applicable entries are ignored).
    pub fn all_pass(&self) -> bool {
        self.0.iter().all(|c| !c.verdict.is_fail())
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.0.iter().find(|c| c.verdict.is_fail())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Check> {
        self.0.iter()
    }

    pub fn extend(&mut self, other: CheckList) {
        self.0.extend(other.0);
    }
}

/// Smallest `x < n` with `!ok(x)`.
pub fn scan1(n: usize, mut ok: impl FnMut(usize) -> bool) -> Verdict {
    Verdict::from_witness((0..n).find(|&x| !ok(x)).map(|x| vec![x]))
}

/// Lexicographically smallest pair with `!ok(x, y)`.
pub fn scan2(n: usize, m: usize, mut ok: impl FnMut(usize, usize) -> bool) -> Verdict {
    for x in 0..n {
        for y in 0..m {
            if !ok(x, y) {
                return Verdict::Fail { witness: vec![x, y] };
            }
        }
    }
    Verdict::Pass
}

/// Lexicographically smallest triple over `[0,n)^3` with `!ok(x, y, z)`.
pub fn scan3(n: usize, mut ok: impl FnMut(usize, usize, usize) -> bool) -> Verdict {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if !ok(x, y, z) {
                    return Verdict::Fail { witness: vec![x, y, z] };
                }
            }
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scans_report_smallest_witness() {
        assert_eq!(scan1(5, |x| x < 3), Verdict::Fail { witness: vec![3] });
        assert_eq!(scan2(3, 3, |x, y| x + y < 3).witness(), Some(&[1, 2][..]));
        assert!(scan3(4, |_, _, _| true).is_pass());
    }

    #[test]
    fn not_applicable_is_not_a_failure() {
        let mut list = CheckList::default();
        list.push("a", Verdict::Pass);
        list.push("b", Verdict::not_applicable("hypothesis not met"));
        assert!(list.all_pass());
        list.push("c", Verdict::Fail { witness: vec![1] });
        assert_eq!(list.first_failure().unwrap().name, "c");
    }
}

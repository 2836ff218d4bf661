use serde::Serialize;

use crate::error::{Error, Result};

/// `n +_q m = q(n + m)`, or `None` on `i64` overflow.
pub fn q_add(q: i64, n: i64, m: i64) -> Option<i64> {
    n.checked_add(m)?.checked_mul(q)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QAdditiveReport {
    pub q: i64,
    pub bound: i64,
    pub checked: u64,
    /// Triples whose intermediates leave `[-bound, bound]`.
    pub skipped: u64,
    /// Triples `(n, m, p)` violating `qn +_q (m +_q p) = (n +_q m) +_q qp = q²(n+m+p)`.
    pub failures: Vec<[i64; 3]>,
}

impl QAdditiveReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check the twisted associativity of the q-additive integers on a window.
///
/// All intermediates (`qn`, `qp`, `m +_q p`, `n +_q m`) must stay in the
/// window for a triple to be checked; otherwise it is skipped.
pub fn q_additive_window(q: i64, bound: i64) -> Result<QAdditiveReport> {
    if q == 0 {
        return Err(Error::precondition("q must be non-zero"));
    }
    if bound < 0 {
        return Err(Error::precondition("bound must be non-negative"));
    }
    let in_window = |x: i64| (-bound..=bound).contains(&x);
    let mut report = QAdditiveReport {
        q,
        bound,
        checked: 0,
        skipped: 0,
        failures: Vec::new(),
    };
    for n in -bound..=bound {
        for m in -bound..=bound {
            for p in -bound..=bound {
                let inter = (|| {
                    let qn = n.checked_mul(q).filter(|&x| in_window(x))?;
                    let qp = p.checked_mul(q).filter(|&x| in_window(x))?;
                    let mp = q_add(q, m, p).filter(|&x| in_window(x))?;
                    let nm = q_add(q, n, m).filter(|&x| in_window(x))?;
                    Some((qn, qp, mp, nm))
                })();
                let Some((qn, qp, mp, nm)) = inter else {
                    report.skipped += 1;
                    continue;
                };
                report.checked += 1;
                let lhs = q_add(q, qn, mp);
                let rhs = q_add(q, nm, qp);
                let closed = (q as i128) * (q as i128) * (n as i128 + m as i128 + p as i128);
                let ok = matches!((lhs, rhs), (Some(l), Some(r)) if l == r && l as i128 == closed);
                if !ok {
                    report.failures.push([n, m, p]);
                }
            }
        }
    }
    Ok(report)
}

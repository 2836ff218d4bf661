//! Abelian groups presented by integer relations, via Smith normal form.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};

fn overflow() -> Error {
    Error::invariant("integer overflow in relation reduction")
}

fn add_mul(a: i128, q: i128, b: i128) -> Result<i128> {
    q.checked_mul(b).and_then(|x| a.checked_add(x)).ok_or_else(overflow)
}

/// `(g, s, t)` with `g = s·a + t·b = gcd(a, b) ≥ 0`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1, mut s0, mut s1, mut t0, mut t1) = (a, b, 1, 0, 0, 1);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// The row lattice of a set of relations, kept in echelon form.
#[derive(Debug, Clone, Default)]
pub struct RelationLattice {
    cols: usize,
    rows: BTreeMap<usize, Vec<i128>>,
    seen: HashSet<Vec<i64>>,
}

impl RelationLattice {
    pub fn new(cols: usize) -> Self {
        RelationLattice {
            cols,
            ..Default::default()
        }
    }

    pub fn insert(&mut self, row: &[i64]) -> Result<()> {
        if !self.seen.insert(row.to_vec()) {
            return Ok(());
        }
        let mut r: Vec<i128> = row.iter().map(|&x| x as i128).collect();
        while let Some(c) = r.iter().position(|&x| x != 0) {
            let Some(b) = self.rows.get_mut(&c) else {
                if r[c] < 0 {
                    r.iter_mut().for_each(|x| *x = -*x);
                }
                self.rows.insert(c, r);
                return Ok(());
            };
            let (g, s, t) = ext_gcd(b[c], r[c]);
            let (bc, rc) = (b[c] / g, r[c] / g);
            let mut new_b = vec![0i128; self.cols];
            let mut new_r = vec![0i128; self.cols];
            for j in c..self.cols {
                new_b[j] = add_mul(s.checked_mul(b[j]).ok_or_else(overflow)?, t, r[j])?;
                new_r[j] = add_mul(bc.checked_mul(r[j]).ok_or_else(overflow)?, -rc, b[j])?;
            }
            *b = new_b;
            r = new_r;
        }
        Ok(())
    }

    /// Invariant factors and the quotient map of `ℤ^cols / lattice`.
    pub fn smith(&self) -> Result<Smith> {
        let m: Vec<Vec<i128>> = self.rows.values().cloned().collect();
        smith(m, self.cols)
    }
}

/// `M·V = U⁻¹·D` for unimodular `V`: generator `k` of the presented group has
/// coordinates `V[k][i] mod d_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    /// Diagonal entries, one per column; `0` marks a free summand.
    pub diagonal: Vec<i128>,
    pub v: Vec<Vec<i128>>,
    pub v_inv: Vec<Vec<i128>>,
}

impl Smith {
    /// Columns whose cyclic factor is nontrivial.
    pub fn nontrivial(&self) -> Vec<usize> {
        (0..self.diagonal.len()).filter(|&i| self.diagonal[i] != 1).collect()
    }

    /// Coordinates of the image of `x ∈ ℤ^n` in the nontrivial factors.
    pub fn coordinates(&self, x: &[i128]) -> Result<Vec<i128>> {
        self.nontrivial()
            .into_iter()
            .map(|i| {
                let mut s: i128 = 0;
                for (k, &xk) in x.iter().enumerate() {
                    s = add_mul(s, xk, self.v[k][i])?;
                }
                let d = self.diagonal[i];
                Ok(if d == 0 { s } else { s.rem_euclid(d) })
            })
            .collect()
    }
}

fn smith(mut m: Vec<Vec<i128>>, n: usize) -> Result<Smith> {
    let rows = m.len();
    let mut v: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect();
    let mut v_inv = v.clone();
    let mut diagonal = vec![0i128; n];

    let swap_cols = |m: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, v_inv: &mut Vec<Vec<i128>>, a: usize, b: usize| {
        if a != b {
            m.iter_mut().for_each(|r| r.swap(a, b));
            v.iter_mut().for_each(|r| r.swap(a, b));
            v_inv.swap(a, b);
        }
    };
    // col_j -= q·col_t
    let col_op = |m: &mut Vec<Vec<i128>>,
                  v: &mut Vec<Vec<i128>>,
                  v_inv: &mut Vec<Vec<i128>>,
                  j: usize,
                  t: usize,
                  q: i128|
     -> Result<()> {
        for r in m.iter_mut().chain(v.iter_mut()) {
            r[j] = add_mul(r[j], -q, r[t])?;
        }
        let (rj, rt) = if j < t {
            let (a, b) = v_inv.split_at_mut(t);
            (&a[j], &mut b[0])
        } else {
            let (a, b) = v_inv.split_at_mut(j);
            (&b[0], &mut a[t])
        };
        for (x, &y) in rt.iter_mut().zip(rj.iter()) {
            *x = add_mul(*x, q, y)?;
        }
        Ok(())
    };

    for t in 0..rows.min(n) {
        let pick = |m: &Vec<Vec<i128>>| {
            (t..rows)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].unsigned_abs())
        };
        let Some((i, j)) = pick(&m) else { break };
        m.swap(t, i);
        swap_cols(&mut m, &mut v, &mut v_inv, t, j);
        loop {
            let p = m[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = m[i][t] / p;
                if q != 0 {
                    let (a, b) = m.split_at_mut(i);
                    for (x, &y) in b[0].iter_mut().zip(a[t].iter()) {
                        *x = add_mul(*x, -q, y)?;
                    }
                }
                dirty |= m[i][t] != 0;
            }
            for j in t + 1..n {
                let q = m[t][j] / p;
                if q != 0 {
                    col_op(&mut m, &mut v, &mut v_inv, j, t, q)?;
                }
                dirty |= m[t][j] != 0;
            }
            if dirty {
                let row_min = (t + 1..rows)
                    .filter(|&i| m[i][t] != 0)
                    .min_by_key(|&i| m[i][t].unsigned_abs());
                let col_min = (t + 1..n)
                    .filter(|&j| m[t][j] != 0)
                    .min_by_key(|&j| m[t][j].unsigned_abs());
                if let Some(i) = row_min {
                    m.swap(t, i);
                } else if let Some(j) = col_min {
                    swap_cols(&mut m, &mut v, &mut v_inv, t, j);
                }
                continue;
            }
            let bad = (t + 1..rows).find(|&i| (t + 1..n).any(|j| m[i][j] % p != 0));
            match bad {
                Some(i) => {
                    let (a, b) = m.split_at_mut(i);
                    for (x, &y) in a[t].iter_mut().zip(b[0].iter()) {
                        *x = x.checked_add(y).ok_or_else(overflow)?;
                    }
                }
                None => break,
            }
        }
        diagonal[t] = m[t][t].abs();
    }
    Ok(Smith { diagonal, v, v_inv })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(cols: usize, rows: &[&[i64]]) -> Vec<i128> {
        let mut l = RelationLattice::new(cols);
        for r in rows {
            l.insert(r).unwrap();
        }
        let s = l.smith().unwrap();
        let mut d: Vec<i128> = s.nontrivial().into_iter().map(|i| s.diagonal[i]).collect();
        d.sort();
        d
    }

    fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
        a.iter()
            .map(|r| {
                (0..b[0].len())
                    .map(|j| r.iter().zip(b).map(|(x, row)| x * row[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn cyclic_presentations() {
        assert_eq!(factors(1, &[&[6]]), vec![6]);
        assert_eq!(factors(2, &[&[2, 0], &[0, 3]]), vec![6]);
        assert_eq!(factors(2, &[&[2, 0], &[0, 4]]), vec![2, 4]);
        assert_eq!(factors(2, &[&[1, -1], &[2, 0]]), vec![2]);
        assert_eq!(factors(2, &[&[1, 0]]), vec![0]);
    }

    #[test]
    fn divisibility_chain() {
        // ℤ/4 ⊕ ℤ/6 ≅ ℤ/2 ⊕ ℤ/12
        assert_eq!(factors(2, &[&[4, 0], &[0, 6]]), vec![2, 12]);
    }

    #[test]
    fn v_is_invertible_and_diagonalizes() {
        let rows: &[&[i64]] = &[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]];
        let mut l = RelationLattice::new(3);
        for r in rows {
            l.insert(r).unwrap();
        }
        let s = l.smith().unwrap();
        let id = mat_mul(&s.v, &s.v_inv);
        for (i, r) in id.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                assert_eq!(x, i128::from(i == j));
            }
        }
        // every relation maps to zero
        for r in rows {
            let x: Vec<i128> = r.iter().map(|&y| y as i128).collect();
            assert!(s.coordinates(&x).unwrap().iter().all(|&c| c == 0));
        }
        let mut d: Vec<i128> = s.diagonal.clone();
        d.sort();
        assert_eq!(d, vec![2, 6, 12]);
    }
}

//! Dense operation tables.

use crate::error::{Error, Result};

/// A `rows × cols` table of indices, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table {
    rows: usize,
    cols: usize,
    data: Vec<usize>,
}

impl Table {
    /// Build from a function, which must return values below the intended range.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Table { rows, cols, data }
    }

    /// Validate nested rows: shape `rows × cols`, every entry below `range`.
    pub fn from_rows(name: &str, rows_in: &[Vec<usize>], rows: usize, cols: usize, range: usize) -> Result<Self> {
        if rows_in.len() != rows {
            return Err(Error::structural(format!(
                "{name}: expected {rows} rows, found {}",
                rows_in.len()
            )));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for (r, row) in rows_in.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::structural(format!(
                    "{name}: row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= range {
                    return Err(Error::structural(format!(
                        "{name}[{r}][{c}] = {v} is out of range 0..{range}"
                    )));
                }
                data.push(v);
            }
        }
        Ok(Table { rows, cols, data })
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> usize {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: usize) {
        self.data[r * self.cols + c] = v;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        self.data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[usize]>::to_vec)
            .collect()
    }
}

/// Validate a unary map on `[0, n)`.
pub fn check_map(name: &str, map: &[usize], len: usize, range: usize) -> Result<()> {
    if map.len() != len {
        return Err(Error::structural(format!(
            "{name}: expected {len} entries, found {}",
            map.len()
        )));
    }
    if let Some((i, &v)) = map.iter().enumerate().find(|(_, &v)| v >= range) {
        return Err(Error::structural(format!(
            "{name}[{i}] = {v} is out of range 0..{range}"
        )));
    }
    Ok(())
}

pub fn check_element(name: &str, x: usize, n: usize) -> Result<()> {
    if x >= n {
        return Err(Error::structural(format!("{name} = {x} is out of range 0..{n}")));
    }
    Ok(())
}

/// `f^k(x)`.
pub fn iterate(f: &[usize], x: usize, k: usize) -> usize {
    (0..k).fold(x, |y, _| f[y])
}

pub fn is_bijection(f: &[usize]) -> bool {
    let mut seen = vec![false; f.len()];
    for &y in f {
        if y >= f.len() || seen[y] {
            return false;
        }
        seen[y] = true;
    }
    true
}

/// Inverse of a permutation, or `None` when `f` is not bijective.
pub fn invert_permutation(f: &[usize]) -> Option<Vec<usize>> {
    if !is_bijection(f) {
        return None;
    }
    let mut inv = vec![0; f.len()];
    for (x, &y) in f.iter().enumerate() {
        inv[y] = x;
    }
    Some(inv)
}

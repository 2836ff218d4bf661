//! Ordinary (untwisted) finite groups and rings, used as inputs to the twist
//! constructions and as targets of the compatible-structure transports.

use crate::error::{Error, Result};
use crate::report::{scan2, scan3, Verdict};
use crate::table::{check_map, Table};

/// A finite group given by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    mul: Table,
    e: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validate a Cayley table: associativity, a two-sided identity and inverses.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::structural("group table is empty"));
        }
        let mul = Table::from_rows("mul", rows, n, n, n)?;
        if let Verdict::Fail { witness } = scan3(n, |a, b, c| mul.get(mul.get(a, b), c) == mul.get(a, mul.get(b, c))) {
            return Err(Error::rejected("group table is not associative", witness));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| mul.get(e, x) == x && mul.get(x, e) == x))
            .ok_or_else(|| Error::rejected("group table has no identity", vec![]))?;
        let mut inv = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| mul.get(x, y) == e && mul.get(y, x) == e)
                .ok_or_else(|| Error::rejected("element has no inverse", vec![x]))?;
            inv.push(y);
        }
        Ok(FiniteGroup { mul, e, inv })
    }

    fn from_fn(n: usize, f: impl FnMut(usize, usize) -> usize) -> Self {
        Self::from_table(&Table::from_fn(n, n, f).to_rows()).expect("built-in group table")
    }

    /// ℤ/n under addition.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        Self::from_fn(n, |a, b| (a + b) % n)
    }

    /// S3 acting on {0,1,2}; elements are the permutations in lexicographic
    /// order `[012, 021, 102, 120, 201, 210]` and `a·b = a∘b`.
    pub fn symmetric3() -> Self {
        let perms = s3_perms();
        Self::from_fn(6, |a, b| {
            let c: [usize; 3] = std::array::from_fn(|i| perms[a][perms[b][i]]);
            perms.iter().position(|p| *p == c).unwrap()
        })
    }

    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.order();
        Self::from_fn(self.order() * m, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
    }

    pub fn order(&self) -> usize {
        self.inv.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    pub fn identity(&self) -> usize {
        self.e
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &Table {
        &self.mul
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        scan2(n, n, |a, b| self.mul(a, b) == self.mul(b, a)).is_pass()
    }

    /// `f(ab) = f(a)f(b)` on every pair; smallest failing pair as witness.
    pub fn endomorphism_verdict(&self, f: &[usize]) -> Result<Verdict> {
        let n = self.order();
        check_map("endo", f, n, n)?;
        Ok(scan2(n, n, |a, b| f[self.mul(a, b)] == self.mul(f[a], f[b])))
    }

    /// Conjugation `x ↦ g x g⁻¹`.
    pub fn conjugation(&self, g: usize) -> Vec<usize> {
        (0..self.order())
            .map(|x| self.mul(self.mul(g, x), self.inv(g)))
            .collect()
    }

    /// `x ↦ x^k`.
    pub fn power_map(&self, k: usize) -> Vec<usize> {
        (0..self.order())
            .map(|x| (0..k).fold(self.e, |acc, _| self.mul(acc, x)))
            .collect()
    }
}

fn s3_perms() -> [[usize; 3]; 6] {
    [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

/// Index of the transposition swapping 0 and 1 in [`FiniteGroup::symmetric3`].
pub const S3_TRANSPOSITION: usize = 2;
/// Indices of the rotation subgroup of [`FiniteGroup::symmetric3`].
pub const S3_ROTATIONS: [usize; 3] = [0, 3, 4];

/// A finite associative ring, possibly without unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    add: Table,
    mul: Table,
    zero: usize,
    neg: Vec<usize>,
    one: Option<usize>,
}

impl FiniteRing {
    /// Validate ring tables. The additive identity, negation and unit (if any)
    /// are found from the tables.
    pub fn from_tables(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<Self> {
        let n = add.len();
        let additive = FiniteGroup::from_table(add)?;
        if !additive.is_abelian() {
            return Err(Error::rejected("ring addition is not commutative", vec![]));
        }
        let mul = Table::from_rows("mul", mul, n, n, n)?;
        let add = additive.table().clone();
        if let Verdict::Fail { witness } = scan3(n, |a, b, c| mul.get(mul.get(a, b), c) == mul.get(a, mul.get(b, c))) {
            return Err(Error::rejected("ring multiplication is not associative", witness));
        }
        if let Verdict::Fail { witness } = scan3(n, |a, b, c| {
            mul.get(a, add.get(b, c)) == add.get(mul.get(a, b), mul.get(a, c))
                && mul.get(add.get(b, c), a) == add.get(mul.get(b, a), mul.get(c, a))
        }) {
            return Err(Error::rejected("ring is not distributive", witness));
        }
        let one = (0..n).find(|&u| (0..n).all(|x| mul.get(u, x) == x && mul.get(x, u) == x));
        let zero = additive.identity();
        let neg = (0..n).map(|x| additive.inv(x)).collect();
        Ok(FiniteRing {
            add,
            mul,
            zero,
            neg,
            one,
        })
    }

    /// Built-in constructions are correct by construction; only the derived
    /// data (zero, negation, unit) is computed. Validation is O(n³) and would
    /// be prohibitive for materialized group rings.
    fn from_fns(n: usize, add: impl FnMut(usize, usize) -> usize, mul: impl FnMut(usize, usize) -> usize) -> Self {
        let add = Table::from_fn(n, n, add);
        let mul = Table::from_fn(n, n, mul);
        let zero = (0..n)
            .find(|&z| (0..n).all(|x| add.get(z, x) == x))
            .expect("built-in ring has a zero");
        let neg = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| add.get(x, y) == zero)
                    .expect("built-in ring has negatives")
            })
            .collect();
        let one = (0..n).find(|&u| (0..n).all(|x| mul.get(u, x) == x && mul.get(x, u) == x));
        FiniteRing {
            add,
            mul,
            zero,
            neg,
            one,
        }
    }

    /// ℤ/n.
    pub fn zmod(n: usize) -> Self {
        assert!(n > 0);
        Self::from_fns(n, |a, b| (a + b) % n, |a, b| (a * b) % n)
    }

    /// 𝔽₄ = 𝔽₂[w]/(w²+w+1); element `a + b·w` is encoded as `a + 2b`.
    pub fn gf4() -> Self {
        let mul = |x: usize, y: usize| {
            let (a, b, c, d) = (x & 1, x >> 1, y & 1, y >> 1);
            // (a + bw)(c + dw) = ac + bd·w² + (ad + bc)w, with w² = w + 1
            let c0 = (a * c + b * d) % 2;
            let c1 = (a * d + b * c + b * d) % 2;
            c0 + 2 * c1
        };
        Self::from_fns(4, |x, y| x ^ y, mul)
    }

    /// Direct product ring; element `(r, s)` is encoded as `r·|S| + s`.
    pub fn product(&self, other: &FiniteRing) -> FiniteRing {
        let m = other.order();
        Self::from_fns(
            self.order() * m,
            |x, y| self.add(x / m, y / m) * m + other.add(x % m, y % m),
            |x, y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m),
        )
    }

    /// Group ring 𝔽_p G. An element `Σ a_g e_g` is encoded in base `p` with
    /// digit `g` equal to `a_g`.
    pub fn group_ring(group: &FiniteGroup, p: usize, limit: u64) -> Result<Self> {
        let k = group.order();
        let size = (p as u64)
            .checked_pow(k as u32)
            .filter(|&s| s <= limit)
            .ok_or_else(|| Error::Budget {
                what: format!("materializing a group ring of size {p}^{k}"),
                limit,
            })? as usize;
        let digits = |x: usize| -> Vec<usize> {
            let mut x = x;
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let encode = |c: &[usize]| c.iter().rev().fold(0, |acc, &d| acc * p + d);
        let add = |x: usize, y: usize| {
            let (a, b) = (digits(x), digits(y));
            encode(&a.iter().zip(&b).map(|(u, v)| (u + v) % p).collect::<Vec<_>>())
        };
        let mul = |x: usize, y: usize| {
            let (a, b) = (digits(x), digits(y));
            let mut c = vec![0; k];
            for (g, &ag) in a.iter().enumerate() {
                for (h, &bh) in b.iter().enumerate() {
                    let gh = group.mul(g, h);
                    c[gh] = (c[gh] + ag * bh) % p;
                }
            }
            encode(&c)
        };
        Ok(Self::from_fns(size, add, mul))
    }

    pub fn order(&self) -> usize {
        self.neg.len()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.get(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> Option<usize> {
        self.one
    }

    pub fn add_table(&self) -> &Table {
        &self.add
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        scan2(n, n, |a, b| self.mul(a, b) == self.mul(b, a)).is_pass()
    }

    /// Additive and multiplicative on every pair.
    pub fn endomorphism_verdict(&self, f: &[usize]) -> Result<Verdict> {
        let n = self.order();
        check_map("endomorphism", f, n, n)?;
        Ok(scan2(n, n, |a, b| {
            f[self.add(a, b)] == self.add(f[a], f[b]) && f[self.mul(a, b)] == self.mul(f[a], f[b])
        }))
    }

    /// The ring endomorphism of a group ring induced by a group map.
    pub fn induced_group_ring_map(group: &FiniteGroup, p: usize, g_map: &[usize]) -> Vec<usize> {
        let k = group.order();
        let size = p.pow(k as u32);
        (0..size)
            .map(|x| {
                let mut c = vec![0; k];
                let mut y = x;
                for g in 0..k {
                    c[g_map[g]] = (c[g_map[g]] + y % p) % p;
                    y /= p;
                }
                c.iter().rev().fold(0, |acc, &d| acc * p + d)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_is_nonabelian_with_rotation_subgroup() {
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        for &a in &S3_ROTATIONS {
            for &b in &S3_ROTATIONS {
                assert!(S3_ROTATIONS.contains(&s3.mul(a, b)));
            }
        }
        let t = S3_TRANSPOSITION;
        assert_eq!(s3.mul(t, t), s3.identity());
    }

    #[test]
    fn conjugation_is_an_automorphism() {
        let s3 = FiniteGroup::symmetric3();
        let c = s3.conjugation(S3_TRANSPOSITION);
        assert!(s3.endomorphism_verdict(&c).unwrap().is_pass());
        assert!(crate::table::is_bijection(&c));
    }

    #[test]
    fn non_associative_table_rejected() {
        // a loop of order 5 that is not a group
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(&rows), Err(Error::Rejected { .. })));
    }

    #[test]
    fn built_in_rings_pass_validation() {
        let c3 = FiniteGroup::cyclic(3);
        let s3 = FiniteGroup::symmetric3();
        for r in [
            FiniteRing::zmod(6),
            FiniteRing::gf4(),
            FiniteRing::zmod(2).product(&FiniteRing::zmod(2)),
            FiniteRing::group_ring(&c3, 2, 4096).unwrap(),
            FiniteRing::group_ring(&s3, 2, 4096).unwrap(),
        ] {
            let checked = FiniteRing::from_tables(&r.add_table().to_rows(), &r.mul_table().to_rows()).unwrap();
            assert_eq!(checked, r);
        }
    }

    #[test]
    fn gf4_is_a_field() {
        let f = FiniteRing::gf4();
        assert_eq!(f.one(), Some(1));
        for x in 1..4 {
            assert!((1..4).any(|y| f.mul(x, y) == 1));
        }
        let frob: Vec<usize> = (0..4).map(|x| f.mul(x, x)).collect();
        assert!(f.endomorphism_verdict(&frob).unwrap().is_pass());
    }

    #[test]
    fn group_ring_f2c3_has_eight_elements_and_unit() {
        let r = FiniteRing::group_ring(&FiniteGroup::cyclic(3), 2, 4096).unwrap();
        assert_eq!(r.order(), 8);
        // e_0 is digit 0 set: encoded as 1
        assert_eq!(r.one(), Some(1));
        assert!(r.is_commutative());
    }

    #[test]
    fn group_ring_respects_size_bound() {
        let err = FiniteRing::group_ring(&FiniteGroup::cyclic(8), 3, 4096).unwrap_err();
        assert!(matches!(err, Error::Budget { .. }));
    }

    #[test]
    fn induced_map_is_ring_endomorphism() {
        let c3 = FiniteGroup::cyclic(3);
        let r = FiniteRing::group_ring(&c3, 2, 4096).unwrap();
        let sq = c3.power_map(2);
        let f = FiniteRing::induced_group_ring_map(&c3, 2, &sq);
        assert!(r.endomorphism_verdict(&f).unwrap().is_pass());
    }
}

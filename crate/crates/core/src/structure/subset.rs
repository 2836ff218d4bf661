use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of `[0, n)` for some structure of order `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubSet {
    bits: Vec<bool>,
}

impl SubSet {
    pub fn empty(n: usize) -> Self {
        SubSet { bits: vec![false; n] }
    }

    pub fn full(n: usize) -> Self {
        SubSet { bits: vec![true; n] }
    }

    pub fn from_elements(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(n);
        for x in elements {
            if x >= n {
                return Err(Error::structural(format!("subset element {x} is out of range 0..{n}")));
            }
            s.bits[x] = true;
        }
        Ok(s)
    }

    pub fn from_predicate(n: usize, mut p: impl FnMut(usize) -> bool) -> Self {
        SubSet {
            bits: (0..n).map(&mut p).collect(),
        }
    }

    /// Order of the owning structure.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.bits[x]
    }

    /// Returns true when `x` was not yet a member.
    pub fn insert(&mut self, x: usize) -> bool {
        !std::mem::replace(&mut self.bits[x], true)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    /// Members in increasing order.
    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn is_subset(&self, other: &SubSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    pub fn union(&self, other: &SubSet) -> SubSet {
        SubSet {
            bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| a || b).collect(),
        }
    }

    pub fn intersection(&self, other: &SubSet) -> SubSet {
        SubSet {
            bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| a && b).collect(),
        }
    }

    /// Image under a map into a structure of order `m`.
    pub fn image(&self, f: &[usize], m: usize) -> SubSet {
        let mut out = SubSet::empty(m);
        for x in self.iter() {
            out.insert(f[x]);
        }
        out
    }

    /// Preimage under a map from a structure of order `f.len()`.
    pub fn preimage(&self, f: &[usize]) -> SubSet {
        SubSet::from_predicate(f.len(), |x| self.contains(f[x]))
    }
}

impl Serialize for SubSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_operations() {
        let a = SubSet::from_elements(5, [0, 2]).unwrap();
        let b = SubSet::from_elements(5, [2, 4]).unwrap();
        assert_eq!(a.union(&b).elements(), vec![0, 2, 4]);
        assert_eq!(a.intersection(&b).elements(), vec![2]);
        assert!(a.intersection(&b).is_subset(&a));
        assert_eq!(serde_json::to_string(&a).unwrap(), "[0,2]");
        assert!(SubSet::from_elements(2, [3]).is_err());
    }

    #[test]
    fn images_and_preimages() {
        let f = [0, 0, 1, 1];
        let s = SubSet::from_elements(4, [1, 2]).unwrap();
        assert_eq!(s.image(&f, 2).elements(), vec![0, 1]);
        let t = SubSet::from_elements(2, [1]).unwrap();
        assert_eq!(t.preimage(&f).elements(), vec![2, 3]);
    }
}

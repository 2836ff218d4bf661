//! Enumeration limits.

/// Environment variable overriding [`Budget::search`].
pub const BUDGET_ENV: &str = "HOMCAT_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of search nodes visited by homomorphism and bilinear-map
    /// enumeration.
    pub search: u64,
    /// Largest order for which subgroup and submodule lattices are computed.
    pub lattice_order: usize,
    /// Largest number of subgroups kept while building a lattice.
    pub lattice_size: usize,
    /// Largest materialized group ring (`p^|G|`).
    pub group_ring: u64,
    /// Largest number of generators in a tensor relation matrix.
    pub tensor_generators: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            search: 10_000_000,
            lattice_order: 24,
            lattice_size: 4096,
            group_ring: 4096,
            tensor_generators: 1024,
        }
    }
}

impl Budget {
    /// Default budget overridden by `HOMCAT_BUDGET`: a bare number sets
    /// `search`; otherwise a comma-separated list of `field=value` pairs.
    /// Unparsable entries are ignored.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Ok(spec) = std::env::var(BUDGET_ENV) {
            b.apply(&spec);
        }
        b
    }

    /// Apply an override string in the `HOMCAT_BUDGET` syntax.
    pub fn apply(&mut self, spec: &str) {
        if let Ok(v) = spec.trim().parse::<u64>() {
            self.search = v;
            return;
        }
        for part in spec.split(',') {
            let Some((key, value)) = part.split_once('=') else {
                continue;
            };
            let Ok(v) = value.trim().parse::<u64>() else { continue };
            match key.trim() {
                "search" => self.search = v,
                "lattice_order" => self.lattice_order = v as usize,
                "lattice_size" => self.lattice_size = v as usize,
                "group_ring" => self.group_ring = v,
                "tensor_generators" => self.tensor_generators = v as usize,
                _ => {}
            }
        }
    }

    pub fn with_search(mut self, search: u64) -> Self {
        self.search = search;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn override_syntax() {
        let mut b = Budget::default();
        b.apply("17");
        assert_eq!(b.search, 17);
        b.apply("lattice_order=3, group_ring=8,bogus=1,search=x");
        assert_eq!((b.search, b.lattice_order, b.group_ring), (17, 3, 8));
    }
}

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use super::tree::{graft, Color, SLTree};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SamplerConfig {
    pub count: usize,
    pub max_leaves: usize,
    pub min_weight: i64,
    pub max_weight: i64,
    pub labels: Vec<String>,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            count: 1000,
            max_leaves: 12,
            min_weight: -3,
            max_weight: 3,
            labels: vec!["g".into(), "h".into()],
        }
    }
}

/// A tree with between 1 and `max_leaves` leaves and a uniformly split shape.
pub fn random_tree(rng: &mut impl Rng, cfg: &SamplerConfig) -> SLTree {
    let n = rng.gen_range(1..=cfg.max_leaves.max(1));
    random_tree_with(rng, cfg, n)
}

/// A tree with exactly `n ≥ 1` leaves.
pub fn random_tree_with(rng: &mut impl Rng, cfg: &SamplerConfig, n: usize) -> SLTree {
    if n <= 1 {
        let label = cfg.labels.choose(rng).cloned().unwrap_or_else(|| "g".into());
        let color = if rng.gen_bool(0.5) { Color::Black } else { Color::White };
        return SLTree::leaf(label, color, rng.gen_range(cfg.min_weight..=cfg.max_weight));
    }
    let k = rng.gen_range(1..n);
    let l = random_tree_with(rng, cfg, k);
    let r = random_tree_with(rng, cfg, n - k);
    graft(l, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn respects_bounds() {
        let cfg = SamplerConfig::default();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let t = random_tree(&mut rng, &cfg);
            assert!((1..=12).contains(&t.leaf_count()));
            assert!(t.is_canonical());
            assert!(t
                .weights()
                .iter()
                .all(|w| (BigInt::from(-3)..=BigInt::from(3)).contains(w)));
        }
    }
}

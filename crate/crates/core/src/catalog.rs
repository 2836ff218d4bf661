//! Named example structures used by the tests, the CLI and the acceptance suite.

use crate::budget::Budget;
use crate::classical::{FiniteGroup, FiniteRing, S3_TRANSPOSITION};
use crate::group::FiniteHomGroup;
use crate::module::{module_from_compatible, FiniteHomModule, OrdinaryModule};
use crate::ring::{twist_ring, twisted_group_ring, FiniteHomRing, RingType};

/// S3 twisted by conjugation with the transposition swapping 0 and 1.
pub fn twisted_s3() -> FiniteHomGroup {
    let s3 = FiniteGroup::symmetric3();
    FiniteHomGroup::twist(&s3, &s3.conjugation(S3_TRANSPOSITION)).expect("conjugation is an automorphism")
}

/// `(ℤ/6)_{5x}`.
pub fn z6_5x() -> FiniteHomGroup {
    FiniteHomGroup::cyclic_twist(6, 5).expect("x ↦ 5x is an endomorphism")
}

/// `(ℤ/4)_{2x}`.
pub fn z4_2x() -> FiniteHomGroup {
    FiniteHomGroup::cyclic_twist(4, 2).expect("x ↦ 2x is an endomorphism")
}

/// `(ℤ/n)_{id}`.
pub fn cyclic(n: usize) -> FiniteHomGroup {
    FiniteHomGroup::from_group(&FiniteGroup::cyclic(n))
}

/// `𝔽₂C3` twisted by the ring map induced from `g ↦ g²`, with `α = β`.
pub fn f2c3_twist(ring_type: RingType) -> FiniteHomRing {
    let c3 = FiniteGroup::cyclic(3);
    twisted_group_ring(&c3, &c3.power_map(2), 2, ring_type, &Budget::default())
        .expect("squaring is an automorphism of C3")
}

/// `𝔽₂S3` twisted by conjugation with a transposition; 64 elements.
pub fn f2s3_conjugation() -> FiniteHomRing {
    let s3 = FiniteGroup::symmetric3();
    twisted_group_ring(
        &s3,
        &s3.conjugation(S3_TRANSPOSITION),
        2,
        RingType::One,
        &Budget::default(),
    )
    .expect("conjugation is an automorphism")
}

/// `ℤ/6` with `α = β = 3x`; not regular and without unit, since `3·1 ≠ 1`.
pub fn z6_3x_ring() -> FiniteHomRing {
    let f: Vec<usize> = (0..6).map(|x| 3 * x % 6).collect();
    twist_ring(&FiniteRing::zmod(6), &f, &f, RingType::One).expect("3x is an idempotent ring endomorphism")
}

/// `𝔽₂` with identity twists.
pub fn f2_ring() -> FiniteHomRing {
    twist_ring(&FiniteRing::zmod(2), &[0, 1], &[0, 1], RingType::One).expect("identity twist")
}

/// `𝔽₂ × 𝔽₂` with `α = β` swapping the factors.
pub fn f2xf2_swap() -> FiniteHomRing {
    let r = FiniteRing::zmod(2).product(&FiniteRing::zmod(2));
    twist_ring(&r, &[0, 2, 1, 3], &[0, 2, 1, 3], RingType::One).expect("swap is a ring automorphism")
}

/// `𝔽₂ × 𝔽₂` with `α = β: (x, y) ↦ (x, x)`, a unital but non-injective twist.
pub fn f2xf2_collapse() -> FiniteHomRing {
    let r = FiniteRing::zmod(2).product(&FiniteRing::zmod(2));
    twist_ring(&r, &[0, 0, 3, 3], &[0, 0, 3, 3], RingType::One).expect("(x, x) is a unital ring endomorphism")
}

/// `𝔽₄` with `α = β` the Frobenius map.
pub fn f4_frobenius() -> FiniteHomRing {
    twist_ring(&FiniteRing::gf4(), &[0, 1, 3, 2], &[0, 1, 3, 2], RingType::One).expect("Frobenius is an automorphism")
}

/// `ℤ/4` over the untwisted ring `ℤ/4`, twisted by `β = 2x`: `m + n = 2(m + n)`
/// and `am = 2am`. `β` is not injective.
pub fn z4_doubling_module() -> FiniteHomModule {
    let z4 = FiniteRing::zmod(4);
    let id: Vec<usize> = (0..4).collect();
    let ring = twist_ring(&z4, &id, &id, RingType::One).expect("identity twist");
    let base = OrdinaryModule {
        ring: z4.clone(),
        add: z4.add_table().clone(),
        zero: 0,
        neg: (0..4).map(|x| z4.neg(x)).collect(),
        act: z4.mul_table().clone(),
    };
    module_from_compatible(&ring, &base, &[0, 2, 0, 2]).expect("2x commutes with the action")
}

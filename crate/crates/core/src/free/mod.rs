//! The free regular Hom-group on weighted bicolored trees.

mod laws;
mod reduce;
mod sample;
mod syntax;
mod tree;
mod word;

pub use laws::*;
pub use reduce::{
    fg_multiply, find_redexes, normal_form, reduce, reduce_step, Mode, Redex, ReductionTrace, Rule, Strategy, TraceStep,
};
pub use sample::{random_tree, random_tree_with, SamplerConfig};
pub use syntax::parse_tree;
pub use tree::{alpha_shift, graft, hom_inverse, mirror_inverse, Color, Leaf, LeafView, SLTree};
pub use word::{reduced_word, same_element, tree_word, Letter};

pub(crate) fn ser_bigint<S: serde::Serializer>(v: &num_bigint::BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

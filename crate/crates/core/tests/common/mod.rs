#![allow(dead_code)]

use proptest::prelude::*;
use thompson_core::trees::{GeneratorWord, TreeDiagram};

/// Words over `x_0..x_4` with small exponents.
pub fn word(max_len: usize) -> impl Strategy<Value = GeneratorWord> {
    prop::collection::vec(
        (0u32..5, prop_oneof![Just(-2), Just(-1), Just(1), Just(2)]),
        0..=max_len,
    )
    .prop_map(|v| GeneratorWord::from_pairs(&v))
}

pub fn element(max_len: usize) -> impl Strategy<Value = TreeDiagram> {
    word(max_len).prop_map(|w| TreeDiagram::from_word(&w))
}

/// Words over `x_0, x_1` only.
pub fn word01(max_len: usize) -> impl Strategy<Value = GeneratorWord> {
    prop::collection::vec((0u32..2, prop_oneof![Just(-1), Just(1)]), 0..=max_len)
        .prop_map(|v| GeneratorWord::from_pairs(&v))
}

pub fn digits(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..2, 0..=max_len)
}

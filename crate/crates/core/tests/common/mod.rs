#![allow(dead_code)]

use artin_core::{GenSet, Letter, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn letters(gens: GenSet) -> Vec<Letter> {
    gens.iter().flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect()
}

/// A word over `gens^{±1}` of length `len`, not necessarily reduced.
pub fn word_of_len(rng: &mut ChaCha8Rng, gens: GenSet, len: usize, positive: bool) -> Word {
    let g: Vec<_> = gens.iter().collect();
    if g.is_empty() {
        return Word::empty();
    }
    Word((0..len)
        .map(|_| {
            let x = g[rng.gen_range(0..g.len())];
            if positive || rng.gen_bool(0.5) {
                Letter::pos(x)
            } else {
                Letter::neg(x)
            }
        })
        .collect())
}

pub fn word(rng: &mut ChaCha8Rng, gens: GenSet, max_len: usize, positive: bool) -> Word {
    let len = rng.gen_range(0..=max_len);
    word_of_len(rng, gens, len, positive)
}

pub fn subset(rng: &mut ChaCha8Rng, rank: usize) -> GenSet {
    GenSet::from_bits(rng.gen_range(0..1u64 << rank))
}

pub fn nonempty_subset(rng: &mut ChaCha8Rng, rank: usize) -> GenSet {
    GenSet::from_bits(rng.gen_range(1..1u64 << rank))
}

/// Every freely reduced word over `gens^{±1}` of length at most `max_len`.
pub fn reduced_words(gens: GenSet, max_len: usize) -> Vec<Word> {
    let l = letters(gens);
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &x in &l {
                if w.letters().last() != Some(&x.inverse()) {
                    let mut v = w.0.clone();
                    v.push(x);
                    next.push(Word(v));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Every positive word over `gens` of length exactly `len`.
pub fn positive_words(gens: GenSet, len: usize) -> Vec<Vec<u8>> {
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        layer = layer
            .into_iter()
            .flat_map(|w: Vec<u8>| {
                gens.iter().map(move |g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    layer
}

/// Proptest strategy for words over the first `rank` generators.
pub fn arb_word(rank: usize, max_len: usize) -> impl proptest::strategy::Strategy<Value = Word> {
    use proptest::prelude::*;
    prop::collection::vec((0..rank as u8, any::<bool>()), 0..=max_len)
        .prop_map(|v| Word(v.into_iter().map(|(gen, inv)| Letter { gen, inv }).collect()))
}

pub fn arb_positive(rank: usize, max_len: usize) -> impl proptest::strategy::Strategy<Value = Word> {
    use proptest::prelude::*;
    prop::collection::vec(0..rank as u8, 0..=max_len).prop_map(|v| Word::positive(&v))
}

pub fn arb_subset(rank: usize) -> impl proptest::strategy::Strategy<Value = GenSet> {
    use proptest::prelude::*;
    (0..1u64 << rank).prop_map(GenSet::from_bits)
}

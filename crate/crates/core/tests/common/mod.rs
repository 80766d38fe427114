#![allow(dead_code)]

use proptest::prelude::*;
use ptolemy::opalgebra::{DecoratedIndex, DecoratedPermutation, Letter, OperatorWord};

pub fn index(n: u32) -> impl Strategy<Value = DecoratedIndex> {
    (1..=n, 0..3i64).prop_map(|(l, d)| DecoratedIndex::new(l, d))
}

pub fn letter(n: u32) -> impl Strategy<Value = Letter> {
    (index(n), 1..n, 0..3i64, any::<bool>()).prop_map(move |(a, off, d, bar)| {
        let b = DecoratedIndex::new((a.label - 1 + off) % n + 1, d);
        if bar {
            Letter::tbar(a, b)
        } else {
            Letter::t(a, b)
        }
    })
}

pub fn dperm(n: usize) -> impl Strategy<Value = DecoratedPermutation> {
    let labels: Vec<u32> = (1..=n as u32).collect();
    (Just(labels).prop_shuffle(), prop::collection::vec(0..3i64, n)).prop_map(|(sigma, decos)| {
        let images: Vec<DecoratedIndex> = sigma.iter().zip(decos).map(|(&s, d)| DecoratedIndex::new(s, d)).collect();
        DecoratedPermutation::from_images(&images).unwrap()
    })
}

pub fn word(n: usize, max_letters: usize) -> impl Strategy<Value = OperatorWord> {
    (-3..=3i64, prop::collection::vec(letter(n as u32), 0..=max_letters), dperm(n))
        .prop_map(|(zeta, letters, tail)| OperatorWord { zeta, letters, tail })
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

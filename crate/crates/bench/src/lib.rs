//! Poset fixtures shared by the benchmarks.

use ocpkit_core::Poset;

/// Named maximal ranked posets of increasing size.
pub fn level_fixtures() -> Vec<(&'static str, Poset)> {
    [
        ("x-poset", &[2, 1, 2][..]),
        ("2-2-2-2", &[2, 2, 2, 2]),
        ("3-1-3-1", &[3, 1, 3, 1]),
        ("antichain-8", &[8]),
        ("4-4-4", &[4, 4, 4]),
    ]
    .into_iter()
    .map(|(name, sizes)| (name, Poset::ordinal_sum_of_antichains(sizes).unwrap()))
    .collect()
}

pub fn random_fixture(d: usize, seed: u64) -> Poset {
    Poset::random(d, 0.35, seed).unwrap()
}

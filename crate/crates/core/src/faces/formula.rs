use crate::poset::RankDecomposition;

/// `n choose k`, exact.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Closed-form excess `|Δ_C| - |Δ_O|` of a maximal ranked poset.
pub fn excess_formula(levels: &RankDecomposition) -> u128 {
    excess_formula_for_sizes(&levels.sizes())
}

/// The excess as a quadruple sum over level sizes `|P_0|, .., |P_n|`:
/// for `2 ≤ s ≤ n` and `2 ≤ t ≤ s`, every choice of at least two elements
/// of `P_s` paired with at least two elements of `P_{s-t}`.
pub fn excess_formula_for_sizes(sizes: &[usize]) -> u128 {
    let n = sizes.len().saturating_sub(1);
    let mut total = 0u128;
    for s in 2..=n {
        for t in 2..=s {
            let top = sizes[s];
            let low = sizes[s - t];
            for m in 2..=top {
                for l in 2..=low {
                    total += binomial(top, m) * binomial(low, l);
                }
            }
        }
    }
    total
}

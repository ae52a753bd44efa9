/// Upper bound `C(p + k, k) + ℓ - 2` on the treewidth binding function
/// `f(p) = R(p + 1, k + 1) + ℓ - 2` of graphs whose (ℓ-refined)
/// tree-independence number is at most `k`, via `R(a, b) ≤ C(a + b - 2, b - 1)`.
///
/// The value bounds `f(p)` from above; it is not `f(p)` itself. Negative only
/// for the degenerate `p = 0, ℓ = 0`.
pub fn ramsey_binding_bound(p: u32, k: u32, refinement: u32) -> i128 {
    binomial(u64::from(p) + u64::from(k), u64::from(k)) as i128 + i128::from(refinement) - 2
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

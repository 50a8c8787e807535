//! Bernstein operator actions on the Schur basis.
//!
//! The generating series `B(t) = sum_n B_n t^n` builds Schur functions by
//! iterated application to 1, and consecutive operators satisfy the exchange
//! relation `B_n B_m = -B_{m-1} B_{n+1}`. Three views of the action are
//! provided: straightening of an arbitrary integer index sequence to a signed
//! Schur function or zero, the graded action of the series on a single Schur
//! function over an explicit degree window, and the termwise action of a
//! single component on an integer expansion. The lattice-extended operator
//! with fully antisymmetric components is exposed as [`x_apply`].

use crate::error::Error;
use crate::expansion::{ChargedTerm, GradedAction, SchurExpansion, Sign, SignedPartition};
use crate::partition::Partition;

/// Number of pairs out of order relative to a strictly decreasing target.
fn inversions_to_decreasing(values: &[i64]) -> usize {
    let mut count = 0;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] < values[j] {
                count += 1;
            }
        }
    }
    count
}

/// Reduces `B_{a_1} ... B_{a_l} . 1` to a signed Schur function, or `None`
/// when the composition vanishes.
///
/// Rewriting with the exchange relation does not terminate on its own
/// (`B_2 B_2 -> -B_1 B_3 -> B_2 B_2`), so the fixed point is computed in
/// closed form: shift to `b_k = a_k - k`, vanish on a repeated shifted index,
/// otherwise sort strictly decreasing with the sign of the permutation and
/// shift back. A negative trailing entry after the shift back vanishes as
/// well (the index sequence walks off the diagram).
pub fn straighten_b(indices: &[i64]) -> Option<SignedPartition> {
    let shifted: Vec<i64> = indices
        .iter()
        .enumerate()
        .map(|(k, &a)| a - (k as i64 + 1))
        .collect();
    for i in 0..shifted.len() {
        for j in i + 1..shifted.len() {
            if shifted[i] == shifted[j] {
                return None;
            }
        }
    }
    let sign = Sign::from_parity(inversions_to_decreasing(&shifted));
    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts = Vec::with_capacity(sorted.len());
    for (k, &b) in sorted.iter().enumerate() {
        let part = b + (k as i64 + 1);
        if part < 0 {
            return None;
        }
        parts.push(part as u32);
    }
    Some(SignedPartition {
        sign,
        partition: Partition::from_decreasing(parts),
    })
}

/// The terms of `B(t) s_lambda` with degree in `[n_min, n_max]`.
///
/// The term of degree `n = i - 1 - j` (where `j` counts the parts of size at
/// least `i`) carries the partition with the i-th right step of the boundary
/// turned up, and the sign `(-1)^j`. Degrees with no such `i` have no term,
/// and nothing appears below degree `-len(lambda)`.
pub fn b_series_on_schur(
    lambda: &Partition,
    n_min: i64,
    n_max: i64,
) -> Result<GradedAction, Error> {
    if n_min > n_max {
        return Err(Error::InvalidWindow {
            lo: n_min,
            hi: n_max,
        });
    }
    let mut action = GradedAction::new();
    let mut i = 1usize;
    loop {
        let j = lambda.parts_ge(i as u32);
        let n = i as i64 - 1 - j as i64;
        if n > n_max {
            break;
        }
        if n >= n_min {
            action.insert(
                n,
                SignedPartition {
                    sign: Sign::from_parity(j),
                    partition: lambda.turn_nth_r(i),
                },
            );
        }
        i += 1;
    }
    Ok(action)
}

/// Applies the degree-`n` component of the series termwise to an integer
/// Schur expansion.
pub fn b_n_on_expansion(n: i64, f: &SchurExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::zero();
    for (lambda, coeff) in f.terms() {
        let action = b_series_on_schur(lambda, n, n).expect("degenerate window is valid");
        if let Some(term) = action.degree(n) {
            out.add_term(term.partition.clone(), coeff * term.sign.to_i64());
        }
    }
    out
}

/// Applies a composition of lattice-extended operator components to the
/// charge generator `e^{mp}`, returning the signed Schur term with its new
/// charge, or `None` when the composition vanishes.
///
/// The components anticommute, so the indices are first sorted (ascending)
/// with the sign of the permutation; repeated indices vanish. Sorted indices
/// `t_k` produce the partition with parts `k - t_k` and charge `m + l`.
pub fn x_apply(indices: &[i64], charge: i64) -> Option<ChargedTerm> {
    for i in 0..indices.len() {
        for j in i + 1..indices.len() {
            if indices[i] == indices[j] {
                return None;
            }
        }
    }
    let mut inversions = 0usize;
    for i in 0..indices.len() {
        for j in i + 1..indices.len() {
            if indices[i] > indices[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    // Distinct ascending indices t_k give weakly decreasing parts k - t_k.
    let mut parts = Vec::with_capacity(sorted.len());
    for (k, &t) in sorted.iter().enumerate() {
        let part = (k as i64 + 1) - t;
        if part < 0 {
            return None;
        }
        parts.push(part as u32);
    }
    Some(ChargedTerm {
        coefficient: Sign::from_parity(inversions).to_i64(),
        partition: Partition::from_decreasing(parts),
        charge: charge + indices.len() as i64,
    })
}

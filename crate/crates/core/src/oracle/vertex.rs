//! Direct, truncated application of the vertex operator series in the
//! power-sum representation.
//!
//! The untwisted series is `exp(sum_k p_k t^k / k) exp(-sum_k t^{-k} d/dp_k)`
//! acting on the full ring; the component of degree n applied to `f` is
//! `sum_m h_{n+m} D_m(f)` where `D_m(f)` is the coefficient of `t^{-m}` in
//! the annihilation exponential applied to `f`. The twisted series is the
//! odd-index analogue whose creation coefficients depend on a normalization
//! choice that is arbitrated empirically, see [`YNormalization`].

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_rational::BigRational;

use crate::error::Error;
use crate::oracle::bases::{h_in_p, q_n_in_p};
use crate::oracle::ppoly::{rational, IndexMode, PPolynomial};
use crate::partition::StrictPartition;

/// The denominator convention for the twisted creation exponential
/// `exp(sum_{k>=1} 2 t^{2k-1} p_{2k-1} / d_k)`.
///
/// The two candidates are `d_k = k` (the summation index) and `d_k = 2k - 1`
/// (the degree of the power sum it multiplies). Only one of them makes the
/// component anticommutation `Y_n Y_m = -Y_m Y_n` hold and reproduces the
/// one-row values `Y_{-n} . 1 = q_n`; [`arbitrate_y_normalization`] selects
/// it empirically and the winner is frozen as [`Y_NORMALIZATION`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum YNormalization {
    SummationIndex,
    PowerSumDegree,
}

/// The frozen default normalization: the power-sum degree in the denominator.
/// Selected by [`arbitrate_y_normalization`]; the acceptance suite asserts
/// the selection matches this constant.
pub const Y_NORMALIZATION: YNormalization = YNormalization::PowerSumDegree;

impl YNormalization {
    /// The coefficient of `p_r` (r odd) in the exponent of the creation part.
    fn coefficient(self, r: u32) -> BigRational {
        match self {
            YNormalization::SummationIndex => rational(4, (r + 1) as i64),
            YNormalization::PowerSumDegree => rational(2, r as i64),
        }
    }
}

fn y_creation_cache() -> &'static Mutex<HashMap<(YNormalization, u32), PPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<(YNormalization, u32), PPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The degree-`a` coefficient of the twisted creation exponential.
fn y_creation_component(norm: YNormalization, a: u32) -> PPolynomial {
    if let Some(hit) = y_creation_cache().lock().unwrap().get(&(norm, a)) {
        return hit.clone();
    }
    let mut exponent = PPolynomial::zero(IndexMode::Odd);
    let mut r = 1u32;
    while r <= a {
        exponent = exponent.add(&PPolynomial::p(r, IndexMode::Odd).scale(&norm.coefficient(r)));
        r += 2;
    }
    let out = exponent.exp_truncated(a).homogeneous_component(a);
    y_creation_cache()
        .lock()
        .unwrap()
        .insert((norm, a), out.clone());
    out
}

/// The coefficients `D_m(f)` of `t^{-m}` in
/// `exp(-sum_k t^{-k} d/dp_k) f`, with k running over the indices of `f`'s
/// mode. The vector is indexed by m and has length `deg(f) + 1`.
fn lowering_components(f: &PPolynomial) -> Vec<PPolynomial> {
    let degree = f.degree().unwrap_or(0) as usize;
    let mode = f.mode();
    let mut out = vec![PPolynomial::zero(mode); degree + 1];
    if f.is_zero() {
        return out;
    }
    out[0] = f.clone();
    // level[m] holds (-1)^j / j! (sum_k t^{-k} d_k)^j f at the current j.
    let mut level: Vec<PPolynomial> = vec![PPolynomial::zero(mode); degree + 1];
    level[0] = f.clone();
    for j in 1..=degree as i64 {
        let mut next: Vec<PPolynomial> = vec![PPolynomial::zero(mode); degree + 1];
        let mut any = false;
        for (m, piece) in level.iter().enumerate() {
            if piece.is_zero() {
                continue;
            }
            let top = piece.degree().unwrap_or(0);
            for k in 1..=top {
                if !mode.permits(k) {
                    continue;
                }
                let lowered = piece.d_p(k);
                if lowered.is_zero() {
                    continue;
                }
                let slot = m + k as usize;
                next[slot] = next[slot].add(&lowered);
                any = true;
            }
        }
        if !any {
            break;
        }
        for slot in next.iter_mut() {
            *slot = slot.scale(&rational(-1, j));
        }
        for (m, piece) in next.iter().enumerate() {
            out[m] = out[m].add(piece);
        }
        level = next;
    }
    out
}

/// The degree-n component of the untwisted series applied to `f`, truncated
/// exactly at total degree `max_degree`.
pub fn apply_b_direct(n: i64, f: &PPolynomial, max_degree: u32) -> Result<PPolynomial, Error> {
    assert!(
        f.mode() == IndexMode::All,
        "the untwisted series acts on the full ring"
    );
    let degree = f.degree().unwrap_or(0);
    if degree > max_degree {
        return Err(Error::TruncationWindow {
            degree: degree as usize,
            max_degree: max_degree as usize,
        });
    }
    let mut out = PPolynomial::zero(IndexMode::All);
    for (m, lowered) in lowering_components(f).iter().enumerate() {
        if lowered.is_zero() {
            continue;
        }
        let creation_degree = n + m as i64;
        if creation_degree < 0 {
            continue;
        }
        out = out.add(&h_in_p(creation_degree as u32).mul(lowered));
    }
    Ok(out.truncate_above(max_degree))
}

/// The component `Y_n` of the twisted series applied to `f` (odd mode) under
/// an explicit normalization; `Y_{-n}` for n >= 1 raises degree by n.
pub fn apply_y_direct_with(
    norm: YNormalization,
    n: i64,
    f: &PPolynomial,
    max_degree: u32,
) -> Result<PPolynomial, Error> {
    assert!(
        f.mode() == IndexMode::Odd,
        "the twisted series acts on the odd subring"
    );
    let degree = f.degree().unwrap_or(0);
    if degree > max_degree {
        return Err(Error::TruncationWindow {
            degree: degree as usize,
            max_degree: max_degree as usize,
        });
    }
    let mut out = PPolynomial::zero(IndexMode::Odd);
    for (m, lowered) in lowering_components(f).iter().enumerate() {
        if lowered.is_zero() {
            continue;
        }
        let creation_degree = m as i64 - n;
        if creation_degree < 0 {
            continue;
        }
        out = out.add(&y_creation_component(norm, creation_degree as u32).mul(lowered));
    }
    Ok(out.truncate_above(max_degree))
}

/// [`apply_y_direct_with`] under the frozen default normalization.
pub fn apply_y_direct(n: i64, f: &PPolynomial, max_degree: u32) -> Result<PPolynomial, Error> {
    apply_y_direct_with(Y_NORMALIZATION, n, f, max_degree)
}

fn q_in_p_cache() -> &'static Mutex<HashMap<StrictPartition, PPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<StrictPartition, PPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Q_lambda` in the odd power sums, built by iterated application of the
/// raising components `Y_{-lambda_l}, ..., Y_{-lambda_1}` to 1.
pub fn q_in_p(lambda: &StrictPartition, max_degree: u32) -> Result<PPolynomial, Error> {
    let weight = lambda.weight();
    if weight > max_degree {
        return Err(Error::TruncationWindow {
            degree: weight as usize,
            max_degree: max_degree as usize,
        });
    }
    if let Some(hit) = q_in_p_cache().lock().unwrap().get(lambda) {
        return Ok(hit.clone());
    }
    let mut f = PPolynomial::one(IndexMode::Odd);
    for &part in lambda.parts().iter().rev() {
        f = apply_y_direct(-(part as i64), &f, weight)?;
    }
    q_in_p_cache()
        .lock()
        .unwrap()
        .insert(lambda.clone(), f.clone());
    Ok(f)
}

/// Runs the empirical selection of the twisted normalization: the candidate
/// must reproduce `Y_{-n} . 1 = q_n` for small n and anticommute on small
/// compositions. Exactly one candidate passes.
pub fn arbitrate_y_normalization() -> YNormalization {
    let candidates = [
        YNormalization::SummationIndex,
        YNormalization::PowerSumDegree,
    ];
    let mut winner = None;
    for norm in candidates {
        if y_candidate_passes(norm) {
            assert!(
                winner.is_none(),
                "both normalizations pass; arbitration is inconclusive"
            );
            winner = Some(norm);
        }
    }
    winner.expect("one normalization must pass")
}

fn y_candidate_passes(norm: YNormalization) -> bool {
    let one = PPolynomial::one(IndexMode::Odd);
    // One-row values against the generating function.
    for n in 1..=4i64 {
        let direct = apply_y_direct_with(norm, -n, &one, n as u32).unwrap();
        if direct != q_n_in_p(n as u32) {
            return false;
        }
    }
    // Anticommutation of raising components on 1.
    for a in 1..=3i64 {
        for b in 1..=3i64 {
            let cap = (a + b) as u32;
            let ab = apply_y_direct_with(
                norm,
                -a,
                &apply_y_direct_with(norm, -b, &one, cap).unwrap(),
                cap,
            )
            .unwrap();
            let ba = apply_y_direct_with(
                norm,
                -b,
                &apply_y_direct_with(norm, -a, &one, cap).unwrap(),
                cap,
            )
            .unwrap();
            if a == b {
                if !ab.is_zero() {
                    return false;
                }
            } else if !ab.add(&ba).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::bases::schur_in_p;
    use crate::oracle::ppoly::integer;
    use crate::partition::Partition;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn b_component_examples() {
        let one = PPolynomial::one(IndexMode::All);
        // B_2 . 1 = h_2.
        assert_eq!(apply_b_direct(2, &one, 4).unwrap(), h_in_p(2));
        // B_0 annihilates the single box.
        let p1 = PPolynomial::p(1, IndexMode::All);
        assert!(apply_b_direct(0, &p1, 4).unwrap().is_zero());
        // B_{-1} lowers it to -1.
        assert_eq!(
            apply_b_direct(-1, &p1, 4).unwrap(),
            PPolynomial::one(IndexMode::All).scale(&integer(-1))
        );
    }

    #[test]
    fn b_chain_builds_schur_functions() {
        for w in 0..=6 {
            for lam in Partition::all_of_weight(w) {
                let mut f = PPolynomial::one(IndexMode::All);
                for &p in lam.parts().iter().rev() {
                    f = apply_b_direct(p as i64, &f, w).unwrap();
                }
                assert_eq!(f, schur_in_p(&lam), "lambda={lam}");
            }
        }
    }

    #[test]
    fn truncation_window_is_enforced() {
        let f = PPolynomial::p(1, IndexMode::All);
        assert!(matches!(
            apply_b_direct(1, &f, 0),
            Err(Error::TruncationWindow { .. })
        ));
    }

    #[test]
    fn y_one_row_values() {
        let one = PPolynomial::one(IndexMode::Odd);
        assert_eq!(
            apply_y_direct(-1, &one, 2).unwrap(),
            PPolynomial::p(1, IndexMode::Odd).scale(&integer(2))
        );
        assert_eq!(
            apply_y_direct(-2, &one, 2).unwrap(),
            PPolynomial::p(1, IndexMode::Odd)
                .mul_p(1)
                .scale(&integer(2))
        );
        assert_eq!(apply_y_direct(0, &one, 2).unwrap(), one);
    }

    #[test]
    fn arbitration_selects_the_frozen_default() {
        assert_eq!(arbitrate_y_normalization(), Y_NORMALIZATION);
        assert!(!y_candidate_passes(YNormalization::SummationIndex));
        assert!(y_candidate_passes(YNormalization::PowerSumDegree));
    }

    #[test]
    fn q_in_p_small_values() {
        assert_eq!(
            q_in_p(&StrictPartition::empty(), 0).unwrap(),
            PPolynomial::one(IndexMode::Odd)
        );
        assert_eq!(q_in_p(&sp(&[1]), 3).unwrap(), q_n_in_p(1));
        assert_eq!(q_in_p(&sp(&[3]), 3).unwrap(), q_n_in_p(3));
        assert!(matches!(
            q_in_p(&sp(&[4, 1]), 3),
            Err(Error::TruncationWindow { .. })
        ));
    }

    #[test]
    fn y_anticommutation_on_q_basis() {
        for a in 1..=5i64 {
            for b in 1..=5i64 {
                let one = PPolynomial::one(IndexMode::Odd);
                let cap = (a + b) as u32;
                let ab = apply_y_direct(-a, &apply_y_direct(-b, &one, cap).unwrap(), cap).unwrap();
                let ba = apply_y_direct(-b, &apply_y_direct(-a, &one, cap).unwrap(), cap).unwrap();
                if a == b {
                    assert!(ab.is_zero(), "a=b={a}");
                } else {
                    assert!(ab.add(&ba).is_zero(), "a={a}, b={b}");
                }
            }
        }
    }

    #[test]
    fn b_chain_and_classical_tables_share_normalization() {
        // B_1 B_1 . 1 = s_11.
        let one = PPolynomial::one(IndexMode::All);
        let b1 = apply_b_direct(1, &one, 2).unwrap();
        let chain = apply_b_direct(1, &b1, 2).unwrap();
        assert_eq!(chain, schur_in_p(&part(&[1, 1])));
    }
}

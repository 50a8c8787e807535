//! Twisted vertex operator actions on the Schur Q-basis.
//!
//! The components of the twisted series anticommute exactly, `Y_n Y_m =
//! -Y_m Y_n`, and iterated application of `Y_{-lambda_1} ... Y_{-lambda_l}`
//! to 1 builds `Q_lambda` for strict `lambda`. Consequently the action of a
//! single component `Y_{-n}` (n >= 1) on `Q_lambda` either vanishes (when n
//! is already a part) or inserts the part n with the sign `(-1)^k`, k the
//! number of parts greater than n.
//!
//! Only raising components `Y_{-n}` with `n >= 1` are modeled. For `n <= 0`
//! the plain anticommutation relation no longer tells the whole story (the
//! annihilation half of the algebra contributes correction terms), and the
//! Q-basis carries no meaning for nonpositive indices, so those indices are
//! rejected rather than guessed at.

use crate::error::Error;
use crate::expansion::{QExpansion, QGradedAction, Sign, SignedStrict};
use crate::partition::StrictPartition;

/// Reduces `Y_{-a_1} ... Y_{-a_l} . 1` (all `a_k >= 1`) to a signed
/// Q-function, or `None` when two indices coincide.
pub fn straighten_y(positive_parts: &[u32]) -> Result<Option<SignedStrict>, Error> {
    for &a in positive_parts {
        if a == 0 {
            return Err(Error::OutOfScopeIndex(0));
        }
    }
    for i in 0..positive_parts.len() {
        for j in i + 1..positive_parts.len() {
            if positive_parts[i] == positive_parts[j] {
                return Ok(None);
            }
        }
    }
    let mut inversions = 0usize;
    for i in 0..positive_parts.len() {
        for j in i + 1..positive_parts.len() {
            if positive_parts[i] < positive_parts[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = positive_parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Some(SignedStrict {
        sign: Sign::from_parity(inversions),
        partition: StrictPartition::from_strictly_decreasing(sorted),
    }))
}

/// The terms of the twisted series acting on `Q_lambda` at degrees
/// `1 ..= n_max`.
///
/// The term of degree n exists exactly when n is insertable (not a part of
/// `lambda`); it carries `lambda` with n inserted and the sign `(-1)^k`, k
/// the number of parts greater than n.
pub fn y_series_on_q(lambda: &StrictPartition, n_max: u32) -> QGradedAction {
    let mut action = QGradedAction::new();
    for value in 1..=n_max {
        if lambda.contains_part(value) {
            continue;
        }
        let above = lambda.parts().iter().take_while(|&&p| p > value).count();
        action.insert(
            value,
            SignedStrict {
                sign: Sign::from_parity(above),
                partition: lambda.insert_value(value),
            },
        );
    }
    action
}

/// Applies the single raising component `Y_{-n}` (n >= 1) to `Q_lambda`.
pub fn y_neg_n_on_q(n: u32, lambda: &StrictPartition) -> QExpansion {
    assert!(n >= 1, "only raising components are modeled");
    if lambda.contains_part(n) {
        return QExpansion::zero();
    }
    let above = lambda.parts().iter().take_while(|&&p| p > n).count();
    QExpansion::single(lambda.insert_value(n), Sign::from_parity(above).to_i64())
}

/// Termwise extension of [`y_neg_n_on_q`] to integer Q-expansions.
pub fn y_neg_n_on_expansion(n: u32, f: &QExpansion) -> QExpansion {
    let mut out = QExpansion::zero();
    for (lambda, coeff) in f.terms() {
        for (mu, c) in y_neg_n_on_q(n, lambda).terms() {
            out.add_term(mu.clone(), coeff * c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn straighten_examples() {
        let t = straighten_y(&[3, 1]).unwrap().unwrap();
        assert_eq!((t.sign, t.partition.clone()), (Sign::Plus, sp(&[3, 1])));
        let t = straighten_y(&[1, 3]).unwrap().unwrap();
        assert_eq!((t.sign, t.partition.clone()), (Sign::Minus, sp(&[3, 1])));
        assert_eq!(straighten_y(&[2, 2]).unwrap(), None);
        assert!(matches!(
            straighten_y(&[3, 0]),
            Err(Error::OutOfScopeIndex(0))
        ));
        let t = straighten_y(&[]).unwrap().unwrap();
        assert_eq!(t.partition, StrictPartition::empty());
    }

    #[test]
    fn series_on_empty() {
        let action = y_series_on_q(&StrictPartition::empty(), 3);
        assert_eq!(action.len(), 3);
        for n in 1..=3u32 {
            let t = action.degree(n).unwrap();
            assert_eq!(t.sign, Sign::Plus);
            assert_eq!(t.partition, sp(&[n]));
        }
    }

    #[test]
    fn series_on_single_part_skips_existing_degree() {
        let action = y_series_on_q(&sp(&[1]), 4);
        assert_eq!(action.degree(1), None);
        for n in 2..=4u32 {
            let t = action.degree(n).unwrap();
            assert_eq!(t.sign, Sign::Plus, "degree {n}");
            assert_eq!(t.partition, sp(&[n, 1]));
        }
    }

    #[test]
    fn series_sign_counts_larger_parts() {
        let action = y_series_on_q(&sp(&[6, 4, 3, 1]), 2);
        let t = action.degree(2).unwrap();
        assert_eq!(t.sign, Sign::Minus);
        assert_eq!(t.partition, sp(&[6, 4, 3, 2, 1]));
    }

    #[test]
    fn component_examples() {
        // One part of 3,1 exceeds 2, so the insertion carries a minus sign.
        assert_eq!(
            y_neg_n_on_q(2, &sp(&[3, 1])),
            QExpansion::single(sp(&[3, 2, 1]), -1)
        );
        assert!(y_neg_n_on_q(1, &sp(&[1])).is_zero());
        assert_eq!(
            y_neg_n_on_q(5, &StrictPartition::empty()),
            QExpansion::single(sp(&[5]), 1)
        );
    }

    #[test]
    fn series_and_component_agree() {
        for w in 0..=12 {
            for lam in StrictPartition::all_of_weight(w) {
                let action = y_series_on_q(&lam, 8);
                for n in 1..=8u32 {
                    let direct = y_neg_n_on_q(n, &lam);
                    match action.degree(n) {
                        None => assert!(direct.is_zero(), "lambda={lam}, n={n}"),
                        Some(t) => {
                            assert_eq!(
                                direct,
                                QExpansion::single(t.partition.clone(), t.sign.to_i64()),
                                "lambda={lam}, n={n}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weight_bookkeeping() {
        for w in 0..=10 {
            for lam in StrictPartition::all_of_weight(w) {
                for (n, t) in y_series_on_q(&lam, 9).iter() {
                    assert_eq!(t.partition.weight(), lam.weight() + n);
                    assert!(!lam.contains_part(n));
                }
            }
        }
    }

    #[test]
    fn components_anticommute() {
        for a in 1..=6u32 {
            for b in 1..=6u32 {
                for w in 0..=6 {
                    for lam in StrictPartition::all_of_weight(w) {
                        let start = QExpansion::single(lam.clone(), 1);
                        let ab = y_neg_n_on_expansion(a, &y_neg_n_on_expansion(b, &start));
                        let ba = y_neg_n_on_expansion(b, &y_neg_n_on_expansion(a, &start));
                        if a == b {
                            assert!(ab.is_zero(), "a={a}, lambda={lam}");
                        } else {
                            assert_eq!(ab, -ba, "a={a}, b={b}, lambda={lam}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn iterated_components_build_q_functions() {
        for w in 0..=10 {
            for lam in StrictPartition::all_of_weight(w) {
                let mut f = QExpansion::single(StrictPartition::empty(), 1);
                for &part in lam.parts().iter().rev() {
                    f = y_neg_n_on_expansion(part, &f);
                }
                assert_eq!(f, QExpansion::single(lam.clone(), 1), "lambda={lam}");
            }
        }
    }
}

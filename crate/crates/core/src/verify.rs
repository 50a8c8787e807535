//! Verification sweeps: every implemented identity is replayed against the
//! brute-force oracle on all instances up to a weight bound, with
//! counterexamples reported rather than just a boolean.
//!
//! Each sweep has a `_with` variant taking the implementation under test as
//! a closure, so a deliberately corrupted implementation (flipped sign,
//! dropped term) can be shown to trip the sweep.

use crate::bernstein::{b_series_on_schur, straighten_b};
use crate::expansion::{GradedAction, QGradedAction, SchurExpansion};
use crate::lr_pieri::{lr_coefficient, pieri_col, pieri_row, schur_product};
use crate::oracle::{
    apply_b_direct, apply_y_direct, arbitrate_y_normalization, inner, q_expansion_from_p, q_in_p,
    schur_expansion_from_p, schur_in_p, ssyt_lr, IndexMode, InnerProductMode, PPolynomial,
    Y_NORMALIZATION,
};
use crate::partition::{is_horizontal_strip, is_vertical_strip, Partition, StrictPartition};
use crate::qvertex::y_series_on_q;

/// The outcome of one verification sweep.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: String,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 32 {
            self.failures.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Code round trips, the closed form of the boundary edit against the
/// literal edit, conjugate duality of the path statistics, and the three
/// insertion routes for strict partitions.
pub fn verify_codes(max_weight: u32) -> SuiteReport {
    let mut report = SuiteReport::new("codes");
    for w in 0..=max_weight {
        for lam in Partition::all_of_weight(w) {
            let code = lam.code();
            report.check(code.to_partition() == lam, || {
                format!("round trip failed for {lam} (code {code})")
            });
            for i in 1..=(max_weight as usize + 2) {
                let closed = lam.turn_nth_r(i);
                let edited = code.turn_nth_r(i).to_partition();
                report.check(closed == edited, || {
                    format!("boundary edit mismatch for {lam}, i={i}: {closed} vs {edited}")
                });
            }
            let conj = lam.conjugate();
            for i in 1..=(max_weight + 2) {
                report.check(lam.parts_ge(i) == conj.part(i as usize) as usize, || {
                    format!("conjugate duality failed for {lam}, i={i}")
                });
            }
        }
        for lam in StrictPartition::all_of_weight(w) {
            let shifted = lam.shifted_code();
            report.check(shifted.to_strict() == lam, || {
                format!("shifted round trip failed for {lam}")
            });
            for i in 1..=(max_weight as usize + 2) {
                let direct = lam.insert_nth(i);
                let via_shifted = shifted.turn_nth_r(i).to_strict();
                let via_pairs = lam
                    .to_partition()
                    .code()
                    .insert_u_after_nth_rr(i)
                    .to_partition();
                report.check(direct == via_shifted, || {
                    format!("shifted edit mismatch for {lam}, i={i}")
                });
                report.check(direct.to_partition() == via_pairs, || {
                    format!("pair-insertion mismatch for {lam}, i={i}")
                });
                let gap = direct.weight() - lam.weight();
                report.check(gap == lam.nth_insertable(i), || {
                    format!("insertable gap mismatch for {lam}, i={i}")
                });
                let closed =
                    lam.len() as i64 + lam.weight() as i64 - direct.weight() as i64 + i as i64;
                report.check(
                    lam.parts_gt_nth_insertable(i) as i64 == closed
                        && lam.parts_gt_nth_insertable(i) == shifted.us_after_nth_r(i),
                    || format!("up-step count mismatch for {lam}, i={i}"),
                );
            }
        }
    }
    report
}

/// The untwisted series against straightening and the direct operator
/// oracle, and the operator chain against the classical Schur expansion.
pub fn verify_bernstein(max_weight: u32) -> SuiteReport {
    verify_bernstein_with(
        |lam, lo, hi| b_series_on_schur(lam, lo, hi).expect("valid window"),
        max_weight,
    )
}

pub fn verify_bernstein_with(
    series: impl Fn(&Partition, i64, i64) -> GradedAction,
    max_weight: u32,
) -> SuiteReport {
    let mut report = SuiteReport::new("bernstein");
    let n_hi = 5i64;
    for w in 0..=max_weight {
        for lam in Partition::all_of_weight(w) {
            let lo = -(lam.len() as i64) - 1;
            let action = series(&lam, lo, n_hi);
            let in_p = schur_in_p(&lam);
            let cap = w + n_hi as u32;
            for n in lo..=n_hi {
                let direct = apply_b_direct(n, &in_p, cap).expect("window fits");
                let expected = match action.degree(n) {
                    None => PPolynomial::zero(IndexMode::All),
                    Some(term) => schur_in_p(&term.partition)
                        .scale(&crate::oracle::integer(term.sign.to_i64())),
                };
                report.check(direct == expected, || {
                    format!("series vs oracle mismatch for {lam} at degree {n}")
                });
                let mut indices = vec![n];
                indices.extend(lam.parts().iter().map(|&p| p as i64));
                let straightened = straighten_b(&indices);
                let matches = match (action.degree(n), straightened) {
                    (None, None) => true,
                    (Some(t), Some(s)) => t.sign == s.sign && t.partition == s.partition,
                    _ => false,
                };
                report.check(matches, || {
                    format!("series vs straightening mismatch for {lam} at degree {n}")
                });
            }
            // The operator chain rebuilds the classical expansion.
            let mut chain = PPolynomial::one(IndexMode::All);
            for &part in lam.parts().iter().rev() {
                chain = apply_b_direct(part as i64, &chain, w).expect("window fits");
            }
            report.check(chain == in_p, || {
                format!("operator chain does not rebuild s[{lam}]")
            });
        }
    }
    report
}

/// The twisted series against the insertion rule and the direct operator
/// oracle, anticommutation, and the twisted inner product.
pub fn verify_qvertex(max_weight: u32) -> SuiteReport {
    verify_qvertex_with(y_series_on_q, max_weight)
}

pub fn verify_qvertex_with(
    series: impl Fn(&StrictPartition, u32) -> QGradedAction,
    max_weight: u32,
) -> SuiteReport {
    let mut report = SuiteReport::new("qvertex");
    report.check(arbitrate_y_normalization() == Y_NORMALIZATION, || {
        "normalization arbitration contradicts the frozen default".to_string()
    });
    let n_hi = 6u32;
    for w in 0..=max_weight {
        for lam in StrictPartition::all_of_weight(w) {
            let action = series(&lam, n_hi);
            let in_p = q_in_p(&lam, w).expect("window fits");
            let cap = w + n_hi;
            for n in 1..=n_hi {
                let direct = apply_y_direct(-(n as i64), &in_p, cap).expect("window fits");
                let expected = match action.degree(n) {
                    None => PPolynomial::zero(IndexMode::Odd),
                    Some(term) => q_in_p(&term.partition, cap)
                        .expect("window fits")
                        .scale(&crate::oracle::integer(term.sign.to_i64())),
                };
                report.check(direct == expected, || {
                    format!("twisted series vs oracle mismatch for {lam} at degree {n}")
                });
                // Insertion-position sign of the unshifted statement.
                let insertable = !lam.contains_part(n);
                report.check(action.degree(n).is_some() == insertable, || {
                    format!("degree {n} presence wrong for {lam}")
                });
                if let Some(term) = action.degree(n) {
                    let above = lam.parts().iter().filter(|&&p| p > n).count();
                    report.check(
                        term.sign == crate::expansion::Sign::from_parity(above),
                        || format!("insertion sign mismatch for {lam} at degree {n}"),
                    );
                }
            }
        }
    }
    // Anticommutation of the direct operator.
    let one = PPolynomial::one(IndexMode::Odd);
    for a in 1..=6i64 {
        for b in 1..=6i64 {
            let cap = (a + b) as u32;
            let ab = apply_y_direct(-a, &apply_y_direct(-b, &one, cap).unwrap(), cap).unwrap();
            let ba = apply_y_direct(-b, &apply_y_direct(-a, &one, cap).unwrap(), cap).unwrap();
            let ok = if a == b {
                ab.is_zero()
            } else {
                ab.add(&ba).is_zero()
            };
            report.check(ok, || format!("anticommutation failed for a={a}, b={b}"));
        }
    }
    // Orthogonality of the Q family under the twisted pairing.
    for w in 0..=max_weight {
        let family = StrictPartition::all_of_weight(w);
        for a in &family {
            for b in &family {
                let fa = q_in_p(a, w).unwrap();
                let fb = q_in_p(b, w).unwrap();
                let pairing = inner(&fa, &fb, InnerProductMode::Twisted).unwrap();
                let ok = if a == b {
                    !num_traits::Zero::is_zero(&pairing)
                } else {
                    num_traits::Zero::is_zero(&pairing)
                };
                report.check(ok, || format!("orthogonality failed for Q[{a}], Q[{b}]"));
            }
        }
    }
    report
}

/// The code-walk rule against the tableau count, commutativity, the Pieri
/// specializations, and the product in the power-sum representation.
pub fn verify_lr(max_weight: u32) -> SuiteReport {
    verify_lr_with(schur_product, max_weight)
}

pub fn verify_lr_with(
    product: impl Fn(&Partition, &Partition) -> SchurExpansion,
    max_weight: u32,
) -> SuiteReport {
    let mut report = SuiteReport::new("lr");
    for total in 0..=max_weight {
        for wa in 0..=total {
            let wb = total - wa;
            for mu in Partition::all_of_weight(wa) {
                for nu in Partition::all_of_weight(wb) {
                    let expansion = product(&mu, &nu);
                    for lam in Partition::all_of_weight(total) {
                        let walks = expansion.coefficient(&lam) as u64;
                        let tableaux = ssyt_lr(&mu, &nu, &lam);
                        report.check(walks == tableaux, || {
                            format!(
                                "c[{lam}; {mu},{nu}] mismatch: walks {walks}, tableaux {tableaux}"
                            )
                        });
                    }
                    report.check(expansion == product(&nu, &mu), || {
                        format!("product not commutative for {mu}, {nu}")
                    });
                    // The same product in the power-sum representation.
                    let in_p = schur_in_p(&mu).mul(&schur_in_p(&nu));
                    match schur_expansion_from_p(&in_p, total) {
                        Ok(projected) => report.check(projected == expansion, || {
                            format!("p-basis product mismatch for {mu}, {nu}")
                        }),
                        Err(err) => report.check(false, || {
                            format!("p-basis projection failed for {mu}, {nu}: {err}")
                        }),
                    }
                }
            }
        }
    }
    // Pieri rows and columns against the strip predicates and the rule.
    for w in 0..=max_weight.saturating_sub(1) {
        for mu in Partition::all_of_weight(w) {
            for n in 1..=(max_weight - w).min(4) {
                let rows = pieri_row(&mu, n);
                let strips: Vec<Partition> = Partition::all_of_weight(w + n)
                    .into_iter()
                    .filter(|lam| is_horizontal_strip(lam, &mu, n))
                    .collect();
                report.check(
                    rows.len() == strips.len() && strips.iter().all(|lam| rows.contains(lam)),
                    || format!("row strips mismatch for {mu}, n={n}"),
                );
                for lam in &rows {
                    let c = lr_coefficient(&mu, &Partition::from_decreasing(vec![n]), lam);
                    report.check(c == 1, || format!("row multiplicity for {mu} -> {lam}"));
                }
                let cols = pieri_col(&mu, n);
                let strips: Vec<Partition> = Partition::all_of_weight(w + n)
                    .into_iter()
                    .filter(|lam| is_vertical_strip(lam, &mu, n))
                    .collect();
                report.check(
                    cols.len() == strips.len() && strips.iter().all(|lam| cols.contains(lam)),
                    || format!("column strips mismatch for {mu}, n={n}"),
                );
                let column = Partition::from_decreasing(vec![1; n as usize]);
                for lam in &cols {
                    let c = lr_coefficient(&mu, &column, lam);
                    report.check(c == 1, || format!("column multiplicity for {mu} -> {lam}"));
                }
            }
        }
    }
    report
}

/// Q-expansion round trips through the projection.
pub fn verify_q_projection(max_weight: u32) -> SuiteReport {
    let mut report = SuiteReport::new("q-projection");
    for w in 0..=max_weight {
        for lam in StrictPartition::all_of_weight(w) {
            let f = q_in_p(&lam, w).unwrap();
            match q_expansion_from_p(&f, w) {
                Ok(expansion) => report.check(
                    expansion == crate::expansion::QExpansion::single(lam.clone(), 1),
                    || format!("Q projection round trip failed for {lam}"),
                ),
                Err(err) => report.check(false, || format!("Q projection error for {lam}: {err}")),
            }
        }
    }
    report
}

/// Every sweep at the same weight bound.
pub fn verify_all(max_weight: u32) -> Vec<SuiteReport> {
    vec![
        verify_codes(max_weight),
        verify_bernstein(max_weight.min(7)),
        verify_qvertex(max_weight.min(8)),
        verify_lr(max_weight),
        verify_q_projection(max_weight.min(8)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::SignedPartition;

    #[test]
    fn sweeps_pass_at_small_weight() {
        for report in verify_all(4) {
            assert!(report.passed(), "{}: {:?}", report.name, report.failures);
            assert!(report.checks > 0);
        }
    }

    #[test]
    fn corrupted_sign_is_caught() {
        let report = verify_bernstein_with(
            |lam, lo, hi| {
                let mut action = GradedAction::new();
                for (n, term) in b_series_on_schur(lam, lo, hi).unwrap().iter() {
                    action.insert(
                        n,
                        SignedPartition {
                            sign: term.sign.flip(),
                            partition: term.partition.clone(),
                        },
                    );
                }
                action
            },
            3,
        );
        assert!(!report.passed());
    }

    #[test]
    fn dropped_term_is_caught() {
        let report = verify_qvertex_with(
            |lam, n_max| {
                let mut action = QGradedAction::new();
                let mut skipped_one = false;
                for (n, term) in y_series_on_q(lam, n_max).iter() {
                    if !skipped_one {
                        skipped_one = true;
                        continue;
                    }
                    action.insert(n, term.clone());
                }
                action
            },
            4,
        );
        assert!(!report.passed());
    }

    #[test]
    fn wrong_multiplicity_is_caught() {
        let report = verify_lr_with(
            |mu, nu| {
                let mut expansion = schur_product(mu, nu);
                if let Some(first) = expansion.support_desc().first().cloned() {
                    expansion.add_term(first, 1);
                }
                expansion
            },
            4,
        );
        assert!(!report.passed());
    }
}

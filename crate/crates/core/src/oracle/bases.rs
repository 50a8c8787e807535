//! Classical expansions into the power-sum basis: complete homogeneous and
//! elementary symmetric functions, the generating-function coefficients of
//! the Q-basis, and Schur functions by Jacobi-Trudi determinants. These are
//! the oracle's reference values and deliberately avoid the vertex-operator
//! code paths they are used to check.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::oracle::ppoly::{IndexMode, PPolynomial};
use crate::partition::Partition;

/// The centralizer order `z_mu = prod_i i^{m_i} m_i!` for a partition with
/// multiplicities `m_i`.
pub fn z_constant(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut run_value = 0u32;
    let mut run_length = 0u64;
    for &part in mu.parts().iter().chain(std::iter::once(&0)) {
        if part == run_value {
            run_length += 1;
        } else {
            for m in 1..=run_length {
                z *= BigInt::from(run_value) * BigInt::from(m);
            }
            run_value = part;
            run_length = 1;
        }
    }
    z
}

fn h_cache() -> &'static Mutex<HashMap<u32, PPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, PPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn e_cache() -> &'static Mutex<HashMap<u32, PPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, PPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn q_cache() -> &'static Mutex<HashMap<u32, PPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, PPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn schur_cache() -> &'static Mutex<HashMap<Partition, PPolynomial>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, PPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The complete homogeneous function `h_n = sum_{mu of n} p_mu / z_mu`.
pub fn h_in_p(n: u32) -> PPolynomial {
    if let Some(hit) = h_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut out = PPolynomial::zero(IndexMode::All);
    for mu in Partition::all_of_weight(n) {
        let z = z_constant(&mu);
        out.add_term(mu, BigRational::new(BigInt::one(), z));
    }
    h_cache().lock().unwrap().insert(n, out.clone());
    out
}

/// The elementary function `e_n = sum_{mu of n} (-1)^{n - l(mu)} p_mu / z_mu`.
pub fn e_in_p(n: u32) -> PPolynomial {
    if let Some(hit) = e_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut out = PPolynomial::zero(IndexMode::All);
    for mu in Partition::all_of_weight(n) {
        let sign = if (n as usize + mu.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        let z = z_constant(&mu);
        out.add_term(mu, BigRational::new(BigInt::from(sign), z));
    }
    e_cache().lock().unwrap().insert(n, out.clone());
    out
}

/// The degree-n coefficient of `exp(sum_{r odd} 2 p_r t^r / r)`: the
/// one-row Q-function `q_n`, supported on partitions with odd parts.
pub fn q_n_in_p(n: u32) -> PPolynomial {
    if let Some(hit) = q_cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut out = PPolynomial::zero(IndexMode::Odd);
    for mu in Partition::all_of_weight(n) {
        if mu.parts().iter().any(|&part| part % 2 == 0) {
            continue;
        }
        let two_pow = BigInt::from(2).pow(mu.len() as u32);
        let z = z_constant(&mu);
        out.add_term(mu, BigRational::new(two_pow, z));
    }
    q_cache().lock().unwrap().insert(n, out.clone());
    out
}

/// Determinant by expansion over column subsets; sizes stay tiny because the
/// caller picks the smaller Jacobi-Trudi matrix.
fn determinant(matrix: &[Vec<PPolynomial>]) -> PPolynomial {
    let n = matrix.len();
    if n == 0 {
        return PPolynomial::one(IndexMode::All);
    }
    let mut dp: Vec<Option<PPolynomial>> = vec![None; 1 << n];
    dp[0] = Some(PPolynomial::one(IndexMode::All));
    for mask in 1usize..(1 << n) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = PPolynomial::zero(IndexMode::All);
        let mut rank = 0usize;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let rest = dp[mask ^ (1 << col)].as_ref().expect("filled in order");
            let term = matrix[row][col].mul(rest);
            if (row + rank).is_multiple_of(2) {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
            rank += 1;
        }
        dp[mask] = Some(acc);
    }
    dp[(1 << n) - 1].take().unwrap()
}

/// The Schur function `s_lambda` in the power-sum basis, by the Jacobi-Trudi
/// determinant `det(h_{lambda_i - i + j})`, or its dual over the elementary
/// functions when the conjugate matrix is smaller.
pub fn schur_in_p(lambda: &Partition) -> PPolynomial {
    if let Some(hit) = schur_cache().lock().unwrap().get(lambda) {
        return hit.clone();
    }
    let use_dual = lambda.len() > lambda.part(1) as usize;
    let (index, entry): (Partition, fn(u32) -> PPolynomial) = if use_dual {
        (lambda.conjugate(), e_in_p)
    } else {
        (lambda.clone(), h_in_p)
    };
    let size = index.len();
    let matrix: Vec<Vec<PPolynomial>> = (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| {
                    let subscript = index.part(i) as i64 - i as i64 + j as i64;
                    if subscript < 0 {
                        PPolynomial::zero(IndexMode::All)
                    } else {
                        entry(subscript as u32)
                    }
                })
                .collect()
        })
        .collect();
    let out = determinant(&matrix);
    schur_cache()
        .lock()
        .unwrap()
        .insert(lambda.clone(), out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::ppoly::{integer, rational};
    use crate::partition::StrictPartition;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn z_values() {
        assert_eq!(z_constant(&Partition::empty()), BigInt::one());
        assert_eq!(z_constant(&part(&[1])), BigInt::from(1));
        assert_eq!(z_constant(&part(&[1, 1])), BigInt::from(2));
        assert_eq!(z_constant(&part(&[2])), BigInt::from(2));
        assert_eq!(z_constant(&part(&[3, 1, 1])), BigInt::from(6));
        assert_eq!(z_constant(&part(&[2, 2, 1])), BigInt::from(8));
    }

    #[test]
    fn h_small_values() {
        assert_eq!(h_in_p(0), PPolynomial::one(IndexMode::All));
        assert_eq!(h_in_p(1), PPolynomial::p(1, IndexMode::All));
        let h2 = h_in_p(2);
        assert_eq!(h2.coefficient(&part(&[1, 1])), rational(1, 2));
        assert_eq!(h2.coefficient(&part(&[2])), rational(1, 2));
    }

    #[test]
    fn schur_small_values() {
        assert_eq!(schur_in_p(&part(&[1])), PPolynomial::p(1, IndexMode::All));
        let s2 = schur_in_p(&part(&[2]));
        assert_eq!(s2.coefficient(&part(&[1, 1])), rational(1, 2));
        assert_eq!(s2.coefficient(&part(&[2])), rational(1, 2));
        let s11 = schur_in_p(&part(&[1, 1]));
        assert_eq!(s11.coefficient(&part(&[1, 1])), rational(1, 2));
        assert_eq!(s11.coefficient(&part(&[2])), rational(-1, 2));
    }

    #[test]
    fn schur_by_h_and_by_e_agree() {
        // Force both Jacobi-Trudi routes and compare.
        for w in 0..=8 {
            for lam in Partition::all_of_weight(w) {
                let size = lam.len();
                let h_matrix: Vec<Vec<PPolynomial>> = (1..=size)
                    .map(|i| {
                        (1..=size)
                            .map(|j| {
                                let s = lam.part(i) as i64 - i as i64 + j as i64;
                                if s < 0 {
                                    PPolynomial::zero(IndexMode::All)
                                } else {
                                    h_in_p(s as u32)
                                }
                            })
                            .collect()
                    })
                    .collect();
                let conj = lam.conjugate();
                let dual_size = conj.len();
                let e_matrix: Vec<Vec<PPolynomial>> = (1..=dual_size)
                    .map(|i| {
                        (1..=dual_size)
                            .map(|j| {
                                let s = conj.part(i) as i64 - i as i64 + j as i64;
                                if s < 0 {
                                    PPolynomial::zero(IndexMode::All)
                                } else {
                                    e_in_p(s as u32)
                                }
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(
                    determinant(&h_matrix),
                    determinant(&e_matrix),
                    "lambda={lam}"
                );
            }
        }
    }

    #[test]
    fn q_generating_coefficients() {
        assert_eq!(q_n_in_p(0), PPolynomial::one(IndexMode::Odd));
        let q1 = q_n_in_p(1);
        assert_eq!(q1.coefficient(&part(&[1])), integer(2));
        let q2 = q_n_in_p(2);
        assert_eq!(q2.coefficient(&part(&[1, 1])), integer(2));
        assert!(q2.coefficient(&part(&[2])) == integer(0));
        let q3 = q_n_in_p(3);
        assert_eq!(q3.coefficient(&part(&[3])), rational(2, 3));
        assert_eq!(q3.coefficient(&part(&[1, 1, 1])), rational(4, 3));
    }

    #[test]
    fn p1_squared_decomposes() {
        // p_1^2 = s_2 + s_11 exactly.
        let p1sq = PPolynomial::p(1, IndexMode::All).mul_p(1);
        let sum = schur_in_p(&part(&[2])).add(&schur_in_p(&part(&[1, 1])));
        assert_eq!(p1sq, sum);
    }

    #[test]
    fn strict_enumeration_is_available_for_sweeps() {
        assert_eq!(StrictPartition::all_of_weight(8).len(), 6);
    }
}

//! Inner products on the power-sum basis and exact projection of a
//! polynomial onto the Schur or Q basis.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::expansion::{QExpansion, SchurExpansion};
use crate::oracle::bases::{schur_in_p, z_constant};
use crate::oracle::ppoly::{IndexMode, PPolynomial};
use crate::oracle::vertex::q_in_p;
use crate::partition::{Partition, StrictPartition};

/// Which bilinear form to use on power-sum monomials.
///
/// Untwisted: `<p_lambda, p_mu> = delta z_lambda`, the form making the Schur
/// basis orthonormal. Twisted: `<p_lambda, p_mu> = 2^{-l(lambda)} delta
/// z_lambda` on the odd subring, the form making the Q basis orthogonal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InnerProductMode {
    Untwisted,
    Twisted,
}

/// The bilinear extension of the diagonal pairing to polynomials.
pub fn inner(
    f: &PPolynomial,
    g: &PPolynomial,
    mode: InnerProductMode,
) -> Result<BigRational, Error> {
    if mode == InnerProductMode::Twisted
        && (f.mode() != IndexMode::Odd || g.mode() != IndexMode::Odd)
    {
        return Err(Error::ModeMismatch(
            "the twisted inner product requires odd-index operands".into(),
        ));
    }
    let mut total = BigRational::zero();
    for (key, fc) in f.terms() {
        let gc = g.coefficient(key);
        if gc.is_zero() {
            continue;
        }
        let mut weight = BigRational::from_integer(z_constant(key));
        if mode == InnerProductMode::Twisted {
            let half_power = BigInt::from(2).pow(key.len() as u32);
            weight /= BigRational::from_integer(half_power);
        }
        total += fc * gc * weight;
    }
    Ok(total)
}

fn check_window(f: &PPolynomial, max_degree: u32) -> Result<(), Error> {
    let degree = f.degree().unwrap_or(0);
    if degree > max_degree {
        return Err(Error::TruncationWindow {
            degree: degree as usize,
            max_degree: max_degree as usize,
        });
    }
    Ok(())
}

fn integral_coefficient(c: &BigRational, context: &str) -> Result<i64, Error> {
    if !c.is_integer() {
        return Err(Error::BasisInconsistency(format!(
            "non-integral coefficient {c} for {context}"
        )));
    }
    let int = c.to_integer();
    i64::try_from(&int).map_err(|_| {
        Error::BasisInconsistency(format!("coefficient {int} for {context} overflows i64"))
    })
}

/// Projects `f` (full ring) onto the Schur basis. Fails on non-integral
/// coefficients or a nonzero residue, either of which signals a bug upstream.
pub fn schur_expansion_from_p(f: &PPolynomial, max_degree: u32) -> Result<SchurExpansion, Error> {
    assert!(
        f.mode() == IndexMode::All,
        "Schur projection runs in the full ring"
    );
    check_window(f, max_degree)?;
    let mut out = SchurExpansion::zero();
    let top = f.degree().unwrap_or(0);
    for d in 0..=top {
        let component = f.homogeneous_component(d);
        if component.is_zero() {
            continue;
        }
        let mut residue = component;
        for kappa in Partition::all_of_weight(d) {
            let basis = schur_in_p(&kappa);
            let norm = inner(&basis, &basis, InnerProductMode::Untwisted)?;
            let c = inner(&residue, &basis, InnerProductMode::Untwisted)? / norm;
            if c.is_zero() {
                continue;
            }
            let coeff = integral_coefficient(&c, &format!("s[{kappa}]"))?;
            residue = residue.sub(&basis.scale(&c));
            out.add_term(kappa, coeff);
        }
        if !residue.is_zero() {
            return Err(Error::BasisInconsistency(format!(
                "degree-{d} residue {residue} is not spanned by the Schur basis"
            )));
        }
    }
    Ok(out)
}

/// Projects `f` (odd subring) onto the Q basis under the twisted pairing.
pub fn q_expansion_from_p(f: &PPolynomial, max_degree: u32) -> Result<QExpansion, Error> {
    assert!(
        f.mode() == IndexMode::Odd,
        "Q projection runs in the odd subring"
    );
    check_window(f, max_degree)?;
    let mut out = QExpansion::zero();
    let top = f.degree().unwrap_or(0);
    for d in 0..=top {
        let component = f.homogeneous_component(d);
        if component.is_zero() {
            continue;
        }
        let mut residue = component;
        for kappa in StrictPartition::all_of_weight(d) {
            let basis = q_in_p(&kappa, d)?;
            let norm = inner(&basis, &basis, InnerProductMode::Twisted)?;
            assert!(norm.is_positive(), "Q norms are positive");
            let c = inner(&residue, &basis, InnerProductMode::Twisted)? / norm;
            if c.is_zero() {
                continue;
            }
            let coeff = integral_coefficient(&c, &format!("Q[{kappa}]"))?;
            residue = residue.sub(&basis.scale(&c));
            out.add_term(kappa, coeff);
        }
        if !residue.is_zero() {
            return Err(Error::BasisInconsistency(format!(
                "degree-{d} residue {residue} is not spanned by the Q basis"
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::ppoly::{integer, rational};

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn diagonal_pairing_values() {
        let p1 = PPolynomial::p(1, IndexMode::Odd);
        assert_eq!(
            inner(&p1, &p1, InnerProductMode::Twisted).unwrap(),
            rational(1, 2)
        );
        let p1_all = PPolynomial::p(1, IndexMode::All);
        assert_eq!(
            inner(&p1_all, &p1_all, InnerProductMode::Untwisted).unwrap(),
            integer(1)
        );
        let p3 = PPolynomial::p(3, IndexMode::All);
        let p111 = PPolynomial::monomial(part(&[1, 1, 1]), integer(1), IndexMode::All);
        assert!(inner(&p3, &p111, InnerProductMode::Untwisted)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn twisted_pairing_requires_odd_operands() {
        let f = PPolynomial::p(2, IndexMode::All);
        let g = PPolynomial::p(1, IndexMode::Odd);
        assert!(matches!(
            inner(&f, &g, InnerProductMode::Twisted),
            Err(Error::ModeMismatch(_))
        ));
    }

    #[test]
    fn schur_projection_round_trips() {
        for w in 0..=6 {
            for lam in Partition::all_of_weight(w) {
                let f = schur_in_p(&lam);
                assert_eq!(
                    schur_expansion_from_p(&f, w).unwrap(),
                    SchurExpansion::single(lam.clone(), 1),
                    "lambda={lam}"
                );
            }
        }
    }

    #[test]
    fn p1_squared_projects_to_two_terms() {
        let f = PPolynomial::p(1, IndexMode::All).mul_p(1);
        let mut expected = SchurExpansion::zero();
        expected.add_term(part(&[2]), 1);
        expected.add_term(part(&[1, 1]), 1);
        assert_eq!(schur_expansion_from_p(&f, 2).unwrap(), expected);
    }

    #[test]
    fn q_projection_round_trips() {
        for w in 0..=8 {
            for lam in StrictPartition::all_of_weight(w) {
                let f = q_in_p(&lam, w).unwrap();
                assert_eq!(
                    q_expansion_from_p(&f, w).unwrap(),
                    QExpansion::single(lam.clone(), 1),
                    "lambda={lam}"
                );
            }
        }
    }

    #[test]
    fn non_integral_projection_is_rejected() {
        // p_1 = Q_1 / 2 is not an integer combination.
        let f = PPolynomial::p(1, IndexMode::Odd);
        assert!(matches!(
            q_expansion_from_p(&f, 1),
            Err(Error::BasisInconsistency(_))
        ));
    }

    #[test]
    fn schur_family_is_orthonormal() {
        for w in 0..=6u32 {
            let family = Partition::all_of_weight(w);
            for a in &family {
                for b in &family {
                    let pairing =
                        inner(&schur_in_p(a), &schur_in_p(b), InnerProductMode::Untwisted).unwrap();
                    let expected = if a == b { integer(1) } else { integer(0) };
                    assert_eq!(pairing, expected, "<s[{a}], s[{b}]>");
                }
            }
        }
    }

    #[test]
    fn q_family_is_orthogonal() {
        for w in 0..=8u32 {
            let family = StrictPartition::all_of_weight(w);
            for a in &family {
                for b in &family {
                    let fa = q_in_p(a, w).unwrap();
                    let fb = q_in_p(b, w).unwrap();
                    let pairing = inner(&fa, &fb, InnerProductMode::Twisted).unwrap();
                    if a == b {
                        assert!(!pairing.is_zero());
                    } else {
                        assert!(pairing.is_zero(), "<Q[{a}], Q[{b}]> = {pairing}");
                    }
                }
            }
        }
    }
}

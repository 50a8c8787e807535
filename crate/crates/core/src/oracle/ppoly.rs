//! Exact polynomials in the power sums `p_1, p_2, ...` with rational
//! coefficients of unbounded size. This is the oracle's working
//! representation: every identity check reduces to equality of such
//! polynomials, so any rounding would invalidate the tests.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partition::Partition;

/// Which power-sum variables are allowed: the full ring or the subring
/// generated by odd-indexed power sums.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndexMode {
    All,
    Odd,
}

impl IndexMode {
    pub fn permits(self, index: u32) -> bool {
        match self {
            IndexMode::All => index >= 1,
            IndexMode::Odd => index % 2 == 1,
        }
    }
}

pub fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A polynomial in the power sums. Each monomial `p_{m_1} p_{m_2} ...` is
/// keyed by the partition of its indices; the degree of a monomial is the
/// weight of its key. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct PPolynomial {
    mode: IndexMode,
    terms: BTreeMap<Partition, BigRational>,
}

impl PPolynomial {
    pub fn zero(mode: IndexMode) -> Self {
        PPolynomial {
            mode,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(mode: IndexMode) -> Self {
        PPolynomial::monomial(Partition::empty(), BigRational::one(), mode)
    }

    /// The single power sum `p_k`.
    pub fn p(k: u32, mode: IndexMode) -> Self {
        assert!(mode.permits(k), "index {k} not permitted in {mode:?} mode");
        PPolynomial::monomial(
            Partition::from_decreasing(vec![k]),
            BigRational::one(),
            mode,
        )
    }

    pub fn monomial(indices: Partition, coeff: BigRational, mode: IndexMode) -> Self {
        assert!(
            indices.parts().iter().all(|&k| mode.permits(k)),
            "indices {indices} not permitted in {mode:?} mode"
        );
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(indices, coeff);
        }
        PPolynomial { mode, terms }
    }

    pub fn mode(&self) -> IndexMode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, indices: &Partition) -> BigRational {
        self.terms
            .get(indices)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The maximal total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.weight()).max()
    }

    pub fn add_term(&mut self, indices: Partition, coeff: BigRational) {
        debug_assert!(indices.parts().iter().all(|&k| self.mode.permits(k)));
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(indices) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_same_mode(&self, rhs: &PPolynomial) {
        assert!(
            self.mode == rhs.mode,
            "mixed index modes: {:?} vs {:?}",
            self.mode,
            rhs.mode
        );
    }

    pub fn add(&self, rhs: &PPolynomial) -> PPolynomial {
        self.assert_same_mode(rhs);
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &PPolynomial) -> PPolynomial {
        self.add(&rhs.scale(&integer(-1)))
    }

    pub fn scale(&self, factor: &BigRational) -> PPolynomial {
        if factor.is_zero() {
            return PPolynomial::zero(self.mode);
        }
        PPolynomial {
            mode: self.mode,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &PPolynomial) -> PPolynomial {
        self.assert_same_mode(rhs);
        let mut out = PPolynomial::zero(self.mode);
        for (ka, ca) in self.terms() {
            for (kb, cb) in rhs.terms() {
                let mut merged: Vec<u32> = ka
                    .parts()
                    .iter()
                    .chain(kb.parts().iter())
                    .copied()
                    .collect();
                merged.sort_unstable_by(|a, b| b.cmp(a));
                out.add_term(Partition::from_decreasing(merged), ca * cb);
            }
        }
        out
    }

    /// Multiplication by the variable `p_k`.
    pub fn mul_p(&self, k: u32) -> PPolynomial {
        assert!(self.mode.permits(k));
        let mut out = PPolynomial::zero(self.mode);
        for (key, c) in self.terms() {
            let mut merged: Vec<u32> = key.parts().to_vec();
            let pos = merged.iter().take_while(|&&m| m > k).count();
            merged.insert(pos, k);
            out.add_term(Partition::from_decreasing(merged), c.clone());
        }
        out
    }

    /// The formal partial derivative with respect to `p_k`: the power sums
    /// are algebraically independent variables.
    pub fn d_p(&self, k: u32) -> PPolynomial {
        let mut out = PPolynomial::zero(self.mode);
        for (key, c) in self.terms() {
            let multiplicity = key.parts().iter().filter(|&&m| m == k).count();
            if multiplicity == 0 {
                continue;
            }
            let mut reduced: Vec<u32> = key.parts().to_vec();
            let pos = reduced.iter().position(|&m| m == k).unwrap();
            reduced.remove(pos);
            out.add_term(
                Partition::from_decreasing(reduced),
                c * integer(multiplicity as i64),
            );
        }
        out
    }

    /// The part of the polynomial of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> PPolynomial {
        PPolynomial {
            mode: self.mode,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.weight() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops all monomials of total degree above `max_degree`.
    pub fn truncate_above(&self, max_degree: u32) -> PPolynomial {
        PPolynomial {
            mode: self.mode,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.weight() <= max_degree)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Reinterprets an odd-mode polynomial in the full ring.
    pub fn into_all_mode(mut self) -> PPolynomial {
        self.mode = IndexMode::All;
        self
    }

    /// `exp(self)` truncated above `max_degree`. Requires a vanishing
    /// constant term so each power raises the minimal degree.
    pub fn exp_truncated(&self, max_degree: u32) -> PPolynomial {
        assert!(
            self.coefficient(&Partition::empty()).is_zero(),
            "exponential needs a vanishing constant term"
        );
        let base = self.truncate_above(max_degree);
        let mut out = PPolynomial::one(self.mode);
        let mut power = PPolynomial::one(self.mode);
        let mut factorial = BigRational::one();
        for j in 1..=max_degree as i64 {
            power = power.mul(&base).truncate_above(max_degree);
            if power.is_zero() {
                break;
            }
            factorial *= integer(j);
            out = out.add(&power.scale(&factorial.recip()));
        }
        out
    }
}

impl fmt::Display for PPolynomial {
    /// Text form `c * p[i1,i2,...]` joined by signs, highest monomial first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (key, coeff)) in self.terms.iter().rev().enumerate() {
            let magnitude = coeff.abs();
            if n == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if key.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "p[{key}]")?;
            } else {
                write!(f, "{magnitude} * p[{key}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let p1 = PPolynomial::p(1, IndexMode::All);
        let p2 = PPolynomial::p(2, IndexMode::All);
        let square = p1.mul(&p1);
        assert_eq!(square.coefficient(&part(&[1, 1])), integer(1));
        let s = square.add(&p2.scale(&rational(1, 2)));
        assert_eq!(s.coefficient(&part(&[2])), rational(1, 2));
        assert_eq!(s.degree(), Some(2));
        assert!(s.sub(&s).is_zero());
    }

    #[test]
    fn derivative_counts_multiplicity() {
        let p1 = PPolynomial::p(1, IndexMode::All);
        let cube = p1.mul(&p1).mul(&p1);
        let d = cube.d_p(1);
        assert_eq!(d.coefficient(&part(&[1, 1])), integer(3));
        assert!(cube.d_p(2).is_zero());
    }

    #[test]
    fn derivative_is_linear_over_products() {
        // d/dp_1 (p_1 p_2) = p_2.
        let f = PPolynomial::p(1, IndexMode::All).mul_p(2);
        assert_eq!(f.d_p(1), PPolynomial::p(2, IndexMode::All));
    }

    #[test]
    fn odd_mode_rejects_even_indices() {
        let f = PPolynomial::p(3, IndexMode::Odd);
        assert_eq!(f.degree(), Some(3));
        let result = std::panic::catch_unwind(|| PPolynomial::p(2, IndexMode::Odd));
        assert!(result.is_err());
    }

    #[test]
    fn exp_of_p1_matches_series() {
        // exp(p_1) truncated: coefficient of p_1^k is 1/k!.
        let e = PPolynomial::p(1, IndexMode::All).exp_truncated(4);
        assert_eq!(e.coefficient(&Partition::empty()), integer(1));
        assert_eq!(e.coefficient(&part(&[1, 1, 1])), rational(1, 6));
        assert_eq!(e.coefficient(&part(&[1, 1, 1, 1])), rational(1, 24));
        assert!(e.degree() == Some(4));
    }

    #[test]
    fn display_form() {
        let f = PPolynomial::p(2, IndexMode::All)
            .scale(&rational(1, 2))
            .add(
                &PPolynomial::p(1, IndexMode::All)
                    .mul_p(1)
                    .scale(&rational(-1, 2)),
            );
        assert_eq!(f.to_string(), "1/2 * p[2] - 1/2 * p[1,1]");
        assert_eq!(PPolynomial::zero(IndexMode::All).to_string(), "0");
        assert_eq!(PPolynomial::one(IndexMode::All).to_string(), "1");
    }
}

//! Exact integer linear combinations over the Schur and Q bases, and the
//! windowed graded actions produced by the vertex operators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg};

use crate::partition::{Partition, StrictPartition};

/// A sign, +1 or -1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The sign (-1)^parity.
    pub fn from_parity(parity: usize) -> Sign {
        if parity.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A signed Schur-basis element; `None` at the call sites stands for zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedPartition {
    pub sign: Sign,
    pub partition: Partition,
}

/// A signed Q-basis element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedStrict {
    pub sign: Sign,
    pub partition: StrictPartition,
}

/// A basis label for display and serialization.
pub trait BasisElement: Ord + Clone {
    const SYMBOL: &'static str;
    fn index_parts(&self) -> &[u32];
    fn degree(&self) -> u32;
}

impl BasisElement for Partition {
    const SYMBOL: &'static str = "s";
    fn index_parts(&self) -> &[u32] {
        self.parts()
    }
    fn degree(&self) -> u32 {
        self.weight()
    }
}

impl BasisElement for StrictPartition {
    const SYMBOL: &'static str = "Q";
    fn index_parts(&self) -> &[u32] {
        self.parts()
    }
    fn degree(&self) -> u32 {
        self.weight()
    }
}

/// An exact integer linear combination of basis elements. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Expansion<B: BasisElement> {
    terms: BTreeMap<B, i64>,
}

pub type SchurExpansion = Expansion<Partition>;
pub type QExpansion = Expansion<StrictPartition>;

impl<B: BasisElement> Expansion<B> {
    pub fn zero() -> Self {
        Expansion {
            terms: BTreeMap::new(),
        }
    }

    pub fn single(basis: B, coeff: i64) -> Self {
        let mut e = Expansion::zero();
        e.add_term(basis, coeff);
        e
    }

    pub fn add_term(&mut self, basis: B, coeff: i64) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(basis) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, basis: &B) -> i64 {
        self.terms.get(basis).copied().unwrap_or(0)
    }

    /// Terms in increasing lexicographic order of the index.
    pub fn terms(&self) -> impl Iterator<Item = (&B, i64)> {
        self.terms.iter().map(|(b, &c)| (b, c))
    }

    /// Terms in decreasing lexicographic order of the index, the display order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&B, i64)> {
        self.terms.iter().rev().map(|(b, &c)| (b, c))
    }

    /// The set of indices with nonzero coefficient, in display order.
    pub fn support_desc(&self) -> Vec<B> {
        self.terms.keys().rev().cloned().collect()
    }

    pub fn scale(&self, factor: i64) -> Self {
        if factor == 0 {
            return Expansion::zero();
        }
        Expansion {
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (b.clone(), c * factor))
                .collect(),
        }
    }
}

impl<B: BasisElement> Add for Expansion<B> {
    type Output = Expansion<B>;

    fn add(self, rhs: Expansion<B>) -> Expansion<B> {
        let mut out = self;
        for (b, c) in rhs.terms {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: BasisElement> Neg for Expansion<B> {
    type Output = Expansion<B>;

    fn neg(self) -> Expansion<B> {
        self.scale(-1)
    }
}

impl<B: BasisElement> fmt::Display for Expansion<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (basis, coeff)) in self.terms_desc().enumerate() {
            let magnitude = coeff.unsigned_abs();
            if k == 0 {
                if coeff < 0 {
                    write!(f, "-")?;
                }
            } else if coeff < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if magnitude != 1 {
                write!(f, "{magnitude}*")?;
            }
            let joined = basis
                .index_parts()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",");
            write!(f, "{}[{}]", B::SYMBOL, joined)?;
        }
        Ok(())
    }
}

impl<B: BasisElement> fmt::Debug for Expansion<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The windowed graded action of the untwisted operator series on a single
/// Schur function: at most one signed partition per degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedAction {
    terms: BTreeMap<i64, SignedPartition>,
}

impl GradedAction {
    pub fn new() -> Self {
        GradedAction::default()
    }

    /// Inserts a term at a degree not already present.
    pub fn insert(&mut self, degree: i64, term: SignedPartition) {
        let previous = self.terms.insert(degree, term);
        debug_assert!(previous.is_none(), "one term per degree");
    }

    pub fn degree(&self, n: i64) -> Option<&SignedPartition> {
        self.terms.get(&n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &SignedPartition)> {
        self.terms.iter().map(|(&n, t)| (n, t))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The graded action of the twisted operator series on a single Q-function:
/// positive degrees only, at most one signed strict partition per degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QGradedAction {
    terms: BTreeMap<u32, SignedStrict>,
}

impl QGradedAction {
    pub fn new() -> Self {
        QGradedAction::default()
    }

    /// Inserts a term at a positive degree not already present.
    pub fn insert(&mut self, degree: u32, term: SignedStrict) {
        debug_assert!(degree >= 1);
        let previous = self.terms.insert(degree, term);
        debug_assert!(previous.is_none(), "one term per degree");
    }

    pub fn degree(&self, n: u32) -> Option<&SignedStrict> {
        self.terms.get(&n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &SignedStrict)> {
        self.terms.iter().map(|(&n, t)| (n, t))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A signed Schur term on the lattice-extended space: a Schur index together
/// with the exponent of the group-algebra generator it is tensored with.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChargedTerm {
    pub coefficient: i64,
    pub partition: Partition,
    pub charge: i64,
}

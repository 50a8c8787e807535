//! Partitions and strict partitions, together with the boundary-path
//! statistics that drive the operator combinatorics: the i-th part, the
//! number of parts of a given minimum size, part insertion for strict
//! partitions, and the horizontal/vertical strip predicates.

use std::fmt;
use std::str::FromStr;

use crate::code::{Code, ShiftedCode};
use crate::error::Error;

/// A partition: a weakly decreasing sequence of positive integers.
///
/// The empty sequence is the empty partition. Trailing zeros are stripped
/// on construction, so two equal partitions always compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from a weakly decreasing sequence. Trailing zeros
    /// are dropped; a zero before a positive part is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, Error> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Internal constructor for sequences already known to be valid.
    pub(crate) fn from_decreasing(mut parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (1-based), zero beyond the last part.
    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1, "part index is 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The number of parts of size at least `i`. Counted on the boundary
    /// path this is the number of up steps right of the i-th right step.
    pub fn parts_ge(&self, i: u32) -> usize {
        assert!(i >= 1, "part bound is 1-based");
        self.parts.iter().take_while(|&&p| p >= i).count()
    }

    /// True if the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len()
            && other
                .parts
                .iter()
                .zip(&self.parts)
                .all(|(&inner, &outer)| inner <= outer)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols).map(|i| self.parts_ge(i) as u32).collect();
        Partition::from_decreasing(parts)
    }

    /// The boundary path of the diagram as a canonical code window.
    pub fn code(&self) -> Code {
        Code::from_partition(self)
    }

    /// The partition whose boundary path has its i-th right step (1-based,
    /// from the left) turned into an up step.
    ///
    /// Closed form: with j the number of parts of size at least i, decrement
    /// the first j parts and insert a new part i-1 after them. The zero part
    /// arising for i = 1 is dropped.
    pub fn turn_nth_r(&self, i: usize) -> Partition {
        assert!(i >= 1, "right-step index is 1-based");
        let i = u32::try_from(i).expect("step index fits in a part");
        let j = self.parts_ge(i);
        let mut parts = Vec::with_capacity(self.len() + 1);
        for (k, &p) in self.parts.iter().enumerate() {
            if k < j {
                parts.push(p - 1);
            } else {
                break;
            }
        }
        parts.push(i - 1);
        parts.extend_from_slice(&self.parts[j..]);
        Partition::from_decreasing(parts)
    }

    /// All partitions of weight `n`, in lexicographically decreasing order.
    pub fn all_of_weight(n: u32) -> Vec<Partition> {
        fn go(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            let mut p = remaining.min(max_part);
            while p >= 1 {
                prefix.push(p);
                go(remaining - p, p, prefix, out);
                prefix.pop();
                p -= 1;
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let joined = self
            .parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{joined}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated text form, e.g. `4,2,1`. The empty
    /// partition is written `-` or the empty string.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {tok:?}")))
                    .and_then(|p| {
                        if p == 0 {
                            Err(Error::InvalidPartition("parts must be positive".into()))
                        } else {
                            Ok(p)
                        }
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

/// A strict partition: strictly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if !parts.windows(2).all(|w| w[0] > w[1]) || parts.last() == Some(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be strictly decreasing and positive, got {parts:?}"
            )));
        }
        Ok(StrictPartition { parts })
    }

    pub(crate) fn from_strictly_decreasing(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]) && parts.last() != Some(&0));
        StrictPartition { parts }
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        assert!(i >= 1, "part index is 1-based");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains_part(&self, value: u32) -> bool {
        self.parts.contains(&value)
    }

    /// Views the strict partition as an ordinary partition.
    pub fn to_partition(&self) -> Partition {
        Partition::from_decreasing(self.parts.clone())
    }

    /// The i-th smallest positive integer that can be inserted while keeping
    /// the parts strictly decreasing, i.e. the i-th smallest positive integer
    /// not already a part.
    pub fn nth_insertable(&self, i: usize) -> u32 {
        assert!(i >= 1, "insertion index is 1-based");
        let mut remaining = i;
        let mut value = 0u32;
        loop {
            value += 1;
            if !self.contains_part(value) {
                remaining -= 1;
                if remaining == 0 {
                    return value;
                }
            }
        }
    }

    /// Inserts the i-th smallest insertable integer, producing a strict
    /// partition with one more part.
    pub fn insert_nth(&self, i: usize) -> StrictPartition {
        self.insert_value(self.nth_insertable(i))
    }

    /// Inserts a value not already present into sorted position.
    pub(crate) fn insert_value(&self, value: u32) -> StrictPartition {
        debug_assert!(value >= 1 && !self.contains_part(value));
        let pos = self.parts.iter().take_while(|&&p| p > value).count();
        let mut parts = self.parts.clone();
        parts.insert(pos, value);
        StrictPartition { parts }
    }

    /// The number of parts strictly greater than the i-th insertable value.
    /// On the shifted code this is the number of up steps right of the i-th
    /// right step; it controls the sign of the twisted operator action.
    pub fn parts_gt_nth_insertable(&self, i: usize) -> usize {
        let value = self.nth_insertable(i);
        self.parts.iter().take_while(|&&p| p > value).count()
    }

    /// The boundary path of the shifted diagram as a shifted code.
    pub fn shifted_code(&self) -> ShiftedCode {
        ShiftedCode::from_strict(self)
    }

    /// All strict partitions of weight `n`, in lexicographically decreasing order.
    pub fn all_of_weight(n: u32) -> Vec<StrictPartition> {
        fn go(
            remaining: u32,
            max_part: u32,
            prefix: &mut Vec<u32>,
            out: &mut Vec<StrictPartition>,
        ) {
            if remaining == 0 {
                out.push(StrictPartition {
                    parts: prefix.clone(),
                });
                return;
            }
            let mut p = remaining.min(max_part);
            while p >= 1 {
                prefix.push(p);
                go(remaining - p, p.saturating_sub(1), prefix, out);
                prefix.pop();
                p -= 1;
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_partition())
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StrictPartition({})", self)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let p: Partition = s.parse()?;
        StrictPartition::new(p.parts)
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self, Error> {
        StrictPartition::new(p.parts)
    }
}

/// True if `outer/inner` is a horizontal strip with exactly `n` boxes:
/// `inner` fits in `outer`, the weights differ by `n`, and no column of the
/// skew diagram holds more than one box (`outer[i+1] <= inner[i] <= outer[i]`).
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition, n: u32) -> bool {
    if outer.weight() < inner.weight() || outer.weight() - inner.weight() != n {
        return false;
    }
    let rows = outer.len().max(inner.len()) + 1;
    (1..=rows).all(|i| inner.part(i) <= outer.part(i) && outer.part(i + 1) <= inner.part(i))
}

/// True if `outer/inner` is a vertical strip with exactly `n` boxes: no row
/// of the skew diagram holds more than one box (`outer[i] - 1 <= inner[i] <= outer[i]`).
pub fn is_vertical_strip(outer: &Partition, inner: &Partition, n: u32) -> bool {
    if outer.weight() < inner.weight() || outer.weight() - inner.weight() != n {
        return false;
    }
    let rows = outer.len().max(inner.len()) + 1;
    (1..=rows).all(|i| inner.part(i) <= outer.part(i) && outer.part(i) <= inner.part(i) + 1)
}

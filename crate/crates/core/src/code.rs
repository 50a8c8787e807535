//! Codes of partitions: the lattice path tracing the lower-right boundary of
//! a (shifted) Young diagram, recorded as a word over the letters R (unit
//! right step) and U (unit up step).
//!
//! The full code of a partition is doubly infinite, `U^inf window R^inf`; we
//! store only the canonical window, which is empty or begins with R and ends
//! with U. The shifted code of a strict partition has a fixed starting point,
//! so only the trailing `R^inf` is implicit and a leading U is permitted.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::partition::{Partition, StrictPartition};

/// One step of a boundary path.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    R,
    U,
}

impl Step {
    fn from_char(c: char) -> Option<Step> {
        match c {
            'R' => Some(Step::R),
            'U' => Some(Step::U),
            _ => None,
        }
    }

    fn to_char(self) -> char {
        match self {
            Step::R => 'R',
            Step::U => 'U',
        }
    }
}

fn word_to_string(word: &[Step]) -> String {
    word.iter().map(|s| s.to_char()).collect()
}

/// The canonical finite window of the doubly infinite code of a partition:
/// empty, or starting with R and ending with U.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Code {
    window: Vec<Step>,
}

impl Code {
    pub(crate) fn from_partition(lambda: &Partition) -> Code {
        let parts = lambda.parts();
        let mut window = Vec::new();
        // Reading the path upward: R^{diff} U per row, last row first.
        for k in (0..parts.len()).rev() {
            let below = if k + 1 < parts.len() { parts[k + 1] } else { 0 };
            for _ in 0..(parts[k] - below) {
                window.push(Step::R);
            }
            window.push(Step::U);
        }
        Code { window }
    }

    /// The partition traced by this window. The i-th up step from the right
    /// closes row i, so its part is the number of right steps before it.
    pub fn to_partition(&self) -> Partition {
        let mut rights = 0u32;
        let mut parts = Vec::new();
        for &step in &self.window {
            match step {
                Step::R => rights += 1,
                Step::U => parts.push(rights),
            }
        }
        parts.reverse();
        Partition::from_decreasing(parts)
    }

    pub fn steps(&self) -> &[Step] {
        &self.window
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    fn count_r(&self) -> usize {
        self.window.iter().filter(|&&s| s == Step::R).count()
    }

    /// Strips the leading U's and trailing R's that belong to the implicit
    /// infinite tails.
    fn canonicalize(mut word: Vec<Step>) -> Code {
        let start = word.iter().take_while(|&&s| s == Step::U).count();
        word.drain(..start);
        let end = word.iter().rev().take_while(|&&s| s == Step::R).count();
        word.truncate(word.len() - end);
        Code { window: word }
    }

    /// The literal code edit behind `Partition::turn_nth_r`: turn the i-th R
    /// from the left (counting into the implicit `R^inf` tail) into a U and
    /// re-canonicalize.
    pub fn turn_nth_r(&self, i: usize) -> Code {
        assert!(i >= 1, "right-step index is 1-based");
        let mut word = self.window.clone();
        let in_window = self.count_r();
        if i > in_window {
            word.extend(std::iter::repeat_n(Step::R, i - in_window));
        }
        let mut seen = 0;
        for step in word.iter_mut() {
            if *step == Step::R {
                seen += 1;
                if seen == i {
                    *step = Step::U;
                    break;
                }
            }
        }
        Code::canonicalize(word)
    }

    /// Inserts a U after the i-th R that is immediately followed by another R
    /// (counting runs into the implicit `R^inf` tail). For a strict partition
    /// this inserts the i-th smallest insertable part.
    pub fn insert_u_after_nth_rr(&self, i: usize) -> Code {
        assert!(i >= 1, "pair index is 1-based");
        let mut word = self.window.clone();
        // Enough tail R's so that the i-th RR pair exists in the finite word.
        word.extend(std::iter::repeat_n(Step::R, i + 1));
        let mut pairs = 0;
        let mut insert_at = None;
        for k in 0..word.len() - 1 {
            if word[k] == Step::R && word[k + 1] == Step::R {
                pairs += 1;
                if pairs == i {
                    insert_at = Some(k + 1);
                    break;
                }
            }
        }
        word.insert(insert_at.expect("tail guarantees the pair exists"), Step::U);
        Code::canonicalize(word)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", word_to_string(&self.window))
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code({})", self)
    }
}

impl FromStr for Code {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let window = s
            .chars()
            .map(|c| {
                Step::from_char(c).ok_or_else(|| Error::MalformedCode(format!("bad letter {c:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if window.first() == Some(&Step::U) {
            return Err(Error::MalformedCode(
                "window must not start with U (leading U's belong to the infinite prefix)".into(),
            ));
        }
        if window.last() == Some(&Step::R) {
            return Err(Error::MalformedCode(
                "window must not end with R (trailing R's belong to the infinite suffix)".into(),
            ));
        }
        Ok(Code { window })
    }
}

/// The shifted code of a strict partition: the boundary path of the shifted
/// diagram from its fixed starting point on the diagonal. Canonical form is
/// empty or ends with U; a leading U is permitted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedCode {
    word: Vec<Step>,
}

impl ShiftedCode {
    pub(crate) fn from_strict(lambda: &StrictPartition) -> ShiftedCode {
        let parts = lambda.parts();
        let mut word = Vec::new();
        // Row k contributes R^{lambda_k - lambda_{k+1} - 1} U, bottom row first.
        for k in (0..parts.len()).rev() {
            let below = if k + 1 < parts.len() { parts[k + 1] } else { 0 };
            for _ in 0..(parts[k] - below - 1) {
                word.push(Step::R);
            }
            word.push(Step::U);
        }
        ShiftedCode { word }
    }

    /// The strict partition traced by this word: at the j-th up step the part
    /// is the number of steps taken so far (right steps plus up steps,
    /// including this one), because the path starts on the diagonal.
    pub fn to_strict(&self) -> StrictPartition {
        let mut parts = Vec::new();
        for (pos, &step) in self.word.iter().enumerate() {
            if step == Step::U {
                parts.push((pos + 1) as u32);
            }
        }
        parts.reverse();
        StrictPartition::from_strictly_decreasing(parts)
    }

    pub fn steps(&self) -> &[Step] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn count_r(&self) -> usize {
        self.word.iter().filter(|&&s| s == Step::R).count()
    }

    /// Turns the i-th R from the left (counting into the implicit `R^inf`
    /// tail) into a U. This inserts the i-th smallest insertable part into
    /// the underlying strict partition.
    pub fn turn_nth_r(&self, i: usize) -> ShiftedCode {
        assert!(i >= 1, "right-step index is 1-based");
        let mut word = self.word.clone();
        let in_word = self.count_r();
        if i > in_word {
            word.extend(std::iter::repeat_n(Step::R, i - in_word));
        }
        let mut seen = 0;
        for step in word.iter_mut() {
            if *step == Step::R {
                seen += 1;
                if seen == i {
                    *step = Step::U;
                    break;
                }
            }
        }
        // A trailing tail R is never turned last, so the word ends with the
        // new U when we extended; no further canonicalization is needed.
        ShiftedCode { word }
    }

    /// The number of U's to the right of the i-th R; zero when the i-th R
    /// lies in the infinite tail.
    pub fn us_after_nth_r(&self, i: usize) -> usize {
        assert!(i >= 1, "right-step index is 1-based");
        let mut seen = 0;
        for (pos, &step) in self.word.iter().enumerate() {
            if step == Step::R {
                seen += 1;
                if seen == i {
                    return self.word[pos + 1..]
                        .iter()
                        .filter(|&&s| s == Step::U)
                        .count();
                }
            }
        }
        0
    }
}

impl fmt::Display for ShiftedCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", word_to_string(&self.word))
    }
}

impl fmt::Debug for ShiftedCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShiftedCode({})", self)
    }
}

impl FromStr for ShiftedCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let word = s
            .chars()
            .map(|c| {
                Step::from_char(c).ok_or_else(|| Error::MalformedCode(format!("bad letter {c:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if word.last() == Some(&Step::R) {
            return Err(Error::MalformedCode(
                "shifted word must not end with R (trailing R's belong to the infinite suffix)"
                    .into(),
            ));
        }
        Ok(ShiftedCode { word })
    }
}

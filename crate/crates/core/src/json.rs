//! Schema-stable JSON documents for the result payloads. Expansions are term
//! lists `{coeff, partition}` under a basis tag; graded actions are lists of
//! `{degree, coeff, partition}` with coeff restricted to +-1; walks are
//! arrays of code strings.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::expansion::{
    BasisElement, Expansion, GradedAction, QExpansion, QGradedAction, SchurExpansion, Sign,
    SignedPartition, SignedStrict,
};
use crate::lr_pieri::CodeWalk;
use crate::partition::{Partition, StrictPartition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionTermDoc {
    pub coeff: i64,
    pub partition: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionDoc {
    pub basis: String,
    pub terms: Vec<ExpansionTermDoc>,
}

impl ExpansionDoc {
    fn from_terms<B: BasisElement>(expansion: &Expansion<B>) -> Self {
        ExpansionDoc {
            basis: B::SYMBOL.to_string(),
            terms: expansion
                .terms_desc()
                .map(|(basis, coeff)| ExpansionTermDoc {
                    coeff,
                    partition: basis.index_parts().to_vec(),
                })
                .collect(),
        }
    }
}

impl From<&SchurExpansion> for ExpansionDoc {
    fn from(expansion: &SchurExpansion) -> Self {
        ExpansionDoc::from_terms(expansion)
    }
}

impl From<&QExpansion> for ExpansionDoc {
    fn from(expansion: &QExpansion) -> Self {
        ExpansionDoc::from_terms(expansion)
    }
}

impl TryFrom<&ExpansionDoc> for SchurExpansion {
    type Error = Error;

    fn try_from(doc: &ExpansionDoc) -> Result<Self, Error> {
        if doc.basis != "s" {
            return Err(Error::InvalidPartition(format!(
                "expected basis \"s\", got {:?}",
                doc.basis
            )));
        }
        let mut out = SchurExpansion::zero();
        for term in &doc.terms {
            out.add_term(Partition::new(term.partition.clone())?, term.coeff);
        }
        Ok(out)
    }
}

impl TryFrom<&ExpansionDoc> for QExpansion {
    type Error = Error;

    fn try_from(doc: &ExpansionDoc) -> Result<Self, Error> {
        if doc.basis != "Q" {
            return Err(Error::InvalidPartition(format!(
                "expected basis \"Q\", got {:?}",
                doc.basis
            )));
        }
        let mut out = QExpansion::zero();
        for term in &doc.terms {
            out.add_term(StrictPartition::new(term.partition.clone())?, term.coeff);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedTermDoc {
    pub degree: i64,
    pub coeff: i64,
    pub partition: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedActionDoc {
    pub basis: String,
    pub terms: Vec<GradedTermDoc>,
}

impl From<&GradedAction> for GradedActionDoc {
    fn from(action: &GradedAction) -> Self {
        GradedActionDoc {
            basis: "s".to_string(),
            terms: action
                .iter()
                .map(|(degree, term)| GradedTermDoc {
                    degree,
                    coeff: term.sign.to_i64(),
                    partition: term.partition.parts().to_vec(),
                })
                .collect(),
        }
    }
}

impl From<&QGradedAction> for GradedActionDoc {
    fn from(action: &QGradedAction) -> Self {
        GradedActionDoc {
            basis: "Q".to_string(),
            terms: action
                .iter()
                .map(|(degree, term)| GradedTermDoc {
                    degree: degree as i64,
                    coeff: term.sign.to_i64(),
                    partition: term.partition.parts().to_vec(),
                })
                .collect(),
        }
    }
}

fn sign_from_coeff(coeff: i64) -> Result<Sign, Error> {
    match coeff {
        1 => Ok(Sign::Plus),
        -1 => Ok(Sign::Minus),
        other => Err(Error::InvalidPartition(format!(
            "graded coefficients are +-1, got {other}"
        ))),
    }
}

impl TryFrom<&GradedActionDoc> for GradedAction {
    type Error = Error;

    fn try_from(doc: &GradedActionDoc) -> Result<Self, Error> {
        let mut out = GradedAction::new();
        for term in &doc.terms {
            out.insert(
                term.degree,
                SignedPartition {
                    sign: sign_from_coeff(term.coeff)?,
                    partition: Partition::new(term.partition.clone())?,
                },
            );
        }
        Ok(out)
    }
}

impl TryFrom<&GradedActionDoc> for QGradedAction {
    type Error = Error;

    fn try_from(doc: &GradedActionDoc) -> Result<Self, Error> {
        let mut out = QGradedAction::new();
        for term in &doc.terms {
            let degree = u32::try_from(term.degree).map_err(|_| {
                Error::InvalidPartition(format!(
                    "twisted degrees are positive, got {}",
                    term.degree
                ))
            })?;
            out.insert(
                degree,
                SignedStrict {
                    sign: sign_from_coeff(term.coeff)?,
                    partition: StrictPartition::new(term.partition.clone())?,
                },
            );
        }
        Ok(out)
    }
}

/// A walk as the list of its code windows.
pub fn walk_to_codes(walk: &CodeWalk) -> Vec<String> {
    walk.steps().iter().map(|c| c.to_string()).collect()
}

//! Issues, neighborhood systems and the elimination operator `T - N(x)`.
//!
//! Resolving the issue of a point `x` removes from a question every open set
//! that is a neighborhood of `x`. What is left classifies the question:
//!
//! * a topology on the non-empty carrier `A = ⋃{U ∈ T : x ∉ U}`, which is a
//!   sub-question ([`QuestionType::TypeI`]);
//! * `{φ}` when every non-empty open contains `x`: the question has a definite
//!   answer ([`QuestionType::TypeII`]);
//! * the empty collection when `x` is not an assertion of the ground set at
//!   all: the question is irrelevant ([`QuestionType::TypeIII`]).

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::sets::{Subset, SubsetFamily, Topology};
use crate::Error;

/// The three kinds of question.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuestionType {
    /// Resolution leaves a sub-question.
    TypeI,
    /// Resolution leaves `{φ}`: a definite answer.
    TypeII,
    /// Resolution leaves nothing: an irrelevant question.
    TypeIII,
}

/// Outcome of resolving the issue of one point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Resolution {
    /// `T - N(x)` is a topology on `carrier`. Subsets use the bits of the
    /// original ground set.
    SubQuestion {
        /// Union of the opens avoiding the point.
        carrier: Subset,
        /// `T - N(x)`.
        opens: SubsetFamily,
    },
    /// `T - N(x) = {φ}`.
    Definite,
    /// `T - N(x)` is empty.
    Irrelevant,
}

impl Resolution {
    /// The question type.
    pub fn kind(&self) -> QuestionType {
        match self {
            Resolution::SubQuestion { .. } => QuestionType::TypeI,
            Resolution::Definite => QuestionType::TypeII,
            Resolution::Irrelevant => QuestionType::TypeIII,
        }
    }

    /// The literal value of `T - N(x)`.
    pub fn result_family(&self) -> SubsetFamily {
        match self {
            Resolution::SubQuestion { opens, .. } => opens.clone(),
            Resolution::Definite => core::iter::once(Subset::EMPTY).collect(),
            Resolution::Irrelevant => SubsetFamily::new(),
        }
    }

    /// The carrier `A`, present only for a sub-question.
    pub fn carrier(&self) -> Option<Subset> {
        match self {
            Resolution::SubQuestion { carrier, .. } => Some(*carrier),
            _ => None,
        }
    }
}

/// One step of an elimination chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionStep {
    /// The point whose issue was resolved.
    pub point: String,
    /// The question the step was applied to.
    pub question: Topology,
    /// What the resolution produced, over `question`'s ground set.
    pub outcome: Resolution,
}

impl Topology {
    fn point_index(&self, label: &str) -> Result<usize, Error> {
        self.ground()
            .index_of(label)
            .ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    /// The open neighborhoods of `x`: `{U ∈ T : x ∈ U}`.
    pub fn open_sets_containing(&self, x: &str) -> Result<SubsetFamily, Error> {
        let i = self.point_index(x)?;
        Ok(self.family().filter(|u| u.contains(i)))
    }

    /// Smallest open set containing element `index`; it exists because a
    /// finite intersection of opens is open.
    pub fn minimal_open(&self, index: usize) -> Subset {
        self.family()
            .iter()
            .filter(|u| u.contains(index))
            .fold(self.ground().full(), Subset::intersection)
    }

    /// The neighborhood system `N(x)`: every `N ⊆ X` with `x ∈ u ⊆ N` for some
    /// open `u`. Neighborhoods need not be open.
    pub fn neighborhood_system(&self, x: &str) -> Result<SubsetFamily, Error> {
        let i = self.point_index(x)?;
        let core = self.minimal_open(i);
        let free = self.ground().complement(core).bits();
        // Walk every subset of `free` and add it to the minimal open set.
        let mut extra = 0u32;
        let mut members = Vec::with_capacity(1 << free.count_ones());
        loop {
            members.push(core.union(Subset::from_bits(extra)));
            if extra == free {
                break;
            }
            extra = (extra.wrapping_sub(free)) & free;
        }
        Ok(members.into_iter().collect())
    }

    /// `T - N(x)`. Empty when `x` is not an element of the ground set.
    pub fn resolve_issue(&self, x: &str) -> SubsetFamily {
        match self.ground().index_of(x) {
            Some(i) => self.family().filter(|u| !u.contains(i)),
            None => SubsetFamily::new(),
        }
    }

    /// Classifies the question with respect to the issue of `x`.
    pub fn classify_question(&self, x: &str) -> Resolution {
        let Some(i) = self.ground().index_of(x) else {
            return Resolution::Irrelevant;
        };
        let opens = self.family().filter(|u| !u.contains(i));
        let carrier = opens.union_all();
        if carrier.is_empty() {
            Resolution::Definite
        } else {
            Resolution::SubQuestion { carrier, opens }
        }
    }

    /// The subspace topology `{A ∩ U : U ∈ T}` on the elements of `a`.
    ///
    /// The result lives on `ground().restrict(a)`, whose labels keep their
    /// relative order.
    pub fn subspace_topology(&self, a: Subset) -> Topology {
        let a = a.intersection(self.ground().full());
        let ground = Arc::new(self.ground().restrict(a));
        let family = self.family().map(|u| u.intersection(a).pack(a));
        Topology::from_parts(family, ground)
    }

    /// Resolves the points of `order` one after another, descending into the
    /// sub-question after every Type I step.
    ///
    /// Stops after the first Type II or Type III step. A point that an earlier
    /// step already eliminated is no longer in the space and classifies as
    /// Type III.
    pub fn resolve_sequence<S: AsRef<str>>(&self, order: &[S]) -> Vec<ResolutionStep> {
        let mut steps = Vec::new();
        let mut question = self.clone();
        for point in order {
            let point = point.as_ref();
            let outcome = question.classify_question(point);
            let next = outcome.carrier().map(|a| question.subspace_topology(a));
            steps.push(ResolutionStep {
                point: point.to_string(),
                question,
                outcome,
            });
            match next {
                Some(sub) => question = sub,
                None => break,
            }
        }
        steps
    }
}

//! Negation questions, clopen sets and machine/anti-machine pairs.

use alloc::vec::Vec;

use crate::sets::{GroundSet, Subset, SubsetFamily, Topology};

impl Topology {
    /// The negation question `{X - U : U ∈ T}`.
    ///
    /// The family of closed sets of a finite topology is again a topology, so
    /// this never fails.
    pub fn negation_question(&self) -> Topology {
        let ground = self.ground_arc().clone();
        let family = self.family().map(|u| ground.complement(u));
        Topology::from_parts(family, ground)
    }

    /// Members that are both open and closed.
    pub fn clopen_sets(&self) -> SubsetFamily {
        self.family().filter(|u| self.is_closed(u))
    }

    /// True when the question and its negation coincide, i.e. every open set
    /// is clopen.
    pub fn machines_agree(&self) -> bool {
        self.family().iter().all(|u| self.is_closed(u))
    }
}

/// σ-field test on a finite ground set: contains `φ`, closed under complement
/// and under (pairwise, hence countable) union.
pub fn is_sigma_field(family: &SubsetFamily, ground: &GroundSet) -> bool {
    if !family.iter().all(|s| ground.admits(s)) || !family.contains(Subset::EMPTY) {
        return false;
    }
    if !family.iter().all(|s| family.contains(ground.complement(s))) {
        return false;
    }
    let members = family.members();
    members.iter().enumerate().all(|(i, &a)| {
        members[i + 1..]
            .iter()
            .all(|&b| family.contains(a.union(b)))
    })
}

/// A machine asking `question` and the anti-machine asking its negation,
/// talking through their shared clopen sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MachinePair {
    question: Topology,
    negation: Topology,
    shared: SubsetFamily,
    self_dual: bool,
}

impl MachinePair {
    /// Pairs `question` with its negation.
    pub fn new(question: Topology) -> Self {
        let negation = question.negation_question();
        let shared = question.family().intersection(negation.family());
        let self_dual = question.family() == negation.family();
        MachinePair {
            question,
            negation,
            shared,
            self_dual,
        }
    }

    /// The machine's question.
    pub fn question(&self) -> &Topology {
        &self.question
    }

    /// The anti-machine's question.
    pub fn negation(&self) -> &Topology {
        &self.negation
    }

    /// The clopen channel, `question ∩ negation`.
    pub fn shared(&self) -> &SubsetFamily {
        &self.shared
    }

    /// True when machine and anti-machine ask the same question.
    pub fn is_self_dual(&self) -> bool {
        self.self_dual
    }
}

/// An atomic machine and the question of its anti-atomic machine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomicMachine {
    /// Question asked by the atomic machine.
    pub question: Topology,
    /// Question asked by its anti-atomic machine.
    pub negation: Topology,
    /// The machine is its own anti-machine.
    pub self_dual: bool,
}

/// Pairs every question with its negation.
pub fn atomic_machine_census(questions: &[Topology]) -> Vec<AtomicMachine> {
    questions
        .iter()
        .map(|t| {
            let negation = t.negation_question();
            let self_dual = negation == *t;
            AtomicMachine {
                question: t.clone(),
                negation,
                self_dual,
            }
        })
        .collect()
}

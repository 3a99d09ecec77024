//! Machine-readable views of library results.
//!
//! Every view serializes to a single line of JSON with a fixed key order.

use qtopo_core::{
    AxiomViolation, EnumerationReport, GroundSet, QuestionType, Resolution, ResolutionStep, Subset,
};
use serde::Serialize;

use crate::document::subset_labels;

/// Compact JSON for any view.
pub fn serialize_result<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("views serialize infallibly")
}

/// Wire name of a question type.
pub fn kind_name(kind: QuestionType) -> &'static str {
    match kind {
        QuestionType::TypeI => "type-1",
        QuestionType::TypeII => "type-2",
        QuestionType::TypeIII => "type-3",
    }
}

fn family_labels(ground: &GroundSet, opens: impl IntoIterator<Item = Subset>) -> Vec<Vec<String>> {
    opens
        .into_iter()
        .map(|s| subset_labels(ground, s))
        .collect()
}

/// A classification outcome.
#[derive(Debug, Serialize)]
pub struct ResolutionView {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub carrier: Option<Vec<String>>,
    pub opens: Vec<Vec<String>>,
}

impl ResolutionView {
    pub fn new(ground: &GroundSet, outcome: &Resolution) -> Self {
        ResolutionView {
            kind: kind_name(outcome.kind()),
            carrier: outcome.carrier().map(|a| subset_labels(ground, a)),
            opens: family_labels(ground, &outcome.result_family()),
        }
    }
}

/// One link of an elimination chain.
#[derive(Debug, Serialize)]
pub struct StepView {
    pub point: String,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub carrier: Option<Vec<String>>,
    pub opens: Vec<Vec<String>>,
}

/// An elimination chain.
#[derive(Debug, Serialize)]
pub struct SequenceView {
    pub steps: Vec<StepView>,
}

impl SequenceView {
    pub fn new(steps: &[ResolutionStep]) -> Self {
        SequenceView {
            steps: steps
                .iter()
                .map(|step| {
                    let r = ResolutionView::new(step.question.ground(), &step.outcome);
                    StepView {
                        point: step.point.clone(),
                        kind: r.kind,
                        carrier: r.carrier,
                        opens: r.opens,
                    }
                })
                .collect(),
        }
    }
}

/// Result of the axiom check.
#[derive(Debug, Serialize)]
pub struct ValidationView {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axiom: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    /// Operands of the failed union or intersection.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<String>>>,
    /// The set that should have been present.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missing: Option<Vec<String>>,
}

impl ValidationView {
    pub fn new(ground: &GroundSet, check: Result<(), AxiomViolation>) -> Self {
        let Err(violation) = check else {
            return ValidationView {
                valid: true,
                axiom: None,
                message: None,
                witness: None,
                missing: None,
            };
        };
        let labels = |s| subset_labels(ground, s);
        let (message, witness, missing) = match violation {
            AxiomViolation::OutOfRange { member } => (
                format!("member {member} lies outside the ground set"),
                None,
                None,
            ),
            AxiomViolation::MissingEmpty => (
                "the empty set is not open".to_owned(),
                None,
                Some(Vec::new()),
            ),
            AxiomViolation::MissingWhole => (
                "the whole set is not open".to_owned(),
                None,
                Some(labels(ground.full())),
            ),
            AxiomViolation::UnionMissing { left, right, union } => (
                "union of two open sets is not open".to_owned(),
                Some(vec![labels(left), labels(right)]),
                Some(labels(union)),
            ),
            AxiomViolation::IntersectionMissing {
                left,
                right,
                intersection,
            } => (
                "intersection of two open sets is not open".to_owned(),
                Some(vec![labels(left), labels(right)]),
                Some(labels(intersection)),
            ),
        };
        ValidationView {
            valid: false,
            axiom: Some(violation.axiom().name()),
            message: Some(message),
            witness,
            missing,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AgreementView {
    pub agree: bool,
    pub sigma_field: bool,
}

#[derive(Debug, Serialize)]
pub struct SigmaView {
    pub sigma_field: bool,
}

#[derive(Debug, Serialize)]
pub struct CountView {
    pub n: usize,
    pub count: u64,
}

#[derive(Debug, Serialize)]
pub struct EfficiencyView {
    pub point: String,
    pub kind: &'static str,
    pub eliminated: usize,
}

#[derive(Debug, Serialize)]
pub struct PointCensusView {
    pub point: String,
    pub type_1: u64,
    pub type_2: u64,
}

/// Summary of a question space.
#[derive(Debug, Serialize)]
pub struct ReportView {
    pub n: usize,
    pub count: u64,
    pub self_dual_count: u64,
    pub census: Vec<PointCensusView>,
}

impl From<&EnumerationReport> for ReportView {
    fn from(r: &EnumerationReport) -> Self {
        ReportView {
            n: r.n,
            count: r.count,
            self_dual_count: r.self_dual_count,
            census: r
                .census
                .iter()
                .map(|c| PointCensusView {
                    point: c.point.clone(),
                    type_1: c.type_i,
                    type_2: c.type_ii,
                })
                .collect(),
        }
    }
}

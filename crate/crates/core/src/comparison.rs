//! Cross-model evaluation of cohorts: per-group reports, pairwise agreement
//! between models, and ranking.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{AssessError, InvariantViolation};
use crate::exec::Execution;
use crate::gpa::{gpa_classify, gpa_from_counts, GpaScore};
use crate::ordering::{compare_scalar, performance_ordering};
use crate::rfam::{rfam_classify, rfam_cog, rfam_compare};
use crate::types::{
    rat, Branch, CogPoint, ComparisonVerdict, FrequencyVector, GradeCounts, ModelKind, Outcome,
    PerformanceClass,
};
use crate::variations::{variation_classify, variation_cog, variation_compare, VariationPoint};

/// One cohort evaluated under every model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssessmentReport {
    pub group_id: String,
    pub counts: GradeCounts,
    pub frequencies: FrequencyVector,
    pub gpa: GpaScore,
    pub rfam_point: CogPoint,
    /// GRFAM, TFAM and TpFAM points.
    pub variation_points: BTreeMap<ModelKind, CogPoint>,
    pub classifications: BTreeMap<ModelKind, PerformanceClass>,
}

impl AssessmentReport {
    /// COG point of a fuzzy model; `None` for GPA.
    pub fn point(&self, kind: ModelKind) -> Option<&CogPoint> {
        match kind {
            ModelKind::Gpa => None,
            ModelKind::Rfam => Some(&self.rfam_point),
            _ => self.variation_points.get(&kind),
        }
    }

    pub fn classification(&self, kind: ModelKind) -> PerformanceClass {
        self.classifications[&kind]
    }

    /// `x_c = GPA + 1/2` for RFAM and `X_c = 0.7·GPA + 1/2` for every
    /// variation.
    pub fn check_linkage(&self) -> Result<(), InvariantViolation> {
        let gpa = self.gpa.value();
        let rfam_x = gpa + rat(1, 2);
        if self.rfam_point.x != rfam_x {
            return Err(InvariantViolation {
                check: "rfam-gpa-linkage",
                detail: format!(
                    "group {}: RFAM x = {} but GPA + 1/2 = {}",
                    self.group_id, self.rfam_point.x, rfam_x
                ),
            });
        }
        let variation_x = rat(7, 10) * gpa + rat(1, 2);
        for kind in ModelKind::VARIATIONS {
            let got = &self.variation_points[&kind].x;
            if *got != variation_x {
                return Err(InvariantViolation {
                    check: "variation-gpa-linkage",
                    detail: format!(
                        "group {}: {kind} X = {got} but 0.7·GPA + 1/2 = {variation_x}",
                        self.group_id
                    ),
                });
            }
        }
        Ok(())
    }
}

pub fn assess(group_id: impl Into<String>, counts: &GradeCounts) -> AssessmentReport {
    let frequencies = FrequencyVector::from_counts(counts);
    let gpa = gpa_from_counts(counts);
    let rfam_point = rfam_cog(&frequencies);

    let mut classifications = BTreeMap::new();
    classifications.insert(ModelKind::Gpa, gpa_classify(&gpa));
    classifications.insert(ModelKind::Rfam, rfam_classify(&rfam_point));

    let mut variation_points = BTreeMap::new();
    for kind in ModelKind::VARIATIONS {
        let point = variation_cog(&frequencies, kind)
            .expect("VARIATIONS only holds variation kinds")
            .into_point();
        classifications.insert(kind, variation_classify(&point));
        variation_points.insert(kind, point);
    }

    AssessmentReport {
        group_id: group_id.into(),
        counts: *counts,
        frequencies,
        gpa,
        rfam_point,
        variation_points,
        classifications,
    }
}

/// Assess many groups. Output order follows input order for either
/// execution strategy.
pub fn assess_batch(groups: &[(String, GradeCounts)], exec: Execution) -> Vec<AssessmentReport> {
    exec.map(groups, |(id, counts)| assess(id.clone(), counts))
}

/// Which agreement result a comparison exercised.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremWitness {
    /// GRFAM, TFAM and TpFAM returned the same verdict and branch.
    VariationsEquivalent,
    /// GPA values differ and every fuzzy model follows the GPA order.
    DistinctGpaAgreement,
    /// GPA values coincide and every fuzzy model reached the same verdict
    /// from the sum of squared frequencies.
    EqualGpaFuzzyAgreement,
}

impl fmt::Display for TheoremWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremWitness::VariationsEquivalent => "variations-equivalent",
            TheoremWitness::DistinctGpaAgreement => "distinct-gpa-agreement",
            TheoremWitness::EqualGpaFuzzyAgreement => "equal-gpa-fuzzy-agreement",
        };
        f.write_str(s)
    }
}

/// Verdicts of all five models for an ordered pair of groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementMatrix {
    pub first: String,
    pub second: String,
    pub verdicts: BTreeMap<ModelKind, ComparisonVerdict>,
    /// Every fuzzy model agrees with the GPA outcome.
    pub gpa_vs_fuzzy: bool,
    /// RFAM, GRFAM, TFAM and TpFAM agree with each other.
    pub fuzzy_internal: bool,
    pub witnesses: Vec<TheoremWitness>,
}

impl AgreementMatrix {
    pub fn verdict(&self, kind: ModelKind) -> &ComparisonVerdict {
        &self.verdicts[&kind]
    }

    /// The shared outcome of the fuzzy models.
    pub fn fuzzy_outcome(&self) -> Outcome {
        self.verdicts[&ModelKind::Rfam].outcome
    }
}

fn tied_direction(branch: Branch) -> Option<bool> {
    match branch {
        Branch::TieHighRegion => Some(true),
        Branch::TieLowRegion => Some(false),
        _ => None,
    }
}

/// Compare two reports under every model and check the agreement results
/// at runtime. An `Err` means the engine is broken, not that the data is
/// unusual.
pub fn compare_pair(
    first: &AssessmentReport,
    second: &AssessmentReport,
) -> Result<AgreementMatrix, InvariantViolation> {
    first.check_linkage()?;
    second.check_linkage()?;

    let mut verdicts = BTreeMap::new();
    let gpa_verdict = compare_scalar(first.gpa.value(), second.gpa.value(), ModelKind::Gpa);
    verdicts.insert(ModelKind::Gpa, gpa_verdict);
    verdicts.insert(
        ModelKind::Rfam,
        rfam_compare(&first.rfam_point, &second.rfam_point),
    );
    for kind in ModelKind::VARIATIONS {
        let a = VariationPoint::tagged(kind, first.variation_points[&kind].clone());
        let b = VariationPoint::tagged(kind, second.variation_points[&kind].clone());
        let v = variation_compare(&a, &b).expect("same kind on both sides");
        verdicts.insert(kind, v);
    }

    let pair = format!("{} vs {}", first.group_id, second.group_id);
    let mut witnesses = Vec::new();

    let grfam = verdicts[&ModelKind::Grfam];
    for kind in [ModelKind::Tfam, ModelKind::Tpfam] {
        let v = verdicts[&kind];
        if (v.outcome, v.branch) != (grfam.outcome, grfam.branch) {
            return Err(InvariantViolation {
                check: "variations-equivalent",
                detail: format!(
                    "{pair}: GRFAM {}/{} but {kind} {}/{}",
                    grfam.outcome, grfam.branch, v.outcome, v.branch
                ),
            });
        }
    }
    witnesses.push(TheoremWitness::VariationsEquivalent);

    let rfam = verdicts[&ModelKind::Rfam];
    let fuzzy_internal = ModelKind::FUZZY
        .iter()
        .all(|k| verdicts[k].outcome == rfam.outcome);
    if !fuzzy_internal {
        return Err(InvariantViolation {
            check: "fuzzy-models-agree",
            detail: format!(
                "{pair}: fuzzy verdicts disagree: {}",
                ModelKind::FUZZY
                    .iter()
                    .map(|k| format!("{k}={}", verdicts[k].outcome))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        });
    }
    let gpa_vs_fuzzy = rfam.outcome == gpa_verdict.outcome;

    if gpa_verdict.outcome != Outcome::Equivalent {
        if !gpa_vs_fuzzy {
            return Err(InvariantViolation {
                check: "distinct-gpa-agreement",
                detail: format!(
                    "{pair}: GPA says {} but fuzzy models say {}",
                    gpa_verdict.outcome, rfam.outcome
                ),
            });
        }
        witnesses.push(TheoremWitness::DistinctGpaAgreement);
    } else {
        // Equal GPA: both criteria fall into their tie branches, and the
        // pivots must put the common x on the same side for both.
        let rfam_side = tied_direction(rfam.branch);
        let variation_side = tied_direction(grfam.branch);
        if rfam_side != variation_side {
            return Err(InvariantViolation {
                check: "equal-gpa-fuzzy-agreement",
                detail: format!(
                    "{pair}: RFAM branch {} but variation branch {}",
                    rfam.branch, grfam.branch
                ),
            });
        }
        witnesses.push(TheoremWitness::EqualGpaFuzzyAgreement);
    }

    Ok(AgreementMatrix {
        first: first.group_id.clone(),
        second: second.group_id.clone(),
        verdicts,
        gpa_vs_fuzzy,
        fuzzy_internal,
        witnesses,
    })
}

/// How `first` ranks against `second` under `model`; `Greater` means
/// `first` performs better.
pub fn model_ordering(
    first: &AssessmentReport,
    second: &AssessmentReport,
    model: ModelKind,
) -> Ordering {
    match (model.tie_pivot(), first.point(model), second.point(model)) {
        (Some(pivot), Some(a), Some(b)) => performance_ordering(a, b, &pivot),
        _ => first.gpa.cmp(&second.gpa),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedGroup {
    /// 1-based; tied groups share a rank and the next rank skips ahead
    /// (1, 1, 3).
    pub rank: usize,
    pub group_id: String,
}

/// Rank reports best-first under `model`. Ties share a rank; group id
/// only orders tied groups for display.
pub fn rank(
    reports: &[AssessmentReport],
    model: ModelKind,
) -> Result<Vec<RankedGroup>, AssessError> {
    if reports.is_empty() {
        return Err(AssessError::EmptyRanking);
    }
    let mut order: Vec<&AssessmentReport> = reports.iter().collect();
    order.sort_by(|a, b| model_ordering(b, a, model).then_with(|| a.group_id.cmp(&b.group_id)));

    let mut ranked: Vec<RankedGroup> = Vec::with_capacity(order.len());
    for (pos, report) in order.iter().enumerate() {
        let rank = match pos {
            0 => 1,
            _ if model_ordering(order[pos - 1], report, model) == Ordering::Equal => {
                ranked[pos - 1].rank
            }
            _ => pos + 1,
        };
        ranked.push(RankedGroup {
            rank,
            group_id: report.group_id.clone(),
        });
    }
    Ok(ranked)
}

//! GRFAM, TFAM and TpFAM.
//!
//! The three models share the abscissa rule: width-1 bases centered at
//! `0.7i - 0.2`, so neighbouring shapes overlap by 0.3 units. They differ
//! only in the y-coefficient `a`:
//!
//! ```text
//! X = 0.7·Σ i·y_i - 0.2
//! Y = a·Σ y_i²        a = 1/2 (GRFAM), 1/5 (TFAM), 3/7 (TpFAM)
//! ```

use crate::error::AssessError;
use crate::ordering::compare_with_pivot;
use crate::types::{
    rat, CogPoint, ComparisonVerdict, FrequencyVector, GradeLabel, ModelKind, PerformanceClass,
    Rational,
};

/// A COG point tagged with the variation that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariationPoint {
    kind: ModelKind,
    point: CogPoint,
}

impl VariationPoint {
    pub(crate) fn tagged(kind: ModelKind, point: CogPoint) -> Self {
        VariationPoint { kind, point }
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn point(&self) -> &CogPoint {
        &self.point
    }

    pub fn into_point(self) -> CogPoint {
        self.point
    }
}

/// Worst, minimum-y and ideal COG points of a variation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LandmarkPoints {
    pub worst: CogPoint,
    pub minimum_y: CogPoint,
    pub ideal: CogPoint,
}

fn coefficient(kind: ModelKind) -> Result<Rational, AssessError> {
    kind.variation_coefficient()
        .ok_or(AssessError::NotAVariation { got: kind })
}

pub fn variation_cog(
    freq: &FrequencyVector,
    kind: ModelKind,
) -> Result<VariationPoint, AssessError> {
    let a = coefficient(kind)?;
    let x = rat(7, 10) * freq.weighted_index_sum() - rat(1, 5);
    let y = a * freq.sum_of_squares();
    Ok(VariationPoint {
        kind,
        point: CogPoint::new(x, y),
    })
}

/// More than satisfactory strictly above `X = 33/20`, half the ideal.
pub fn variation_classify(point: &CogPoint) -> PerformanceClass {
    PerformanceClass::from_score(&point.x, &rat(33, 20))
}

/// Criterion with tie pivot `X = 19/10` (inclusive on the high side).
/// Both points must come from the same variation.
pub fn variation_compare(
    first: &VariationPoint,
    second: &VariationPoint,
) -> Result<ComparisonVerdict, AssessError> {
    if first.kind != second.kind {
        return Err(AssessError::MismatchedModels {
            first: first.kind,
            second: second.kind,
        });
    }
    Ok(compare_with_pivot(
        &first.point,
        &second.point,
        &rat(19, 10),
        first.kind,
    ))
}

pub fn landmark_points(kind: ModelKind) -> Result<LandmarkPoints, AssessError> {
    let eval = |f: FrequencyVector| variation_cog(&f, kind).map(VariationPoint::into_point);
    Ok(LandmarkPoints {
        worst: eval(FrequencyVector::point_mass(GradeLabel::F))?,
        minimum_y: eval(FrequencyVector::uniform())?,
        ideal: eval(FrequencyVector::point_mass(GradeLabel::A))?,
    })
}

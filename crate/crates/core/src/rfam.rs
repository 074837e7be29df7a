//! Rectangular Fuzzy Assessment Model: five non-overlapping unit rectangles
//! on `[i-1, i]` with heights equal to the grade frequencies.

use num::Zero;

use crate::ordering::compare_with_pivot;
use crate::types::{
    rat, CogPoint, ComparisonVerdict, FrequencyVector, ModelKind, PerformanceClass, Rational,
};

/// `x = ½(y1 + 3y2 + 5y3 + 7y4 + 9y5)`, `y = ½ Σ y_i²`.
pub fn rfam_cog(freq: &FrequencyVector) -> CogPoint {
    let half = rat(1, 2);
    let odd_sum = freq
        .values()
        .iter()
        .zip((1i64..).step_by(2))
        .fold(Rational::zero(), |acc, (y, k)| acc + y * rat(k, 1));
    CogPoint::new(&half * odd_sum, &half * freq.sum_of_squares())
}

pub fn rfam_classify(point: &CogPoint) -> PerformanceClass {
    PerformanceClass::from_score(&point.x, &ModelKind::Rfam.satisfactory_threshold())
}

/// RFAM criterion with the tie pivot at `x = 5/2` (inclusive on the high
/// side).
pub fn rfam_compare(first: &CogPoint, second: &CogPoint) -> ComparisonVerdict {
    compare_with_pivot(first, second, &rat(5, 2), ModelKind::Rfam)
}

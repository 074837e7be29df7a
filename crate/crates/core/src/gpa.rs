//! Grade Point Average index.

use std::fmt;

use num::{BigInt, Zero};

use crate::types::{int, FrequencyVector, GradeCounts, ModelKind, PerformanceClass, Rational};

/// GPA value, always in `[0, 4]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GpaScore(Rational);

impl GpaScore {
    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }
}

impl fmt::Display for GpaScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `(0·n_F + 1·n_D + 2·n_C + 3·n_B + 4·n_A) / n`.
pub fn gpa_from_counts(counts: &GradeCounts) -> GpaScore {
    let points: u128 = counts
        .as_array()
        .iter()
        .zip(0u128..)
        .map(|(&c, w)| c as u128 * w)
        .sum();
    GpaScore(Rational::new(
        BigInt::from(points),
        BigInt::from(counts.total()),
    ))
}

/// `y2 + 2·y3 + 3·y4 + 4·y5`.
pub fn gpa_from_frequencies(freq: &FrequencyVector) -> GpaScore {
    let value = freq
        .values()
        .iter()
        .zip(0..)
        .fold(Rational::zero(), |acc, (y, w)| acc + y * int(w));
    GpaScore(value)
}

pub fn gpa_classify(score: &GpaScore) -> PerformanceClass {
    PerformanceClass::from_score(score.value(), &ModelKind::Gpa.satisfactory_threshold())
}

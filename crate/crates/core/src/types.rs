//! Shared domain vocabulary: grades, cohort tallies, frequencies, model
//! identifiers, COG points and verdicts.
//!
//! Every scalar here is an exact arbitrary-precision rational. Floating point
//! only shows up in the numeric integrator of the oracle and in rendered
//! output.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::AssessError;

/// The canonical exact scalar.
pub type Rational = BigRational;

/// Shorthand for the rational `num / den`.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer-valued rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Linguistic grade, ordered `F < D < C < B < A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GradeLabel {
    F,
    D,
    C,
    B,
    A,
}

impl GradeLabel {
    pub const ALL: [GradeLabel; 5] = [
        GradeLabel::F,
        GradeLabel::D,
        GradeLabel::C,
        GradeLabel::B,
        GradeLabel::A,
    ];

    /// 1-based index: F = 1, ..., A = 5.
    pub fn index(self) -> usize {
        self as usize + 1
    }

    pub fn from_index(index: usize) -> Option<Self> {
        index.checked_sub(1).and_then(|i| Self::ALL.get(i).copied())
    }
}

impl fmt::Display for GradeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GradeLabel::F => "F",
            GradeLabel::D => "D",
            GradeLabel::C => "C",
            GradeLabel::B => "B",
            GradeLabel::A => "A",
        };
        f.write_str(s)
    }
}

impl FromStr for GradeLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "F" | "f" => Ok(GradeLabel::F),
            "D" | "d" => Ok(GradeLabel::D),
            "C" | "c" => Ok(GradeLabel::C),
            "B" | "b" => Ok(GradeLabel::B),
            "A" | "a" => Ok(GradeLabel::A),
            other => Err(format!("unknown grade label {other:?}")),
        }
    }
}

/// Number of members awarded each grade, indexed F..A. Never empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GradeCounts {
    counts: [u64; 5],
    total: u64,
}

impl GradeCounts {
    /// Counts in F, D, C, B, A order.
    pub fn new(counts: [u64; 5]) -> Result<Self, AssessError> {
        let total = counts.iter().sum::<u64>();
        if total == 0 {
            return Err(AssessError::EmptyCohort);
        }
        Ok(GradeCounts { counts, total })
    }

    pub fn get(&self, label: GradeLabel) -> u64 {
        self.counts[label.index() - 1]
    }

    /// Counts in F, D, C, B, A order.
    pub fn as_array(&self) -> [u64; 5] {
        self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Scale every count by `k`. Returns `None` on `k = 0` or overflow.
    pub fn scaled(&self, k: u64) -> Option<Self> {
        let mut out = [0u64; 5];
        for (o, c) in out.iter_mut().zip(self.counts) {
            *o = c.checked_mul(k)?;
        }
        GradeCounts::new(out).ok()
    }
}

/// Exact membership frequencies y1..y5 (F..A), nonnegative, summing to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrequencyVector([Rational; 5]);

impl FrequencyVector {
    pub fn new(values: [Rational; 5]) -> Result<Self, AssessError> {
        let sum = values.iter().fold(Rational::zero(), |acc, v| acc + v);
        if values.iter().any(Signed::is_negative) || !sum.is_one() {
            return Err(AssessError::InvalidFrequencies {
                sum: sum.to_string(),
            });
        }
        Ok(FrequencyVector(values))
    }

    /// y_i = n_i / n.
    pub fn from_counts(counts: &GradeCounts) -> Self {
        let n = BigInt::from(counts.total());
        FrequencyVector(
            counts
                .as_array()
                .map(|c| Rational::new(BigInt::from(c), n.clone())),
        )
    }

    /// All five grades equally likely.
    pub fn uniform() -> Self {
        FrequencyVector(std::array::from_fn(|_| rat(1, 5)))
    }

    /// The whole mass on a single grade.
    pub fn point_mass(label: GradeLabel) -> Self {
        FrequencyVector(std::array::from_fn(|i| {
            if i + 1 == label.index() {
                Rational::one()
            } else {
                Rational::zero()
            }
        }))
    }

    pub fn get(&self, label: GradeLabel) -> &Rational {
        &self.0[label.index() - 1]
    }

    pub fn values(&self) -> &[Rational; 5] {
        &self.0
    }

    /// Σ i·y_i with i = 1..5.
    pub fn weighted_index_sum(&self) -> Rational {
        self.0
            .iter()
            .zip(1..)
            .fold(Rational::zero(), |acc, (y, i)| acc + y * int(i))
    }

    /// Σ y_i².
    pub fn sum_of_squares(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, y| acc + y * y)
    }
}

/// Convenience wrapper for [`FrequencyVector::from_counts`].
pub fn frequencies_from_counts(counts: &GradeCounts) -> FrequencyVector {
    FrequencyVector::from_counts(counts)
}

/// The five assessment models.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelKind {
    Gpa,
    Rfam,
    Grfam,
    Tfam,
    Tpfam,
}

impl ModelKind {
    pub const ALL: [ModelKind; 5] = [
        ModelKind::Gpa,
        ModelKind::Rfam,
        ModelKind::Grfam,
        ModelKind::Tfam,
        ModelKind::Tpfam,
    ];

    pub const FUZZY: [ModelKind; 4] = [
        ModelKind::Rfam,
        ModelKind::Grfam,
        ModelKind::Tfam,
        ModelKind::Tpfam,
    ];

    pub const VARIATIONS: [ModelKind; 3] = [ModelKind::Grfam, ModelKind::Tfam, ModelKind::Tpfam];

    /// The y-coefficient `a` in `Y = a·Σ y_i²`; only the three variations
    /// carry one.
    pub fn variation_coefficient(self) -> Option<Rational> {
        match self {
            ModelKind::Grfam => Some(rat(1, 2)),
            ModelKind::Tfam => Some(rat(1, 5)),
            ModelKind::Tpfam => Some(rat(3, 7)),
            ModelKind::Gpa | ModelKind::Rfam => None,
        }
    }

    pub fn is_variation(self) -> bool {
        self.variation_coefficient().is_some()
    }

    /// Strictly above this score means more-than-satisfactory.
    pub fn satisfactory_threshold(self) -> Rational {
        match self {
            ModelKind::Gpa => int(2),
            ModelKind::Rfam => rat(9, 4),
            _ => rat(33, 20),
        }
    }

    /// Tie pivot of the COG criterion: at equal x, x ≥ pivot prefers the
    /// higher y, x < pivot the lower. `None` for GPA, which has no tie-break.
    pub fn tie_pivot(self) -> Option<Rational> {
        match self {
            ModelKind::Gpa => None,
            ModelKind::Rfam => Some(rat(5, 2)),
            _ => Some(rat(19, 10)),
        }
    }

    /// Lower-case identifier used on the command line and in JSON.
    pub fn key(self) -> &'static str {
        match self {
            ModelKind::Gpa => "gpa",
            ModelKind::Rfam => "rfam",
            ModelKind::Grfam => "grfam",
            ModelKind::Tfam => "tfam",
            ModelKind::Tpfam => "tpfam",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ModelKind::Gpa => "GPA",
            ModelKind::Rfam => "RFAM",
            ModelKind::Grfam => "GRFAM",
            ModelKind::Tfam => "TFAM",
            ModelKind::Tpfam => "TpFAM",
        };
        f.write_str(s)
    }
}

impl FromStr for ModelKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ModelKind::ALL
            .into_iter()
            .find(|k| k.key().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| {
                format!("unknown model {s:?} (expected gpa, rfam, grfam, tfam or tpfam)")
            })
    }
}

/// Exact center-of-gravity coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CogPoint {
    pub x: Rational,
    pub y: Rational,
}

impl CogPoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        CogPoint { x, y }
    }
}

impl fmt::Display for CogPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PerformanceClass {
    MoreThanSatisfactory,
    LessThanSatisfactory,
    ExactlyAtThreshold,
}

impl PerformanceClass {
    /// Strict comparison against the threshold; equality is its own class.
    pub fn from_score(score: &Rational, threshold: &Rational) -> Self {
        match score.cmp(threshold) {
            std::cmp::Ordering::Greater => PerformanceClass::MoreThanSatisfactory,
            std::cmp::Ordering::Equal => PerformanceClass::ExactlyAtThreshold,
            std::cmp::Ordering::Less => PerformanceClass::LessThanSatisfactory,
        }
    }
}

impl fmt::Display for PerformanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PerformanceClass::MoreThanSatisfactory => "MoreThanSatisfactory",
            PerformanceClass::LessThanSatisfactory => "LessThanSatisfactory",
            PerformanceClass::ExactlyAtThreshold => "ExactlyAtThreshold",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    FirstBetter,
    SecondBetter,
    Equivalent,
}

impl Outcome {
    /// The outcome seen from the other side of the comparison.
    pub fn reversed(self) -> Self {
        match self {
            Outcome::FirstBetter => Outcome::SecondBetter,
            Outcome::SecondBetter => Outcome::FirstBetter,
            Outcome::Equivalent => Outcome::Equivalent,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Outcome::FirstBetter => "FirstBetter",
            Outcome::SecondBetter => "SecondBetter",
            Outcome::Equivalent => "Equivalent",
        };
        f.write_str(s)
    }
}

/// Which case of the criterion decided a comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    PrimaryXDiffers,
    TieHighRegion,
    TieLowRegion,
    FullTie,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Branch::PrimaryXDiffers => "PrimaryXDiffers",
            Branch::TieHighRegion => "TieHighRegion",
            Branch::TieLowRegion => "TieLowRegion",
            Branch::FullTie => "FullTie",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ComparisonVerdict {
    pub outcome: Outcome,
    pub branch: Branch,
    pub model: ModelKind,
}

impl ComparisonVerdict {
    pub fn reversed(self) -> Self {
        ComparisonVerdict {
            outcome: self.outcome.reversed(),
            ..self
        }
    }
}

//! Cohort assessment with the GPA index and four center-of-gravity fuzzy
//! assessment models (RFAM, GRFAM, TFAM, TpFAM).
//!
//! All model arithmetic is exact ([`types::Rational`]). The [`oracle`]
//! module rebuilds every model's membership figure as explicit shapes and
//! recomputes the center of gravity independently, exactly and by numeric
//! integration.
//!
//! ```
//! use fuzzy_assess::{assess, compare_pair, GradeCounts, ModelKind, Outcome};
//!
//! let class_one = assess("I", &GradeCounts::new([0, 0, 10, 0, 50]).unwrap());
//! let class_two = assess("II", &GradeCounts::new([0, 0, 0, 20, 40]).unwrap());
//! let m = compare_pair(&class_one, &class_two).unwrap();
//! assert_eq!(m.verdict(ModelKind::Gpa).outcome, Outcome::Equivalent);
//! assert_eq!(m.verdict(ModelKind::Grfam).outcome, Outcome::FirstBetter);
//! ```

pub mod checks;
pub mod comparison;
pub mod error;
pub mod exec;
pub mod gpa;
pub mod io;
pub mod oracle;
mod ordering;
pub mod rfam;
pub mod sampling;
pub mod types;
pub mod variations;

pub use comparison::{
    assess, assess_batch, compare_pair, rank, AgreementMatrix, AssessmentReport, RankedGroup,
};
pub use error::{AssessError, InputError, InvariantViolation};
pub use exec::Execution;
pub use gpa::{gpa_classify, gpa_from_counts, gpa_from_frequencies, GpaScore};
pub use ordering::performance_ordering;
pub use rfam::{rfam_classify, rfam_cog, rfam_compare};
pub use types::{
    frequencies_from_counts, Branch, CogPoint, ComparisonVerdict, FrequencyVector, GradeCounts,
    GradeLabel, ModelKind, Outcome, PerformanceClass, Rational,
};
pub use variations::{
    landmark_points, variation_classify, variation_cog, variation_compare, LandmarkPoints,
    VariationPoint,
};

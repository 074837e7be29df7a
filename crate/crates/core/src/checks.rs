//! Batch sweeps that check the model-agreement results and the geometric
//! oracle on many cohorts at once. These back the `verify` command and the
//! parallel-versus-sequential benchmarks.

use std::collections::BTreeMap;

use crate::comparison::{assess, compare_pair, AssessmentReport};
use crate::error::InvariantViolation;
use crate::exec::Execution;
use crate::oracle::{
    build_figure, composite_centroid, integration_centroid, verify_closed_form, Deviation,
};
use crate::sampling::enumerate_counts;
use crate::types::{int, FrequencyVector, GradeCounts, ModelKind, PerformanceClass, Rational};

/// Oracle results for one fuzzy model.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ModelOracleStats {
    pub checked: usize,
    pub x_mismatches: usize,
    pub y_exact_matches: usize,
    pub expected_deviations: usize,
    pub unexpected_deviations: usize,
    pub integration_checked: usize,
    pub max_integration_error: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct OracleSweep {
    pub vectors: usize,
    pub resolution: usize,
    pub per_model: BTreeMap<ModelKind, ModelOracleStats>,
}

impl OracleSweep {
    pub fn unexpected(&self) -> usize {
        self.per_model
            .values()
            .map(|s| s.x_mismatches + s.unexpected_deviations)
            .sum()
    }
}

/// Compare closed forms against the composite centroid on every vector,
/// and against numeric integration at `resolution` on the first
/// `integration_samples` vectors.
pub fn oracle_sweep(
    freqs: &[FrequencyVector],
    integration_samples: usize,
    resolution: usize,
    exec: Execution,
) -> OracleSweep {
    let mut per_model = BTreeMap::new();
    for kind in ModelKind::FUZZY {
        let reports = exec.map(freqs, |f| verify_closed_form(f, kind).expect("fuzzy model"));
        let mut stats = ModelOracleStats {
            checked: reports.len(),
            ..Default::default()
        };
        for r in &reports {
            stats.x_mismatches += usize::from(!r.x_matches);
            stats.y_exact_matches += usize::from(r.y_matches);
            match r.deviation {
                Deviation::None => {}
                Deviation::Expected => stats.expected_deviations += 1,
                Deviation::Unexpected => stats.unexpected_deviations += 1,
            }
        }
        let sample = &freqs[..integration_samples.min(freqs.len())];
        // Shapes are integrated in parallel inside each call; vectors run in
        // order.
        for f in sample {
            let figure = build_figure(f, kind).expect("fuzzy model");
            let exact = composite_centroid(&figure).expect("frequencies sum to 1");
            let approx = integration_centroid(&figure, resolution, exec).expect("valid resolution");
            stats.max_integration_error = stats
                .max_integration_error
                .max(approx.max_abs_error(&exact));
            stats.integration_checked += 1;
        }
        per_model.insert(kind, stats);
    }
    OracleSweep {
        vectors: freqs.len(),
        resolution,
        per_model,
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TheoremSweep {
    pub pairs: usize,
    pub equal_gpa_pairs: usize,
    /// Cohorts with GPA > 2 that some model did not rate more than
    /// satisfactory.
    pub remark_violations: usize,
    /// Cohorts with GPA < 2 that RFAM and GRFAM classify differently.
    pub divergent_classifications: usize,
    pub violations: Vec<InvariantViolation>,
}

/// Run [`compare_pair`] on consecutive pairs of `cohorts` and check the
/// classification remark on every cohort.
pub fn theorem_sweep(cohorts: &[GradeCounts], exec: Execution) -> TheoremSweep {
    let reports = exec.map_range(cohorts.len(), |i| assess(format!("#{i}"), &cohorts[i]));
    let pair_results = exec.map_range(reports.len().saturating_sub(1), |i| {
        compare_pair(&reports[i], &reports[i + 1])
            .map(|m| m.verdict(ModelKind::Gpa).outcome == crate::types::Outcome::Equivalent)
    });
    let mut sweep = TheoremSweep {
        pairs: pair_results.len(),
        ..Default::default()
    };
    for r in pair_results {
        match r {
            Ok(tie) => sweep.equal_gpa_pairs += usize::from(tie),
            Err(v) => sweep.violations.push(v),
        }
    }
    let two = int(2);
    for r in &reports {
        let gpa = r.gpa.value();
        if *gpa > two
            && ModelKind::ALL
                .iter()
                .any(|k| r.classification(*k) != PerformanceClass::MoreThanSatisfactory)
        {
            sweep.remark_violations += 1;
        }
        if *gpa < two && r.classification(ModelKind::Rfam) != r.classification(ModelKind::Grfam) {
            sweep.divergent_classifications += 1;
        }
    }
    sweep
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EqualGpaScan {
    pub cohorts: usize,
    pub equal_gpa_pairs: usize,
    /// Pairs where the variation x sits above its pivot while the RFAM x
    /// sits below its own.
    pub pivot_straddles: usize,
    pub violations: Vec<InvariantViolation>,
}

/// Check every unordered pair of distinct cohorts with `n ≤ max_n` that
/// share a GPA value.
pub fn equal_gpa_scan(max_n: u64, exec: Execution) -> EqualGpaScan {
    let cohorts = enumerate_counts(max_n);
    let reports = exec.map_range(cohorts.len(), |i| assess(format!("#{i}"), &cohorts[i]));

    let mut by_gpa: BTreeMap<&Rational, Vec<&AssessmentReport>> = BTreeMap::new();
    for r in &reports {
        by_gpa.entry(r.gpa.value()).or_default().push(r);
    }
    let classes: Vec<Vec<&AssessmentReport>> =
        by_gpa.into_values().filter(|g| g.len() > 1).collect();

    let variation_pivot = ModelKind::Grfam.tie_pivot().expect("variation pivot");
    let rfam_pivot = ModelKind::Rfam.tie_pivot().expect("rfam pivot");
    let per_class = exec.map(&classes, |class| {
        let mut pairs = 0usize;
        let mut straddles = 0usize;
        let mut violations = Vec::new();
        // x is shared within a class, so the straddle test is per class.
        let straddle = class[0].variation_points[&ModelKind::Grfam].x >= variation_pivot
            && class[0].rfam_point.x < rfam_pivot;
        for (i, a) in class.iter().enumerate() {
            for b in &class[i + 1..] {
                pairs += 1;
                straddles += usize::from(straddle);
                if let Err(v) = compare_pair(a, b) {
                    violations.push(v);
                }
            }
        }
        (pairs, straddles, violations)
    });

    let mut scan = EqualGpaScan {
        cohorts: cohorts.len(),
        ..Default::default()
    };
    for (pairs, straddles, violations) in per_class {
        scan.equal_gpa_pairs += pairs;
        scan.pivot_straddles += straddles;
        scan.violations.extend(violations);
    }
    scan
}

use std::fmt::Write as _;
use std::str::FromStr;

use num::{BigInt, Signed, ToPrimitive};
use serde_json::{json, Map, Value};

use crate::checks::{EqualGpaScan, OracleSweep, TheoremSweep};
use crate::comparison::{AgreementMatrix, AssessmentReport, RankedGroup};
use crate::types::{int, CogPoint, GradeLabel, ModelKind, Outcome, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format {other:?} (expected text or json)")),
        }
    }
}

/// `r` rounded half away from zero to two decimals, computed exactly.
pub fn approx_decimal(r: &Rational) -> String {
    let hundredths = (r * int(100)).round().to_integer();
    let sign = if hundredths.is_negative() { "-" } else { "" };
    let abs = hundredths.abs();
    let whole = &abs / BigInt::from(100);
    let frac = (&abs % BigInt::from(100))
        .to_u32()
        .expect("remainder below 100");
    format!("{sign}{whole}.{frac:02}")
}

fn exact_with_approx(r: &Rational) -> String {
    format!("{r} (≈{})", approx_decimal(r))
}

fn point_text(p: &CogPoint) -> String {
    format!("{p} ≈ ({}, {})", approx_decimal(&p.x), approx_decimal(&p.y))
}

fn bigint_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(v.to_string()),
    }
}

fn rational_json(r: &Rational) -> Value {
    json!({
        "num": bigint_json(r.numer()),
        "den": bigint_json(r.denom()),
        "approx": r.to_f64().unwrap_or(f64::NAN),
    })
}

fn point_json(p: &CogPoint) -> Value {
    json!({ "x": rational_json(&p.x), "y": rational_json(&p.y) })
}

fn report_json(r: &AssessmentReport) -> Value {
    let mut counts = Map::new();
    for label in GradeLabel::ALL {
        counts.insert(label.to_string(), Value::from(r.counts.get(label)));
    }
    counts.insert("n".into(), Value::from(r.counts.total()));

    let mut cog = Map::new();
    for kind in ModelKind::FUZZY {
        cog.insert(
            kind.key().into(),
            point_json(r.point(kind).expect("fuzzy model")),
        );
    }
    let mut classes = Map::new();
    for kind in ModelKind::ALL {
        classes.insert(
            kind.key().into(),
            Value::String(r.classification(kind).to_string()),
        );
    }
    json!({
        "id": r.group_id,
        "counts": counts,
        "gpa": rational_json(r.gpa.value()),
        "cog": cog,
        "classifications": classes,
    })
}

fn matrix_json(m: &AgreementMatrix) -> Value {
    let mut verdicts = Map::new();
    for kind in ModelKind::ALL {
        let v = m.verdict(kind);
        verdicts.insert(
            kind.key().into(),
            json!({ "outcome": v.outcome.to_string(), "branch": v.branch.to_string() }),
        );
    }
    json!({
        "first": m.first,
        "second": m.second,
        "verdicts": verdicts,
        "gpa_vs_fuzzy": m.gpa_vs_fuzzy,
        "fuzzy_internal": m.fuzzy_internal,
        "witnesses": m.witnesses.iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn to_json_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values always serialize");
    s.push('\n');
    s
}

fn report_text(out: &mut String, r: &AssessmentReport) {
    let c = &r.counts;
    let _ = writeln!(
        out,
        "Group {} (n = {}; F {}, D {}, C {}, B {}, A {})",
        r.group_id,
        c.total(),
        c.get(GradeLabel::F),
        c.get(GradeLabel::D),
        c.get(GradeLabel::C),
        c.get(GradeLabel::B),
        c.get(GradeLabel::A)
    );
    let _ = writeln!(
        out,
        "  GPA {}  {}",
        exact_with_approx(r.gpa.value()),
        r.classification(ModelKind::Gpa)
    );
    for kind in ModelKind::FUZZY {
        let _ = writeln!(
            out,
            "  {kind} {}  {}",
            point_text(r.point(kind).expect("fuzzy model")),
            r.classification(kind)
        );
    }
}

fn matrix_text(out: &mut String, m: &AgreementMatrix) {
    let _ = writeln!(out, "Comparison {} vs {}", m.first, m.second);
    for kind in ModelKind::ALL {
        let v = m.verdict(kind);
        let _ = writeln!(out, "  {kind} {} ({})", v.outcome, v.branch);
    }
    let fuzzy = match m.fuzzy_outcome() {
        Outcome::FirstBetter => format!("{} better", m.first),
        Outcome::SecondBetter => format!("{} better", m.second),
        Outcome::Equivalent => "equivalent".to_string(),
    };
    let _ = writeln!(out, "  fuzzy verdict: {fuzzy}");
    let _ = writeln!(
        out,
        "  agreement: gpa_vs_fuzzy={} fuzzy_internal={}",
        m.gpa_vs_fuzzy, m.fuzzy_internal
    );
    let witnesses: Vec<String> = m.witnesses.iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "  witnesses: {}", witnesses.join(", "));
}

/// Render group reports and, optionally, one pairwise comparison. Output
/// depends only on the inputs, byte for byte.
pub fn render_report(
    reports: &[AssessmentReport],
    comparison: Option<&AgreementMatrix>,
    format: OutputFormat,
) -> String {
    match format {
        OutputFormat::Json => {
            let mut root = Map::new();
            root.insert(
                "groups".into(),
                Value::Array(reports.iter().map(report_json).collect()),
            );
            if let Some(m) = comparison {
                root.insert("comparison".into(), matrix_json(m));
            }
            to_json_string(&Value::Object(root))
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                report_text(&mut out, r);
            }
            if let Some(m) = comparison {
                out.push('\n');
                matrix_text(&mut out, m);
            }
            out
        }
    }
}

pub fn render_ranking(ranked: &[RankedGroup], model: ModelKind, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json_string(&json!({
            "model": model.key(),
            "ranking": ranked
                .iter()
                .map(|r| json!({ "rank": r.rank, "id": r.group_id }))
                .collect::<Vec<_>>(),
        })),
        OutputFormat::Text => {
            let mut out = format!("Ranking under {model}\n");
            for r in ranked {
                let _ = writeln!(out, "  {}. {}", r.rank, r.group_id);
            }
            out
        }
    }
}

/// Everything the `verify` command checked.
#[derive(Debug, Clone)]
pub struct VerificationSummary {
    pub source: String,
    pub oracle: OracleSweep,
    pub theorems: TheoremSweep,
    pub scan: Option<EqualGpaScan>,
}

impl VerificationSummary {
    /// Total count of unexpected results; nonzero means a bug.
    pub fn failures(&self) -> usize {
        self.oracle.unexpected()
            + self.theorems.violations.len()
            + self.theorems.remark_violations
            + self
                .scan
                .as_ref()
                .map_or(0, |s| s.violations.len() + s.pivot_straddles)
    }
}

pub fn render_verification(summary: &VerificationSummary, format: OutputFormat) -> String {
    let o = &summary.oracle;
    let t = &summary.theorems;
    match format {
        OutputFormat::Json => {
            let mut models = Map::new();
            for (kind, s) in &o.per_model {
                models.insert(
                    kind.key().into(),
                    json!({
                        "checked": s.checked,
                        "x_mismatches": s.x_mismatches,
                        "y_exact_matches": s.y_exact_matches,
                        "expected_deviations": s.expected_deviations,
                        "unexpected_deviations": s.unexpected_deviations,
                        "integration_checked": s.integration_checked,
                        "max_integration_error": s.max_integration_error,
                    }),
                );
            }
            let scan = summary.scan.as_ref().map(|s| {
                json!({
                    "cohorts": s.cohorts,
                    "equal_gpa_pairs": s.equal_gpa_pairs,
                    "pivot_straddles": s.pivot_straddles,
                    "violations": s.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })
            });
            to_json_string(&json!({
                "source": summary.source,
                "oracle": { "vectors": o.vectors, "resolution": o.resolution, "models": models },
                "theorems": {
                    "pairs": t.pairs,
                    "equal_gpa_pairs": t.equal_gpa_pairs,
                    "remark_violations": t.remark_violations,
                    "divergent_classifications": t.divergent_classifications,
                    "violations": t.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
                },
                "equal_gpa_scan": scan,
                "failures": summary.failures(),
            }))
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "Oracle check over {} vectors ({})",
                o.vectors, summary.source
            );
            for (kind, s) in &o.per_model {
                let label = if s.unexpected_deviations + s.x_mismatches > 0 {
                    "UNEXPECTED"
                } else if s.expected_deviations > 0 {
                    "expected deviation"
                } else {
                    "exact"
                };
                let _ = writeln!(
                    out,
                    "  {kind}: x mismatches {}, y exact {}/{}, y deviations {} expected / {} unexpected [{label}]",
                    s.x_mismatches, s.y_exact_matches, s.checked, s.expected_deviations, s.unexpected_deviations
                );
                if s.integration_checked > 0 {
                    let _ = writeln!(
                        out,
                        "    integration at resolution {}: max error {:.3e} over {} vectors",
                        o.resolution, s.max_integration_error, s.integration_checked
                    );
                }
            }
            let _ = writeln!(
                out,
                "Model agreement over {} pairs ({} with equal GPA): {} violations",
                t.pairs,
                t.equal_gpa_pairs,
                t.violations.len()
            );
            for v in &t.violations {
                let _ = writeln!(out, "  {v}");
            }
            let _ = writeln!(
                out,
                "GPA > 2 classified below more-than-satisfactory: {}; RFAM/GRFAM divergences with GPA < 2: {}",
                t.remark_violations, t.divergent_classifications
            );
            if let Some(s) = &summary.scan {
                let _ = writeln!(
                    out,
                    "Exhaustive equal-GPA scan: {} cohorts, {} pairs, {} pivot straddles, {} violations",
                    s.cohorts,
                    s.equal_gpa_pairs,
                    s.pivot_straddles,
                    s.violations.len()
                );
            }
            let _ = writeln!(out, "failures: {}", summary.failures());
            out
        }
    }
}

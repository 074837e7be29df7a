//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fuzzy_assess::io::approx_decimal;
use fuzzy_assess::oracle::{
    build_figure, composite_centroid, integration_centroid, verify_closed_form, Deviation,
};
use fuzzy_assess::types::{int, rat};
use fuzzy_assess::{
    assess, compare_pair, gpa_from_counts, landmark_points, rank, rfam_cog, variation_cog,
    AssessmentReport, Branch, CogPoint, Execution, FrequencyVector, GradeCounts, GradeLabel,
    ModelKind, Outcome, PerformanceClass, Rational,
};

const SEED: u64 = 0x5eed_2016;
const RANDOM_PAIRS: usize = 10_000;
const MAX_N: u64 = 10_000;
const SMALL_N: u64 = 12;
const ORACLE_VECTORS: usize = 1_000;
const INTEGRATION_VECTORS: usize = 50;
const RESOLUTION: usize = 1_000;
const INTEGRATION_TOLERANCE: f64 = 1e-6;
const EXAMPLE_BUDGET: Duration = Duration::from_secs(1);
const ORACLE_BUDGET: Duration = Duration::from_secs(60);

type Check = Result<String, String>;

fn counts(c: [u64; 5]) -> GradeCounts {
    GradeCounts::new(c).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Uniform size, then four sorted uniform cut points in `0..=n`. Written
/// here rather than borrowed from the library sampler.
fn random_cohort(rng: &mut ChaCha8Rng, max_n: u64) -> GradeCounts {
    let n = rng.gen_range(1..=max_n);
    let mut cuts: Vec<u64> = (0..4).map(|_| rng.gen_range(0..=n)).collect();
    cuts.sort_unstable();
    let c = [
        cuts[0],
        cuts[1] - cuts[0],
        cuts[2] - cuts[1],
        cuts[3] - cuts[2],
        n - cuts[3],
    ];
    counts(c)
}

/// Half the pairs draw from n ≤ 10,000, the other half from n ≤ 12 so that
/// equal-GPA ties actually occur.
fn random_pairs() -> Vec<(GradeCounts, GradeCounts)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..RANDOM_PAIRS)
        .map(|k| {
            let max_n = if k % 2 == 0 { MAX_N } else { SMALL_N };
            (
                random_cohort(&mut rng, max_n),
                random_cohort(&mut rng, max_n),
            )
        })
        .collect()
}

fn sum_sq(c: &GradeCounts) -> Rational {
    let n = int(c.total() as i64);
    c.as_array()
        .iter()
        .map(|&k| {
            let y = int(k as i64) / &n;
            &y * &y
        })
        .fold(Rational::zero(), |a, b| a + b)
}

// 1
fn example_equal_gpa() -> Check {
    let start = Instant::now();
    let one = assess("ClassI", &counts([0, 0, 10, 0, 50]));
    let two = assess("ClassII", &counts([0, 0, 0, 20, 40]));
    for r in [&one, &two] {
        ensure(r.gpa.value() == &rat(11, 3), || {
            format!("{} GPA {}", r.group_id, r.gpa)
        })?;
        ensure(approx_decimal(r.gpa.value()) == "3.67", || {
            "GPA rendering".into()
        })?;
        ensure(r.point(ModelKind::Grfam).unwrap().x == rat(46, 15), || {
            "GRFAM X".into()
        })?;
        ensure(r.rfam_point.x == rat(25, 6), || "RFAM x".into())?;
    }
    ensure(approx_decimal(&rat(46, 15)) == "3.07", || {
        "X rendering".into()
    })?;
    ensure(approx_decimal(&rat(25, 6)) == "4.17", || {
        "x rendering".into()
    })?;
    ensure(one.frequencies.sum_of_squares() == rat(26, 36), || {
        "Σy² class I".into()
    })?;
    ensure(two.frequencies.sum_of_squares() == rat(20, 36), || {
        "Σy² class II".into()
    })?;
    let m = compare_pair(&one, &two).map_err(|e| e.to_string())?;
    ensure(
        m.verdict(ModelKind::Gpa).outcome == Outcome::Equivalent,
        || "GPA verdict".into(),
    )?;
    for kind in ModelKind::FUZZY {
        ensure(m.verdict(kind).outcome == Outcome::FirstBetter, || {
            format!("{kind} verdict")
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < EXAMPLE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "GPA 11/3 both, fuzzy favours Class I ({elapsed:?})"
    ))
}

// 2
fn example_departments() -> Check {
    let start = Instant::now();
    let d1 = assess("D1", &counts([6, 9, 11, 3, 1]));
    let d2 = assess("D2", &counts([5, 10, 13, 6, 1]));
    ensure(
        d1.gpa.value() == &rat(44, 30) && d2.gpa.value() == &rat(58, 35),
        || "GPA".into(),
    )?;
    ensure(
        approx_decimal(d1.gpa.value()) == "1.47" && approx_decimal(d2.gpa.value()) == "1.66",
        || "GPA rendering".into(),
    )?;
    for kind in ModelKind::VARIATIONS {
        ensure(d1.point(kind).unwrap().x == rat(229, 150), || {
            format!("{kind} D1 X")
        })?;
        ensure(d2.point(kind).unwrap().x == rat(83, 50), || {
            format!("{kind} D2 X")
        })?;
        ensure(
            d1.classification(kind) == PerformanceClass::LessThanSatisfactory
                && d2.classification(kind) == PerformanceClass::MoreThanSatisfactory,
            || format!("{kind} classes"),
        )?;
    }
    ensure(
        approx_decimal(&d1.rfam_point.x) == "1.97" && approx_decimal(&d2.rfam_point.x) == "2.16",
        || "RFAM x".into(),
    )?;
    ensure(
        d1.classification(ModelKind::Rfam) == PerformanceClass::LessThanSatisfactory
            && d2.classification(ModelKind::Rfam) == PerformanceClass::LessThanSatisfactory,
        || "RFAM classes".into(),
    )?;
    let reports = [d1, d2];
    for kind in ModelKind::ALL {
        let ranked = rank(&reports, kind).map_err(|e| e.to_string())?;
        ensure(
            ranked[0].group_id == "D2" && ranked[0].rank == 1 && ranked[1].rank == 2,
            || format!("{kind} ranking {ranked:?}"),
        )?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < EXAMPLE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("D2 ranked first by all five models ({elapsed:?})"))
}

// 3
fn linkage(pairs: &[(GradeCounts, GradeCounts)]) -> Check {
    let mut checked = 0;
    for c in pairs.iter().flat_map(|(a, b)| [a, b]) {
        let freq = FrequencyVector::from_counts(c);
        let gpa = gpa_from_counts(c).into_inner();
        let x = rfam_cog(&freq).x;
        ensure(x == &gpa + rat(1, 2), || {
            format!("RFAM linkage fails for {:?}", c.as_array())
        })?;
        for kind in ModelKind::VARIATIONS {
            let big_x = variation_cog(&freq, kind).unwrap().into_point().x;
            ensure(big_x == rat(7, 10) * &gpa + rat(1, 2), || {
                format!("{kind} linkage fails for {:?}", c.as_array())
            })?;
        }
        checked += 1;
    }
    ensure(checked >= 10_000, || format!("only {checked} vectors"))?;
    Ok(format!("{checked} vectors, 0 failures"))
}

fn pair_reports(pairs: &[(GradeCounts, GradeCounts)]) -> Vec<(AssessmentReport, AssessmentReport)> {
    Execution::default().map(pairs, |(a, b)| (assess("a", a), assess("b", b)))
}

// 4
fn variations_equivalent(reports: &[(AssessmentReport, AssessmentReport)]) -> Check {
    let mut ties = 0;
    for (a, b) in reports {
        let m = compare_pair(a, b).map_err(|e| e.to_string())?;
        let g = m.verdict(ModelKind::Grfam);
        for kind in [ModelKind::Tfam, ModelKind::Tpfam] {
            let v = m.verdict(kind);
            ensure((v.outcome, v.branch) == (g.outcome, g.branch), || {
                format!(
                    "{kind} {:?} vs GRFAM {:?} on {:?} / {:?}",
                    v, g, a.counts, b.counts
                )
            })?;
        }
        ties += usize::from(matches!(
            g.branch,
            Branch::TieHighRegion | Branch::TieLowRegion
        ));
    }
    Ok(format!(
        "{} pairs ({ties} decided on y), 0 failures",
        reports.len()
    ))
}

// 5
fn fuzzy_agreement(reports: &[(AssessmentReport, AssessmentReport)]) -> Check {
    for (a, b) in reports {
        let m = compare_pair(a, b).map_err(|e| e.to_string())?;
        let rfam = m.verdict(ModelKind::Rfam).outcome;
        for kind in ModelKind::VARIATIONS {
            ensure(m.verdict(kind).outcome == rfam, || {
                format!(
                    "{kind} disagrees with RFAM on {:?} / {:?}",
                    a.counts, b.counts
                )
            })?;
        }
        ensure(m.fuzzy_internal, || "fuzzy_internal false".into())?;
    }
    Ok(format!("{} pairs, 0 failures", reports.len()))
}

// 6
fn pivot_exclusion() -> Check {
    let mut cohorts = Vec::new();
    for total in 1..=SMALL_N {
        for f in 0..=total {
            for d in 0..=total - f {
                for c in 0..=total - f - d {
                    for b in 0..=total - f - d - c {
                        cohorts.push(counts([f, d, c, b, total - f - d - c - b]));
                    }
                }
            }
        }
    }
    let reports = Execution::default().map(&cohorts, |c| assess("g", c));
    let mut by_gpa: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
    for (i, r) in reports.iter().enumerate() {
        by_gpa.entry(r.gpa.value().clone()).or_default().push(i);
    }
    let classes: Vec<Vec<usize>> = by_gpa.into_values().filter(|v| v.len() > 1).collect();
    let squares: Vec<Rational> = cohorts.iter().map(sum_sq).collect();
    let results = Execution::default().map(&classes, |class| -> Result<usize, String> {
        let mut pairs = 0;
        for (k, &i) in class.iter().enumerate() {
            for &j in &class[k + 1..] {
                let (a, b) = (&reports[i], &reports[j]);
                let big_x = &a.point(ModelKind::Grfam).unwrap().x;
                let x = &a.rfam_point.x;
                let high_var = *big_x >= rat(19, 10);
                let high_rfam = *x >= rat(5, 2);
                if high_var != high_rfam {
                    return Err(format!("pivot straddle: X = {big_x}, x = {x}"));
                }
                // Expected verdict from Σy² alone.
                let expected = match squares[i].cmp(&squares[j]) {
                    std::cmp::Ordering::Equal => Outcome::Equivalent,
                    std::cmp::Ordering::Greater if high_var => Outcome::FirstBetter,
                    std::cmp::Ordering::Greater => Outcome::SecondBetter,
                    std::cmp::Ordering::Less if high_var => Outcome::SecondBetter,
                    std::cmp::Ordering::Less => Outcome::FirstBetter,
                };
                let m = compare_pair(a, b).map_err(|e| e.to_string())?;
                for kind in ModelKind::FUZZY {
                    if m.verdict(kind).outcome != expected {
                        return Err(format!(
                            "{kind} gives {} but Σy² gives {expected} for {:?} / {:?}",
                            m.verdict(kind).outcome,
                            a.counts.as_array(),
                            b.counts.as_array()
                        ));
                    }
                }
                pairs += 1;
            }
        }
        Ok(pairs)
    });
    let mut pairs = 0;
    for r in results {
        pairs += r?;
    }
    Ok(format!(
        "{} cohorts, {pairs} equal-GPA pairs, no straddle",
        cohorts.len()
    ))
}

// 7
fn satisfactory_remark(pairs: &[(GradeCounts, GradeCounts)]) -> Check {
    let mut above = 0;
    for c in pairs.iter().flat_map(|(a, b)| [a, b]) {
        let r = assess("g", c);
        if *r.gpa.value() > int(2) {
            above += 1;
            for kind in ModelKind::ALL {
                ensure(
                    r.classification(kind) == PerformanceClass::MoreThanSatisfactory,
                    || format!("{kind} class {} at GPA {}", r.classification(kind), r.gpa),
                )?;
            }
        }
    }
    let d2 = assess("D2", &counts([5, 10, 13, 6, 1]));
    ensure(*d2.gpa.value() < int(2), || "D2 GPA".into())?;
    ensure(
        d2.classification(ModelKind::Rfam) != d2.classification(ModelKind::Grfam),
        || "D2 classes do not diverge".into(),
    )?;
    Ok(format!(
        "{above} vectors with GPA > 2 all above threshold; D2 diverges"
    ))
}

// 8
fn landmarks() -> Check {
    let l = landmark_points(ModelKind::Grfam).map_err(|e| e.to_string())?;
    ensure(l.worst == CogPoint::new(rat(1, 2), rat(1, 2)), || {
        format!("F_w {}", l.worst)
    })?;
    ensure(
        l.minimum_y == CogPoint::new(rat(19, 10), rat(1, 10)),
        || format!("F_m {}", l.minimum_y),
    )?;
    ensure(l.ideal == CogPoint::new(rat(33, 10), rat(1, 2)), || {
        format!("F_i {}", l.ideal)
    })?;
    let direct = |f: FrequencyVector| variation_cog(&f, ModelKind::Grfam).unwrap().into_point();
    ensure(
        direct(FrequencyVector::point_mass(GradeLabel::F)) == l.worst,
        || "worst".into(),
    )?;
    ensure(direct(FrequencyVector::uniform()) == l.minimum_y, || {
        "uniform".into()
    })?;
    ensure(
        direct(FrequencyVector::point_mass(GradeLabel::A)) == l.ideal,
        || "ideal".into(),
    )?;
    Ok("F_w(1/2, 1/2), F_m(19/10, 1/10), F_i(33/10, 1/2)".into())
}

// 9
fn oracle_agreement() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x0ac1e);
    let freqs: Vec<FrequencyVector> = (0..ORACLE_VECTORS)
        .map(|_| FrequencyVector::from_counts(&random_cohort(&mut rng, MAX_N)))
        .collect();
    for f in &freqs {
        for kind in ModelKind::FUZZY {
            let r = verify_closed_form(f, kind).map_err(|e| e.to_string())?;
            ensure(r.x_matches, || format!("{kind} x mismatch"))?;
            match kind {
                ModelKind::Tfam => {
                    ensure(r.y_ratio == rat(5, 3), || {
                        format!("TFAM ratio {}", r.y_ratio)
                    })?;
                    ensure(r.deviation == Deviation::Expected, || {
                        "TFAM not flagged expected".into()
                    })?;
                    ensure(r.geometric.y == rat(1, 3) * f.sum_of_squares(), || {
                        "TFAM geometric y".into()
                    })?;
                }
                _ => {
                    ensure(r.y_matches, || format!("{kind} y mismatch"))?;
                    ensure(r.deviation == Deviation::None, || {
                        format!("{kind} deviation")
                    })?;
                }
            }
        }
    }
    let mut worst = 0.0f64;
    for f in &freqs[..INTEGRATION_VECTORS] {
        for kind in ModelKind::FUZZY {
            let fig = build_figure(f, kind).map_err(|e| e.to_string())?;
            let exact = composite_centroid(&fig).map_err(|e| e.to_string())?;
            let approx = integration_centroid(&fig, RESOLUTION, Execution::default())
                .map_err(|e| e.to_string())?;
            let err = approx.max_abs_error(&exact);
            worst = worst.max(err);
            ensure(err < INTEGRATION_TOLERANCE, || {
                format!("{kind} integration error {err:e}")
            })?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < ORACLE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{ORACLE_VECTORS} exact, {INTEGRATION_VECTORS}×4 integrated (max error {worst:.2e}), TFAM ratio 5/3 ({elapsed:?})"
    ))
}

// 10
fn sum_of_squares_bound(pairs: &[(GradeCounts, GradeCounts)]) -> Check {
    let fifth = rat(1, 5);
    let mut equalities = 0;
    for c in pairs.iter().flat_map(|(a, b)| [a, b]) {
        let s = FrequencyVector::from_counts(c).sum_of_squares();
        ensure(s >= fifth, || format!("Σy² = {s} < 1/5"))?;
        let arr = c.as_array();
        let uniform = arr.iter().all(|&k| k == arr[0]);
        ensure((s == fifth) == uniform, || {
            format!("equality mismatch at {arr:?}")
        })?;
        equalities += usize::from(uniform);
    }
    let u = FrequencyVector::uniform().sum_of_squares();
    ensure(u == fifth, || format!("uniform Σy² = {u}"))?;
    ensure(
        FrequencyVector::from_counts(&counts([7, 7, 7, 7, 7])).sum_of_squares() == fifth,
        || "uniform counts".into(),
    )?;
    Ok(format!(
        "bound holds; equality only at uniform ({equalities} random hits)"
    ))
}

type Criterion<'a> = Box<dyn Fn() -> Check + 'a>;

fn main() -> ExitCode {
    let pairs = random_pairs();
    let reports = pair_reports(&pairs);

    let criteria: Vec<(&str, Criterion<'_>)> = vec![
        ("AC1 equal-GPA classes", Box::new(example_equal_gpa)),
        ("AC2 two departments", Box::new(example_departments)),
        ("AC3 linkage identities", Box::new(|| linkage(&pairs))),
        (
            "AC4 variations equivalent",
            Box::new(|| variations_equivalent(&reports)),
        ),
        (
            "AC5 fuzzy models agree",
            Box::new(|| fuzzy_agreement(&reports)),
        ),
        ("AC6 pivot exclusion scan", Box::new(pivot_exclusion)),
        (
            "AC7 satisfactory remark",
            Box::new(|| satisfactory_remark(&pairs)),
        ),
        ("AC8 landmark points", Box::new(landmarks)),
        ("AC9 oracle agreement", Box::new(oracle_agreement)),
        (
            "AC10 sum-of-squares bound",
            Box::new(|| sum_of_squares_bound(&pairs)),
        ),
    ];

    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use std::fmt;

use crate::error::InputError;
use crate::types::GradeLabel;

/// Inclusive integer score bands for F, D, C, B, A that partition `0..=100`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradeBoundaries {
    bands: [(u8, u8); 5],
}

impl Default for GradeBoundaries {
    /// F 0-49, D 50-59, C 60-74, B 75-84, A 85-100.
    fn default() -> Self {
        GradeBoundaries {
            bands: [(0, 49), (50, 59), (60, 74), (75, 84), (85, 100)],
        }
    }
}

impl GradeBoundaries {
    /// Bands in F..A order. They must cover `0..=100` without gaps or
    /// overlaps, in ascending order.
    pub fn new(bands: [(u8, u8); 5]) -> Result<Self, InputError> {
        let err = |msg: String| Err(InputError::Boundaries(msg));
        if bands[0].0 != 0 {
            return err(format!("F must start at 0, not {}", bands[0].0));
        }
        if bands[4].1 != 100 {
            return err(format!("A must end at 100, not {}", bands[4].1));
        }
        for (label, &(lo, hi)) in GradeLabel::ALL.iter().zip(&bands) {
            if lo > hi {
                return err(format!("{label} band {lo}-{hi} is empty"));
            }
        }
        for (i, pair) in bands.windows(2).enumerate() {
            let (prev, next) = (pair[0], pair[1]);
            if u16::from(next.0) != u16::from(prev.1) + 1 {
                return err(format!(
                    "{} band ends at {} but {} band starts at {}",
                    GradeLabel::ALL[i],
                    prev.1,
                    GradeLabel::ALL[i + 1],
                    next.0
                ));
            }
        }
        Ok(GradeBoundaries { bands })
    }

    pub fn band(&self, label: GradeLabel) -> (u8, u8) {
        self.bands[label.index() - 1]
    }

    /// Parse `label,lo,hi` lines. Blank lines, `#` comments and a header
    /// line are skipped; each label must appear exactly once.
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let mut bands: [Option<(u8, u8)>; 5] = [None; 5];
        let mut seen_data = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = (idx + 1) as u64;
            let row_err = |message: String| InputError::Row { line, message };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split(',').map(str::trim).collect();
            if fields.len() != 3 {
                return Err(row_err(format!(
                    "expected `label,lo,hi`, got {} fields",
                    fields.len()
                )));
            }
            if !seen_data && fields[1].parse::<i64>().is_err() {
                // header
                seen_data = true;
                continue;
            }
            seen_data = true;
            let label: GradeLabel = fields[0].parse().map_err(row_err)?;
            let bound = |s: &str| {
                s.parse::<u8>()
                    .ok()
                    .filter(|v| *v <= 100)
                    .ok_or_else(|| row_err(format!("bound {s:?} is not an integer in 0..=100")))
            };
            let (lo, hi) = (bound(fields[1])?, bound(fields[2])?);
            let slot = &mut bands[label.index() - 1];
            if slot.is_some() {
                return Err(row_err(format!("grade {label} listed twice")));
            }
            *slot = Some((lo, hi));
        }
        let mut out = [(0u8, 0u8); 5];
        for (label, (o, b)) in GradeLabel::ALL.iter().zip(out.iter_mut().zip(bands)) {
            *o = b.ok_or_else(|| InputError::Boundaries(format!("grade {label} missing")))?;
        }
        GradeBoundaries::new(out)
    }

    pub fn label_for(&self, score: i64) -> Option<GradeLabel> {
        GradeLabel::ALL
            .into_iter()
            .zip(self.bands)
            .find(|(_, (lo, hi))| (i64::from(*lo)..=i64::from(*hi)).contains(&score))
            .map(|(label, _)| label)
    }
}

impl fmt::Display for GradeBoundaries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (label, (lo, hi)) in GradeLabel::ALL.iter().zip(self.bands).rev() {
            writeln!(f, "{label},{lo},{hi}")?;
        }
        Ok(())
    }
}

/// Grade band containing `score`.
pub fn map_score_to_label(
    score: i64,
    boundaries: &GradeBoundaries,
) -> Result<GradeLabel, InputError> {
    boundaries
        .label_for(score)
        .ok_or(InputError::ScoreOutOfRange { score })
}

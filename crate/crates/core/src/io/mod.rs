//! Roster and count-table ingestion, grade boundaries, and report
//! rendering.

mod boundaries;
mod parse;
mod render;

pub use boundaries::{map_score_to_label, GradeBoundaries};
pub use parse::{parse_counts, parse_scores, write_counts_csv, GroupCounts};
pub use render::{
    approx_decimal, render_ranking, render_report, render_verification, OutputFormat,
    VerificationSummary,
};

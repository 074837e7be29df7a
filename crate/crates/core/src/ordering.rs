//! The COG comparison criterion shared by RFAM and the variations.
//!
//! Greater x wins. At equal x, the group on or above the pivot with the
//! greater y wins, below the pivot the one with the lower y. This is
//! lexicographic order on `(x, ±y)` where the sign depends only on x, so it
//! is a total preorder.

use std::cmp::Ordering;

use crate::types::{Branch, CogPoint, ComparisonVerdict, ModelKind, Outcome, Rational};

/// How `first` ranks against `second`; `Greater` means `first` performs
/// better.
pub fn performance_ordering(first: &CogPoint, second: &CogPoint, pivot: &Rational) -> Ordering {
    first.x.cmp(&second.x).then_with(|| {
        if &first.x >= pivot {
            first.y.cmp(&second.y)
        } else {
            second.y.cmp(&first.y)
        }
    })
}

pub(crate) fn compare_with_pivot(
    first: &CogPoint,
    second: &CogPoint,
    pivot: &Rational,
    model: ModelKind,
) -> ComparisonVerdict {
    let branch = if first.x != second.x {
        Branch::PrimaryXDiffers
    } else if first.y == second.y {
        Branch::FullTie
    } else if &first.x >= pivot {
        Branch::TieHighRegion
    } else {
        Branch::TieLowRegion
    };
    let outcome = match performance_ordering(first, second, pivot) {
        Ordering::Greater => Outcome::FirstBetter,
        Ordering::Less => Outcome::SecondBetter,
        Ordering::Equal => Outcome::Equivalent,
    };
    ComparisonVerdict {
        outcome,
        branch,
        model,
    }
}

/// Plain comparison of two scalars, used for GPA where there is no
/// secondary criterion.
pub(crate) fn compare_scalar(
    first: &Rational,
    second: &Rational,
    model: ModelKind,
) -> ComparisonVerdict {
    let (outcome, branch) = match first.cmp(second) {
        Ordering::Greater => (Outcome::FirstBetter, Branch::PrimaryXDiffers),
        Ordering::Less => (Outcome::SecondBetter, Branch::PrimaryXDiffers),
        Ordering::Equal => (Outcome::Equivalent, Branch::FullTie),
    };
    ComparisonVerdict {
        outcome,
        branch,
        model,
    }
}

//! Geometric oracle for the closed-form COG formulas.
//!
//! Each model's membership figure is rebuilt as explicit shapes. Its center
//! of gravity is then computed twice, independently of the closed forms:
//!
//! * exactly, as the area-weighted resultant of the per-shape centroids;
//! * approximately, by brute-force midpoint-rule double integration of
//!   `∬x dA`, `∬y dA` and `∬dA` over every shape.
//!
//! Overlapping shapes are never unioned. Each shape contributes its full
//! area, so the common parts of neighbouring grades are counted twice.

use num::{ToPrimitive, Zero};

use crate::error::AssessError;
use crate::exec::Execution;
use crate::rfam::rfam_cog;
use crate::types::{int, rat, CogPoint, FrequencyVector, ModelKind, Rational};
use crate::variations::variation_cog;

/// Smallest accepted integration resolution.
pub const MIN_RESOLUTION: usize = 100;

/// Trapezoid top width as a fraction of its base.
pub fn trapezoid_top_ratio() -> Rational {
    rat(2, 5)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    Rectangle,
    IsoscelesTriangle,
    IsoscelesTrapezoid,
}

impl ShapeKind {
    fn for_model(kind: ModelKind) -> Option<Self> {
        match kind {
            ModelKind::Gpa => None,
            ModelKind::Rfam | ModelKind::Grfam => Some(ShapeKind::Rectangle),
            ModelKind::Tfam => Some(ShapeKind::IsoscelesTriangle),
            ModelKind::Tpfam => Some(ShapeKind::IsoscelesTrapezoid),
        }
    }
}

/// A shape standing on the x-axis, symmetric about the midpoint of its base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometryShape {
    pub kind: ShapeKind,
    pub base_lo: Rational,
    pub base_hi: Rational,
    /// 0 for a triangle, the base width for a rectangle.
    pub top_width: Rational,
    pub height: Rational,
}

impl GeometryShape {
    pub fn new(kind: ShapeKind, base_lo: Rational, base_hi: Rational, height: Rational) -> Self {
        let width = &base_hi - &base_lo;
        let top_width = match kind {
            ShapeKind::Rectangle => width,
            ShapeKind::IsoscelesTriangle => Rational::zero(),
            ShapeKind::IsoscelesTrapezoid => width * trapezoid_top_ratio(),
        };
        GeometryShape {
            kind,
            base_lo,
            base_hi,
            top_width,
            height,
        }
    }

    pub fn base_width(&self) -> Rational {
        &self.base_hi - &self.base_lo
    }

    pub fn area(&self) -> Rational {
        match self.kind {
            ShapeKind::Rectangle => self.base_width() * &self.height,
            ShapeKind::IsoscelesTriangle => self.base_width() * &self.height * rat(1, 2),
            ShapeKind::IsoscelesTrapezoid => {
                (&self.top_width + self.base_width()) * rat(1, 2) * &self.height
            }
        }
    }

    /// Centroid of the shape on its own.
    pub fn centroid(&self) -> CogPoint {
        let x = (&self.base_lo + &self.base_hi) * rat(1, 2);
        let y = match self.kind {
            // intersection of the diagonals
            ShapeKind::Rectangle => &self.height * rat(1, 2),
            ShapeKind::IsoscelesTriangle => &self.height * rat(1, 3),
            // d = h(2a + b) / (3(a + b)) from the longer side b
            ShapeKind::IsoscelesTrapezoid => {
                let a = &self.top_width;
                let b = self.base_width();
                &self.height * (a * int(2) + &b) / ((a + &b) * int(3))
            }
        };
        CogPoint::new(x, y)
    }

    /// Upper edge of the shape at abscissa `x`, in floating point.
    fn profile(&self, x: f64) -> f64 {
        let lo = to_f64(&self.base_lo);
        let hi = to_f64(&self.base_hi);
        let h = to_f64(&self.height);
        let half_base = (hi - lo) / 2.0;
        let half_top = to_f64(&self.top_width) / 2.0;
        let offset = (x - (lo + hi) / 2.0).abs();
        if offset <= half_top {
            h
        } else if offset >= half_base {
            0.0
        } else {
            h * (half_base - offset) / (half_base - half_top)
        }
    }
}

/// The five shapes of one model's membership graph, F first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometryFigure {
    pub model: ModelKind,
    pub shapes: Vec<GeometryShape>,
}

/// Build the membership figure of `kind` for `freq`. Heights are the
/// frequencies; zero-height shapes are kept.
///
/// RFAM uses unit rectangles on `[i-1, i]`. The variations use width-1
/// bases on `[0.7i - 0.7, 0.7i + 0.3]`, centered at `0.7i - 0.2`.
pub fn build_figure(
    freq: &FrequencyVector,
    kind: ModelKind,
) -> Result<GeometryFigure, AssessError> {
    let shape_kind = ShapeKind::for_model(kind).ok_or(AssessError::NoGeometry)?;
    let shapes = freq
        .values()
        .iter()
        .zip(1i64..)
        .map(|(height, i)| {
            let (lo, hi) = if kind == ModelKind::Rfam {
                (int(i - 1), int(i))
            } else {
                (rat(7 * i - 7, 10), rat(7 * i + 3, 10))
            };
            GeometryShape::new(shape_kind, lo, hi, height.clone())
        })
        .collect();
    Ok(GeometryFigure {
        model: kind,
        shapes,
    })
}

/// Exact area-weighted resultant of the shape centroids.
pub fn composite_centroid(figure: &GeometryFigure) -> Result<CogPoint, AssessError> {
    let mut total = Rational::zero();
    let mut moment_x = Rational::zero();
    let mut moment_y = Rational::zero();
    for shape in &figure.shapes {
        let area = shape.area();
        let c = shape.centroid();
        moment_x += &area * c.x;
        moment_y += &area * c.y;
        total += area;
    }
    if total.is_zero() {
        return Err(AssessError::ZeroArea);
    }
    Ok(CogPoint::new(moment_x / &total, moment_y / total))
}

/// Floating-point centroid from numeric integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxPoint {
    pub x: f64,
    pub y: f64,
}

impl ApproxPoint {
    /// Largest coordinate-wise distance to an exact point.
    pub fn max_abs_error(&self, exact: &CogPoint) -> f64 {
        (self.x - to_f64(&exact.x))
            .abs()
            .max((self.y - to_f64(&exact.y)).abs())
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct Moments {
    area: f64,
    x: f64,
    y: f64,
}

/// Midpoint rule over a `resolution × resolution` grid mapped onto the
/// region under the shape: `resolution` columns across the base, each
/// split into `resolution` cells from 0 up to the profile height at the
/// column midpoint.
fn integrate_shape(shape: &GeometryShape, resolution: usize) -> Moments {
    let mut m = Moments::default();
    if shape.height.is_zero() {
        return m;
    }
    let lo = to_f64(&shape.base_lo);
    let dx = to_f64(&shape.base_width()) / resolution as f64;
    for i in 0..resolution {
        let x = lo + (i as f64 + 0.5) * dx;
        let top = shape.profile(x);
        if top <= 0.0 {
            continue;
        }
        let dy = top / resolution as f64;
        let cell = dx * dy;
        for j in 0..resolution {
            let y = (j as f64 + 0.5) * dy;
            m.area += cell;
            m.x += x * cell;
            m.y += y * cell;
        }
    }
    m
}

/// Numeric COG of `figure`, integrating each shape separately (in parallel
/// under [`Execution::Parallel`]) and summing the moments.
pub fn integration_centroid(
    figure: &GeometryFigure,
    resolution: usize,
    exec: Execution,
) -> Result<ApproxPoint, AssessError> {
    if resolution < MIN_RESOLUTION {
        return Err(AssessError::ResolutionTooLow {
            min: MIN_RESOLUTION,
            got: resolution,
        });
    }
    let parts = exec.map(&figure.shapes, |s| integrate_shape(s, resolution));
    let total = parts.iter().fold(Moments::default(), |acc, m| Moments {
        area: acc.area + m.area,
        x: acc.x + m.x,
        y: acc.y + m.y,
    });
    if total.area <= 0.0 {
        return Err(AssessError::ZeroArea);
    }
    Ok(ApproxPoint {
        x: total.x / total.area,
        y: total.y / total.area,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Deviation {
    /// Closed form and geometry agree exactly.
    None,
    /// The y-coordinates differ by the documented coefficient ratio.
    Expected,
    /// Anything else. Indicates a bug.
    Unexpected,
}

/// Closed-form COG versus the exact composite centroid of the figure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub model: ModelKind,
    pub closed_form: CogPoint,
    pub geometric: CogPoint,
    pub x_matches: bool,
    pub y_matches: bool,
    /// geometric y / closed-form y
    pub y_ratio: Rational,
    pub expected_y_ratio: Rational,
    pub deviation: Deviation,
}

/// Known ratio between the geometric and closed-form y-coefficients.
///
/// Isosceles triangles put each centroid at a third of the height, giving
/// `Y = (1/3)Σ y_i²` against the published `1/5`. All other models agree.
pub fn expected_y_ratio(kind: ModelKind) -> Rational {
    match kind {
        ModelKind::Tfam => rat(5, 3),
        _ => int(1),
    }
}

pub fn closed_form_cog(freq: &FrequencyVector, kind: ModelKind) -> Result<CogPoint, AssessError> {
    match kind {
        ModelKind::Gpa => Err(AssessError::NoGeometry),
        ModelKind::Rfam => Ok(rfam_cog(freq)),
        _ => variation_cog(freq, kind).map(|p| p.into_point()),
    }
}

pub fn verify_closed_form(
    freq: &FrequencyVector,
    kind: ModelKind,
) -> Result<VerificationReport, AssessError> {
    let closed_form = closed_form_cog(freq, kind)?;
    let geometric = composite_centroid(&build_figure(freq, kind)?)?;
    let x_matches = closed_form.x == geometric.x;
    let y_matches = closed_form.y == geometric.y;
    // Σ y_i² ≥ 1/5, so the closed-form y is never zero.
    let y_ratio = &geometric.y / &closed_form.y;
    let expected = expected_y_ratio(kind);
    let deviation = if !x_matches || y_ratio != expected {
        Deviation::Unexpected
    } else if y_matches {
        Deviation::None
    } else {
        Deviation::Expected
    };
    Ok(VerificationReport {
        model: kind,
        closed_form,
        geometric,
        x_matches,
        y_matches,
        y_ratio,
        expected_y_ratio: expected,
        deviation,
    })
}

pub(crate) fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

//! Explicit cubic surfaces: normal form along two skew lines, the pair
//! `(F5, F2)`, and the blow-up of six points.

pub mod analyze;
pub mod cubic;
pub mod linalg;
pub mod mpoly;
pub mod normalize;
pub mod points;

pub use analyze::{analyze, analyze_pair, stratum_label, AnalysisReport};
pub use cubic::{contains_line, monomial_names, CubicForm, ProjLine};
pub use normalize::{bordered_determinant, extract_f5_f2, normalize, NormalizedCubic};
pub use points::{check_general_position, cubic_from_points, random_general_points, BlowUp, LineImage, PlanePoint};

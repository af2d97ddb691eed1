//! Binary forms over Q and the GIT analysis of pairs `(F5, F2)`.

mod cases;
pub mod construct;
mod form;
mod poly;
mod profile;
mod stability;

pub use cases::{
    classify_case, is_cusp_configuration, match_profile, CaseId, CaseRow, PairCase, CUSP_SHAPE,
    TABLE,
};
pub use form::BinaryForm;
pub use poly::Poly;
pub use profile::{root_profile, PointClass, RootProfile};
pub use stability::{
    stability, verdict_for_weight, Stability, StabilityVerdict, Witness, SEMISTABLE_MAX_WEIGHT,
    STABLE_MAX_WEIGHT,
};

//! The quadratic space `F_3^5`, its orthogonal groups, and orbit counts.

mod group;
mod orbits;
mod space;
mod strata;

pub use group::{
    apply, det, generate_o, generate_so, identity, is_isometry, minus_identity, mul, pack,
    preserves_norm_classes,
    reflection, unpack, wd5_subgroup, Mat, MatrixGroup, CLOSURE_BOUND,
};
pub use orbits::{
    act, canonical_set, cusp_count, cusp_report, from_signed, orbits, orthogonal_short_sets,
    reference_representatives, so_group, so_transitive_on_norm_classes, wd5_group,
    wd5_orbits_on_short, we6_stabilizer, we6_stabilizer_orders, CuspReport, KSet, Orbit,
    OrbitReport, StabilizerReport,
};
pub use space::{
    add, all_vectors, bilinear, canonical_class, classes, dot, fmt_vec, norm_census, norm_class,
    parse_vec, q_value, signed, weight, F3Vec, NormCensus, NormClass, DIM,
};
pub use strata::{strata, strata_report, stratum_index, stratum_of_case, Stratum, StrataReport};

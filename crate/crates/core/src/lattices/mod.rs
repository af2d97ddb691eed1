//! Integral lattices, discriminant forms and the Picard-lattice table.

mod fqf;
pub mod intmat;
mod isometry;
mod lattice;
pub mod named;
mod short;
mod table2;

pub use fqf::{discriminant_form, discriminant_group, DiscriminantGroup, FiniteQuadraticForm};
pub use isometry::{
    canonical_data, fqf_isometric, DeciderRegistry, ElementaryOdd, Enumeration, IsometryDecider,
};
pub use lattice::{inertia, rational_pairing, IntegralLattice};
pub use named::{named_lattice, parse_lattice};
pub use short::{short_vectors, short_vectors_orthogonal};
pub use table2::{
    picard_row, shioda_tate_check, table2_verify, verify_row, ShiodaTateReport, Table2RowReport,
    PICARD_TABLE,
};

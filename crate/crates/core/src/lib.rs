//! Exact computations for nodal cubic surfaces with a pair of skew lines:
//! the binary forms `(F5, F2)` they determine, the elliptic K3 surfaces
//! attached to them, and the lattice and Weyl-group combinatorics behind
//! their moduli.

pub mod binforms;
pub mod cubio;
pub mod e6lines;
pub mod eisenstein;
pub mod error;
pub mod f3orbits;
pub mod kodaira;
pub mod lattices;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};

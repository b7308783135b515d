//! Cut vectors, the facet description of the cut cone, and membership tests
//! for the lattice group, the cone and its interior.

mod cut;
mod facets;
mod lattice;
mod membership;
mod point;

pub use cut::{cut_vector, enumerate_cut_vectors, CutVector, MAX_CUT_VERTICES};
pub use facets::{facet_system, BoxRow, BoxSense, CycleRow, FacetSystem, Row};
pub use lattice::{lattice_points_at_degree, LatticeEnumerator};
pub use membership::{in_cone, in_group, verify_positive_combination};
pub use point::LatticePoint;

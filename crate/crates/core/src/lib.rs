//! Exact computations with cut polytopes of graphs.
//!
//! The crate covers the graph machinery (cycles, minors, clique-sums), the
//! facet description of the cut cone for `K5`-minor-free graphs, membership
//! in the cut monoid, bounded normality probes, canonical-module generators
//! and Castelnuovo–Mumford regularity read off from the smallest interior
//! degree.

pub mod error;
pub mod geometry;
pub mod graph;
pub mod monoid;
pub mod regularity;

pub use error::{Error, Result};
pub use geometry::{CutVector, FacetSystem, LatticePoint};
pub use graph::{Cycle, Family, Graph, MinorPattern, StructuralPredicates};
pub use monoid::{Decomposition, NormalityVerdict};
pub use regularity::RegularityReport;

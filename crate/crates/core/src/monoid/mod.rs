//! The cut monoid `M_G`: membership by decomposition, bounded normality
//! probes, canonical-module generators and the non-seminormality witness.

mod canonical;
mod decompose;
mod normality;
mod transfer;
mod witness;

pub use canonical::{
    canonical_generators, is_gorenstein_normal, min_interior_degree, CanonicalGeneratorSet,
    GorensteinCriterion, GorensteinStatus,
};
pub use decompose::{decompose, CutMonoid, Decomposition};
pub use normality::{normality_probe, GapWitness, NormalityStatus, NormalityVerdict};
pub use transfer::{cliquesum_generator_transfer, TransferPrediction, TransferRule};
pub use witness::{verify_seminormality_witness, GroupTerm, SeminormalityWitness};

//! Spin multipartitions for the twisted affine algebra A(2)_2n.
//!
//! The crate covers the weight lattice ([`cartan`]), the block-reduced crystal
//! of weights ([`reduced`]), spin residues on partitions ([`partition`]), the
//! `i`-signature with its `±` pairing and the crystal operators
//! ([`signature`]), and the multipartition crystal together with a harness
//! that cross-checks it against the reduced crystal ([`crystal`]).

pub mod cartan;
pub mod crystal;
pub mod error;
pub mod export;
pub mod multipartition;
pub mod partition;
pub mod reduced;
pub mod signature;

pub use cartan::{CartanContext, FullWeight, Hub, Rational, WeightContent};
pub use crystal::{
    addable_count, saturate, verify, verify_slice, walkthrough, CheckKind, CheckResult,
    CheckStatus, Counterexample, CrystalEdge, CrystalGraph, TieWarning, VerificationReport,
    WalkStep,
};
pub use error::{Error, Result};
pub use multipartition::SpinMultipartition;
pub use partition::{
    addable_set, hat, is_h_restricted, is_h_strict, removable_set, residue, CornerPartition, Node,
    NodeRun, NodeSelection, Partition, RunKind, SpinRules, Variant, ZeroCornerSets,
};
pub use reduced::{Edge, OrbitSlice, ReducedCrystal, VertexData};
pub use signature::{
    apply_e, apply_f, build_signature, epsilon, phi, reduce, reduce_with_order, Mark, Signature,
    Symbol,
};

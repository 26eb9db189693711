//! Clustering fingerprint vectors with missing values.
//!
//! A fingerprint is a vector over `{0, 1, N}`, where `N` marks an unknown
//! entry. Two fingerprints are compatible when they agree wherever both are
//! known, and a valid clustering groups only pairwise compatible
//! fingerprints. Three objectives are supported: fewest clusters (CMV),
//! most compatible pairs inside clusters (IECMV) and fewest compatible pairs
//! split between clusters (OECMV).
//!
//! [`greedy::greedy_cluster`] is a 2-approximation for IECMV and OECMV when
//! the number of `N`s per fingerprint is bounded. The [`exact`] module holds
//! exhaustive oracles for checking that bound on small instances, and
//! [`gen`] builds test instances, including fingerprint encodings of vertex
//! cover on cubic graphs.

pub mod bench;
pub mod candidates;
pub mod error;
pub mod exact;
pub mod fingerprint;
pub mod gen;
pub mod greedy;
pub mod io;
pub mod objectives;
pub mod partition;

pub use candidates::{candidate_resolutions, Candidate};
pub use error::{Error, Result, Violation};
pub use fingerprint::{
    compatible, enumerate_resolutions, is_resolution, merge_resolution, Fingerprint, Instance,
    ResolvedVector, Symbol,
};
pub use greedy::{greedy_cluster, greedy_cluster_streamed, GreedyTrace, Pick};
pub use objectives::{evaluate, is_valid, total_compatible_pairs, validate, Evaluation, Objective};
pub use partition::{Cluster, Partition};

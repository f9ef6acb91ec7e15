//! Isoperimetric machinery for finite abelian groups.
//!
//! * [`group`]: groups `C_{m_1} ⊕ … ⊕ C_{m_n}`, dense subsets, generator sequences.
//! * [`boundary`]: directed Cayley-graph edge boundaries and the lower bounds on
//!   `|A|` they force.
//! * [`compression`]: stacking sets towards coset beginnings along independent
//!   generators, and the embedding of compressed sets into `Z^n_{>=0}`.
//! * [`downset`]: average weights, projections and the Loomis–Whitney type
//!   inequalities for finite lattice sets.
//! * [`popular`]: difference spectra, popular differences and exact
//!   independent/dissociated dimension search.
//! * [`harness`]: exhaustive and seeded verification plans, worked example
//!   builders, downset enumeration and reports.
//!
//! All verdicts use exact integer arithmetic.

pub mod boundary;
pub mod compression;
pub mod downset;
pub mod error;
pub mod exact;
pub mod group;
pub mod harness;
pub mod io;
pub mod popular;
pub mod verdict;

pub use error::{Error, Result};
pub use downset::LatticeSet;
pub use exact::Frac;
pub use group::{Element, GeneratorSeq, GroupSet, GroupSpec};
pub use verdict::{BoundCheck, Outcome};

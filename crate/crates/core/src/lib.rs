//! The absolute order on the classical reflection groups `S_n`, `B_n` and
//! `D_n`.
//!
//! Everything here is exact and allocation-only (`no_std` + `alloc`):
//!
//! * [`perm`]: signed permutations, cycle notation, reflections, Coxeter
//!   elements.
//! * [`order`]: comparability, covers, intervals, ideals, projections and
//!   fiber maps.
//! * [`invariants`]: Möbius function, zeta polynomial, chain counts and the
//!   closed-form invariant suites for `NC^B(n)`, `L_n` and `L(k, r)`.
//! * [`labeling`]: the edge labelings and the EL-property verifier.
//! * [`lattice`]: meets, joins and the hook-partition lattice criteria.
//! * [`topology`]: order complexes, rational homology and the
//!   Cohen-Macaulay link test.
//! * [`series`]: truncated power series over the rationals and the Euler
//!   characteristic generating functions.
//!
//! ```
//! use absorder_core::invariants::census;
//! use absorder_core::order::build_interval;
//! use absorder_core::{parse_cycles, GroupKind, SignedPerm};
//!
//! # fn main() -> absorder_core::Result<()> {
//! let b4 = GroupKind::b(4);
//! let top = parse_cycles("[1,2,3,4]", 4)?;
//! let ncb = build_interval(&SignedPerm::identity(4), &top, b4)?;
//! let report = census(ncb.poset());
//! assert_eq!(report.cardinality, 70.into());
//! assert_eq!(report.max_chains, Some(256.into()));
//! # Ok(())
//! # }
//! ```
#![no_std]

extern crate alloc;

pub mod error;
pub mod invariants;
pub mod labeling;
pub mod lattice;
pub mod order;
pub mod perm;
pub mod series;
pub mod topology;

pub use error::{Error, ParseErrorKind, Result};
pub use perm::{
    format_cycles, parse_cycles, Cycle, CycleDecomposition, CycleKind, Family, GroupKind, HookProfile, SignedPerm,
    MAX_RANK,
};

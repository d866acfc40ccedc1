//! Exact arithmetic for sets of at most three fat points in P¹×P¹ whose
//! support is an almost complete intersection (ACI): the two rulings through
//! a common point and a third point on one of them.
//!
//! The crate computes, over the bigraded ring `k[x0,x1,x2,x3]` with
//! `deg x0 = deg x1 = (1,0)` and `deg x2 = deg x3 = (0,1)`:
//!
//! * minimal bigraded free resolutions of the fat point ideal, both by the
//!   two-point base cases and a recursion on multiplicities ([`resolution`]);
//! * bigraded Betti numbers in closed form ([`resolution::betti_closed`]);
//! * Hilbert functions and their first differences, by three independent
//!   routes ([`hilbert`]);
//! * a brute-force verification path through explicit monomial ideal
//!   arithmetic and Taylor complex strand homology ([`oracle`]);
//! * the inverse interpolation problem: given a first-difference table,
//!   recover multiplicities realizing it or decide none exist ([`interp`]).
//!
//! Everything is integer arithmetic; there is no floating point anywhere.
//! All values are immutable after construction and all operations are pure
//! functions, so everything is safe to share across threads.
//!
//! Configurations are given as multiplicity triples `(m11, m12, m21)` of the
//! points P11, P12, P21 where P11 lies on both rulings. Formulas internally
//! assume the convention `m12 >= m21`; public entry points accept arbitrary
//! triples, normalize, and transpose results back, so callers never see the
//! convention.
//!
//! ```
//! use fatpoints_core::hilbert::{delta_table, hilbert_direct};
//! use fatpoints_core::interp::{interpolate, Verdict};
//! use fatpoints_core::resolution::betti_closed;
//! use fatpoints_core::types::FatPointConfig;
//!
//! let config = FatPointConfig::new(2, 5, 4)?;
//! let betti = betti_closed(config);
//! assert_eq!(betti.get(0, 6, 3), 4); // four generators in bidegree (6,3)
//!
//! // the scheme imposes deg = 28 conditions once the degree is large enough
//! assert_eq!(hilbert_direct(config, 9, 9), 28);
//!
//! // and its first-difference table is recognized by the inverse solver
//! let bound = config.stabilization_bound();
//! let table = delta_table(config, bound, bound)?;
//! assert_eq!(interpolate(&table).verdict, Verdict::IsHilbertFunction(config));
//! # Ok::<(), fatpoints_core::Error>(())
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod hilbert;
pub mod interp;
pub mod oracle;
pub mod phi;
pub mod resolution;
pub mod types;

pub use error::Error;
pub use types::{BettiTable, Bidegree, DeltaMatrix, FatPointConfig, FreeResolution};

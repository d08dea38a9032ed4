//! Exact computation of vertical 3-manifolds of simplified (2,0)-trisection
//! maps.
//!
//! The crate computes, over arbitrary-precision integers and rationals:
//!
//! - the algebra of curves and mapping classes on the reference torus fiber
//!   ([`torus`]);
//! - oriented lens spaces, the thickened-torus bridge construction, and
//!   connected-sum normal forms ([`lens`]);
//! - the six-tuple of vertical 3-manifolds attached to trisection
//!   vanishing-cycle data, its reflection symmetry, and the source
//!   4-manifold it determines ([`trisection`]);
//! - the connected-sum families all vertical 3-manifolds belong to, with a
//!   membership search ([`families`]);
//! - an exact arc engine over the fixed concentric-circle singular-value
//!   model: crossing words, cusp/bigon reduction, splitting, and evaluation
//!   ([`arc`]);
//! - surgery presentations, Smith normal form, and intersection-form
//!   classification for the 4-section construction ([`homology`]).
//!
//! Every runnable capability has an example under `examples/`; the `trivert`
//! binary exposes the same operations as subcommands.

pub mod arc;
pub mod families;
pub mod homology;
pub mod io;
pub mod lens;
pub mod svg;
pub mod torus;
pub mod trisection;

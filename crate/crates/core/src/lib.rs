//! Finite groupoids (binary systems) on `{0, .., n-1}`, the box product that
//! turns `Bin(X)` into a semigroup, and the center of that semigroup.
//!
//! Central groupoids are *locally-zero*: idempotent tables whose restriction
//! to every two-element subset is a left-zero or a right-zero semigroup.
//! Locally-zero groupoids are coordinatized by [`PairMask`], one L/R bit per
//! unordered pair, under which the box product becomes exclusive-or. The
//! [`verify`] module checks each claim about these objects by exhaustion or
//! seeded sampling and reports counterexamples where a claim fails.
//!
//! Exhaustive scans run on rayon when the `parallel` feature is enabled (the
//! default); every scan also has a sequential path selected through
//! [`Strategy`], and both produce identical results.

pub mod center;
mod error;
pub mod exec;
pub mod groupoid;
pub mod linear;
pub mod space;
pub mod text;
pub mod verify;

pub use center::{PairMask, SubtableKind};
pub use error::{Error, Result};
pub use exec::Strategy;
pub use groupoid::{box_product, Digraph, Groupoid, MAX_ORDER};
pub use linear::LinearCoeffs;
pub use verify::{Mode, TheoremId, TheoremReport, Verifier};

//! Bruhat order on parabolic double cosets of the symmetric group.
//!
//! The crate is organised bottom-up:
//!
//! * [`symgroup`]: permutations in one-line notation, generator subsets, enumeration.
//! * [`bruhat`]: the Bruhat-Chevalley order, covers and intervals, plus a subword oracle.
//! * [`parabolic`]: double cosets `W_I \ W / W_J`, their minimal and maximal
//!   representatives and the induced order.
//! * [`poset`]: a small finite-poset engine (transitive reduction, lattice test,
//!   isomorphism, shape catalogue, DOT/JSON output).
//! * [`weights`]: type-A weight orbits, the orbit order, dominance and tightness.
//! * [`spherical`]: the classification table of spherical pairs and the
//!   end-to-end verifier for the ladder-lattice theorem.

pub mod bruhat;
mod error;
pub mod parabolic;
pub mod poset;
pub mod spherical;
pub mod symgroup;
pub mod weights;

pub use error::{Error, Result};
pub use poset::{FinitePoset, ShapeClass, ShapeFamily};
pub use symgroup::{GenSet, Permutation, SymmetricGroup};
pub use weights::WeightVector;

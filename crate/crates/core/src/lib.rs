//! Numerical projective geometry over the real and complex fields.
//!
//! - [`projective`]: points and projective maps of `RPⁿ` / `CPⁿ`, affine
//!   charts and projective subspaces.
//! - [`grassmann`]: subspaces of `Fⁿ`, graph charts, the `GL(n)` action and
//!   the two dualities (Hermitian complement, bilinear annihilator).
//! - [`hopf_manifold`]: `Fⁿ \ {0}` modulo powers of a scalar `λ`, `|λ| > 1`.
//! - [`fibration`]: sphere-to-projective-space fibers, linking of Hopf
//!   circles, and Möbius transformations on `CP¹`.
//! - [`suite`]: seeded property suites over all of the above.
//!
//! Values are tagged with a [`Field`]; entries are stored as `Complex64`
//! with exactly zero imaginary part over `R`.

pub mod error;
pub mod fibration;
pub mod grassmann;
pub mod hopf_manifold;
pub mod numerics;
pub mod projective;
pub mod sample;
pub mod suite;

pub use error::{Error, Result};
pub use fibration::{ExtendedComplex, Mobius, SpherePoint};
pub use grassmann::{GraphChart, Subspace};
pub use hopf_manifold::{HopfPoint, ScaleGroup};
pub use numerics::{CMat, CVec, Field, Mat, Tolerance, C64};
pub use projective::{AffineChart, ProjMap, ProjPoint, ProjSubspace};

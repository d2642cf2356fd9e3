//! Exact boundary limits of matrix curves in `GL_n` over ℚ.
//!
//! Linear relations and their exterior powers, hinges and the hinge semigroup,
//! polynomial representations, limits of Laurent-polynomial families, the sea
//! urchin and its projections to projective compactifications.
//!
//! Each area has a runnable example:
//!
//! ```bash
//! cargo run --example relations
//! cargo run --example sea_urchin
//! ```

pub mod error;
pub mod exactla;

pub use error::{Error, HingeAxiom, Result};

pub mod checks;
pub mod cli;
pub mod exterior;
pub mod hinge;
pub mod merofam;
pub mod random;
pub mod relations;
pub mod reps;
pub mod urchin;
pub mod wire;

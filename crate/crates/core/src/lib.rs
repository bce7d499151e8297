//! Minimax single-facility location with Chebyshev and rectilinear distance,
//! solved exactly in max-plus algebra.
//!
//! The constrained problem
//!
//! ```text
//! minimise max_j (w_j · d(x, p_j) + h_j)
//! ```
//!
//! subject to distance caps, box bounds and difference constraints
//! `b_ik + x_k ≤ x_i` has a closed-form optimum and a complete description
//! of its optimal set as `{ B*u : u_lo ≤ u ≤ u_hi }`. Planar rectilinear
//! problems over a strip or a slanted band reduce to it by a 45° rotation.
//!
//! ```
//! use tropiloc::{chebyshev::ChebyshevInstance, TropMatrix};
//!
//! let inst = ChebyshevInstance {
//!     points: vec![vec![0.0, 0.0], vec![4.0, 0.0]],
//!     weights: vec![1.0, 1.0],
//!     addends: vec![0.0, 0.0],
//!     caps: vec![None, None],
//!     lower: vec![-10.0, -10.0],
//!     upper: vec![10.0, 10.0],
//!     constraints: TropMatrix::bottom(2, 2),
//! };
//! let sol = tropiloc::chebyshev::solve_particular(&inst).unwrap();
//! assert_eq!(sol.theta, 2.0);
//! ```

pub mod chebyshev;
pub mod error;
pub mod generate;
pub mod instance;
pub mod io;
pub mod linear;
pub mod matrix;
pub mod oracle;
pub mod rectilinear;
pub mod scalar;
pub mod solution;
pub mod svg;

pub use error::{Error, Result};
pub use instance::Instance;
pub use matrix::{TropMatrix, TropVector};
pub use scalar::MaxPlus;
pub use solution::{SolutionBox, Transform, VerificationReport};

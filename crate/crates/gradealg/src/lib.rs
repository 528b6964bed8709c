//! Exact-arithmetic toolkit for finite-dimensional group-graded algebras.
//!
//! The crate materializes group-graded structure-constant algebras over the
//! rationals and provides the machinery built on top of them:
//!
//! * [`linalg`] — exact rational linear algebra (RREF, Bareiss determinants,
//!   kernels, span tests); everything downstream reduces to it.
//! * [`group`] / [`algebra`] — finite abelian groups, graded algebras given by
//!   sparse structure constants, constructors (direct sums, trivially graded
//!   tensor factors, twisted group algebras, matrix-algebra fixtures), and a
//!   full axiom validator.
//! * [`grassmann`] — a bit-packed Grassmann kernel (blades as machine words,
//!   signs by popcount parity), sparse multivectors, materialization into
//!   structure constants, and the Grassmann envelope of a Z2-graded algebra.
//! * [`regularity`] — bicharacter extraction, decomposition matrices and
//!   minimality, k-regularity searches with witnesses, strong regularity.
//! * [`identities`] — multilinear graded polynomials, identity testing over
//!   basis tuples, and identity-space computation per degree pattern.
//! * [`structure`] — extraction of Grassmann subalgebras with verified
//!   isomorphisms, direct-system chains, embeddings, the Types I–IV
//!   classification of finitely generated graded subalgebras, and the
//!   variety-equivalence checker.
//!
//! All coefficients are exact rationals; no floating point anywhere. Search
//! kernels are data-parallel via rayon when the `parallel` feature (default)
//! is enabled and fall back to sequential loops otherwise; results are
//! deterministic either way. The `GRADEALG_THREADS` environment variable caps
//! the worker count.

pub mod algebra;
pub mod error;
pub mod exec;
pub mod grassmann;
pub mod group;
pub mod identities;
pub mod linalg;
pub mod map;
pub mod radical;
pub mod regularity;
pub mod scalar;
pub mod structure;

pub use algebra::{Element, GradedAlgebra, Subspace, ValidationReport};
pub use error::Error;
pub use group::{FiniteAbelianGroup, GroupElement};
pub use linalg::Matrix;
pub use scalar::Scalar;

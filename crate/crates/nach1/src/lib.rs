//! Cohomology of finite groups with (possibly non-abelian) coefficients.
//!
//! Everything here works over finite groups carrying the discrete topology,
//! so every map is continuous and the classical continuity side conditions
//! are vacuous. The crate computes:
//!
//! * `H^0(G,A)` (fixed points) and `H^1(G,A)` (derivations modulo
//!   conjugation) for an arbitrary finite coefficient group `A`,
//! * `H^n(G,A)` for abelian `A` via the cochain complex of continuous maps
//!   `G^n -> A`, with kernels/images/cokernels computed through integer
//!   Smith normal form,
//! * the connecting maps `delta^0` and `delta^1` of a short exact sequence
//!   of `G`-modules, and the six- and seven-term exact sequences they fit
//!   into,
//! * inflation and restriction together with the exactness of
//!   `1 -> H^1(G/N, A^N) -> H^1(G,A) -> H^1(N,A)^{G/N}`,
//! * complements of `A` in the semidirect product `G ⋉ A` and their
//!   correspondence with derivations.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything is safe to share across threads.

pub mod abelian;
pub mod cohomology;
pub mod corpus;
pub mod defs;
pub mod gmodule;
pub mod group;
pub mod semidirect;
pub mod sequences;

mod error;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

//! Exact workbench for hereditary torsion theories on commutative rings.
//!
//! The crate has four layers:
//!
//! - [`ring`]: finite commutative rings built from a small constructor
//!   grammar, their ideals, subquotient modules of `A^k`, prime spectrum
//!   and local decomposition.
//! - [`torsion`]: Gabriel filters (equivalently hereditary torsion
//!   theories), torsion radicals, closures, the `K`/`Z` partition of
//!   `Spec(A)`, jansian detection and induced filters.
//! - [`noether`]: certificates for totally σ-finitely generated
//!   submodules, σ-maximal families, chain stability and exhaustive
//!   theorem suites.
//! - [`monomial`]: monomial ideals in countably many variables with tail
//!   families, principal multiplicative sets, saturation and an exact
//!   S-finiteness decision.
//!
//! [`workbench`] ties everything to declarative JSON spec files and
//! reports; the `sigma-noether` binary is a thin wrapper around it.

pub mod error;
pub mod monomial;
pub mod noether;
pub mod ring;
pub mod torsion;
pub mod workbench;

pub use error::{Error, Result};
pub use monomial::{Decision, Monomial, MonomialIdeal, PrincipalMultSet, TailFamily, VarPattern};
pub use noether::{Certificate, CertificateKind, ChainStability};
pub use ring::{FiniteModule, FiniteRing, Ideal, RingMap, RingTerm, Submodule};
pub use torsion::{GabrielFilter, SpecPartition};

/// Tool version echoed in every report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

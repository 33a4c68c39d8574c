//! Totally σ-finitely generated certificates, σ-maximal machinery, chain
//! stability and exhaustive theorem suites on finite carriers.

mod certificate;
mod lattice;
mod maximal;
mod suite;

pub use certificate::{
    closure_colon_witness, sigma_principal_status, tfg_certificate, verify_certificate, Certificate,
    CertificateCheck, CertificateKind, PrincipalStatus,
};
pub use lattice::{FilteredLattice, LatticeContext};
pub use maximal::{
    chain_stability, is_upper_closed, quotient_transfer_check, sigma_maximal, unique_maximal_check, upper_closure,
    ChainStability, TransferReport, UniqueMaximal, EXHAUSTIVE_CHAIN_LIMIT, MAX_CHAINS,
};
pub use suite::{
    ring_suite, run_suite, sweep_suite, theorem_suite, RingContext, SuiteReport, TheoremResult, THEOREMS,
};

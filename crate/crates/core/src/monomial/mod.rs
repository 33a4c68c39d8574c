//! Monomial ideals in `k[x₁, x₂, …]` under principal multiplicative sets.
//!
//! This is a desk-scale non-noetherian carrier: ideals are finitely many
//! generators plus tail families `base·x_{start+i·step}^e`, which keeps
//! membership, containment, saturation and S-finiteness exactly decidable.
//! The coefficient field plays no role and is not represented.

mod decide;
mod ideal;
mod prime;
mod term;

pub use decide::{
    in_filter, refutation_witnesses, s_finite_decide, saturation, verify_decision, Budget, Decision,
    PrincipalMultSet, RefutationWitness,
};
pub use ideal::{saturate, MonomialIdeal, TailFamily};
pub use prime::{
    almost_jansian_principal, classify_prime, cohen_scan, AlmostJansian, CohenEntry, CohenReport, CohenVerdict,
    CrossCheck, PrimeClass, Tail, VarPattern,
};
pub use term::Monomial;

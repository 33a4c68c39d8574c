//! Gabriel filters and hereditary torsion theories on finite rings.
//!
//! On a finite ring every Gabriel filter `L` is the up-set of its least
//! member, so filters are stored extensionally as bitsets over the
//! canonical ideal list of the ring.

mod filter;
mod partition;
mod radical;

pub use filter::{
    all_gabriel_filters, filter_from_mult_set, filter_from_prime, gabriel_check, gabriel_closure, lambda_filter,
    meet_filters, GabrielAxiom, GabrielFilter, GabrielReport, Violation,
};
pub use partition::{
    finite_type_basis, induced_filter, jansian_status, meet_decomposition, spec_partition, JansianStatus,
    SpecPartition,
};
pub use radical::{
    closure, is_closed, is_dense, is_torsion, is_torsionfree, is_totally_torsion, torsion_submodule,
    torsion_submodule_by_sum, torsion_submodule_checked, TotalTorsion,
};

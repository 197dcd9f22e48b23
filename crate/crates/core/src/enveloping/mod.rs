//! PBW normal forms in `U(g)`, the spherical module `U(g)⊗_{U(k)}1` in
//! bounded degree, the projection `γ` into `H⊗_{C[W]}1`, Oda's map `Γ` and
//! the compatibility of `Γ` with the action of the lifts `f̃_i`.

mod hermitian;
mod oda;
mod pbw;
mod xr;
mod zero_slot;
#[cfg(test)]
mod tests;

pub use hermitian::{
    casimir, casimir_eigenvalue, evaluate_at, hecke_gram, hermitian_transfer_check, lie_gram, positivity_transfer_check,
    verify_transfer, SphericalFunctional,
};
pub use oda::{
    equivariant_homs, equivariant_homs_capped, gamma_equivariance_check, gamma_injectivity_check, hom_equivariance_check,
    intertwining_check, oda_gamma, verify_oda, default_nus, EquivariantHom, OdaSetup, DEFAULT_UNKNOWN_CAP,
};
pub use pbw::{IwasawaBasis, Letter, OrderedLie, UEAElement, Word};
pub use xr::{gamma0, gamma_map, lift_matrices, APoly, TruncatedXR, XElement};
pub use zero_slot::{
    partial_sum_position_zero_check, sbar_position_zero_check, zero_slot_k_commutation_check, ZeroSlotModel,
    ZeroSlotVector,
};

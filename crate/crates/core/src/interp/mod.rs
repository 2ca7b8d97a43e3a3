//! Interpolation classes: explicit W-functions, the restriction maps that
//! characterize them, and the passage from CSM to SSM classes.

pub mod axioms;
pub mod w;

pub use axioms::{
    ambient_chern_factors, csm_to_ssm, negative_control, restriction_data, verify_axioms, w_at_point, Axiom,
    AxiomCheck, AxiomReport, RestrictionData,
};
pub use w::{w_function, w_inner, w_schur_bialternant, w_top_degree, WFunction, MAX_W_N};

//! Chern-Mather classes of skew-symmetric orbit closures and the K-theoretic
//! (motivic) generalization of the sieve formula.

pub mod ktheory;
pub mod mather;
pub mod qnum;

pub use ktheory::{
    motivic_segre_sieve, motivic_sieve_coefficients, phi_wedge_k, phi_wedge_k_at_point, MotivicClass, QSpecialization,
    MAX_K_N,
};
pub use mather::{chern_mather_wedge, euler_obstruction_wedge};
pub use qnum::{q_binomial, q_euler_numbers, q_factorial, q_integer, q_ring, QEulerTable};

//! Euler numbers, Φ-classes and the sieve formulas for SSM classes.

pub mod euler;
pub mod phi;
pub mod ssm;

pub use euler::{
    binomial_matrix, euler_number, euler_numbers, invert_binomial_matrix, mat_mul, EulerNumberTable, Parity,
};
pub use phi::{phi_at_point, phi_class, PhiClass};
pub use ssm::{sieve_coefficients, ssm_series, ssm_sieve};

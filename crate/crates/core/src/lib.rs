pub mod cli;
pub mod combinat;
pub mod error;
pub mod exact;
pub mod interp;
pub mod mather_k;
pub mod orbit;
pub mod projective;
pub mod sieve;
pub mod symfun;

pub use error::{Error, Result};
pub use orbit::{Family, OrbitId};

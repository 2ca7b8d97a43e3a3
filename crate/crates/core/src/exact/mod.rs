//! Exact arithmetic: rationals, sparse polynomials, truncated series and
//! Laurent fractions.

pub mod laurent;
pub mod poly;
pub mod rational;
pub mod ring;
pub mod series;

pub use laurent::{LaurentFraction, LaurentPoly};
pub use poly::Poly;
pub use rational::{binomial, factorial, Rational};
pub use ring::{Monomial, Ring, RingRef};
pub use series::TruncSeries;

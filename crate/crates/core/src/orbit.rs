//! Corank orbits of skew-symmetric and symmetric matrices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Skew-symmetric forms, the representation Λ²Cⁿ.
    Wedge,
    /// Symmetric forms, the representation S²Cⁿ.
    Sym,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Wedge => "wedge",
            Family::Sym => "sym",
        }
    }

    /// Dimension of the representation.
    pub fn ambient_dim(self, n: usize) -> usize {
        match self {
            Family::Wedge => n * n.saturating_sub(1) / 2,
            Family::Sym => n * (n + 1) / 2,
        }
    }

    /// Coranks of the orbits for matrices of size `n`, in increasing order.
    pub fn coranks(self, n: usize) -> Vec<usize> {
        match self {
            Family::Wedge => (n % 2..=n).step_by(2).collect(),
            Family::Sym => (0..=n).collect(),
        }
    }

    pub fn orbits(self, n: usize) -> Vec<OrbitId> {
        self.coranks(n)
            .into_iter()
            .map(|r| OrbitId { family: self, n, r })
            .collect()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family, Error> {
        match s.to_ascii_lowercase().as_str() {
            "wedge" | "skew" => Ok(Family::Wedge),
            "sym" | "symmetric" => Ok(Family::Sym),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// The orbit of `n × n` matrices of corank `r` in the given family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrbitId {
    pub family: Family,
    pub n: usize,
    pub r: usize,
}

impl OrbitId {
    pub fn new(family: Family, n: usize, r: usize) -> Result<OrbitId, Error> {
        if r > n {
            return Err(Error::RankOutOfRange { n, r });
        }
        if family == Family::Wedge && !(n - r).is_multiple_of(2) {
            return Err(Error::Parity { n, r });
        }
        Ok(OrbitId { family, n, r })
    }

    pub fn wedge(n: usize, r: usize) -> Result<OrbitId, Error> {
        OrbitId::new(Family::Wedge, n, r)
    }

    pub fn sym(n: usize, r: usize) -> Result<OrbitId, Error> {
        OrbitId::new(Family::Sym, n, r)
    }

    /// Codimension in the representation: `C(r,2)` or `C(r+1,2)`.
    pub fn codim(&self) -> usize {
        match self.family {
            Family::Wedge => self.r * self.r.saturating_sub(1) / 2,
            Family::Sym => self.r * (self.r + 1) / 2,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.family.ambient_dim(self.n)
    }

    /// Orbits contained in the closure of this one (including itself).
    pub fn closure_orbits(&self) -> Vec<OrbitId> {
        self.family
            .orbits(self.n)
            .into_iter()
            .filter(|o| o.r >= self.r)
            .collect()
    }
}

impl fmt::Display for OrbitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.family, self.n, self.r)
    }
}

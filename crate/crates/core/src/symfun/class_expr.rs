use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::convert::{chern_to_schur, schur_to_alpha, schur_to_chern, to_schur_basis};
use super::expansion::SchurExpansion;
use super::schur::chern_to_alpha;
use crate::error::Error;
use crate::exact::{Poly, Rational, Ring};
use crate::orbit::OrbitId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Alpha,
    Chern,
    Schur,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Alpha => "alpha",
            Basis::Chern => "chern",
            Basis::Schur => "schur",
        }
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Basis, Error> {
        match s {
            "alpha" => Ok(Basis::Alpha),
            "chern" => Ok(Basis::Chern),
            "schur" => Ok(Basis::Schur),
            other => Err(Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Payload {
    /// Polynomial in `a1..an` or in `c1..cn`, depending on the basis.
    Poly(Poly),
    Schur(SchurExpansion),
}

/// A symmetric class in one of three bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassExpr {
    basis: Basis,
    payload: Payload,
    n: usize,
    orbit: Option<OrbitId>,
    bound: Option<u32>,
}

impl ClassExpr {
    /// Wraps a symmetric polynomial in the roots `a1..an`.
    pub fn from_alpha(p: Poly, n: usize, orbit: Option<OrbitId>, bound: Option<u32>) -> Result<ClassExpr, Error> {
        if p.ring().names() != Ring::alpha(n).names() {
            return Err(Error::RingMismatch {
                left: p.ring().names().to_vec(),
                right: Ring::alpha(n).names().to_vec(),
            });
        }
        if !p.is_symmetric_in(&(0..n).collect::<Vec<_>>()) {
            return Err(Error::NotSymmetric);
        }
        Ok(ClassExpr {
            basis: Basis::Alpha,
            payload: Payload::Poly(p),
            n,
            orbit,
            bound,
        })
    }

    pub fn from_chern(p: Poly, n: usize, orbit: Option<OrbitId>, bound: Option<u32>) -> Result<ClassExpr, Error> {
        if p.ring().names() != Ring::chern(n).names() {
            return Err(Error::RingMismatch {
                left: p.ring().names().to_vec(),
                right: Ring::chern(n).names().to_vec(),
            });
        }
        Ok(ClassExpr {
            basis: Basis::Chern,
            payload: Payload::Poly(p),
            n,
            orbit,
            bound,
        })
    }

    pub fn from_schur(e: SchurExpansion, n: usize, orbit: Option<OrbitId>, bound: Option<u32>) -> ClassExpr {
        ClassExpr {
            basis: Basis::Schur,
            payload: Payload::Schur(e.restrict_length(n)),
            n,
            orbit,
            bound,
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn orbit(&self) -> Option<OrbitId> {
        self.orbit
    }

    pub fn bound(&self) -> Option<u32> {
        self.bound
    }

    pub fn to_basis(&self, target: Basis) -> Result<ClassExpr, Error> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let payload = match (&self.payload, self.basis, target) {
            (Payload::Poly(p), Basis::Alpha, Basis::Schur) => Payload::Schur(to_schur_basis(p, self.n)?),
            (Payload::Poly(p), Basis::Alpha, Basis::Chern) => {
                Payload::Poly(schur_to_chern(&to_schur_basis(p, self.n)?, self.n))
            }
            (Payload::Poly(p), Basis::Chern, Basis::Alpha) => Payload::Poly(chern_to_alpha(p, self.n)),
            (Payload::Poly(p), Basis::Chern, Basis::Schur) => Payload::Schur(chern_to_schur(p, self.n)?),
            (Payload::Schur(e), Basis::Schur, Basis::Chern) => Payload::Poly(schur_to_chern(e, self.n)),
            (Payload::Schur(e), Basis::Schur, Basis::Alpha) => Payload::Poly(schur_to_alpha(e, self.n)),
            _ => return Err(Error::Internal("payload does not match basis".into())),
        };
        Ok(ClassExpr {
            basis: target,
            payload,
            ..self.clone()
        })
    }

    pub fn poly(&self) -> Option<&Poly> {
        match &self.payload {
            Payload::Poly(p) => Some(p),
            Payload::Schur(_) => None,
        }
    }

    pub fn schur(&self) -> Option<&SchurExpansion> {
        match &self.payload {
            Payload::Schur(e) => Some(e),
            Payload::Poly(_) => None,
        }
    }

    /// `(key, coefficient)` pairs in display order; keys are exponent vectors
    /// for polynomial payloads and partitions for Schur payloads.
    pub fn key_terms(&self) -> Vec<(Vec<u32>, Rational)> {
        match &self.payload {
            Payload::Poly(p) => p
                .display_terms()
                .into_iter()
                .map(|(m, c)| (m.exps(p.nvars()).iter().map(|&e| e as u32).collect(), c))
                .collect(),
            Payload::Schur(e) => e
                .display_terms()
                .into_iter()
                .map(|(l, c)| (l.parts().to_vec(), c))
                .collect(),
        }
    }

    pub fn to_text(&self) -> String {
        match &self.payload {
            Payload::Poly(p) => p.to_text(),
            Payload::Schur(e) => e.to_text(),
        }
    }

    pub fn to_latex(&self) -> String {
        match &self.payload {
            Payload::Poly(p) => p.to_latex(),
            Payload::Schur(e) => e.to_latex(),
        }
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::parse::parse_poly;

    #[test]
    fn basis_round_trip() {
        let c = Ring::chern(3);
        let p = parse_poly("1 + 2c1 + c1^2 + c2", &c).unwrap();
        let x = ClassExpr::from_chern(p.clone(), 3, None, None).unwrap();
        let a = x.to_basis(Basis::Alpha).unwrap();
        let s = a.to_basis(Basis::Schur).unwrap();
        assert_eq!(s.to_text(), "s0 + 2s1 + s2 + 2s11");
        assert_eq!(s.to_basis(Basis::Chern).unwrap().poly().unwrap(), &p);
        assert_eq!(a.to_basis(Basis::Chern).unwrap().poly().unwrap(), &p);
    }

    #[test]
    fn rejects_asymmetric_roots() {
        let a = Ring::alpha(2);
        assert_eq!(
            ClassExpr::from_alpha(Poly::var(&a, 0), 2, None, None),
            Err(Error::NotSymmetric)
        );
    }
}

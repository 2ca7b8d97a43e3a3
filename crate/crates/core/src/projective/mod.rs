//! Non-equivariant classes of projectivized orbits, Euler characteristics of
//! general linear sections, and the closed codimension/degree/χ formulas.

mod sections;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact::{binomial, Poly, Rational, Ring, RingRef};
use crate::interp::w_schur_bialternant;
use crate::orbit::OrbitId;
use crate::symfun::schur_at_ones;

pub use sections::{
    aluffi_j, char_polys, closed_invariants, euler_char_table, CharPolyPair, ClosedInvariants, EulerCharRow,
    EulerCharTable,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Csm,
    Ssm,
}

impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "csm" => Ok(ClassKind::Csm),
            "ssm" => Ok(ClassKind::Ssm),
            other => Err(Error::Parse(format!("unknown class kind {other:?}"))),
        }
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::Csm => "csm",
            ClassKind::Ssm => "ssm",
        })
    }
}

/// A class `Σ a_i ξ^i` in `Q[ξ]/ξ^N`, where `P^{N-1}` is the projectivized
/// representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjClass {
    pub orbit: OrbitId,
    pub kind: ClassKind,
    pub closure: bool,
    /// `N`, the dimension of the representation.
    pub ambient: usize,
    pub coeffs: Vec<Rational>,
}

pub fn xi_ring() -> RingRef {
    Ring::new(["xi"])
}

impl ProjClass {
    /// First nonzero coefficient as `(index, value)`.
    pub fn lowest(&self) -> Option<(usize, Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
    }

    /// Coefficient of `ξ^{N-1}`, the Euler characteristic of the class.
    pub fn top(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or(Rational::ZERO)
    }

    pub fn to_poly(&self) -> Poly {
        let ring = xi_ring();
        Poly::from_terms(
            &ring,
            self.coeffs.iter().enumerate().map(|(i, c)| (vec![i as u16], c.clone())),
        )
    }

    pub fn to_text(&self) -> String {
        self.to_poly().to_text()
    }
}

/// `Σ_i C(N, i) ξ^i`, i.e. `(1+ξ)^N mod ξ^N`.
pub fn total_chern_coeffs(ambient: usize) -> Vec<Rational> {
    (0..ambient)
        .map(|i| Rational::from(binomial(ambient as i64, i as i64)))
        .collect()
}

/// `csm(Σ)|_{a_i -> ξ/2}` for the orbit itself (not its closure).
///
/// The substitution is applied to the Schur expansion of the W-function:
/// `s_λ(ξ/2, ..., ξ/2) = s_λ(1^n) (ξ/2)^{|λ|}`.
fn orbit_csm_coeffs(orbit: OrbitId) -> Result<Vec<Rational>, Error> {
    let ambient = orbit.family.ambient_dim(orbit.n);
    let mut coeffs = vec![Rational::ZERO; ambient];
    let half = Rational::new(1, 2);
    for (lambda, c) in w_schur_bialternant(orbit)?.terms() {
        let d = lambda.size() as usize;
        if d < ambient {
            let v = &(c * &schur_at_ones(lambda, orbit.n)) * &half.pow(d as u32);
            coeffs[d] += &v;
        }
    }
    Ok(coeffs)
}

/// The non-equivariant CSM or SSM class of the projectivized orbit (or its
/// closure) in `Q[ξ]/ξ^N`.
///
/// The SSM class is `csm / (1+ξ)^N`, since every factor of `c(TM)` maps to
/// `1 + ξ` under the substitution.
pub fn projectivize(orbit: OrbitId, kind: ClassKind, closure: bool) -> Result<ProjClass, Error> {
    let orbit = OrbitId::new(orbit.family, orbit.n, orbit.r)?;
    let ambient = orbit.family.ambient_dim(orbit.n);
    let parts = if closure { orbit.closure_orbits() } else { vec![orbit] };
    let mut coeffs = vec![Rational::ZERO; ambient];
    for o in parts {
        for (acc, c) in coeffs.iter_mut().zip(orbit_csm_coeffs(o)?) {
            *acc += &c;
        }
    }
    if kind == ClassKind::Ssm {
        coeffs = divide_by_power(&coeffs, ambient);
    }
    if let Some(c) = coeffs.iter().find(|c| !c.is_integer()) {
        return Err(Error::NonInteger(format!("{c} in projectivized class of {orbit}")));
    }
    Ok(ProjClass {
        orbit,
        kind,
        closure,
        ambient,
        coeffs,
    })
}

/// `a / (1+ξ)^e mod ξ^{len(a)}`; the inverse has coefficients `(-1)^i C(e+i-1, i)`.
fn divide_by_power(a: &[Rational], e: usize) -> Vec<Rational> {
    let inv: Vec<Rational> = (0..a.len())
        .map(|i| {
            let b = Rational::from(binomial((e + i) as i64 - 1, i as i64));
            if i % 2 == 1 {
                -b
            } else {
                b
            }
        })
        .collect();
    (0..a.len())
        .map(|d| (0..=d).map(|i| &a[i] * &inv[d - i]).sum())
        .collect()
}

/// The equivariant substitution `a_i -> a_i + (w_i / w) ξ`, with no
/// reduction modulo the relation of the projective space.
///
/// The result lives in the ring of `p` extended by a variable `xi`.
pub fn general_projectivize(p: &Poly, weights: &[i64], w: i64) -> Result<Poly, Error> {
    if w == 0 {
        return Err(Error::DivisionByZero);
    }
    let ring = p.ring();
    if weights.len() != ring.len() {
        return Err(Error::BoundMismatch {
            left: ring.len() as u32,
            right: weights.len() as u32,
        });
    }
    let target = ring.extend(["xi"]);
    let xi = target.index("xi")?;
    let images: Vec<Option<Poly>> = weights
        .iter()
        .enumerate()
        .map(|(i, &wi)| {
            let shift = Poly::var(&target, xi).scale(&Rational::new(wi, w));
            Some(&Poly::var(&target, i) + &shift)
        })
        .collect();
    p.substitute(&target, &images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::w_function;
    use crate::orbit::Family;
    use crate::symfun::parse_poly;

    fn coeffs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn sym_three_printed() {
        let expect = [[1, 3, 6, 6, 3, 0], [0, 3, 9, 10, 6, 3], [0, 0, 0, 4, 6, 3]];
        for (r, e) in expect.iter().enumerate() {
            let p = projectivize(OrbitId::sym(3, r).unwrap(), ClassKind::Csm, false).unwrap();
            assert_eq!(p.coeffs, coeffs(e), "r={r}");
        }
    }

    #[test]
    fn direct_substitution_agrees() {
        for family in [Family::Wedge, Family::Sym] {
            for n in 1..=5 {
                for o in family.orbits(n) {
                    let w = w_function(o).unwrap().poly;
                    let xi = xi_ring();
                    let half = Poly::var(&xi, 0).scale(&Rational::new(1, 2));
                    let sub = w.substitute(&xi, &vec![Some(half); n]).unwrap();
                    let n_amb = family.ambient_dim(n);
                    let direct: Vec<Rational> = (0..n_amb).map(|i| sub.coeff_of(&[i as u16])).collect();
                    let p = projectivize(o, ClassKind::Csm, false).unwrap();
                    assert_eq!(p.coeffs, direct, "{o}");
                }
            }
        }
    }

    #[test]
    fn general_substitution() {
        let a = Ring::alpha(2);
        let p = parse_poly("a1 + a2", &a).unwrap();
        let q = general_projectivize(&p, &[1, 1], 2).unwrap();
        assert_eq!(q, parse_poly("a1 + a2 + xi", q.ring()).unwrap());
        let p1 = parse_poly("a1", &a).unwrap();
        let q1 = general_projectivize(&p1, &[1, 1], 2).unwrap();
        assert_eq!(q1, parse_poly("a1 + 1/2xi", q1.ring()).unwrap());
        assert_eq!(general_projectivize(&p, &[1, 1], 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn ssm_is_csm_over_total_chern() {
        let o = OrbitId::sym(3, 1).unwrap();
        let csm = projectivize(o, ClassKind::Csm, false).unwrap();
        let ssm = projectivize(o, ClassKind::Ssm, false).unwrap();
        let n = csm.ambient;
        let back: Vec<Rational> = (0..n)
            .map(|d| {
                (0..=d)
                    .map(|i| &ssm.coeffs[i] * &Rational::from(binomial(n as i64, (d - i) as i64)))
                    .sum()
            })
            .collect();
        assert_eq!(back, csm.coeffs);
    }
}

//! Euler characteristics of general linear sections via Aluffi's involution,
//! and the closed formulas for codimension, degree and Euler characteristic.

use num_bigint::BigInt;
use serde::Serialize;

use super::{projectivize, ClassKind, ProjClass};
use crate::error::Error;
use crate::exact::rational::serialize_display;
use crate::exact::{binomial, Poly, Rational, Ring};
use crate::orbit::{Family, OrbitId};

/// `J(p)(t) = (t p(-t-1) + p(0)) / (t+1)` for a polynomial in one variable.
pub fn aluffi_j(p: &Poly) -> Result<Poly, Error> {
    let ring = p.ring().clone();
    if ring.len() != 1 {
        return Err(Error::Unsupported(format!(
            "J acts on polynomials in one variable, got {}",
            ring.len()
        )));
    }
    let flipped = p.substitute(&ring, &[Some(Poly::linear(&ring, -1, &[(0, -1)]))])?;
    let num = &(&Poly::var(&ring, 0) * &flipped) + &Poly::constant(&ring, p.constant_term());
    num.exact_divide(&Poly::linear(&ring, 1, &[(0, 1)]))
}

/// `γ(t) = Σ a_i t^{N-1-i}` and `χ(t) = J(γ) = Σ χ(X_i) (-t)^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolyPair {
    pub gamma: Poly,
    pub chi: Poly,
}

impl CharPolyPair {
    /// `χ(X_i)` for `i = 0..N-1`.
    pub fn euler_chars(&self, len: usize) -> Vec<Rational> {
        (0..len)
            .map(|i| {
                let c = self.chi.coeff_of(&[i as u16]);
                if i % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect()
    }
}

/// The pair `(γ, χ)` of a projectivized CSM class.
pub fn char_polys(class: &ProjClass) -> Result<CharPolyPair, Error> {
    if class.kind != ClassKind::Csm {
        return Err(Error::Unsupported(
            "Euler characteristic polynomials need a CSM class".into(),
        ));
    }
    let ring = Ring::new(["t"]);
    let top = class.ambient - 1;
    let gamma = Poly::from_terms(
        &ring,
        class
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (vec![(top - i) as u16], c.clone())),
    );
    let chi = aluffi_j(&gamma)?;
    Ok(CharPolyPair { gamma, chi })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerCharRow {
    pub orbit: OrbitId,
    pub values: Vec<Rational>,
}

/// `χ(X_i)` for every orbit with nonempty projectivization (rows) and every
/// number `i` of general hyperplanes (columns `0..N-1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerCharTable {
    pub family: Family,
    pub n: usize,
    pub closure: bool,
    pub columns: usize,
    pub rows: Vec<EulerCharRow>,
}

impl EulerCharTable {
    pub fn row(&self, r: usize) -> Option<&EulerCharRow> {
        self.rows.iter().find(|row| row.orbit.r == r)
    }

    pub fn column_sums(&self) -> Vec<Rational> {
        (0..self.columns)
            .map(|i| self.rows.iter().map(|row| row.values[i].clone()).sum())
            .collect()
    }
}

pub fn euler_char_table(family: Family, n: usize, closure: bool) -> Result<EulerCharTable, Error> {
    let columns = family.ambient_dim(n);
    let mut rows = Vec::new();
    for orbit in family.orbits(n) {
        if orbit.r == n {
            // The zero matrix projectivizes to the empty set.
            continue;
        }
        let class = projectivize(orbit, ClassKind::Csm, closure)?;
        let pair = char_polys(&class)?;
        rows.push(EulerCharRow {
            orbit,
            values: pair.euler_chars(columns),
        });
    }
    Ok(EulerCharTable {
        family,
        n,
        closure,
        columns,
        rows,
    })
}

/// Codimension and degree of the projectivized orbit closure and the Euler
/// characteristic of the projectivized orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedInvariants {
    pub orbit: OrbitId,
    pub codim: usize,
    #[serde(serialize_with = "serialize_display")]
    pub degree: BigInt,
    #[serde(serialize_with = "serialize_display")]
    pub euler_char: BigInt,
}

fn ratio(num: BigInt, den: BigInt) -> Rational {
    Rational::from_bigints(num, den).expect("nonzero binomial")
}

pub fn closed_invariants(orbit: OrbitId) -> Result<ClosedInvariants, Error> {
    let OrbitId { family, n, r } = OrbitId::new(orbit.family, orbit.n, orbit.r)?;
    if r == n {
        return Err(Error::Unsupported(format!(
            "{orbit} is the zero orbit, whose projectivization is empty"
        )));
    }
    let b = |a: usize, k: usize| binomial(a as i64, k as i64);
    let (codim, degree, chi) = match family {
        Family::Wedge => {
            let degree = if r == 0 {
                // The product formula gives 2 here; the closure is the whole space.
                Rational::ONE
            } else {
                let mut d = ratio(1.into(), BigInt::from(2).pow(r as u32 - 1));
                for i in 0..r - 1 {
                    d = &d * &ratio(b(n + i, r - 1 - i), b(2 * i + 1, i));
                }
                d
            };
            let chi = if r + 2 == n { b(n, 2) } else { BigInt::from(0) };
            (r * (r.saturating_sub(1)) / 2, degree, chi)
        }
        Family::Sym => {
            let mut d = Rational::ONE;
            for i in 0..r {
                d = &d * &ratio(b(n + i, r - i), b(2 * i + 1, i));
            }
            let chi = if r + 1 == n {
                BigInt::from(n)
            } else if r + 2 == n {
                b(n, 2)
            } else {
                BigInt::from(0)
            };
            (r * (r + 1) / 2, d, chi)
        }
    };
    if !degree.is_integer() {
        return Err(Error::NonInteger(format!("degree {degree} of {orbit}")));
    }
    Ok(ClosedInvariants {
        orbit: OrbitId { family, n, r },
        codim,
        degree: degree.numer(),
        euler_char: chi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::parse_poly;

    fn t(s: &str) -> Poly {
        parse_poly(s, &Ring::new(["t"])).unwrap()
    }

    #[test]
    fn j_examples() {
        assert_eq!(aluffi_j(&t("3 + 6t + 4t^2")).unwrap(), t("3 - 2t + 4t^2"));
        assert_eq!(aluffi_j(&t("1")).unwrap(), t("1"));
        let p = t("1 + 5t - 2t^3");
        assert_eq!(aluffi_j(&aluffi_j(&p).unwrap()).unwrap(), p);
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn sym_three_table() {
        let table = euler_char_table(Family::Sym, 3, false).unwrap();
        let expect = [[0, 1, -1, 3, -1, 1], [3, 2, 1, 0, 3, 0], [3, 2, 4, 0, 0, 0]];
        for (row, e) in table.rows.iter().zip(expect) {
            assert_eq!(row.values, ints(&e), "{}", row.orbit);
        }
        assert_eq!(table.column_sums(), ints(&[6, 5, 4, 3, 2, 1]));
    }

    #[test]
    fn closed_formulas() {
        let s32 = closed_invariants(OrbitId::sym(3, 2).unwrap()).unwrap();
        assert_eq!((s32.codim, s32.degree, s32.euler_char), (3, 4.into(), 3.into()));
        let w64 = closed_invariants(OrbitId::wedge(6, 4).unwrap()).unwrap();
        assert_eq!((w64.codim, w64.degree, w64.euler_char), (6, 14.into(), 15.into()));
        let w40 = closed_invariants(OrbitId::wedge(4, 0).unwrap()).unwrap();
        assert_eq!(w40.degree, 1.into());
        assert!(closed_invariants(OrbitId::wedge(4, 4).unwrap()).is_err());
    }

    #[test]
    fn classes_agree_with_closed_formulas() {
        for family in [Family::Wedge, Family::Sym] {
            for n in 1..=5 {
                for o in family.orbits(n).into_iter().filter(|o| o.r < n) {
                    let inv = closed_invariants(o).unwrap();
                    let orbit = projectivize(o, ClassKind::Csm, false).unwrap();
                    let closure = projectivize(o, ClassKind::Csm, true).unwrap();
                    assert_eq!(
                        closure.lowest(),
                        Some((inv.codim, Rational::from(inv.degree.clone()))),
                        "{o}"
                    );
                    assert_eq!(orbit.top(), Rational::from(inv.euler_char.clone()), "{o}");
                }
            }
        }
    }
}

//! SSM classes of orbits and orbit closures as combinations of Φ-classes.

use crate::error::Error;
use crate::exact::{binomial, Rational, Ring, TruncSeries};
use crate::orbit::{Family, OrbitId};
use crate::symfun::ClassExpr;

use super::euler::euler_numbers;
use super::phi::phi_class;

/// Coefficients `(r', c)` with `ssm = Σ c Φ_{n,r'}`.
pub fn sieve_coefficients(orbit: OrbitId, closure: bool) -> Result<Vec<(usize, Rational)>, Error> {
    let OrbitId { family, n, r } = OrbitId::new(orbit.family, orbit.n, orbit.r)?;
    let b = |a: usize, k: usize| Rational::from(binomial(a as i64, k as i64));
    Ok(match (family, closure) {
        (Family::Wedge, false) => {
            let e = euler_numbers(n - r);
            (0..=(n - r) / 2)
                .map(|i| (r + 2 * i, &b(r + 2 * i, r) * &e.get(2 * i)))
                .collect()
        }
        (Family::Wedge, true) => {
            // The closure is the union of the orbits of corank r, r+2, ..., n.
            let mut acc: Vec<(usize, Rational)> = Vec::new();
            for sub in orbit.closure_orbits() {
                for (rr, c) in sieve_coefficients(sub, false)? {
                    match acc.iter_mut().find(|(x, _)| *x == rr) {
                        Some((_, v)) => *v += &c,
                        None => acc.push((rr, c)),
                    }
                }
            }
            acc.sort_by_key(|(rr, _)| *rr);
            acc
        }
        (Family::Sym, false) => (0..=n - r)
            .map(|i| {
                let sign = if i % 2 == 0 { Rational::ONE } else { Rational::from(-1) };
                (r + i, &sign * &b(r + i, r))
            })
            .collect(),
        (Family::Sym, true) => (0..=n - r)
            .map(|i| {
                let sign = if i % 2 == 0 { Rational::ONE } else { Rational::from(-1) };
                let c = if r == 0 {
                    // C(i-1, -1): only the i = 0 term survives.
                    if i == 0 {
                        Rational::ONE
                    } else {
                        Rational::ZERO
                    }
                } else {
                    b(r + i - 1, r - 1)
                };
                (r + i, &sign * &c)
            })
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    })
}

/// SSM class as a series in the roots `a1..an`, up to degree `bound`.
pub fn ssm_series(orbit: OrbitId, closure: bool, bound: u32) -> Result<TruncSeries, Error> {
    let ring = Ring::alpha(orbit.n);
    let mut acc = TruncSeries::zero(&ring, bound);
    for (rr, c) in sieve_coefficients(orbit, closure)? {
        let phi = phi_class(OrbitId::new(orbit.family, orbit.n, rr)?, bound)?;
        acc = acc.try_add(&phi.series.scale(&c))?;
    }
    Ok(acc)
}

/// SSM class by the sieve formula, as a class in the root basis.
pub fn ssm_sieve(orbit: OrbitId, closure: bool, bound: u32) -> Result<ClassExpr, Error> {
    let s = ssm_series(orbit, closure, bound)?;
    ClassExpr::from_alpha(s.into_poly(), orbit.n, Some(orbit), Some(bound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{parse_poly, to_chern_basis, Basis};

    fn chern(orbit: OrbitId, closure: bool, d: u32) -> crate::exact::Poly {
        let s = ssm_series(orbit, closure, d).unwrap();
        to_chern_basis(s.poly(), orbit.n).unwrap()
    }

    #[test]
    fn wedge_two_zero() {
        let c = Ring::chern(2);
        assert_eq!(
            chern(OrbitId::wedge(2, 0).unwrap(), false, 4),
            parse_poly("1 - c1 + c1^2 - c1^3 + c1^4", &c).unwrap()
        );
    }

    #[test]
    fn coefficient_lists() {
        let w31 = sieve_coefficients(OrbitId::wedge(3, 1).unwrap(), false).unwrap();
        assert_eq!(w31, vec![(1, Rational::ONE), (3, Rational::from(-3))]);
        let s21 = sieve_coefficients(OrbitId::sym(2, 1).unwrap(), false).unwrap();
        assert_eq!(s21, vec![(1, Rational::ONE), (2, Rational::from(-2))]);
        let s21c = sieve_coefficients(OrbitId::sym(2, 1).unwrap(), true).unwrap();
        assert_eq!(s21c, vec![(1, Rational::ONE), (2, Rational::from(-1))]);
        let s20c = sieve_coefficients(OrbitId::sym(2, 0).unwrap(), true).unwrap();
        assert_eq!(s20c, vec![(0, Rational::ONE)]);
    }

    #[test]
    fn sym_two_one() {
        let c = Ring::chern(2);
        assert_eq!(
            chern(OrbitId::sym(2, 1).unwrap(), false, 2),
            parse_poly("2c1 - 4c1^2", &c).unwrap()
        );
    }

    #[test]
    fn schur_view() {
        let x = ssm_sieve(OrbitId::wedge(2, 0).unwrap(), false, 2).unwrap();
        let s = x.to_basis(Basis::Schur).unwrap();
        assert_eq!(s.to_text(), "s0 - s1 + s2 + s11");
    }
}

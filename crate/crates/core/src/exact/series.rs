//! Polynomials truncated above a fixed total degree.

use std::fmt;

use rustc_hash::FxHashMap;

use super::poly::{degree_floor, Poly};
use super::rational::Rational;
use super::ring::{Monomial, RingRef};
use crate::error::Error;

/// A power series known up to (and including) degree `bound`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    poly: Poly,
    bound: u32,
}

impl TruncSeries {
    pub fn new(poly: Poly, bound: u32) -> TruncSeries {
        let poly = if poly.degree().is_some_and(|d| d > bound) {
            poly.truncate(bound)
        } else {
            poly
        };
        TruncSeries { poly, bound }
    }

    pub fn zero(ring: &RingRef, bound: u32) -> TruncSeries {
        TruncSeries::new(Poly::zero(ring), bound)
    }

    pub fn one(ring: &RingRef, bound: u32) -> TruncSeries {
        TruncSeries::new(Poly::one(ring), bound)
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn ring(&self) -> &RingRef {
        self.poly.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn homogeneous_part(&self, d: u32) -> Poly {
        self.poly.homogeneous_part(d)
    }

    /// Drops to a smaller bound.
    pub fn truncate(&self, bound: u32) -> TruncSeries {
        assert!(bound <= self.bound, "cannot raise a truncation bound");
        TruncSeries::new(self.poly.truncate(bound), bound)
    }

    fn check(&self, other: &TruncSeries) -> Result<(), Error> {
        if self.bound != other.bound {
            return Err(Error::BoundMismatch {
                left: self.bound,
                right: other.bound,
            });
        }
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch {
                left: self.ring().names().to_vec(),
                right: other.ring().names().to_vec(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &TruncSeries) -> Result<TruncSeries, Error> {
        self.check(other)?;
        Ok(TruncSeries::new(self.poly.try_add(&other.poly)?, self.bound))
    }

    pub fn try_sub(&self, other: &TruncSeries) -> Result<TruncSeries, Error> {
        self.check(other)?;
        Ok(TruncSeries::new(self.poly.try_sub(&other.poly)?, self.bound))
    }

    pub fn try_mul(&self, other: &TruncSeries) -> Result<TruncSeries, Error> {
        self.check(other)?;
        Ok(TruncSeries {
            poly: self.poly.mul_bounded(&other.poly, Some(self.bound)),
            bound: self.bound,
        })
    }

    pub fn scale(&self, c: &Rational) -> TruncSeries {
        TruncSeries {
            poly: self.poly.scale(c),
            bound: self.bound,
        }
    }

    /// Multiplies by a polynomial, truncating the product.
    pub fn mul_poly(&self, p: &Poly) -> Result<TruncSeries, Error> {
        if p.ring() != self.ring() {
            return Err(Error::RingMismatch {
                left: self.ring().names().to_vec(),
                right: p.ring().names().to_vec(),
            });
        }
        Ok(TruncSeries {
            poly: self.poly.mul_bounded(p, Some(self.bound)),
            bound: self.bound,
        })
    }

    /// `self / u` for a polynomial `u` with nonzero constant term.
    ///
    /// Solves `u * y = self` degree by degree, so the cost is proportional to
    /// `|y| * |u|` rather than to the size of the expanded inverse of `u`.
    pub fn div_unit(&self, u: &Poly) -> Result<TruncSeries, Error> {
        if u.ring() != self.ring() {
            return Err(Error::RingMismatch {
                left: self.ring().names().to_vec(),
                right: u.ring().names().to_vec(),
            });
        }
        let c0 = u.constant_term();
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv_c0 = c0.recip()?;
        let tail: Vec<(Monomial, Rational)> = u
            .terms()
            .filter(|(m, _)| !m.is_one() && m.degree() <= self.bound)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        let mut out = std::collections::BTreeMap::new();
        for d in 0..=self.bound {
            let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
            for (m, c) in self.poly.degree_range(d, d) {
                acc.insert(*m, c.clone());
            }
            for (um, uc) in &tail {
                let k = um.degree();
                if k > d {
                    continue;
                }
                let lo = degree_floor(d - k);
                let hi = degree_floor(d - k + 1);
                for (ym, yc) in out.range(lo..hi) {
                    let m = um.mul(ym);
                    let c = uc * yc;
                    match acc.get_mut(&m) {
                        Some(v) => *v -= &c,
                        None => {
                            acc.insert(m, -c);
                        }
                    }
                }
            }
            let mut slice: Vec<(Monomial, Rational)> = acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m, &c * &inv_c0))
                .collect();
            slice.sort_unstable_by_key(|a| a.0);
            out.extend(slice);
        }
        Ok(TruncSeries {
            poly: Poly::from_map(self.ring(), out),
            bound: self.bound,
        })
    }

    /// Multiplicative inverse up to the bound.
    pub fn invert(&self) -> Result<TruncSeries, Error> {
        TruncSeries::one(self.ring(), self.bound).div_unit(&self.poly)
    }

    /// Gradewise exact division by a nonzero homogeneous polynomial of degree `k`.
    ///
    /// The quotient is known up to degree `bound - k`. Components of degree
    /// below `k` must vanish.
    pub fn divide_homogeneous(&self, den: &Poly) -> Result<TruncSeries, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !den.is_homogeneous() {
            return Err(Error::Unsupported(
                "gradewise division needs a homogeneous divisor".into(),
            ));
        }
        let k = den.degree().unwrap_or(0);
        if k > self.bound {
            return Err(Error::Unsupported(format!(
                "divisor degree {k} exceeds truncation bound {}",
                self.bound
            )));
        }
        if self.poly.min_degree().is_some_and(|d| d < k) {
            return Err(Error::NonzeroRemainder);
        }
        let mut out = Poly::zero(self.ring());
        for d in k..=self.bound {
            let part = self.poly.homogeneous_part(d);
            if part.is_zero() {
                continue;
            }
            let q = part.exact_divide(den)?;
            for (m, c) in q.terms() {
                out.add_term(*m, c);
            }
        }
        Ok(TruncSeries {
            poly: out,
            bound: self.bound - k,
        })
    }

    /// Applies a substitution whose images have no constant term.
    ///
    /// Such images never lower degrees, so the truncation stays valid.
    pub fn substitute(&self, target: &RingRef, images: &[Option<Poly>]) -> Result<TruncSeries, Error> {
        if images.iter().flatten().any(|p| !p.constant_term().is_zero()) {
            return Err(Error::Unsupported(
                "series substitution requires images without constant term".into(),
            ));
        }
        Ok(TruncSeries::new(self.poly.substitute(target, images)?, self.bound))
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({})", self.poly, self.bound + 1)
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::Ring;

    #[test]
    fn truncated_square() {
        let r = Ring::alpha(1);
        let s = TruncSeries::new(Poly::linear(&r, 1, &[(0, 1)]), 1);
        let sq = s.try_mul(&s).unwrap();
        assert_eq!(sq.poly(), &Poly::linear(&r, 1, &[(0, 2)]));
    }

    #[test]
    fn geometric_series() {
        let r = Ring::alpha(1);
        let s = TruncSeries::new(Poly::linear(&r, 1, &[(0, 2)]), 3);
        let inv = s.invert().unwrap();
        let expect = Poly::from_terms(
            &r,
            [
                (vec![0], Rational::from(1)),
                (vec![1], Rational::from(-2)),
                (vec![2], Rational::from(4)),
                (vec![3], Rational::from(-8)),
            ],
        );
        assert_eq!(inv.poly(), &expect);
        assert!(TruncSeries::one(&r, 5).invert().unwrap().poly() == &Poly::one(&r));
    }

    #[test]
    fn two_variable_inverse() {
        let r = Ring::alpha(2);
        let u = Poly::linear(&r, 1, &[(0, 1), (1, 1)]);
        let inv = TruncSeries::new(u.clone(), 2).invert().unwrap();
        let l = Poly::linear(&r, 0, &[(0, 1), (1, 1)]);
        let expect = &(&Poly::one(&r) - &l) + &l.pow(2);
        assert_eq!(inv.poly(), &expect);
    }

    #[test]
    fn zero_constant_term() {
        let r = Ring::alpha(1);
        let s = TruncSeries::new(Poly::var(&r, 0), 3);
        assert!(matches!(s.invert(), Err(Error::ZeroConstantTerm)));
    }

    #[test]
    fn bound_mismatch() {
        let r = Ring::alpha(1);
        let a = TruncSeries::one(&r, 2);
        let b = TruncSeries::one(&r, 3);
        assert!(matches!(a.try_add(&b), Err(Error::BoundMismatch { .. })));
    }

    #[test]
    fn gradewise_division() {
        let r = Ring::alpha(2);
        let v = Poly::linear(&r, 0, &[(0, 1), (1, -1)]);
        let u = Poly::linear(&r, 1, &[(0, 1), (1, 1)]);
        let num = TruncSeries::new(&v * &u.pow(3), 4);
        let q = num.divide_homogeneous(&v).unwrap();
        assert_eq!(q.bound(), 3);
        assert_eq!(q.poly(), &u.pow(3));
        let bad = TruncSeries::new(Poly::linear(&r, 1, &[(0, 1)]), 4);
        assert!(bad.divide_homogeneous(&v).is_err());
    }
}

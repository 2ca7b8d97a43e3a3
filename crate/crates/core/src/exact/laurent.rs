//! Laurent polynomials and reduced fractions of them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use super::ring::{Monomial, RingRef};
use crate::error::Error;

/// `x^shift * poly`, with `poly` not divisible by any variable.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    poly: Poly,
    shift: Vec<i32>,
}

impl LaurentPoly {
    pub fn new(poly: Poly, shift: Vec<i32>) -> LaurentPoly {
        assert_eq!(poly.nvars(), shift.len());
        let mut lp = LaurentPoly { poly, shift };
        lp.normalize();
        lp
    }

    pub fn from_poly(poly: Poly) -> LaurentPoly {
        let n = poly.nvars();
        LaurentPoly::new(poly, vec![0; n])
    }

    pub fn zero(ring: &RingRef) -> LaurentPoly {
        LaurentPoly::from_poly(Poly::zero(ring))
    }

    pub fn one(ring: &RingRef) -> LaurentPoly {
        LaurentPoly::from_poly(Poly::one(ring))
    }

    pub fn constant(ring: &RingRef, c: Rational) -> LaurentPoly {
        LaurentPoly::from_poly(Poly::constant(ring, c))
    }

    /// `c * x^exps` with possibly negative exponents.
    pub fn monomial(ring: &RingRef, exps: &[i32], c: Rational) -> LaurentPoly {
        let mut shift = vec![0; ring.len()];
        shift[..exps.len()].copy_from_slice(exps);
        LaurentPoly::new(Poly::constant(ring, c), shift)
    }

    fn normalize(&mut self) {
        if self.poly.is_zero() {
            self.shift.iter_mut().for_each(|s| *s = 0);
            return;
        }
        let n = self.poly.nvars();
        let mins: Vec<u16> = (0..n)
            .map(|v| self.poly.terms().map(|(m, _)| m.exp(v)).min().unwrap_or(0))
            .collect();
        if mins.iter().all(|&e| e == 0) {
            return;
        }
        let ring = self.poly.ring().clone();
        let div = Monomial::new(&ring, &mins);
        self.poly = self.poly.map_terms(|m| m.div(&div).expect("minimum exponent"));
        for (s, &e) in self.shift.iter_mut().zip(&mins) {
            *s += e as i32;
        }
    }

    pub fn ring(&self) -> &RingRef {
        self.poly.ring()
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn shift(&self) -> &[i32] {
        &self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// The underlying polynomial when all exponents are non-negative.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.shift.iter().any(|&s| s < 0) {
            return None;
        }
        let m = Monomial::new(self.ring(), &self.shift.iter().map(|&s| s as u16).collect::<Vec<_>>());
        Some(self.poly.mul_monomial(&m, &Rational::ONE))
    }

    fn check(&self, other: &LaurentPoly) -> Result<(), Error> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch {
                left: self.ring().names().to_vec(),
                right: other.ring().names().to_vec(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, Error> {
        self.check(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let base: Vec<i32> = self.shift.iter().zip(&other.shift).map(|(&a, &b)| a.min(b)).collect();
        let lift = |lp: &LaurentPoly| {
            let e: Vec<u16> = lp.shift.iter().zip(&base).map(|(&s, &b)| (s - b) as u16).collect();
            lp.poly.mul_monomial(&Monomial::new(lp.ring(), &e), &Rational::ONE)
        };
        Ok(LaurentPoly::new(lift(self).try_add(&lift(other))?, base))
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, Error> {
        self.check(other)?;
        let shift = self.shift.iter().zip(&other.shift).map(|(a, b)| a + b).collect();
        Ok(LaurentPoly::new(self.poly.try_mul(&other.poly)?, shift))
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        LaurentPoly::new(self.poly.scale(c), self.shift.clone())
    }

    pub fn neg(&self) -> LaurentPoly {
        self.scale(&Rational::from(-1))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, Error> {
        let mut v = self.poly.evaluate(point);
        for (x, &s) in point.iter().zip(&self.shift) {
            if s == 0 {
                continue;
            }
            if x.is_zero() && s < 0 {
                return Err(Error::DivisionByZero);
            }
            let p = x.pow(s.unsigned_abs());
            v = if s > 0 { &v * &p } else { v.checked_div(&p)? };
        }
        Ok(v)
    }

    pub fn to_text(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let names = self.ring().names();
        for (i, &s) in self.shift.iter().enumerate() {
            match s {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], s)),
            }
        }
        if parts.is_empty() {
            return self.poly.to_text();
        }
        format!("{}*({})", parts.join("*"), self.poly)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.to_text())
    }
}

/// Splits `p` as `c * q` with `q` integral, primitive, with positive leading coefficient.
fn primitive_part(p: &Poly) -> (Rational, Poly) {
    let mut g = BigInt::zero();
    let mut l = BigInt::one();
    for (_, c) in p.terms() {
        g = g.gcd(&c.numer());
        l = l.lcm(&c.denom());
    }
    let mut content = Rational::from_bigints(g, l).expect("nonzero denominator");
    if p.leading_term().is_some_and(|(_, c)| c.is_negative()) {
        content = -content;
    }
    let inv = content.recip().expect("nonzero content");
    (content, p.scale(&inv))
}

/// A quotient of Laurent polynomials with a factored denominator.
///
/// The denominator is a list of normalized polynomial factors with
/// multiplicities: each factor is primitive over the integers, has a
/// positive leading coefficient and is not divisible by any variable.
/// Monomials and scalars in the denominator are absorbed into the
/// numerator. Reduction cancels a factor whenever it divides the
/// numerator exactly, which suffices for explicitly built products.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentFraction {
    num: LaurentPoly,
    den: Vec<(Poly, u32)>,
}

impl LaurentFraction {
    pub fn from_laurent(num: LaurentPoly) -> LaurentFraction {
        LaurentFraction { num, den: Vec::new() }
    }

    pub fn from_poly(p: Poly) -> LaurentFraction {
        LaurentFraction::from_laurent(LaurentPoly::from_poly(p))
    }

    pub fn zero(ring: &RingRef) -> LaurentFraction {
        LaurentFraction::from_laurent(LaurentPoly::zero(ring))
    }

    pub fn one(ring: &RingRef) -> LaurentFraction {
        LaurentFraction::from_laurent(LaurentPoly::one(ring))
    }

    pub fn constant(ring: &RingRef, c: Rational) -> LaurentFraction {
        LaurentFraction::from_laurent(LaurentPoly::constant(ring, c))
    }

    /// `num / (d_1 * d_2 * ...)`, keeping the listed denominator factors apart.
    pub fn from_factors(num: LaurentPoly, dens: &[LaurentPoly]) -> Result<LaurentFraction, Error> {
        let mut out = LaurentFraction::from_laurent(num);
        for d in dens {
            out = out.try_mul(&LaurentFraction::reciprocal(d)?)?;
        }
        Ok(out)
    }

    pub fn ratio(num: LaurentPoly, den: LaurentPoly) -> Result<LaurentFraction, Error> {
        LaurentFraction::from_factors(num, &[den])
    }

    /// `1 / d`.
    pub fn reciprocal(d: &LaurentPoly) -> Result<LaurentFraction, Error> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = d.ring().clone();
        let (c, prim) = primitive_part(d.poly());
        let shift: Vec<i32> = d.shift().iter().map(|s| -s).collect();
        let num = LaurentPoly::new(Poly::constant(&ring, c.recip()?), shift);
        let den = if prim.degree() == Some(0) {
            Vec::new()
        } else {
            vec![(prim, 1)]
        };
        Ok(LaurentFraction { num, den })
    }

    pub fn ring(&self) -> &RingRef {
        self.num.ring()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[(Poly, u32)] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial when the denominator is trivial.
    pub fn to_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_empty().then_some(&self.num)
    }

    fn check(&self, other: &LaurentFraction) -> Result<(), Error> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch {
                left: self.ring().names().to_vec(),
                right: other.ring().names().to_vec(),
            });
        }
        Ok(())
    }

    fn reduce(mut self) -> LaurentFraction {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let mut kept = Vec::new();
        for (f, mut m) in std::mem::take(&mut self.den) {
            while m > 0 {
                match self.num.poly.exact_divide(&f) {
                    Ok(q) => {
                        self.num = LaurentPoly::new(q, self.num.shift.clone());
                        m -= 1;
                    }
                    Err(_) => break,
                }
            }
            if m > 0 {
                kept.push((f, m));
            }
        }
        self.den = kept;
        self
    }

    fn den_poly(ring: &RingRef, den: &[(Poly, u32)]) -> Poly {
        den.iter().fold(Poly::one(ring), |acc, (f, m)| &acc * &f.pow(*m))
    }

    pub fn try_mul(&self, other: &LaurentFraction) -> Result<LaurentFraction, Error> {
        self.check(other)?;
        let num = self.num.try_mul(&other.num)?;
        let mut den = self.den.clone();
        for (f, m) in &other.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some((_, k)) => *k += m,
                None => den.push((f.clone(), *m)),
            }
        }
        Ok(LaurentFraction { num, den }.reduce())
    }

    pub fn try_add(&self, other: &LaurentFraction) -> Result<LaurentFraction, Error> {
        self.check(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let ring = self.ring().clone();
        let mut lcm = self.den.clone();
        for (f, m) in &other.den {
            match lcm.iter_mut().find(|(g, _)| g == f) {
                Some((_, k)) => *k = (*k).max(*m),
                None => lcm.push((f.clone(), *m)),
            }
        }
        let cofactor = |den: &[(Poly, u32)]| {
            let missing: Vec<(Poly, u32)> = lcm
                .iter()
                .map(|(f, m)| {
                    let have = den.iter().find(|(g, _)| g == f).map_or(0, |(_, k)| *k);
                    (f.clone(), m - have)
                })
                .collect();
            LaurentPoly::from_poly(LaurentFraction::den_poly(&ring, &missing))
        };
        let a = self.num.try_mul(&cofactor(&self.den))?;
        let b = other.num.try_mul(&cofactor(&other.den))?;
        Ok(LaurentFraction {
            num: a.try_add(&b)?,
            den: lcm,
        }
        .reduce())
    }

    pub fn try_sub(&self, other: &LaurentFraction) -> Result<LaurentFraction, Error> {
        self.try_add(&other.neg())
    }

    pub fn try_div(&self, other: &LaurentFraction) -> Result<LaurentFraction, Error> {
        self.check(other)?;
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv_num = LaurentFraction::reciprocal(&other.num)?;
        let den_as_num = LaurentFraction::from_poly(LaurentFraction::den_poly(self.ring(), &other.den));
        self.try_mul(&inv_num)?.try_mul(&den_as_num)
    }

    pub fn scale(&self, c: &Rational) -> LaurentFraction {
        LaurentFraction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
        .reduce()
    }

    pub fn neg(&self) -> LaurentFraction {
        self.scale(&Rational::from(-1))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, Error> {
        let n = self.num.evaluate(point)?;
        let mut d = Rational::ONE;
        for (f, m) in &self.den {
            d = &d * &f.evaluate(point).pow(*m);
        }
        n.checked_div(&d)
    }

    /// Numerator and denominator as Laurent polynomials.
    pub fn to_pair(&self) -> (LaurentPoly, Poly) {
        (self.num.clone(), LaurentFraction::den_poly(self.ring(), &self.den))
    }

    pub fn to_text(&self) -> String {
        if self.den.is_empty() {
            return self.num.to_text();
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(f, m)| {
                if *m == 1 {
                    format!("({f})")
                } else {
                    format!("({f})^{m}")
                }
            })
            .collect();
        format!("({}) / {}", self.num.to_text(), den.join("*"))
    }
}

impl fmt::Display for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentFraction({})", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ring::Ring;

    fn lp(ring: &RingRef, exps: &[i32], c: i64) -> LaurentPoly {
        LaurentPoly::monomial(ring, exps, Rational::from(c))
    }

    #[test]
    fn inverse_sums() {
        let r = Ring::alpha(2);
        let inv = LaurentFraction::from_laurent(lp(&r, &[-1], 1));
        let sum = inv.try_add(&inv).unwrap();
        assert_eq!(sum, LaurentFraction::from_laurent(lp(&r, &[-1], 2)));
    }

    #[test]
    fn product_clears_shift() {
        let r = Ring::alpha(2);
        let a = LaurentFraction::from_laurent(LaurentPoly::one(&r).try_add(&lp(&r, &[-1, -1], -1)).unwrap());
        let b = LaurentFraction::from_laurent(lp(&r, &[1, 1], 1));
        let prod = a.try_mul(&b).unwrap();
        let expect = Poly::from_terms(&r, [(vec![1, 1], Rational::ONE), (vec![0, 0], Rational::from(-1))]);
        assert_eq!(prod.to_laurent().unwrap().to_poly().unwrap(), expect);
    }

    #[test]
    fn cancellation_of_difference() {
        // 1/(a1-a2) + 1/(a2-a1) = 0 and a1/(a1-a2) + a2/(a2-a1) = 1
        let r = Ring::alpha(2);
        let d = LaurentPoly::from_poly(Poly::linear(&r, 0, &[(0, 1), (1, -1)]));
        let f = LaurentFraction::reciprocal(&d).unwrap();
        let g = LaurentFraction::reciprocal(&d.neg()).unwrap();
        assert!(f.try_add(&g).unwrap().is_zero());
        let x = LaurentFraction::from_poly(Poly::var(&r, 0));
        let y = LaurentFraction::from_poly(Poly::var(&r, 1));
        let s = x.try_mul(&f).unwrap().try_add(&y.try_mul(&g).unwrap()).unwrap();
        assert_eq!(s, LaurentFraction::one(&r));
    }

    #[test]
    fn zero_denominator() {
        let r = Ring::alpha(1);
        assert!(matches!(
            LaurentFraction::reciprocal(&LaurentPoly::zero(&r)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn evaluation() {
        let r = Ring::alpha(2);
        let num = LaurentPoly::from_poly(Poly::linear(&r, -1, &[(0, 0)]))
            .try_add(&lp(&r, &[1, 1], 1))
            .unwrap();
        let den = LaurentPoly::from_poly(Poly::linear(&r, 3, &[]))
            .try_add(&lp(&r, &[1, 1], 1))
            .unwrap();
        let f = LaurentFraction::ratio(num, den).unwrap();
        let v = f.evaluate(&[Rational::from(2), Rational::from(3)]).unwrap();
        assert_eq!(v, Rational::new(5, 9));
    }
}

//! Sparse multivariate polynomials over [`Rational`].

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use super::rational::Rational;
use super::ring::{Monomial, Ring, RingRef, MAX_VARS};
use crate::error::Error;

/// Sparse polynomial with a declared variable set.
///
/// Terms are kept in graded-lex order; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: RingRef,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(ring: &RingRef) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Poly {
        Poly::constant(ring, Rational::ONE)
    }

    pub fn constant(ring: &RingRef, c: Rational) -> Poly {
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn var(ring: &RingRef, i: usize) -> Poly {
        assert!(i < ring.len(), "variable index {i} out of range");
        let mut p = Poly::zero(ring);
        p.terms.insert(Monomial::var(ring, i), Rational::ONE);
        p
    }

    pub fn var_named(ring: &RingRef, name: &str) -> Result<Poly, Error> {
        Ok(Poly::var(ring, ring.index(name)?))
    }

    pub fn monomial(ring: &RingRef, exps: &[u16], c: Rational) -> Poly {
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::new(ring, exps), c);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(ring: &RingRef, terms: I) -> Poly
    where
        I: IntoIterator<Item = (Vec<u16>, Rational)>,
    {
        let mut p = Poly::zero(ring);
        for (e, c) in terms {
            p.add_term(Monomial::new(ring, &e), &c);
        }
        p
    }

    pub(crate) fn from_map(ring: &RingRef, terms: BTreeMap<Monomial, Rational>) -> Poly {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn from_hash(ring: &RingRef, acc: FxHashMap<Monomial, Rational>) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Sum of `a_i + a_j` style linear forms: `Σ coeff * var`.
    pub fn linear(ring: &RingRef, constant: i64, coeffs: &[(usize, i64)]) -> Poly {
        let mut p = Poly::constant(ring, Rational::from(constant));
        for &(i, c) in coeffs {
            p.add_term(Monomial::var(ring, i), &Rational::from(c));
        }
        p
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn coeff_of(&self, exps: &[u16]) -> Rational {
        self.coeff(&Monomial::new(&self.ring, exps))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::ONE)
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Highest (weighted) degree of a term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    /// Graded-lex leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.keys().map(|m| m.exp(var)).max()
    }

    /// Variables that occur with a positive exponent.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.terms.keys().any(|m| m.exp(i) > 0))
            .collect()
    }

    pub fn homogeneous_part(&self, d: u32) -> Poly {
        let lo = degree_floor(d);
        let hi = degree_floor(d + 1);
        Poly::from_map(
            &self.ring,
            self.terms.range(lo..hi).map(|(m, c)| (*m, c.clone())).collect(),
        )
    }

    /// Terms of degree in `lo..=hi`.
    pub fn degree_range(&self, lo: u32, hi: u32) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.range(degree_floor(lo)..degree_floor(hi + 1))
    }

    pub fn truncate(&self, bound: u32) -> Poly {
        Poly::from_map(
            &self.ring,
            self.terms
                .range(..degree_floor(bound + 1))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        )
    }

    pub fn is_homogeneous(&self) -> bool {
        self.min_degree() == self.degree()
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(Rational::is_integer)
    }

    fn check_ring(&self, other: &Poly) -> Result<(), Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.names().to_vec(),
                right: other.ring.names().to_vec(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, Error> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, Error> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, Error> {
        self.check_ring(other)?;
        Ok(self.mul_bounded(other, None))
    }

    /// Product, discarding terms above `bound` when one is given.
    pub fn mul_bounded(&self, other: &Poly, bound: Option<u32>) -> Poly {
        debug_assert_eq!(self.ring, other.ring);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let limit = bound.unwrap_or(u32::MAX);
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (ms, cs) in &small.terms {
            if ms.degree() > limit {
                break;
            }
            let room = limit - ms.degree();
            for (ml, cl) in large.terms.range(..degree_floor(room.saturating_add(1))) {
                let m = ms.mul(ml);
                let c = cs * cl;
                match acc.get_mut(&m) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Poly::from_hash(&self.ring, acc)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly::from_map(&self.ring, self.terms.iter().map(|(m, v)| (*m, v * c)).collect())
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly::from_map(
            &self.ring,
            self.terms.iter().map(|(m, v)| (m.mul(mono), v * c)).collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_bounded(self, None);
        }
        acc
    }

    pub fn product<'a>(ring: &RingRef, factors: impl IntoIterator<Item = &'a Poly>) -> Poly {
        factors
            .into_iter()
            .fold(Poly::one(ring), |acc, f| acc.mul_bounded(f, None))
    }

    /// Exact quotient `self / den`; fails if the division leaves a remainder.
    ///
    /// Multivariate long division against the graded-lex leading term. When
    /// `den` divides `self`, every intermediate leading term is divisible by
    /// the leading term of `den`, so a non-divisible leading term proves a
    /// nonzero remainder.
    pub fn exact_divide(&self, den: &Poly) -> Result<Poly, Error> {
        self.check_ring(den)?;
        let (lm, lc) = match den.leading_term() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let inv_lc = lc.recip()?;
        let mut rem = self.terms.clone();
        let mut quot: BTreeMap<Monomial, Rational> = BTreeMap::new();
        while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            let qm = m.div(&lm).ok_or(Error::NonzeroRemainder)?;
            let qc = &c * &inv_lc;
            for (dm, dc) in &den.terms {
                let t = qm.mul(dm);
                let delta = &qc * dc;
                match rem.entry(t) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        let s = o.get() - &delta;
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                }
            }
            quot.insert(qm, qc);
        }
        Ok(Poly::from_map(&self.ring, quot))
    }

    /// Divides by the binomial `x_i - x_j` (exactly) via synthetic division in `x_i`.
    pub fn divide_by_difference(&self, i: usize, j: usize) -> Result<Poly, Error> {
        let d = Poly::linear(&self.ring, 0, &[(i, 1), (j, -1)]);
        self.exact_divide(&d)
    }

    /// Applies the ring morphism sending variable `k` to `images[k]`.
    ///
    /// Every variable that occurs in `self` must have an image; `None`
    /// entries are allowed only for variables absent from `self`.
    pub fn substitute(&self, target: &RingRef, images: &[Option<Poly>]) -> Result<Poly, Error> {
        assert_eq!(images.len(), self.nvars());
        for v in self.support_vars() {
            match &images[v] {
                None => return Err(Error::UnmappedVariable(self.ring.name(v).to_string())),
                Some(p) if p.ring != *target => {
                    return Err(Error::RingMismatch {
                        left: p.ring.names().to_vec(),
                        right: target.names().to_vec(),
                    })
                }
                _ => {}
            }
        }
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|im| match im {
                Some(p) => vec![Poly::one(target), p.clone()],
                None => vec![Poly::one(target)],
            })
            .collect();
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (v, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(v) as usize;
                if e == 0 {
                    continue;
                }
                while pw.len() <= e {
                    let next = pw[pw.len() - 1].mul_bounded(&pw[1], None);
                    pw.push(next);
                }
                term = term.mul_bounded(&pw[e], None);
            }
            for (tm, tc) in term.terms {
                match acc.get_mut(&tm) {
                    Some(x) => *x += &tc,
                    None => {
                        acc.insert(tm, tc);
                    }
                }
            }
        }
        Ok(Poly::from_hash(target, acc))
    }

    /// Substitution by variable name; variables missing from `map` must not occur.
    pub fn substitute_map(&self, target: &RingRef, map: &HashMap<String, Poly>) -> Result<Poly, Error> {
        let images: Vec<Option<Poly>> = self.ring.names().iter().map(|n| map.get(n).cloned()).collect();
        self.substitute(target, &images)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars());
        let mut powers: Vec<Vec<Rational>> = point.iter().map(|x| vec![Rational::ONE, x.clone()]).collect();
        let mut total = Rational::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(v) as usize;
                if e == 0 {
                    continue;
                }
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * &pw[1];
                    pw.push(next);
                }
                t = &t * &pw[e];
            }
            total += &t;
        }
        total
    }

    /// Relabels variables: variable `i` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Poly {
        assert_eq!(perm.len(), self.nvars());
        Poly::from_map(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, c)| (m.permute(&self.ring, perm), c.clone()))
                .collect(),
        )
    }

    /// Symmetric under every permutation of the listed variables.
    pub fn is_symmetric_in(&self, vars: &[usize]) -> bool {
        let n = self.nvars();
        vars.windows(2).all(|w| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(w[0], w[1]);
            self.permute(&perm) == *self
        })
    }

    /// Re-embeds into a ring that contains every variable of `self` by name.
    pub fn to_ring(&self, target: &RingRef) -> Result<Poly, Error> {
        let map: Vec<usize> = self
            .ring
            .names()
            .iter()
            .map(|n| target.index(n))
            .collect::<Result<_, _>>()?;
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = [0u16; MAX_VARS];
            for (i, &t) in map.iter().enumerate() {
                e[t] = m.exp(i);
            }
            out.insert(Monomial::new(target, &e[..target.len()]), c.clone());
        }
        Ok(Poly::from_map(target, out))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Monomial, &Rational) -> Rational) -> Poly {
        Poly::from_map(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, c)| (*m, f(m, c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        )
    }

    /// Applies an injective map on monomials.
    pub fn map_terms(&self, f: impl Fn(&Monomial) -> Monomial) -> Poly {
        Poly::from_map(&self.ring, self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect())
    }

    /// Renders terms in ascending degree; within a degree, lex-descending.
    pub fn display_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut out: Vec<(Monomial, Rational)> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        out.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then(b.cmp(a)));
        out
    }
}

/// Smallest monomial of degree `d` in the graded order.
pub(crate) fn degree_floor(d: u32) -> Monomial {
    Monomial::degree_floor(d)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("ring mismatch in add")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("ring mismatch in sub")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("ring mismatch in mul")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Rational::from(-1))
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

pub(crate) fn format_monomial(ring: &Ring, m: &Monomial, latex: bool) -> String {
    let mut s = String::new();
    for i in 0..ring.len() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        let name = ring.name(i);
        if latex {
            s.push_str(&latex_var(name));
            if e > 1 {
                s.push_str(&format!("^{{{e}}}"));
            }
        } else {
            s.push_str(name);
            if e > 1 {
                s.push_str(&format!("^{e}"));
            }
        }
    }
    s
}

fn latex_var(name: &str) -> String {
    let split = name.find(|c: char| c.is_ascii_digit());
    let (base, idx) = match split {
        Some(k) => name.split_at(k),
        None => (name, ""),
    };
    let base = match base {
        "a" => "\\alpha",
        "s" => "\\sigma",
        "xi" => "\\xi",
        other => other,
    };
    if idx.is_empty() {
        if base.starts_with('\\') {
            format!("{base} ")
        } else {
            base.to_string()
        }
    } else {
        format!("{base}_{{{idx}}}")
    }
}

/// Joins `(coefficient, body)` pairs as `c1 + 2c2 - c3`; an empty body is a constant.
pub(crate) fn join_terms<'a>(terms: impl IntoIterator<Item = (&'a Rational, String)>, latex: bool) -> String {
    let mut out = String::new();
    for (c, body) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let coeff = if latex && !a.is_integer() {
            format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
        } else {
            a.to_string()
        };
        if body.is_empty() {
            out.push_str(&coeff);
        } else {
            if !a.is_one() {
                out.push_str(&coeff);
                if !latex && !a.is_integer() {
                    out.push(' ');
                }
            }
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Poly {
    pub fn to_text(&self) -> String {
        let terms = self.display_terms();
        join_terms(
            terms.iter().map(|(m, c)| (c, format_monomial(&self.ring, m, false))),
            false,
        )
    }

    pub fn to_latex(&self) -> String {
        let terms = self.display_terms();
        join_terms(
            terms.iter().map(|(m, c)| (c, format_monomial(&self.ring, m, true))),
            true,
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> RingRef {
        Ring::alpha(n)
    }

    #[test]
    fn difference_of_squares() {
        let r = a(2);
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let p = &(&x + &y) * &(&x - &y);
        let expect = &x.pow(2) - &y.pow(2);
        assert_eq!(p, expect);
        assert_eq!(p.to_text(), "a1^2 - a2^2");
    }

    #[test]
    fn exact_division() {
        let r = a(2);
        let x = Poly::var(&r, 0);
        let y = Poly::var(&r, 1);
        let num = &x.pow(2) - &y.pow(2);
        assert_eq!(num.exact_divide(&(&x - &y)).unwrap(), &x + &y);
        let bad = &x.pow(2) + &y;
        assert!(matches!(bad.exact_divide(&(&x - &y)), Err(Error::NonzeroRemainder)));
        assert!(matches!(num.exact_divide(&Poly::zero(&r)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let p = Poly::var(&a(2), 0);
        let q = Poly::var(&a(3), 0);
        assert!(matches!(p.try_add(&q), Err(Error::RingMismatch { .. })));
        assert!(matches!(p.try_mul(&q), Err(Error::RingMismatch { .. })));
    }

    #[test]
    fn substitution_examples() {
        let r = a(2);
        let s = Ring::new(["s1"]);
        let sigma = Poly::var(&s, 0);
        let p = &Poly::var(&r, 0) + &Poly::var(&r, 1);
        let img = p.substitute(&s, &[Some(sigma.clone()), Some(-&sigma)]).unwrap();
        assert!(img.is_zero());

        let xi = Ring::new(["xi"]);
        let half = Poly::var(&xi, 0).scale(&Rational::new(1, 2));
        let prod = &Poly::var(&r, 0) * &Poly::var(&r, 1);
        let img = prod.substitute(&xi, &[Some(half.clone()), Some(half)]).unwrap();
        assert_eq!(img, Poly::monomial(&xi, &[2], Rational::new(1, 4)));

        let err = prod.substitute(&xi, &[Some(Poly::var(&xi, 0)), None]);
        assert!(matches!(err, Err(Error::UnmappedVariable(v)) if v == "a2"));
    }

    #[test]
    fn symmetry_and_permutation() {
        let r = a(3);
        let e2 = Poly::from_terms(
            &r,
            [
                (vec![1, 1, 0], Rational::ONE),
                (vec![1, 0, 1], Rational::ONE),
                (vec![0, 1, 1], Rational::ONE),
            ],
        );
        assert!(e2.is_symmetric_in(&[0, 1, 2]));
        assert!(!Poly::var(&r, 0).is_symmetric_in(&[0, 1, 2]));
        assert_eq!(Poly::var(&r, 0).permute(&[2, 0, 1]), Poly::var(&r, 2));
    }

    #[test]
    fn truncation_and_parts() {
        let r = a(1);
        let p = Poly::linear(&r, 1, &[(0, 1)]).pow(3);
        assert_eq!(p.truncate(1), Poly::linear(&r, 1, &[(0, 3)]));
        assert_eq!(p.homogeneous_part(2), Poly::monomial(&r, &[2], Rational::from(3)));
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn evaluation() {
        let r = a(2);
        let p = Poly::linear(&r, 1, &[(0, 2), (1, -1)]).pow(2);
        let v = p.evaluate(&[Rational::new(1, 2), Rational::from(3)]);
        assert_eq!(v, Rational::from(1));
    }
}

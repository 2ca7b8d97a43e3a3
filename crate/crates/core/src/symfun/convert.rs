//! Basis changes between root monomials, Chern classes and Schur polynomials.

use itertools::Itertools;
use rustc_hash::FxHashMap;

use super::expansion::SchurExpansion;
use super::partition::Partition;
use super::schur::{chern_to_alpha, schur_chern};
use crate::error::Error;
use crate::exact::{Monomial, Poly, Rational, Ring};

fn check_alpha(p: &Poly, n: usize) -> Result<(), Error> {
    if p.nvars() != n {
        return Err(Error::RingMismatch {
            left: p.ring().names().to_vec(),
            right: Ring::alpha(n).names().to_vec(),
        });
    }
    if !p.is_symmetric_in(&(0..n).collect::<Vec<_>>()) {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

/// Permutations of the staircase exponent `(n-1, ..., 0)` with their signs.
fn staircase_perms(n: usize) -> Vec<(Vec<u32>, bool)> {
    (0..n)
        .permutations(n)
        .map(|perm| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            let shift = perm.iter().map(|&k| (n - 1 - k) as u32).collect();
            (shift, inversions % 2 == 1)
        })
        .collect()
}

/// Schur coefficients of a symmetric polynomial in `a1..an`.
///
/// The coefficient of `s_λ` equals the coefficient of `a^(λ+δ)` in
/// `p * a_δ`, where `a_δ` is the Vandermonde determinant; this is read off
/// directly without forming the product.
pub fn to_schur_basis(p: &Poly, n: usize) -> Result<SchurExpansion, Error> {
    check_alpha(p, n)?;
    Ok(schur_coefficients_unchecked(p, n))
}

pub(crate) fn schur_coefficients_unchecked(p: &Poly, n: usize) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    let (Some(lo), Some(hi)) = (p.min_degree(), p.degree()) else {
        return out;
    };
    if n == 0 {
        out.add_term(Partition::empty(), &p.constant_term());
        return out;
    }
    let ring = p.ring().clone();
    let lookup: FxHashMap<Monomial, Rational> = p.terms().map(|(m, c)| (*m, c.clone())).collect();
    let max_part = p.degree_in(0).unwrap_or(0) as u32;
    let perms = staircase_perms(n);
    let mut exps = vec![0u16; n];
    for d in lo..=hi {
        for lambda in Partition::all_of(d, n, max_part) {
            let mut acc = Rational::ZERO;
            'perm: for (shift, odd) in &perms {
                for i in 0..n {
                    let target = lambda.part(i) + (n - 1 - i) as u32;
                    if target < shift[i] {
                        continue 'perm;
                    }
                    exps[i] = (target - shift[i]) as u16;
                }
                if let Some(c) = lookup.get(&Monomial::new(&ring, &exps)) {
                    if *odd {
                        acc -= c;
                    } else {
                        acc += c;
                    }
                }
            }
            out.add_term(lambda, &acc);
        }
    }
    out
}

/// Rewrites a symmetric polynomial in `a1..an` in the Chern classes `c1..cn`.
pub fn to_chern_basis(p: &Poly, n: usize) -> Result<Poly, Error> {
    Ok(schur_to_chern(&to_schur_basis(p, n)?, n))
}

pub fn schur_to_chern(e: &SchurExpansion, n: usize) -> Poly {
    let ring = Ring::chern(n);
    let mut out = Poly::zero(&ring);
    for (lambda, c) in e.terms() {
        if lambda.len() > n {
            continue;
        }
        for (m, v) in schur_chern(lambda, n).terms() {
            out.add_term(*m, &(v * c));
        }
    }
    out
}

pub fn schur_to_alpha(e: &SchurExpansion, n: usize) -> Poly {
    chern_to_alpha(&schur_to_chern(e, n), n)
}

/// Schur coefficients of a polynomial in `c1..cn`.
pub fn chern_to_schur(p: &Poly, n: usize) -> Result<SchurExpansion, Error> {
    if p.ring().names() != Ring::chern(n).names() {
        return Err(Error::RingMismatch {
            left: p.ring().names().to_vec(),
            right: Ring::chern(n).names().to_vec(),
        });
    }
    Ok(schur_coefficients_unchecked(&chern_to_alpha(p, n), n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::schur::{elementary, schur_poly};

    #[test]
    fn two_roots_sum_is_c1() {
        let a = Ring::alpha(2);
        let p = &Poly::var(&a, 0) + &Poly::var(&a, 1);
        let c = to_chern_basis(&p, 2).unwrap();
        assert_eq!(c, Poly::var(&Ring::chern(2), 0));
    }

    #[test]
    fn non_symmetric_rejected() {
        let a = Ring::alpha(2);
        assert_eq!(to_schur_basis(&Poly::var(&a, 0), 2), Err(Error::NotSymmetric));
    }

    #[test]
    fn c1_squared() {
        let a = Ring::alpha(3);
        let c1 = elementary(&a, 1);
        let e = to_schur_basis(&(&c1 * &c1), 3).unwrap();
        assert_eq!(e.to_text(), "s2 + s11");
        let one = to_schur_basis(&Poly::one(&a), 3).unwrap();
        assert_eq!(one.to_text(), "s0");
    }

    #[test]
    fn round_trip_through_schur() {
        let a = Ring::alpha(3);
        let lam = Partition::from([3, 1]);
        let p = &schur_poly(&lam, 3).scale(&Rational::from(5)) - &schur_poly(&Partition::from([1, 1, 1]), 3);
        let e = to_schur_basis(&p, 3).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(schur_to_alpha(&e, 3), p);
        let _ = a;
    }
}

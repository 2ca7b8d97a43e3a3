//! Elementary, complete and Schur polynomials.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use itertools::Itertools;

use super::partition::Partition;
use crate::exact::{binomial, Poly, Rational, Ring, RingRef};

/// `e_k(a1..an)`.
pub fn elementary(ring: &RingRef, k: usize) -> Poly {
    let n = ring.len();
    if k > n {
        return Poly::zero(ring);
    }
    let mut p = Poly::zero(ring);
    for subset in (0..n).combinations(k) {
        let mut e = vec![0u16; n];
        for i in subset {
            e[i] = 1;
        }
        p.add_term(crate::exact::Monomial::new(ring, &e), &Rational::ONE);
    }
    p
}

/// `h_k(a1..an)`: sum of all monomials of degree `k`.
pub fn complete(ring: &RingRef, k: usize) -> Poly {
    let n = ring.len();
    let mut p = Poly::zero(ring);
    if n == 0 {
        return if k == 0 { Poly::one(ring) } else { p };
    }
    for multiset in (0..n).combinations_with_replacement(k) {
        let mut e = vec![0u16; n];
        for i in multiset {
            e[i] += 1;
        }
        p.add_term(crate::exact::Monomial::new(ring, &e), &Rational::ONE);
    }
    p
}

/// Determinant of a square matrix of polynomials by expansion over column
/// subsets, `O(m 2^m)` products.
pub(crate) fn poly_det(ring: &RingRef, m: &[Vec<Poly>]) -> Poly {
    let size = m.len();
    if size == 0 {
        return Poly::one(ring);
    }
    let mut layer: HashMap<u32, Poly> = HashMap::from([(0u32, Poly::one(ring))]);
    for row in m {
        let mut next: HashMap<u32, Poly> = HashMap::new();
        for (mask, acc) in &layer {
            for (j, entry) in row.iter().enumerate() {
                if mask & (1 << j) != 0 || entry.is_zero() {
                    continue;
                }
                let above = (mask >> (j + 1)).count_ones();
                let mut term = acc * entry;
                if above % 2 == 1 {
                    term = -term;
                }
                let slot = next.entry(mask | (1 << j)).or_insert_with(|| Poly::zero(ring));
                *slot = &*slot + &term;
            }
        }
        layer = next;
    }
    layer.remove(&((1u32 << size) - 1)).unwrap_or_else(|| Poly::zero(ring))
}

fn chern_cache() -> &'static Mutex<HashMap<(Partition, usize), Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, usize), Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Schur polynomial `s_λ(a1..an)` written in the Chern classes `c1..cn`,
/// via the dual Jacobi–Trudi determinant `det(e_{λ'_i + j - i})`.
///
/// Convention: `s_(1,1) = e_2` and `s_(2) = h_2`. Zero when `λ` has more
/// than `n` parts.
pub fn schur_chern(lambda: &Partition, n: usize) -> Poly {
    let key = (lambda.clone(), n);
    if let Some(p) = chern_cache().lock().expect("cache lock").get(&key) {
        return p.clone();
    }
    let ring = Ring::chern(n);
    let p = if lambda.len() > n {
        Poly::zero(&ring)
    } else {
        let conj = lambda.conjugate();
        let m = conj.len();
        let e = |k: i64| -> Poly {
            if k == 0 {
                Poly::one(&ring)
            } else if k < 0 || k as usize > n {
                Poly::zero(&ring)
            } else {
                Poly::var(&ring, k as usize - 1)
            }
        };
        let matrix: Vec<Vec<Poly>> = (0..m)
            .map(|i| (0..m).map(|j| e(conj.part(i) as i64 + j as i64 - i as i64)).collect())
            .collect();
        poly_det(&ring, &matrix)
    };
    chern_cache().lock().expect("cache lock").insert(key, p.clone());
    p
}

/// Expands a polynomial in `c1..cn` into the roots `a1..an`.
pub fn chern_to_alpha(p: &Poly, n: usize) -> Poly {
    let alpha = Ring::alpha(n);
    let images: Vec<Option<Poly>> = (1..=p.nvars()).map(|k| Some(elementary(&alpha, k))).collect();
    p.substitute(&alpha, &images).expect("every Chern class has an image")
}

/// `s_λ(a1..an)` as a polynomial in the roots.
pub fn schur_poly(lambda: &Partition, n: usize) -> Poly {
    chern_to_alpha(&schur_chern(lambda, n), n)
}

/// `s_λ(1,...,1)` with `n` ones: `Π_{i<j} (λ_i - λ_j + j - i) / (j - i)`.
pub fn schur_at_ones(lambda: &Partition, n: usize) -> Rational {
    if lambda.len() > n {
        return Rational::ZERO;
    }
    let mut num = Rational::ONE;
    for i in 0..n {
        for j in i + 1..n {
            let l = lambda.part(i) as i64 - lambda.part(j) as i64;
            num = &num * &Rational::new(l + (j - i) as i64, (j - i) as i64);
        }
    }
    num
}

/// `e_k(1,...,1) = C(n,k)`, the value of `c_k` at the all-ones point.
pub fn chern_at_ones(n: usize, k: usize) -> Rational {
    Rational::from(binomial(n as i64, k as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schur_conventions() {
        let r = Ring::alpha(3);
        let s11 = schur_poly(&Partition::from([1, 1]), 3);
        assert_eq!(s11, elementary(&r, 2));
        let s2 = schur_poly(&Partition::from([2]), 2);
        assert_eq!(s2, complete(&Ring::alpha(2), 2));
    }

    #[test]
    fn two_one_in_chern_classes() {
        let c = Ring::chern(3);
        let expect = &(&Poly::var(&c, 0) * &Poly::var(&c, 1)) - &Poly::var(&c, 2);
        assert_eq!(schur_chern(&Partition::from([2, 1]), 3), expect);
    }

    #[test]
    fn staircase_matches_fundamental_class_shape() {
        // s_321 = c1c2c3 - c3^2 - c1^2c4 (+ c1c5, absent for n = 4)
        let p = schur_chern(&Partition::from([3, 2, 1]), 4);
        let c = Ring::chern(4);
        let expect = Poly::from_terms(
            &c,
            [
                (vec![1, 1, 1, 0], Rational::ONE),
                (vec![0, 0, 2, 0], Rational::from(-1)),
                (vec![2, 0, 0, 1], Rational::from(-1)),
            ],
        );
        assert_eq!(p, expect);
    }

    #[test]
    fn too_long_vanishes() {
        assert!(schur_poly(&Partition::from([1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn value_at_ones() {
        assert_eq!(schur_at_ones(&Partition::from([1]), 4), Rational::from(4));
        assert_eq!(schur_at_ones(&Partition::from([1, 1]), 4), Rational::from(6));
        assert_eq!(schur_at_ones(&Partition::from([2]), 3), Rational::from(6));
        let lam = Partition::from([2, 1]);
        let direct = schur_poly(&lam, 3).evaluate(&[Rational::ONE, Rational::ONE, Rational::ONE]);
        assert_eq!(schur_at_ones(&lam, 3), direct);
    }
}

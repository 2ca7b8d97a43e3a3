//! Variable sets and exponent vectors.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// Maximum number of variables a single ring may declare.
pub const MAX_VARS: usize = 16;

/// An ordered, named variable set with per-variable grading weights.
///
/// Weights are 1 for Chern roots and auxiliary variables, and `k` for the
/// Chern class `c_k`, so "degree" always means cohomological degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    weights: Vec<u32>,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> RingRef {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let weights = vec![1; names.len()];
        Ring::weighted(names, weights)
    }

    pub fn weighted(names: Vec<String>, weights: Vec<u32>) -> RingRef {
        assert!(names.len() <= MAX_VARS, "too many variables: {}", names.len());
        assert_eq!(names.len(), weights.len());
        Arc::new(Ring { names, weights })
    }

    /// Chern roots `a1..an`.
    pub fn alpha(n: usize) -> RingRef {
        Ring::new((1..=n).map(|i| format!("a{i}")))
    }

    /// Chern classes `c1..cn`, `c_k` of weight `k`.
    pub fn chern(n: usize) -> RingRef {
        Ring::weighted((1..=n).map(|i| format!("c{i}")).collect(), (1..=n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn index(&self, name: &str) -> Result<usize, Error> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// A ring with the variables of `self` followed by `extra` (duplicates dropped).
    pub fn extend<S: Into<String>>(&self, extra: impl IntoIterator<Item = S>) -> RingRef {
        let mut names = self.names.clone();
        let mut weights = self.weights.clone();
        for e in extra {
            let e = e.into();
            if !names.contains(&e) {
                names.push(e);
                weights.push(1);
            }
        }
        Ring::weighted(names, weights)
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", self.names)
    }
}

/// Exponent vector with cached weighted degree.
///
/// The derived order compares the degree first and then the exponents
/// lexicographically, which is the graded-lex order with the first variable
/// largest.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        deg: 0,
        exps: [0; MAX_VARS],
    };

    pub fn new(ring: &Ring, exps: &[u16]) -> Monomial {
        assert!(exps.len() <= ring.len(), "exponent vector longer than ring");
        let mut e = [0u16; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        Monomial::from_array(ring, e)
    }

    fn from_array(ring: &Ring, exps: [u16; MAX_VARS]) -> Monomial {
        let deg = exps.iter().zip(ring.weights()).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { deg, exps }
    }

    pub fn var(ring: &Ring, i: usize) -> Monomial {
        let mut e = [0u16; MAX_VARS];
        e[i] = 1;
        Monomial::from_array(ring, e)
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn exps(&self, nvars: usize) -> &[u16] {
        &self.exps[..nvars]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; MAX_VARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        Monomial {
            deg: self.deg + other.deg,
            exps,
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = [0u16; MAX_VARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i].checked_sub(other.exps[i])?;
        }
        Some(Monomial {
            deg: self.deg - other.deg,
            exps,
        })
    }

    /// Relabels variables: exponent of variable `i` moves to `perm[i]`.
    pub fn permute(&self, ring: &Ring, perm: &[usize]) -> Monomial {
        let mut exps = self.exps;
        for (i, &p) in perm.iter().enumerate() {
            exps[p] = self.exps[i];
        }
        Monomial::from_array(ring, exps)
    }

    pub fn with_exp(&self, ring: &Ring, i: usize, e: u16) -> Monomial {
        let mut exps = self.exps;
        exps[i] = e;
        Monomial::from_array(ring, exps)
    }

    /// Smallest monomial of degree `deg`; only meaningful as a range bound.
    pub(crate) fn degree_floor(deg: u32) -> Monomial {
        Monomial {
            deg,
            exps: [0; MAX_VARS],
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let r = Ring::alpha(3);
        let a = Monomial::new(&r, &[2, 0, 0]);
        let b = Monomial::new(&r, &[1, 1, 0]);
        let c = Monomial::new(&r, &[0, 0, 3]);
        assert!(a > b);
        assert!(c > a);
    }

    #[test]
    fn weighted_degree() {
        let r = Ring::chern(3);
        let m = Monomial::new(&r, &[1, 0, 2]);
        assert_eq!(m.degree(), 7);
    }

    #[test]
    fn divide_and_permute() {
        let r = Ring::alpha(3);
        let a = Monomial::new(&r, &[2, 1, 0]);
        let b = Monomial::new(&r, &[1, 1, 0]);
        assert_eq!(a.div(&b), Some(Monomial::new(&r, &[1, 0, 0])));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.permute(&r, &[2, 0, 1]), Monomial::new(&r, &[1, 0, 2]));
    }
}

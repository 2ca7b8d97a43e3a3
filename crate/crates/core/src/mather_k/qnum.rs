//! q-integers, q-binomials and q-Euler numbers.

use crate::error::Error;
use crate::exact::{LaurentFraction, LaurentPoly, Poly, Rational, Ring, RingRef};

pub fn q_ring() -> RingRef {
    Ring::new(["q"])
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_integer(n: usize) -> Poly {
    let ring = q_ring();
    Poly::from_terms(&ring, (0..n).map(|i| (vec![i as u16], Rational::ONE)))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> Poly {
    (1..=n).fold(Poly::one(&q_ring()), |acc, k| &acc * &q_integer(k))
}

/// `[n]_q! / ([m]_q! [n-m]_q!)`, by exact division.
pub fn q_binomial(n: usize, m: usize) -> Result<Poly, Error> {
    if m > n {
        return Err(Error::RankOutOfRange { n, r: m });
    }
    let den = &q_factorial(m) * &q_factorial(n - m);
    q_factorial(n).exact_divide(&den)
}

/// `E_0(q) .. E_max(q)` with `1/cosh_q(t) = Σ E_n(q) t^n / [n]_q!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QEulerTable {
    values: Vec<LaurentFraction>,
}

impl QEulerTable {
    pub fn values(&self) -> &[LaurentFraction] {
        &self.values
    }

    pub fn get(&self, n: usize) -> &LaurentFraction {
        &self.values[n]
    }

    /// `E_n(q)` as a polynomial; the values are always polynomials.
    pub fn poly(&self, n: usize) -> Result<Poly, Error> {
        let v = &self.values[n];
        v.to_laurent()
            .and_then(LaurentPoly::to_poly)
            .ok_or_else(|| Error::Internal(format!("E_{n}(q) = {v} is not a polynomial")))
    }
}

fn inverse_q_factorial(k: usize) -> Result<LaurentFraction, Error> {
    let ring = q_ring();
    let dens: Vec<LaurentPoly> = (2..=k).map(|j| LaurentPoly::from_poly(q_integer(j))).collect();
    LaurentFraction::from_factors(LaurentPoly::one(&ring), &dens)
}

/// Inverts `cosh_q(t)` as a power series in `t` whose coefficients are
/// rational functions of `q`.
pub fn q_euler_numbers(max: usize) -> Result<QEulerTable, Error> {
    let ring = q_ring();
    let cosh: Vec<LaurentFraction> = (0..=max)
        .map(|k| {
            if k % 2 == 0 {
                inverse_q_factorial(k)
            } else {
                Ok(LaurentFraction::zero(&ring))
            }
        })
        .collect::<Result<_, _>>()?;
    let mut inv: Vec<LaurentFraction> = vec![LaurentFraction::one(&ring)];
    for n in 1..=max {
        let mut acc = LaurentFraction::zero(&ring);
        for k in (2..=n).step_by(2) {
            acc = acc.try_sub(&cosh[k].try_mul(&inv[n - k])?)?;
        }
        inv.push(acc);
    }
    let values = inv
        .into_iter()
        .enumerate()
        .map(|(n, b)| b.try_mul(&LaurentFraction::from_poly(q_factorial(n))))
        .collect::<Result<_, _>>()?;
    Ok(QEulerTable { values })
}

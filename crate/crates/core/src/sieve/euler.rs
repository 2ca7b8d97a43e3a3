//! Euler numbers and the inverse binomial matrices of the sieve.

use crate::exact::{binomial, factorial, Poly, Rational, Ring, TruncSeries};

/// `E_0..E_max` with `1/cosh(x) = Σ E_n x^n / n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerNumberTable {
    values: Vec<Rational>,
}

impl EulerNumberTable {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Rational {
        self.values[n].clone()
    }

    pub fn max(&self) -> usize {
        self.values.len() - 1
    }
}

/// Inverts the truncated cosh series exactly.
pub fn euler_numbers(max: usize) -> EulerNumberTable {
    let ring = Ring::new(["x"]);
    let cosh = Poly::from_terms(
        &ring,
        (0..=max / 2).map(|k| {
            (
                vec![(2 * k) as u16],
                Rational::from_bigints(1.into(), factorial(2 * k as u32)).expect("nonzero"),
            )
        }),
    );
    let inv = TruncSeries::new(cosh, max as u32)
        .invert()
        .expect("cosh has constant term 1");
    let values = (0..=max)
        .map(|n| &inv.poly().coeff_of(&[n as u16]) * &Rational::from(factorial(n as u32)))
        .collect();
    EulerNumberTable { values }
}

/// Euler number `E_n`.
pub fn euler_number(n: usize) -> Rational {
    euler_numbers(n).get(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn offset(self) -> i64 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

pub type Matrix = Vec<Vec<Rational>>;

/// The upper triangular matrix `C(2j+p, 2i+p)`, `0 <= i, j <= m`.
pub fn binomial_matrix(m: usize, parity: Parity) -> Matrix {
    let p = parity.offset();
    (0..=m)
        .map(|i| {
            (0..=m)
                .map(|j| Rational::from(binomial(2 * j as i64 + p, 2 * i as i64 + p)))
                .collect()
        })
        .collect()
}

/// The inverse of [`binomial_matrix`]: entries `C(2j+p, 2i+p) E_{2j-2i}`.
pub fn invert_binomial_matrix(m: usize, parity: Parity) -> Matrix {
    let e = euler_numbers(2 * m);
    let p = parity.offset();
    (0..=m)
        .map(|i| {
            (0..=m)
                .map(|j| {
                    if j < i {
                        Rational::ZERO
                    } else {
                        &Rational::from(binomial(2 * j as i64 + p, 2 * i as i64 + p)) * &e.get(2 * (j - i))
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..k)
                .map(|j| (0..b.len()).map(|t| &a[i][t] * &b[t][j]).sum())
                .collect()
        })
        .collect()
}

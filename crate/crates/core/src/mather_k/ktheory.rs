//! K-theoretic Φ-classes and the motivic Segre sieve for skew-symmetric orbits.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::qnum::{q_binomial, q_euler_numbers};
use crate::combinat::subsets;
use crate::error::Error;
use crate::exact::{LaurentFraction, LaurentPoly, Poly, Rational, Ring, RingRef};
use crate::orbit::OrbitId;

/// Largest `n` for the exact K-theoretic computations.
pub const MAX_K_N: usize = 4;

/// How the formal parameter `q` of the sieve coefficients is specialized.
///
/// The sieve is stated with `q = -h` for an `h` that is not otherwise
/// defined; `q = -y` is the default and the other choices stay available.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QSpecialization {
    #[default]
    NegY,
    /// Keep `q` as an extra variable.
    Free,
    Value(Rational),
}

impl fmt::Display for QSpecialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSpecialization::NegY => f.write_str("q=-y"),
            QSpecialization::Free => f.write_str("q free"),
            QSpecialization::Value(v) => write!(f, "q={v}"),
        }
    }
}

impl FromStr for QSpecialization {
    type Err = Error;

    /// `-y`, `free`, or a rational number.
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "-y" | "neg-y" | "negy" => Ok(QSpecialization::NegY),
            "free" | "q" => Ok(QSpecialization::Free),
            other => other
                .parse()
                .map(QSpecialization::Value)
                .map_err(|_| Error::Parse(format!("unknown q specialization {other:?}"))),
        }
    }
}

/// A class in the (localized) representation ring, as an exact fraction in
/// `a1..an, y` (and `q` when it is kept free).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotivicClass {
    pub orbit: OrbitId,
    pub q: QSpecialization,
    pub value: LaurentFraction,
}

impl MotivicClass {
    pub fn ring(&self) -> &RingRef {
        self.value.ring()
    }

    /// Evaluates at `a = alpha`, `y`, and `q` when free.
    pub fn evaluate(&self, alpha: &[Rational], y: &Rational, q: Option<&Rational>) -> Result<Rational, Error> {
        let mut point = alpha.to_vec();
        point.push(y.clone());
        if self.q == QSpecialization::Free {
            point.push(
                q.cloned()
                    .ok_or_else(|| Error::Unsupported("q value required".into()))?,
            );
        }
        self.value.evaluate(&point)
    }

    pub fn to_text(&self) -> String {
        self.value.to_text()
    }
}

fn k_ring(n: usize, q: &QSpecialization) -> RingRef {
    let mut names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    names.push("y".into());
    if *q == QSpecialization::Free {
        names.push("q".into());
    }
    Ring::new(names)
}

fn check_scope(orbit: OrbitId) -> Result<OrbitId, Error> {
    let orbit = OrbitId::wedge(orbit.n, orbit.r)?;
    if orbit.n > MAX_K_N {
        return Err(Error::ScopeBound {
            param: "n",
            value: orbit.n,
            max: MAX_K_N,
        });
    }
    Ok(orbit)
}

/// `a_i a_j + y`.
fn pair_den(ring: &RingRef, i: usize, j: usize, y: usize) -> Poly {
    let mut e = vec![0u16; ring.len()];
    e[i] += 1;
    e[j] += 1;
    &Poly::monomial(ring, &e, Rational::ONE) + &Poly::var(ring, y)
}

/// `a_i a_j - 1`.
fn pair_num(ring: &RingRef, i: usize, j: usize) -> Poly {
    let mut e = vec![0u16; ring.len()];
    e[i] += 1;
    e[j] += 1;
    &Poly::monomial(ring, &e, Rational::ONE) - &Poly::one(ring)
}

fn phi_in(ring: &RingRef, n: usize, r: usize) -> Result<LaurentFraction, Error> {
    let y = n;
    let mut total = LaurentFraction::zero(ring);
    for inside in subsets(n, r) {
        let outside: Vec<usize> = (0..n).filter(|i| !inside.contains(i)).collect();
        let mut num = Poly::one(ring);
        let mut dens: Vec<LaurentPoly> = Vec::new();
        for (a, &i) in inside.iter().enumerate() {
            for &j in &inside[a + 1..] {
                num = &num * &pair_num(ring, i, j);
                dens.push(LaurentPoly::from_poly(pair_den(ring, i, j, y)));
            }
            for &j in &outside {
                // (1 - 1/(a_i a_j))(1 + y a_j/a_i) / ((1 + y/(a_i a_j))(1 - a_j/a_i))
                //   = (a_i a_j - 1)(a_i + y a_j) / ((a_i a_j + y)(a_i - a_j))
                let mut e = vec![0u16; ring.len()];
                e[j] = 1;
                e[y] = 1;
                let second = &Poly::var(ring, i) + &Poly::monomial(ring, &e, Rational::ONE);
                num = &(&num * &pair_num(ring, i, j)) * &second;
                dens.push(LaurentPoly::from_poly(pair_den(ring, i, j, y)));
                dens.push(LaurentPoly::from_poly(Poly::linear(ring, 0, &[(i, 1), (j, -1)])));
            }
        }
        let term = LaurentFraction::from_factors(LaurentPoly::from_poly(num), &dens)?;
        total = total.try_add(&term)?;
    }
    let allowed: Vec<Poly> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| pair_den(ring, i, j, y))
        .collect();
    if let Some((f, _)) = total.denominator_factors().iter().find(|(f, _)| !allowed.contains(f)) {
        return Err(Error::Internal(format!(
            "denominator factor {f} survived the subset sum"
        )));
    }
    Ok(total)
}

/// The K-theoretic `Φ^∧_{n,r}` as a reduced fraction in `a1..an, y`.
pub fn phi_wedge_k(n: usize, r: usize) -> Result<MotivicClass, Error> {
    let orbit = check_scope(OrbitId {
        family: crate::Family::Wedge,
        n,
        r,
    })?;
    let q = QSpecialization::NegY;
    let value = phi_in(&k_ring(n, &q), n, r)?;
    Ok(MotivicClass { orbit, q, value })
}

/// `C(r+2k, r)_q E_{2k}(q)` as a polynomial in `q`, for `k = 0..(n-r)/2`.
pub fn motivic_sieve_coefficients(n: usize, r: usize) -> Result<Vec<(usize, Poly)>, Error> {
    let orbit = OrbitId::wedge(n, r)?;
    let e = q_euler_numbers(n - orbit.r)?;
    (0..=(n - r) / 2)
        .map(|k| Ok((r + 2 * k, &q_binomial(r + 2 * k, r)? * &e.poly(2 * k)?)))
        .collect()
}

/// `mS(Σ^∧_{n,r}) = Σ_k C(r+2k, r)_q E_{2k}(q) Φ^∧_{n,r+2k}`.
pub fn motivic_segre_sieve(n: usize, r: usize, q: QSpecialization) -> Result<MotivicClass, Error> {
    let orbit = check_scope(OrbitId {
        family: crate::Family::Wedge,
        n,
        r,
    })?;
    let ring = k_ring(n, &q);
    let q_image = match &q {
        QSpecialization::NegY => -Poly::var(&ring, n),
        QSpecialization::Free => Poly::var(&ring, n + 1),
        QSpecialization::Value(v) => Poly::constant(&ring, v.clone()),
    };
    let mut total = LaurentFraction::zero(&ring);
    for (rr, c) in motivic_sieve_coefficients(n, r)? {
        let c = c.substitute(&ring, &[Some(q_image.clone())])?;
        let phi = phi_in(&ring, n, rr)?;
        total = total.try_add(&phi.try_mul(&LaurentFraction::from_poly(c))?)?;
    }
    Ok(MotivicClass { orbit, q, value: total })
}

/// Direct evaluation of the K-theoretic subset sum at a point, using the
/// displayed factors as they stand.
pub fn phi_wedge_k_at_point(n: usize, r: usize, alpha: &[Rational], y: &Rational) -> Result<Rational, Error> {
    OrbitId::wedge(n, r)?;
    let one = Rational::ONE;
    let mut total = Rational::ZERO;
    for inside in subsets(n, r) {
        let outside: Vec<usize> = (0..n).filter(|i| !inside.contains(i)).collect();
        let mut term = Rational::ONE;
        for (a, &i) in inside.iter().enumerate() {
            for &j in &inside[a + 1..] {
                let p = (&alpha[i] * &alpha[j]).recip()?;
                term = &term * &(&one - &p).checked_div(&(&one + &(y * &p)))?;
            }
            for &j in &outside {
                let p = (&alpha[i] * &alpha[j]).recip()?;
                let ratio = alpha[j].checked_div(&alpha[i])?;
                let num = &(&one - &p) * &(&one + &(y * &ratio));
                let den = &(&one + &(y * &p)) * &(&one - &ratio);
                term = &term * &num.checked_div(&den)?;
            }
        }
        total += &term;
    }
    Ok(total)
}

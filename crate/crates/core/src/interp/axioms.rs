//! Restriction to orbit stabilizers and the interpolation axioms.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::combinat::subsets;
use crate::error::Error;
use crate::exact::{factorial, Poly, Rational, Ring, RingRef, TruncSeries};
use crate::orbit::{Family, OrbitId};
use crate::symfun::{Basis, ClassExpr};

/// Restriction of the root variables to the maximal torus of the stabilizer
/// of a Wedge orbit, with the tangent Chern class and normal Euler class
/// there.
///
/// For corank `m` the roots `a_{2i-1}, a_{2i}` (`i <= (n-m)/2`) go to
/// `s_i, -s_i` and the last `m` roots stay.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionData {
    pub orbit: OrbitId,
    /// Ring with variables `s1..s_h, a_{n-m+1}..a_n`.
    pub ring: RingRef,
    /// Image of each root `a_i`.
    pub substitution: Vec<Poly>,
    pub tangent_chern: Poly,
    pub normal_euler: Poly,
}

impl RestrictionData {
    /// Applies the restriction map to a polynomial in `a1..an`.
    pub fn restrict(&self, p: &Poly) -> Result<Poly, Error> {
        let images: Vec<Option<Poly>> = self.substitution.iter().cloned().map(Some).collect();
        p.substitute(&self.ring, &images)
    }

    /// `a1 -> s1, a2 -> -s1, a3 -> a3` style description.
    pub fn substitution_text(&self) -> String {
        self.substitution
            .iter()
            .enumerate()
            .map(|(i, img)| format!("a{} -> {}", i + 1, img.to_text()))
            .join(", ")
    }
}

/// Restriction data of a Wedge orbit.
pub fn restriction_data(orbit: OrbitId) -> Result<RestrictionData, Error> {
    let OrbitId { family, n, r } = OrbitId::new(orbit.family, orbit.n, orbit.r)?;
    if family == Family::Sym {
        return Err(Error::Unsupported(
            "restriction data is only available for skew-symmetric orbits".into(),
        ));
    }
    let h = (n - r) / 2;
    let names: Vec<String> = (1..=h)
        .map(|i| format!("s{i}"))
        .chain((n - r + 1..=n).map(|j| format!("a{j}")))
        .collect();
    let ring = Ring::new(names);
    let sigma = |i: usize| i;
    let alpha = |j: usize| h + (j - (n - r));
    let mut substitution = Vec::with_capacity(n);
    for i in 0..h {
        substitution.push(Poly::var(&ring, sigma(i)));
        substitution.push(-Poly::var(&ring, sigma(i)));
    }
    for j in n - r..n {
        substitution.push(Poly::var(&ring, alpha(j)));
    }

    let mut tangent = Poly::one(&ring);
    for i in 0..h {
        for j in i + 1..h {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                tangent = &tangent * &Poly::linear(&ring, 1, &[(sigma(i), si), (sigma(j), sj)]);
            }
        }
        for j in n - r..n {
            for si in [1, -1] {
                tangent = &tangent * &Poly::linear(&ring, 1, &[(sigma(i), si), (alpha(j), 1)]);
            }
        }
    }
    let mut normal = Poly::one(&ring);
    for i in n - r..n {
        for j in i + 1..n {
            normal = &normal * &Poly::linear(&ring, 0, &[(alpha(i), 1), (alpha(j), 1)]);
        }
    }
    Ok(RestrictionData {
        orbit: OrbitId { family, n, r },
        ring,
        substitution,
        tangent_chern: tangent,
        normal_euler: normal,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    /// `φ_Σ(W) = c(T_Σ) e(N_Σ)`.
    Restriction,
    /// `c(T_Ω)` divides `φ_Ω(W)`.
    Divisibility,
    /// `deg φ_Ω(W) < deg c(T_Ω) e(N_Ω)` for `Ω ≠ Σ`.
    Degree,
    /// `φ_Ω(W) = 0` for `Ω` outside the closure.
    Vanishing,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Restriction => "restriction",
            Axiom::Divisibility => "divisibility",
            Axiom::Degree => "degree",
            Axiom::Vanishing => "vanishing",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub omega: OrbitId,
    pub axiom: Axiom,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub orbit: OrbitId,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn top_degree(p: &Poly) -> String {
    p.degree().map_or("-inf".into(), |d| d.to_string())
}

/// Checks a candidate CSM class of a Wedge orbit against the interpolation
/// axioms at every orbit of the same `n`.
pub fn verify_axioms(orbit: OrbitId, candidate: &Poly) -> Result<AxiomReport, Error> {
    let orbit = OrbitId::new(orbit.family, orbit.n, orbit.r)?;
    if orbit.family == Family::Sym {
        return Err(Error::Unsupported(
            "the interpolation axioms are only checked for skew-symmetric orbits".into(),
        ));
    }
    let ring = Ring::alpha(orbit.n);
    let candidate = candidate.to_ring(&ring)?;
    if !candidate.is_symmetric_in(&(0..orbit.n).collect::<Vec<_>>()) {
        return Err(Error::NotSymmetric);
    }
    let mut checks = Vec::new();
    for omega in Family::Wedge.orbits(orbit.n) {
        let data = restriction_data(omega)?;
        let phi = data.restrict(&candidate)?;
        let target = &data.tangent_chern * &data.normal_euler;
        let mut push = |axiom, passed, detail: String| {
            checks.push(AxiomCheck {
                omega,
                axiom,
                passed,
                detail,
            })
        };
        if omega == orbit {
            let diff = &phi - &target;
            push(
                Axiom::Restriction,
                diff.is_zero(),
                if diff.is_zero() {
                    "equal".into()
                } else {
                    format!("difference {}", diff.to_text())
                },
            );
        }
        let divides = phi.exact_divide(&data.tangent_chern).is_ok();
        push(
            Axiom::Divisibility,
            divides,
            if divides {
                "exact".into()
            } else {
                "nonzero remainder".into()
            },
        );
        if omega != orbit {
            let bound = target.degree().unwrap_or(0);
            let ok = phi.degree().is_none_or(|d| d < bound);
            push(Axiom::Degree, ok, format!("deg {} vs {}", top_degree(&phi), bound));
        }
        if omega.r < orbit.r {
            push(
                Axiom::Vanishing,
                phi.is_zero(),
                if phi.is_zero() {
                    "zero".into()
                } else {
                    format!("{} terms", phi.len())
                },
            );
        }
    }
    Ok(AxiomReport { orbit, checks })
}

/// `c(TM)` as linear factors `1 + a_i + a_j` (`i < j` for Wedge, `i <= j` for Sym).
pub fn ambient_chern_factors(family: Family, n: usize) -> Vec<Poly> {
    let ring = Ring::alpha(n);
    let mut out = Vec::new();
    for i in 0..n {
        let start = match family {
            Family::Wedge => i + 1,
            Family::Sym => i,
        };
        for j in start..n {
            out.push(Poly::linear(&ring, 1, &[(i, 1), (j, 1)]));
        }
    }
    out
}

/// `ssm = csm / c(TM)`, truncated to degree `bound`. The class must carry
/// its orbit so that the ambient space is known.
pub fn csm_to_ssm(csm: &ClassExpr, bound: u32) -> Result<ClassExpr, Error> {
    let orbit = csm
        .orbit()
        .ok_or_else(|| Error::Unsupported("class has no orbit attached".into()))?;
    let alpha = csm.to_basis(Basis::Alpha)?;
    let p = alpha.poly().expect("alpha payload").clone();
    let mut s = TruncSeries::new(p, bound);
    for u in ambient_chern_factors(orbit.family, csm.n()) {
        s = s.div_unit(&u)?;
    }
    ClassExpr::from_alpha(s.into_poly(), csm.n(), Some(orbit), Some(bound))
}

fn pair_sum(point: &[Rational], i: usize, j: usize) -> Rational {
    &point[i] + &point[j]
}

/// `(a_i + a_j)(1 + a_i + a_j) / (a_i - a_j)` at a point.
fn cross(point: &[Rational], i: usize, j: usize) -> Result<Rational, Error> {
    let s = pair_sum(point, i, j);
    (&s * &(&Rational::ONE + &s)).checked_div(&(&point[i] - &point[j]))
}

/// The inner function evaluated literally from its definition: the full
/// `S_k` sum including the paired factors.
fn inner_at_point(family: Family, vals: &[Rational]) -> Result<Rational, Error> {
    let k = vals.len();
    let mut total = Rational::ZERO;
    for tau in (0..k).permutations(k) {
        let x: Vec<Rational> = tau.iter().map(|&t| vals[t].clone()).collect();
        let mut term = Rational::ONE;
        for i in 0..k {
            for j in i + 1..k {
                term = &term * &cross(&x, i, j)?;
            }
        }
        for p in 0..k / 2 {
            let (a, b) = (&x[2 * p], &x[2 * p + 1]);
            let s = a + b;
            let den = &s * &(&Rational::ONE + &s);
            let num = match family {
                Family::Wedge => a - b,
                Family::Sym => {
                    let t = &(-b) * &(&Rational::ONE + &(a + a));
                    &t * &(&(&Rational::ONE - a) + b)
                }
            };
            term = &term * &num.checked_div(&den)?;
        }
        total += &term;
    }
    let half = (k / 2) as u32;
    let mut den = Rational::from(factorial(half));
    if family == Family::Wedge {
        den = &den * &Rational::from(2i64).pow(half);
    }
    total.checked_div(&den)
}

/// `W + c1^(d+1)` with `d` the top degree of `W`: a symmetric candidate that
/// keeps the restriction to the orbit's own stratum only up to degree `d`, so
/// it must fail the degree axiom.
pub fn negative_control(orbit: OrbitId) -> Result<Poly, Error> {
    let w = super::w::w_function(orbit)?;
    let ring = w.poly.ring().clone();
    let c1 = (0..orbit.n).fold(Poly::zero(&ring), |acc, i| &acc + &Poly::var(&ring, i));
    Ok(&w.poly + &c1.pow(super::w::w_top_degree(orbit) + 1))
}

/// `W_{n,r}` evaluated from its definition at a point with distinct
/// coordinates (no cancellation, no expansion).
pub fn w_at_point(orbit: OrbitId, point: &[Rational]) -> Result<Rational, Error> {
    let OrbitId { family, n, r } = OrbitId::new(orbit.family, orbit.n, orbit.r)?;
    if point.len() != n {
        return Err(Error::BoundMismatch {
            left: n as u32,
            right: point.len() as u32,
        });
    }
    let mut total = Rational::ZERO;
    for inside in subsets(n, r) {
        let outside: Vec<usize> = (0..n).filter(|i| !inside.contains(i)).collect();
        let rest: Vec<Rational> = outside.iter().map(|&i| point[i].clone()).collect();
        let mut term = inner_at_point(family, &rest)?;
        for (a, &i) in inside.iter().enumerate() {
            let start = match family {
                Family::Wedge => a + 1,
                Family::Sym => a,
            };
            for &j in &inside[start..] {
                term = &term * &pair_sum(point, i, j);
            }
            for &j in &outside {
                term = &term * &cross(point, i, j)?;
            }
        }
        total += &term;
    }
    Ok(total)
}

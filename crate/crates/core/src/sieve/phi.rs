//! Φ-classes of the fibered resolutions, by summing the localization formula.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use crate::combinat::{is_odd, shuffle, subsets};
use crate::error::Error;
use crate::exact::{Poly, Rational, Ring, RingRef, TruncSeries};
use crate::orbit::{Family, OrbitId};

/// A Φ-class as a symmetric power series in the roots, known up to `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiClass {
    pub orbit: OrbitId,
    pub series: TruncSeries,
}

/// `Π_{i<j} (a_i - a_j)` over the listed variables, in the given order.
pub(crate) fn vandermonde(ring: &RingRef, vars: &[usize]) -> Poly {
    let mut v = Poly::one(ring);
    for (a, &i) in vars.iter().enumerate() {
        for &j in &vars[a + 1..] {
            v = &v * &Poly::linear(ring, 0, &[(i, 1), (j, -1)]);
        }
    }
    v
}

fn cache() -> &'static Mutex<HashMap<(OrbitId, u32), TruncSeries>> {
    static CACHE: OnceLock<Mutex<HashMap<(OrbitId, u32), TruncSeries>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Φ-class of the orbit closure, expanded up to total degree `bound`.
///
/// The localization sum runs over `r`-subsets `I`. Every summand is the
/// image of the summand for `I = {n-r+1..n}` under an order-preserving
/// shuffle, so that one term is expanded as a series (clearing its
/// `(a_i - a_j)` denominators against the full Vandermonde product), the
/// shuffled copies are added with the shuffle signs, and the total is divided
/// exactly by the Vandermonde product degree by degree.
pub fn phi_class(orbit: OrbitId, bound: u32) -> Result<PhiClass, Error> {
    let orbit = OrbitId::new(orbit.family, orbit.n, orbit.r)?;
    if let Some(s) = cache().lock().expect("cache lock").get(&(orbit, bound)) {
        return Ok(PhiClass {
            orbit,
            series: s.clone(),
        });
    }
    let series = compute_phi(orbit, bound)?;
    cache()
        .lock()
        .expect("cache lock")
        .insert((orbit, bound), series.clone());
    Ok(PhiClass { orbit, series })
}

fn compute_phi(orbit: OrbitId, bound: u32) -> Result<TruncSeries, Error> {
    let OrbitId { family, n, r } = orbit;
    let ring = Ring::alpha(n);
    if r == 0 {
        return Ok(TruncSeries::one(&ring, bound));
    }
    let k = n - r;
    let vdeg = (n * n.saturating_sub(1) / 2) as u32;
    let work = bound + vdeg;
    let inside: Vec<usize> = (k..n).collect();
    let outside: Vec<usize> = (0..k).collect();

    // Polynomial part of the base numerator, including the cleared Vandermonde pieces.
    let mut num = &vandermonde(&ring, &outside) * &vandermonde(&ring, &inside);
    if (k * r) % 2 == 1 {
        num = -num;
    }
    let mut units: Vec<Poly> = Vec::new();
    for (a, &i) in inside.iter().enumerate() {
        let start = match family {
            Family::Wedge => a + 1,
            Family::Sym => a,
        };
        for &j in &inside[start..] {
            num = num.mul_bounded(&Poly::linear(&ring, 0, &[(i, 1), (j, 1)]), Some(work));
            units.push(Poly::linear(&ring, 1, &[(i, 1), (j, 1)]));
        }
        for &j in &outside {
            num = num.mul_bounded(&Poly::linear(&ring, 0, &[(i, 1), (j, 1)]), Some(work));
            num = num.mul_bounded(&Poly::linear(&ring, 1, &[(i, 1), (j, -1)]), Some(work));
            units.push(Poly::linear(&ring, 1, &[(i, 1), (j, 1)]));
        }
    }
    let mut base = TruncSeries::new(num, work);
    for u in &units {
        base = base.div_unit(u)?;
    }

    let total = subsets(n, r)
        .into_par_iter()
        .map(|subset| {
            let perm = shuffle(n, &subset);
            let term = base.poly().permute(&perm);
            if is_odd(&perm) {
                -term
            } else {
                term
            }
        })
        .reduce(|| Poly::zero(&ring), |a, b| &a + &b);
    let cleared = TruncSeries::new(total, work);
    let v = vandermonde(&ring, &(0..n).collect::<Vec<_>>());
    cleared.divide_homogeneous(&v)
}

/// Direct evaluation of the localization sum at a point with distinct
/// coordinates, as an exact rational number. Used as an independent check.
pub fn phi_at_point(family: Family, n: usize, r: usize, point: &[Rational]) -> Result<Rational, Error> {
    OrbitId::new(family, n, r)?;
    let mut total = Rational::ZERO;
    for subset in subsets(n, r) {
        let outside: Vec<usize> = (0..n).filter(|i| !subset.contains(i)).collect();
        let mut term = Rational::ONE;
        for (a, &i) in subset.iter().enumerate() {
            let start = match family {
                Family::Wedge => a + 1,
                Family::Sym => a,
            };
            for &j in &subset[start..] {
                let s = &point[i] + &point[j];
                term = &term * &s.checked_div(&(&Rational::ONE + &s))?;
            }
            for &j in &outside {
                let s = &point[i] + &point[j];
                let num = &s * &(&(&Rational::ONE - &point[j]) + &point[i]);
                let den = &(&Rational::ONE + &s) * &(&point[i] - &point[j]);
                term = &term * &num.checked_div(&den)?;
            }
        }
        total += &term;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::{parse_poly, to_chern_basis};

    fn chern(orbit: OrbitId, d: u32) -> Poly {
        let phi = phi_class(orbit, d).unwrap();
        to_chern_basis(phi.series.poly(), orbit.n).unwrap()
    }

    #[test]
    fn wedge_two_two() {
        let c = Ring::chern(2);
        let expect = parse_poly("c1 - c1^2 + c1^3 - c1^4", &c).unwrap();
        assert_eq!(chern(OrbitId::wedge(2, 2).unwrap(), 4), expect);
        assert_eq!(chern(OrbitId::wedge(2, 0).unwrap(), 4), Poly::one(&c));
    }

    #[test]
    fn sym_two() {
        let c = Ring::chern(2);
        assert_eq!(
            chern(OrbitId::sym(2, 1).unwrap(), 3),
            parse_poly("2c1 - 4c1^2 + 8c1^3", &c).unwrap()
        );
        assert_eq!(
            chern(OrbitId::sym(2, 2).unwrap(), 4),
            parse_poly("4c1c2 - 12c1^2c2", &c).unwrap()
        );
    }

    #[test]
    fn parity_is_enforced() {
        let bad = OrbitId {
            family: Family::Wedge,
            n: 3,
            r: 2,
        };
        assert_eq!(phi_class(bad, 2), Err(Error::Parity { n: 3, r: 2 }));
    }
}

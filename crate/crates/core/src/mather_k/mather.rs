//! Local Euler obstructions and Chern-Mather classes of skew-symmetric orbit
//! closures.

use num_bigint::BigInt;

use crate::error::Error;
use crate::exact::{binomial, Poly, Rational, Ring};
use crate::interp::{csm_to_ssm, w_function};
use crate::orbit::{Family, OrbitId};
use crate::symfun::ClassExpr;

/// `Eu` of the closure of `Σ^∧_{n,r}` on the orbit of corank `r + 2k`:
/// `C(⌊r/2⌋ + k, ⌊r/2⌋)`. Returns `(corank, value)` pairs.
pub fn euler_obstruction_wedge(n: usize, r: usize) -> Result<Vec<(usize, BigInt)>, Error> {
    let orbit = OrbitId::wedge(n, r)?;
    let half = (r / 2) as i64;
    Ok((0..=(n - orbit.r) / 2)
        .map(|k| (r + 2 * k, binomial(half + k as i64, half)))
        .collect())
}

/// The Chern-Mather class of the closure of `Σ^∧_{n,r}`, as the matching
/// combination of orbit CSM classes. With `segre_bound` the class is divided
/// by the total Chern class of the ambient space and truncated.
pub fn chern_mather_wedge(n: usize, r: usize, segre_bound: Option<u32>) -> Result<ClassExpr, Error> {
    let orbit = OrbitId::wedge(n, r)?;
    let ring = Ring::alpha(n);
    let mut acc = Poly::zero(&ring);
    for (rr, c) in euler_obstruction_wedge(n, r)? {
        let w = w_function(OrbitId::new(Family::Wedge, n, rr)?)?;
        acc = &acc + &w.poly.scale(&Rational::from(c));
    }
    let cm = ClassExpr::from_alpha(acc, n, Some(orbit), None)?;
    match segre_bound {
        None => Ok(cm),
        Some(d) => csm_to_ssm(&cm, d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interp::ambient_chern_factors;

    fn ints(v: &[(usize, i64)]) -> Vec<(usize, BigInt)> {
        v.iter().map(|&(r, c)| (r, BigInt::from(c))).collect()
    }

    #[test]
    fn obstruction_examples() {
        assert_eq!(euler_obstruction_wedge(4, 4).unwrap(), ints(&[(4, 1)]));
        assert_eq!(euler_obstruction_wedge(6, 2).unwrap(), ints(&[(2, 1), (4, 2), (6, 3)]));
        assert_eq!(euler_obstruction_wedge(4, 0).unwrap(), ints(&[(0, 1), (2, 1), (4, 1)]));
        assert!(euler_obstruction_wedge(4, 1).is_err());
    }

    #[test]
    fn mather_examples() {
        let cm = chern_mather_wedge(4, 2, None).unwrap();
        let w42 = w_function(OrbitId::wedge(4, 2).unwrap()).unwrap().poly;
        let w44 = w_function(OrbitId::wedge(4, 4).unwrap()).unwrap().poly;
        assert_eq!(cm.poly().unwrap(), &(&w42 + &w44.scale(&Rational::from(2))));

        let cm = chern_mather_wedge(4, 0, None).unwrap();
        let total = ambient_chern_factors(Family::Wedge, 4)
            .iter()
            .fold(Poly::one(&Ring::alpha(4)), |acc, f| &acc * f);
        assert_eq!(cm.poly().unwrap(), &total);
        let sm = chern_mather_wedge(4, 0, Some(5)).unwrap();
        assert_eq!(sm.to_text(), "1");
    }
}

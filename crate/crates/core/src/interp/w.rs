//! W-functions: explicit polynomials representing the CSM classes of orbits.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::combinat::{is_odd, perfect_matchings, shuffle, subsets};
use crate::error::Error;
use crate::exact::{factorial, Poly, Rational, Ring, RingRef};
use crate::orbit::{Family, OrbitId};
use crate::sieve::phi::vandermonde;
use crate::symfun::{Partition, SchurExpansion};

/// The CSM class of an orbit as an exact symmetric polynomial in `a1..an`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WFunction {
    pub orbit: OrbitId,
    pub poly: Poly,
}

/// Top degree of `W_{n,r}`: `(n²-2n+r)/2` (Wedge), `n(n+1)/2 - ⌊(n-r+1)/2⌋` (Sym).
pub fn w_top_degree(orbit: OrbitId) -> u32 {
    let OrbitId { family, n, r } = orbit;
    match family {
        Family::Wedge => ((n * n + r) as u32).saturating_sub(2 * n as u32) / 2,
        Family::Sym => (n * (n + 1) / 2 - (n - r).div_ceil(2)) as u32,
    }
}

fn lin(ring: &RingRef, c: i64, terms: &[(usize, i64)]) -> Poly {
    Poly::linear(ring, c, terms)
}

/// `(a_i + a_j)(1 + a_i + a_j)`.
fn h(ring: &RingRef, i: usize, j: usize) -> Poly {
    &lin(ring, 0, &[(i, 1), (j, 1)]) * &lin(ring, 1, &[(i, 1), (j, 1)])
}

fn inner_cache() -> &'static Mutex<HashMap<(Family, usize), Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<(Family, usize), Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn schur_cache() -> &'static Mutex<HashMap<OrbitId, SchurExpansion>> {
    static CACHE: OnceLock<Mutex<HashMap<OrbitId, SchurExpansion>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn outer_cache() -> &'static Mutex<HashMap<OrbitId, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<OrbitId, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Numerator `P_k` with `W_k = c_k · Σ_τ sgn(τ) τ(P_k) / V_k`, where the
/// paired factors of the defining product have been cancelled.
///
/// Wedge: `Π_{unpaired i<j} (a_i+a_j)(1+a_i+a_j) · Π_pairs (a_{2i-1} - a_{2i})`.
/// Sym: the same unpaired product times
/// `Π_pairs -a_{2i}(1+2a_{2i-1})(1-a_{2i-1}+a_{2i})`.
pub(crate) fn inner_numerator(family: Family, ring: &RingRef, vars: &[usize]) -> Poly {
    let k = vars.len();
    let paired = |a: usize, b: usize| a.is_multiple_of(2) && b == a + 1;
    let mut p = Poly::one(ring);
    for a in 0..k {
        for b in a + 1..k {
            if !paired(a, b) {
                p = &p * &h(ring, vars[a], vars[b]);
            }
        }
    }
    for pair in 0..k / 2 {
        let (x, y) = (vars[2 * pair], vars[2 * pair + 1]);
        let f = match family {
            Family::Wedge => lin(ring, 0, &[(x, 1), (y, -1)]),
            Family::Sym => {
                let t = &lin(ring, 0, &[(y, -1)]) * &lin(ring, 1, &[(x, 2)]);
                &t * &lin(ring, 1, &[(x, -1), (y, 1)])
            }
        };
        p = &p * &f;
    }
    p
}

/// The rational prefactor `c_k`: `1/(2^{k/2} (k/2)!)` or `1/⌊k/2⌋!`.
pub(crate) fn inner_prefactor(family: Family, k: usize) -> Rational {
    let half = (k / 2) as u32;
    let den = match family {
        Family::Wedge => factorial(half) * num_bigint::BigInt::from(2u32).pow(half),
        Family::Sym => factorial(half),
    };
    Rational::from_bigints(1.into(), den).expect("nonzero")
}

/// The inner function `W_k` of either family, as a polynomial in `a1..ak`.
///
/// Wedge uses the rewriting as a sum over perfect matchings of `[k]`; Sym
/// symmetrizes over `S_k`. In both cases every summand is multiplied by the
/// Vandermonde product, the numerators are added, and the sum is divided
/// exactly by the Vandermonde product.
pub fn w_inner(family: Family, k: usize) -> Result<Poly, Error> {
    if family == Family::Wedge && k % 2 == 1 {
        return Err(Error::Parity { n: k, r: 0 });
    }
    if let Some(p) = inner_cache().lock().expect("cache lock").get(&(family, k)) {
        return Ok(p.clone());
    }
    let ring = Ring::alpha(k);
    let vars: Vec<usize> = (0..k).collect();
    let v = vandermonde(&ring, &vars);
    let numerator = match family {
        Family::Wedge => perfect_matchings(k)
            .into_par_iter()
            .map(|m| matching_numerator(&ring, &m))
            .reduce(|| Poly::zero(&ring), |a, b| &a + &b),
        Family::Sym => {
            let p = inner_numerator(family, &ring, &vars);
            antisymmetrize(&p, k)
        }
    };
    let mut w = numerator.exact_divide(&v)?;
    // Each matching stands for 2^{k/2} (k/2)! permutations, so the Wedge
    // prefactor is absorbed.
    if family == Family::Sym {
        w = w.scale(&inner_prefactor(family, k));
    }
    check_integral(&w)?;
    inner_cache().lock().expect("cache lock").insert((family, k), w.clone());
    Ok(w)
}

/// `V · Π_{cross pairs} f` for one perfect matching, `f = (a+b)(1+a+b)/(a-b)`
/// oriented from the earlier block to the later one.
fn matching_numerator(ring: &RingRef, m: &[(usize, usize)]) -> Poly {
    let mut p = Poly::one(ring);
    let mut inverted = 0usize;
    for &(a, b) in m {
        p = &p * &lin(ring, 0, &[(a, 1), (b, -1)]);
    }
    for (x, blk) in m.iter().enumerate() {
        for other in &m[x + 1..] {
            for &i in &[blk.0, blk.1] {
                for &j in &[other.0, other.1] {
                    p = &p * &h(ring, i, j);
                    if i > j {
                        inverted += 1;
                    }
                }
            }
        }
    }
    if inverted % 2 == 1 {
        -p
    } else {
        p
    }
}

/// `Σ_{τ ∈ S_k} sgn(τ) τ(p)`.
fn antisymmetrize(p: &Poly, k: usize) -> Poly {
    use itertools::Itertools;
    let ring = p.ring().clone();
    let perms: Vec<Vec<usize>> = (0..k).permutations(k).collect();
    perms
        .into_par_iter()
        .map(|perm| {
            let t = p.permute(&perm);
            if is_odd(&perm) {
                -t
            } else {
                t
            }
        })
        .reduce(|| Poly::zero(&ring), |a, b| &a + &b)
}

fn check_integral(p: &Poly) -> Result<(), Error> {
    if let Some((_, c)) = p.terms().find(|(_, c)| !c.is_integer()) {
        return Err(Error::NonInteger(c.to_string()));
    }
    Ok(())
}

/// Product of the factors attached to the corank block `inside`:
/// `Π_{i<j ∈ I} (a_i+a_j)` (Wedge) or `Π_{i≤j ∈ I}` (Sym), times
/// `Π_{i∈I, j∉I} (a_i+a_j)(1+a_i+a_j)`.
fn block_factors(family: Family, ring: &RingRef, inside: &[usize], outside: &[usize]) -> Poly {
    let mut p = Poly::one(ring);
    for (a, &i) in inside.iter().enumerate() {
        let start = match family {
            Family::Wedge => a + 1,
            Family::Sym => a,
        };
        for &j in &inside[start..] {
            p = &p * &lin(ring, 0, &[(i, 1), (j, 1)]);
        }
        for &j in outside {
            p = &p * &h(ring, i, j);
        }
    }
    p
}

/// `W_{n,r}` as an exact polynomial in `a1..an`.
///
/// The subset sum is evaluated with the shuffle trick: the summand for
/// `I = {n-r+1..n}` times the Vandermonde product is a polynomial, every
/// other summand is a signed shuffle of it, and the total is divided exactly
/// by the Vandermonde product.
pub fn w_function(orbit: OrbitId) -> Result<WFunction, Error> {
    let orbit = OrbitId::new(orbit.family, orbit.n, orbit.r)?;
    check_scope(orbit.n)?;
    if let Some(p) = outer_cache().lock().expect("cache lock").get(&orbit) {
        return Ok(WFunction { orbit, poly: p.clone() });
    }
    let OrbitId { family, n, r } = orbit;
    let k = n - r;
    let ring = Ring::alpha(n);
    let inner = w_inner(family, k)?.to_ring(&ring)?;
    let poly = if r == 0 {
        inner
    } else {
        let inside: Vec<usize> = (k..n).collect();
        let outside: Vec<usize> = (0..k).collect();
        let mut base = &inner * &vandermonde(&ring, &outside);
        base = &base * &vandermonde(&ring, &inside);
        base = &base * &block_factors(family, &ring, &inside, &outside);
        if (k * r) % 2 == 1 {
            base = -base;
        }
        let total = subsets(n, r)
            .into_par_iter()
            .map(|subset| {
                let perm = shuffle(n, &subset);
                let t = base.permute(&perm);
                if is_odd(&perm) {
                    -t
                } else {
                    t
                }
            })
            .reduce(|| Poly::zero(&ring), |a, b| &a + &b);
        total.exact_divide(&vandermonde(&ring, &(0..n).collect::<Vec<_>>()))?
    };
    check_integral(&poly)?;
    outer_cache().lock().expect("cache lock").insert(orbit, poly.clone());
    Ok(WFunction { orbit, poly })
}

/// Schur coefficients of `W_{n,r}` by the bialternant formula.
///
/// `W_{n,r} = c · A(Q) / V` with `A` the antisymmetrization over `S_n` and
/// `Q = P_{n-r}(a_1..a_{n-r}) · V_I · (block factors)`; since
/// `A(a^β)/V = ± s_{sort(β) - δ}`, each monomial of `Q` contributes to one
/// Schur coefficient directly.
pub fn w_schur_bialternant(orbit: OrbitId) -> Result<SchurExpansion, Error> {
    let orbit = OrbitId::new(orbit.family, orbit.n, orbit.r)?;
    check_scope(orbit.n)?;
    if let Some(e) = schur_cache().lock().expect("cache lock").get(&orbit) {
        return Ok(e.clone());
    }
    let e = bialternant(orbit);
    schur_cache().lock().expect("cache lock").insert(orbit, e.clone());
    Ok(e)
}

fn bialternant(orbit: OrbitId) -> SchurExpansion {
    let OrbitId { family, n, r } = orbit;
    let k = n - r;
    let ring = Ring::alpha(n);
    let inside: Vec<usize> = (k..n).collect();
    let outside: Vec<usize> = (0..k).collect();
    let mut q = inner_numerator(family, &ring, &outside);
    q = &q * &vandermonde(&ring, &inside);
    q = &q * &block_factors(family, &ring, &inside, &outside);
    let mut c = &inner_prefactor(family, k) * &Rational::from_bigints(1.into(), factorial(r as u32)).expect("nonzero");
    if (k * r) % 2 == 1 {
        c = -c;
    }
    let mut acc: FxHashMap<Partition, Rational> = FxHashMap::default();
    let mut exps: Vec<(u16, usize)> = Vec::with_capacity(n);
    for (m, v) in q.terms() {
        exps.clear();
        exps.extend((0..n).map(|i| (m.exp(i), i)));
        exps.sort_by_key(|e| std::cmp::Reverse(e.0));
        if exps.windows(2).any(|w| w[0].0 == w[1].0) {
            continue;
        }
        let perm: Vec<usize> = exps.iter().map(|&(_, i)| i).collect();
        let lambda = Partition::new(
            exps.iter()
                .enumerate()
                .map(|(pos, &(e, _))| e as u32 - (n - 1 - pos) as u32)
                .collect(),
        );
        let term = if is_odd(&perm) { -v } else { v.clone() };
        *acc.entry(lambda).or_insert(Rational::ZERO) += &term;
    }
    SchurExpansion::from_terms(acc.into_iter().map(|(l, v)| (l, &v * &c)))
}

/// Largest `n` accepted by the W-function routines.
pub const MAX_W_N: usize = 7;

fn check_scope(n: usize) -> Result<(), Error> {
    if n > MAX_W_N {
        return Err(Error::ScopeBound {
            param: "n",
            value: n,
            max: MAX_W_N,
        });
    }
    Ok(())
}

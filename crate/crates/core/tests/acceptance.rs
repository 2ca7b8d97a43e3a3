//! Acceptance suite: one PASS/FAIL/REPORT line per criterion.
//!
//! All comparisons are exact (tolerance zero); random points are drawn from a
//! fixed seed. Criteria 10 and 11 are reported and never fail the run.

use std::time::Instant;

use degloci::cli;
use degloci::exact::{Poly, Rational, Ring};
use degloci::interp::{csm_to_ssm, negative_control, verify_axioms, w_function, Axiom};
use degloci::mather_k::{
    chern_mather_wedge, euler_obstruction_wedge, motivic_segre_sieve, phi_wedge_k, q_euler_numbers, QSpecialization,
};
use degloci::projective::{closed_invariants, euler_char_table, projectivize, ClassKind};
use degloci::sieve::{
    binomial_matrix, euler_numbers, invert_binomial_matrix, mat_mul, phi_class, ssm_series, ssm_sieve, Parity,
};
use degloci::symfun::{complete, parse_poly, parse_schur, to_chern_basis, Basis, ClassExpr};
use degloci::{Error, Family, OrbitId};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, PartialEq)]
enum Verdict {
    Pass,
    Fail,
    Report,
}

struct Outcome {
    verdict: Verdict,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        verdict: Verdict::Pass,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        verdict: Verdict::Fail,
        detail: detail.into(),
    }
}

fn report(detail: impl Into<String>) -> Outcome {
    Outcome {
        verdict: Verdict::Report,
        detail: detail.into(),
    }
}

/// Collects mismatches; the criterion passes when there are none.
#[derive(Default)]
struct Tally {
    checked: usize,
    mismatches: Vec<String>,
}

impl Tally {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.mismatches.push(what());
        }
    }

    fn outcome(self, what: &str) -> Outcome {
        if self.mismatches.is_empty() {
            pass(format!("{} {what} match", self.checked))
        } else {
            fail(format!(
                "{}/{} {what} differ: {}",
                self.mismatches.len(),
                self.checked,
                self.mismatches.join("; ")
            ))
        }
    }
}

fn orbit(f: Family, n: usize, r: usize) -> OrbitId {
    OrbitId::new(f, n, r).unwrap()
}

fn chern(p: &Poly, n: usize) -> Result<Poly, Error> {
    to_chern_basis(p, n)
}

fn criterion_1() -> Result<Outcome, Error> {
    use Family::{Sym, Wedge};
    let printed = [
        (Wedge, 2, 2, "c1"),
        (Wedge, 3, 1, "1 + 2c1 + c1^2 + c2"),
        (Wedge, 3, 3, "c1c2 - c3"),
        (Wedge, 4, 0, "1 + 2c1 + c1^2 + 2c2 + 2c1c2 + c2^2 + c1c3 - 4c4"),
        (
            Wedge,
            4,
            2,
            "c1 + 2c1^2 + c1^3 + 2c1c2 + 2c1^2c2 + c1c2^2 + c1^2c3 - 4c1c4",
        ),
        (Wedge, 4, 4, "c1c2c3 - c1^2c4 - c3^2"),
        (Sym, 2, 0, "1 + c1 + 4c2"),
        (Sym, 2, 1, "2c1 + 2c1^2"),
        (Sym, 2, 2, "4c1c2"),
    ];
    let mut t = Tally::default();
    for (f, n, r, s) in printed {
        let o = orbit(f, n, r);
        let got = chern(&w_function(o)?.poly, n)?;
        let want = parse_poly(s, &Ring::chern(n))?;
        t.expect(got == want, || format!("{o}: {}", got.to_text()));
    }
    Ok(t.outcome("W-functions"))
}

/// Coefficients in the complete homogeneous basis `h1, h2, h3`, written with
/// the names `c1, c2, c3`.
///
/// `e_k = H_k(h)` where `h_k = H_k(e)`, so substituting the Chern-basis
/// expression of `h_k` for `c_k` rewrites an `e`-polynomial in the `h`'s.
fn in_h_basis(p: &Poly, n: usize) -> Result<Poly, Error> {
    let c = Ring::chern(n);
    let images = (1..=n)
        .map(|k| to_chern_basis(&complete(&Ring::alpha(n), k), n).map(Some))
        .collect::<Result<Vec<_>, _>>()?;
    chern(p, n)?.substitute(&c, &images)
}

fn criterion_2() -> Result<Outcome, Error> {
    use Family::{Sym, Wedge};
    let mut t = Tally::default();
    let series = [
        (Wedge, 2, 0, 4, "1 - c1 + c1^2 - c1^3 + c1^4"),
        (Sym, 2, 1, 2, "2c1 - 4c1^2"),
    ];
    for (f, n, r, d, s) in series {
        let o = orbit(f, n, r);
        let got = chern(&ssm_series(o, false, d)?.into_poly(), n)?;
        let want = parse_poly(s, &Ring::chern(n))?;
        t.expect(got == want, || format!("ssm {o}: {}", got.to_text()));
    }
    let phis = [
        (Sym, 2, 1, 3, "2c1 - 4c1^2 + 8c1^3"),
        (Sym, 2, 2, 4, "4c1c2 - 12c1^2c2"),
    ];
    for (f, n, r, d, s) in phis {
        let o = orbit(f, n, r);
        let got = chern(&phi_class(o, d)?.series.into_poly(), n)?;
        let want = parse_poly(s, &Ring::chern(n))?;
        t.expect(got == want, || format!("phi {o}: {}", got.to_text()));
    }

    // The n = 3 skew-symmetric expansion is printed in the complete
    // homogeneous basis; compare there, term by term.
    let c3 = Ring::chern(3);
    let printed_31 = "1 + 2c1c2 - 2c3 - 4c1^2c2 + 4c1c3 + 4c1^3c2 + 2c1c2^2 - 4c1^2c3 - 2c2c3 \
        - 10c1^2c2^2 + 12c1c2c3 - 2c3^2 - 8c1^5c2 + 24c1^3c2^2 + 2c1c2^3 + 8c1^4c3 - 32c1^2c2c3 + 8c1c3^2";
    let printed_33 = "c1c2 - c3 - 2c1^2c2 + 2c1c3 + 2c1^3c2 + c1c2^2 - 2c1^2c3 - c2c3 \
        - 5c1^2c2^2 + 6c1c2c3 - c3^2 - 4c1^5c2 + 12c1^3c2 + c1c2^3 + 4c1^4c3 - 16c1^2c2c3 - c2^2c3 + 4c1c3^2";
    // Known divergences of the printed expansion, logged rather than forced.
    let known_31 = "-2c2^2c3";
    let known_33 = "12c1^3c2^2 - 12c1^3c2";
    let mut logged = Vec::new();
    for (r, printed, known) in [(1, printed_31, known_31), (3, printed_33, known_33)] {
        let o = orbit(Wedge, 3, r);
        let got = in_h_basis(&phi_class(o, 7)?.series.into_poly(), 3)?;
        let diff = &got - &parse_poly(printed, &c3)?;
        let expected = parse_poly(known, &c3)?;
        t.expect(diff == expected, || {
            format!("phi {o} in h-basis differs by {}", diff.to_text())
        });
        if !diff.is_zero() {
            logged.push(format!("phi {o}: computed - printed = {}", diff.to_text()));
        }
    }
    let ssm31 = ssm_series(orbit(Wedge, 3, 1), false, 7)?;
    let phi31 = phi_class(orbit(Wedge, 3, 1), 7)?.series;
    let phi33 = phi_class(orbit(Wedge, 3, 3), 7)?.series;
    let combo = phi31.try_sub(&phi33.scale(&Rational::from(3i64)))?;
    t.expect(ssm31 == combo, || "ssm wedge(3,1) != phi31 - 3 phi33".into());
    let mut out = t.outcome("sieve expansions");
    if out.verdict == Verdict::Pass {
        out.detail = format!("{}; logged: {}", out.detail, logged.join("; "));
    }
    Ok(out)
}

fn criterion_3() -> Result<Outcome, Error> {
    let mut t = Tally::default();
    for f in [Family::Wedge, Family::Sym] {
        for n in 1..=4 {
            for o in f.orbits(n) {
                let csm = ClassExpr::from_alpha(w_function(o)?.poly, n, Some(o), None)?;
                let interp = csm_to_ssm(&csm, 6)?;
                let sieve = ssm_sieve(o, false, 6)?;
                t.expect(interp.poly() == sieve.poly(), || format!("{o}"));
            }
        }
    }
    Ok(t.outcome("orbits (interpolation vs sieve, D=6)"))
}

fn criterion_4() -> Result<Outcome, Error> {
    let cases = [
        (
            orbit(Family::Wedge, 4, 0),
            5,
            "s0 - s1 + s2 + s11 - s3 - 2s21 - s111 + s4 + 2s22 + 3s31 + 3s211 + s1111 \
             - s5 - 5s32 - 4s41 - 5s221 - 6s311 - 4s2111",
        ),
        (
            orbit(Family::Sym, 3, 2),
            5,
            "4s21 - 12s22 - 12s31 - 12s211 + 40s32 + 28s41 + 40s221 + 40s311",
        ),
    ];
    let mut t = Tally::default();
    for (o, d, s) in cases {
        let got = ssm_sieve(o, false, d)?.to_basis(Basis::Schur)?;
        let got = got.schur().expect("schur payload").clone();
        let want = parse_schur(s)?;
        t.expect(got == want, || format!("{o}: {}", got.to_text()));
    }
    Ok(t.outcome("Schur expansions"))
}

fn criterion_5() -> Result<Outcome, Error> {
    let mut t = Tally::default();
    for n in 1..=5 {
        for o in Family::Wedge.orbits(n) {
            let rep = verify_axioms(o, &w_function(o)?.poly)?;
            t.expect(rep.passed(), || {
                let f = rep.failures().next().expect("a failure");
                format!("{o}: {} at {}", f.axiom, f.omega)
            });
        }
    }
    let o = orbit(Family::Wedge, 4, 2);
    let rep = verify_axioms(o, &negative_control(o)?)?;
    t.expect(rep.failures().any(|f| f.axiom == Axiom::Degree), || {
        "negative control passed the degree axiom".into()
    });
    Ok(t.outcome("axiom reports (incl. negative control)"))
}

fn criterion_6() -> Result<Outcome, Error> {
    let mut t = Tally::default();
    for f in [Family::Wedge, Family::Sym] {
        for n in 1..=5 {
            let ring = Ring::alpha(n);
            let mut total = Poly::zero(&ring);
            for o in f.orbits(n) {
                total = &total + ssm_series(o, false, 6)?.poly();
            }
            t.expect(total == Poly::one(&ring), || format!("{f} n={n}"));
        }
    }
    Ok(t.outcome("orbit sums equal to 1 (D=6)"))
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from(x)).collect()
}

fn criterion_7() -> Result<Outcome, Error> {
    let mut t = Tally::default();
    let ex_s3: [&[i64]; 3] = [&[1, 3, 6, 6, 3, 0], &[0, 3, 9, 10, 6, 3], &[0, 0, 0, 4, 6, 3]];
    for (r, want) in ex_s3.iter().enumerate() {
        let p = projectivize(orbit(Family::Sym, 3, r), ClassKind::Csm, false)?;
        t.expect(p.coeffs == ints(want), || format!("csm sym(3,{r}): {}", p.to_text()));
    }
    let table1: [&[i64]; 3] = [&[0, 1, -1, 3, -1, 1], &[3, 2, 1, 0, 3, 0], &[3, 2, 4, 0, 0, 0]];
    let table2: [&[i64]; 3] = [
        &[0, -1, 1, -3, 5, -11, 21, -29, 29, -21, 11, -5, 3, -1, 1],
        &[0, 3, 0, 9, -6, 27, -36, 51, -36, 27, -6, 9, 0, 3, 0],
        &[15, 12, 12, 6, 12, -6, 24, -14, 14, 0, 0, 0, 0, 0, 0],
    ];
    for (family, n, want) in [(Family::Sym, 3, &table1), (Family::Wedge, 6, &table2)] {
        let table = euler_char_table(family, n, false)?;
        t.expect(table.rows.len() == want.len(), || format!("{family} n={n}: row count"));
        for (row, w) in table.rows.iter().zip(want.iter()) {
            t.expect(row.values == ints(w), || format!("table row {}", row.orbit));
        }
        let sums: Vec<Rational> = (0..table.columns).map(|i| Rational::from(table.columns - i)).collect();
        t.expect(table.column_sums() == sums, || format!("{family} n={n}: column sums"));
    }
    for f in [Family::Wedge, Family::Sym] {
        for n in 1..=6 {
            for o in f.orbits(n).into_iter().filter(|o| o.r < n) {
                let inv = closed_invariants(o)?;
                let closure = projectivize(o, ClassKind::Csm, true)?;
                let open = projectivize(o, ClassKind::Csm, false)?;
                t.expect(
                    closure.lowest() == Some((inv.codim, Rational::from(inv.degree.clone())))
                        && open.top() == Rational::from(inv.euler_char.clone()),
                    || format!("closed formulas {o}"),
                );
            }
        }
    }
    Ok(t.outcome("projective checks"))
}

fn criterion_8() -> Result<Outcome, Error> {
    let mut t = Tally::default();
    let e = euler_numbers(10);
    let printed = [1, 0, -1, 0, 5, 0, -61, 0, 1385];
    for (i, &v) in printed.iter().enumerate() {
        t.expect(e.get(i) == Rational::from(v as i64), || format!("E_{i} = {}", e.get(i)));
    }
    let inv = invert_binomial_matrix(3, Parity::Even);
    let want: Vec<Vec<Rational>> = [[1, -1, 5, -61], [0, 1, -6, 75], [0, 0, 1, -15], [0, 0, 0, 1]]
        .iter()
        .map(|r| ints(r))
        .collect();
    t.expect(inv == want, || "4x4 inverse".into());
    for parity in [Parity::Even, Parity::Odd] {
        for m in 0..=5 {
            let id = mat_mul(&binomial_matrix(m, parity), &invert_binomial_matrix(m, parity));
            let ok = id.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, v)| *v == Rational::from(i64::from(i == j)))
            });
            t.expect(ok, || format!("{parity:?} m={m}"));
        }
    }
    t.expect(e.get(10) == Rational::from(-50521i64), || {
        format!("E_10 = {}", e.get(10))
    });
    let out = cli::run(["degloci", "euler", "--format", "json"]);
    let rec: cli::OutputRecord = serde_json::from_str(&out.stdout).expect("json output");
    t.expect(
        rec.warnings
            .iter()
            .any(|w| w.contains("-50521") && w.contains("-50512")),
        || "E_10 warning missing".into(),
    );
    let mut o = t.outcome("Euler-number checks");
    o.detail
        .push_str("; E_10 = -50521 (reference value -50512) emitted as a warning");
    Ok(o)
}

/// `C(a, b)` from factorials, independent of the library's binomial.
fn choose(a: u64, b: u64) -> BigInt {
    let f = |k: u64| (1..=k).map(BigInt::from).product::<BigInt>();
    f(a) / (f(b) * f(a - b))
}

fn criterion_9() -> Result<Outcome, Error> {
    let mut t = Tally::default();
    for n in 1..=6 {
        for o in Family::Wedge.orbits(n) {
            let eu = euler_obstruction_wedge(n, o.r)?;
            let half = (o.r / 2) as u64;
            let want: Vec<(usize, BigInt)> = (0..=((n - o.r) / 2) as u64)
                .map(|k| (o.r + 2 * k as usize, choose(half + k, half)))
                .collect();
            t.expect(eu == want, || format!("Eu {o}"));
        }
    }
    for n in 1..=6 {
        let r = n % 2;
        let cm = chern_mather_wedge(n, r, None)?;
        let ring = Ring::alpha(n);
        let mut prod = Poly::one(&ring);
        for i in 0..n {
            for j in i + 1..n {
                prod = &prod * &Poly::linear(&ring, 1, &[(i, 1), (j, 1)]);
            }
        }
        let got = cm.to_basis(Basis::Alpha)?;
        t.expect(got.poly() == Some(&prod), || format!("cM wedge({n},{r})"));
    }
    Ok(t.outcome("Chern-Mather checks"))
}

fn random_k_point(rng: &mut ChaCha8Rng, n: usize) -> (Vec<Rational>, Rational) {
    let mut alpha: Vec<Rational> = Vec::new();
    while alpha.len() < n {
        let v = Rational::new(rng.gen_range(-30..=30), rng.gen_range(1..=5));
        if !v.is_zero() && !alpha.contains(&v) && !alpha.iter().any(|a| (a + &v).is_zero()) {
            alpha.push(v);
        }
    }
    loop {
        let y = Rational::new(rng.gen_range(-30..=30), rng.gen_range(1..=5));
        let pole = (0..n).any(|i| (i + 1..n).any(|j| (&(&alpha[i] * &alpha[j]) + &y).is_zero()));
        if !pole && !y.is_zero() {
            return (alpha, y);
        }
    }
}

fn criterion_10() -> Result<Outcome, Error> {
    let mut notes = Vec::new();
    let q = q_euler_numbers(10)?;
    let e = euler_numbers(10);
    let one = [Rational::ONE];
    let ok = (0..=10).all(|n| q.poly(n).map(|p| p.evaluate(&one) == e.get(n)).unwrap_or(false));
    notes.push(format!("E_n(1) = E_n for n <= 10: {ok}"));
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut symmetric = 0;
    for i in 0..10 {
        let (n, r) = [(2, 0), (3, 1), (4, 2), (4, 0), (3, 3)][i % 5];
        let k = phi_wedge_k(n, r)?;
        let (alpha, y) = random_k_point(&mut rng, n);
        let mut rev = alpha.clone();
        rev.rotate_left(1);
        symmetric += usize::from(k.evaluate(&alpha, &y, None)? == k.evaluate(&rev, &y, None)?);
    }
    notes.push(format!("K-theoretic phi symmetric at {symmetric}/10 points"));
    let s0 = motivic_segre_sieve(2, 0, QSpecialization::NegY)?;
    let s2 = motivic_segre_sieve(2, 2, QSpecialization::NegY)?;
    let mut ones = 0;
    for _ in 0..10 {
        let (alpha, y) = random_k_point(&mut rng, 2);
        let sum = &s0.evaluate(&alpha, &y, None)? + &s2.evaluate(&alpha, &y, None)?;
        ones += usize::from(sum == Rational::ONE);
    }
    notes.push(format!("mS(2,0) + mS(2,2) = 1 at {ones}/10 points (q = -y)"));
    Ok(report(notes.join("; ")))
}

fn criterion_11() -> Result<Outcome, Error> {
    let mut holds = 0;
    let mut counter = Vec::new();
    for f in [Family::Wedge, Family::Sym] {
        for n in 1..=4 {
            for o in f.orbits(n) {
                let ssm = ssm_sieve(o, false, 6)?.to_basis(Basis::Schur)?;
                let codim = o.codim() as u32;
                let bad = ssm
                    .schur()
                    .expect("schur payload")
                    .terms()
                    .find(|(l, c)| {
                        let sign = if (l.size() + codim).is_multiple_of(2) { 1 } else { -1 };
                        &(*c).clone() * &Rational::from(sign as i64) < Rational::ZERO
                    })
                    .map(|(l, c)| format!("{o}: {c} s{}", l.label()));
                match bad {
                    None => holds += 1,
                    Some(b) => counter.push(b),
                }
            }
        }
    }
    Ok(report(format!(
        "sign alternation holds for {holds} orbits (n <= 4, D <= 6); counterexamples: {}",
        if counter.is_empty() {
            "none".to_string()
        } else {
            counter.join(", ")
        }
    )))
}

type Criterion = fn() -> Result<Outcome, Error>;

fn main() {
    let criteria: [(&str, Criterion); 11] = [
        ("printed W-functions", criterion_1),
        ("sieve reproduction", criterion_2),
        ("cross-route equality", criterion_3),
        ("Schur expansions", criterion_4),
        ("interpolation axioms", criterion_5),
        ("normalization", criterion_6),
        ("projective layer", criterion_7),
        ("Euler-number layer", criterion_8),
        ("Mather layer", criterion_9),
        ("K layer", criterion_10),
        ("positivity", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| fail(format!("error: {e}")));
        let tag = match outcome.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => {
                failed += 1;
                "FAIL"
            }
            Verdict::Report => "REPORT",
        };
        println!(
            "criterion {:>2} [{tag}] {name}: {} ({:.1}s)",
            i + 1,
            outcome.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}

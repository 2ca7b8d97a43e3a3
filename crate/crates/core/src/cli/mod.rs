//! Command-line interface.

pub mod output;
pub mod verify;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;

use crate::error::Error;
use crate::exact::{Rational, TruncSeries};
use crate::interp::{ambient_chern_factors, csm_to_ssm, w_function, w_top_degree};
use crate::mather_k::{
    chern_mather_wedge, euler_obstruction_wedge, motivic_segre_sieve, phi_wedge_k, q_euler_numbers, QSpecialization,
};
use crate::orbit::{Family, OrbitId};
use crate::projective::{closed_invariants, euler_char_table, projectivize, ClassKind};
use crate::sieve::{euler_numbers, phi_class, ssm_series};
use crate::symfun::{Basis, ClassExpr, Partition};

pub use output::{Document, Format, OutputRecord, Row, Term};

/// Default truncation degree for series-valued classes.
pub const DEFAULT_TRUNC: u32 = 6;

#[derive(Debug, Parser)]
#[command(
    name = "degloci",
    version,
    about = "Exact characteristic classes of skew-symmetric and symmetric degeneracy loci"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// CSM or SSM class of an orbit or orbit closure.
    Class(ClassArgs),
    /// Φ-class of the fibered resolution of an orbit closure.
    Phi(PhiArgs),
    /// Non-equivariant class of the projectivized orbit, as coefficients of powers of xi.
    Projective(ProjectiveArgs),
    /// Euler characteristics of general linear sections of the projectivized orbits.
    Table(TableArgs),
    /// Codimension, degree and Euler characteristic of projectivized orbits.
    Invariants(InvariantsArgs),
    /// Chern-Mather class of a skew-symmetric orbit closure.
    Mather(MatherArgs),
    /// K-theoretic Φ-class or motivic Segre class of a skew-symmetric orbit.
    Ktheory(KtheoryArgs),
    /// Euler numbers, or their q-analogues.
    Euler(EulerArgs),
    /// Run a suite of consistency checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// Sieve formula over Φ-classes.
    Sieve,
    /// Explicit W-functions.
    Interp,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
}

impl OrbitArgs {
    fn orbit(&self) -> Result<OrbitId, Error> {
        OrbitId::new(self.family, self.n, self.r)
    }
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    #[command(flatten)]
    pub orbit: OrbitArgs,
    #[arg(long, default_value = "csm")]
    pub kind: ClassKind,
    #[arg(long, value_enum, default_value = "interp")]
    pub route: Route,
    #[arg(long, default_value = "chern")]
    pub basis: Basis,
    /// Truncation degree; CSM classes are exact when omitted.
    #[arg(long)]
    pub trunc: Option<u32>,
    /// Class of the orbit closure instead of the orbit.
    #[arg(long)]
    pub closure: bool,
}

#[derive(Debug, Args)]
pub struct PhiArgs {
    #[command(flatten)]
    pub orbit: OrbitArgs,
    #[arg(long, default_value_t = DEFAULT_TRUNC)]
    pub trunc: u32,
    #[arg(long, default_value = "chern")]
    pub basis: Basis,
}

#[derive(Debug, Args)]
pub struct ProjectiveArgs {
    #[command(flatten)]
    pub orbit: OrbitArgs,
    #[arg(long, default_value = "csm")]
    pub kind: ClassKind,
    #[arg(long)]
    pub closure: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    /// Rows for orbit closures instead of orbits.
    #[arg(long)]
    pub closure: bool,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    /// A single corank; all orbits when omitted.
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Debug, Args)]
pub struct MatherArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, default_value = "chern")]
    pub basis: Basis,
    /// Divide by the total Chern class of the space and truncate.
    #[arg(long)]
    pub segre_trunc: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KClass {
    Phi,
    Segre,
}

#[derive(Debug, Args)]
pub struct KtheoryArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long, value_enum, default_value = "segre")]
    pub class: KClass,
    /// Specialization of q: `-y`, `free`, or a rational number.
    #[arg(long, default_value = "-y", allow_hyphen_values = true)]
    pub q: QSpecialization,
    /// Evaluate at `a1,...,an;y` (and `;q` when q is free).
    #[arg(long, allow_hyphen_values = true)]
    pub at: Option<String>,
}

#[derive(Debug, Args)]
pub struct EulerArgs {
    #[arg(long, default_value_t = 10)]
    pub max: usize,
    /// Print the q-analogues E_n(q).
    #[arg(long)]
    pub q: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Core,
    Axioms,
    Cross,
    Conjectures,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "core")]
    pub suite: Suite,
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
}

/// Exit status and emitted streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let format = cli.format;
    let (doc, failed) = match execute(cli.command) {
        Ok(v) => v,
        Err(e) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let mut stdout = doc.render(format);
    stdout.push('\n');
    let stderr = if format == Format::Json {
        String::new()
    } else {
        let notes = doc.record.notes.iter().map(|n| format!("note: {n}\n"));
        let warnings = doc.record.warnings.iter().map(|w| format!("warning: {w}\n"));
        notes.chain(warnings).collect()
    };
    Outcome {
        code: if failed { 2 } else { 0 },
        stdout,
        stderr,
    }
}

/// Runs a parsed command; the flag reports a failed verification suite.
pub fn execute(command: Command) -> Result<(Document, bool), Error> {
    Ok(match command {
        Command::Class(a) => (class_cmd(&a)?, false),
        Command::Phi(a) => (phi_cmd(&a)?, false),
        Command::Projective(a) => (projective_cmd(&a)?, false),
        Command::Table(a) => (table_cmd(&a)?, false),
        Command::Invariants(a) => (invariants_cmd(&a)?, false),
        Command::Mather(a) => (mather_cmd(&a)?, false),
        Command::Ktheory(a) => (ktheory_cmd(&a)?, false),
        Command::Euler(a) => (euler_cmd(&a)?, false),
        Command::Verify(a) => {
            let report = verify::run_suite(a.suite, a.max_n)?;
            let failed = !report.passed();
            (report.document(), failed)
        }
    })
}

fn class_document(
    expr: &ClassExpr,
    basis: Basis,
    kind: &str,
    orbit: OrbitId,
    trunc: Option<u32>,
    warnings: Vec<String>,
) -> Result<Document, Error> {
    let converted = expr.to_basis(basis)?;
    let terms = converted
        .key_terms()
        .into_iter()
        .map(|(k, c)| Term::new(k, &c))
        .collect();
    let record = OutputRecord {
        family: Some(orbit.family.name().into()),
        n: Some(orbit.n),
        r: Some(orbit.r),
        kind: kind.into(),
        basis: Some(basis.name().into()),
        trunc,
        terms: Some(terms),
        warnings,
        ..Default::default()
    };
    Ok(Document {
        record,
        text: converted.to_text(),
        latex: converted.to_latex(),
    })
}

/// The class as a polynomial in the roots, with the truncation that was applied
/// (`None` when the class is exact).
pub fn compute_class(
    orbit: OrbitId,
    kind: ClassKind,
    route: Route,
    trunc: Option<u32>,
    closure: bool,
) -> Result<(ClassExpr, Option<u32>), Error> {
    let parts = if closure { orbit.closure_orbits() } else { vec![orbit] };
    let n = orbit.n;
    match (kind, route) {
        (ClassKind::Csm, Route::Interp) => {
            let mut p = crate::exact::Poly::zero(&crate::exact::Ring::alpha(n));
            for o in parts {
                p = &p + &w_function(o)?.poly;
            }
            if let Some(d) = trunc {
                p = p.truncate(d);
            }
            Ok((ClassExpr::from_alpha(p, n, Some(orbit), trunc)?, trunc))
        }
        (ClassKind::Ssm, Route::Interp) => {
            let d = trunc.unwrap_or(DEFAULT_TRUNC);
            let (csm, _) = compute_class(orbit, ClassKind::Csm, Route::Interp, None, closure)?;
            Ok((csm_to_ssm(&csm, d)?, Some(d)))
        }
        (ClassKind::Ssm, Route::Sieve) => {
            let d = trunc.unwrap_or(DEFAULT_TRUNC);
            let s = ssm_series(orbit, closure, d)?;
            Ok((ClassExpr::from_alpha(s.into_poly(), n, Some(orbit), Some(d))?, Some(d)))
        }
        (ClassKind::Csm, Route::Sieve) => {
            // Without a requested truncation, expanding up to the top degree of
            // the W-functions gives the exact class.
            let top = parts.iter().map(|&o| w_top_degree(o)).max().unwrap_or(0);
            let d = trunc.unwrap_or(top);
            let mut s: TruncSeries = ssm_series(orbit, closure, d)?;
            for f in ambient_chern_factors(orbit.family, n) {
                s = s.mul_poly(&f)?;
            }
            Ok((ClassExpr::from_alpha(s.into_poly(), n, Some(orbit), trunc)?, trunc))
        }
    }
}

/// Lowest-degree Schur term of a symmetric class, for the normalization note.
fn lowest_schur(expr: &ClassExpr) -> Result<Option<(Partition, Rational)>, Error> {
    let s = expr.to_basis(Basis::Schur)?;
    let e = s.schur().expect("schur payload");
    Ok(e.min_degree().and_then(|d| e.homogeneous(d).into_iter().next()))
}

fn class_warnings(orbit: OrbitId, expr: &ClassExpr) -> Result<Vec<String>, Error> {
    let mut out = Vec::new();
    if orbit.family == Family::Sym && orbit.r > 0 {
        if let Some((lambda, c)) = lowest_schur(expr)? {
            out.push(format!(
                "lowest-degree term is {c}*s{}: coefficient 2^r = {c}; the normalization 2^(r-1) = {} quoted for the fundamental class does not match",
                lambda.label(),
                Rational::from(2i64).pow(orbit.r as u32 - 1)
            ));
        }
    }
    Ok(out)
}

fn class_cmd(a: &ClassArgs) -> Result<Document, Error> {
    let orbit = a.orbit.orbit()?;
    let (expr, trunc) = compute_class(orbit, a.kind, a.route, a.trunc, a.closure)?;
    let warnings = class_warnings(orbit, &expr)?;
    let mut doc = class_document(&expr, a.basis, &a.kind.to_string(), orbit, trunc, warnings)?;
    if a.closure {
        doc.record.notes.push("class of the orbit closure".into());
    }
    Ok(doc)
}

fn phi_cmd(a: &PhiArgs) -> Result<Document, Error> {
    let orbit = a.orbit.orbit()?;
    let phi = phi_class(orbit, a.trunc)?;
    let expr = ClassExpr::from_alpha(phi.series.into_poly(), orbit.n, Some(orbit), Some(a.trunc))?;
    let mut warnings = Vec::new();
    if orbit.family == Family::Wedge && orbit.n == 3 && orbit.r > 0 {
        warnings.push(
            "the reference expansion of this class writes c_i for the complete homogeneous functions h_i; \
             in the elementary basis used here the coefficients differ accordingly"
                .into(),
        );
        warnings.push(match orbit.r {
            1 => "reference expansion omits the degree-7 term -2*h2^2*h3".into(),
            _ => "reference expansion prints 12*h1^3*h2 in degree 7; the computed term is 12*h1^3*h2^2".into(),
        });
    }
    class_document(&expr, a.basis, "phi", orbit, Some(a.trunc), warnings)
}

fn poly_terms(coeffs: &[Rational]) -> Vec<Term> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| Term::new(vec![i as u32], c))
        .collect()
}

fn projective_cmd(a: &ProjectiveArgs) -> Result<Document, Error> {
    let orbit = a.orbit.orbit()?;
    let class = projectivize(orbit, a.kind, a.closure)?;
    let poly = class.to_poly();
    let mut notes = vec![format!("projectivized class in Q[xi]/xi^{}", class.ambient)];
    if a.closure {
        notes.push("class of the orbit closure".into());
    }
    if orbit.r == orbit.n {
        notes.push("the zero orbit projectivizes to the empty set".into());
    }
    let record = OutputRecord {
        family: Some(orbit.family.name().into()),
        n: Some(orbit.n),
        r: Some(orbit.r),
        kind: a.kind.to_string(),
        basis: Some("xi".into()),
        trunc: Some(class.ambient as u32 - 1),
        terms: Some(poly_terms(&class.coeffs)),
        notes,
        ..Default::default()
    };
    Ok(Document {
        record,
        text: poly.to_text(),
        latex: poly.to_latex(),
    })
}

fn table_cmd(a: &TableArgs) -> Result<Document, Error> {
    let table = euler_char_table(a.family, a.n, a.closure)?;
    let columns = (0..table.columns).map(|i| format!("chi(X_{i})")).collect();
    let rows = table
        .rows
        .iter()
        .map(|row| Row {
            label: row.orbit.to_string(),
            values: row.values.iter().map(Rational::to_string).collect(),
        })
        .collect();
    let mut notes = vec![format!(
        "column sums: {}",
        table.column_sums().iter().map(Rational::to_string).join(" ")
    )];
    if a.closure {
        notes.push("rows are orbit closures".into());
    }
    Ok(Document::table(OutputRecord {
        family: Some(a.family.name().into()),
        n: Some(a.n),
        kind: "table".into(),
        trunc: None,
        columns: Some(columns),
        rows: Some(rows),
        notes,
        ..Default::default()
    }))
}

fn invariants_cmd(a: &InvariantsArgs) -> Result<Document, Error> {
    let orbits: Vec<OrbitId> = match a.r {
        Some(r) => vec![OrbitId::new(a.family, a.n, r)?],
        None => a.family.orbits(a.n).into_iter().filter(|o| o.r < o.n).collect(),
    };
    let mut rows = Vec::new();
    let mut warnings = Vec::new();
    for o in orbits {
        let inv = closed_invariants(o)?;
        let closure = projectivize(o, ClassKind::Csm, true)?;
        let orbit_class = projectivize(o, ClassKind::Csm, false)?;
        let from_class = closure.lowest();
        if from_class != Some((inv.codim, Rational::from(inv.degree.clone())))
            || orbit_class.top() != Rational::from(inv.euler_char.clone())
        {
            warnings.push(format!("{o}: closed formulas disagree with the projectivized class"));
        }
        rows.push(Row {
            label: o.to_string(),
            values: vec![
                inv.codim.to_string(),
                inv.degree.to_string(),
                inv.euler_char.to_string(),
            ],
        });
    }
    Ok(Document::table(OutputRecord {
        family: Some(a.family.name().into()),
        n: Some(a.n),
        r: a.r,
        kind: "invariants".into(),
        trunc: None,
        columns: Some(vec!["codim".into(), "degree".into(), "chi".into()]),
        rows: Some(rows),
        warnings,
        ..Default::default()
    }))
}

fn mather_cmd(a: &MatherArgs) -> Result<Document, Error> {
    let orbit = OrbitId::wedge(a.n, a.r)?;
    let cm = chern_mather_wedge(a.n, a.r, a.segre_trunc)?;
    let eu = euler_obstruction_wedge(a.n, a.r)?;
    let mut doc = class_document(&cm, a.basis, "mather", orbit, a.segre_trunc, Vec::new())?;
    doc.record.notes.push(format!(
        "Eu = {}",
        eu.iter().map(|(r, c)| format!("{c}*1[wedge({},{r})]", a.n)).join(" + ")
    ));
    Ok(doc)
}

fn parse_point(s: &str) -> Result<Vec<Vec<Rational>>, Error> {
    s.split(';')
        .map(|part| {
            part.split(',')
                .map(|v| v.trim().parse::<Rational>())
                .collect::<Result<Vec<_>, _>>()
        })
        .collect()
}

fn ktheory_cmd(a: &KtheoryArgs) -> Result<Document, Error> {
    let class = match a.class {
        KClass::Phi => phi_wedge_k(a.n, a.r)?,
        KClass::Segre => motivic_segre_sieve(a.n, a.r, a.q.clone())?,
    };
    let mut notes = Vec::new();
    if a.class == KClass::Segre {
        notes.push(format!(
            "sieve coefficients use {}; the formula is stated with q = -h for an unspecified h",
            class.q
        ));
    }
    let mut value = class.to_text();
    if let Some(at) = &a.at {
        let parts = parse_point(at)?;
        let bad = || Error::Parse(format!("--at expects a1,...,a{};y[;q]", a.n));
        let alpha = parts.first().filter(|v| v.len() == a.n).ok_or_else(bad)?;
        let y = parts.get(1).and_then(|v| v.first()).ok_or_else(bad)?;
        let q = parts.get(2).and_then(|v| v.first());
        let v = class.evaluate(alpha, y, q)?;
        notes.push(format!("fraction: {value}"));
        value = v.to_string();
    }
    let kind = match a.class {
        KClass::Phi => "phi",
        KClass::Segre => "motivic",
    };
    let record = OutputRecord {
        family: Some("wedge".into()),
        n: Some(a.n),
        r: Some(a.r),
        kind: kind.into(),
        trunc: None,
        value: Some(value.clone()),
        notes,
        ..Default::default()
    };
    Ok(Document {
        record,
        latex: value.clone(),
        text: value,
    })
}

fn euler_cmd(a: &EulerArgs) -> Result<Document, Error> {
    let mut warnings = Vec::new();
    let rows: Vec<Row> = if a.q {
        let table = q_euler_numbers(a.max)?;
        (0..=a.max)
            .map(|n| {
                Ok(Row {
                    label: format!("E_{n}(q)"),
                    values: vec![table.poly(n)?.to_text()],
                })
            })
            .collect::<Result<_, Error>>()?
    } else {
        let e = euler_numbers(a.max);
        (0..=a.max)
            .map(|n| Row {
                label: format!("E_{n}"),
                values: vec![e.get(n).to_string()],
            })
            .collect()
    };
    if !a.q && a.max >= 10 {
        warnings.push(format!(
            "E_10 = {} by series inversion; a reference listing prints -50512",
            euler_numbers(10).get(10)
        ));
    }
    Ok(Document::table(OutputRecord {
        kind: if a.q { "q-euler".into() } else { "euler".into() },
        trunc: Some(a.max as u32),
        rows: Some(rows),
        warnings,
        ..Default::default()
    }))
}

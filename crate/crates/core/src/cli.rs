//! Command-line front end. [`run`] parses arguments and returns the captured
//! output and exit status, so commands are testable without a process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith::prime_power;
use crate::bridges::{
    code_from_lambda, ell_from_generator, image_code_by_definition, image_code_generator_matrix,
    lambda_from_parity_check, verify_equivalence, CheckElement, VerificationReport,
};
use crate::cyclic::{divisors_of_xn_minus_1, CyclicCode, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::gf::{FieldTower, Fq, DEFAULT_DLOG_BOUND};
use crate::linalg::Matrix;
use crate::normal::NormalBasis;
use crate::poly::{format_vector, parse_vector, Poly};
use crate::qpoly::QPolynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qcyclic", version, about = "Cyclic codes over GF(q) via q-polynomials")]
pub struct Cli {
    /// Largest number of codewords or field elements any enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u64,
    /// Largest r - 1 for which discrete logarithms are attempted.
    #[arg(long = "dlog-bound", global = true, default_value_t = DEFAULT_DLOG_BOUND)]
    pub dlog_bound: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized sweeps; echoed in every output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Doc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    G,
    H,
    Lambda,
    Ell,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    /// k×n matrix with rows x^i g(x)
    Generator,
    /// n×n matrix with rows x^i g(x) mod x^n - 1
    G1,
    /// circulant of the q-polynomial coefficients
    Circulant,
}

#[derive(Debug, clap::Args)]
pub struct CodeArgs {
    /// Which representation `--value` is written in.
    #[arg(long, value_enum)]
    pub from: Source,
    /// Comma-separated coefficients; for lambda also `g^s` (a power of the
    /// canonical primitive element).
    #[arg(long)]
    pub value: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub q: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct GF(p) ⊆ GF(p^m) ⊆ GF(p^(mn)) and print its defining data.
    Build { p: u64, m: usize, n: usize },
    /// Build a code from one representation and print all four.
    Code(CodeArgs),
    /// Check every divisor of x^n - 1 through all four representations.
    Verify {
        /// Field orders, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        q: Vec<u64>,
        /// Length or inclusive range `a-b`.
        #[arg(long)]
        n: String,
    },
    /// Search q-polynomial codes for a minimum distance.
    Search {
        #[arg(long, default_value_t = 2)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long = "min-d", default_value_t = 1)]
        min_d: usize,
        #[arg(long = "max-results", default_value_t = 20)]
        max_results: usize,
        /// Sample this many random q-polynomials instead of all of them.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Write a code's matrix as a document.
    Export {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = MatrixKind::Generator)]
        matrix: MatrixKind,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Read a matrix document and print it with its rank.
    Import {
        path: PathBuf,
        /// Require the matrix to be over GF(q).
        #[arg(long)]
        q: Option<u64>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }
}

/// Seed and limits shared by every command.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct RunConfig {
    pub cap: u64,
    pub dlog_bound: u64,
    pub seed: u64,
    #[serde(skip)]
    pub format: Format,
}

pub fn main() -> i32 {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(cli) {
        Ok(out) => out,
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: EXIT_USAGE,
        },
    }
}

pub fn execute(cli: Cli) -> Result<Outcome> {
    let cfg = RunConfig {
        cap: cli.cap,
        dlog_bound: cli.dlog_bound,
        seed: cli.seed,
        format: cli.format,
    };
    if cfg.cap == 0 || cfg.dlog_bound == 0 {
        return Err(Error::parse("--cap and --dlog-bound must be positive"));
    }
    match cli.command {
        Command::Build { p, m, n } => cmd_build(&cfg, p, m, n),
        Command::Code(args) => cmd_code(&cfg, &args),
        Command::Verify { q, n } => cmd_verify(&cfg, &q, &n),
        Command::Search {
            q,
            n,
            min_d,
            max_results,
            sample,
        } => cmd_search(&cfg, q, n, min_d, max_results, sample),
        Command::Export { code, matrix, out } => cmd_export(&cfg, &code, matrix, out),
        Command::Import { path, q } => cmd_import(&cfg, &path, q),
    }
}

fn tower_for_q(cfg: &RunConfig, q: u64, n: usize) -> Result<FieldTower> {
    let (p, m) = prime_power(q).ok_or_else(|| Error::parse(format!("{q} is not a prime power")))?;
    Ok(FieldTower::build(p, m, n)?.with_dlog_bound(cfg.dlog_bound))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn rows_text(m: &Matrix) -> Vec<String> {
    m.row_vecs().iter().map(|r| format_vector(r)).collect()
}

#[derive(Serialize)]
struct BuildDoc {
    p: u32,
    m: usize,
    n: usize,
    q: u32,
    r: Option<u64>,
    base_poly: String,
    ext_poly: String,
    normal_element: String,
    conjugate_matrix: Vec<String>,
    primitive_element: Option<String>,
    seed: u64,
}

pub fn cmd_build(cfg: &RunConfig, p: u64, m: usize, n: usize) -> Result<Outcome> {
    let tower = FieldTower::build(p, m, n)?.with_dlog_bound(cfg.dlog_bound);
    let nb = NormalBasis::find(&tower);
    let primitive = match tower.order() {
        Some(r) if r - 1 <= cfg.dlog_bound => Some(tower.primitive_element()?),
        _ => None,
    };
    let doc = BuildDoc {
        p: tower.p(),
        m: tower.m(),
        n,
        q: tower.q(),
        r: tower.order(),
        base_poly: tower.base_poly().to_text(),
        ext_poly: tower.ext_poly().to_text(),
        normal_element: nb.alpha().to_text(),
        conjugate_matrix: rows_text(nb.basis_matrix()),
        primitive_element: primitive.as_ref().map(|g| g.to_text()),
        seed: cfg.seed,
    };
    if cfg.format == Format::Doc {
        return Ok(Outcome::ok(to_json(&doc)));
    }
    let mut s = String::new();
    let r = doc.r.map_or("overflow".to_string(), |r| r.to_string());
    writeln!(s, "field      GF({}^{}) over GF({}) over GF({}), q = {}, r = {r}", doc.q, n, doc.q, doc.p, doc.q).ok();
    writeln!(s, "base_poly  {:<24} {}", doc.base_poly, tower.base_poly()).ok();
    writeln!(s, "ext_poly   {:<24} {}", doc.ext_poly, tower.ext_poly()).ok();
    writeln!(s, "normal     {:<24} {}", doc.normal_element, nb.alpha()).ok();
    writeln!(s, "conjugates (column i = normal^(q^i)):").ok();
    s.push_str(&nb.basis_matrix().render());
    match &primitive {
        Some(g) => writeln!(s, "primitive  {:<24} {}", g.to_text(), g).ok(),
        None => writeln!(s, "primitive  not computed (r - 1 above --dlog-bound)").ok(),
    };
    writeln!(s, "seed       {}", cfg.seed).ok();
    Ok(Outcome::ok(s))
}

/// A code together with all four of its representations.
struct Resolved {
    tower: FieldTower,
    basis: NormalBasis,
    code: CyclicCode,
    ell: QPolynomial,
    lambda: Option<CheckElement>,
}

fn parse_lambda(tower: &FieldTower, basis: &NormalBasis, value: &str) -> Result<CheckElement> {
    let value = value.trim();
    if let Some(exp) = value.strip_prefix("g^") {
        let s: u64 = exp
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad exponent in {value:?}")))?;
        let gamma = tower.primitive_element()?;
        return CheckElement::from_power(tower, &gamma, s);
    }
    CheckElement::from_normal_coords(basis, &parse_vector(value, tower.base())?)
}

fn resolve(cfg: &RunConfig, args: &CodeArgs) -> Result<Resolved> {
    let tower = tower_for_q(cfg, args.q, args.n)?;
    let basis = NormalBasis::find(&tower);
    let field = tower.base().clone();
    let n = args.n;
    let code = match args.from {
        Source::G => CyclicCode::from_generator(&field, Poly::parse(&args.value, &field)?, n)?,
        Source::H => CyclicCode::from_parity_check(&field, Poly::parse(&args.value, &field)?, n)?,
        Source::Lambda => {
            let lam = parse_lambda(&tower, &basis, &args.value)?;
            CyclicCode::from_words(&field, n, code_from_lambda(&lam).basis())?
        }
        Source::Ell => {
            let ell = QPolynomial::parse(&tower, &args.value)?;
            let g = image_code_generator_matrix(&ell);
            CyclicCode::from_words(&field, n, &g.row_space_basis())?
        }
    };
    let ell = ell_from_generator(&tower, code.generator())?;
    let lambda = match lambda_from_parity_check(code.parity_check(), &basis) {
        Ok(l) => Some(l),
        Err(Error::FullCodeUnsupported) => None,
        Err(e) => return Err(e),
    };
    Ok(Resolved {
        tower,
        basis,
        code,
        ell,
        lambda,
    })
}

#[derive(Serialize)]
struct CodeDoc {
    q: u32,
    n: usize,
    k: usize,
    d: Option<usize>,
    weights: Option<Vec<u64>>,
    g: String,
    h: String,
    ell: String,
    lambda: Option<String>,
    lambda_normal_coords: Option<String>,
    beta: String,
    generator_matrix: Vec<String>,
    cross_checks: BTreeMap<String, bool>,
    image_by_definition: String,
    seed: u64,
}

pub fn cmd_code(cfg: &RunConfig, args: &CodeArgs) -> Result<Outcome> {
    let r = resolve(cfg, args)?;
    let report = r.code.report(cfg.cap);
    let standard = r.code.generator_matrix();

    let mut cross = BTreeMap::new();
    cross.insert(
        "ell-circulant".to_string(),
        image_code_generator_matrix(&r.ell).row_space_equal(&standard)?,
    );
    cross.insert(
        "g1".to_string(),
        r.code.g1_matrix().row_space_equal(&standard)?,
    );
    if let Some(lam) = &r.lambda {
        cross.insert(
            "lambda".to_string(),
            code_from_lambda(lam).generator_matrix().row_space_equal(&standard)?,
        );
    }
    let image = match image_code_by_definition(&r.ell, &r.basis, cfg.cap) {
        Ok(words) => {
            if r.code.codeword_set(cfg.cap).is_ok_and(|w| w == words) {
                "equals <g>".to_string()
            } else if r.code.reciprocal().codeword_set(cfg.cap).is_ok_and(|w| w == words) {
                format!("equals the reciprocal code <{}>", r.code.reciprocal().generator().to_text())
            } else {
                "differs from <g>".to_string()
            }
        }
        Err(e) => format!("not computed ({e})"),
    };

    let doc = CodeDoc {
        q: r.tower.q(),
        n: r.code.n(),
        k: report.k,
        d: report.d,
        weights: report.weights.clone(),
        g: r.code.generator().to_text(),
        h: r.code.parity_check().to_text(),
        ell: r.ell.to_text(),
        lambda: r.lambda.as_ref().map(|l| l.lambda().to_text()),
        lambda_normal_coords: r.lambda.as_ref().map(|l| format_vector(&l.normal_coords(&r.basis))),
        beta: r.basis.alpha().to_text(),
        generator_matrix: rows_text(&standard),
        cross_checks: cross.clone(),
        image_by_definition: image.clone(),
        seed: cfg.seed,
    };
    let all_ok = cross.values().all(|&b| b);
    let mut out = if cfg.format == Format::Doc {
        Outcome::ok(to_json(&doc))
    } else {
        let mut s = String::new();
        writeln!(s, "code       {} over GF({})", report.label(), doc.q).ok();
        writeln!(s, "g          {:<20} {}", doc.g, r.code.generator()).ok();
        writeln!(s, "h          {:<20} {}", doc.h, r.code.parity_check()).ok();
        writeln!(s, "ell        {}", doc.ell).ok();
        match (&doc.lambda, &doc.lambda_normal_coords) {
            (Some(l), Some(c)) => writeln!(s, "lambda     {l}  (normal coords {c})").ok(),
            _ => writeln!(s, "lambda     none (full code needs λ = 0)").ok(),
        };
        writeln!(s, "beta       {}", doc.beta).ok();
        if report.d.is_none() && report.k > 0 {
            writeln!(s, "distance   not computed (q^k above --cap)").ok();
        }
        writeln!(s, "generator matrix:").ok();
        s.push_str(&standard.render());
        for (name, ok) in &cross {
            writeln!(s, "check      {name}: {}", if *ok { "agrees" } else { "DISAGREES" }).ok();
        }
        writeln!(s, "image by definition {image}").ok();
        writeln!(s, "seed       {}", cfg.seed).ok();
        Outcome::ok(s)
    };
    if !all_ok {
        out.code = EXIT_FAILED;
    }
    Ok(out)
}

fn parse_range(text: &str) -> Result<Vec<usize>> {
    let bad = || Error::parse(format!("bad length or range {text:?}"));
    let (lo, hi) = match text.split_once('-') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo == 0 || hi < lo {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

#[derive(Serialize)]
struct VerifyDoc {
    seed: u64,
    cap: u64,
    passed: bool,
    failures: usize,
    reports: Vec<VerificationReport>,
}

pub fn cmd_verify(cfg: &RunConfig, qs: &[u64], n: &str) -> Result<Outcome> {
    let lengths = parse_range(n)?;
    let mut reports = Vec::new();
    for &q in qs {
        for &n in &lengths {
            let tower = tower_for_q(cfg, q, n)?;
            let basis = NormalBasis::find(&tower);
            for g in divisors_of_xn_minus_1(tower.base(), n) {
                reports.push(verify_equivalence(&g, &basis, cfg.cap)?);
            }
        }
    }
    let failures = reports.iter().map(|r| r.failures().count()).sum();
    let doc = VerifyDoc {
        seed: cfg.seed,
        cap: cfg.cap,
        passed: failures == 0,
        failures,
        reports,
    };
    let stdout = if cfg.format == Format::Doc {
        to_json(&doc)
    } else {
        let mut s = String::new();
        for r in &doc.reports {
            writeln!(s, "q={} n={} g={} k={}", r.q, r.n, r.generator, r.k).ok();
            for line in r.lines() {
                writeln!(s, "  {line}").ok();
            }
        }
        let checks: usize = doc.reports.iter().map(|r| r.checks.len()).sum();
        writeln!(
            s,
            "{} codes, {checks} checks, {failures} failures, seed {}",
            doc.reports.len(),
            cfg.seed
        )
        .ok();
        s
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if failures == 0 { EXIT_OK } else { EXIT_FAILED },
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchHit {
    pub ell: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub g: String,
}

#[derive(Serialize)]
struct SearchDoc {
    q: u64,
    n: usize,
    min_d: usize,
    candidates: u64,
    sampled: bool,
    seed: u64,
    hits: Vec<SearchHit>,
}

/// Distinct nonzero codes generated by circulants of q-polynomials, with
/// minimum distance at least `min_d`, best `(k, d)` first.
pub fn search_codes(
    cfg: &RunConfig,
    tower: &FieldTower,
    min_d: usize,
    max_results: usize,
    sample: Option<usize>,
) -> Result<(Vec<SearchHit>, u64, bool)> {
    let n = tower.n();
    let q = tower.q();
    let exhaustive = tower.order().filter(|&r| r <= cfg.cap);
    let candidates: Box<dyn Iterator<Item = Vec<Fq>>> = match (exhaustive, sample) {
        (_, Some(count)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            Box::new(
                (0..count)
                    .map(move |_| (0..n).map(|_| Fq(rng.gen_range(0..q))).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
                    .into_iter(),
            )
        }
        (Some(r), None) => Box::new((0..r).map(|i| tower.from_index(i).coeffs().to_vec())),
        (None, None) => {
            return Err(Error::CapExceeded {
                needed: (q as u128).saturating_pow(n as u32),
                cap: cfg.cap,
            })
        }
    };
    let mut seen = BTreeMap::new();
    let mut hits = Vec::new();
    let mut visited = 0u64;
    for coeffs in candidates {
        visited += 1;
        let ell = QPolynomial::new(tower, coeffs)?;
        let basis = image_code_generator_matrix(&ell).row_space_basis();
        if basis.is_empty() || seen.contains_key(&basis) {
            continue;
        }
        seen.insert(basis.clone(), ());
        let code = CyclicCode::from_words(tower.base(), n, &basis)?;
        let Ok(d) = code.minimum_distance(cfg.cap) else {
            continue;
        };
        if d >= min_d {
            hits.push(SearchHit {
                ell: ell.to_text(),
                n,
                k: code.k(),
                d,
                g: code.generator().to_text(),
            });
        }
    }
    // stable: ties keep candidate order
    hits.sort_by(|a, b| b.k.cmp(&a.k).then(b.d.cmp(&a.d)));
    hits.truncate(max_results);
    Ok((hits, visited, sample.is_some()))
}

pub fn cmd_search(
    cfg: &RunConfig,
    q: u64,
    n: usize,
    min_d: usize,
    max_results: usize,
    sample: Option<usize>,
) -> Result<Outcome> {
    let tower = tower_for_q(cfg, q, n)?;
    let (hits, candidates, sampled) = search_codes(cfg, &tower, min_d, max_results, sample)?;
    if cfg.format == Format::Doc {
        let doc = SearchDoc {
            q,
            n,
            min_d,
            candidates,
            sampled,
            seed: cfg.seed,
            hits,
        };
        return Ok(Outcome::ok(to_json(&doc)));
    }
    let width = hits.iter().map(|h| h.ell.len()).max().unwrap_or(3).max(3);
    let mut s = String::new();
    writeln!(s, "{:<width$}  {:<12}  g", "ell", "[n,k,d]").ok();
    for h in &hits {
        let label = format!("[{},{},{}]", h.n, h.k, h.d);
        writeln!(s, "{:<width$}  {:<12}  {}", h.ell, label, h.g).ok();
    }
    let how = if sampled { "sampled" } else { "exhaustive" };
    writeln!(s, "{} codes from {candidates} candidates ({how}), seed {}", hits.len(), cfg.seed).ok();
    Ok(Outcome::ok(s))
}

pub fn cmd_export(cfg: &RunConfig, args: &CodeArgs, kind: MatrixKind, out: Option<PathBuf>) -> Result<Outcome> {
    let r = resolve(cfg, args)?;
    let matrix = match kind {
        MatrixKind::Generator => r.code.generator_matrix(),
        MatrixKind::G1 => r.code.g1_matrix(),
        MatrixKind::Circulant => image_code_generator_matrix(&r.ell),
    };
    let doc = matrix.to_doc();
    match out {
        Some(path) => {
            std::fs::write(&path, &doc).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            Ok(Outcome::ok(format!(
                "wrote {}x{} matrix to {} (seed {})\n",
                matrix.rows(),
                matrix.cols(),
                path.display(),
                cfg.seed
            )))
        }
        None => Ok(Outcome::ok(doc)),
    }
}

#[derive(Serialize)]
struct ImportDoc {
    q: u32,
    rows: usize,
    cols: usize,
    rank: usize,
    entries: Vec<String>,
    seed: u64,
}

pub fn cmd_import(cfg: &RunConfig, path: &PathBuf, q: Option<u64>) -> Result<Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let matrix = match q {
        Some(q) => {
            let tower = tower_for_q(cfg, q, 1)?;
            Matrix::from_doc_in(&text, tower.base())?
        }
        None => Matrix::from_doc(&text)?,
    };
    let doc = ImportDoc {
        q: matrix.field().q(),
        rows: matrix.rows(),
        cols: matrix.cols(),
        rank: matrix.rank(),
        entries: rows_text(&matrix),
        seed: cfg.seed,
    };
    if cfg.format == Format::Doc {
        return Ok(Outcome::ok(to_json(&doc)));
    }
    let mut s = format!(
        "{}x{} matrix over GF({}), rank {}\n",
        doc.rows, doc.cols, doc.q, doc.rank
    );
    s.push_str(&matrix.render());
    writeln!(s, "seed {}", cfg.seed).ok();
    Ok(Outcome::ok(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> String {
        let out = run(std::iter::once("qcyclic").chain(args.iter().copied()));
        assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
        out.stdout
    }

    fn run_code(args: &[&str]) -> Outcome {
        run(std::iter::once("qcyclic").chain(args.iter().copied()))
    }

    #[test]
    fn build_command() {
        let out = run_ok(&["build", "2", "1", "7"]);
        assert!(out.contains("ext_poly   1,1,0,0,0,0,0,1"), "{out}");
        assert!(out.contains("normal"));
        let out = run_ok(&["build", "2", "1", "1"]);
        assert!(out.contains("normal     1 "), "{out}");
        let bad = run_code(&["build", "4", "1", "3"]);
        assert_eq!(bad.code, EXIT_USAGE);
        assert!(bad.stderr.contains("4 is not prime"));
    }

    #[test]
    fn code_command_examples() {
        let out = run_ok(&["code", "--from", "g", "--value", "1,1,0,1", "--n", "7"]);
        assert!(out.contains("[7,4,3]"), "{out}");
        assert!(out.contains("qpoly:1,0,0,0,1,0,1"));
        let out = run_ok(&["code", "--from", "ell", "--value", "1,0,0", "--n", "3"]);
        assert!(out.contains("[3,3,1]"), "{out}");
        let out = run_ok(&["code", "--from", "lambda", "--value", "1,0,0", "--n", "3"]);
        assert!(out.contains("[3,0]"), "{out}");
        let out = run_ok(&["code", "--from", "h", "--value", "1,1,1,0,1", "--n", "7"]);
        assert!(out.contains("[7,4,3]"), "{out}");
        let out = run_ok(&["code", "--from", "lambda", "--value", "g^0", "--n", "3"]);
        assert!(out.contains("[3,2,2]"), "{out}");

        assert_eq!(run_code(&["code", "--from", "g", "--value", "1,0,0,1", "--n", "7"]).code, EXIT_USAGE);
        assert_eq!(run_code(&["code", "--from", "lambda", "--value", "0,0,0", "--n", "3"]).code, EXIT_USAGE);
        assert_eq!(run_code(&["code", "--from", "g", "--value", "x", "--n", "3"]).code, EXIT_USAGE);
        assert_eq!(run_code(&["code", "--from", "nope", "--value", "1", "--n", "3"]).code, EXIT_USAGE);
    }

    #[test]
    fn search_examples() {
        let out = run_ok(&["search", "--q", "2", "--n", "3", "--min-d", "3"]);
        let rows: Vec<_> = out.lines().filter(|l| l.starts_with("qpoly:")).collect();
        assert_eq!(rows.len(), 1, "{out}");
        assert!(rows[0].contains("[3,1,3]"));
        let out = run_ok(&["search", "--q", "2", "--n", "7", "--min-d", "3"]);
        assert!(out.contains("[7,4,3]"), "{out}");
        let out = run_ok(&["search", "--q", "2", "--n", "5", "--min-d", "6"]);
        assert!(!out.contains("qpoly:"));
        assert_eq!(run_code(&["--cap", "100", "search", "--q", "2", "--n", "7"]).code, EXIT_USAGE);
        let sampled = run_ok(&["--cap", "100", "--seed", "7", "search", "--q", "2", "--n", "7", "--sample", "40"]);
        assert_eq!(
            sampled,
            run_ok(&["--cap", "100", "--seed", "7", "search", "--q", "2", "--n", "7", "--sample", "40"])
        );
    }

    #[test]
    fn verify_small_and_repeated_root() {
        let out = run_ok(&["verify", "--q", "2", "--n", "2-4"]);
        assert!(out.contains("0 failures"), "{out}");
        assert!(out.contains("q=2 n=2 g=1,0,1"));
        let out = run_code(&["verify", "--q", "2", "--n", "7"]);
        assert_eq!(out.code, EXIT_FAILED);
        assert_eq!(out.stdout.lines().filter(|l| l.starts_with("q=2 n=7")).count(), 8);
        assert_eq!(run_code(&["verify", "--q", "6", "--n", "3"]).code, EXIT_USAGE);
        assert_eq!(run_code(&["verify", "--n", "5-3"]).code, EXIT_USAGE);
    }

    #[test]
    fn export_import_round_trip() {
        let dir = std::env::temp_dir().join(format!("qcyclic-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("hamming.json");
        let p = path.to_str().unwrap();
        run_ok(&["export", "--from", "g", "--value", "1,1,0,1", "--n", "7", "--out", p]);
        let out = run_ok(&["import", p]);
        assert!(out.starts_with("4x7 matrix over GF(2), rank 4"), "{out}");
        assert_eq!(run_code(&["import", p, "--q", "3"]).code, EXIT_USAGE);

        let text = std::fs::read_to_string(&path).unwrap();
        let cut: String = text.lines().take(5).collect::<Vec<_>>().join("\n");
        std::fs::write(&path, cut).unwrap();
        let bad = run_code(&["import", p]);
        assert_eq!(bad.code, EXIT_USAGE);
        assert!(bad.stderr.contains("line"), "{}", bad.stderr);
        std::fs::remove_dir_all(&dir).ok();
    }
}

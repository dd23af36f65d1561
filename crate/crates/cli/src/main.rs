//! Command-line front end: certify point sets, build Seidel matrices, evaluate
//! bounds, regenerate the bound tables and convert between representations.

use std::fs;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use twodist::bounds::{
    bound_euclidean, bound_spherical_neg, bound_spherical_pos, equality_spectrum, gamma_of, ls_max_bound,
    make_table, published_diff, GammaSource, SetKind, Table, TableKind, TableSpec,
};
use twodist::configurations::io::read_points_json;
use twodist::configurations::{certify_two_distance, distance_sq_matrix, gram, TwoDistanceCertificate};
use twodist::correspondence::{equiangular_to_spherical, seidel_to_lines, spherical_to_equiangular, EquiangularSystem};
use twodist::etf::{etf_signature_test, EtfCatalog};
use twodist::linalg::io::{format_matrix, parse_matrix, to_csv};
use twodist::linalg::spectrum;
use twodist::seidel::{
    build_d, check_structure_euclidean, check_structure_spherical, seidel_euclidean, seidel_spherical,
    spectrum_d_closed_form, EuclideanSeidelParams,
};
use twodist::{Error, Flavor, Rational, Scalar, SeidelMatrix, Spectrum, SymMatrix};

#[derive(Parser)]
#[command(name = "twodist", version, about = "Spectral bounds for two-distance sets")]
struct Cli {
    /// Relative tolerance for clustering, rank and float comparisons.
    #[arg(long, global = true, env = "TWODIST_TOL", default_value_t = twodist::DEFAULT_TOL)]
    tol: f64,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
    /// Plain matrix text format.
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundArg {
    Euclidean,
    SphericalPos,
    SphericalNeg,
    LsMaxEuclidean,
    LsMaxSpherical,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// Spherical Gram (a + b < 0) to an equiangular Gram.
    SphericalToLines,
    /// Equiangular Gram to a spherical Gram with inner product `a`.
    LinesToSpherical,
    /// Seidel matrix to an equiangular Gram.
    SeidelToLines,
}

#[derive(Subcommand)]
enum Command {
    /// Certify a point file as a two-distance set.
    Certify {
        #[arg(long)]
        file: PathBuf,
    },
    /// Build the Seidel matrix of a point file.
    Seidel {
        #[arg(long)]
        file: PathBuf,
        /// Squared distance ratio, either convention; checked against the data.
        #[arg(long, value_parser = rational)]
        delta_sq: Option<Rational>,
        /// Also verify the eigenvalue structure and report it on stderr.
        #[arg(long)]
        check: bool,
    },
    /// Validate a Seidel matrix file.
    CheckSeidel { file: PathBuf },
    /// Clustered spectrum of a matrix file.
    Spectrum {
        file: PathBuf,
    },
    /// Evaluate one cardinality bound.
    Bound {
        #[arg(long, value_enum)]
        kind: BoundArg,
        #[arg(long)]
        d: usize,
        /// L.R.S. constant, γ = 2k − 1.
        #[arg(long, group = "param")]
        k: Option<u64>,
        #[arg(long, value_parser = rational, group = "param")]
        gamma: Option<Rational>,
        #[arg(long, value_parser = rational, group = "param")]
        delta_sq: Option<Rational>,
        /// Inner products of a spherical set; needs `--b`.
        #[arg(long, value_parser = rational, requires = "b", group = "param", allow_hyphen_values = true)]
        a: Option<Rational>,
        #[arg(long, value_parser = rational, requires = "a", allow_hyphen_values = true)]
        b: Option<Rational>,
        /// Smallest admissible γ = 2m + 1 for the ls-max kinds.
        #[arg(long, group = "param")]
        m: Option<u64>,
    },
    /// Regenerate a bound table.
    Table {
        #[arg(long, value_parser = table_kind)]
        kind: TableKind,
        #[arg(long, value_parser = usize_range)]
        d: Option<RangeInclusive<usize>>,
        #[arg(long, value_parser = u64_range)]
        k: Option<RangeInclusive<u64>>,
        /// Apply existence refinements from this catalog CSV.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Put the published values beside the computed ones.
        #[arg(long)]
        paper_diff: bool,
    },
    /// Table with the ETF catalog applied, plus published values.
    Refine {
        #[arg(long, value_parser = table_kind)]
        table: TableKind,
        /// Catalog CSV; the bundled catalog when omitted.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Convert between spherical Gram, equiangular Gram and Seidel files.
    Convert {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        a: Option<Rational>,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        b: Option<Rational>,
        /// Common angle; read from the Gram matrix when omitted.
        #[arg(long, value_parser = rational)]
        alpha: Option<Rational>,
    },
    /// Equiangular tight frame test on a Seidel matrix file.
    EtfCheck { file: PathBuf },
    /// Run the built-in consistency checks.
    Selftest,
}

fn rational(s: &str) -> Result<Rational, String> {
    twodist::parse_scalar::<Rational>(s).map_err(|e| e.to_string())
}

fn table_kind(s: &str) -> Result<TableKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn range<T: std::str::FromStr + PartialOrd + Copy>(s: &str) -> Result<RangeInclusive<T>, String> {
    let num = |v: &str| v.trim().parse::<T>().map_err(|_| format!("invalid number {v:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

fn usize_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    range(s)
}

fn u64_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    range(s)
}

type Res<T> = Result<T, Error>;

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn certificate_json<T: Scalar>(cert: &TwoDistanceCertificate<T>) -> Value {
    let n = cert.n;
    let labels: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| if i == j { 0 } else { cert.label(i, j) }).collect()).collect();
    let mut v = json!({
        "ok": true,
        "flavor": cert.flavor,
        "n": n,
        "values": cert.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "pair_counts": cert.pair_counts(),
        "pair_labels": labels,
    });
    if cert.flavor == Flavor::Euclidean {
        v["ratio_sq"] = json!(cert.ratio().to_string());
        v["h"] = json!(cert.h);
    }
    v
}

fn load_points(path: &Path) -> Res<twodist::ExactConfiguration> {
    read_points_json(&read(path)?)
}

fn certify(file: &Path, tol: f64) -> Res<String> {
    let cfg = load_points(file)?;
    let cert = certify_two_distance(&cfg, tol)?;
    Ok(pretty(&certificate_json(&cert)))
}

fn matrix_out<T: Scalar>(m: &SymMatrix<T>, format: Format, header: &[String]) -> String {
    match format {
        Format::Csv => to_csv(m),
        Format::Json => pretty(&json!({
            "order": m.order(),
            "entries": m.rows().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })),
        Format::Md => {
            let mut s = String::new();
            for r in m.rows() {
                let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                s.push_str(&format!("| {} |\n", cells.join(" | ")));
            }
            s
        }
        Format::Text => {
            let mut s: String = header.iter().map(|h| format!("# {h}\n")).collect();
            s.push_str(&format_matrix(m));
            s
        }
    }
}

fn seidel(file: &Path, delta_sq: Option<&Rational>, check: bool, tol: f64, format: Format) -> Res<String> {
    let cfg = load_points(file)?;
    let d = cfg.dim();
    let (s, header, report) = match cfg.flavor() {
        Flavor::Euclidean => {
            let out = seidel_euclidean(&distance_sq_matrix(&cfg), d, delta_sq, tol)?;
            let p = &out.params;
            let header = vec![format!("euclidean n={} d={} delta_sq={} h={}", p.n, p.d, p.delta_sq, p.h)];
            let report = check.then(|| check_structure_euclidean(&out.seidel, d, &p.delta_sq, tol));
            (out.seidel, header, report)
        }
        Flavor::Spherical => {
            if delta_sq.is_some() {
                return Err(Error::InvalidParams("--delta-sq applies to Euclidean sets".into()));
            }
            let g = gram(&cfg)?;
            let cert = certify_two_distance(&cfg, tol)?;
            let [a, b] = cert.values;
            let s = seidel_spherical(&g, &a, &b, tol)?;
            let header = vec![format!("spherical n={} d={d} a={a} b={b}", g.order())];
            let report = check.then(|| check_structure_spherical(&s, d, &a, &b, tol));
            (s, header, report)
        }
    };
    if let Some(rep) = report {
        eprint!("{}", pretty(&rep));
        if !rep.passes {
            return Err(Error::InvalidParams(format!("eigenvalue structure check failed: {}", rep.note)));
        }
    }
    Ok(matrix_out(&s.to_matrix::<Rational>(), format, &header))
}

fn load_seidel(path: &Path) -> Res<SeidelMatrix> {
    SeidelMatrix::from_text(&read(path)?)
}

fn check_seidel(file: &Path) -> Res<String> {
    let s = load_seidel(file)?;
    let m = s.order() as i64;
    Ok(pretty(&json!({
        "ok": true,
        "order": m,
        "trace": s.trace(),
        "trace_of_square": s.trace_of_square(),
        "expected_trace_of_square": m * (m - 1),
    })))
}

enum AnyMatrix {
    Exact(SymMatrix<Rational>),
    Float(SymMatrix<f64>),
}

fn load_matrix(path: &Path) -> Res<AnyMatrix> {
    let text = read(path)?;
    match parse_matrix::<Rational>(&text) {
        Ok(m) => Ok(AnyMatrix::Exact(m)),
        Err(_) => parse_matrix::<f64>(&text).map(AnyMatrix::Float),
    }
}

fn spectrum_out(spec: &Spectrum, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut w = csv_lines(&["value", "multiplicity"]);
            for c in &spec.clusters {
                w.push_str(&format!("{},{}\n", c.value, c.multiplicity));
            }
            w
        }
        Format::Md => {
            let mut s = String::from("| value | multiplicity |\n| ---: | ---: |\n");
            for c in &spec.clusters {
                s.push_str(&format!("| {:.10} | {} |\n", c.value, c.multiplicity));
            }
            s
        }
        Format::Json | Format::Text => pretty(spec),
    }
}

fn csv_lines(header: &[&str]) -> String {
    format!("{}\n", header.join(","))
}

fn spectrum_cmd(file: &Path, tol: f64, format: Format) -> Res<String> {
    let spec = match load_matrix(file)? {
        AnyMatrix::Exact(m) => spectrum(&m, tol),
        AnyMatrix::Float(m) => spectrum(&m, tol),
    };
    Ok(spectrum_out(&spec, format))
}

struct BoundArgs {
    kind: BoundArg,
    d: usize,
    k: Option<u64>,
    gamma: Option<Rational>,
    delta_sq: Option<Rational>,
    ab: Option<(Rational, Rational)>,
    m: Option<u64>,
}

fn bound(args: BoundArgs) -> Res<String> {
    let ls_kind = match args.kind {
        BoundArg::LsMaxEuclidean => Some(SetKind::Euclidean),
        BoundArg::LsMaxSpherical => Some(SetKind::Spherical),
        _ => None,
    };
    if let Some(kind) = ls_kind {
        let m = args.m.ok_or_else(|| Error::InvalidParams("ls-max bounds need --m".into()))?;
        return Ok(pretty(&ls_max_bound(args.d, m, kind)?));
    }
    let source = match (args.k, args.gamma, args.delta_sq, args.ab) {
        (Some(k), ..) => GammaSource::Lrs { k },
        (_, Some(g), ..) => {
            if g <= Rational::from_i64(1) {
                return Err(Error::InvalidParams(format!("gamma must exceed 1, got {g}")));
            }
            return Ok(pretty(&pointwise(args.kind, args.d, &g)));
        }
        (_, _, Some(delta_sq), _) => GammaSource::Euclidean { delta_sq },
        (_, _, _, Some((a, b))) => GammaSource::Spherical { a, b },
        _ => return Err(Error::InvalidParams("need one of --k, --gamma, --delta-sq, --a/--b".into())),
    };
    if let GammaSource::Spherical { a, b } = &source {
        let neg = (a.clone() + b.clone()) < Rational::from_i64(0);
        match args.kind {
            BoundArg::SphericalPos if neg => return Err(Error::WrongSignBranch { sum: (a + b).to_string() }),
            BoundArg::SphericalNeg if !neg => {
                return Err(Error::InvalidParams(format!("a + b = {} >= 0; use spherical-pos", a + b)))
            }
            _ => {}
        }
    }
    if let (GammaSource::Euclidean { .. }, BoundArg::SphericalPos | BoundArg::SphericalNeg) = (&source, args.kind) {
        return Err(Error::InvalidParams("--delta-sq gives a Euclidean gamma".into()));
    }
    let g = gamma_of(source)?.gamma;
    Ok(pretty(&pointwise(args.kind, args.d, &g)))
}

fn pointwise(kind: BoundArg, d: usize, g: &Rational) -> twodist::ExactBound {
    match kind {
        BoundArg::Euclidean => bound_euclidean(d, g),
        BoundArg::SphericalPos => bound_spherical_pos(d, g),
        BoundArg::SphericalNeg => bound_spherical_neg(d, g),
        BoundArg::LsMaxEuclidean | BoundArg::LsMaxSpherical => unreachable!("handled by ls_max_bound"),
    }
}

fn load_catalog(path: Option<&Path>) -> Res<EtfCatalog> {
    match path {
        Some(p) => EtfCatalog::load(p),
        None => Ok(EtfCatalog::bundled()),
    }
}

fn table_out(t: &Table, format: Format, with_published: bool) -> String {
    match format {
        Format::Md => t.to_markdown(with_published),
        Format::Json => {
            let mut v = serde_json::to_value(t).expect("table serializes");
            if with_published {
                v["published_diff"] = serde_json::to_value(published_diff(t)).expect("diff serializes");
            }
            pretty(&v)
        }
        Format::Csv | Format::Text => t.to_csv(with_published),
    }
}

fn table(
    kind: TableKind,
    d: Option<RangeInclusive<usize>>,
    k: Option<RangeInclusive<u64>>,
    catalog: Option<&Path>,
    paper_diff: bool,
    format: Format,
) -> Res<String> {
    let std = TableSpec::standard(kind);
    let spec = TableSpec::new(kind, d.unwrap_or(std.d_range), k.unwrap_or(std.k_range))?;
    let cat = catalog.map(EtfCatalog::load).transpose()?;
    let t = make_table(&spec, cat.as_ref());
    if paper_diff {
        for diff in published_diff(&t) {
            eprintln!(
                "differs from published: d={} {} computed {} published {}",
                diff.d,
                diff.column,
                diff.computed.map_or("-".into(), |v| v.to_string()),
                diff.published.map_or("-".into(), |v| v.to_string()),
            );
        }
    }
    Ok(table_out(&t, format, paper_diff))
}

fn refine(kind: TableKind, catalog: Option<&Path>, format: Format) -> Res<String> {
    let cat = load_catalog(catalog)?;
    let t = make_table(&TableSpec::standard(kind), Some(&cat));
    Ok(table_out(&t, format, true))
}

fn infer_alpha(g: &SymMatrix<Rational>) -> Res<Rational> {
    g.upper_pairs()
        .next()
        .map(|(_, _, v)| if *v < Rational::from_i64(0) { -v.clone() } else { v.clone() })
        .ok_or_else(|| Error::InvalidParams("need at least two lines to infer alpha".into()))
}

fn lines_header<T: Scalar>(sys: &EquiangularSystem<T>) -> Vec<String> {
    vec![format!("equiangular lines n={} alpha={} dim={}", sys.len(), sys.alpha, sys.dim)]
}

fn convert(
    file: &Path,
    direction: Direction,
    a: Option<Rational>,
    b: Option<Rational>,
    alpha: Option<Rational>,
    tol: f64,
    format: Format,
) -> Res<String> {
    let need = |v: Option<Rational>, name: &str| v.ok_or_else(|| Error::InvalidParams(format!("--{name} is required")));
    match direction {
        Direction::SphericalToLines => {
            let g = exact_matrix(file)?;
            let sys = spherical_to_equiangular(&g, &need(a, "a")?, &need(b, "b")?, tol)?;
            Ok(matrix_out(&sys.gram, format, &lines_header(&sys)))
        }
        Direction::LinesToSpherical => {
            let g = exact_matrix(file)?;
            let alpha = match alpha {
                Some(v) => v,
                None => infer_alpha(&g)?,
            };
            let s = SeidelMatrix::from_matrix(&g.shift(&-Rational::from_i64(1)).scale(&(Rational::from_i64(1) / alpha.clone())), 0.0)?;
            let dim = twodist::linalg::psd_rank(&g, tol).numeric_rank;
            let sys = EquiangularSystem { gram: g, alpha, dim };
            let a = need(a, "a")?;
            let out = equiangular_to_spherical(&sys, &a, tol)?;
            let b = twodist::correspondence::family_param(&sys.alpha, &a).b;
            let header = vec![format!("spherical n={} a={a} b={b} (from {} lines)", s.order(), sys.len())];
            Ok(matrix_out(&out, format, &header))
        }
        Direction::SeidelToLines => {
            let s = load_seidel(file)?;
            match seidel_to_lines::<Rational>(&s, tol) {
                Ok(sys) => Ok(matrix_out(&sys.gram, format, &lines_header(&sys))),
                Err(Error::NotExact(_)) => {
                    let sys = seidel_to_lines::<f64>(&s, tol)?;
                    Ok(matrix_out(&sys.gram, format, &lines_header(&sys)))
                }
                Err(e) => Err(e),
            }
        }
    }
}

fn exact_matrix(path: &Path) -> Res<SymMatrix<Rational>> {
    parse_matrix(&read(path)?)
}

fn etf_check(file: &Path, tol: f64) -> Res<String> {
    Ok(pretty(&etf_signature_test(&load_seidel(file)?, tol)))
}

fn r(p: i64, q: i64) -> Rational {
    Rational::from_ratio(p, q)
}

fn check_d_closed_form(_tol: f64) -> Result<String, String> {
    let mut worst = 0f64;
    for n in 3..=16 {
        for h in 1..=n - 2 {
            let p = EuclideanSeidelParams::new(n, 1, r(2, 1), h).map_err(|e| e.to_string())?;
            let (a1, a2) = spectrum_d_closed_form(&p).map_err(|e| e.to_string())?;
            let e = twodist::linalg::eig_sym(&build_d(&p).map_err(|e| e.to_string())?);
            worst = worst.max((e[0] - a2).abs()).max((e[e.len() - 1] - a1).abs());
        }
    }
    if worst < 1e-8 { Ok(format!("max deviation {worst:.1e}")) } else { Err(format!("max deviation {worst:.1e}")) }
}

fn check_bound_examples(_tol: f64) -> Result<String, String> {
    let cases = [
        (bound_euclidean(15, &r(5, 1)).bound_i64(), 43),
        (bound_euclidean(5, &r(3, 1)).bound_i64(), 17),
        (bound_spherical_pos(7, &r(3, 1)).bound_i64(), 28),
        (bound_spherical_pos(17, &r(5, 1)).bound_i64(), 51),
    ];
    match cases.iter().find(|(got, want)| *got != Some(*want)) {
        None => Ok("4 reference values".into()),
        Some((got, want)) => Err(format!("got {got:?}, expected {want}")),
    }
}

fn check_equality_28(tol: f64) -> Result<String, String> {
    let g = twodist::configurations::fixtures::equiangular_28_gram::<Rational>();
    let s = seidel_spherical(&g, &r(-1, 3), &r(1, 3), 0.0).map_err(|e| e.to_string())?;
    let etf = etf_signature_test(&s, tol);
    let spec = equality_spectrum(28, 7, SetKind::Spherical).map_err(|e| e.to_string())?;
    if etf.mu == Some(6) && spec.satisfies_trace_identities() && (etf.rho2 + 3.0).abs() < 1e-8 {
        Ok("mu = 6, spectrum {-3^21, 9^7}".into())
    } else {
        Err(format!("{etf:?}"))
    }
}

fn check_refinement_18(_tol: f64) -> Result<String, String> {
    let cat = EtfCatalog::bundled();
    let t = make_table(&TableSpec::standard(TableKind::Table4), Some(&cat));
    let v = t.cell(18, "g_5").and_then(|c| c.bound_i64());
    if v == Some(76) { Ok("g_5(18) = 76".into()) } else { Err(format!("g_5(18) = {v:?}")) }
}

fn check_round_trip(tol: f64) -> Result<String, String> {
    let cfg = twodist::configurations::cross_polytope::<Rational>(4).map_err(|e| e.to_string())?;
    let g = gram(&cfg).map_err(|e| e.to_string())?;
    let sys = spherical_to_equiangular(&g, &r(-1, 1), &r(0, 1), tol).map_err(|e| e.to_string())?;
    let back = equiangular_to_spherical(&sys, &r(-1, 1), tol).map_err(|e| e.to_string())?;
    if back == g { Ok("cross polytope in R^4".into()) } else { Err("Gram differs".into()) }
}

type Check = fn(f64) -> Result<String, String>;

/// Cheap internal consistency checks, one JSON line each.
fn selftest(tol: f64) -> (String, bool) {
    let checks: [(&str, Check); 5] = [
        ("d_closed_form", check_d_closed_form),
        ("bound_examples", check_bound_examples),
        ("equality_28", check_equality_28),
        ("refinement_18", check_refinement_18),
        ("round_trip", check_round_trip),
    ];
    let mut out = String::new();
    let mut all = true;
    for (name, check) in checks {
        let (ok, detail) = match check(tol) {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        all &= ok;
        out.push_str(&serde_json::to_string(&json!({"check": name, "pass": ok, "detail": detail})).unwrap());
        out.push('\n');
    }
    (out, all)
}

fn run(cli: Cli) -> Res<(String, bool)> {
    let tol = cli.tol;
    let fmt = |default| cli.format.unwrap_or(default);
    let text = match cli.command {
        Command::Certify { file } => certify(&file, tol)?,
        Command::Seidel { file, delta_sq, check } => seidel(&file, delta_sq.as_ref(), check, tol, fmt(Format::Text))?,
        Command::CheckSeidel { file } => check_seidel(&file)?,
        Command::Spectrum { file } => spectrum_cmd(&file, tol, fmt(Format::Json))?,
        Command::Bound { kind, d, k, gamma, delta_sq, a, b, m } => {
            bound(BoundArgs { kind, d, k, gamma, delta_sq, ab: a.zip(b), m })?
        }
        Command::Table { kind, d, k, catalog, paper_diff } => {
            table(kind, d, k, catalog.as_deref(), paper_diff, fmt(Format::Csv))?
        }
        Command::Refine { table, catalog } => refine(table, catalog.as_deref(), fmt(Format::Csv))?,
        Command::Convert { file, direction, a, b, alpha } => {
            convert(&file, direction, a, b, alpha, tol, fmt(Format::Text))?
        }
        Command::EtfCheck { file } => etf_check(&file, tol)?,
        Command::Selftest => return Ok(selftest(tol)),
    };
    Ok((text, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli) {
        Ok((text, ok)) => {
            let written = match &output {
                Some(p) => fs::write(p, &text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("{}", json!({"error": "io", "detail": e.to_string()}));
                return ExitCode::from(1);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", json!({"error": e.kind(), "detail": e.to_string()}));
            ExitCode::from(1)
        }
    }
}

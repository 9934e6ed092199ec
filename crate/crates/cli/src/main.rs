//! `ppart`: enumerate plane-partition classes, apply the bijections, print
//! generating polynomials and determinants, and run the verification suites.
//!
//! Exit status: 0 on success, 1 on a failed verification or an invalid
//! object, 2 on a usage error.

use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ppart::closedform::{
    andrews_burge_det, andrews_burge_product, matrix_c_e, matrix_c_o, matrix_cprime, matrix_r_e, matrix_r_o,
    matrix_rprime, mrr_det, mrr_product, RefValues,
};
use ppart::cspp::{enumerate_cspp, invariants_of};
use ppart::domino::{
    delta, delta_inverse, enumerate_domino, enumerate_paired, phi, phi_inverse, theta, theta_inverse,
};
use ppart::exact::{PolyMatrix, TPoly};
use ppart::tspp::{count_tspp, enumerate_tspp, enumerate_tspp_invariant};
use ppart::verify::{run_conjecture, run_suite, Conjecture, Suite, VerificationReport, VerifyOptions};
use ppart::{Cspp, CsppInvolution, DominoClass, DominoTableau, EnumOptions, PairKind, PairedPP, Tspp, TsppInvolution};

/// Largest `--limit` accepted.
const MAX_LIMIT: usize = 9;
/// Limit above which a warning is printed.
const QUIET_LIMIT: usize = 7;

#[derive(Parser)]
#[command(name = "ppart", version, about = "Plane-partition classes, bijections and determinant formulas")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every element of a class (JSON lines by default).
    Enumerate(EnumerateArgs),
    /// Apply a map to JSON objects read from stdin.
    Map(MapArgs),
    /// Generating polynomial of a statistic over a class.
    Genpoly(GenpolyArgs),
    /// Build a determinant matrix and evaluate it.
    Det(DetArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Compare a conjectured identity against computed data.
    Conjecture(ConjectureArgs),
    /// Table of the alternating sign matrix reference numbers and polynomials.
    Refvalues(RefvaluesArgs),
}

#[derive(Args, Clone, Copy)]
struct Sizing {
    /// Upper bound on n+m (at most 9).
    #[arg(long, default_value_t = QUIET_LIMIT)]
    limit: usize,
    /// Worker threads for enumeration.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl Sizing {
    fn options(self) -> EnumOptions {
        if self.limit > MAX_LIMIT {
            usage(format!("--limit {} exceeds the maximum {MAX_LIMIT}", self.limit));
        }
        if self.limit > QUIET_LIMIT {
            eprintln!("warning: --limit {} is above {QUIET_LIMIT}; this may take a while", self.limit);
        }
        EnumOptions::with_limit(self.limit).with_jobs(self.jobs)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Ascii,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Class {
    Tspp,
    Cspp,
    Gcspp,
    Dpp,
    Rdpp,
    Cdpp,
    Hpcspp,
    Vpcspp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Filter {
    Rho,
    Gamma,
    #[value(name = "rho_tilde")]
    RhoTilde,
    #[value(name = "gamma_tilde")]
    GammaTilde,
}

#[derive(Args)]
struct EnumerateArgs {
    class: Class,
    n: usize,
    m: usize,
    /// Keep only the invariants of an involution.
    #[arg(long)]
    filter: Option<Filter>,
    /// Print only the number of elements.
    #[arg(long)]
    count: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    sizing: Sizing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum MapSpec {
    GammaBij,
    Tbk(usize),
    Pi(usize),
    Rho,
    Gamma,
    Theta,
    Delta,
    Phi,
}

fn parse_map(s: &str) -> std::result::Result<MapSpec, String> {
    let indexed = |rest: &str| rest.parse::<usize>().map_err(|_| format!("bad index in {s:?}"));
    match s {
        "gamma_bij" => Ok(MapSpec::GammaBij),
        "rho" | "rho_tilde" => Ok(MapSpec::Rho),
        "gamma" | "gamma_tilde" => Ok(MapSpec::Gamma),
        "theta" => Ok(MapSpec::Theta),
        "delta" => Ok(MapSpec::Delta),
        "phi" => Ok(MapSpec::Phi),
        _ => {
            if let Some(r) = s.strip_prefix("tbk:") {
                Ok(MapSpec::Tbk(indexed(r)?))
            } else if let Some(r) = s.strip_prefix("pi:") {
                Ok(MapSpec::Pi(indexed(r)?))
            } else {
                Err(format!(
                    "unknown map {s:?}; expected gamma_bij, tbk:R, pi:R, rho, gamma, theta, delta or phi"
                ))
            }
        }
    }
}

#[derive(Args)]
struct MapArgs {
    /// gamma_bij | tbk:R | pi:R | rho | gamma | theta | delta | phi
    #[arg(value_parser = parse_map)]
    map: MapSpec,
    /// Apply the inverse to the image and check that the input comes back.
    #[arg(long)]
    roundtrip: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Stat {
    /// `Ubar_k`, defined on every class.
    Ubar,
    /// `U_k`, triangular partitions only.
    U,
}

#[derive(Args)]
struct GenpolyArgs {
    class: Class,
    n: usize,
    m: usize,
    /// Index of the statistic.
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, value_enum, default_value = "ubar")]
    stat: Stat,
    #[arg(long)]
    filter: Option<Filter>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    sizing: Sizing,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DetKind {
    /// `R°_r` (args: r)
    #[value(name = "r_o")]
    RO,
    /// `Rᵉ_r` (args: r)
    #[value(name = "r_e")]
    RE,
    /// `C°_r` (args: r)
    #[value(name = "c_o")]
    CO,
    /// `Cᵉ_r` (args: r)
    #[value(name = "c_e")]
    CE,
    /// RDPP matrix (args: n m)
    Rprime,
    /// CDPP matrix (args: n m)
    Cprime,
    /// Andrews-Burge determinant and product (args: n x y)
    AndrewsBurge,
    /// `det C(i+j+x, 2i-j)` and its product (args: n x)
    Mrr,
}

#[derive(Args)]
struct DetArgs {
    which: DetKind,
    #[arg(allow_negative_numbers = true)]
    args: Vec<i64>,
    /// Evaluate at t = 1.
    #[arg(long)]
    at_one: bool,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Bijections,
    Statistics,
    Determinants,
    TheoremResults,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    suite: SuiteArg,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
    #[command(flatten)]
    sizing: Sizing,
    /// Corrupt computed values, to check that failures are detected.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConjectureArg {
    Mrr4,
    Mrr6,
    Detforms,
    GcsppCdpp,
}

#[derive(Args)]
struct ConjectureArgs {
    which: ConjectureArg,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
    #[command(flatten)]
    sizing: Sizing,
}

#[derive(Args)]
struct RefvaluesArgs {
    /// Largest size in the table.
    #[arg(long, default_value_t = 9)]
    upto: usize,
    #[arg(long, value_enum, default_value = "ascii")]
    format: Format,
}

fn usage(msg: String) -> ! {
    Cli::command().error(ErrorKind::InvalidValue, msg).exit()
}

/// Any object the maps accept or produce.
#[derive(Clone, Debug, PartialEq)]
enum Item {
    Tspp(Tspp),
    Cspp(Cspp),
    Domino(DominoTableau),
    Paired(PairedPP),
}

impl Item {
    fn from_json(v: Value) -> Result<Item> {
        let kind = v.get("kind").and_then(Value::as_str).unwrap_or_default().to_string();
        Ok(match kind.as_str() {
            "tspp" => Item::Tspp(serde_json::from_value(v)?),
            "cspp" => Item::Cspp(serde_json::from_value(v)?),
            "domino" => Item::Domino(serde_json::from_value(v)?),
            "paired" => Item::Paired(serde_json::from_value(v)?),
            other => bail!("unknown object kind {other:?}"),
        })
    }

    fn to_json(&self) -> String {
        match self {
            Item::Tspp(x) => serde_json::to_string(x),
            Item::Cspp(x) => serde_json::to_string(x),
            Item::Domino(x) => serde_json::to_string(x),
            Item::Paired(x) => serde_json::to_string(x),
        }
        .expect("serializable")
    }

    fn to_ascii(&self) -> String {
        match self {
            Item::Tspp(x) => x.to_ascii(),
            Item::Cspp(x) => x.to_ascii(),
            Item::Domino(x) => x.to_ascii(),
            Item::Paired(x) => x.to_ascii(),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Item::Tspp(_) => "tspp",
            Item::Cspp(_) => "cspp",
            Item::Domino(_) => "domino",
            Item::Paired(_) => "paired",
        }
    }

    fn stat(&self, stat: Stat, k: usize) -> Result<usize> {
        Ok(match (self, stat) {
            (Item::Tspp(b), Stat::U) => b.stat_u(k)?,
            (Item::Tspp(b), Stat::Ubar) => b.stat_ubar(k)?,
            (Item::Cspp(c), Stat::Ubar) => c.stat_ubar(k)?,
            (Item::Domino(d), Stat::Ubar) => d.stat_ubar(k),
            (Item::Paired(p), Stat::Ubar) => p.stat_ubar(k),
            _ => usage("--stat u is only defined on tspp".into()),
        })
    }
}

fn domino_class(class: Class) -> Option<DominoClass> {
    match class {
        Class::Gcspp => Some(DominoClass::Gcspp),
        Class::Dpp => Some(DominoClass::Dpp),
        Class::Rdpp => Some(DominoClass::Rdpp),
        Class::Cdpp => Some(DominoClass::Cdpp),
        _ => None,
    }
}

fn collect(class: Class, n: usize, m: usize, filter: Option<Filter>, opts: &EnumOptions) -> Result<Vec<Item>> {
    let items = match (class, filter) {
        (Class::Tspp, None) => enumerate_tspp(n, m, opts)?.into_iter().map(Item::Tspp).collect(),
        (Class::Tspp, Some(Filter::Rho)) => enumerate_tspp_invariant(n, m, TsppInvolution::Rho, opts)?
            .into_iter()
            .map(Item::Tspp)
            .collect(),
        (Class::Tspp, Some(Filter::Gamma)) => enumerate_tspp_invariant(n, m, TsppInvolution::Gamma, opts)?
            .into_iter()
            .map(Item::Tspp)
            .collect(),
        (Class::Cspp, None) => enumerate_cspp(n, m, opts)?.into_iter().map(Item::Cspp).collect(),
        (Class::Cspp, Some(Filter::RhoTilde)) => invariants_of(n, m, CsppInvolution::RhoTilde, opts)?
            .into_iter()
            .map(Item::Cspp)
            .collect(),
        (Class::Cspp, Some(Filter::GammaTilde)) => invariants_of(n, m, CsppInvolution::GammaTilde, opts)?
            .into_iter()
            .map(Item::Cspp)
            .collect(),
        (Class::Hpcspp, None) => enumerate_paired(PairKind::Hpcspp, n, m, opts)?
            .into_iter()
            .map(Item::Paired)
            .collect(),
        (Class::Vpcspp, None) => enumerate_paired(PairKind::Vpcspp, n, m, opts)?
            .into_iter()
            .map(Item::Paired)
            .collect(),
        (c, None) => enumerate_domino(domino_class(c).expect("domino class"), n, m, opts)?
            .into_iter()
            .map(Item::Domino)
            .collect(),
        (_, Some(_)) => usage("filter: rho/gamma apply to tspp, rho_tilde/gamma_tilde to cspp".into()),
    };
    Ok(items)
}

fn csv_field(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut impl Write) -> Result<ExitCode> {
    let opts = a.sizing.options();
    if a.count && a.class == Class::Tspp && a.filter.is_none() {
        writeln!(out, "{}", count_tspp(a.n, a.m, &opts)?)?;
        return Ok(ExitCode::SUCCESS);
    }
    let items = collect(a.class, a.n, a.m, a.filter, &opts)?;
    if a.count {
        writeln!(out, "{}", items.len())?;
        return Ok(ExitCode::SUCCESS);
    }
    if a.format == Format::Csv {
        writeln!(out, "index,object")?;
    }
    for (i, item) in items.iter().enumerate() {
        match a.format {
            Format::Json => writeln!(out, "{}", item.to_json())?,
            Format::Ascii => writeln!(out, "#{}\n{}", i + 1, item.to_ascii())?,
            Format::Csv => writeln!(out, "{},{}", i + 1, csv_field(&item.to_json()))?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn apply(map: MapSpec, item: &Item) -> Result<Item> {
    let wrong = || anyhow::anyhow!("map {map:?} does not take a {} object", item.kind());
    Ok(match (map, item) {
        (MapSpec::GammaBij, Item::Cspp(c)) => Item::Tspp(c.to_tspp()?),
        (MapSpec::GammaBij, Item::Tspp(b)) => Item::Cspp(Cspp::from_tspp(b)?),
        (MapSpec::Tbk(r), Item::Cspp(c)) => Item::Cspp(c.tbk(r)?),
        (MapSpec::Pi(r), Item::Tspp(b)) => Item::Tspp(b.pi(r)?),
        (MapSpec::Rho, Item::Tspp(b)) => Item::Tspp(b.rho()?),
        (MapSpec::Rho, Item::Cspp(c)) => Item::Cspp(c.rho_tilde()?),
        (MapSpec::Gamma, Item::Tspp(b)) => Item::Tspp(b.gamma()?),
        (MapSpec::Gamma, Item::Cspp(c)) => Item::Cspp(c.gamma_tilde()?),
        (MapSpec::Theta, Item::Cspp(c)) => Item::Domino(theta(c)?),
        (MapSpec::Theta, Item::Domino(d)) => Item::Cspp(theta_inverse(d)?),
        (MapSpec::Delta, Item::Cspp(c)) => Item::Domino(delta(c)?),
        (MapSpec::Delta, Item::Domino(d)) => Item::Cspp(delta_inverse(d)?),
        (MapSpec::Phi, Item::Domino(d)) => Item::Paired(phi(d)?),
        (MapSpec::Phi, Item::Paired(p)) => Item::Domino(phi_inverse(p)?),
        _ => return Err(wrong()),
    })
}

/// The inverse of every map is the same map read in the other direction
/// (or the map itself, for the involutions).
fn invert(map: MapSpec, image: &Item) -> Result<Item> {
    apply(map, image)
}

fn cmd_map(a: &MapArgs, input: &str, out: &mut impl Write) -> Result<ExitCode> {
    let stream = serde_json::Deserializer::from_str(input).into_iter::<Value>();
    for (idx, v) in stream.enumerate() {
        let v = v.with_context(|| format!("input object {} is not valid JSON", idx + 1))?;
        let item = Item::from_json(v).with_context(|| format!("input object {}", idx + 1))?;
        let image = apply(a.map, &item)?;
        let shown = if a.roundtrip {
            let back = invert(a.map, &image)?;
            if back != item {
                bail!(
                    "round trip through {:?} changed the object:\n{}\nbecame\n{}",
                    a.map,
                    item.to_ascii(),
                    back.to_ascii()
                );
            }
            back
        } else {
            image
        };
        match a.format {
            Format::Ascii => writeln!(out, "{}", shown.to_ascii())?,
            _ => writeln!(out, "{}", shown.to_json())?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_poly(p: &TPoly, format: Format, out: &mut impl Write) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(p)?)?,
        Format::Ascii => writeln!(out, "{p}")?,
        Format::Csv => {
            writeln!(out, "exponent,coefficient")?;
            for (e, c) in p.coeffs().iter().enumerate() {
                writeln!(out, "{e},{c}")?;
            }
        }
    }
    Ok(())
}

fn cmd_genpoly(a: &GenpolyArgs, out: &mut impl Write) -> Result<ExitCode> {
    let opts = a.sizing.options();
    let items = collect(a.class, a.n, a.m, a.filter, &opts)?;
    let stats = items.iter().map(|i| i.stat(a.stat, a.k)).collect::<Result<Vec<_>>>()?;
    print_poly(&TPoly::distribution(stats), a.format, out)?;
    Ok(ExitCode::SUCCESS)
}

fn det_args<const K: usize>(a: &DetArgs, names: &str) -> [i64; K] {
    match <[i64; K]>::try_from(a.args.as_slice()) {
        Ok(v) => v,
        Err(_) => usage(format!("expected arguments: {names}")),
    }
}

fn nonneg(v: i64, name: &str) -> usize {
    usize::try_from(v).unwrap_or_else(|_| usage(format!("{name} must be nonnegative")))
}

fn cmd_det(a: &DetArgs, out: &mut impl Write) -> Result<ExitCode> {
    let matrix: PolyMatrix = match a.which {
        DetKind::RO | DetKind::RE | DetKind::CO | DetKind::CE => {
            let [r] = det_args::<1>(a, "r");
            let r = nonneg(r, "r");
            if r == 0 {
                usage("r must be at least 1".into());
            }
            match a.which {
                DetKind::RO => matrix_r_o(r),
                DetKind::RE => matrix_r_e(r),
                DetKind::CO => matrix_c_o(r),
                _ => matrix_c_e(r),
            }
        }
        DetKind::Rprime | DetKind::Cprime => {
            let [n, m] = det_args::<2>(a, "n m");
            let (n, m) = (nonneg(n, "n"), nonneg(m, "m"));
            if a.which == DetKind::Rprime {
                matrix_rprime(n, m)?
            } else {
                matrix_cprime(n, m)?
            }
        }
        DetKind::AndrewsBurge | DetKind::Mrr => {
            let (det, product) = if a.which == DetKind::AndrewsBurge {
                let [n, x, y] = det_args::<3>(a, "n x y");
                let n = nonneg(n, "n");
                (andrews_burge_det(n, x, y), andrews_burge_product(n, x, y))
            } else {
                let [n, x] = det_args::<2>(a, "n x");
                let n = nonneg(n, "n");
                (mrr_det(n, x), mrr_product(n, x))
            };
            match a.format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"det": det.to_string(), "product": product.to_string(), "equal": det == product})
                )?,
                Format::Csv => writeln!(out, "det,product\n{det},{product}")?,
                Format::Ascii => writeln!(out, "det = {det}\nproduct = {product}")?,
            }
            return Ok(ExitCode::SUCCESS);
        }
    };
    let matrix = if a.at_one { matrix.at_one() } else { matrix };
    let det = matrix.determinant()?;
    match a.format {
        Format::Json => writeln!(out, "{}", json!({"matrix": matrix, "det": det}))?,
        Format::Csv => print_poly(&det, Format::Csv, out)?,
        Format::Ascii => writeln!(out, "{matrix}det = {det}")?,
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report(rep: &VerificationReport, format: Format, out: &mut impl Write) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(rep)?)?,
        Format::Csv => {
            writeln!(out, "id,status,statement,witness")?;
            for c in &rep.checks {
                writeln!(
                    out,
                    "{},{},{},{}",
                    c.id,
                    c.status,
                    csv_field(&c.statement),
                    csv_field(&c.witness.to_string())
                )?;
            }
        }
        Format::Ascii => write!(out, "{}", rep.to_table())?,
    }
    Ok(())
}

fn verify_options(sizing: Sizing) -> VerifyOptions {
    let enumeration = sizing.options();
    VerifyOptions {
        limit: sizing.limit,
        enumeration: EnumOptions::with_limit(MAX_LIMIT).with_jobs(enumeration.jobs),
        inject_fault: false,
    }
}

fn cmd_verify(a: &VerifyArgs, out: &mut impl Write) -> Result<ExitCode> {
    let mut o = verify_options(a.sizing);
    o.inject_fault = a.inject_fault;
    let suite = match a.suite {
        SuiteArg::Bijections => Suite::Bijections,
        SuiteArg::Statistics => Suite::Statistics,
        SuiteArg::Determinants => Suite::Determinants,
        SuiteArg::TheoremResults => Suite::TheoremResults,
        SuiteArg::All => Suite::All,
    };
    let rep = run_suite(suite, &o)?;
    print_report(&rep, a.format, out)?;
    Ok(if rep.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_conjecture(a: &ConjectureArgs, out: &mut impl Write) -> Result<ExitCode> {
    let which = match a.which {
        ConjectureArg::Mrr4 => Conjecture::Mrr4,
        ConjectureArg::Mrr6 => Conjecture::Mrr6,
        ConjectureArg::Detforms => Conjecture::DetForms,
        ConjectureArg::GcsppCdpp => Conjecture::GcsppCdpp,
    };
    let rep = run_conjecture(which, &verify_options(a.sizing))?;
    print_report(&rep, a.format, out)?;
    if a.format == Format::Ascii {
        for c in &rep.checks {
            writeln!(out, "  {}: agree = {}", c.id, c.witness["agree"])?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn poly_or_dash(p: &Option<TPoly>) -> String {
    p.as_ref().map_or("-".into(), ToString::to_string)
}

fn cmd_refvalues(a: &RefvaluesArgs, out: &mut impl Write) -> Result<ExitCode> {
    if a.upto == 0 {
        usage("--upto must be at least 1".into());
    }
    let rows = RefValues::table(a.upto)?;
    match a.format {
        Format::Json => {
            for r in &rows {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,asm,asm_poly,hts,hts_poly,hts_tilde_poly,vs,vs_poly")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.n,
                    r.asm,
                    r.asm_poly,
                    r.hts,
                    r.hts_poly,
                    poly_or_dash(&r.hts_tilde_poly),
                    r.vs.as_ref().map_or("-".into(), ToString::to_string),
                    poly_or_dash(&r.vs_poly)
                )?;
            }
        }
        Format::Ascii => {
            for r in &rows {
                writeln!(out, "n = {}", r.n)?;
                writeln!(out, "  A_n        = {}", r.asm)?;
                writeln!(out, "  A_n(t)     = {}", r.asm_poly)?;
                writeln!(out, "  A^HTS_n    = {}", r.hts)?;
                writeln!(out, "  A^HTS_n(t) = {}", r.hts_poly)?;
                if let Some(p) = &r.hts_tilde_poly {
                    writeln!(out, "  A~^HTS_n(t) = {p}")?;
                }
                if let (Some(v), Some(p)) = (&r.vs, &r.vs_poly) {
                    writeln!(out, "  A^VS_n     = {v}")?;
                    writeln!(out, "  A^VS_n(t)  = {p}")?;
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match &cli.command {
        Command::Enumerate(a) => cmd_enumerate(a, &mut out)?,
        Command::Map(a) => {
            let mut input = String::new();
            io::stdin().read_to_string(&mut input).context("reading stdin")?;
            cmd_map(a, &input, &mut out)?
        }
        Command::Genpoly(a) => cmd_genpoly(a, &mut out)?,
        Command::Det(a) => cmd_det(a, &mut out)?,
        Command::Verify(a) => cmd_verify(a, &mut out)?,
        Command::Conjecture(a) => cmd_conjecture(a, &mut out)?,
        Command::Refvalues(a) => cmd_refvalues(a, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification-suite failure, 2 argument or JSON
//! syntax error, 3 schema violation (well-formed JSON of the wrong shape),
//! 4 violated mathematical precondition.
//!
//! Output is deterministic: identical input bytes (and environment) produce
//! identical output bytes. Rationals in JSON are `{"num", "den"}` pairs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Args, CommandFactory, Parser, Subcommand};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::invariants::{
    chi_y_of_spectrum, du_bois_vanishing, hodge_table, reduced_total_chi, rhm_signature_check,
    total_chi, InvariantError,
};
use crate::kernel::{KernelError, LaurentPoly, Rational};
use crate::projective::{chi_y_virtual_with_order, degree_mt, ProjectiveError};
use crate::schema::{
    class_from_wire, class_to_wire, laurent_from_wire, laurent_to_wire, projective_from_parts,
    MilnorClassInput, ProjectiveSingularities, RationalRepr, SchemaError, SingularityInput,
    SpectrumWire, StratificationWire, WireError,
};
use crate::spectrum::{brieskorn_pham, quasi_homogeneous, suspension, Spectrum, SpectrumError};
use crate::strata::{
    it_hat_classes, mit_class_isolated, mit_class_stratified, mit_class_stratified_ic,
    moebius_identity_holds, mt_class_isolated, mt_class_smooth_locus, mt_class_stratified,
    mt_class_stratified_ic, t_minus_it_class, StrataError, StratifiedClass,
};
use crate::verify;

const SERIES_ORDER_ENV: &str = "MILNOR_HODGE_SERIES_ORDER";

#[derive(Parser)]
#[command(
    name = "milnor-hodge",
    version,
    about = "Exact Hodge-theoretic invariants of complex hypersurface singularities",
    long_about = "Exact Hodge-theoretic invariants of complex hypersurface singularities:\n\
                  spectra, chi_y polynomials, Milnor fiber signatures, Du Bois tests,\n\
                  Milnor-Hirzebruch classes over stratifications, and global chi_y\n\
                  invariants of projective hypersurfaces. All arithmetic is exact."
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Evaluate y-polynomials at these rationals (e.g. -1,0,1/2)
    #[arg(
        long,
        global = true,
        value_delimiter = ',',
        allow_hyphen_values = true,
        value_name = "Y,.."
    )]
    y_eval: Option<Vec<String>>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hodge spectrum of an isolated hypersurface singularity
    Spectrum {
        #[command(flatten)]
        source: SingularitySource,
        /// Apply this many suspensions (each adds a squared variable)
        #[arg(long, default_value_t = 0, value_name = "K")]
        suspend: u32,
    },
    /// chi_y of the Milnor fiber: reduced middle, reduced total, and total
    #[command(name = "chi-y")]
    ChiY {
        #[command(flatten)]
        source: SingularitySource,
    },
    /// Hodge table (p, q, weight, unipotent, dim) of the middle cohomology
    #[command(name = "hodge-table")]
    HodgeTable {
        #[command(flatten)]
        source: SingularitySource,
    },
    /// Signature of the Milnor fiber intersection form
    Signature {
        #[command(flatten)]
        source: SingularitySource,
    },
    /// Whether the singularity is Du Bois (no spectral exponent below 1)
    #[command(name = "du-bois")]
    DuBois {
        #[command(flatten)]
        source: SingularitySource,
    },
    /// Milnor-Hirzebruch class from a JSON task description
    #[command(name = "milnor-class")]
    MilnorClass {
        /// JSON file or inline JSON: {"isolated": ...}, {"smooth_locus": ...},
        /// or {"mit_isolated": ...}
        #[arg(long, value_name = "FILE|JSON")]
        input: String,
    },
    /// All stratified class computations plus a consistency report
    Stratified {
        /// JSON file or inline JSON with the stratification
        #[arg(long, value_name = "FILE|JSON")]
        input: String,
    },
    /// chi_y invariants of a projective hypersurface of given degree
    Projective {
        /// Degree of the hypersurface in P^{n+1}
        #[arg(long)]
        degree: u32,
        /// Dimension n of the hypersurface
        #[arg(long)]
        dim: u32,
        /// JSON file or inline JSON listing isolated singular points
        #[arg(long, value_name = "FILE|JSON")]
        sing: Option<String>,
    },
    /// Run the bundled verification suites
    Verify,
    /// Print the full manual, generated from the parser definition
    Manual,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SingularitySource {
    /// Brieskorn-Pham exponents w_j >= 2, comma separated
    #[arg(long, value_delimiter = ',', value_name = "W,..")]
    brieskorn_pham: Option<Vec<u32>>,

    /// Quasi-homogeneous weights in (0, 1/2], comma separated rationals
    #[arg(long, value_delimiter = ',', value_name = "Q,..")]
    quasi_homogeneous: Option<Vec<String>>,

    /// JSON file (or inline JSON) with a singularity object
    #[arg(long, value_name = "FILE|JSON")]
    input: Option<String>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn parse(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn schema(message: impl Into<String>) -> Self {
        Self {
            code: 3,
            message: message.into(),
        }
    }

    fn math(message: impl Into<String>) -> Self {
        Self {
            code: 4,
            message: message.into(),
        }
    }
}

impl From<SpectrumError> for Failure {
    fn from(e: SpectrumError) -> Self {
        Failure::math(e.to_string())
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        Failure::math(e.to_string())
    }
}

impl From<StrataError> for Failure {
    fn from(e: StrataError) -> Self {
        Failure::math(e.to_string())
    }
}

impl From<ProjectiveError> for Failure {
    fn from(e: ProjectiveError) -> Self {
        Failure::math(e.to_string())
    }
}

impl From<KernelError> for Failure {
    fn from(e: KernelError) -> Self {
        Failure::math(e.to_string())
    }
}

impl From<SchemaError> for Failure {
    fn from(e: SchemaError) -> Self {
        Failure::schema(e.to_string())
    }
}

impl From<WireError> for Failure {
    fn from(e: WireError) -> Self {
        if e.is_schema() {
            Failure::schema(e.to_string())
        } else {
            Failure::math(e.to_string())
        }
    }
}

fn from_json_error(e: serde_json::Error) -> Failure {
    match e.classify() {
        serde_json::error::Category::Data => Failure::schema(e.to_string()),
        _ => Failure::parse(e.to_string()),
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(&cli) {
        Ok((output, code)) => {
            // A consumer that stops reading (head, a closed pager) must not
            // turn success into a panic.
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{output}");
            code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(String, i32), Failure> {
    let ys = parse_y_eval(cli.y_eval.as_deref())?;
    let out = match &cli.command {
        Command::Spectrum { source, suspend } => {
            let mut sp = source.resolve()?;
            for _ in 0..*suspend {
                sp = suspension(&sp);
            }
            cmd_spectrum(&sp, cli.json)?
        }
        Command::ChiY { source } => cmd_chi_y(&source.resolve()?, cli.json, &ys)?,
        Command::HodgeTable { source } => cmd_hodge_table(&source.resolve()?, cli.json)?,
        Command::Signature { source } => cmd_signature(&source.resolve()?, cli.json)?,
        Command::DuBois { source } => cmd_du_bois(&source.resolve()?, cli.json),
        Command::MilnorClass { input } => cmd_milnor_class(input, cli.json, &ys)?,
        Command::Stratified { input } => cmd_stratified(input, cli.json, &ys)?,
        Command::Projective { degree, dim, sing } => {
            cmd_projective(*degree, *dim, sing.as_deref(), cli.json, &ys)?
        }
        Command::Verify => return cmd_verify(cli.json),
        Command::Manual => cmd_manual(),
    };
    Ok((out, 0))
}

impl SingularitySource {
    fn resolve(&self) -> Result<Spectrum, Failure> {
        if let Some(w) = &self.brieskorn_pham {
            return Ok(brieskorn_pham(w)?);
        }
        if let Some(weights) = &self.quasi_homogeneous {
            let weights: Vec<Rational> = weights
                .iter()
                .map(|s| parse_rational(s))
                .collect::<Result<_, _>>()?;
            return Ok(quasi_homogeneous(&weights)?);
        }
        let text = read_payload(self.input.as_deref().expect("group is required"))?;
        let wire: SingularityInput = serde_json::from_str(&text).map_err(from_json_error)?;
        Ok(wire.to_core()?)
    }
}

fn read_payload(input: &str) -> Result<String, Failure> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(input.to_string());
    }
    std::fs::read_to_string(input)
        .map_err(|e| Failure::parse(format!("cannot read {input}: {e}")))
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: num_bigint::BigInt = num
        .trim()
        .parse()
        .map_err(|_| Failure::parse(format!("invalid rational {s:?}")))?;
    let den: num_bigint::BigInt = den
        .trim()
        .parse()
        .map_err(|_| Failure::parse(format!("invalid rational {s:?}")))?;
    if den.is_zero() {
        return Err(Failure::parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

fn parse_y_eval(values: Option<&[String]>) -> Result<Vec<Rational>, Failure> {
    values
        .unwrap_or(&[])
        .iter()
        .map(|s| parse_rational(s))
        .collect()
}

fn rational_json(r: &Rational) -> Value {
    serde_json::to_value(RationalRepr::from_rational(r)).expect("rational serializes")
}

fn poly_json(p: &LaurentPoly, ys: &[Rational]) -> Result<Value, Failure> {
    let mut obj = serde_json::Map::new();
    obj.insert(
        "polynomial".into(),
        serde_json::to_value(laurent_to_wire(p)).expect("wire serializes"),
    );
    obj.insert("string".into(), Value::String(p.to_string()));
    if !ys.is_empty() {
        let mut at = Vec::new();
        for y in ys {
            at.push(json!({
                "y": rational_json(y),
                "value": rational_json(&p.eval(y)?),
            }));
        }
        obj.insert("at".into(), Value::Array(at));
    }
    Ok(Value::Object(obj))
}

fn poly_text(out: &mut String, label: &str, p: &LaurentPoly, ys: &[Rational]) -> Result<(), Failure> {
    writeln!(out, "{label}: {p}").unwrap();
    for y in ys {
        writeln!(out, "  at y = {y}: {}", p.eval(y)?).unwrap();
    }
    Ok(())
}

fn class_json(c: &StratifiedClass, ys: &[Rational]) -> Result<Value, Failure> {
    let mut obj = serde_json::Map::new();
    obj.insert(
        "class".into(),
        serde_json::to_value(class_to_wire(c)).expect("wire serializes"),
    );
    obj.insert("string".into(), Value::String(c.to_string()));
    if !ys.is_empty() {
        let mut at = Vec::new();
        for y in ys {
            let values: BTreeMap<String, Value> = c
                .eval(y)?
                .into_iter()
                .map(|(sym, v)| (sym, rational_json(&v)))
                .collect();
            at.push(json!({"y": rational_json(y), "values": values}));
        }
        obj.insert("at".into(), Value::Array(at));
    }
    Ok(Value::Object(obj))
}

fn class_text(
    out: &mut String,
    label: &str,
    c: &StratifiedClass,
    ys: &[Rational],
) -> Result<(), Failure> {
    writeln!(out, "{label}: {c}").unwrap();
    for y in ys {
        writeln!(out, "  at y = {y}:").unwrap();
        for (sym, v) in c.eval(y)? {
            writeln!(out, "    [{sym}]: {v}").unwrap();
        }
    }
    Ok(())
}

fn render(value: Value) -> String {
    serde_json::to_string_pretty(&value).expect("output serializes")
}

fn cmd_spectrum(sp: &Spectrum, as_json: bool) -> Result<String, Failure> {
    if as_json {
        Ok(render(json!({
            "spectrum": serde_json::to_value(SpectrumWire::from_core(sp)).expect("wire serializes"),
            "string": sp.poly().to_string(),
            "milnor_number": sp.milnor_number(),
            "num_vars": sp.num_vars(),
            "symmetric": sp.is_symmetric(),
        })))
    } else {
        Ok(sp.poly().to_string())
    }
}

fn cmd_chi_y(sp: &Spectrum, as_json: bool, ys: &[Rational]) -> Result<String, Failure> {
    let middle = chi_y_of_spectrum(sp);
    let reduced_total = reduced_total_chi(sp)?;
    let total = total_chi(sp)?;
    if as_json {
        Ok(render(json!({
            "reduced_middle": poly_json(&middle.value, ys)?,
            "reduced_total": poly_json(&reduced_total.value, ys)?,
            "total": poly_json(&total.value, ys)?,
        })))
    } else {
        let mut out = String::new();
        poly_text(&mut out, "reduced_middle", &middle.value, ys)?;
        poly_text(&mut out, "reduced_total", &reduced_total.value, ys)?;
        poly_text(&mut out, "total", &total.value, ys)?;
        Ok(out.trim_end().to_string())
    }
}

fn cmd_hodge_table(sp: &Spectrum, as_json: bool) -> Result<String, Failure> {
    let table = hodge_table(sp)?;
    if as_json {
        let entries: Vec<Value> = table
            .entries()
            .iter()
            .map(|e| {
                json!({
                    "p": e.p,
                    "q": e.q,
                    "weight": e.weight,
                    "unipotent": e.unipotent,
                    "dim": e.dim,
                })
            })
            .collect();
        Ok(render(json!({
            "n": table.n(),
            "total_dim": table.total_dim(),
            "entries": entries,
        })))
    } else {
        let mut out = String::new();
        writeln!(out, "n: {}", table.n()).unwrap();
        for e in table.entries() {
            writeln!(
                out,
                "p={} q={} weight={} unipotent={} dim={}",
                e.p, e.q, e.weight, e.unipotent, e.dim
            )
            .unwrap();
        }
        Ok(out.trim_end().to_string())
    }
}

fn cmd_signature(sp: &Spectrum, as_json: bool) -> Result<String, Failure> {
    let check = rhm_signature_check(sp)?;
    if as_json {
        Ok(render(json!({
            "signature": check.signature,
            "chi_1": check.chi_one,
            "rhm_agreement": check.agrees,
        })))
    } else {
        Ok(check.signature.to_string())
    }
}

fn cmd_du_bois(sp: &Spectrum, as_json: bool) -> String {
    let verdict = du_bois_vanishing(sp);
    if as_json {
        render(json!({ "du_bois": verdict }))
    } else {
        verdict.to_string()
    }
}

fn cmd_milnor_class(input: &str, as_json: bool, ys: &[Rational]) -> Result<String, Failure> {
    let text = read_payload(input)?;
    let task: MilnorClassInput = serde_json::from_str(&text).map_err(from_json_error)?;
    let class = match &task {
        MilnorClassInput::Isolated { isolated } => {
            let points: Vec<(String, Spectrum)> = isolated
                .iter()
                .map(|p| Ok::<_, Failure>((p.name.clone(), p.singularity.to_core()?)))
                .collect::<Result<_, _>>()?;
            mt_class_isolated(&points)?
        }
        MilnorClassInput::SmoothLocus { smooth_locus } => {
            let transversal = smooth_locus.transversal.to_core()?;
            let t_sigma = class_from_wire(&smooth_locus.t_sigma)?;
            mt_class_smooth_locus(
                &transversal,
                smooth_locus.hypersurface_dim,
                smooth_locus.locus_dim,
                &t_sigma,
            )?
        }
        MilnorClassInput::MitIsolated { mit_isolated } => {
            let points: Vec<(String, Spectrum, LaurentPoly)> = mit_isolated
                .iter()
                .map(|p| {
                    Ok::<_, Failure>((
                        p.name.clone(),
                        p.singularity.to_core()?,
                        laurent_from_wire(&p.ih_cone_link_chi)?,
                    ))
                })
                .collect::<Result<_, _>>()?;
            mit_class_isolated(&points)?
        }
    };
    if as_json {
        Ok(render(class_json(&class, ys)?))
    } else {
        let mut out = String::new();
        class_text(&mut out, "class", &class, ys)?;
        Ok(out.trim_end().to_string())
    }
}

enum Section {
    Class(StratifiedClass),
    Unavailable(String),
}

impl Section {
    fn from(result: Result<StratifiedClass, StrataError>) -> Self {
        match result {
            Ok(c) => Section::Class(c),
            Err(e) => Section::Unavailable(e.to_string()),
        }
    }

    fn class(&self) -> Option<&StratifiedClass> {
        match self {
            Section::Class(c) => Some(c),
            Section::Unavailable(_) => None,
        }
    }
}

fn cmd_stratified(input: &str, as_json: bool, ys: &[Rational]) -> Result<String, Failure> {
    let text = read_payload(input)?;
    let wire: StratificationWire = serde_json::from_str(&text).map_err(from_json_error)?;
    let s = wire.to_core()?;
    if !s.monodromy_trivial() {
        return Err(StrataError::NontrivialMonodromy.into());
    }

    let sections = [
        ("mt_direct", Section::from(mt_class_stratified(&s))),
        ("mt_ic", Section::from(mt_class_stratified_ic(&s))),
        ("t_minus_it", Section::from(t_minus_it_class(&s))),
        ("mit_direct", Section::from(mit_class_stratified(&s))),
        ("mit_ic", Section::from(mit_class_stratified_ic(&s))),
    ];
    let hats = it_hat_classes(&s);
    let moebius = moebius_identity_holds(&s).ok();

    let equal_or_none = |a: &Section, b: &Section| -> Option<bool> {
        Some(a.class()? == b.class()?)
    };
    let mt_agrees = equal_or_none(&sections[0].1, &sections[1].1);
    let mit_agrees = equal_or_none(&sections[3].1, &sections[4].1);

    if as_json {
        let mut obj = serde_json::Map::new();
        for (label, section) in &sections {
            let value = match section {
                Section::Class(c) => class_json(c, ys)?,
                Section::Unavailable(reason) => json!({ "unavailable": reason }),
            };
            obj.insert((*label).into(), value);
        }
        let hats_value = match &hats {
            Ok(map) => {
                let mut h = serde_json::Map::new();
                for (name, class) in map {
                    h.insert(name.clone(), class_json(class, ys)?);
                }
                Value::Object(h)
            }
            Err(e) => json!({ "unavailable": e.to_string() }),
        };
        obj.insert("it_hat".into(), hats_value);
        obj.insert(
            "consistency".into(),
            json!({
                "mt_direct_equals_ic": mt_agrees,
                "mit_direct_equals_ic": mit_agrees,
                "moebius_identity": moebius,
            }),
        );
        Ok(render(Value::Object(obj)))
    } else {
        let mut out = String::new();
        for (label, section) in &sections {
            match section {
                Section::Class(c) => class_text(&mut out, label, c, ys)?,
                Section::Unavailable(reason) => {
                    writeln!(out, "{label}: unavailable ({reason})").unwrap()
                }
            }
        }
        match &hats {
            Ok(map) => {
                for (name, class) in map {
                    class_text(&mut out, &format!("it_hat[{name}]"), class, ys)?;
                }
            }
            Err(e) => writeln!(out, "it_hat: unavailable ({e})").unwrap(),
        }
        let fmt_opt = |v: Option<bool>| match v {
            Some(b) => b.to_string(),
            None => "unavailable".to_string(),
        };
        writeln!(out, "consistency mt_direct_equals_ic: {}", fmt_opt(mt_agrees)).unwrap();
        writeln!(out, "consistency mit_direct_equals_ic: {}", fmt_opt(mit_agrees)).unwrap();
        writeln!(out, "consistency moebius_identity: {}", fmt_opt(moebius)).unwrap();
        Ok(out.trim_end().to_string())
    }
}

fn series_order(n: u32) -> Result<usize, Failure> {
    let minimum = n as usize + 2;
    match std::env::var(SERIES_ORDER_ENV) {
        Ok(text) => {
            let requested: usize = text.parse().map_err(|_| {
                Failure::parse(format!("{SERIES_ORDER_ENV} must be a positive integer, got {text:?}"))
            })?;
            Ok(requested.max(minimum))
        }
        Err(_) => Ok(minimum),
    }
}

fn cmd_projective(
    degree: u32,
    dim: u32,
    sing: Option<&str>,
    as_json: bool,
    ys: &[Rational],
) -> Result<String, Failure> {
    let singularities: ProjectiveSingularities = match sing {
        Some(input) => {
            let text = read_payload(input)?;
            serde_json::from_str(&text).map_err(from_json_error)?
        }
        None => Vec::new(),
    };
    let h = projective_from_parts(degree, dim, &singularities)?;
    let order = series_order(dim)?;
    let virtual_chi = chi_y_virtual_with_order(degree, dim, order);
    let defect = degree_mt(&h);
    let singular_chi = &virtual_chi - &defect;

    let default_ys = [Rational::from_integer((-1).into()), Rational::zero(), Rational::from_integer(1.into())];
    let ys: &[Rational] = if ys.is_empty() { &default_ys } else { ys };

    if as_json {
        Ok(render(json!({
            "degree": degree,
            "dim": dim,
            "chi_y_virtual": poly_json(&virtual_chi, ys)?,
            "chi_y_singular": poly_json(&singular_chi, ys)?,
            "degree_mt": poly_json(&defect, ys)?,
        })))
    } else {
        let mut out = String::new();
        poly_text(&mut out, "chi_y_virtual", &virtual_chi, ys)?;
        poly_text(&mut out, "chi_y_singular", &singular_chi, ys)?;
        poly_text(&mut out, "degree_mt", &defect, ys)?;
        Ok(out.trim_end().to_string())
    }
}

fn cmd_verify(as_json: bool) -> Result<(String, i32), Failure> {
    let suites = verify::run_all();
    let all_ok = suites.iter().all(|s| s.ok());
    let code = if all_ok { 0 } else { 1 };
    if as_json {
        let rows: Vec<Value> = suites
            .iter()
            .enumerate()
            .map(|(i, s)| {
                json!({
                    "criterion": i + 1,
                    "name": s.name,
                    "passed": s.passed,
                    "failed": s.failed,
                    "notes": s.notes,
                })
            })
            .collect();
        Ok((render(json!({ "ok": all_ok, "suites": rows })), code))
    } else {
        let mut out = String::new();
        for (i, s) in suites.iter().enumerate() {
            let total = s.passed + s.failed;
            if s.ok() {
                writeln!(out, "criterion {} {}: pass ({} checks)", i + 1, s.name, total).unwrap();
            } else {
                writeln!(
                    out,
                    "criterion {} {}: FAIL ({} of {} checks failed)",
                    i + 1,
                    s.name,
                    s.failed,
                    total
                )
                .unwrap();
            }
            for note in &s.notes {
                writeln!(out, "  note: {note}").unwrap();
            }
        }
        if all_ok {
            writeln!(out, "result: all {} suites passed", suites.len()).unwrap();
        } else {
            writeln!(out, "result: verification failed").unwrap();
        }
        Ok((out.trim_end().to_string(), code))
    }
}

fn cmd_manual() -> String {
    let mut cmd = Cli::command();
    cmd.build();
    let mut out = String::new();
    writeln!(out, "{}", cmd.render_long_help()).unwrap();
    let subcommands: Vec<clap::Command> = cmd.get_subcommands().cloned().collect();
    for mut sub in subcommands {
        writeln!(out, "{}", "=".repeat(64)).unwrap();
        writeln!(out, "{}", sub.render_long_help()).unwrap();
    }
    out.trim_end().to_string()
}

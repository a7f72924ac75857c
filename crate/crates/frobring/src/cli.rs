//! Command-line interface: ring inspection, poset and transform matrices,
//! enumerators, identity verification and the randomized suites.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::code::{span, LinearCode, DEFAULT_CAP};
use crate::enumerator::{sse, swe, tuple_sse, tuple_swe};
use crate::error::{Error, Result};
use crate::fuzz::{run_identity_suite, run_lee_suite, SuiteConfig};
use crate::matrix::IntMatrix;
use crate::poset::hasse_covers;
use crate::ring::{build_ring, FiniteRing, RingSpec};
use crate::transform::{aj_order, pir_decomposition, PirDecomposition};
use crate::verify::{verify_identity, Kind};
use crate::RingData;

#[derive(Parser)]
#[command(
    name = "frobring",
    version,
    about = "Exact duality transforms for codes over finite commutative rings",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a ring: size, units, classes, ideals, Frobenius and PIR status
    Ring(RingArgs),
    /// Print the Hasse covers, the zeta matrix A and its inverse
    Poset(PosetArgs),
    /// Print D, Q, S (and S^[lambda]) plus the PIR decomposition of Q
    Matrices(MatricesArgs),
    /// Print an enumerator of the code spanned by a generator matrix
    Enumerate(EnumerateArgs),
    /// Verify a duality identity for a code against its brute-force dual
    Verify(VerifyArgs),
    /// Run the seeded randomized identity suites
    Fuzz(FuzzArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct CommonArgs {
    /// Ring specification file (JSON)
    #[arg(long = "ring", value_name = "FILE")]
    ring: PathBuf,
    /// Class order as comma-separated element labels
    #[arg(long, value_name = "LABELS")]
    order: Option<String>,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Enumeration cap on combinations
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
}

#[derive(Args)]
struct RingArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct PosetArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct MatricesArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Also print the tuple transform S^[lambda]
    #[arg(long, value_name = "K")]
    lambda: Option<u32>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Generator matrix file, one row of element labels per line
    #[arg(long, value_name = "FILE")]
    gens: PathBuf,
    /// Enumerator kind
    #[arg(long, default_value = "swe")]
    kind: String,
    /// Tuple level for tuple-swe / tuple-sse
    #[arg(long, default_value_t = 1)]
    lambda: u32,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Generator matrix file, one row of element labels per line
    #[arg(long, value_name = "FILE")]
    gens: PathBuf,
    /// Identity kind
    #[arg(long, default_value = "swe")]
    kind: String,
    /// Tuple level for tuple kinds
    #[arg(long, default_value_t = 1)]
    lambda: u32,
}

#[derive(Args)]
struct FuzzArgs {
    /// Seed for the random generator matrices
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random codes per ring for the identity battery
    #[arg(long, default_value_t = 10)]
    codes: u64,
    /// Random codes for the Lee battery
    #[arg(long, default_value_t = 5)]
    lee_codes: u64,
    /// Enumeration cap on combinations
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

/// Run the CLI against an argument vector, writing the report to `out`.
/// Returns the process exit code: 0 success, 1 parse/spec errors, 2 identity
/// mismatch, 3 precondition failure.
pub fn run_to(args: &[String], out: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            let _ = write!(out, "{rendered}");
            // Help and version requests are not errors.
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    let outcome = match cli.command {
        Command::Ring(a) => cmd_ring(&a, out),
        Command::Poset(a) => cmd_poset(&a, out),
        Command::Matrices(a) => cmd_matrices(&a, out),
        Command::Enumerate(a) => cmd_enumerate(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Fuzz(a) => cmd_fuzz(&a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            match e {
                Error::Size(_) | Error::NonPrincipal(_) => 3,
                _ => 1,
            }
        }
    }
}

/// Entry point used by the binary: reports stream to stdout.
pub fn run(args: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run_to(args, &mut lock)
}

fn load_ring(path: &Path) -> Result<FiniteRing> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Spec(format!("cannot read ring file {}: {e}", path.display())))?;
    let spec: RingSpec = serde_json::from_str(&text)
        .map_err(|e| Error::Spec(format!("ring file {}: {e}", path.display())))?;
    build_ring(&spec)
}

fn load_data(common: &CommonArgs) -> Result<RingData> {
    let ring = load_ring(&common.ring)?;
    let order = match &common.order {
        Some(text) => Some(
            RingData::parse_order(&ring, text).map_err(|e| Error::Spec(format!("--order: {e}")))?,
        ),
        None => None,
    };
    RingData::with_order(ring, order.as_deref())
}

fn load_gens(path: &Path, ring: &FiniteRing) -> Result<Vec<Vec<usize>>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Spec(format!("cannot read gens file {}: {e}", path.display())))?;
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|tok| {
                ring.parse_element(tok)
                    .map_err(|e| Error::Spec(format!("gens file line {}: {e}", lineno + 1)))
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Spec(format!(
            "gens file {} holds no generator rows",
            path.display()
        )));
    }
    Ok(rows)
}

fn load_code(common: &CommonArgs, gens_path: &Path, data: &RingData) -> Result<LinearCode> {
    let gens = load_gens(gens_path, &data.ring)?;
    span(std::sync::Arc::clone(&data.ring), gens, common.cap)
}

fn matrix_json(m: &IntMatrix) -> Result<serde_json::Value> {
    Ok(json!(m.to_i64_rows()?))
}

fn labels_of(data: &RingData, elems: &[usize]) -> Vec<String> {
    elems
        .iter()
        .map(|&e| data.ring.label(e).to_string())
        .collect()
}

fn set_labels(data: &RingData, set: &crate::ring::ElemSet) -> Vec<String> {
    set.iter().map(|e| data.ring.label(e).to_string()).collect()
}

fn cmd_ring(a: &RingArgs, out: &mut dyn Write) -> Result<i32> {
    let data = load_data(&a.common)?;
    let ring = &data.ring;
    let classes = &data.classes;
    if a.common.format == Format::Json {
        let witness_json: Vec<_> = data
            .frobenius
            .witnesses
            .iter()
            .map(|w| {
                json!({
                    "ideal": set_labels(&data, &w.ideal),
                    "annihilator": set_labels(&data, &w.annihilator),
                    "product": w.product,
                })
            })
            .collect();
        let doc = json!({
            "version": 1,
            "command": "ring",
            "digest": ring.digest(),
            "size": ring.size(),
            "zero": ring.label(ring.zero()),
            "one": ring.label(ring.one()),
            "units": set_labels(&data, &ring.units()),
            "classes": (0..classes.count()).map(|i| json!({
                "index": i,
                "rep": ring.label(classes.reps[i]),
                "orbit": set_labels(&data, &ring.unit_orbit(classes.reps[i])),
                "ideal_size": classes.ideal_size[i],
                "ideal": set_labels(&data, &classes.ideal[i]),
            })).collect::<Vec<_>>(),
            "ideal_count": data.poset.all_ideals.len(),
            "is_pir": data.poset.is_pir,
            "is_frobenius": data.frobenius.is_frobenius,
            "frobenius_witnesses": witness_json,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).ok();
        return Ok(0);
    }
    writeln!(
        out,
        "ring {} (digest {})",
        a.common.ring.display(),
        ring.digest()
    )
    .ok();
    writeln!(out, "size: {}", ring.size()).ok();
    writeln!(
        out,
        "zero: {}   one: {}",
        ring.label(ring.zero()),
        ring.label(ring.one())
    )
    .ok();
    writeln!(
        out,
        "units: {}",
        set_labels(&data, &ring.units()).join(", ")
    )
    .ok();
    writeln!(out, "classes ({}):", classes.count()).ok();
    for i in 0..classes.count() {
        writeln!(
            out,
            "  {:2}  rep {:8}  |aR| = {:3}  ideal {{{}}}",
            i,
            ring.label(classes.reps[i]),
            classes.ideal_size[i],
            set_labels(&data, &classes.ideal[i]).join(", ")
        )
        .ok();
    }
    writeln!(
        out,
        "ideals: {} total; principal ideal ring: {}",
        data.poset.all_ideals.len(),
        if data.poset.is_pir { "yes" } else { "no" }
    )
    .ok();
    if data.frobenius.is_frobenius {
        writeln!(out, "frobenius: yes").ok();
    } else {
        writeln!(out, "frobenius: NO").ok();
        for w in &data.frobenius.witnesses {
            writeln!(
                out,
                "  witness ideal {{{}}} with annihilator {{{}}}: {} * {} = {} != {}",
                set_labels(&data, &w.ideal).join(", "),
                set_labels(&data, &w.annihilator).join(", "),
                w.ideal.len(),
                w.annihilator.len(),
                w.product,
                ring.size()
            )
            .ok();
        }
    }
    Ok(0)
}

fn cmd_poset(a: &PosetArgs, out: &mut dyn Write) -> Result<i32> {
    let data = load_data(&a.common)?;
    let covers = hasse_covers(&data.poset);
    if a.common.format == Format::Json {
        let doc = json!({
            "version": 1,
            "command": "poset",
            "digest": data.ring.digest(),
            "order": labels_of(&data, &data.classes.reps),
            "hasse_covers": covers,
            "a": matrix_json(&data.matrices.a)?,
            "a_inv": matrix_json(&data.matrices.a_inv)?,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).ok();
        return Ok(0);
    }
    writeln!(
        out,
        "order: {}",
        labels_of(&data, &data.classes.reps).join(", ")
    )
    .ok();
    let cover_text: Vec<String> = covers.iter().map(|(i, j)| format!("{i}<{j}")).collect();
    writeln!(out, "hasse covers: {}", cover_text.join(", ")).ok();
    writeln!(out, "A =\n{}", data.matrices.a.render_text()).ok();
    writeln!(out, "A^-1 =\n{}", data.matrices.a_inv.render_text()).ok();
    Ok(0)
}

fn cmd_matrices(a: &MatricesArgs, out: &mut dyn Write) -> Result<i32> {
    let data = load_data(&a.common)?;
    let m = &data.matrices;
    let decomposition = pir_decomposition(m, &data.poset)?;
    let s_lambda = a.lambda.map(|l| (l, m.s_lambda(l)));
    if a.common.format == Format::Json {
        let pir_json = match &decomposition {
            PirDecomposition::NotPir => json!({"is_pir": false}),
            PirDecomposition::Pir { phi, anti_diagonal } => json!({
                "is_pir": true,
                "phi": phi,
                "anti_diagonal": anti_diagonal,
            }),
        };
        let mut doc = json!({
            "version": 1,
            "command": "matrices",
            "digest": data.ring.digest(),
            "order": labels_of(&data, &data.classes.reps),
            "a": matrix_json(&m.a)?,
            "a_inv": matrix_json(&m.a_inv)?,
            "d": matrix_json(&m.d)?,
            "q": matrix_json(&m.q)?,
            "s": matrix_json(&m.s)?,
            "pir": pir_json,
        });
        if let Some((l, sl)) = &s_lambda {
            doc["lambda"] = json!(l);
            doc["s_lambda"] = matrix_json(sl)?;
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).ok();
        return Ok(0);
    }
    writeln!(
        out,
        "order: {}",
        labels_of(&data, &data.classes.reps).join(", ")
    )
    .ok();
    writeln!(out, "D =\n{}", m.d.render_text()).ok();
    writeln!(out, "Q =\n{}", m.q.render_text()).ok();
    writeln!(out, "S = Q D A^-1 =\n{}", m.s.render_text()).ok();
    if let Some((l, sl)) = &s_lambda {
        writeln!(out, "S^[{l}] = Q D^{l} A^-1 =\n{}", sl.render_text()).ok();
    }
    match decomposition {
        PirDecomposition::NotPir => {
            writeln!(out, "pir: no (Q need not factor as A times a permutation)").ok();
        }
        PirDecomposition::Pir { phi, anti_diagonal } => {
            let phi_text: Vec<String> = phi.iter().map(|p| p.to_string()).collect();
            writeln!(
                out,
                "pir: yes; Q = A P with phi = ({})",
                phi_text.join(", ")
            )
            .ok();
            if anti_diagonal {
                writeln!(out, "anti-diagonal form Q = A J holds in this order").ok();
            } else if let Some(better) = aj_order(&data.classes, &data.poset) {
                writeln!(
                    out,
                    "anti-diagonal form does not hold here; try --order {}",
                    labels_of(&data, &better).join(",")
                )
                .ok();
            }
        }
    }
    Ok(0)
}

fn coeff_str(c: &crate::poly::Coeff) -> String {
    c.to_string()
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<i32> {
    let data = load_data(&a.common)?;
    let code = load_code(&a.common, &a.gens, &data)?;
    let kind: Kind = a.kind.parse()?;
    let json_mode = a.common.format == Format::Json;

    let (text, terms_json) = match kind {
        Kind::Swe => {
            let e = swe(&code, &data.classes);
            let terms: Vec<_> = e
                .poly
                .terms()
                .iter()
                .map(|(k, c)| json!({"exponents": k, "coeff": coeff_str(c)}))
                .collect();
            (format!("swe = {}", e.to_text()), terms)
        }
        Kind::Sse => {
            let e = sse(&code, &data.classes);
            let terms: Vec<_> = e
                .terms
                .iter()
                .map(|(k, c)| json!({"classes_per_coordinate": k, "coeff": coeff_str(c)}))
                .collect();
            (format!("sse = {}", e.to_text()), terms)
        }
        Kind::Hamming => {
            let w = swe(&code, &data.classes).hamming();
            let terms: Vec<_> = w
                .terms()
                .iter()
                .map(|(k, c)| json!({"exponents": k, "coeff": coeff_str(c)}))
                .collect();
            (
                format!("hamming = {}", w.to_text(&|v| ["x", "y"][v].to_string())),
                terms,
            )
        }
        Kind::TupleSwe => {
            let e = tuple_swe(&code, &data.classes, &data.poset, a.lambda, a.common.cap)?;
            let terms: Vec<_> = e
                .poly
                .terms()
                .iter()
                .map(|(k, c)| json!({"exponents": k, "coeff": coeff_str(c)}))
                .collect();
            (format!("tuple-swe[{}] = {}", a.lambda, e.to_text()), terms)
        }
        Kind::TupleSse => {
            let e = tuple_sse(&code, &data.classes, &data.poset, a.lambda, a.common.cap)?;
            let terms: Vec<_> = e
                .terms
                .iter()
                .map(|(k, c)| json!({"classes_per_coordinate": k, "coeff": coeff_str(c)}))
                .collect();
            (format!("tuple-sse[{}] = {}", a.lambda, e.to_text()), terms)
        }
    };
    if json_mode {
        let doc = json!({
            "version": 1,
            "command": "enumerate",
            "digest": data.ring.digest(),
            "order": labels_of(&data, &data.classes.reps),
            "kind": kind.name(),
            "lambda": a.lambda,
            "code_size": code.size(),
            "terms": terms_json,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).ok();
    } else {
        writeln!(out, "code over {} words: {}", data.ring.size(), code.size()).ok();
        writeln!(out, "{text}").ok();
    }
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let data = load_data(&a.common)?;
    let code = load_code(&a.common, &a.gens, &data)?;
    let kind: Kind = a.kind.parse()?;
    let report = verify_identity(&data, &code, kind, a.lambda, a.common.cap)?;
    if a.common.format == Format::Json {
        let doc = json!({
            "version": 1,
            "command": "verify",
            "digest": report.context.ring_digest,
            "order": report.context.order,
            "generators": report.context.generators,
            "kind": kind.name(),
            "lambda": report.context.lambda,
            "frobenius": report.frobenius,
            "identity": report.identity,
            "left": report.left,
            "right": report.right,
            "equal": report.equal,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).ok();
    } else {
        writeln!(out, "ring digest: {}", report.context.ring_digest).ok();
        writeln!(out, "order: {}", report.context.order.join(", ")).ok();
        writeln!(out, "kind: {}   lambda: {}", kind, report.context.lambda).ok();
        writeln!(
            out,
            "frobenius: {}",
            if report.frobenius { "yes" } else { "NO" }
        )
        .ok();
        writeln!(out, "left  = {}", report.left).ok();
        writeln!(out, "right = {}", report.right).ok();
        writeln!(
            out,
            "result: {}",
            if report.equal { "PASS" } else { "MISMATCH" }
        )
        .ok();
        if !report.frobenius && !report.equal {
            writeln!(
                out,
                "note: the duality identities are not guaranteed off Frobenius rings"
            )
            .ok();
        }
    }
    Ok(if report.equal { 0 } else { 2 })
}

fn cmd_fuzz(a: &FuzzArgs, out: &mut dyn Write) -> Result<i32> {
    let cfg = SuiteConfig {
        seed: a.seed,
        codes_per_ring: a.codes as usize,
        tuple_codes_per_ring: (a.codes as usize).div_ceil(4).max(1),
        cap: a.cap,
    };
    let report = run_identity_suite(&cfg)?;
    let lee = run_lee_suite(a.seed, a.lee_codes as usize, a.cap)?;
    let failures = report.total_failures() + lee.total_failures();
    if a.format == Format::Json {
        let checks: Vec<_> = report
            .checks
            .iter()
            .chain(&lee.checks)
            .map(|c| {
                json!({
                    "ring": c.ring,
                    "check": c.check,
                    "runs": c.runs,
                    "failures": c.failures,
                })
            })
            .collect();
        let doc = json!({
            "version": 1,
            "command": "fuzz",
            "seed": a.seed,
            "checks": checks,
            "total_failures": failures,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap()).ok();
    } else {
        writeln!(
            out,
            "identity suite (seed {}, {} codes per ring)",
            a.seed, a.codes
        )
        .ok();
        write!(out, "{}", report.render_text()).ok();
        writeln!(out, "lee suite ({} codes)", a.lee_codes).ok();
        write!(out, "{}", lee.render_text()).ok();
        writeln!(out, "total failures: {failures}").ok();
    }
    Ok(if failures == 0 { 0 } else { 2 })
}

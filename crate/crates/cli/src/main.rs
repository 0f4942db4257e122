//! `matlis`: command-line front end for the matlis library.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use matlis::classify::ClassifyError;
use matlis::dvr::DvrError;
use matlis::field::{parse_rational, FieldError};
use matlis::io::IoError;
use matlis::ksdecomp::{KsError, LocalRoute};
use matlis::modrep::{socle_series, IsoResult, ModuleError, NonIsoEvidence};
use matlis::poly::PolyField;
use matlis::strings::WordError;
use matlis::{
    arno_split, classify_word, decompose_with, dual, dvr_add, dvr_classify, dvr_dual, hom_dim, is_isomorphic,
    materialize_band, materialize_string, parse_band, parse_word, AnyModule, BandParam, Certificate,
    DvrCatalogObject, Field, FieldSpec, Fp, ModuleRep, Rationals, DEFAULT_MC_BUDGET, DEFAULT_PRIME,
};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "matlis", version, about = "Matlis duality and Krull-Schmidt decomposition over k[[x,y]]/(xy)")]
struct Cli {
    /// Ground field: `Q` or a prime below 2^32.
    #[arg(long, global = true, default_value_t = FieldSpec::Fp(DEFAULT_PRIME), value_parser = parse_field)]
    field: FieldSpec,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Random samples before giving up on a certificate or an isomorphism.
    #[arg(long, global = true, default_value_t = DEFAULT_MC_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..))]
    mc_budget: u64,
    /// Emit one JSON document on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Module file read by module subcommands.
    #[arg(long = "in", global = true)]
    input: Option<PathBuf>,
    /// Where to write a produced module (stdout otherwise).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    depth: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a word (`x^inf Y`, `xY`, `band(xY)`, ...).
    Validate { word: String },
    /// finite-length, artinian, noetherian or mixed-reflexive.
    Classify { word: String },
    /// Canonical orientation of a string.
    Canon { word: String },
    /// Dual of a word, or of the module given with --in.
    Dual { word: Option<String> },
    /// Noetherian-by-artinian split of a string.
    Split { word: String },
    /// Finite truncation to --depth letters of each tail.
    Truncate { word: String },
    /// Module of a finite string, as a module document.
    Materialize { word: String },
    /// Band module for a primitive cyclic word.
    Band {
        word: String,
        /// Eigenvalue of the Jordan parameter.
        #[arg(long, default_value = "1")]
        eigenvalue: String,
        /// Jordan block size, or power of --poly.
        #[arg(long, default_value_t = 1)]
        size: usize,
        /// Monic polynomial coefficients, low to high (e.g. `1,0,1`), used instead of a Jordan block.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        poly: Option<Vec<String>>,
    },
    /// Socle series dimensions of a finite word or of the module given with --in.
    SocSeries { word: Option<String> },
    /// dim Hom(A, B) for two module files.
    HomDim { source: PathBuf, target: PathBuf },
    /// Isomorphism test for two module files.
    Iso { first: PathBuf, second: PathBuf },
    /// Krull-Schmidt decomposition of the module given with --in.
    Decompose,
    /// Operations on the complete DVR catalog.
    Dvr {
        #[command(subcommand)]
        op: DvrOp,
    },
    /// Run every acceptance check.
    PaperSuite,
}

#[derive(Subcommand, Debug)]
enum DvrOp {
    Dual { object: String },
    Classify { object: String },
    Add { first: String, second: String },
}

fn parse_field(s: &str) -> Result<FieldSpec, FieldError> {
    s.parse()
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Ks(#[from] KsError),
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Dvr(#[from] DvrError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Validated global settings.
#[derive(Debug, Clone)]
struct CliConfig {
    field: FieldSpec,
    seed: u64,
    mc_budget: usize,
    json: bool,
}

/// What a subcommand produced: text for humans and a JSON document.
struct Output {
    text: String,
    doc: Value,
    /// Module document written to --out when given.
    module: Option<String>,
    success: bool,
}

impl Output {
    fn plain(text: impl Into<String>, doc: Value) -> Self {
        Output { text: text.into(), doc, module: None, success: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = CliConfig {
        field: cli.field,
        seed: cli.seed,
        mc_budget: cli.mc_budget as usize,
        json: cli.json,
    };
    match run(&cli, &cfg) {
        Ok(out) => {
            let mut stdout_text = if cfg.json { out.doc.to_string() } else { out.text };
            if let (Some(module), Some(path)) = (&out.module, &cli.out) {
                if let Err(e) = fs::write(path, module) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
                if !cfg.json {
                    stdout_text = format!("wrote {}", path.display());
                }
            }
            println!("{stdout_text}");
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cfg.json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: &Cli, cfg: &CliConfig) -> Result<Output, CliError> {
    match &cli.command {
        Command::Validate { word } => {
            if word.trim_start().starts_with("band(") {
                let pw = parse_band(word)?;
                Ok(Output::plain("valid", json!({ "valid": true, "word": pw.to_string(), "period": pw.period() })))
            } else {
                let w = parse_word(word)?;
                Ok(Output::plain("valid", json!({ "valid": true, "word": w.to_string() })))
            }
        }
        Command::Classify { word } => {
            let c = classify_word(&parse_word(word)?);
            Ok(Output::plain(c.to_string(), json!({ "word": word, "classification": c.to_string() })))
        }
        Command::Canon { word } => {
            let w = parse_word(word)?.canonical();
            Ok(Output::plain(w.to_string(), json!({ "canonical": w.to_string() })))
        }
        Command::Dual { word: Some(word) } => {
            let d = if word.trim_start().starts_with("band(") {
                parse_band(word)?.inverse().to_string()
            } else {
                parse_word(word)?.inverse().to_string()
            };
            Ok(Output::plain(d.clone(), json!({ "dual": d })))
        }
        Command::Dual { word: None } => {
            let m = match read_module(require_input(cli)?)? {
                AnyModule::Fp(m) => AnyModule::Fp(dual(&m)),
                AnyModule::Q(m) => AnyModule::Q(dual(&m)),
            };
            Ok(module_output(m))
        }
        Command::Split { word } => {
            let w = parse_word(word)?;
            let s = arno_split(&w);
            let text = format!(
                "sub: {}\nquot: {}\nindex: {}",
                s.sub,
                s.quot,
                s.split_index.map_or("none".to_string(), |j| j.to_string())
            );
            Ok(Output::plain(
                text,
                json!({
                    "classification": classify_word(&w).to_string(),
                    "sub": s.sub.to_string(),
                    "quot": s.quot.to_string(),
                    "split_index": s.split_index,
                }),
            ))
        }
        Command::Truncate { word } => {
            let depth = cli.depth.ok_or_else(|| CliError::Usage("truncate needs --depth".into()))?;
            let t = parse_word(word)?.truncate(depth);
            Ok(Output::plain(t.to_string(), json!({ "truncation": t.to_string(), "depth": depth })))
        }
        Command::Materialize { word } => {
            let w = parse_word(word)?;
            let m = match cfg.field {
                FieldSpec::Fp(p) => AnyModule::Fp(materialize_string(&w, &Fp::new(p)?)?),
                FieldSpec::Q => AnyModule::Q(materialize_string(&w, &Rationals)?),
            };
            Ok(module_output(m))
        }
        Command::Band { word, eigenvalue, size, poly } => {
            let pw = parse_band(word)?;
            let m = match cfg.field {
                FieldSpec::Fp(p) => {
                    let f = Fp::new(p)?;
                    let elem = |s: &str| s.trim().parse::<i64>().ok().map(|n| f.elem(n));
                    AnyModule::Fp(materialize_band(&pw, &band_param(&f, elem, eigenvalue, *size, poly)?, &f)?)
                }
                FieldSpec::Q => {
                    let param = band_param(&Rationals, parse_rational, eigenvalue, *size, poly)?;
                    AnyModule::Q(materialize_band(&pw, &param, &Rationals)?)
                }
            };
            Ok(module_output(m))
        }
        Command::SocSeries { word } => {
            let dims = match (word, &cli.input) {
                (Some(word), None) => {
                    let w = parse_word(word)?;
                    match cfg.field {
                        FieldSpec::Fp(p) => socle_series(&materialize_string(&w, &Fp::new(p)?)?),
                        FieldSpec::Q => socle_series(&materialize_string(&w, &Rationals)?),
                    }
                }
                (None, Some(path)) => match read_module(path)? {
                    AnyModule::Fp(m) => socle_series(&m),
                    AnyModule::Q(m) => socle_series(&m),
                },
                _ => return Err(CliError::Usage("soc-series takes either a word or --in, not both".into())),
            };
            let text = dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
            Ok(Output::plain(text, json!({ "socle_series": dims })))
        }
        Command::HomDim { source, target } => {
            let d = match (read_module(source)?, read_module(target)?) {
                (AnyModule::Fp(a), AnyModule::Fp(b)) => hom_dim(&a, &b)?,
                (AnyModule::Q(a), AnyModule::Q(b)) => hom_dim(&a, &b)?,
                (a, b) => return Err(mismatch(&a, &b)),
            };
            Ok(Output::plain(d.to_string(), json!({ "hom_dim": d })))
        }
        Command::Iso { first, second } => match (read_module(first)?, read_module(second)?) {
            (AnyModule::Fp(a), AnyModule::Fp(b)) => iso(&a, &b, cfg),
            (AnyModule::Q(a), AnyModule::Q(b)) => iso(&a, &b, cfg),
            (a, b) => Err(mismatch(&a, &b)),
        },
        Command::Decompose => match read_module(require_input(cli)?)? {
            AnyModule::Fp(m) => decompose_output(&m, cfg),
            AnyModule::Q(m) => decompose_output(&m, cfg),
        },
        Command::Dvr { op } => dvr(op),
        Command::PaperSuite => {
            let reports = matlis::suite::run_all(cfg.seed);
            let success = reports.iter().all(|r| r.passed);
            let text = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
            let doc = json!({
                "seed": cfg.seed,
                "passed": success,
                "criteria": reports.iter().map(|r| json!({
                    "number": r.number,
                    "title": r.title,
                    "passed": r.passed,
                    "detail": r.detail,
                    "seconds": r.seconds,
                })).collect::<Vec<_>>(),
            });
            Ok(Output { text, doc, module: None, success })
        }
    }
}

fn require_input(cli: &Cli) -> Result<&Path, CliError> {
    cli.input
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("{} needs --in <module file>", subcommand_name(&cli.command))))
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Dual { .. } => "dual",
        Command::Decompose => "decompose",
        _ => "this subcommand",
    }
}

fn mismatch(a: &AnyModule, b: &AnyModule) -> CliError {
    ModuleError::FieldMismatch(a.field_spec().to_string(), b.field_spec().to_string()).into()
}

fn read_module(path: &Path) -> Result<AnyModule, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(AnyModule::from_json(&text)?)
}

fn module_output(m: AnyModule) -> Output {
    let text = m.to_json();
    let doc: Value = serde_json::from_str(&text).expect("module documents are JSON");
    Output { text: text.clone(), doc, module: Some(text), success: true }
}

fn band_param<K: Field>(
    f: &K,
    elem: impl Fn(&str) -> Option<K::Elem>,
    eigenvalue: &str,
    size: usize,
    poly: &Option<Vec<String>>,
) -> Result<BandParam<K>, CliError> {
    let parse = |s: &str| elem(s).ok_or_else(|| CliError::Usage(format!("'{s}' is not an element of {}", f.spec())));
    Ok(match poly {
        Some(coeffs) => BandParam::Companion { poly: coeffs.iter().map(|s| parse(s)).collect::<Result<_, _>>()?, power: size },
        None => BandParam::Jordan { eigenvalue: parse(eigenvalue)?, size },
    })
}

fn matrix_rows<K: Field>(m: &matlis::Matrix<K>) -> Value {
    let f = m.field();
    (0..m.rows()).map(|r| m.row(r).iter().map(|e| f.format(e)).collect::<Vec<_>>()).collect()
}

fn iso<K: Field>(a: &ModuleRep<K>, b: &ModuleRep<K>, cfg: &CliConfig) -> Result<Output, CliError> {
    Ok(match is_isomorphic(a, b, cfg.seed, cfg.mc_budget)? {
        IsoResult::Isomorphic { witness } => {
            Output::plain("isomorphic", json!({ "isomorphic": true, "witness": matrix_rows(&witness) }))
        }
        IsoResult::NotIsomorphic(NonIsoEvidence::Exact(reason)) => Output::plain(
            format!("not isomorphic ({reason})"),
            json!({ "isomorphic": false, "exact": true, "reason": reason }),
        ),
        IsoResult::NotIsomorphic(NonIsoEvidence::MonteCarlo { samples, failure_bound }) => Output::plain(
            format!("not isomorphic (no invertible map in {samples} samples; error bound {failure_bound:.3e})"),
            json!({ "isomorphic": false, "exact": false, "samples": samples, "failure_bound": failure_bound }),
        ),
    })
}

fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::LocalEndo { endo_dim, residue_dim, route } => json!({
            "exact": true,
            "endo_dim": endo_dim,
            "residue_dim": residue_dim,
            "route": match route {
                LocalRoute::ResidueDimOne => "residue-dim-one",
                LocalRoute::FrobeniusFixed => "frobenius-fixed",
                LocalRoute::PrimitiveElement => "primitive-element",
            },
        }),
        Certificate::MonteCarlo { samples, failure_bound } => {
            json!({ "exact": false, "samples": samples, "failure_bound": failure_bound })
        }
    }
}

fn decompose_output<K: PolyField>(m: &ModuleRep<K>, cfg: &CliConfig) -> Result<Output, CliError>
where
    AnyModule: From<ModuleRep<K>>,
{
    let r = decompose_with(m, cfg.seed, cfg.mc_budget)?;
    let mut lines = vec![format!("{} summands in {} isomorphism classes", r.summand_count(), r.parts.len())];
    let mut parts = Vec::new();
    for (i, p) in r.parts.iter().enumerate() {
        let cert = certificate_json(&p.certificate);
        lines.push(format!(
            "part {}: dim {}, multiplicity {}, {}",
            i + 1,
            p.module.dim(),
            p.multiplicity,
            if p.certificate.is_exact() { "exact certificate" } else { "monte-carlo certificate" }
        ));
        let module: Value = serde_json::from_str(&AnyModule::from(p.module.clone()).to_json()).expect("module documents are JSON");
        parts.push(json!({ "dim": p.module.dim(), "multiplicity": p.multiplicity, "certificate": cert, "module": module }));
    }
    let doc = json!({ "parts": parts, "witness": matrix_rows(&r.witness) });
    Ok(Output::plain(lines.join("\n"), doc))
}

fn dvr(op: &DvrOp) -> Result<Output, CliError> {
    let parse = |s: &str| s.parse::<DvrCatalogObject>();
    Ok(match op {
        DvrOp::Dual { object } => {
            let d = dvr_dual(&parse(object)?);
            Output::plain(d.to_string(), json!({ "dual": d.to_string(), "object": d }))
        }
        DvrOp::Classify { object } => {
            let c = dvr_classify(&parse(object)?);
            Output::plain(c.to_string(), json!({ "classification": c.to_string() }))
        }
        DvrOp::Add { first, second } => {
            let s = dvr_add(&parse(first)?, &parse(second)?);
            Output::plain(s.to_string(), json!({ "sum": s.to_string(), "object": s }))
        }
    })
}

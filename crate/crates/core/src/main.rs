//! Command-line front end: polynomial computation, zero-one
//! classification, factorization reports, BPD enumeration, full S_n
//! scans with JSONL output, and the acceptance suite.

use std::collections::HashSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use groth_kit::analysis::{
    check_conjecture_1_1, check_conjecture_1_2, check_conjecture_1_6, check_lorentzian_theorem,
};
use groth_kit::bpd::enumerate_bpds;
use groth_kit::groth::{
    degree_d, grothendieck_bpd, grothendieck_dd, schubert_bpd, schubert_dd, Variant,
    BPD_ENGINE_BOUND,
};
use groth_kit::permcore::{enumerate_sn, Permutation};
use groth_kit::polyring::IntPolynomial;
use groth_kit::verify::run_acceptance;
use groth_kit::zeroone::{
    classify_groth, classify_schubert, factorize, factorize_double_schubert, ZeroOneError,
};

const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_REFUSED: u8 = 2;
const EXIT_VERIFY_FAILED: u8 = 3;

const LORENTZIAN_SCAN_BOUND: usize = 4;

#[derive(Parser)]
#[command(name = "groth-kit", version, about = "Exact Schubert and Grothendieck polynomial toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a Schubert or Grothendieck polynomial
    Compute {
        /// Permutation in one-line notation, e.g. 1342 or 10,3,1,2,...
        perm: String,
        #[arg(long, value_enum, default_value_t = KindArg::Groth)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = VariantArg::Single)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = EngineArg::Dd)]
        engine: EngineArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Pattern and coefficient zero-one verdicts for both families
    Classify {
        perm: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Verified factorization of the positivized polynomial
    Factor {
        perm: String,
        #[arg(long, value_enum, default_value_t = VariantArg::Single)]
        variant: VariantArg,
    },
    /// Enumerate the bumpless pipe dreams of a permutation
    Bpds {
        perm: String,
        /// Print only the count
        #[arg(long)]
        count: bool,
        /// Print ASCII renderings in canonical order
        #[arg(long)]
        render: bool,
    },
    /// Sweep all of S_n and emit one JSON record per permutation
    Scan {
        #[arg(long)]
        n: usize,
        /// Comma-separated subset of zeroone,engines,conjectures,lorentzian,factorization
        #[arg(long, value_delimiter = ',')]
        checks: Vec<CheckArg>,
        /// Output JSONL path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; GROTH_KIT_WORKERS overrides, default all cores
        #[arg(long)]
        workers: Option<usize>,
        /// Skip permutations already present in the output file
        #[arg(long)]
        resume: bool,
    },
    /// Run the acceptance suite
    Verify {
        /// Trim sweeps to n <= 4 while covering every criterion
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum KindArg {
    Schubert,
    Groth,
}

#[derive(Copy, Clone, ValueEnum)]
enum VariantArg {
    Single,
    Double,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Single => Variant::Single,
            VariantArg::Double => Variant::Double,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum EngineArg {
    Dd,
    Bpd,
}

#[derive(Copy, Clone, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Latex,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Zeroone,
    Engines,
    Conjectures,
    Lorentzian,
    Factorization,
}

#[derive(Serialize, Deserialize)]
struct ScanRecord {
    perm: String,
    n: usize,
    length: usize,
    degree_d: u32,
    zero_one_patterns: bool,
    zero_one_coeffs: bool,
    schubert_zero_one_patterns: bool,
    schubert_zero_one_coeffs: bool,
    engines_agree: Option<bool>,
    conj_1_1: String,
    conj_1_2: String,
    conj_1_6: String,
    lorentzian: String,
    factorization_verified: Option<bool>,
    wall_time_ms: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Compute {
            perm,
            kind,
            variant,
            engine,
            format,
        } => cmd_compute(&perm, kind, variant, engine, format),
        Command::Classify { perm, format } => cmd_classify(&perm, format),
        Command::Factor { perm, variant } => cmd_factor(&perm, variant),
        Command::Bpds {
            perm,
            count,
            render,
        } => cmd_bpds(&perm, count, render),
        Command::Scan {
            n,
            checks,
            out,
            workers,
            resume,
        } => cmd_scan(n, &checks, out.as_deref(), workers, resume),
        Command::Verify { quick } => Ok(cmd_verify(quick)),
    }
}

fn parse_perm(text: &str) -> Result<Permutation, String> {
    text.parse::<Permutation>().map_err(|e| e.to_string())
}

fn cmd_compute(
    perm: &str,
    kind: KindArg,
    variant: VariantArg,
    engine: EngineArg,
    format: FormatArg,
) -> Result<u8, String> {
    let w = parse_perm(perm)?;
    let variant = Variant::from(variant);
    let f: IntPolynomial = match (kind, engine) {
        (KindArg::Groth, EngineArg::Dd) => grothendieck_dd(&w, variant),
        (KindArg::Schubert, EngineArg::Dd) => schubert_dd(&w, variant),
        (KindArg::Groth, EngineArg::Bpd) => grothendieck_bpd(&w, variant).map_err(|e| e.to_string())?,
        (KindArg::Schubert, EngineArg::Bpd) => schubert_bpd(&w, variant).map_err(|e| e.to_string())?,
    };
    match format {
        FormatArg::Text => println!("{}", f.to_text()),
        FormatArg::Json => println!("{}", f.to_json()),
        FormatArg::Latex => println!("{}", f.to_latex()),
    }
    Ok(EXIT_OK)
}

fn cmd_classify(perm: &str, format: FormatArg) -> Result<u8, String> {
    let w = parse_perm(perm)?;
    let groth = classify_groth(&w);
    let schubert = classify_schubert(&w);
    let witness_json = |v: &groth_kit::zeroone::ClassifyVerdict| {
        v.witness
            .as_ref()
            .map(|(e, c)| serde_json::json!({"exponents": e.0, "coeff": c.to_string()}))
    };
    match format {
        FormatArg::Json => {
            let doc = serde_json::json!({
                "perm": w.to_string(),
                "groth": {
                    "patterns": groth.pattern_zero_one,
                    "coefficients": groth.coefficient_zero_one,
                    "witness": witness_json(&groth),
                },
                "schubert": {
                    "patterns": schubert.pattern_zero_one,
                    "coefficients": schubert.coefficient_zero_one,
                    "witness": witness_json(&schubert),
                },
            });
            println!("{doc}");
        }
        _ => {
            println!("perm: {w}");
            for (label, v) in [("groth", &groth), ("schubert", &schubert)] {
                let witness = match &v.witness {
                    Some((e, c)) => format!(" witness={:?}:{c}", e.0),
                    None => String::new(),
                };
                println!(
                    "{label}: patterns={} coefficients={}{witness}",
                    v.pattern_zero_one, v.coefficient_zero_one
                );
            }
        }
    }
    if groth.theorem_violation() || schubert.theorem_violation() {
        eprintln!("pattern and coefficient verdicts disagree");
        return Ok(EXIT_VERIFY_FAILED);
    }
    Ok(EXIT_OK)
}

fn cmd_factor(perm: &str, variant: VariantArg) -> Result<u8, String> {
    let w = parse_perm(perm)?;
    let report = match variant {
        VariantArg::Single => factorize(&w),
        VariantArg::Double => factorize_double_schubert(&w),
    };
    match report {
        Ok(r) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&r.to_json(&w)).expect("serializable")
            );
            Ok(EXIT_OK)
        }
        Err(e @ ZeroOneError::NotZeroOne(_)) => {
            eprintln!("error: {e}");
            Ok(EXIT_REFUSED)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(EXIT_VERIFY_FAILED)
        }
    }
}

fn cmd_bpds(perm: &str, count: bool, render: bool) -> Result<u8, String> {
    let w = parse_perm(perm)?;
    if w.n() > BPD_ENGINE_BOUND {
        return Err(format!(
            "n = {} exceeds the enumeration bound {BPD_ENGINE_BOUND}",
            w.n()
        ));
    }
    let mut bpds = enumerate_bpds(&w);
    bpds.sort();
    if render {
        for (i, b) in bpds.iter().enumerate() {
            if i > 0 {
                println!();
            }
            print!("{}", b.ascii());
        }
    }
    if count || !render {
        println!("{}", bpds.len());
    }
    Ok(EXIT_OK)
}

fn scan_record(w: &Permutation, checks: &[CheckArg]) -> ScanRecord {
    let on = |c: CheckArg| checks.contains(&c);
    let start = Instant::now();
    let n = w.n();
    let g = grothendieck_dd(w, Variant::Single);
    let s = schubert_dd(w, Variant::Single);
    let zero_one_patterns = w.avoids_zero_one_patterns();
    let zero_one_coeffs = groth_kit::zeroone::non_zero_one_witness(&g).is_none();
    let schubert_zero_one_patterns = w.avoids_schubert_zero_one_patterns();
    let schubert_zero_one_coeffs = groth_kit::zeroone::non_01_witness(&s).is_none();
    let engines_agree = if on(CheckArg::Engines) && n <= BPD_ENGINE_BOUND {
        let agree = [Variant::Single, Variant::Double].iter().all(|&v| {
            grothendieck_bpd(w, v).map(|p| p == grothendieck_dd(w, v)) == Ok(true)
        });
        Some(agree)
    } else {
        None
    };
    let verdict = |pass: bool| if pass { "pass" } else { "fail" }.to_string();
    let (conj_1_1, conj_1_2, conj_1_6) = if on(CheckArg::Conjectures) {
        (
            verdict(check_conjecture_1_1(&g).pass),
            verdict(check_conjecture_1_2(&g).pass),
            verdict(check_conjecture_1_6(&g).pass),
        )
    } else {
        ("skipped".into(), "skipped".into(), "skipped".into())
    };
    let lorentzian = if on(CheckArg::Lorentzian) && zero_one_patterns && n <= LORENTZIAN_SCAN_BOUND
    {
        match check_lorentzian_theorem(w) {
            Ok(pass) => verdict(pass),
            Err(_) => "fail".to_string(),
        }
    } else {
        "skipped".to_string()
    };
    let factorization_verified = if on(CheckArg::Factorization) && zero_one_patterns {
        Some(matches!(factorize(w), Ok(r) if r.product_verified && r.disjoint_windows))
    } else {
        None
    };
    ScanRecord {
        perm: w.to_string(),
        n,
        length: w.length(),
        degree_d: degree_d(w),
        zero_one_patterns,
        zero_one_coeffs,
        schubert_zero_one_patterns,
        schubert_zero_one_coeffs,
        engines_agree,
        conj_1_1,
        conj_1_2,
        conj_1_6,
        lorentzian,
        factorization_verified,
        wall_time_ms: start.elapsed().as_millis() as u64,
    }
}

fn record_failures(r: &ScanRecord) -> bool {
    r.zero_one_patterns != r.zero_one_coeffs
        || r.schubert_zero_one_patterns != r.schubert_zero_one_coeffs
        || r.engines_agree == Some(false)
        || r.conj_1_1 == "fail" && r.zero_one_patterns
        || r.conj_1_2 == "fail" && r.zero_one_patterns
        || r.conj_1_6 == "fail" && r.zero_one_patterns
        || r.lorentzian == "fail"
        || r.factorization_verified == Some(false)
}

fn cmd_scan(
    n: usize,
    checks: &[CheckArg],
    out: Option<&std::path::Path>,
    workers: Option<usize>,
    resume: bool,
) -> Result<u8, String> {
    if n == 0 || n > 7 {
        return Err(format!("scan supports 1 <= n <= 7, got {n}"));
    }
    let checks: Vec<CheckArg> = if checks.is_empty() {
        vec![
            CheckArg::Zeroone,
            CheckArg::Engines,
            CheckArg::Conjectures,
            CheckArg::Lorentzian,
            CheckArg::Factorization,
        ]
    } else {
        checks.to_vec()
    };
    let workers = std::env::var("GROTH_KIT_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .or(workers)
        .unwrap_or(0);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| e.to_string())?;

    let mut done: HashSet<String> = HashSet::new();
    if resume {
        if let Some(path) = out {
            if let Ok(existing) = std::fs::read_to_string(path) {
                for line in existing.lines() {
                    if let Ok(r) = serde_json::from_str::<ScanRecord>(line) {
                        done.insert(r.perm);
                    }
                }
            }
        }
    }

    let perms: Vec<Permutation> = enumerate_sn(n)
        .filter(|w| !done.contains(&w.to_string()))
        .collect();
    // rayon's ordered collect keeps lexicographic order regardless of
    // worker scheduling
    let records: Vec<ScanRecord> = pool.install(|| {
        perms
            .par_iter()
            .map(|w| scan_record(w, &checks))
            .collect()
    });

    let mut body = String::new();
    for r in &records {
        body.push_str(&serde_json::to_string(r).expect("serializable"));
        body.push('\n');
    }
    match out {
        Some(path) => {
            let mut file = std::fs::OpenOptions::new()
                .create(true)
                .append(resume)
                .write(true)
                .truncate(!resume)
                .open(path)
                .map_err(|e| e.to_string())?;
            file.write_all(body.as_bytes()).map_err(|e| e.to_string())?;
        }
        None => {
            print!("{body}");
        }
    }

    let total = records.len();
    let zero_one = records.iter().filter(|r| r.zero_one_patterns).count();
    let failures = records.iter().filter(|r| record_failures(r)).count();
    let status = if failures == 0 { "ok" } else { "FAIL" };
    eprintln!(
        "scan n={n}: total={total} zero_one={zero_one} failures={failures} skipped={} [{status}]",
        done.len()
    );
    if failures > 0 {
        return Ok(EXIT_VERIFY_FAILED);
    }
    Ok(EXIT_OK)
}

fn cmd_verify(quick: bool) -> u8 {
    let results = run_acceptance(quick);
    let mut all_pass = true;
    for r in &results {
        println!("{}", r.line());
        all_pass &= r.pass;
    }
    if all_pass {
        println!("all {} criteria pass", results.len());
        EXIT_OK
    } else {
        println!("acceptance FAILED");
        EXIT_VERIFY_FAILED
    }
}

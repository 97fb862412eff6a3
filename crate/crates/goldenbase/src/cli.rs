//! Command-line interface: generation, evaluation, verification,
//! linear combination and base-φ digit rendering of catalog entries.
//!
//! Exit codes: 0 = success / all checks passed, 1 = a verification or
//! numeric check failed, 2 = usage or parse error.

use crate::bignum::{
    agree_digits, eval_expansion, oracle_value, phi_digits, with_guard_retry, BignumError,
    Enclosure,
};
use crate::catalog::{entry_for_name, list_zero_relations, Catalog, CatalogEntry, CatalogError};
use crate::exactfield::Q5;
use crate::expr::{parse_expr, ExprError};
use crate::pseries::{combine, render_pnotation, serialize, PExpansion};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "goldenbase",
    version,
    about = "Golden-ratio-base series expansions of Fibonacci/Lucas logs and arctans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all catalog entries with their constants.
    Catalog,
    /// Print a catalog entry as P-notation or JSON.
    Gen {
        /// Registry name, e.g. logF/3 or zero/thm4.1
        name: String,
        /// Emit the serialized JSON document.
        #[arg(long)]
        json: bool,
        /// Emit P-notation (the default).
        #[arg(long)]
        pnotation: bool,
    },
    /// Evaluate an entry to a guaranteed decimal enclosure.
    Eval {
        name: String,
        /// Guaranteed correct decimal digits.
        #[arg(long)]
        digits: u32,
        #[arg(long)]
        json: bool,
    },
    /// Compare an entry's series value against its oracle.
    Verify {
        name: String,
        #[arg(long)]
        digits: u32,
        #[arg(long)]
        json: bool,
    },
    /// Verify every catalog entry up to a maximum family parameter.
    VerifyAll {
        #[arg(long)]
        rmax: u32,
        #[arg(long)]
        digits: u32,
        #[arg(long)]
        json: bool,
    },
    /// Check that all registry zero relations evaluate to zero.
    Zeros {
        #[arg(long)]
        digits: u32,
        #[arg(long)]
        json: bool,
    },
    /// Combine catalog entries linearly, e.g. "2*logF(3) - logL(3)".
    Combine {
        expr: String,
        /// Also evaluate the combination to this many digits.
        #[arg(long)]
        digits: Option<u32>,
    },
    /// Render an entry's value in base-φ digits.
    Phidigits {
        name: String,
        #[arg(long)]
        digits: u32,
        /// Number of base-φ digit places.
        #[arg(long)]
        count: usize,
    },
}

/// A failed run, split by exit code.
enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// A numeric or verification check failed: exit 1.
    Check(String),
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<crate::pseries::SeriesError> for Failure {
    fn from(e: crate::pseries::SeriesError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<BignumError> for Failure {
    fn from(e: BignumError) -> Self {
        Failure::Check(e.to_string())
    }
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {}", msg);
            2
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {}", msg);
            1
        }
    }
}

fn dispatch(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Catalog => cmd_catalog(),
        Command::Gen { name, json, pnotation: _ } => cmd_gen(&name, json),
        Command::Eval { name, digits, json } => cmd_eval(&name, digits, json),
        Command::Verify { name, digits, json } => cmd_verify(&name, digits, json),
        Command::VerifyAll { rmax, digits, json } => cmd_verify_all(rmax, digits, json),
        Command::Zeros { digits, json } => cmd_zeros(digits, json),
        Command::Combine { expr, digits } => cmd_combine(&expr, digits),
        Command::Phidigits { name, digits, count } => cmd_phidigits(&name, digits, count),
    }
}

fn sorted_entries(catalog: &Catalog) -> Vec<&CatalogEntry> {
    let mut entries: Vec<&CatalogEntry> = catalog.entries().iter().collect();
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    entries
}

fn cmd_catalog() -> Result<i32, Failure> {
    let catalog = Catalog::standard();
    for entry in sorted_entries(&catalog) {
        println!(
            "{:<14} {:<30} base α^{}, length {}",
            entry.name,
            entry.tag.to_string(),
            entry.expansion.base_exp(),
            entry.expansion.length()
        );
    }
    Ok(0)
}

fn cmd_gen(name: &str, json: bool) -> Result<i32, Failure> {
    let entry = entry_for_name(name)?;
    if json {
        println!("{}", serialize(&entry.expansion, &entry.tag));
    } else {
        println!("{}", render_pnotation(&entry.expansion));
    }
    Ok(0)
}

fn evaluate(e: &PExpansion, digits: u32) -> Result<Enclosure, Failure> {
    Ok(with_guard_retry(digits, |sp| eval_expansion(e, sp))?)
}

fn cmd_eval(name: &str, digits: u32, json: bool) -> Result<i32, Failure> {
    let entry = entry_for_name(name)?;
    let enc = evaluate(&entry.expansion, digits)?;
    if json {
        let doc = serde_json::json!({
            "name": entry.name,
            "digits": digits,
            "midpoint": enc.decimal_midpoint(digits),
            "enclosure": enc.decimal_range(digits),
        });
        println!("{}", doc);
    } else {
        println!("{} = {}", entry.name, enc.decimal_midpoint(digits));
        println!("enclosure: {}", enc.decimal_range(digits));
    }
    Ok(0)
}

struct VerifyReport {
    name: String,
    digits: u32,
    pass: bool,
    agree: u32,
    midpoint: String,
    tag: String,
}

fn verify_entry(entry: &CatalogEntry, digits: u32) -> Result<VerifyReport, Failure> {
    let eval = evaluate(&entry.expansion, digits)?;
    let oracle = with_guard_retry(digits, |sp| oracle_value(&entry.tag, sp))?;
    let agree = agree_digits(&eval, &oracle, digits);
    Ok(VerifyReport {
        name: entry.name.clone(),
        digits,
        pass: agree + 5 >= digits,
        agree,
        midpoint: eval.decimal_midpoint(digits),
        tag: entry.tag.to_string(),
    })
}

fn print_report(r: &VerifyReport, json: bool) {
    if json {
        let doc = serde_json::json!({
            "name": r.name,
            "digits": r.digits,
            "status": if r.pass { "pass" } else { "fail" },
            "agree_digits": r.agree,
            "midpoint": r.midpoint,
        });
        println!("{}", doc);
    } else {
        println!(
            "{}: {} (agrees to {} of {} digits with {})",
            r.name,
            if r.pass { "pass" } else { "fail" },
            r.agree,
            r.digits,
            r.tag
        );
    }
}

fn cmd_verify(name: &str, digits: u32, json: bool) -> Result<i32, Failure> {
    let entry = entry_for_name(name)?;
    let report = verify_entry(&entry, digits)?;
    print_report(&report, json);
    Ok(if report.pass { 0 } else { 1 })
}

fn cmd_verify_all(rmax: u32, digits: u32, json: bool) -> Result<i32, Failure> {
    let catalog = Catalog::with_rmax(rmax);
    let mut all_pass = true;
    for entry in sorted_entries(&catalog) {
        let report = verify_entry(entry, digits)?;
        all_pass &= report.pass;
        print_report(&report, json);
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_zeros(digits: u32, json: bool) -> Result<i32, Failure> {
    let mut all_pass = true;
    for relation in list_zero_relations() {
        let entry = relation.literal;
        let enc = evaluate(&entry.expansion, digits)?;
        let zero = Enclosure::exact_zero(enc.scale());
        // pass: the enclosure contains 0 and |midpoint| ≤ 10^(−(digits−5))
        let pass = enc.contains_zero() && agree_digits(&enc, &zero, digits) + 5 >= digits;
        all_pass &= pass;
        if json {
            let doc = serde_json::json!({
                "name": entry.name,
                "digits": digits,
                "status": if pass { "pass" } else { "fail" },
                "midpoint": enc.decimal_midpoint(digits),
            });
            println!("{}", doc);
        } else {
            println!(
                "{}: {} (midpoint {})",
                entry.name,
                if pass { "pass" } else { "fail" },
                enc.decimal_midpoint(digits)
            );
        }
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_combine(expr: &str, digits: Option<u32>) -> Result<i32, Failure> {
    let parsed = parse_expr(expr)?;
    let mut terms = Vec::new();
    for (coeff, name) in parsed.terms {
        let entry = entry_for_name(&name)?;
        terms.push((Q5::from_rational(coeff), entry.expansion));
    }
    let combined = combine(&terms)?;
    println!("{}", render_pnotation(&combined));
    if let Some(digits) = digits {
        let enc = evaluate(&combined, digits)?;
        println!("midpoint: {}", enc.decimal_midpoint(digits));
        println!("enclosure: {}", enc.decimal_range(digits));
    }
    Ok(0)
}

fn cmd_phidigits(name: &str, digits: u32, count: usize) -> Result<i32, Failure> {
    if count == 0 {
        return Err(Failure::Usage("count must be at least 1".into()));
    }
    let entry = entry_for_name(name)?;
    let enc = evaluate(&entry.expansion, digits)?;
    println!("{}", phi_digits(&enc, count)?);
    Ok(0)
}

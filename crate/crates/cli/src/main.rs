//! Command-line front end: exact sequence tables, convergent traces,
//! polynomial data, Fleck sums and the verification suites.

mod output;
mod suites;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use interlace_core::cf::cf_expand;
use interlace_core::convergents::{euclid_error, phi_vector, psi_vector};
use interlace_core::minors::{fit_recurrence, minor_seq};
use interlace_core::polyfam::{family_poly, FamilyId, FamilyTag};
use interlace_core::rat::rat_to_decimal;
use interlace_core::sequences::{fleck, SeqEngine, SeqFamily, SeqId};
use interlace_core::spectral::{mellin_poly, mellin_sign, PQ};
use interlace_core::{Rat, Report};

use output::{appreal_json, err_exponent, json_escape, print_report_text, rat_json, report_json, Format};

const PREC_ENV: &str = "INTERLACE_PREC_BITS";

fn default_prec() -> u32 {
    std::env::var(PREC_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(128)
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(Parser)]
#[command(
    name = "interlace",
    version,
    about = "Exact interlacing Fibonacci sequences, vector convergents, polynomial families and their verification suites"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "text", value_parser = parse_format)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print exact sequence terms.
    Seq {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        j: u32,
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        /// F (rational), G (rational sister), N (integer numerators), G0.
        #[arg(long, default_value = "F")]
        family: String,
    },
    /// Reproduce the dimension <= 5 integer reference tables.
    Table {
        /// pos (r = 1..10) or neg (r = -8..1).
        #[arg(long)]
        appendix: String,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Convergent vector, limit vector and certified distance.
    Convergents {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
        #[arg(long, default_value_t = 30)]
        digits: u32,
    },
    /// Print one member of a polynomial family.
    Polys {
        /// P|Q|calP|calQ|V|T|U|S|C|fib|lucas|psi|cmin|theta|rho|tau|varphi
        #[arg(long)]
        family: String,
        #[arg(long)]
        index: u64,
    },
    /// Brute-force alternating binomial sum over a residue class.
    Fleck {
        #[arg(long = "N")]
        n_rows: u64,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long = "mod")]
        modulus: u64,
    },
    /// Run a named verification suite.
    Verify {
        /// theorem1|corollary1|minpoly|classic|sequences|convergence|spectral|minors|all
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max: Option<u64>,
        /// Working precision in bits (default from INTERLACE_PREC_BITS or 128).
        #[arg(long)]
        prec: Option<u32>,
        /// Print every passing check too.
        #[arg(long)]
        verbose: bool,
    },
    /// Mellin-transform polynomial and functional-equation sign.
    Mellin {
        /// P or Q.
        #[arg(long)]
        family: String,
        #[arg(long)]
        m: u64,
    },
    /// Minor sequences and their fitted recurrence.
    Minors {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: u32,
        #[arg(long, default_value_t = 12)]
        count: usize,
        #[arg(long, default_value = "F")]
        family: String,
    },
}

fn seq_family(name: &str) -> Result<SeqFamily, String> {
    match name {
        "F" | "f" => Ok(SeqFamily::F),
        "G" | "g" => Ok(SeqFamily::G),
        "N" | "n" => Ok(SeqFamily::NOfF),
        "G0" | "g0" => Ok(SeqFamily::G0),
        other => Err(format!("unknown family `{other}` (expected F|G|N|G0)")),
    }
}

fn poly_tag(name: &str) -> Result<FamilyTag, String> {
    Ok(match name {
        "P" => FamilyTag::P,
        "Q" => FamilyTag::Q,
        "calP" => FamilyTag::CalP,
        "calQ" => FamilyTag::CalQ,
        "V" => FamilyTag::V,
        "T" => FamilyTag::ChebT,
        "U" => FamilyTag::ChebU,
        "S" => FamilyTag::ChebS,
        "C" => FamilyTag::ChebC,
        "fib" => FamilyTag::FibPoly,
        "lucas" => FamilyTag::LucasPoly,
        "psi" => FamilyTag::PsiMin,
        "cmin" => FamilyTag::CMin,
        "theta" => FamilyTag::ThetaMin,
        "rho" => FamilyTag::RhoMin,
        "tau" => FamilyTag::TauMin,
        "varphi" => FamilyTag::VarphiMin,
        other => return Err(format!("unknown polynomial family `{other}`")),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = cli.format;
    match cli.command {
        Command::Seq { m, j, from, to, family } => {
            if m < 1 || from > to {
                return Err("need m >= 1 and from <= to".into());
            }
            let fam = seq_family(&family)?;
            let id = SeqId::new(fam, m, if fam == SeqFamily::G0 { 0 } else { j })
                .map_err(|e| e.to_string())?;
            let eng = SeqEngine::new(m);
            let mut terms: Vec<(i64, Rat)> = Vec::new();
            for r in from..=to {
                let v = eng.seq_term(&id, r).map_err(|e| e.to_string())?;
                terms.push((r, v));
            }
            match format {
                Format::Text => {
                    for (r, v) in &terms {
                        println!("{r}\t{v}");
                    }
                }
                Format::Json => println!("{}", seq_json(m, j, &family, from, to, &terms)),
                Format::Csv => {
                    println!("r,num,den");
                    for (r, v) in &terms {
                        println!("{r},{},{}", v.numer(), v.denom());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { appendix, m } => {
            let (r_lo, r_hi) = match appendix.as_str() {
                "pos" => (1i64, 10i64),
                "neg" => (-8i64, 1i64),
                other => return Err(format!("unknown appendix table `{other}` (pos|neg)")),
            };
            let ms: Vec<u32> = match m {
                Some(mm) if (1..=5).contains(&mm) => vec![mm],
                Some(mm) => return Err(format!("appendix tables cover m = 1..5, got {mm}")),
                None => (1..=5).collect(),
            };
            let mut csv_rows = Vec::new();
            let mut json_rows = Vec::new();
            for mm in &ms {
                let eng = SeqEngine::new(*mm);
                if matches!(format, Format::Text) && ms.len() > 1 {
                    println!("# m={mm}");
                }
                for j in 1..=*mm {
                    let id = SeqId::new(SeqFamily::F, *mm, j).map_err(|e| e.to_string())?;
                    let mut vals = Vec::new();
                    for r in r_lo..=r_hi {
                        let v = eng.numerator(&id, r).map_err(|e| e.to_string())?;
                        vals.push(v.to_string());
                    }
                    match format {
                        Format::Text => println!("{}", vals.join(" ")),
                        Format::Csv => csv_rows.push(format!("{mm},{j},{}", vals.join(","))),
                        Format::Json => json_rows.push(format!(
                            "{{\"m\":{mm},\"j\":{j},\"values\":[{}]}}",
                            vals.iter().map(|v| format!("\"{v}\"")).collect::<Vec<_>>().join(",")
                        )),
                    }
                }
            }
            match format {
                Format::Csv => {
                    println!("m,j,{}", (r_lo..=r_hi).map(|r| format!("r{r}")).collect::<Vec<_>>().join(","));
                    for row in csv_rows {
                        println!("{row}");
                    }
                }
                Format::Json => println!(
                    "{{\"command\":\"table\",\"appendix\":\"{}\",\"rows\":[{}]}}",
                    json_escape(&appendix),
                    json_rows.join(",")
                ),
                Format::Text => {}
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Convergents { m, r, digits } => {
            if m < 1 {
                return Err("need m >= 1".into());
            }
            let prec = default_prec();
            let eng = SeqEngine::new(m);
            let psi = psi_vector(&eng, r).map_err(|e| e.to_string())?;
            let phi = phi_vector(m, prec);
            let dist = euclid_error(&eng, r, prec).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    for (u, c) in psi.components.iter().enumerate() {
                        println!("psi[{}] = {c}", u + 1);
                    }
                    for (u, p) in phi.components.iter().enumerate() {
                        println!("phi[{}] = {} (err <= 2^{})", u + 1, p.to_decimal(digits), err_exponent(p));
                    }
                    println!(
                        "|psi - phi| <= {} (err <= 2^{})",
                        rat_to_decimal(&dist.abs_upper(), digits),
                        err_exponent(&dist)
                    );
                    let cf: Vec<String> = cf_expand(&psi.components[0]).iter().map(|t| t.to_string()).collect();
                    println!("cf(psi[1]) = [{}]", cf.join(", "));
                }
                Format::Json => {
                    let psis: Vec<String> = psi.components.iter().map(rat_json).collect();
                    let phis: Vec<String> = phi.components.iter().map(|p| appreal_json(p, digits)).collect();
                    println!(
                        "{{\"command\":\"convergents\",\"m\":{m},\"r\":{r},\"psi\":[{}],\"phi\":[{}],\"distance_upper\":\"{}\"}}",
                        psis.join(","),
                        phis.join(","),
                        rat_to_decimal(&dist.abs_upper(), digits)
                    );
                }
                Format::Csv => {
                    println!("component,psi_num,psi_den,phi_value");
                    for (u, (c, p)) in psi.components.iter().zip(&phi.components).enumerate() {
                        println!("{},{},{},{}", u + 1, c.numer(), c.denom(), p.to_decimal(digits));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Polys { family, index } => {
            let tag = poly_tag(&family)?;
            let poly = family_poly(FamilyId::new(tag, index)).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{poly}"),
                Format::Json => {
                    let coeffs: Vec<String> = poly.coeffs().iter().map(rat_json).collect();
                    println!(
                        "{{\"command\":\"polys\",\"family\":\"{}\",\"index\":{index},\"coeffs\":[{}]}}",
                        json_escape(&family),
                        coeffs.join(",")
                    );
                }
                Format::Csv => {
                    println!("power,num,den");
                    for (k, c) in poly.coeffs().iter().enumerate() {
                        println!("{k},{},{}", c.numer(), c.denom());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fleck { n_rows, a, modulus } => {
            if modulus < 1 {
                return Err("need --mod >= 1".into());
            }
            let v = fleck(n_rows, a, modulus);
            match format {
                Format::Text => println!("{v}"),
                Format::Json => println!(
                    "{{\"command\":\"fleck\",\"N\":{n_rows},\"a\":{a},\"mod\":{modulus},\"value\":\"{v}\"}}"
                ),
                Format::Csv => {
                    println!("N,a,mod,value");
                    println!("{n_rows},{a},{modulus},{v}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max, prec, verbose } => {
            let prec = prec.unwrap_or_else(default_prec);
            let reports = suites::run_suite(&suite, max, prec)?;
            let mut all_ok = true;
            let mut first_fail: Option<String> = None;
            match format {
                Format::Text => {
                    for rep in &reports {
                        let ok = print_report_text(rep, verbose);
                        if !ok && first_fail.is_none() {
                            first_fail = rep.first_failure().map(|c| c.name.clone());
                        }
                        all_ok &= ok;
                    }
                    let (p, f, n) = total_counts(&reports);
                    println!("== suite {suite}: {p} passed, {f} failed, {n} notes ==");
                    if let Some(tag) = &first_fail {
                        println!("first failing identity: {tag}");
                    }
                }
                Format::Json => {
                    let body: Vec<String> = reports.iter().map(report_json).collect();
                    for rep in &reports {
                        if !rep.passed() && first_fail.is_none() {
                            first_fail = rep.first_failure().map(|c| c.name.clone());
                        }
                        all_ok &= rep.passed();
                    }
                    println!(
                        "{{\"command\":\"verify\",\"suite\":\"{}\",\"ok\":{},\"first_failure\":{},\"reports\":[{}]}}",
                        json_escape(&suite),
                        all_ok,
                        first_fail
                            .as_ref()
                            .map(|t| format!("\"{}\"", json_escape(t)))
                            .unwrap_or_else(|| "null".into()),
                        body.join(",")
                    );
                }
                Format::Csv => {
                    println!("suite,pass,fail,note");
                    for rep in &reports {
                        let (p, f, n) = rep.counts();
                        println!("{},{p},{f},{n}", rep.suite);
                        all_ok &= rep.passed();
                    }
                }
            }
            Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Mellin { family, m } => {
            let fam = match family.as_str() {
                "P" | "p" => PQ::P,
                "Q" | "q" => PQ::Q,
                other => return Err(format!("unknown family `{other}` (P|Q)")),
            };
            let mp = mellin_poly(fam, m);
            let sign = mellin_sign(&mp).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    println!("{}", mp.poly);
                    println!("functional equation sign: {sign:+}");
                    println!("content factor: {}", mp.normalization);
                }
                Format::Json => {
                    let coeffs: Vec<String> = mp.poly.coeffs().iter().map(rat_json).collect();
                    println!(
                        "{{\"command\":\"mellin\",\"family\":\"{}\",\"m\":{m},\"sign\":{sign},\"coeffs\":[{}],\"content\":{}}}",
                        json_escape(&family),
                        coeffs.join(","),
                        rat_json(&mp.normalization)
                    );
                }
                Format::Csv => {
                    println!("power,num,den");
                    for (k, c) in mp.poly.coeffs().iter().enumerate() {
                        println!("{k},{},{}", c.numer(), c.denom());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Minors { m, i, count, family } => {
            if i < 1 || i > m {
                return Err("need 1 <= i <= m".into());
            }
            let fam = match seq_family(&family)? {
                f @ (SeqFamily::F | SeqFamily::G) => f,
                _ => return Err("minor sequences are defined over F or G".into()),
            };
            let eng = SeqEngine::new(m);
            let bound = num_traits_binom(m as u64, i as u64);
            let need = (2 * bound + 8).max(count);
            let seq = minor_seq(&eng, i, fam, 1, need);
            let fitted = fit_recurrence(&seq.values, bound).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    for (idx, v) in seq.values.iter().take(count).enumerate() {
                        println!("D[{}] = {v}", idx as i64 + seq.start);
                    }
                    println!("recurrence characteristic polynomial: {fitted}");
                }
                Format::Json => {
                    let vals: Vec<String> = seq.values.iter().take(count).map(rat_json).collect();
                    let coeffs: Vec<String> = fitted.coeffs().iter().map(rat_json).collect();
                    println!(
                        "{{\"command\":\"minors\",\"m\":{m},\"i\":{i},\"start\":{},\"values\":[{}],\"char_poly\":[{}]}}",
                        seq.start,
                        vals.join(","),
                        coeffs.join(",")
                    );
                }
                Format::Csv => {
                    println!("l,num,den");
                    for (idx, v) in seq.values.iter().take(count).enumerate() {
                        println!("{},{},{}", idx as i64 + seq.start, v.numer(), v.denom());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn num_traits_binom(n: u64, k: u64) -> usize {
    let mut acc: u64 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) / (i + 1);
    }
    acc as usize
}

fn seq_json(m: u32, j: u32, family: &str, from: i64, to: i64, terms: &[(i64, Rat)]) -> String {
    let body: Vec<String> = terms
        .iter()
        .map(|(r, v)| format!("{{\"r\":{r},\"num\":\"{}\",\"den\":\"{}\"}}", v.numer(), v.denom()))
        .collect();
    format!(
        "{{\"command\":\"seq\",\"m\":{m},\"j\":{j},\"family\":\"{}\",\"from\":{from},\"to\":{to},\"terms\":[{}]}}",
        json_escape(family),
        body.join(",")
    )
}

fn total_counts(reports: &[Report]) -> (usize, usize, usize) {
    let mut t = (0, 0, 0);
    for r in reports {
        let (p, f, n) = r.counts();
        t.0 += p;
        t.1 += f;
        t.2 += n;
    }
    t
}

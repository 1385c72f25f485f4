//! Deterministic text/JSON/CSV rendering.
//!
//! Rationals are always serialized as decimal strings of numerator and
//! denominator, never as floats; JSON keys are emitted in a fixed canonical
//! order so that byte-identical round trips are possible.

use interlace_core::appreal::AppReal;
use interlace_core::{Rat, Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (expected text|json|csv)")),
        }
    }
}

pub fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// Canonical rational encoding: {"num":"...","den":"..."}.
pub fn rat_json(r: &Rat) -> String {
    format!("{{\"num\":\"{}\",\"den\":\"{}\"}}", r.numer(), r.denom())
}

/// AppReal encoding: centre value as a decimal string plus the binary
/// exponent e with err <= 2^e.
pub fn appreal_json(x: &AppReal, digits: u32) -> String {
    format!(
        "{{\"value\":\"{}\",\"err_exp\":{}}}",
        x.to_decimal(digits),
        err_exponent(x)
    )
}

/// Smallest e (>= -16384) with err <= 2^e.
pub fn err_exponent(x: &AppReal) -> i64 {
    let mut e: i64 = 64;
    while e > -16384 {
        if x.err_le_2pow(e - 1) {
            e -= 1;
        } else {
            break;
        }
    }
    e
}


/// One pass/fail/note line per check, streamed; returns overall success.
pub fn print_report_text(rep: &Report, verbose_pass: bool) -> bool {
    let (pass, fail, note) = rep.counts();
    for c in &rep.checks {
        match c.status {
            Status::Pass => {
                if verbose_pass {
                    println!("PASS {}", c.name);
                }
            }
            Status::Fail => println!("FAIL {} : {}", c.name, c.detail),
            Status::Note => println!("NOTE {} : {}", c.name, c.detail),
        }
    }
    println!(
        "[{}] {} checks: {} passed, {} failed, {} notes",
        rep.suite,
        pass + fail + note,
        pass,
        fail,
        note
    );
    rep.passed()
}

pub fn report_json(rep: &Report) -> String {
    let (pass, fail, note) = rep.counts();
    let mut fails = Vec::new();
    let mut notes = Vec::new();
    for c in &rep.checks {
        match c.status {
            Status::Fail => fails.push(format!(
                "{{\"name\":\"{}\",\"detail\":\"{}\"}}",
                json_escape(&c.name),
                json_escape(&c.detail)
            )),
            Status::Note => notes.push(format!(
                "{{\"name\":\"{}\",\"detail\":\"{}\"}}",
                json_escape(&c.name),
                json_escape(&c.detail)
            )),
            Status::Pass => {}
        }
    }
    format!(
        "{{\"suite\":\"{}\",\"pass\":{},\"fail\":{},\"note\":{},\"failures\":[{}],\"notes\":[{}]}}",
        json_escape(&rep.suite),
        pass,
        fail,
        note,
        fails.join(","),
        notes.join(",")
    )
}

//! Command-line front end: `compute`, `verify` and `batch`.
//!
//! Exit codes: 0 success, 1 a check or batch entry failed, 2 usage or input error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::braid::BraidWord;
use crate::burau::{alexander_det, alexander_trace, AlexanderWeight, SmallR};
use crate::error::Error;
use crate::links_gould::{lg_invariant, LgFlavor, LgValue};
use crate::scalar::{equal_up_to_unit, normalize_unit, Terms, Unit};
use crate::verify::{run_check, run_suite, CheckParams, CheckReport};

#[derive(Parser, Debug)]
#[command(name = "lgknot", version, about = "Alexander and Links–Gould invariants of closed braids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate invariants of one braid.
    Compute {
        /// Signed generator indices, e.g. "1 -2 1".
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: usize,
        #[arg(long, value_enum, default_value_t = Invariant::All)]
        invariant: Invariant,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Print values as computed instead of unit-normalized.
        #[arg(long)]
        raw: bool,
    },
    /// Run a named check, or `suite` for all of them; one JSON report per line.
    Verify {
        check: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        max_strands: Option<usize>,
        #[arg(long)]
        max_length: Option<usize>,
        /// Check this braid only (requires --strands).
        #[arg(long, allow_hyphen_values = true, requires = "strands")]
        braid: Option<String>,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Evaluate a knot table (`name; strands; w1 w2 ...` per line) to JSON lines.
    Batch {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = Invariant::All)]
        invariant: Invariant,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Invariant {
    AlexanderDet,
    AlexanderTrace,
    Lg21,
    Lg21Special,
    Lg31Special,
    All,
}

impl Invariant {
    const SINGLE: [Invariant; 5] =
        [Self::AlexanderDet, Self::AlexanderTrace, Self::Lg21, Self::Lg21Special, Self::Lg31Special];

    pub fn key(self) -> &'static str {
        match self {
            Self::AlexanderDet => "alexander_det",
            Self::AlexanderTrace => "alexander_trace",
            Self::Lg21 => "lg21",
            Self::Lg21Special => "lg21_special",
            Self::Lg31Special => "lg31_special",
            Self::All => "all",
        }
    }

    fn expand(self) -> Vec<Invariant> {
        match self {
            Self::All => Self::SINGLE.to_vec(),
            one => vec![one],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// One computed invariant. `unit` is what was applied to normalize it.
#[derive(Clone, Debug)]
pub struct Computed {
    pub invariant: Invariant,
    pub value: LgValue,
    pub unit: Option<Unit>,
}

impl Computed {
    pub fn to_json(&self) -> Value {
        let terms = match &self.value {
            LgValue::OneVar(p) => serde_json::to_value(p.to_records()),
            LgValue::TwoVar(x) => serde_json::to_value(x.to_records()),
        }
        .expect("term records serialize");
        let mut obj = json!({ "text": self.value.to_string(), "terms": terms });
        if let Some(u) = self.unit {
            obj["unit"] = json!(u);
        }
        obj
    }
}

fn evaluate(b: &BraidWord, which: Invariant) -> Result<LgValue, Error> {
    Ok(match which {
        Invariant::AlexanderDet => LgValue::OneVar(alexander_det(b)?),
        Invariant::AlexanderTrace => LgValue::OneVar(alexander_trace(b, SmallR::R1, AlexanderWeight::H, true)?),
        Invariant::Lg21 => lg_invariant(b, LgFlavor::Lg21TwoVar)?,
        Invariant::Lg21Special => lg_invariant(b, LgFlavor::Lg21Special)?,
        Invariant::Lg31Special => lg_invariant(b, LgFlavor::Lg31Special)?,
        Invariant::All => unreachable!("expanded before evaluation"),
    })
}

/// Evaluates the selected invariants; one-variable values are normalized
/// to lowest exponent 0 and positive lowest coefficient unless `raw`.
pub fn compute(b: &BraidWord, selector: Invariant, raw: bool) -> Result<Vec<Computed>, Error> {
    selector
        .expand()
        .into_iter()
        .map(|inv| {
            let value = evaluate(b, inv)?;
            Ok(match value {
                LgValue::OneVar(p) if !raw => {
                    let (q, u) = normalize_unit(&p);
                    Computed { invariant: inv, value: LgValue::OneVar(q), unit: Some(u) }
                }
                v => Computed { invariant: inv, value: v, unit: None },
            })
        })
        .collect()
}

/// Units relating the main identities, when all their inputs were computed:
/// `lg21_special = u·Δ²` and `lg31_special = u·Δ³`.
fn main_units(values: &[Computed]) -> Map<String, Value> {
    let get = |inv: Invariant| values.iter().find(|c| c.invariant == inv).and_then(|c| c.value.as_one_var().cloned());
    let mut out = Map::new();
    let Some(d) = get(Invariant::AlexanderDet) else {
        return out;
    };
    let d2 = &d * &d;
    let d3 = &d2 * &d;
    for (inv, power, key) in [(Invariant::Lg21Special, &d2, "main21_unit"), (Invariant::Lg31Special, &d3, "main31_unit")] {
        if let Some(v) = get(inv) {
            out.insert(key.into(), serde_json::to_value(equal_up_to_unit(&v, power)).expect("unit serializes"));
        }
    }
    out
}

fn invariants_json(values: &[Computed]) -> Value {
    let mut m = Map::new();
    for c in values {
        m.insert(c.invariant.key().into(), c.to_json());
    }
    Value::Object(m)
}

/// One parsed knot-table line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub name: String,
    pub strands: usize,
    pub word: Vec<i64>,
}

impl TableEntry {
    pub fn braid(&self) -> Result<BraidWord, Error> {
        BraidWord::from_signed(self.strands, &self.word)
    }
}

/// Parses `name; strands; w1 w2 ...`; `None` for blank and `#` lines.
pub fn parse_table_line(line: &str) -> Option<Result<TableEntry, Error>> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return None;
    }
    let fields: Vec<&str> = line.split(';').map(str::trim).collect();
    Some((|| {
        let [name, strands, word] = fields[..] else {
            return Err(Error::Format(format!("expected 3 ';'-separated fields, got {}", fields.len())));
        };
        let strands: usize =
            strands.parse().map_err(|_| Error::Format(format!("bad strand count {strands:?} for {name}")))?;
        let braid = BraidWord::parse(word, strands)?;
        Ok(TableEntry { name: name.to_string(), strands, word: braid.to_signed() })
    })())
}

/// JSON record for one table line, and whether it succeeded.
fn batch_record(lineno: usize, line: &str, selector: Invariant) -> (Value, bool) {
    let entry = match parse_table_line(line).expect("comment lines filtered") {
        Ok(e) => e,
        Err(e) => {
            let name = line.split(';').next().unwrap_or("").trim();
            return (json!({ "line": lineno, "name": name, "error": e.to_string() }), false);
        }
    };
    let mut obj = json!({ "name": entry.name, "strands": entry.strands, "word": entry.word });
    match entry.braid().and_then(|b| compute(&b, selector, false)) {
        Ok(values) => {
            obj["invariants"] = invariants_json(&values);
            for (k, v) in main_units(&values) {
                obj[k] = v;
            }
            (obj, true)
        }
        Err(e) => {
            obj["error"] = json!(e.to_string());
            (obj, false)
        }
    }
}

/// Processes a whole table; records come back in input order.
pub fn run_batch(text: &str, selector: Invariant) -> Vec<(Value, bool)> {
    let lines: Vec<(usize, &str)> =
        text.lines().enumerate().filter(|(_, l)| parse_table_line(l).is_some()).map(|(i, l)| (i + 1, l)).collect();
    lines.par_iter().map(|&(no, l)| batch_record(no, l, selector)).collect()
}

fn verify_reports(check: &str, params: &CheckParams) -> Result<Vec<CheckReport>, Error> {
    if check == "suite" {
        run_suite(params)
    } else {
        Ok(vec![run_check(check, params)?])
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    match cli.command {
        Command::Compute { braid, strands, invariant, format, raw } => {
            let b = BraidWord::parse(&braid, strands)?;
            let values = compute(&b, invariant, raw)?;
            match format {
                Format::Text if values.len() == 1 => writeln!(out, "{}", values[0].value)?,
                Format::Text => {
                    for c in &values {
                        writeln!(out, "{}: {}", c.invariant.key(), c.value)?;
                    }
                }
                Format::Json => {
                    let mut obj = json!({ "strands": strands, "word": b.to_signed(), "invariants": invariants_json(&values) });
                    for (k, v) in main_units(&values) {
                        obj[k] = v;
                    }
                    writeln!(out, "{obj}")?;
                }
            }
            Ok(0)
        }
        Command::Verify { check, seed, count, max_strands, max_length, braid, strands } => {
            let braid = match (braid, strands) {
                (Some(w), Some(n)) => Some(BraidWord::parse(&w, n)?),
                _ => None,
            };
            let params = CheckParams { max_strands, max_length, seed, count, braid, skip_corpus: false };
            let reports = verify_reports(&check, &params)?;
            let mut failed = 0;
            for r in &reports {
                writeln!(out, "{}", serde_json::to_string(r).expect("report serializes"))?;
                failed += usize::from(!r.passed());
            }
            if failed > 0 {
                writeln!(err, "{failed} of {} checks failed", reports.len())?;
            }
            Ok(i32::from(failed > 0))
        }
        Command::Batch { input, output, invariant } => {
            let text = fs::read_to_string(&input)?;
            let records = run_batch(&text, invariant);
            let mut buf = String::new();
            for (v, _) in &records {
                buf.push_str(&v.to_string());
                buf.push('\n');
            }
            fs::write(&output, buf)?;
            let failed = records.iter().filter(|(_, ok)| !ok).count();
            let ok = records.len() - failed;
            if failed == 0 {
                writeln!(out, "{ok} ok")?;
            } else {
                writeln!(out, "{ok} ok, {failed} failed")?;
            }
            Ok(i32::from(failed > 0))
        }
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("lgknot").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_trefoil_alexander() {
        let (code, out, _) = run_str(&["compute", "--braid", "1 1 1", "--strands", "2", "--invariant", "alexander-det"]);
        assert_eq!((code, out.trim()), (0, "1 - t + t^2"));
    }

    #[test]
    fn compute_unknot_all_one() {
        let (code, out, _) = run_str(&["compute", "--braid", "", "--strands", "1", "--invariant", "all"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 5);
        assert!(out.lines().all(|l| l.ends_with(": 1")), "{out}");
    }

    #[test]
    fn compute_bad_generator_is_usage_error() {
        let (code, _, err) = run_str(&["compute", "--braid", "5", "--strands", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("out of range"));
    }

    #[test]
    fn negative_letters_parse() {
        let (code, out, _) = run_str(&["compute", "--braid", "-1 -1 -1", "--strands", "2", "--invariant", "alexander-det"]);
        assert_eq!((code, out.trim()), (0, "1 - t + t^2"));
    }

    #[test]
    fn verify_codes() {
        let (code, out, _) = run_str(&["verify", "main21", "--braid", "1 1 1", "--strands", "2"]);
        assert_eq!(code, 0);
        let report: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(report["outcome"], "pass");
        assert!(report["units"][0]["sign"].is_number());
        assert_eq!(run_str(&["verify", "nosuchcheck"]).0, 2);
    }

    #[test]
    fn table_lines() {
        assert!(parse_table_line("# comment").is_none());
        assert!(parse_table_line("   ").is_none());
        let e = parse_table_line("3_1; 2; 1 1 1").unwrap().unwrap();
        assert_eq!(e, TableEntry { name: "3_1".into(), strands: 2, word: vec![1, 1, 1] });
        assert!(parse_table_line("broken line").unwrap().is_err());
        assert!(parse_table_line("x; two; 1").unwrap().is_err());
    }

    #[test]
    fn batch_trefoil_units() {
        let recs = run_batch("3_1; 2; 1 1 1\n", Invariant::All);
        assert_eq!(recs.len(), 1);
        let (v, ok) = &recs[0];
        assert!(ok);
        assert_eq!(v["main21_unit"], json!({ "sign": 1, "shift": 0 }));
        assert!(v["main31_unit"].is_object());
    }
}

//! Command-line front end. Every command prints one JSON document (or a
//! plain-text table for `table-repro --format table`).
//!
//! Exit codes: 0 success, 2 input error, 3 criterion/oracle disagreement.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::construct::{self, SearchMode};
use crate::cyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::field::{field_of_order, FieldRef};
use crate::lincode::{Form, LinearCode};
use crate::poly::{factor_xm_minus_1, Poly};
use crate::qc::QcCode;

/// Best LCD double circulant distances over GF(2) at odd m.
pub const DC_TABLE: [(usize, usize); 8] = [
    (3, 1),
    (5, 3),
    (7, 4),
    (9, 3),
    (11, 6),
    (13, 7),
    (15, 5),
    (17, 8),
];

#[derive(Parser, Debug)]
#[command(
    name = "qccd",
    version,
    about = "LCD and quasi-cyclic complementary dual codes"
)]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Skip brute-force cross-checks.
    #[arg(long, global = true)]
    pub no_oracle: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor x^m - 1 over GF(q).
    Factor {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
    },
    /// LCD and reversibility checks for the cyclic code <g>.
    CyclicCheck {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: usize,
        /// Coefficients, constant term first, e.g. "1,1,0,1".
        #[arg(long)]
        g: String,
        #[arg(long, default_value = "euclidean")]
        form: Form,
    },
    /// QCCD test of a QC code file, or of <(1, a)> given --q --m --a.
    QcCheck {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        a: Option<String>,
    },
    /// Constituent codes of a QC code file.
    QcConstituents {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Jensen bound of a QC code file.
    QcJensen {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Best LCD double circulant code <(1, a)> of length 2m.
    DcSearch {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        #[arg(long, conflicts_with = "trials")]
        exhaustive: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<u64>,
    },
    /// Hermitian LCD extension [I:P:P] / [I:P:aP] of a code file.
    ExtendHermitian {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Descent of a code over GF(q^ell) to GF(q) by a self-dual basis.
    Descend {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        q: u64,
    },
    /// Reproduce the double circulant distance table.
    TableRepro {
        #[arg(default_value = "dc")]
        which: String,
        #[arg(long, default_value_t = 13)]
        m_max: usize,
    },
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) if !e.use_stderr() => Outcome {
            code: 0,
            output: e.to_string(),
        },
        Err(e) => Outcome {
            code: 2,
            output: pretty(&json!({
                "error": "Usage",
                "message": e.to_string().trim(),
            })),
        },
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let name = command_name(&cli.command);
    let start = Instant::now();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.workers {
        pool = pool.num_threads(w.max(1));
    }
    let result = match pool.build() {
        Ok(pool) => pool.install(|| dispatch(cli)),
        Err(e) => Err(Error::Io(e.to_string())),
    };
    let elapsed_ms = start.elapsed().as_millis() as u64;
    match result {
        Ok(Rendered::Text(t)) => Outcome { code: 0, output: t },
        Ok(Rendered::Json(mut v)) => {
            let disagree = v.get("oracle_agreement") == Some(&Value::Bool(false));
            v["command"] = json!(name);
            v["elapsed_ms"] = json!(elapsed_ms);
            Outcome {
                code: if disagree { 3 } else { 0 },
                output: pretty(&v),
            }
        }
        Err(e) => Outcome {
            code: if matches!(e, Error::OracleDisagreement(_)) {
                3
            } else {
                2
            },
            output: pretty(&json!({
                "command": name,
                "error": e.name(),
                "message": e.to_string(),
                "elapsed_ms": elapsed_ms,
            })),
        },
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Factor { .. } => "factor",
        Command::CyclicCheck { .. } => "cyclic-check",
        Command::QcCheck { .. } => "qc-check",
        Command::QcConstituents { .. } => "qc-constituents",
        Command::QcJensen { .. } => "qc-jensen",
        Command::DcSearch { .. } => "dc-search",
        Command::ExtendHermitian { .. } => "extend-hermitian",
        Command::Descend { .. } => "descend",
        Command::TableRepro { .. } => "table-repro",
    }
}

enum Rendered {
    Json(Value),
    Text(String),
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Minimum distance when it can be enumerated, otherwise null.
fn distance(code: &LinearCode) -> Result<Value> {
    if code.is_zero_code() {
        return Ok(Value::Null);
    }
    match code.min_distance() {
        Ok(d) => Ok(json!(d)),
        Err(Error::TooLargeToEnumerate(_)) => Ok(Value::Null),
        Err(e) => Err(e),
    }
}

fn params(code: &LinearCode) -> Result<Value> {
    Ok(json!({
        "q": code.field().order(),
        "n": code.len(),
        "k": code.k(),
        "d": distance(code)?,
    }))
}

fn dispatch(cli: &Cli) -> Result<Rendered> {
    let oracle = !cli.no_oracle;
    let v = match &cli.command {
        Command::Factor { q, m } => factor(*q, *m)?,
        Command::CyclicCheck { q, ell, g, form } => cyclic_check(*q, *ell, g, *form, oracle)?,
        Command::QcCheck { input, q, m, a } => {
            let (code, dc) = match (input, q, m, a) {
                (Some(path), None, None, None) => (QcCode::parse(&read(path)?)?, None),
                (None, Some(q), Some(m), Some(a)) => {
                    let base = field_of_order(*q)?;
                    let a = Poly::parse(&base, a)?;
                    (construct::double_circulant(&base, *m, &a)?, Some(a))
                }
                _ => {
                    return Err(Error::Parse(
                        "qc-check takes either --in FILE or --q --m --a".into(),
                    ))
                }
            };
            qc_check(&code, dc, oracle)?
        }
        Command::QcConstituents { input } => qc_constituents(&QcCode::parse(&read(input)?)?)?,
        Command::QcJensen { input } => qc_jensen(&QcCode::parse(&read(input)?)?, oracle)?,
        Command::DcSearch {
            q,
            m,
            exhaustive: _,
            seed,
            trials,
        } => {
            let mode = match trials {
                Some(t) => SearchMode::Random {
                    seed: *seed,
                    trials: *t,
                },
                None => SearchMode::Exhaustive,
            };
            dc_search(*q, *m, mode, oracle)?
        }
        Command::ExtendHermitian { input } => {
            extend_hermitian(&LinearCode::parse(&read(input)?)?, oracle)?
        }
        Command::Descend { input, q } => descend(&LinearCode::parse(&read(input)?)?, *q, oracle)?,
        Command::TableRepro { which, m_max } => {
            if which != "dc" {
                return Err(Error::Parse(format!("unknown table '{which}'")));
            }
            let v = table_repro(*m_max)?;
            if cli.format == OutputFormat::Table {
                return Ok(Rendered::Text(render_table(&v)));
            }
            v
        }
    };
    Ok(Rendered::Json(v))
}

fn factor(q: u64, m: usize) -> Result<Value> {
    let base = field_of_order(q)?;
    let p = factor_xm_minus_1(&base, m)?;
    let self_recip: Vec<Value> = p
        .self_recip
        .iter()
        .enumerate()
        .map(|(i, g)| {
            json!({
                "label": format!("G{}", i + 1),
                "poly": g.poly,
                "display": g.poly.to_string(),
                "degree": g.degree(),
                "exponent": g.exponent,
                "coset": g.coset,
            })
        })
        .collect();
    let pairs: Vec<Value> = p
        .pairs
        .iter()
        .enumerate()
        .map(|(j, pr)| {
            json!({
                "label": format!("H{}", j + 1),
                "h": pr.h,
                "h_star": pr.h_star,
                "display": [pr.h.to_string(), pr.h_star.to_string()],
                "degree": pr.degree(),
                "exponent": pr.exponent,
                "coset": pr.coset,
                "star_coset": pr.star_coset,
            })
        })
        .collect();
    Ok(json!({
        "q": q,
        "m": m,
        "splitting_field_order": p.splitting().order(),
        "s": p.s(),
        "t": p.t(),
        "self_reciprocal": self_recip,
        "pairs": pairs,
    }))
}

fn cyclic_check(q: u64, ell: usize, g: &str, form: Form, oracle: bool) -> Result<Value> {
    let field = field_of_order(q)?;
    let c = CyclicCode::new(&field, ell, &Poly::parse(&field, g)?)?;
    let lc = c.linear_code();
    let lcd = c.is_lcd(form)?;
    let reversible = c.is_reversible()?;
    let conjugate_reversible = if field.is_square_order() {
        Some(c.is_conjugate_reversible()?)
    } else {
        None
    };
    let mut v = json!({
        "generator": c.generator_poly(),
        "check": c.check_poly(),
        "form": form,
        "params": params(&lc)?,
        "lcd": lcd,
        "verdict": lcd,
        "reversible": reversible,
        "conjugate_reversible": conjugate_reversible,
        "equivalence_applicable": crate::util::gcd(ell as u64, q) == 1,
    });
    v["dmin"] = v["params"]["d"].clone();
    if oracle {
        let hull = lc.hull_dim(form)?;
        v["hull_dim"] = json!(hull);
        v["oracle_agreement"] = json!((hull == 0) == lcd);
    }
    Ok(v)
}

fn qc_check(code: &QcCode, dc: Option<Poly>, oracle: bool) -> Result<Value> {
    let cert = code.is_qccd(oracle)?;
    let expanded = code.expand();
    let mut v = json!({
        "q": code.base().order(),
        "m": code.m(),
        "ell": code.ell(),
        "params": params(&expanded)?,
        "verdict": cert.verdict,
        "per_slot": cert.slots,
        "hull_dim": cert.oracle_hull_dim,
        "oracle_agreement": cert.oracle_agreement,
    });
    let a = dc.or_else(|| match code.gens() {
        [g] if code.ell() == 2 && g[0] == Poly::one(code.base()) => Some(g[1].clone()),
        _ => None,
    });
    if let Some(a) = a {
        let crit = construct::dc_is_lcd(code.base(), code.m(), &a)?;
        v["dc_criterion"] = json!(crit);
        if crit != cert.verdict {
            v["oracle_agreement"] = json!(false);
        }
    }
    Ok(v)
}

fn qc_constituents(code: &QcCode) -> Result<Value> {
    let set = code.constituents()?;
    Ok(json!({
        "q": code.base().order(),
        "m": code.m(),
        "ell": code.ell(),
        "splitting_field_order": set.profile.splitting().order(),
        "constituents": set.info(),
        "base_dimension": set.base_dimension(),
        "expanded_dimension": code.expand().k(),
        "oracle_agreement": set.base_dimension() == code.expand().k(),
    }))
}

fn qc_jensen(code: &QcCode, oracle: bool) -> Result<Value> {
    let j = code.jensen_bound()?;
    let mut v = json!({
        "q": code.base().order(),
        "m": code.m(),
        "ell": code.ell(),
        "bound": j.bound,
        "terms": j.terms,
    });
    if oracle {
        let d = distance(&code.expand())?;
        v["d"] = d.clone();
        if let Some(d) = d.as_u64() {
            v["oracle_agreement"] = json!(j.bound as u64 <= d);
        }
    }
    Ok(v)
}

fn dc_search(q: u64, m: usize, mode: SearchMode, oracle: bool) -> Result<Value> {
    let base = field_of_order(q)?;
    let report = construct::dc_search(&base, m, mode)?;
    let mut v = serde_json::to_value(&report).expect("serializable");
    if let (true, Some(best)) = (oracle, &report.best) {
        let hull = construct::double_circulant(&base, m, &best.a)?
            .expand()
            .hull_dim(Form::Euclidean)?;
        v["oracle_agreement"] = json!(hull == 0);
    }
    Ok(v)
}

fn extend_hermitian(code: &LinearCode, oracle: bool) -> Result<Value> {
    let sys = code.systematic_form();
    let out = construct::hermitian_lcd_extend(&sys.code)?;
    let j = code.field().degree() / 2;
    let mut v = json!({
        "input": params(code)?,
        "permutation": sys.perm,
        "output": params(&out)?,
        "gram_identity": construct::gram_is_identity(&out, j),
        "code": out.to_text(),
    });
    if oracle {
        let hull = out.hull_dim(Form::Hermitian)?;
        v["hull_dim"] = json!(hull);
        let dist_ok = match (v["input"]["d"].as_u64(), v["output"]["d"].as_u64()) {
            (Some(a), Some(b)) => b >= a,
            _ => true,
        };
        v["oracle_agreement"] = json!(hull == 0 && dist_ok);
    }
    v["verdict"] = v["gram_identity"].clone();
    Ok(v)
}

fn descend(code: &LinearCode, q: u64, oracle: bool) -> Result<Value> {
    let big: &FieldRef = code.field();
    let sub = field_of_order(q)?;
    if sub.characteristic() != big.characteristic() || !big.degree().is_multiple_of(sub.degree()) {
        return Err(Error::NotASubfield {
            sub: sub.order(),
            big: big.order(),
        });
    }
    let ell = (big.degree() / sub.degree()) as usize;
    let basis = construct::self_dual_basis(q, ell)?;
    let out = construct::expand_subfield(code, &basis)?;
    let out_lcd = out.is_lcd(Form::Euclidean)?;
    let mut v = json!({
        "basis": basis.basis.iter().map(|x| x.value()).collect::<Vec<_>>(),
        "input": params(code)?,
        "output": params(&out)?,
        "lcd": out_lcd,
        "verdict": out_lcd,
        "code": out.to_text(),
    });
    if oracle {
        let in_lcd = code.is_lcd(Form::Euclidean)?;
        v["input_lcd"] = json!(in_lcd);
        v["oracle_agreement"] = json!(in_lcd == out_lcd);
    }
    Ok(v)
}

fn table_repro(m_max: usize) -> Result<Value> {
    let base = field_of_order(2)?;
    let mut rows = Vec::new();
    for m in (3..=m_max).step_by(2) {
        let report = construct::dc_search(&base, m, SearchMode::Exhaustive)?;
        let d = report.best.as_ref().map(|b| b.d);
        let expected = DC_TABLE.iter().find(|e| e.0 == m).map(|e| e.1);
        rows.push(json!({
            "m": m,
            "d": d,
            "expected": expected,
            "match": expected.map(|e| Some(e) == d),
            "best": report.best.as_ref().map(|b| &b.a),
            "lcd_count": report.lcd_count,
        }));
    }
    let all = rows.iter().all(|r| r["match"] != Value::Bool(false));
    Ok(json!({ "q": 2, "m_max": m_max, "rows": rows, "all_match": all }))
}

fn render_table(v: &Value) -> String {
    let rows = v["rows"].as_array().cloned().unwrap_or_default();
    let cell = |x: &Value| match x {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let mut out = String::new();
    let line = |label: &str, key: &str| {
        let cells: Vec<String> = rows
            .iter()
            .map(|r| format!("{:>4}", cell(&r[key])))
            .collect();
        format!("{label:<8}{}\n", cells.join(""))
    };
    out.push_str(&line("m", "m"));
    out.push_str(&line("d", "d"));
    out.push_str(&line("table", "expected"));
    let flags: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "{:>4}",
                match r["match"] {
                    Value::Bool(true) => "ok",
                    Value::Bool(false) => "XX",
                    _ => "-",
                }
            )
        })
        .collect();
    out.push_str(&format!("{:<8}{}\n", "match", flags.join("")));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, Value) {
        let mut full = vec!["qccd"];
        full.extend_from_slice(args);
        let o = run(full);
        (
            o.code,
            serde_json::from_str(&o.output).unwrap_or(Value::Null),
        )
    }

    #[test]
    fn factor_command() {
        let (code, v) = call(&["factor", "--q", "2", "--m", "7"]);
        assert_eq!(code, 0);
        assert_eq!((v["s"].as_u64(), v["t"].as_u64()), (Some(1), Some(1)));
        assert_eq!(v["pairs"][0]["degree"], 3);
        let (code, v) = call(&["factor", "--q", "6", "--m", "7"]);
        assert_eq!(code, 2);
        assert_eq!(v["error"], "NonPrimeCharacteristic");
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, v) = call(&["factor", "--q", "2"]);
        assert_eq!(code, 2);
        assert_eq!(v["error"], "Usage");
        let (code, v) = call(&["qc-check", "--q", "2"]);
        assert_eq!(code, 2);
        assert_eq!(v["error"], "Parse");
    }

    #[test]
    fn cyclic_and_dc_commands() {
        let (code, v) = call(&["cyclic-check", "--q", "2", "--ell", "7", "--g", "1,1"]);
        assert_eq!(code, 0);
        assert_eq!(v["lcd"], true);
        assert_eq!(v["oracle_agreement"], true);
        let (code, v) = call(&["dc-search", "--q", "2", "--m", "5", "--exhaustive"]);
        assert_eq!(code, 0);
        assert_eq!(v["best"]["d"], 3);
        let (code, v) = call(&["qc-check", "--q", "2", "--m", "5", "--a", "1,0,0,1"]);
        assert_eq!(code, 0);
        assert_eq!(v["verdict"], true);
        assert_eq!(v["dc_criterion"], true);
        assert_eq!(v["params"]["d"], 3);
    }

    #[test]
    fn workers_do_not_change_output() {
        let strip = |mut v: Value| {
            v["elapsed_ms"] = Value::Null;
            v
        };
        let args = [
            "dc-search",
            "--q",
            "2",
            "--m",
            "9",
            "--seed",
            "3",
            "--trials",
            "30",
        ];
        let (_, a) = call(&[&args[..], &["--workers", "1"]].concat());
        let (_, b) = call(&[&args[..], &["--workers", "3"]].concat());
        assert_eq!(strip(a), strip(b));
    }

    #[test]
    fn table_format() {
        let o = run(["qccd", "table-repro", "--m-max", "5", "--format", "table"]);
        assert_eq!(o.code, 0);
        assert!(o.output.starts_with("m          3   5\nd          1   3\n"));
    }
}

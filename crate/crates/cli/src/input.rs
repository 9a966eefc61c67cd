//! Field specs, generator lists, fixture files and matrix JSON.

use std::fmt;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use serde_json::Value;
use smallsub_core::field::{Field, PrimeField};
use smallsub_core::matrix::PolyMatrix;
use smallsub_core::poly::{parse_polynomial, parse_polynomials, Polynomial};
use smallsub_core::{Error, ParseError};

use crate::CliError;

/// `p=<prime>` or `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Prime(PrimeField),
    Rationals,
}

impl FromStr for FieldSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("qq") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix("p=")
            .or_else(|| s.strip_prefix("F_"))
            .or_else(|| s.strip_prefix('F'))
            .unwrap_or(s);
        let p: u64 = digits
            .parse()
            .map_err(|_| format!("field must be `p=<prime>` or `Q`, got `{s}`"))?;
        let p = u32::try_from(p).map_err(|_| format!("modulus {p} too large"))?;
        PrimeField::new(p).map(FieldSpec::Prime).map_err(|e| e.to_string())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "p={}", p.modulus()),
            FieldSpec::Rationals => f.write_str("Q"),
        }
    }
}

/// `a; b; c` into trimmed, nonempty pieces.
pub fn split_list(s: &str) -> Vec<String> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(String::from)
        .collect()
}

/// One polynomial per line; `#` starts a comment.
pub fn parse_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect()
}

/// Read a file, or stdin for `-`.
pub fn read_source(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Generator texts from `--gens` and/or `--file`.
pub fn generator_texts(inline: Option<&str>, file: Option<&Path>) -> Result<Vec<String>, CliError> {
    let mut out = Vec::new();
    if let Some(s) = inline {
        out.extend(split_list(s));
    }
    if let Some(p) = file {
        out.extend(parse_lines(&read_source(p)?));
    }
    Ok(out)
}

/// Parse every group into one common ring. A parse failure names the
/// offending group and entry.
pub fn parse_groups<F: Field>(
    field: &F,
    groups: &[(&str, &[String])],
    nvars: Option<usize>,
) -> Result<Vec<Vec<Polynomial<F>>>, CliError> {
    let mut all: Vec<&String> = Vec::new();
    for (name, texts) in groups {
        for (k, t) in texts.iter().enumerate() {
            if let Err(Error::Parse(e)) = parse_polynomial(field.clone(), t, None) {
                return Err(CliError::Parse {
                    context: format!("{name}[{k}] `{t}`"),
                    error: e,
                });
            }
            all.push(t);
        }
    }
    let parsed = parse_polynomials(field.clone(), &all, nvars).map_err(CliError::Core)?;
    let mut it = parsed.into_iter();
    Ok(groups
        .iter()
        .map(|(_, texts)| it.by_ref().take(texts.len()).collect())
        .collect())
}

/// `{"rows": [["x1", "x2"], ["x1^2", "0"]]}`; entries may also be numbers.
pub fn matrix_texts(json: &str) -> Result<Vec<Vec<String>>, CliError> {
    let bad = |m: &str| CliError::Parse {
        context: "matrix".into(),
        error: ParseError {
            position: 0,
            message: m.into(),
        },
    };
    let v: Value = serde_json::from_str(json).map_err(|e| CliError::Parse {
        context: "matrix JSON".into(),
        error: ParseError {
            position: e.column(),
            message: e.to_string(),
        },
    })?;
    let rows = v
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("expected an object with a `rows` array"))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| bad("each row must be an array"))?
                .iter()
                .map(|e| match e {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) => Ok(n.to_string()),
                    _ => Err(bad("entries must be strings or numbers")),
                })
                .collect()
        })
        .collect()
}

pub fn build_matrix<F: Field>(rows: Vec<Vec<Polynomial<F>>>) -> Result<PolyMatrix<F>, CliError> {
    PolyMatrix::from_rows(rows).map_err(CliError::Core)
}

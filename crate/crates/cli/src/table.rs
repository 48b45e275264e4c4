//! CSV and LaTeX projections of payloads. JSON stays the canonical form;
//! these drop nesting by printing nested values as compact JSON.

use serde_json::Value;

use crate::{CliError, Command, Result, ResultEnvelope};

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(xs) if xs.iter().all(Value::is_i64) => {
            let parts: Vec<String> = xs.iter().map(Value::to_string).collect();
            format!("({})", parts.join(","))
        }
        Value::Object(m) if m.values().all(|v| !v.is_object() && !v.is_array()) => m
            .iter()
            .map(|(k, v)| format!("{k}:{}", cell(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

/// Rows of objects; the headers are the keys of the first row.
fn from_objects(rows: &[Value]) -> Table {
    let headers: Vec<String> = rows
        .first()
        .and_then(Value::as_object)
        .map(|o| o.keys().cloned().collect())
        .unwrap_or_default();
    let rows = rows
        .iter()
        .map(|r| headers.iter().map(|h| cell(&r[h.as_str()])).collect())
        .collect();
    Table { headers, rows }
}

pub fn tabulate(env: &ResultEnvelope) -> Result<Table> {
    let p = &env.payload;
    let table = match &env.config.command {
        Command::Kostka { lam, mu, .. } => Table {
            headers: vec!["lam".into(), "mu".into(), "poly".into()],
            rows: vec![vec![lam.to_string(), mu.to_string(), cell(&p["poly"])]],
        },
        Command::KostkaTable { .. } | Command::Bk { .. } | Command::Stalks { .. } => {
            from_objects(p["rows"].as_array().map(Vec::as_slice).unwrap_or_default())
        }
        Command::Branch { .. } => {
            from_objects(p["terms"].as_array().map(Vec::as_slice).unwrap_or_default())
        }
        Command::Shear { .. } => Table {
            headers: vec!["degree".into(), "weight".into(), "dim".into()],
            rows: p["series"]
                .as_array()
                .map(Vec::as_slice)
                .unwrap_or_default()
                .iter()
                .map(|t| {
                    t.as_array()
                        .map(|xs| xs.iter().map(cell).collect())
                        .unwrap_or_default()
                })
                .collect(),
        },
        Command::Verify { .. } => Table {
            headers: vec!["check".into(), "passed".into(), "detail".into()],
            rows: env
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.name.clone(),
                        c.passed.to_string(),
                        c.detail.clone().unwrap_or_default(),
                    ]
                })
                .collect(),
        },
        other => {
            return Err(CliError::Usage(format!(
                "{} has no tabular form",
                other.name()
            )));
        }
    };
    Ok(table)
}

impl Table {
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers).map_err(csv_error)?;
        for r in &self.rows {
            w.write_record(r).map_err(csv_error)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_latex(&self) -> String {
        let mut out = format!(
            "\\begin{{tabular}}{{{}}}\n\\hline\n",
            "l".repeat(self.headers.len())
        );
        let line = |cells: Vec<String>| cells.join(" & ") + " \\\\\n";
        out += &line(self.headers.iter().map(|h| latex_text(h)).collect());
        out += "\\hline\n";
        for r in &self.rows {
            out += &line(r.iter().map(|c| latex_cell(c)).collect());
        }
        out + "\\hline\n\\end{tabular}\n"
    }
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Io(std::io::Error::other(e))
}

fn latex_text(s: &str) -> String {
    let mut out = String::new();
    for ch in s.chars() {
        match ch {
            '&' | '%' | '$' | '#' | '_' | '{' | '}' => {
                out.push('\\');
                out.push(ch);
            }
            '^' => out.push_str("\\^{}"),
            '~' => out.push_str("\\~{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            c => out.push(c),
        }
    }
    out
}

/// Polynomials and weight vectors go to math mode.
fn latex_cell(s: &str) -> String {
    let mathy = !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_digit() || " q^+-*(),".contains(c))
        && s.chars().any(|c| c == 'q' || c == '(');
    if mathy {
        let body = s.replace('*', "");
        let body = body
            .split('^')
            .enumerate()
            .map(|(i, part)| {
                if i == 0 {
                    return part.to_string();
                }
                let end = part
                    .find(|c: char| !c.is_ascii_digit() && c != '-')
                    .unwrap_or(part.len());
                format!("{{{}}}{}", &part[..end], &part[end..])
            })
            .collect::<Vec<_>>()
            .join("^");
        format!("${body}$")
    } else {
        latex_text(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_cells() {
        assert_eq!(latex_cell("q^2 + 2*q"), "$q^{2} + 2q$");
        assert_eq!(latex_cell("(2,1,0)"), "$(2,1,0)$");
        assert_eq!(latex_cell("parity_ok"), "parity\\_ok");
        assert_eq!(latex_cell("1"), "1");
    }

    #[test]
    fn csv_quotes_weights() {
        let t = Table {
            headers: vec!["lam".into(), "poly".into()],
            rows: vec![vec!["(2,0)".into(), "q".into()]],
        };
        assert_eq!(t.to_csv().unwrap(), "lam,poly\n\"(2,0)\",q\n");
    }

    #[test]
    fn weight_vectors_print_in_parentheses() {
        assert_eq!(cell(&serde_json::json!([2, -1])), "(2,-1)");
        assert_eq!(cell(&serde_json::json!({"-4": 1, "0": 2})), "-4:1 0:2");
    }
}

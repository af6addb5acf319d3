use std::process::ExitCode;

use clap::ValueEnum;
use lawvere::{ExtVal, FiniteSpace};
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

/// Whether the command found everything it checked to hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn exit_code(self) -> ExitCode {
        match self {
            Outcome::Pass => ExitCode::SUCCESS,
            Outcome::Fail => ExitCode::from(1),
        }
    }
}

pub fn emit(format: Format, human: &str, json: &Value) {
    match format {
        Format::Human => print!("{human}"),
        Format::Json => println!("{json}"),
    }
}

pub fn values(v: &[ExtVal]) -> Value {
    json!(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn matrix_json(s: &FiniteSpace) -> Value {
    let n = s.len();
    json!({
        "points": s.points(),
        "dist": (0..n).map(|x| values(&s.matrix()[x * n..(x + 1) * n])).collect::<Vec<_>>(),
    })
}

/// Aligned distance table, one row per point.
pub fn matrix_text(s: &FiniteSpace, indent: &str) -> String {
    let n = s.len();
    let cells: Vec<String> = s.matrix().iter().map(ToString::to_string).collect();
    let width = cells
        .iter()
        .map(String::len)
        .chain(s.points().iter().map(String::len))
        .max()
        .unwrap_or(1);
    let mut out = format!("{indent}{:width$}", "");
    for p in s.points() {
        out.push_str(&format!(" {p:>width$}"));
    }
    out.push('\n');
    for x in 0..n {
        out.push_str(&format!("{indent}{:>width$}", s.point(x)));
        for cell in &cells[x * n..(x + 1) * n] {
            out.push_str(&format!(" {cell:>width$}"));
        }
        out.push('\n');
    }
    out
}

pub fn joined(v: &[ExtVal]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

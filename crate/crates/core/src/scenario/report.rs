//! Check records and their JSON-lines / CSV renderings. Integers are bare
//! JSON numbers of any size; rationals are `"p/q"` strings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{Map, Number, Value as Json};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Rational(BigRational),
    Bool(bool),
    Text(String),
    List(Vec<Value>),
}

impl Value {
    pub fn int(n: impl Into<BigInt>) -> Self {
        Value::Int(n.into())
    }

    pub fn ints<T: Into<BigInt> + Clone>(xs: &[T]) -> Self {
        Value::List(xs.iter().cloned().map(|x| Value::Int(x.into())).collect())
    }

    pub fn text(s: impl Into<String>) -> Self {
        Value::Text(s.into())
    }

    fn to_json(&self) -> Json {
        match self {
            Value::Int(n) => Json::Number(n.to_string().parse::<Number>().expect("integer literal")),
            Value::Rational(q) => Json::String(rational_string(q)),
            Value::Bool(b) => Json::Bool(*b),
            Value::Text(s) => Json::String(s.clone()),
            Value::List(xs) => Json::Array(xs.iter().map(Value::to_json).collect()),
        }
    }

    /// Plain rendering used for CSV cells and `[expect]` comparison.
    pub fn render(&self) -> String {
        match self {
            Value::Int(n) => n.to_string(),
            Value::Rational(q) => rational_string(q),
            Value::Bool(b) => b.to_string(),
            Value::Text(s) => s.clone(),
            Value::List(xs) => format!("[{}]", xs.iter().map(Value::render).collect::<Vec<_>>().join(" ")),
        }
    }
}

pub fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: String,
    pub pass: bool,
    /// The value compared against `[expect]` entries.
    pub value: Value,
    pub details: Vec<(String, Value)>,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, pass: bool, value: Value) -> Self {
        Self { id: id.into(), pass, value, details: Vec::new() }
    }

    pub fn detail(mut self, key: &str, value: Value) -> Self {
        self.details.push((key.to_string(), value));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Fingerprint {
    pub seed: u64,
    pub radius: usize,
    pub res_radius: usize,
    /// Number of re-picks of the generic point before the run succeeded.
    pub attempt: u64,
    pub point: Vec<BigRational>,
    pub generators: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub scenario: String,
    pub fingerprint: Fingerprint,
    pub checks: Vec<CheckRecord>,
    /// Set when the scenario aborted; no checks are then recorded.
    pub error: Option<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.pass)
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        let mut base = Map::new();
        base.insert("scenario".into(), Json::String(self.scenario.clone()));
        base.insert("seed".into(), Value::int(self.fingerprint.seed).to_json());
        base.insert("radius".into(), Value::int(self.fingerprint.radius as u64).to_json());
        base.insert("res_radius".into(), Value::int(self.fingerprint.res_radius as u64).to_json());
        base.insert("attempt".into(), Value::int(self.fingerprint.attempt).to_json());
        base.insert("generators".into(), Json::String(self.fingerprint.generators.clone()));
        base.insert(
            "p".into(),
            Json::Array(self.fingerprint.point.iter().map(|q| Json::String(rational_string(q))).collect()),
        );
        if let Some(e) = &self.error {
            let mut rec = base.clone();
            rec.insert("check".into(), Json::String("error".into()));
            rec.insert("pass".into(), Json::Bool(false));
            rec.insert("error".into(), Json::String(e.clone()));
            let _ = writeln!(out, "{}", Json::Object(rec));
        }
        for c in &self.checks {
            let mut rec = base.clone();
            rec.insert("check".into(), Json::String(c.id.clone()));
            rec.insert("pass".into(), Json::Bool(c.pass));
            rec.insert("value".into(), c.value.to_json());
            let details: Map<String, Json> = c.details.iter().map(|(k, v)| (k.clone(), v.to_json())).collect();
            rec.insert("details".into(), Json::Object(details));
            let _ = writeln!(out, "{}", Json::Object(rec));
        }
        out
    }

    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        if let Some(e) = &self.error {
            let _ = writeln!(out, "{},error,false,{}", csv_cell(&self.scenario), csv_cell(e));
        }
        for c in &self.checks {
            let _ = writeln!(out, "{},{},{},{}", csv_cell(&self.scenario), csv_cell(&c.id), c.pass, csv_cell(&c.value.render()));
        }
        out
    }
}

pub const CSV_HEADER: &str = "scenario,check,pass,value\n";

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_stay_unquoted() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let r = Report {
            scenario: "s".into(),
            fingerprint: Fingerprint { point: vec![BigRational::new(1.into(), 3.into())], ..Default::default() },
            checks: vec![CheckRecord::new("c", true, Value::Int(big)).detail("q", Value::Rational(BigRational::new(2.into(), 4.into())))],
            error: None,
        };
        let line = r.to_jsonl();
        assert!(line.contains("\"value\":123456789012345678901234567890"), "{line}");
        assert!(line.contains("\"q\":\"1/2\""));
        assert!(line.contains("\"p\":[\"1/3\"]"));
        assert_eq!(r.csv_rows(), "s,c,true,123456789012345678901234567890\n");
    }
}

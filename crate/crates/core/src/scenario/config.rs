//! Scenario files: flat `key = value` lines grouped under `[scenario]`
//! headers, each optionally followed by an `[expect]` block.
//!
//! ```text
//! [scenario]
//! name = torus_pd/n=2
//! kind = torus_pd
//! group = "Z^2"
//! alpha = translation
//! res_radius = 3
//! [expect]
//! fundamental = 1
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{GroupSpec, ModuleTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    ZeroDimPoint,
    FRecovery,
    TorusPd,
    BsClass,
    BoundarySlant,
    Naturality,
    ProductTheorem,
    LargeN,
    Coinvariants,
    BetaNonvanishing,
}

impl Kind {
    pub const ALL: [Kind; 10] = [
        Kind::ZeroDimPoint,
        Kind::FRecovery,
        Kind::TorusPd,
        Kind::BsClass,
        Kind::BoundarySlant,
        Kind::Naturality,
        Kind::ProductTheorem,
        Kind::LargeN,
        Kind::Coinvariants,
        Kind::BetaNonvanishing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::ZeroDimPoint => "zero_dim_point",
            Kind::FRecovery => "one_dim_f_recovery",
            Kind::TorusPd => "torus_pd",
            Kind::BsClass => "bs_class_from_connecting",
            Kind::BoundarySlant => "boundary_slant_beta",
            Kind::Naturality => "naturality_square",
            Kind::ProductTheorem => "product_theorem_cochain",
            Kind::LargeN => "large_n",
            Kind::Coinvariants => "coinvariants",
            Kind::BetaNonvanishing => "beta_nonvanishing",
        }
    }

    /// Whether the scenario solves or ranks on a truncated module.
    pub fn is_truncated(self) -> bool {
        matches!(self, Kind::Coinvariants | Kind::BetaNonvanishing)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown scenario kind {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    pub name: String,
    pub kind: Kind,
    pub group: GroupSpec,
    /// `translation`, `cocycle` or `point`.
    pub alpha: String,
    /// Values of the cocycle on the generators.
    pub f: Vec<i64>,
    pub module: ModuleTag,
    pub res_radius: usize,
    pub radius: usize,
    pub seed: u64,
    /// Kind-specific integer parameters.
    pub params: BTreeMap<String, i64>,
    pub expect: BTreeMap<String, String>,
}

pub const DEFAULT_SEED: u64 = 20_240_601;

impl Scenario {
    pub fn new(name: &str, kind: Kind, group: &str) -> Self {
        Self {
            name: name.to_string(),
            kind,
            group: GroupSpec::parse(group).expect("builtin group spec"),
            alpha: "translation".into(),
            f: Vec::new(),
            module: ModuleTag::integers(),
            res_radius: 3,
            radius: 2,
            seed: DEFAULT_SEED,
            params: BTreeMap::new(),
            expect: BTreeMap::new(),
        }
    }

    pub fn alpha(mut self, family: &str, f: &[i64]) -> Self {
        self.alpha = family.to_string();
        self.f = f.to_vec();
        self
    }

    pub fn module(mut self, tag: ModuleTag) -> Self {
        self.module = tag;
        self
    }

    pub fn radii(mut self, res_radius: usize, radius: usize) -> Self {
        self.res_radius = res_radius;
        self.radius = radius;
        self
    }

    pub fn param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn expect(mut self, key: &str, value: &str) -> Self {
        self.expect.insert(key.to_string(), value.to_string());
        self
    }

    pub fn param_or(&self, key: &str, default: i64) -> i64 {
        self.params.get(key).copied().unwrap_or(default)
    }

    pub fn validate(&self) -> Result<()> {
        if self.name.is_empty() {
            return Err(Error::Config("scenario name is empty".into()));
        }
        if self.res_radius < 1 || self.radius < 1 {
            return Err(Error::Config(format!("{}: radii must be at least 1", self.name)));
        }
        if !["translation", "cocycle", "point"].contains(&self.alpha.as_str()) {
            return Err(Error::Config(format!("{}: unknown alpha family {:?}", self.name, self.alpha)));
        }
        if self.alpha == "cocycle" && self.f.len() != self.group.rank() {
            return Err(Error::Config(format!("{}: f needs one value per generator of {}", self.name, self.group)));
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("[scenario]\n");
        s += &format!("name = {}\nkind = {}\ngroup = \"{}\"\nalpha = {}\n", self.name, self.kind, self.group, self.alpha);
        if !self.f.is_empty() {
            let f: Vec<String> = self.f.iter().map(|x| x.to_string()).collect();
            s += &format!("f = {}\n", f.join(", "));
        }
        s += &format!("module = {}\nres_radius = {}\nradius = {}\nseed = {}\n", self.module, self.res_radius, self.radius, self.seed);
        for (k, v) in &self.params {
            s += &format!("{k} = {v}\n");
        }
        if !self.expect.is_empty() {
            s += "[expect]\n";
            for (k, v) in &self.expect {
                s += &format!("{k} = {v}\n");
            }
        }
        s
    }
}

/// Splits at the first `=` outside brackets, so check ids like `dual[axis=0]` can be keys.
fn split_entry(line: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in line.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth -= 1,
            '=' if depth == 0 => return Some((&line[..i], &line[i + 1..])),
            _ => {}
        }
    }
    None
}

fn unquote(v: &str) -> &str {
    v.strip_prefix('"').and_then(|v| v.strip_suffix('"')).unwrap_or(v)
}

/// Parses every scenario in a file; names must be unique.
pub fn parse_scenarios(text: &str) -> Result<Vec<Scenario>> {
    #[derive(PartialEq)]
    enum Section {
        None,
        Scenario,
        Expect,
    }
    // (header line, keyed entries with their lines, expectations)
    type RawScenario = (usize, BTreeMap<String, (usize, String)>, BTreeMap<String, String>);
    let mut out: Vec<RawScenario> = Vec::new();
    let mut section = Section::None;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match line {
            "[scenario]" => {
                out.push((line_no, BTreeMap::new(), BTreeMap::new()));
                section = Section::Scenario;
                continue;
            }
            "[expect]" => {
                if out.is_empty() {
                    return Err(Error::Parse { line: line_no, msg: "[expect] before any [scenario]".into() });
                }
                section = Section::Expect;
                continue;
            }
            _ if line.starts_with('[') => {
                return Err(Error::Parse { line: line_no, msg: format!("unknown section {line}") });
            }
            _ => {}
        }
        let (key, value) = split_entry(line)
            .map(|(k, v)| (k.trim().to_string(), unquote(v.trim()).to_string()))
            .ok_or_else(|| Error::Parse { line: line_no, msg: format!("expected key = value, got {line:?}") })?;
        let Some(cur) = out.last_mut() else {
            return Err(Error::Parse { line: line_no, msg: "key outside a [scenario] section".into() });
        };
        let dup = match section {
            Section::Scenario => cur.1.insert(key.clone(), (line_no, value)).is_some(),
            Section::Expect => cur.2.insert(key.clone(), value).is_some(),
            Section::None => unreachable!(),
        };
        if dup {
            return Err(Error::Parse { line: line_no, msg: format!("duplicate key {key:?}") });
        }
    }
    let mut names = BTreeSet::new();
    let mut scenarios = Vec::new();
    for (line, mut keys, expect) in out {
        let s = build(line, &mut keys, expect)?;
        if !names.insert(s.name.clone()) {
            return Err(Error::Config(format!("scenario name {:?} appears twice", s.name)));
        }
        scenarios.push(s);
    }
    Ok(scenarios)
}

fn build(line: usize, keys: &mut BTreeMap<String, (usize, String)>, expect: BTreeMap<String, String>) -> Result<Scenario> {
    let mut take = |k: &str| keys.remove(k);
    let need = |v: Option<(usize, String)>, k: &str| v.ok_or(Error::Parse { line, msg: format!("missing key {k:?}") });
    let name = need(take("name"), "name")?.1;
    let (kl, kind) = need(take("kind"), "kind")?;
    let kind: Kind = kind.parse().map_err(|e: Error| Error::Parse { line: kl, msg: e.to_string() })?;
    let (gl, group) = need(take("group"), "group")?;
    let group = GroupSpec::parse(&group).map_err(|e| Error::Parse { line: gl, msg: e.to_string() })?;
    let mut s = Scenario::new(&name, kind, "Z");
    s.group = group;
    let int = |(l, v): (usize, String)| -> Result<i64> {
        v.parse().map_err(|_| Error::Parse { line: l, msg: format!("expected an integer, got {v:?}") })
    };
    if let Some((_, a)) = take("alpha") {
        s.alpha = a;
    }
    if let Some((l, f)) = take("f") {
        s.f = f.split(',').map(|x| int((l, x.trim().to_string()))).collect::<Result<_>>()?;
    }
    if let Some((l, m)) = take("module") {
        s.module = ModuleTag::parse(&m).map_err(|e| Error::Parse { line: l, msg: e.to_string() })?;
    }
    if let Some(v) = take("res_radius") {
        s.res_radius = usize::try_from(int(v)?).map_err(|_| Error::Config("res_radius must be positive".into()))?;
    }
    if let Some(v) = take("radius") {
        s.radius = usize::try_from(int(v)?).map_err(|_| Error::Config("radius must be positive".into()))?;
    }
    if let Some((l, v)) = take("seed") {
        s.seed = v.parse().map_err(|_| Error::Parse { line: l, msg: format!("bad seed {v:?}") })?;
    }
    for (k, v) in std::mem::take(keys) {
        s.params.insert(k, int(v)?);
    }
    s.expect = expect;
    s.validate()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = Scenario::new("a", Kind::FRecovery, "Z").alpha("cocycle", &[2]).param("m", 2).expect("pairing[j=1]", "2");
        let back = parse_scenarios(&s.to_text()).unwrap();
        assert_eq!(back, vec![s]);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_scenarios("[scenario]\nname = x\nkind = nope\ngroup = Z\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_scenarios("[scenario]\nname = x\nkind = torus_pd\ngroup = Z\nradius = 0\n").unwrap_err();
        assert!(matches!(e, Error::Config(_)));
        let twice = "[scenario]\nname = x\nkind = torus_pd\ngroup = Z\n[scenario]\nname = x\nkind = torus_pd\ngroup = Z\n";
        assert!(parse_scenarios(twice).is_err());
        assert!(parse_scenarios("name = x\n").is_err());
    }
}

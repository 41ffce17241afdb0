//! Named computations with machine-readable reports.

pub mod algebra;
pub mod checks;
pub mod config;
pub mod product;
pub mod report;

use std::collections::BTreeSet;

use rayon::prelude::*;

pub use config::{parse_scenarios, Kind, Scenario, DEFAULT_SEED};
pub use report::{CheckRecord, Fingerprint, Report, Value, CSV_HEADER};

use crate::error::{Error, Result};
use crate::group::{Group, ModuleTag, DEFAULT_BALL_CAP};
use crate::slant::MAX_REPICKS;

pub const BALL_CAP_ENV: &str = "LIPCOH_BALL_CAP";

pub struct Builtin {
    pub name: &'static str,
    pub description: &'static str,
    /// The mathematical statement each scenario instance checks.
    pub anchor: &'static str,
    build: fn() -> Vec<Scenario>,
}

fn each_group(kind: Kind, groups: &[&str]) -> Vec<Scenario> {
    groups.iter().map(|g| Scenario::new(&format!("{}/{}", kind, g), kind, g)).collect()
}

pub const BUILTINS: &[Builtin] = &[
    Builtin {
        name: "zero_dim_point",
        description: "P a point: the slant of the point is the unit in degree 0",
        anchor: "point slant = 1 in H^0(Γ; Z)",
        build: || each_group(Kind::ZeroDimPoint, &["Z", "Z^2", "F_2"]).into_iter().map(|s| s.alpha("point", &[]).expect("slant_H0", "1")).collect(),
    },
    Builtin {
        name: "one_dim_f_recovery",
        description: "x ↦ x + f(γ) on the line: the vertex chain slants to f",
        anchor: "slant([e, γ]) = f(γ)",
        build: || {
            let mut v: Vec<Scenario> = (1..=3)
                .map(|m| Scenario::new(&format!("one_dim_f_recovery/Z/m={m}"), Kind::FRecovery, "Z").alpha("cocycle", &[m]))
                .collect();
            v.push(Scenario::new("one_dim_f_recovery/F_2/f=1,2", Kind::FRecovery, "F_2").alpha("cocycle", &[1, 2]).radii(2, 2));
            v
        },
    },
    Builtin {
        name: "torus_pd",
        description: "translation action of Z^n on R^n: fundamental and generator cycles slant to dual classes",
        anchor: "flat duality H_k(R^n : Z^n) → H^{n-k}(Z^n)",
        build: || (1..=2).map(|n| Scenario::new(&format!("torus_pd/n={n}"), Kind::TorusPd, &format!("Z^{n}"))).collect(),
    },
    Builtin {
        name: "bs_class_from_connecting",
        description: "connecting image of 1 under 0 → I → ZΓ → Z → 0 on bar and cellular resolutions",
        anchor: "β_Γ = δ(1)",
        build: || each_group(Kind::BsClass, &["Z", "Z^2", "F_2"]),
    },
    Builtin {
        name: "boundary_slant_beta",
        description: "slant of the connecting image of the fundamental cycle against β",
        anchor: "α_∩(∂[z]) = δ(1) = β_Γ",
        build: || each_group(Kind::BoundarySlant, &["Z", "Z^2"]).into_iter().map(|s| s.radii(2, 2)).collect(),
    },
    Builtin {
        name: "naturality_square",
        description: "slant against connecting maps of 0 → I⊗I → I⊗ZΓ → I → 0 on Z^2",
        anchor: "slant commutes with connecting maps up to sign",
        build: || vec![Scenario::new("naturality_square/Z^2", Kind::Naturality, "Z^2").radii(2, 2)],
    },
    Builtin {
        name: "product_theorem_cochain",
        description: "slant over a product space equals the cross and cup product of the factor slants",
        anchor: "slant(z_1 × z_2) = slant(z_1) ∪ slant(z_2) as cocycles",
        build: || vec![Scenario::new("product_theorem_cochain/Z^2", Kind::ProductTheorem, "Z^2").alpha("cocycle", &[1, 2])],
    },
    Builtin {
        name: "large_n",
        description: "slant values are unchanged by crossing with R once and twice",
        anchor: "α × 1: Γ × P × R → R^n × R",
        build: || {
            vec![
                Scenario::new("large_n/point/F_2", Kind::LargeN, "F_2").alpha("point", &[]).radii(2, 2),
                Scenario::new("large_n/translation/Z", Kind::LargeN, "Z").radii(2, 2),
                Scenario::new("large_n/cocycle/Z", Kind::LargeN, "Z").alpha("cocycle", &[2]).radii(2, 2),
            ]
        },
    },
    Builtin {
        name: "coinvariants",
        description: "ranks of I(π)_π = H_1(π; Z), with stabilisation from R to R+1",
        anchor: "H_1(π; Z) = I(π)_π",
        build: || {
            [("Z", 3, "1"), ("Z^2", 2, "2"), ("F_2", 2, "2")]
                .iter()
                .map(|&(g, r, rank)| {
                    Scenario::new(&format!("coinvariants/{g}"), Kind::Coinvariants, g)
                        .module(ModuleTag::aug_power(1))
                        .radii(r, r)
                        .expect("rank", rank)
                })
                .collect()
        },
    },
    Builtin {
        name: "beta_nonvanishing",
        description: "a solved φ with φ_*(β^k) dual to the fundamental k-cycle of Z^2",
        anchor: "(β_Γ)^k generates, k ≤ 2",
        build: || {
            vec![
                Scenario::new("beta_nonvanishing/Z^2/k=1", Kind::BetaNonvanishing, "Z^2").param("k", 1).radii(2, 2),
                Scenario::new("beta_nonvanishing/Z^2/k=2", Kind::BetaNonvanishing, "Z^2").param("k", 2).radii(2, 2),
            ]
        },
    },
];

/// `(name, description, anchor)` for every builtin.
pub fn list_scenarios() -> Vec<(&'static str, &'static str, &'static str)> {
    BUILTINS.iter().map(|b| (b.name, b.description, b.anchor)).collect()
}

pub fn builtin(name: &str) -> Result<Vec<Scenario>> {
    if name == "all" {
        return Ok(BUILTINS.iter().flat_map(|b| (b.build)()).collect());
    }
    BUILTINS
        .iter()
        .find(|b| b.name == name)
        .map(|b| (b.build)())
        .ok_or_else(|| Error::Config(format!("no builtin scenario {name:?}; see `list`")))
}

/// Reads the ball cap from the environment, defaulting to 10^6.
pub fn ball_cap_from_env() -> Result<usize> {
    match std::env::var(BALL_CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Config(format!("{BALL_CAP_ENV} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BALL_CAP),
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub radius: Option<usize>,
    pub res_radius: Option<usize>,
}

impl Overrides {
    pub fn apply(&self, mut s: Scenario) -> Result<Scenario> {
        if let Some(x) = self.seed {
            s.seed = x;
        }
        if let Some(x) = self.radius {
            s.radius = x;
        }
        if let Some(x) = self.res_radius {
            s.res_radius = x;
        }
        s.validate()?;
        Ok(s)
    }
}

fn fingerprint(s: &Scenario, group: &Group) -> Fingerprint {
    Fingerprint {
        seed: s.seed,
        radius: s.radius,
        res_radius: s.res_radius,
        attempt: 0,
        point: Vec::new(),
        generators: group.spec().generator_names().join(","),
    }
}

fn apply_expectations(s: &Scenario, checks: &mut Vec<CheckRecord>) {
    for (key, want) in &s.expect {
        match checks.iter_mut().find(|c| &c.id == key) {
            Some(c) => {
                if &c.value.render() != want {
                    c.pass = false;
                }
                c.details.push(("expected".into(), Value::text(want.clone())));
            }
            None => checks.push(CheckRecord::new(key.clone(), false, Value::text("missing")).detail("expected", Value::text(want.clone()))),
        }
    }
}

/// Runs one scenario, re-picking the generic point on degenerate hits.
pub fn run_scenario(s: &Scenario, ball_cap: usize) -> Report {
    let group = Group::new(s.group.clone()).with_ball_cap(ball_cap);
    let mut fp = fingerprint(s, &group);
    for attempt in 0..MAX_REPICKS {
        match checks::run_checks(s, &group, attempt) {
            Ok(mut out) => {
                apply_expectations(s, &mut out.checks);
                fp.attempt = attempt;
                fp.point = out.point;
                return Report { scenario: s.name.clone(), fingerprint: fp, checks: out.checks, error: None };
            }
            Err(Error::GenericityViolation(_)) => continue,
            Err(e) => return Report { scenario: s.name.clone(), fingerprint: fp, checks: Vec::new(), error: Some(e.to_string()) },
        }
    }
    fp.attempt = MAX_REPICKS;
    let error = Some(format!("{GENERICITY_EXHAUSTED} after {MAX_REPICKS} re-picks"));
    Report { scenario: s.name.clone(), fingerprint: fp, checks: Vec::new(), error }
}

pub const GENERICITY_EXHAUSTED: &str = "generic point not found";

/// Reruns the truncated computations at `R` and `R + 1`; passes iff they agree.
pub fn stability_check(s: &Scenario, ball_cap: usize) -> Report {
    let group = Group::new(s.group.clone()).with_ball_cap(ball_cap);
    let fp = fingerprint(s, &group);
    let result = (|| -> Result<Vec<CheckRecord>> {
        match s.kind {
            Kind::Coinvariants => {
                let r = crate::coefficients::coinvariants_rank(&group, &s.module, s.radius)?;
                Ok(vec![CheckRecord::new("stability", r.stable(), Value::Bool(r.stable()))
                    .detail("at_radius", Value::int(r.at_radius as u64))
                    .detail("at_next_radius", Value::int(r.at_next_radius as u64))])
            }
            Kind::BetaNonvanishing => {
                let k = s.param_or("k", 1) as usize;
                let (a, _) = algebra::solved_pairings(&group, k, s.radius)?;
                let (b, _) = algebra::solved_pairings(&group, k, s.radius + 1)?;
                Ok(vec![CheckRecord::new("stability", a == b, Value::Bool(a == b))
                    .detail("at_radius", Value::ints(&a))
                    .detail("at_next_radius", Value::ints(&b))])
            }
            _ => Err(Error::Config(format!("{}: {} has no truncated-module computation", s.name, s.kind))),
        }
    })();
    match result {
        Ok(checks) => Report { scenario: s.name.clone(), fingerprint: fp, checks, error: None },
        Err(e) => Report { scenario: s.name.clone(), fingerprint: fp, checks: Vec::new(), error: Some(e.to_string()) },
    }
}

/// Runs scenarios on a pool of `workers` threads; reports come back sorted by name.
pub fn run_all(scenarios: &[Scenario], workers: usize, ball_cap: usize, stability: bool) -> Result<Vec<Report>> {
    let mut names = BTreeSet::new();
    for s in scenarios {
        if !names.insert(&s.name) {
            return Err(Error::Config(format!("scenario name {:?} appears twice", s.name)));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
    let mut reports: Vec<Report> = pool.install(|| {
        scenarios
            .par_iter()
            .map(|s| if stability { stability_check(s, ball_cap) } else { run_scenario(s, ball_cap) })
            .collect()
    });
    reports.sort_by(|a, b| a.scenario.cmp(&b.scenario));
    Ok(reports)
}

/// 0 if every check passed, 1 on a failed check, 2 on a scenario error,
/// 3 when no generic point was found.
pub fn exit_code(reports: &[Report]) -> i32 {
    let errors: Vec<&String> = reports.iter().filter_map(|r| r.error.as_ref()).collect();
    if errors.iter().any(|e| e.starts_with(GENERICITY_EXHAUSTED)) {
        3
    } else if !errors.is_empty() {
        2
    } else if reports.iter().all(Report::passed) {
        0
    } else {
        1
    }
}

pub fn render(reports: &[Report], csv: bool) -> String {
    if csv {
        let mut out = String::from(CSV_HEADER);
        for r in reports {
            out += &r.csv_rows();
        }
        out
    } else {
        reports.iter().map(Report::to_jsonl).collect()
    }
}

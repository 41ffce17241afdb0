//! Builds scenarios in code, runs them and renders the report in both formats.
//!
//! ```bash
//! cargo run --example scenario_report
//! ```

use lipcoh::scenario::{render, run_all, Kind, Scenario};

fn main() -> lipcoh::Result<()> {
    let scenarios = vec![
        Scenario::new("recovery/Z/m=2", Kind::FRecovery, "Z").alpha("cocycle", &[2]).param("j_max", 2),
        Scenario::new("torus/Z", Kind::TorusPd, "Z"),
        Scenario::new("beta/Z^2", Kind::BsClass, "Z^2"),
    ];
    let reports = run_all(&scenarios, 2, 100_000, false)?;
    print!("{}", render(&reports, true));
    println!();
    print!("{}", render(&reports[..1], false));
    Ok(())
}

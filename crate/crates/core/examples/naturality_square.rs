//! Slant against the connecting maps of `0 → I⊗I → I⊗ZΓ → I → 0` on `Z^2`:
//! the square commutes up to one global sign on randomized cycles.
//!
//! ```bash
//! cargo run --example naturality_square
//! ```

use lipcoh::scenario::{builtin, run_scenario};

fn main() -> lipcoh::Result<()> {
    for s in builtin("naturality_square")? {
        let report = run_scenario(&s, 200_000);
        if let Some(e) = &report.error {
            eprintln!("{}: {e}", report.scenario);
            continue;
        }
        for c in &report.checks {
            let details: Vec<String> = c.details.iter().map(|(k, v)| format!("{k}={}", v.render())).collect();
            println!("{:<22} {:<5} {:>4}  {}", c.id, c.pass, c.value.render(), details.join(" "));
        }
    }
    Ok(())
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lipcoh::scenario::{self, Overrides, Scenario};

#[derive(Parser)]
#[command(name = "lipcoh", version, about = "Exact slant products and group cohomology checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Truncation radius for module computations.
    #[arg(long, global = true)]
    radius: Option<usize>,
    /// Vertex radius of bar resolution generators.
    #[arg(long = "res-radius", global = true)]
    res_radius: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "jsonl")]
    format: Format,
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run the scenarios of a config file, or a builtin (`all` for every one).
    Run {
        config: Option<PathBuf>,
        #[arg(long, conflicts_with = "config")]
        builtin: Option<String>,
    },
    /// List builtin scenarios.
    List,
    /// Rerun truncated computations at R and R+1.
    Stability { config: PathBuf },
}

fn load(path: &PathBuf) -> Result<Vec<Scenario>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    scenario::parse_scenarios(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let overrides = Overrides { seed: cli.seed, radius: cli.radius, res_radius: cli.res_radius };
    let (scenarios, stability) = match &cli.command {
        Command::List => {
            for (name, description, anchor) in scenario::list_scenarios() {
                println!("{name}\t{description}\t[{anchor}]");
            }
            return ExitCode::SUCCESS;
        }
        Command::Run { config: Some(path), .. } => (load(path), false),
        Command::Run { builtin: Some(name), .. } => (scenario::builtin(name).map_err(|e| e.to_string()), false),
        Command::Run { .. } => (Err("run needs a config file or --builtin <name>".to_string()), false),
        Command::Stability { config } => (load(config), true),
    };
    let result = scenarios.and_then(|list| {
        let list = list.into_iter().map(|s| overrides.apply(s)).collect::<lipcoh::Result<Vec<_>>>().map_err(|e| e.to_string())?;
        let cap = scenario::ball_cap_from_env().map_err(|e| e.to_string())?;
        scenario::run_all(&list, cli.workers, cap, stability).map_err(|e| e.to_string())
    });
    let reports = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = scenario::render(&reports, matches!(cli.format, Format::Csv));
    match &cli.report {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    for r in &reports {
        if let Some(e) = &r.error {
            eprintln!("{}: {e}", r.scenario);
        }
    }
    ExitCode::from(scenario::exit_code(&reports) as u8)
}

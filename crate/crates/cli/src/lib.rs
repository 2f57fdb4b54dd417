//! Driver behind the `kummer` binary: configuration, check orchestration
//! and canonical reports.

pub mod checks;
pub mod config;
pub mod reference;
pub mod report;

use std::time::Instant;

pub use config::{Cli, Command, Format, RunConfig};
pub use report::{Check, Report, Status};

pub fn run(cfg: &RunConfig) -> Report {
    let start = Instant::now();
    let levels = match cfg.command {
        Command::All => checks::suite_levels(cfg),
        _ => vec![cfg.level],
    };
    let found = checks::run_command(cfg.command, cfg, &levels);
    Report::new(cfg.command.id(), cfg.echo(), found, start.elapsed().as_secs_f64())
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    }
}

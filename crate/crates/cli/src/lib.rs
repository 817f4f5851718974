//! Command-line pipeline around `qpaint-core`: enhance, measure,
//! ratio-correct, and report, for single images and whole corpora.

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod sheet;

use cli::{Cli, Command};
use config::RunConfig;
use error::CliResult;

pub fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Analyze { image, opts } => {
            let cfg = RunConfig::resolve(&opts)?;
            commands::cmd_analyze(&image, &cfg)
        }
        Command::Sweep { image, opts } => {
            let cfg = RunConfig::resolve(&opts)?;
            commands::cmd_sweep(&image, &cfg)
        }
        Command::Enhance { image, opts } => {
            let cfg = RunConfig::resolve(&opts)?;
            commands::cmd_enhance(&image, &cfg)
        }
        Command::Correct { image, opts } => {
            let cfg = RunConfig::resolve(&opts)?;
            commands::cmd_correct(&image, &cfg)
        }
        Command::Predict { image, opts } => {
            let cfg = RunConfig::resolve(&opts)?;
            commands::cmd_predict(&image, &cfg)
        }
        Command::Batch { dir, artist, opts } => {
            let cfg = RunConfig::resolve(&opts)?;
            commands::cmd_batch(&dir, artist, &cfg)
        }
    }
}

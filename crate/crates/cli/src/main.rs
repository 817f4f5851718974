use clap::error::ErrorKind;
use clap::Parser;
use qpaint_cli::cli::Cli;

fn main() {
    // Usage/flag errors are configuration errors (exit 3); help and
    // version remain successes.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp
                    | ErrorKind::DisplayVersion
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) =>
        {
            let _ = err.print();
            std::process::exit(0);
        }
        Err(err) => {
            let _ = err.print();
            std::process::exit(3);
        }
    };
    if let Err(err) = qpaint_cli::run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}

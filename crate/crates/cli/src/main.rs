use clap::error::ErrorKind;
use qgroup_cli::{execute, parse, CommandResult, Format};

fn main() {
    let (result, format) = match parse(std::env::args_os()) {
        Ok(cli) => (execute(&cli.command), cli.format),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) => {
            let _ = e.print();
            std::process::exit(if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand { 2 } else { 0 });
        }
        Err(e) => {
            let text_mode = std::env::args().any(|a| a == "text" || a == "--format=text");
            (CommandResult::error(e.to_string().trim().to_string()), if text_mode { Format::Text } else { Format::Json })
        }
    };
    let out = result.render(format);
    if result.status == qgroup_cli::Status::Error {
        eprintln!("{out}");
    } else {
        println!("{out}");
    }
    std::process::exit(result.status.exit_code());
}

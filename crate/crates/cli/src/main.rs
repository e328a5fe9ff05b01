use clap::Parser;

fn main() {
    let cli = match isoperim_cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap reports usage errors with 2, which is reserved for reports
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    std::process::exit(isoperim_cli::run(&cli));
}

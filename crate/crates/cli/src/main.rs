use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = rectilt_cli::run_from(std::env::args_os());
    if outcome.json.is_null() {
        // --help / --version
        print!("{}", outcome.summary);
        return ExitCode::SUCCESS;
    }
    let text = outcome.rendered();
    print!("{text}");
    eprintln!("{}", outcome.summary);
    if let Some(path) = &outcome.output {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(outcome.code as u8)
}

use std::process::ExitCode;

fn main() -> ExitCode {
    match corkcalc_cli::cli::run(std::env::args_os()) {
        Ok(code) => ExitCode::from(u8::try_from(code).unwrap_or(1)),
        Err(err) => {
            // clap's help/usage output carries its own exit semantics
            if let Some(clap_err) = err.downcast_ref::<clap::Error>() {
                clap_err.print().expect("stderr is writable");
                return ExitCode::from(u8::try_from(clap_err.exit_code()).unwrap_or(2));
            }
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

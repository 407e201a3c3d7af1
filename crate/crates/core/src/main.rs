use std::process::ExitCode;

fn main() -> ExitCode {
    kfpoly::cli::configure_threads();
    kfpoly::cli::main_with_args(std::env::args_os())
}

fn main() -> std::process::ExitCode {
    mccool::cli::main_with(std::env::args_os())
}

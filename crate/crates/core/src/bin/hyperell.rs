fn main() -> std::process::ExitCode {
    hyperell::cli::main()
}
